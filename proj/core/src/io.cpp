// Copyright 2026 The qwitness authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwitness/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace qwitness {

namespace {

// Lines with comments stripped, in file order, with their numbers.
struct Line {
    std::string text;
    int number;
};

std::vector<Line> significant_lines(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::size_t begin = raw.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const std::size_t end = raw.find_last_not_of(" \t\r");
        lines.push_back(Line{raw.substr(begin, end - begin + 1), number});
    }
    return lines;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_time(const std::string& token, const std::string& origin, int line) {
    if (token == "inf" || token == "+inf") return std::numeric_limits<double>::infinity();
    if (token == "-inf") return -std::numeric_limits<double>::infinity();
    try {
        std::size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) fail(origin, line, "bad time '" + token + "'");
        return v;
    } catch (const std::exception&) {
        fail(origin, line, "bad time '" + token + "'");
    }
}

struct Header {
    Index dim, d_system, d_environment;
};

Header parse_header(const Line& line, const std::string& origin) {
    std::istringstream ss(line.text);
    long long dim = 0, ds = 0, de = 0;
    if (!(ss >> dim >> ds >> de) || !(ss >> std::ws).eof()) {
        fail(origin, line.number, "expected header 'dim dS dE'");
    }
    if (dim <= 0 || ds <= 0 || de <= 0 || dim != ds * de) {
        fail(origin, line.number, "header must satisfy dim = dS*dE with positive factors");
    }
    return Header{static_cast<Index>(dim), static_cast<Index>(ds), static_cast<Index>(de)};
}

// dim^2 entry lines in strict row-major order starting at lines[pos].
ComplexMatrix parse_entries(const std::vector<Line>& lines, std::size_t& pos, Index dim,
                            const std::string& origin) {
    ComplexMatrix m(dim, dim);
    for (Index r = 0; r < dim; ++r) {
        for (Index c = 0; c < dim; ++c) {
            if (pos >= lines.size()) {
                throw ParseError(origin + ": unexpected end of file, expected entry (" +
                                 std::to_string(r) + ", " + std::to_string(c) + ")");
            }
            const Line& line = lines[pos++];
            std::istringstream ss(line.text);
            long long row = -1, col = -1;
            double re = 0, im = 0;
            if (!(ss >> row >> col >> re >> im) || !(ss >> std::ws).eof()) {
                fail(origin, line.number, "expected 'row col re im'");
            }
            if (row != r || col != c) {
                fail(origin, line.number,
                     "entries must be complete and row-major; expected (" + std::to_string(r) +
                         ", " + std::to_string(c) + "), got (" + std::to_string(row) + ", " +
                         std::to_string(col) + ")");
            }
            m(r, c) = Complex(re, im);
        }
    }
    return m;
}

void write_entries(std::ostream& out, const ComplexMatrix& m) {
    char buf[96];
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), "%lld %lld %.17g %.17g\n",
                          static_cast<long long>(r), static_cast<long long>(c),
                          m(r, c).real(), m(r, c).imag());
            out << buf;
        }
    }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    return in;
}

}  // namespace

MatrixFile read_matrix_file(std::istream& in, const std::string& origin) {
    const std::vector<Line> lines = significant_lines(in);
    if (lines.empty()) {
        throw ParseError(origin + ": empty matrix file");
    }
    const Header header = parse_header(lines.front(), origin);
    std::size_t pos = 1;
    ComplexMatrix m = parse_entries(lines, pos, header.dim, origin);
    if (pos != lines.size()) {
        fail(origin, lines[pos].number, "trailing content after the matrix entries");
    }
    return MatrixFile{header.d_system, header.d_environment, std::move(m)};
}

MatrixFile load_matrix_file(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    return read_matrix_file(in, path.string());
}

void write_matrix_file(std::ostream& out, const ComplexMatrix& m, Index d_system,
                       Index d_environment) {
    if (m.rows() != m.cols() || m.rows() != d_system * d_environment) {
        throw DimensionError("write_matrix_file: dim does not factor as dS*dE");
    }
    out << m.rows() << " " << d_system << " " << d_environment << "\n";
    write_entries(out, m);
}

void save_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                      Index d_system, Index d_environment) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    write_matrix_file(out, m, d_system, d_environment);
}

HamiltonianSchedule read_hamiltonian_file(std::istream& in, const std::string& origin) {
    const std::vector<Line> lines = significant_lines(in);
    if (lines.empty()) {
        throw ParseError(origin + ": empty Hamiltonian file");
    }
    const Header header = parse_header(lines.front(), origin);
    std::vector<ScheduleSegment> segments;
    std::size_t pos = 1;
    while (pos < lines.size()) {
        const Line& line = lines[pos];
        std::istringstream ss(line.text);
        std::string keyword, start_token, end_token;
        if (!(ss >> keyword >> start_token >> end_token) || keyword != "segment" ||
            !(ss >> std::ws).eof()) {
            fail(origin, line.number, "expected 'segment t_start t_end'");
        }
        ++pos;
        ScheduleSegment segment;
        segment.t_start = parse_time(start_token, origin, line.number);
        segment.t_end = parse_time(end_token, origin, line.number);
        segment.hamiltonian = parse_entries(lines, pos, header.dim, origin);
        segments.push_back(std::move(segment));
    }
    if (segments.empty()) {
        throw ParseError(origin + ": no segments");
    }
    return HamiltonianSchedule(header.d_system, header.d_environment, std::move(segments));
}

HamiltonianSchedule load_hamiltonian_file(const std::filesystem::path& path) {
    std::ifstream in = open_or_throw(path);
    return read_hamiltonian_file(in, path.string());
}

void write_hamiltonian_file(std::ostream& out, const HamiltonianSchedule& sched) {
    out << sched.dim() << " " << sched.d_system() << " " << sched.d_environment() << "\n";
    char buf[64];
    for (const ScheduleSegment& segment : sched.segments()) {
        const auto fmt_time = [&](double t) -> std::string {
            if (t == std::numeric_limits<double>::infinity()) return "inf";
            if (t == -std::numeric_limits<double>::infinity()) return "-inf";
            std::snprintf(buf, sizeof(buf), "%.17g", t);
            return buf;
        };
        out << "segment " << fmt_time(segment.t_start) << " " << fmt_time(segment.t_end)
            << "\n";
        write_entries(out, segment.hamiltonian);
    }
}

void save_hamiltonian_file(const std::filesystem::path& path,
                           const HamiltonianSchedule& sched) {
    std::ofstream out(path);
    if (!out) {
        throw ParseError("cannot write '" + path.string() + "'");
    }
    write_hamiltonian_file(out, sched);
}

}  // namespace qwitness
