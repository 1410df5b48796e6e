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

#include "qwitness/config.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace qwitness {

namespace {

class ConfigMap {
public:
    ConfigMap(std::istream& in, std::string origin) : origin_(std::move(origin)) {
        std::string raw;
        std::string section;
        int number = 0;
        while (std::getline(in, raw)) {
            ++number;
            const std::size_t hash = raw.find('#');
            if (hash != std::string::npos) raw.erase(hash);
            const std::string line = trim(raw);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']') {
                    fail(number, "unterminated section header");
                }
                section = trim(line.substr(1, line.size() - 2));
                if (section.empty()) fail(number, "empty section name");
                sections_[section];  // a section may legitimately stay empty
                continue;
            }
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos) {
                fail(number, "expected 'key = value'");
            }
            if (section.empty()) {
                fail(number, "key outside of any [section]");
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty() || value.empty()) {
                fail(number, "empty key or value");
            }
            if (!sections_[section].emplace(key, Entry{value, number}).second) {
                fail(number, "duplicate key '" + key + "' in [" + section + "]");
            }
        }
    }

    bool has_section(const std::string& section) const {
        return sections_.count(section) != 0;
    }

    std::optional<std::string> take(const std::string& section, const std::string& key) {
        auto sec = sections_.find(section);
        if (sec == sections_.end()) return std::nullopt;
        auto it = sec->second.find(key);
        if (it == sec->second.end()) return std::nullopt;
        std::string value = it->second.value;
        sec->second.erase(it);
        return value;
    }

    std::string require(const std::string& section, const std::string& key) {
        if (auto v = take(section, key)) return *v;
        throw ConfigError(origin_ + ": missing key '" + key + "' in [" + section + "]");
    }

    double take_double(const std::string& section, const std::string& key,
                       double fallback) {
        auto v = take(section, key);
        return v ? to_double(*v, section, key) : fallback;
    }

    double require_double(const std::string& section, const std::string& key) {
        return to_double(require(section, key), section, key);
    }

    long long require_integer(const std::string& section, const std::string& key) {
        return to_integer(require(section, key), section, key);
    }

    long long take_integer(const std::string& section, const std::string& key,
                           long long fallback) {
        auto v = take(section, key);
        return v ? to_integer(*v, section, key) : fallback;
    }

    Eigen::Vector3d require_vec3(const std::string& section, const std::string& key) {
        return to_vec3(require(section, key), section, key);
    }

    Eigen::Vector3d take_vec3(const std::string& section, const std::string& key,
                              const Eigen::Vector3d& fallback) {
        auto v = take(section, key);
        return v ? to_vec3(*v, section, key) : fallback;
    }

    std::optional<Eigen::Vector3d> take_vec3_optional(const std::string& section,
                                                      const std::string& key) {
        auto v = take(section, key);
        if (!v) return std::nullopt;
        return to_vec3(*v, section, key);
    }

    // every key must have been consumed and every section must be known
    void finish(std::initializer_list<const char*> known_sections) const {
        for (const auto& [section, entries] : sections_) {
            bool known = false;
            for (const char* name : known_sections) {
                if (section == name) known = true;
            }
            if (!known) {
                throw ConfigError(origin_ + ": unknown section [" + section + "]");
            }
            if (!entries.empty()) {
                const auto& [key, entry] = *entries.begin();
                fail(entry.line, "unknown key '" + key + "' in [" + section + "]");
            }
        }
    }

    [[noreturn]] void fail(int line, const std::string& what) const {
        throw ConfigError(origin_ + ":" + std::to_string(line) + ": " + what);
    }

    const std::string& origin() const { return origin_; }

private:
    struct Entry {
        std::string value;
        int line;
    };

    static std::string trim(const std::string& s) {
        const std::size_t begin = s.find_first_not_of(" \t\r");
        if (begin == std::string::npos) return {};
        const std::size_t end = s.find_last_not_of(" \t\r");
        return s.substr(begin, end - begin + 1);
    }

    double to_double(const std::string& v, const std::string& section,
                     const std::string& key) const {
        std::istringstream ss(v);
        double out = 0;
        if (!(ss >> out) || !(ss >> std::ws).eof()) {
            throw ConfigError(origin_ + ": [" + section + "] " + key +
                              ": expected a number, got '" + v + "'");
        }
        return out;
    }

    long long to_integer(const std::string& v, const std::string& section,
                         const std::string& key) const {
        std::istringstream ss(v);
        long long out = 0;
        if (!(ss >> out) || !(ss >> std::ws).eof()) {
            throw ConfigError(origin_ + ": [" + section + "] " + key +
                              ": expected an integer, got '" + v + "'");
        }
        return out;
    }

    Eigen::Vector3d to_vec3(const std::string& v, const std::string& section,
                            const std::string& key) const {
        std::istringstream ss(v);
        double x = 0, y = 0, z = 0;
        if (!(ss >> x >> y >> z) || !(ss >> std::ws).eof()) {
            throw ConfigError(origin_ + ": [" + section + "] " + key +
                              ": expected three numbers, got '" + v + "'");
        }
        return {x, y, z};
    }

    std::string origin_;
    std::map<std::string, std::map<std::string, Entry>> sections_;
};

ModelSpec parse_model(ConfigMap& cfg) {
    ModelSpec model;
    model.name = cfg.require("model", "name");
    if (model.name == "dephasing") {
        model.g = cfg.take_double("model", "g", 1.0);
        model.a = cfg.take_double("model", "a", 0.0);
        model.r_system = cfg.take_vec3("model", "rs", {0, 0, 0});
        model.r_environment = cfg.take_vec3("model", "re", {0, 0, 0});
    } else if (model.name == "random") {
        model.d_system = static_cast<Index>(cfg.take_integer("model", "ds", 2));
        model.d_environment = static_cast<Index>(cfg.take_integer("model", "de", 2));
        model.rank = static_cast<Index>(
            cfg.take_integer("model", "rank", model.d_system * model.d_environment));
        model.model_seed =
            static_cast<std::uint64_t>(cfg.take_integer("model", "model_seed", 0));
    } else if (model.name == "custom") {
        model.state_file = cfg.require("model", "state_file");
        model.hamiltonian_file = cfg.require("model", "hamiltonian_file");
    } else {
        throw ConfigError(cfg.origin() + ": unknown model name '" + model.name + "'");
    }
    return model;
}

PreparationSpec parse_preparation(ConfigMap& cfg, const std::string& section) {
    PreparationSpec spec;
    if (!cfg.has_section(section)) {
        return spec;  // defaults to the identity preparation
    }
    const std::string type = cfg.require(section, "type");
    if (type == "identity") {
        spec.type = PreparationSpec::Type::identity;
    } else if (type == "unitary") {
        spec.type = PreparationSpec::Type::unitary;
        if (auto file = cfg.take(section, "matrix_file")) {
            spec.matrix_file = *file;
        } else {
            spec.axis = cfg.require_vec3(section, "axis");
            spec.angle = cfg.require_double(section, "angle");
        }
    } else if (type == "pin") {
        spec.type = PreparationSpec::Type::pin;
        if (auto file = cfg.take(section, "matrix_file")) {
            spec.matrix_file = *file;
        } else {
            spec.bloch = cfg.take_vec3_optional(section, "bloch");
            if (!spec.bloch) {
                throw ConfigError(cfg.origin() + ": [" + section +
                                  "] pin needs 'bloch' or 'matrix_file'");
            }
        }
    } else {
        throw ConfigError(cfg.origin() + ": [" + section + "] unknown preparation type '" +
                          type + "'");
    }
    return spec;
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& origin) {
    ConfigMap cfg(in, origin);
    RunConfig run;
    run.model = parse_model(cfg);
    run.prep1 = parse_preparation(cfg, "preparation1");
    run.prep2 = parse_preparation(cfg, "preparation2");

    run.t_start = cfg.take_double("grid", "t_start", 0.0);
    run.t_end = cfg.take_double("grid", "t_end", run.t_start);
    run.n_points = static_cast<int>(cfg.take_integer("grid", "n_points", 1));

    run.h = cfg.take_double("run", "h", kDefaultFdStep);
    run.threshold = cfg.take_double("run", "threshold", kDefaultDetectionThreshold);
    run.seed = static_cast<std::uint64_t>(cfg.take_integer("run", "seed", 0));
    if (auto out = cfg.take("run", "out")) run.out = *out;
    run.budget = static_cast<int>(cfg.take_integer("run", "budget", 1000));
    cfg.finish({"model", "preparation1", "preparation2", "grid", "run"});

    if (run.n_points < 1) {
        throw ConfigError(origin + ": n_points must be >= 1");
    }
    if (run.n_points > 1 && !(run.t_start < run.t_end)) {
        throw ConfigError(origin + ": t_start must be < t_end when n_points > 1");
    }
    if (!(run.h > 0.0)) {
        throw ConfigError(origin + ": h must be positive");
    }
    if (run.threshold < 0.0) {
        throw ConfigError(origin + ": threshold must be non-negative");
    }
    return run;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path.string() + "'");
    }
    return parse_config(in, path.string());
}

}  // namespace qwitness
