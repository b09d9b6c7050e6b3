// Copyright 2026 The Bellkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellkit/io.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bellkit/error.h"

namespace bellkit::io {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw Error(ErrorCode::ParseError, path + ": " + what);
}

const Json &member(const Json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail(path + "." + key, "missing required key");
    }
    return *it;
}

double number(const Json &j, const std::string &path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

std::string string_at(const Json &j, const std::string &path) {
    if (!j.is_string()) {
        fail(path, "expected a string");
    }
    return j.get<std::string>();
}

bool boolean(const Json &j, const std::string &path) {
    if (!j.is_boolean()) {
        fail(path, "expected a boolean");
    }
    return j.get<bool>();
}

const Json &array(const Json &j, const std::string &path) {
    if (!j.is_array()) {
        fail(path, "expected an array");
    }
    return j;
}

std::vector<double> numbers(const Json &j, const std::string &path) {
    std::vector<double> out;
    for (std::size_t i = 0; i < array(j, path).size(); ++i) {
        out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
}

void check_kind(const Json &j, std::string_view kind, const std::string &path) {
    const std::string got = string_at(member(j, "kind", path), path + ".kind");
    if (got != kind) {
        fail(path + ".kind", "expected \"" + std::string(kind) + "\", got \"" + got + "\"");
    }
}

// Runs a constructor and re-labels its validation failure with the JSON path.
template <typename Fn>
auto at_path(const std::string &path, Fn fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error &e) {
        if (e.code() == ErrorCode::ParseError) {
            throw;
        }
        throw Error(e.code(), path + ": " + std::string(e.what()).substr(error_code_name(e.code()).size() + 2));
    }
}

void write_fixed(std::ostringstream &out, const Json &j, int depth) {
    const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) {
                    out << ",\n";
                }
                first = false;
                out << inner << Json(it.key()).dump() << ": ";
                write_fixed(out, it.value(), depth + 1);
            }
            out << "\n" << pad << "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            bool scalars = true;
            for (const auto &v : j) {
                scalars = scalars && !v.is_structured();
            }
            if (scalars) {
                out << "[";
                for (std::size_t i = 0; i < j.size(); ++i) {
                    if (i > 0) {
                        out << ", ";
                    }
                    write_fixed(out, j[i], depth + 1);
                }
                out << "]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) {
                    out << ",\n";
                }
                out << inner;
                write_fixed(out, j[i], depth + 1);
            }
            out << "\n" << pad << "]";
            return;
        }
        case Json::value_t::number_float:
            out << format_fixed(j.get<double>());
            return;
        default:
            out << j.dump();
            return;
    }
}

Json records_to_json(const std::vector<CorrelationRecord> &records) {
    Json out = Json::array();
    for (const CorrelationRecord &r : records) {
        Json rec;
        rec["state_id"] = r.state_id;
        rec["settings"] = Json::array({r.setting_pair.first, r.setting_pair.second});
        rec["symmetrized"] = r.symmetrized;
        rec["value"] = r.value;
        out.push_back(std::move(rec));
    }
    return out;
}

SweepState state_from_json(const Json &j, const std::string &path) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "rho_zero") {
            return rho_zero();
        }
        if (name == "rho_zero_representation") {
            return rho_zero_representation(false);
        }
        if (name == "rho_zero_symmetric") {
            return rho_zero_representation(true);
        }
        if (name == "maximally_mixed") {
            return maximally_mixed(2, 2);
        }
        fail(path, "unknown named state \"" + name + "\"");
    }
    const std::string kind = string_at(member(j, "kind", path), path + ".kind");
    if (kind == "density_operator") {
        return density_from_json(j, path);
    }
    if (kind == "separable_representation") {
        return representation_from_json(j, path);
    }
    fail(path + ".kind", "expected a density_operator or separable_representation");
}

std::string csv_number(double v) {
    return format_fixed(v);
}

}  // namespace

std::string format_fixed(double v) {
    if (!std::isfinite(v)) {
        return v > 0 ? "\"inf\"" : (v < 0 ? "\"-inf\"" : "\"nan\"");
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    std::string s = buf;
    if (s == "-0.000000000") {
        s = "0.000000000";
    }
    return s;
}

std::string dump_fixed(const Json &j) {
    std::ostringstream out;
    write_fixed(out, j, 0);
    out << "\n";
    return out.str();
}

Json parse_text(const std::string &text, const std::string &source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        fail(source, std::string("invalid JSON: ") + e.what());
    }
}

Json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(path, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

ComplexMatrix matrix_from_json(const Json &j, const std::string &path) {
    const std::size_t n = array(j, path).size();
    if (n == 0) {
        fail(path, "matrix is empty");
    }
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string rp = path + "[" + std::to_string(r) + "]";
        if (array(j[r], rp).size() != n) {
            fail(rp, "row length differs from row count");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::string cp = rp + "[" + std::to_string(c) + "]";
            const Json &entry = j[r][c];
            if (entry.is_number()) {
                m(r, c) = entry.get<double>();
            } else if (entry.is_array() && entry.size() == 2) {
                m(r, c) = Complex(number(entry[0], cp + "[0]"), number(entry[1], cp + "[1]"));
            } else {
                fail(cp, "expected [re, im]");
            }
        }
    }
    return m;
}

Json matrix_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) {
            row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

DensityOperator density_from_json(const Json &j, const std::string &path) {
    check_kind(j, "density_operator", path);
    ComplexMatrix m = matrix_from_json(member(j, "matrix", path), path + ".matrix");
    std::optional<FactorDims> dims;
    auto it = j.find("factor_dims");
    if (it != j.end() && !it->is_null()) {
        const auto d = numbers(*it, path + ".factor_dims");
        if (d.size() != 2 || d[0] < 1 || d[1] < 1 || d[0] != std::floor(d[0]) || d[1] != std::floor(d[1])) {
            fail(path + ".factor_dims", "expected two positive integers");
        }
        dims = FactorDims{static_cast<std::size_t>(d[0]), static_cast<std::size_t>(d[1])};
    }
    return at_path(path + ".matrix", [&] { return make_density(std::move(m), dims); });
}

Json density_to_json(const DensityOperator &rho) {
    Json j;
    j["schema"] = kSchemaTag;
    j["kind"] = "density_operator";
    if (rho.factor_dims()) {
        j["factor_dims"] = Json::array({rho.factor_dims()->first, rho.factor_dims()->second});
    } else {
        j["factor_dims"] = nullptr;
    }
    j["matrix"] = matrix_to_json(rho.matrix());
    return j;
}

SeparableRepresentation representation_from_json(const Json &j, const std::string &path) {
    check_kind(j, "separable_representation", path);
    bool symmetrized = false;
    if (auto it = j.find("symmetrized"); it != j.end()) {
        symmetrized = boolean(*it, path + ".symmetrized");
    }
    const Json &terms = array(member(j, "terms", path), path + ".terms");
    std::vector<ProductTerm> out;
    for (std::size_t m = 0; m < terms.size(); ++m) {
        const std::string tp = path + ".terms[" + std::to_string(m) + "]";
        const double w = number(member(terms[m], "weight", tp), tp + ".weight");
        auto left = at_path(tp + ".left", [&] {
            return make_density(matrix_from_json(member(terms[m], "left", tp), tp + ".left"));
        });
        auto right = at_path(tp + ".right", [&] {
            return make_density(matrix_from_json(member(terms[m], "right", tp), tp + ".right"));
        });
        out.push_back({w, std::move(left), std::move(right)});
    }
    return at_path(path, [&] { return SeparableRepresentation::make(std::move(out), symmetrized); });
}

Json representation_to_json(const SeparableRepresentation &rep) {
    Json j;
    j["schema"] = kSchemaTag;
    j["kind"] = "separable_representation";
    j["symmetrized"] = rep.symmetrized();
    Json terms = Json::array();
    for (const ProductTerm &t : rep.terms()) {
        Json term;
        term["weight"] = t.weight;
        term["left"] = matrix_to_json(t.left.matrix());
        term["right"] = matrix_to_json(t.right.matrix());
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

DiscretePovm povm_from_json(const Json &j, const std::string &path) {
    const std::string kind = string_at(member(j, "kind", path), path + ".kind");
    if (kind == "spin_observable") {
        return spin_observable(number(member(j, "theta", path), path + ".theta"));
    }
    if (kind != "povm") {
        fail(path + ".kind", "expected \"povm\" or \"spin_observable\"");
    }
    const std::string label = string_at(member(j, "label", path), path + ".label");
    const auto values = numbers(member(j, "outcomes", path), path + ".outcomes");
    const double bound = number(member(j, "bound", path), path + ".bound");
    const Json &effects = array(member(j, "effects", path), path + ".effects");
    std::vector<ComplexMatrix> mats;
    for (std::size_t k = 0; k < effects.size(); ++k) {
        mats.push_back(matrix_from_json(effects[k], path + ".effects[" + std::to_string(k) + "]"));
    }
    if (mats.empty()) {
        fail(path + ".effects", "no effects");
    }
    return at_path(path, [&] { return make_povm(label, OutcomeSet::make(values, bound), std::move(mats)); });
}

Json povm_to_json(const DiscretePovm &p) {
    Json j;
    j["schema"] = kSchemaTag;
    j["kind"] = "povm";
    j["label"] = p.label();
    j["outcomes"] = p.outcomes().values();
    j["bound"] = p.bound();
    Json effects = Json::array();
    for (const ComplexMatrix &e : p.effects()) {
        effects.push_back(matrix_to_json(e));
    }
    j["effects"] = std::move(effects);
    return j;
}

LhvModel model_from_json(const Json &j, const std::string &path) {
    check_kind(j, "lhv_model", path);
    std::vector<std::string> points;
    const Json &pts = array(member(j, "points", path), path + ".points");
    for (std::size_t k = 0; k < pts.size(); ++k) {
        const Json &p = pts[k];
        points.push_back(p.is_string() ? p.get<std::string>() : p.dump());
    }
    const auto probs = numbers(member(j, "probabilities", path), path + ".probabilities");
    const Json &obs = member(j, "observables", path);
    if (!obs.is_object()) {
        fail(path + ".observables", "expected an object");
    }
    std::map<std::string, ClassicalObservable> observables;
    for (auto it = obs.begin(); it != obs.end(); ++it) {
        const std::string op = path + ".observables." + it.key();
        observables[it.key()] = {numbers(member(it.value(), "values", op), op + ".values"),
                                 number(member(it.value(), "bound", op), op + ".bound")};
    }
    return at_path(path, [&] { return LhvModel::make(std::move(points), probs, std::move(observables)); });
}

Json model_to_json(const LhvModel &m) {
    Json j;
    j["schema"] = kSchemaTag;
    j["kind"] = "lhv_model";
    j["points"] = m.points();
    j["probabilities"] = m.probabilities();
    Json obs = Json::object();
    for (const auto &[label, o] : m.observables()) {
        obs[label] = {{"bound", o.bound}, {"values", o.values}};
    }
    j["observables"] = std::move(obs);
    return j;
}

Json report_to_json(const InequalityReport &r) {
    Json j;
    j["schema"] = kSchemaTag;
    j["kind"] = "inequality_report";
    j["name"] = r.name;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["slack"] = r.slack;
    j["violated"] = r.violated;
    j["tol"] = r.tol;
    j["inputs"] = records_to_json(r.inputs);
    j["notes"] = r.notes;
    return j;
}

SweepRequest sweep_request_from_json(const Json &j, const std::string &base_dir) {
    const std::string path = "$";
    check_kind(j, "sweep_config", path);
    SweepRequest req;
    SweepConfig &cfg = req.config;

    const std::string mode = j.contains("mode") ? string_at(j["mode"], "$.mode") : "grid";
    if (mode == "grid") {
        req.mode = SweepMode::Grid;
    } else if (mode == "soundness") {
        req.mode = SweepMode::Soundness;
    } else {
        fail("$.mode", "expected \"grid\" or \"soundness\"");
    }

    if (j.contains("target")) {
        const std::string t = string_at(j["target"], "$.target");
        if (t == "bell_original") {
            cfg.target = SweepTarget::BellOriginal;
        } else if (t == "chsh") {
            cfg.target = SweepTarget::Chsh;
        } else if (t == "quantum_analogue") {
            cfg.target = SweepTarget::QuantumAnalogue;
        } else if (t == "extended_chsh") {
            cfg.target = SweepTarget::ExtendedChsh;
        } else {
            fail("$.target", "unknown target \"" + t + "\"");
        }
    }
    auto positive_int = [&](const char *key, std::size_t fallback, std::size_t minimum) {
        if (!j.contains(key)) {
            return fallback;
        }
        const std::string kp = std::string("$.") + key;
        if (!j[key].is_number_integer() || j[key].get<long long>() < static_cast<long long>(minimum)) {
            fail(kp, "expected an integer >= " + std::to_string(minimum));
        }
        return static_cast<std::size_t>(j[key].get<long long>());
    };
    cfg.resolution = positive_int("resolution", cfg.resolution, 2);
    cfg.sample_count = positive_int("sample_count", cfg.sample_count, 1);
    cfg.max_dim = positive_int("max_dim", cfg.max_dim, 2);
    cfg.seed = positive_int("seed", 0, 0);
    if (j.contains("symmetrized")) {
        cfg.symmetrized = boolean(j["symmetrized"], "$.symmetrized");
    }
    if (j.contains("tol")) {
        cfg.tol = number(j["tol"], "$.tol");
    }
    if (j.contains("gamma")) {
        const auto g = numbers(j["gamma"], "$.gamma");
        if (g.size() != 4) {
            fail("$.gamma", "expected four coefficients");
        }
        cfg.gamma = at_path("$.gamma", [&] { return GammaVector::make({g[0], g[1], g[2], g[3]}); });
    }
    if (j.contains("retain")) {
        const std::string r = string_at(j["retain"], "$.retain");
        if (r == "best") {
            cfg.retain = RetainPolicy::Best;
        } else if (r == "violations") {
            cfg.retain = RetainPolicy::Violations;
        } else if (r == "all") {
            cfg.retain = RetainPolicy::All;
        } else {
            fail("$.retain", "expected best, violations or all");
        }
    }
    if (j.contains("state")) {
        cfg.state = state_from_json(j["state"], "$.state");
    } else if (j.contains("state_file")) {
        std::filesystem::path p = string_at(j["state_file"], "$.state_file");
        if (p.is_relative()) {
            p = std::filesystem::path(base_dir) / p;
        }
        cfg.state = state_from_json(read_file(p.string()), p.string());
    } else if (req.mode == SweepMode::Grid) {
        fail("$", "grid sweeps need \"state\" or \"state_file\"");
    }
    return req;
}

Json sweep_result_to_json(const SweepRequest &req, const SweepResult &res) {
    Json j;
    j["schema"] = kSchemaTag;
    j["kind"] = "sweep_result";
    j["mode"] = req.mode == SweepMode::Grid ? "grid" : "soundness";
    j["target"] = req.mode == SweepMode::Grid ? std::string(sweep_target_name(req.config.target)) : "separable_bounds";
    j["extremum_kind"] = extremum_kind_name(res.extremum_kind);
    j["evaluations"] = res.evaluations;
    j["best_settings"] = res.best_settings;
    j["best_report"] = report_to_json(res.best_report);
    return j;
}

std::string sweep_rows_to_csv(const SweepResult &res) {
    std::size_t width = 0;
    for (const SweepRow &r : res.rows) {
        width = std::max(width, r.settings.size());
    }
    std::ostringstream out;
    for (std::size_t k = 0; k < width; ++k) {
        out << "setting" << k << ",";
    }
    out << "lhs,rhs,slack,violated\n";
    for (const SweepRow &r : res.rows) {
        for (std::size_t k = 0; k < width; ++k) {
            out << (k < r.settings.size() ? csv_number(r.settings[k]) : "") << ",";
        }
        out << csv_number(r.lhs) << "," << csv_number(r.rhs) << "," << csv_number(r.slack) << ","
            << (r.violated ? "true" : "false") << "\n";
    }
    return out.str();
}

std::string report_to_csv(const InequalityReport &r) {
    std::ostringstream out;
    out << "name,lhs,rhs,slack,violated,tol\n";
    out << r.name << "," << csv_number(r.lhs) << "," << csv_number(r.rhs) << "," << csv_number(r.slack) << ","
        << (r.violated ? "true" : "false") << "," << csv_number(r.tol) << "\n";
    return out.str();
}

Json schemas() {
    const Json complex = {{"type", "array"}, {"items", {{"type", "number"}}}, {"minItems", 2}, {"maxItems", 2}};
    const Json matrix = {{"type", "array"},
                         {"description", "row-major square matrix of [re, im] pairs"},
                         {"items", {{"type", "array"}, {"items", complex}}}};
    auto envelope = [](std::string_view kind) {
        return Json{{"schema", {{"const", kSchemaTag}}}, {"kind", {{"const", kind}}}};
    };

    Json out;
    {
        Json props = envelope("density_operator");
        props["factor_dims"] = {{"type", {"array", "null"}}, {"items", {{"type", "integer"}}}};
        props["matrix"] = matrix;
        out["density_operator"] = {{"type", "object"}, {"required", {"kind", "matrix"}}, {"properties", props}};
    }
    {
        Json props = envelope("separable_representation");
        props["symmetrized"] = {{"type", "boolean"}};
        props["terms"] = {{"type", "array"},
                          {"minItems", 1},
                          {"items",
                           {{"type", "object"},
                            {"required", {"weight", "left", "right"}},
                            {"properties", {{"weight", {{"type", "number"}}}, {"left", matrix}, {"right", matrix}}}}}};
        out["separable_representation"] = {
            {"type", "object"}, {"required", {"kind", "terms"}}, {"properties", props}};
    }
    {
        Json props = envelope("povm");
        props["label"] = {{"type", "string"}};
        props["outcomes"] = {{"type", "array"}, {"items", {{"type", "number"}}}};
        props["bound"] = {{"type", "number"}, {"exclusiveMinimum", 0}};
        props["effects"] = {{"type", "array"}, {"items", matrix}};
        out["povm"] = {{"type", "object"},
                       {"required", {"kind", "label", "outcomes", "bound", "effects"}},
                       {"properties", props}};
        Json spin = envelope("spin_observable");
        spin["theta"] = {{"type", "number"}, {"description", "radians"}};
        out["spin_observable"] = {{"type", "object"}, {"required", {"kind", "theta"}}, {"properties", spin}};
    }
    {
        Json props = envelope("lhv_model");
        props["points"] = {{"type", "array"}};
        props["probabilities"] = {{"type", "array"}, {"items", {{"type", "number"}, {"minimum", 0}}}};
        props["observables"] = {
            {"type", "object"},
            {"additionalProperties",
             {{"type", "object"},
              {"required", {"bound", "values"}},
              {"properties", {{"bound", {{"type", "number"}}}, {"values", {{"type", "array"}}}}}}}};
        out["lhv_model"] = {{"type", "object"},
                            {"required", {"kind", "points", "probabilities", "observables"}},
                            {"properties", props}};
    }
    {
        Json props = envelope("sweep_config");
        props["mode"] = {{"enum", {"grid", "soundness"}}};
        props["target"] = {{"enum", {"bell_original", "chsh", "quantum_analogue", "extended_chsh"}}};
        props["resolution"] = {{"type", "integer"}, {"minimum", 2}};
        props["state"] = {{"oneOf",
                           {{{"enum", {"rho_zero", "rho_zero_representation", "rho_zero_symmetric", "maximally_mixed"}}},
                            {{"$ref", "#/density_operator"}},
                            {{"$ref", "#/separable_representation"}}}}};
        props["state_file"] = {{"type", "string"}};
        props["seed"] = {{"type", "integer"}, {"minimum", 0}};
        props["sample_count"] = {{"type", "integer"}, {"minimum", 1}};
        props["gamma"] = {{"type", "array"}, {"items", {{"type", "number"}}}, {"minItems", 4}, {"maxItems", 4}};
        props["symmetrized"] = {{"type", "boolean"}};
        props["max_dim"] = {{"type", "integer"}, {"minimum", 2}};
        props["retain"] = {{"enum", {"best", "violations", "all"}}};
        props["tol"] = {{"type", "number"}};
        out["sweep_config"] = {{"type", "object"}, {"required", {"kind"}}, {"properties", props}};
    }
    {
        Json props = envelope("inequality_report");
        props["name"] = {{"type", "string"}};
        for (const char *k : {"lhs", "rhs", "slack", "tol"}) {
            props[k] = {{"type", "number"}, {"description", "fixed-point, 9 decimals"}};
        }
        props["violated"] = {{"type", "boolean"}};
        props["inputs"] = {{"type", "array"},
                           {"items",
                            {{"type", "object"},
                             {"properties",
                              {{"state_id", {{"type", "string"}}},
                               {"settings", {{"type", "array"}, {"items", {{"type", "string"}}}}},
                               {"symmetrized", {{"type", "boolean"}}},
                               {"value", {{"type", "number"}}}}}}}};
        props["notes"] = {{"type", "array"}, {"items", {{"type", "string"}}}};
        out["inequality_report"] = {{"type", "object"}, {"properties", props}};
    }
    return out;
}

}  // namespace bellkit::io
