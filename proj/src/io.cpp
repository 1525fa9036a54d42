// Copyright 2026 The antidist Authors
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

#include "antidist/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace antidist {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) parse_fail("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) parse_fail(std::string("missing field \"") + key + "\"");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) parse_fail(std::string(what) + " is not finite");
    return v;
}

std::size_t positive_int(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() <= 0) parse_fail(std::string(what) + " must be a positive integer");
    return static_cast<std::size_t>(j.get<long long>());
}

Json reals_to_json(const std::vector<double>& xs) {
    Json out = Json::array();
    for (double x : xs) out.push_back(round12(x));
    return out;
}

std::vector<double> reals_from_json(const Json& j, const char* what) {
    if (!j.is_array()) parse_fail(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& x : j) out.push_back(number(x, what));
    return out;
}

// Wraps library errors raised while building objects from parsed data.
template <typename F>
auto as_parse_error(const char* context, F&& build) {
    try {
        return build();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, std::string(context) + ": " + e.what());
    }
}

}  // namespace

double round12(double x) {
    if (std::abs(x) < 1e-14) return 0.0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", std::abs(x) < 1e-14 ? 0.0 : x);
    return buf;
}

Json complex_to_json(Complex z) { return Json::array({round12(z.real()), round12(z.imag())}); }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {number(j, "entry"), 0.0};
    if (!j.is_array() || j.size() != 2) parse_fail("complex entries are [re, im] pairs");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json vector_to_json(std::span<const Complex> v) {
    Json out = Json::array();
    for (const Complex& z : v) out.push_back(complex_to_json(z));
    return out;
}

CVector vector_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) parse_fail("vectors are non-empty arrays");
    CVector out;
    out.reserve(j.size());
    for (const auto& z : j) out.push_back(complex_from_json(z));
    return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) parse_fail("matrices are non-empty arrays of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<Complex> entries;
    for (const auto& row : j) {
        const CVector r = vector_from_json(row);
        if (cols == 0) cols = r.size();
        if (r.size() != cols) parse_fail("matrix rows have different lengths");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

StateSetFile state_set_file_from_json(const Json& j) {
    StateSetFile f;
    f.dim = positive_int(field(j, "dim"), "dim");
    const Json& states = field(j, "states");
    if (!states.is_array() || states.empty()) parse_fail("\"states\" must be a non-empty array");
    for (const auto& s : states) {
        CVector v = vector_from_json(s);
        if (v.size() != f.dim) parse_fail("state vector length differs from dim");
        f.states.push_back(std::move(v));
    }
    if (j.contains("labels")) {
        const Json& labels = j["labels"];
        if (!labels.is_array() || labels.size() != f.states.size()) {
            parse_fail("\"labels\" must list one string per state");
        }
        for (const auto& l : labels) {
            if (!l.is_string()) parse_fail("labels must be strings");
            f.labels.push_back(l.get<std::string>());
        }
    }
    return f;
}

Json to_json(const StateSetFile& f) {
    Json out;
    out["dim"] = f.dim;
    Json states = Json::array();
    for (const auto& v : f.states) states.push_back(vector_to_json(v));
    out["states"] = std::move(states);
    if (!f.labels.empty()) out["labels"] = f.labels;
    return out;
}

StateSetFile make_state_set_file(const StateSet& set, std::vector<std::string> labels) {
    return {set.dim(), set.vectors(), std::move(labels)};
}

std::vector<std::string> labels_or_default(const StateSetFile& f) {
    if (!f.labels.empty()) return f.labels;
    std::vector<std::string> out;
    for (std::size_t j = 0; j < f.states.size(); ++j) out.push_back("s" + std::to_string(j + 1));
    return out;
}

StateSet to_state_set(const StateSetFile& f) {
    return as_parse_error("state set", [&] { return StateSet::from_vectors(f.states); });
}

Povm povm_from_json(const Json& j, Tolerance tol) {
    if (j.is_object() && j.contains("povm") && !j.contains("effects")) return povm_from_json(j["povm"], tol);
    const std::size_t dim = positive_int(field(j, "dim"), "dim");
    const Json& effects = field(j, "effects");
    if (!effects.is_array() || effects.empty()) parse_fail("\"effects\" must be a non-empty array");
    std::vector<ComplexMatrix> ms;
    for (const auto& e : effects) {
        ComplexMatrix m = matrix_from_json(e);
        if (m.rows() != dim || m.cols() != dim) parse_fail("effect shape differs from dim");
        ms.push_back(std::move(m));
    }
    return as_parse_error("POVM", [&] { return validate_povm(std::move(ms), tol); });
}

Json to_json(const Povm& m) {
    Json out;
    out["dim"] = m.dim();
    Json effects = Json::array();
    for (const auto& e : m.effects()) effects.push_back(matrix_to_json(e));
    out["effects"] = std::move(effects);
    return out;
}

GroupRep group_from_json(const Json& j, Tolerance tol) {
    const std::size_t dim = positive_int(field(j, "dim"), "dim");
    const Json& elements = field(j, "elements");
    if (!elements.is_array() || elements.empty()) parse_fail("\"elements\" must be a non-empty array");
    std::vector<ComplexMatrix> us;
    for (const auto& e : elements) {
        ComplexMatrix u = matrix_from_json(e);
        if (u.rows() != dim || u.cols() != dim) parse_fail("element shape differs from dim");
        us.push_back(std::move(u));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) parse_fail("labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }
    return as_parse_error("group", [&] { return GroupRep(std::move(us), std::move(labels), tol); });
}

Json to_json(const GroupRep& rep) {
    Json out;
    out["dim"] = rep.dim();
    Json elements = Json::array();
    for (const auto& u : rep.elements()) elements.push_back(matrix_to_json(u));
    out["elements"] = std::move(elements);
    out["labels"] = rep.labels();
    return out;
}

ChartEvidence chart_evidence_from_json(const Json& j) {
    ChartEvidence ev;
    const Json& completions = field(j, "completions");
    const Json& alphas = field(j, "alphas");
    if (!completions.is_array() || !alphas.is_array()) parse_fail("chart fields must be arrays");
    for (const auto& column : completions) {
        if (!column.is_array()) parse_fail("chart columns must be arrays of vectors");
        std::vector<CVector> vs;
        for (const auto& v : column) vs.push_back(vector_from_json(v));
        ev.completions.push_back(std::move(vs));
    }
    for (const auto& row : alphas) ev.alphas.push_back(reals_from_json(row, "alpha"));
    return ev;
}

Json to_json(const ChartEvidence& chart) {
    Json out;
    Json completions = Json::array();
    for (const auto& column : chart.completions) {
        Json col = Json::array();
        for (const auto& v : column) col.push_back(vector_to_json(v));
        completions.push_back(std::move(col));
    }
    out["completions"] = std::move(completions);
    Json alphas = Json::array();
    for (const auto& row : chart.alphas) alphas.push_back(reals_to_json(row));
    out["alphas"] = std::move(alphas);
    return out;
}

Json to_json(const Certificate& cert) {
    Json out;
    out["tool_version"] = kToolVersion;
    out["verdict"] = std::string(to_string(cert.verdict));
    out["method"] = cert.method ? Json(std::string(to_string(*cert.method))) : Json(nullptr);
    if (cert.weights) out["weights"] = reals_to_json(*cert.weights);
    if (cert.projector_r) out["projector_r"] = matrix_to_json(*cert.projector_r);
    if (cert.povm) out["povm"] = to_json(*cert.povm);
    if (cert.bloch_weights) out["bloch_weights"] = reals_to_json(*cert.bloch_weights);
    if (cert.chart) out["chart"] = to_json(*cert.chart);
    if (cert.fidelity) {
        out["fidelity"] = Json{{"lhs", round12(cert.fidelity->lhs)}, {"rhs", round12(cert.fidelity->rhs)}};
    }
    out["notes"] = cert.notes;
    return out;
}

Certificate certificate_from_json(const Json& j, Tolerance tol) {
    Certificate cert;
    const Json& verdict = field(j, "verdict");
    if (!verdict.is_string()) parse_fail("\"verdict\" must be a string");
    const auto v = parse_verdict(verdict.get<std::string>());
    if (!v) parse_fail("unknown verdict \"" + verdict.get<std::string>() + "\"");
    cert.verdict = *v;
    if (j.contains("method") && !j["method"].is_null()) {
        if (!j["method"].is_string()) parse_fail("\"method\" must be a string");
        const auto m = parse_method(j["method"].get<std::string>());
        if (!m) parse_fail("unknown method \"" + j["method"].get<std::string>() + "\"");
        cert.method = *m;
    }
    if (j.contains("weights")) cert.weights = reals_from_json(j["weights"], "weight");
    if (j.contains("projector_r")) cert.projector_r = as_parse_error("projector_r", [&] { return matrix_from_json(j["projector_r"]); });
    if (j.contains("povm")) cert.povm = povm_from_json(j["povm"], tol);
    if (j.contains("bloch_weights")) cert.bloch_weights = reals_from_json(j["bloch_weights"], "Bloch weight");
    if (j.contains("chart")) cert.chart = chart_evidence_from_json(j["chart"]);
    if (j.contains("fidelity")) {
        const Json& f = j["fidelity"];
        cert.fidelity = FidelityEvidence{number(field(f, "lhs"), "lhs"), number(field(f, "rhs"), "rhs")};
    }
    if (j.contains("notes")) {
        if (!j["notes"].is_string()) parse_fail("\"notes\" must be a string");
        cert.notes = j["notes"].get<std::string>();
    }
    if (cert.verdict == Verdict::AntidistYes && !cert.povm) parse_fail("an AntidistYes certificate needs a povm");
    if (cert.verdict == Verdict::AntidistNo &&
        (!cert.method || (*cert.method != Method::QubitBloch && *cert.method != Method::FidelityViolation))) {
        parse_fail("an AntidistNo certificate must come from QubitBloch or FidelityViolation");
    }
    return cert;
}

namespace {

// Indented like dump(2), except that containers whose compact form fits on
// one short line stay on one line.
void write_pretty(const Json& j, int indent, std::string& out) {
    const bool container = j.is_array() || j.is_object();
    if (!container || j.empty()) {
        out += j.dump();
        return;
    }
    std::string compact = j.dump();
    if (compact.size() <= 72) {
        // nlohmann writes "[1,2]"; add a space after each separator.
        std::string spaced;
        bool in_string = false;
        for (std::size_t i = 0; i < compact.size(); ++i) {
            const char c = compact[i];
            spaced += c;
            if (c == '"' && (i == 0 || compact[i - 1] != '\\')) in_string = !in_string;
            if (!in_string && (c == ',' || c == ':')) spaced += ' ';
        }
        out += spaced;
        return;
    }
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    out += j.is_array() ? "[\n" : "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        if (j.is_object()) out += Json(it.key()).dump() + ": ";
        write_pretty(*it, indent + 2, out);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump(const Json& j) {
    std::string out;
    write_pretty(j, 0, out);
    return out + "\n";
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::exception& e) {
        parse_fail(path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
    out << text;
}

}  // namespace antidist
