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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "antidist/exclusion.hpp"
#include "antidist/group.hpp"
#include "antidist/io.hpp"
#include "antidist/pipeline.hpp"
#include "antidist/qubit.hpp"

namespace antidist::cli {

namespace {

constexpr int kExitError = 2;

struct Flags {
    double tolerance = 1e-9;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
    std::string seed_chart;
    std::string out;
    std::string out_states;
    std::string builtin;
    std::string group;
    std::string base;
    std::string states;
    std::string measurement;
};

struct Loaded {
    StateSetFile file;
    StateSet set;
};

Loaded load_states(const std::string& path) {
    StateSetFile file = state_set_file_from_json(read_json_file(path));
    StateSet set = to_state_set(file);
    return {std::move(file), std::move(set)};
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
    const std::string text = dump(doc);
    if (!path.empty()) write_text_file(path, text);
    out << text;
}

int cmd_check(const Flags& f, std::ostream& out) {
    const Loaded in = load_states(f.states);
    CheckOptions options;
    options.tol = Tolerance(f.tolerance);
    options.budget = f.budget;
    options.seed = f.seed;
    if (!f.seed_chart.empty()) {
        const Json doc = read_json_file(f.seed_chart);
        options.seed_chart = chart_evidence_from_json(doc.contains("chart") ? doc["chart"] : doc);
    }
    const Certificate cert = check_states(in.set, options);
    emit(to_json(cert), f.out, out);
    return exit_code(cert.verdict);
}

int cmd_verify(const Flags& f, std::ostream& out) {
    const Tolerance tol(f.tolerance);
    const Loaded in = load_states(f.states);
    const Json doc = read_json_file(f.measurement);
    bool ok = false;
    if (doc.contains("verdict")) {
        const Certificate cert = certificate_from_json(doc, tol);
        if (!cert.povm) throw Error(ErrorKind::ParseError, "certificate carries no measurement");
        if (cert.povm->size() != in.set.size()) {
            throw Error(ErrorKind::CountMismatch, "measurement and state counts differ");
        }
        ok = certificate_holds(cert, in.set, tol);
    } else {
        const Povm m = povm_from_json(doc, tol);
        ok = verify_antidistinguishing(in.set, m, tol);
    }
    out << (ok ? "verified" : "not antidistinguishing") << "\n";
    return ok ? 0 : 1;
}

Json bloch_to_json(const BlochVector& r) { return Json::array({round12(r.x), round12(r.y), round12(r.z)}); }

int cmd_complete(const Flags& f, std::ostream& out) {
    const Tolerance tol(f.tolerance);
    const Loaded in = load_states(f.states);
    if (in.set.dim() != 2) throw Error(ErrorKind::WrongDimension, "completion needs qubit states");
    const QubitCompletion done = qubit_complete(in.set);
    Certificate cert = qubit_certificate(done.enlarged, done.verdict, tol);

    std::vector<std::string> labels = labels_or_default(in.file);
    Json doc;
    if (done.added) {
        labels.push_back("added");
        doc["added_bloch"] = bloch_to_json(bloch_from_state(*done.added));
        doc["added_state"] = vector_to_json(done.added->vector());
    } else {
        cert.notes = "already antidistinguishable";
        doc["added_bloch"] = nullptr;
        doc["added_state"] = nullptr;
    }
    doc["state_set"] = to_json(make_state_set_file(done.enlarged, labels));
    doc["certificate"] = to_json(cert);
    emit(doc, f.out, out);
    return exit_code(cert.verdict);
}

struct Builtin {
    GroupRep rep;
    std::string default_base;
};

std::optional<int> suffix_number(const std::string& name, const std::string& prefix, const std::string& suffix) {
    if (name.size() <= prefix.size() + suffix.size()) return std::nullopt;
    if (name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    if (name.compare(name.size() - suffix.size(), suffix.size(), suffix) != 0) return std::nullopt;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - suffix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        return std::nullopt;
    }
    if (digits.size() > 3) throw Error(ErrorKind::TooLarge, "builtin group " + name + " is too large");
    return std::stoi(digits);
}

Builtin builtin_group(const std::string& name) {
    if (name == "quaternion") return {builtin_quaternion(), "tetrahedral"};
    if (auto n = suffix_number(name, "s", "-standard")) return {builtin_symmetric_permutation(*n), "psi1"};
    if (auto n = suffix_number(name, "s", "")) return {builtin_symmetric_permutation(*n), "e1"};
    if (auto n = suffix_number(name, "cyclic", "")) return {builtin_cyclic_shift(*n), "e1"};
    throw Error(ErrorKind::InvalidArgument,
                "unknown builtin \"" + name + "\" (quaternion, sN, sN-standard, cyclicN)");
}

// Named states or a JSON vector literal; literals are normalized.
PureState base_state(const std::string& name, std::size_t dim) {
    if (name == "tetrahedral") {
        if (dim != 2) throw Error(ErrorKind::DimensionMismatch, "tetrahedral base needs dimension 2");
        return tetrahedral_state();
    }
    if (name == "psi1") return PureState::from_vector(standard_subspace_vectors(static_cast<int>(dim)).front());
    if (name.size() >= 2 && name[0] == 'e' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
        const auto k = std::stoul(name.substr(1));
        if (k < 1 || k > dim) throw Error(ErrorKind::InvalidArgument, "basis index out of range: " + name);
        CVector v(dim, 0.0);
        v[k - 1] = 1.0;
        return PureState::from_vector(std::move(v));
    }
    Json literal;
    try {
        literal = Json::parse(name);
    } catch (const Json::exception&) {
        throw Error(ErrorKind::ParseError, "unknown base state \"" + name + "\"");
    }
    CVector v = vector_from_json(literal);
    if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "base vector length differs from group dimension");
    const double len = norm(v);
    if (!(len > 0.0)) throw Error(ErrorKind::ZeroVector, "base vector is zero");
    for (auto& z : v) z /= len;
    return PureState::from_vector(std::move(v));
}

int cmd_orbit(const Flags& f, std::ostream& out) {
    const Tolerance tol(f.tolerance);
    if (f.builtin.empty() == f.group.empty()) {
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --builtin and --group");
    }
    std::optional<GroupRep> rep;
    std::string base_name = f.base;
    if (!f.builtin.empty()) {
        Builtin b = builtin_group(f.builtin);
        rep = std::move(b.rep);
        if (base_name.empty()) base_name = b.default_base;
    } else {
        rep = group_from_json(read_json_file(f.group), tol);
        if (base_name.empty()) base_name = "e1";
    }
    const PureState base = base_state(base_name, rep->dim());
    const Orbit orb = orbit(*rep, base, tol);
    const SchurSum sum = schur_sum(orb, tol);
    Povm m = covariant_povm(orb, sum, tol);
    if (!verify_antidistinguishing(orb.members, m, tol)) {
        throw std::logic_error("covariant measurement failed verification");
    }
    Certificate cert = Certificate::yes(Method::GroupOrbit, std::move(m));
    cert.weights = std::vector<double>(orb.members.size(), 1.0 / sum.c);
    cert.projector_r = sum.projector_r;

    std::vector<std::string> labels;
    for (std::size_t g : orb.representatives) labels.push_back(rep->labels()[g]);
    const Json states = to_json(make_state_set_file(orb.members, labels));
    if (!f.out_states.empty()) write_text_file(f.out_states, dump(states));

    Json doc;
    doc["group_order"] = rep->order();
    doc["stabilizer_order"] = orb.stabilizer_order;
    doc["c"] = round12(sum.c);
    doc["rank_r"] = sum.rank_r;
    doc["state_set"] = states;
    doc["certificate"] = to_json(cert);
    if (!f.out.empty()) write_text_file(f.out, dump(to_json(cert)));
    out << dump(doc);
    return 0;
}

int cmd_bloch(const Flags& f, std::ostream& out) {
    const Loaded in = load_states(f.states);
    if (in.set.dim() != 2) throw Error(ErrorKind::WrongDimension, "Bloch vectors need qubit states");
    const auto labels = labels_or_default(in.file);
    for (std::size_t j = 0; j < in.set.size(); ++j) {
        const BlochVector r = bloch_from_state(in.set[j]);
        out << labels[j] << ' ' << format12(r.x) << ' ' << format12(r.y) << ' ' << format12(r.z) << '\n';
    }
    return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Antidistinguishability of pure quantum states", "antidist"};
    app.require_subcommand(1);
    Flags f;

    auto* check = app.add_subcommand("check", "Decide a state set and print a certificate");
    check->add_option("states", f.states, "State set file")->required();
    check->add_option("--tolerance", f.tolerance, "Absolute tolerance");
    check->add_option("--budget", f.budget, "Chart search trials");
    check->add_option("--seed", f.seed, "Chart search seed");
    check->add_option("--seed-chart", f.seed_chart, "Chart (or certificate with a chart) tried first");
    check->add_option("--out", f.out, "Also write the certificate here");

    auto* verify = app.add_subcommand("verify", "Check a measurement or certificate against a state set");
    verify->add_option("states", f.states, "State set file")->required();
    verify->add_option("measurement", f.measurement, "POVM or certificate file")->required();
    verify->add_option("--tolerance", f.tolerance, "Absolute tolerance");

    auto* complete = app.add_subcommand("complete", "Add one qubit state to make the set antidistinguishable");
    complete->add_option("states", f.states, "Qubit state set file")->required();
    complete->add_option("--tolerance", f.tolerance, "Absolute tolerance");
    complete->add_option("--out", f.out, "Also write the output here");

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a state under a group, with its covariant measurement");
    orbit_cmd->add_option("--builtin", f.builtin, "quaternion, sN, sN-standard or cyclicN");
    orbit_cmd->add_option("--group", f.group, "Group representation file");
    orbit_cmd->add_option("--base", f.base, "tetrahedral, psi1, eK or a JSON vector");
    orbit_cmd->add_option("--tolerance", f.tolerance, "Absolute tolerance");
    orbit_cmd->add_option("--out", f.out, "Write the certificate here");
    orbit_cmd->add_option("--out-states", f.out_states, "Write the orbit state set here");

    auto* bloch = app.add_subcommand("bloch", "Print Bloch vectors of qubit states");
    bloch->add_option("states", f.states, "Qubit state set file")->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*check) return cmd_check(f, out);
        if (*verify) return cmd_verify(f, out);
        if (*complete) return cmd_complete(f, out);
        if (*orbit_cmd) return cmd_orbit(f, out);
        if (*bloch) return cmd_bloch(f, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace antidist::cli
