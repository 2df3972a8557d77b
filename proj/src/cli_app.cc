// Copyright 2026 The braidgate Authors
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

#include "braidgate/cli_app.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "braidgate/braid_word.h"
#include "braidgate/constructions.h"
#include "braidgate/entangle.h"
#include "braidgate/gate_names.h"
#include "braidgate/golden.h"
#include "braidgate/link_catalog.h"
#include "braidgate/linking.h"
#include "braidgate/matrix_json.h"
#include "braidgate/processes.h"
#include "braidgate/rng.h"
#include "braidgate/tau.h"
#include "braidgate/temperley_lieb.h"
#include "braidgate/ybe.h"
#include "json.hpp"

namespace braidgate {

namespace {

using nlohmann::json;

void emit(std::ostream &out, const json &j) {
    out << j.dump() << '\n';
}

/// BRAIDGATE_TOL if set, else `fallback`.
double default_tolerance(double fallback) {
    const char *env = std::getenv("BRAIDGATE_TOL");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    char *end = nullptr;
    double v = std::strtod(env, &end);
    if (*end != '\0' || !(v >= 0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string("BRAIDGATE_TOL is not a nonnegative number: ") + env);
    }
    return v;
}

struct GateSource {
    std::string name;
    std::string matrix_file;

    void add_to(CLI::App *cmd, bool positional) {
        if (positional) {
            cmd->add_option("gate", name, "Catalog gate, e.g. R, CNOT, Rprime:1,1,1,-1");
        } else {
            cmd->add_option("--gate", name, "Catalog gate name");
        }
        cmd->add_option("--matrix-file", matrix_file, "JSON matrix file, used instead of a catalog gate");
    }

    ComplexMatrix load() const {
        if (!matrix_file.empty()) {
            return read_matrix_file(matrix_file);
        }
        if (name.empty()) {
            throw std::invalid_argument("a gate name or --matrix-file is required");
        }
        return resolve_gate(name);
    }

    std::string label() const { return matrix_file.empty() ? name : matrix_file; }
};

json tau_json(const TauResult &t) {
    return {{"mantissa", t.value.mantissa},
            {"sqrt2_exp", t.value.exp},
            {"float", t.value_float},
            {"text", t.value.to_string()}};
}

std::string equivalence_class(const TauValue &v) {
    if (v.mantissa == 0) {
        return "0";
    }
    return std::to_string(v.mantissa) + " * sqrt(2)^k";
}

StateVector load_state(const std::string &spec) {
    if (spec == "aravind") {
        return aravind_state();
    }
    if (spec == "ghz") {
        return ghz_state(3);
    }
    std::ifstream in(spec);
    if (!in) {
        throw std::invalid_argument("state must be 'aravind', 'ghz' or a JSON amplitude file; cannot open '" + spec +
                                    "'");
    }
    return StateVector(amplitudes_from_json(json::parse(in)));
}

json state_json(const StateVector &s) {
    return amplitudes_to_json({s.amplitudes().begin(), s.amplitudes().end()});
}

// ---- ybe ----

struct YbeOptions {
    GateSource gate;
    std::string form = "braided";
    std::optional<double> tol;
};

int cmd_ybe(const YbeOptions &o, std::ostream &out) {
    auto m = o.gate.load();
    double tol = o.tol.value_or(default_tolerance(Tolerance::exact().eps));
    auto report = o.form == "braided" ? check_ybe_braided(m, {tol}) : check_ybe_algebraic(m, {tol});
    emit(out, {{"gate", o.gate.label()},
               {"form", o.form},
               {"residual", report.residual},
               {"tol", tol},
               {"holds", report.holds}});
    return report.holds ? kExitOk : kExitVerificationFailed;
}

// ---- gate ----

struct GateOptions {
    GateSource gate;
    bool classify = false;
    std::string decompose;
    uint64_t seed = 0;
};

int cmd_gate(const GateOptions &o, std::ostream &out) {
    auto m = o.gate.load();
    if (o.classify) {
        if (m.dim() != 4) {
            throw DimensionError("classification needs a 4x4 gate");
        }
        double tol = default_tolerance(Tolerance::phase().eps);
        bool unitary = is_unitary(m, {tol});
        json j{{"gate", o.gate.label()}, {"unitary", unitary}};
        if (!unitary) {
            j["entangling"] = nullptr;
            j["cnot_class"] = nullptr;
            emit(out, j);
            return kExitVerificationFailed;
        }
        auto verdict = is_entangling(m, {tol}, o.seed);
        j["entangling"] = verdict.entangling;
        j["schmidt_ranks"] = verdict.schmidt_ranks;
        if (verdict.witness) {
            const auto &w = *verdict.witness;
            j["witness"] = {{"first", amplitudes_to_json({w.first.begin(), w.first.end()})},
                            {"second", amplitudes_to_json({w.second.begin(), w.second.end()})},
                            {"concurrence_det", w.concurrence_det}};
        } else {
            j["witness"] = nullptr;
        }
        auto cls = cnot_count_class(m, {tol});
        j["cnot_class"] = to_string(cls.count);
        j["gamma_trace"] = complex_to_json(cls.gamma_trace);
        emit(out, j);
        return kExitOk;
    }

    DecompositionReport report;
    double tol;
    if (o.decompose == "thm0") {
        report = verify_qdq_cnot(m);
        tol = default_tolerance(Tolerance::exact().eps);
    } else if (o.decompose == "thm1") {
        report = verify_r0_cnot(m);
        tol = default_tolerance(Tolerance::phase().eps);
    } else if (o.decompose == "thm2") {
        report = verify_r_cnot(m);
        tol = default_tolerance(Tolerance::phase().eps);
    } else {
        throw UnknownNameError("unknown construction '" + o.decompose + "' (expected thm0, thm1 or thm2)");
    }
    bool holds = report.residual <= tol;
    emit(out, {{"gate", o.gate.label()},
               {"construction", o.decompose},
               {"expression", report.name},
               {"residual", report.residual},
               {"phase", complex_to_json(report.phase)},
               {"tol", tol},
               {"holds", holds}});
    return holds ? kExitOk : kExitVerificationFailed;
}

// ---- braid ----

struct BraidOptions {
    std::string word;
    std::string conjugate;
    std::optional<int> stabilize;
    bool inverse = false;
    bool reduce = false;
};

int cmd_braid(const BraidOptions &o, std::ostream &out) {
    auto b = parse_braid(o.word);
    if (!o.conjugate.empty()) {
        auto g = parse_braid(o.conjugate);
        b = markov_conjugate(b, BraidWord(b.n_strands(), g.letters()));
    }
    if (o.stabilize) {
        b = markov_stabilize(b, *o.stabilize);
    }
    if (o.inverse) {
        b = braidgate::inverse(b);
    }
    if (o.reduce) {
        b = free_reduce(b);
    }
    auto j = braid_to_json(b);
    j["word"] = to_string(b);
    j["permutation"] = permutation(b);
    emit(out, j);
    return kExitOk;
}

// ---- invariant ----

struct InvariantOptions {
    std::string word;
    std::string link;
    std::string kind = "tau";
    std::string a;
    std::string c;
    std::string A;
    std::optional<double> theta;
};

BracketParams bracket_params(const InvariantOptions &o) {
    if (!o.A.empty() && o.theta) {
        throw std::invalid_argument("give either --A or --theta, not both");
    }
    if (!o.A.empty()) {
        return BracketParams::from_A(parse_complex(o.A));
    }
    if (o.theta) {
        return BracketParams::from_theta(*o.theta);
    }
    throw std::invalid_argument("the bracket needs --A or --theta");
}

int cmd_invariant(const InvariantOptions &o, std::ostream &out) {
    if (o.word.empty() == o.link.empty()) {
        throw std::invalid_argument("give exactly one of a braid word or --link");
    }
    BraidWord b = o.link.empty() ? parse_braid(o.word)
                                 : find_link(load_link_catalog(default_link_catalog_path()), o.link).braid;
    json j{{"braid", to_string(b)}, {"kind", o.kind}, {"writhe", writhe(b)}};
    if (!o.link.empty()) {
        j["link"] = o.link;
    }

    if (o.kind == "tau") {
        auto t = tau(b);
        j["tau"] = tau_json(t);
        j["equivalence_class"] = equivalence_class(t.value);
        emit(out, j);
        return kExitOk;
    }
    if (o.kind == "linking") {
        if (o.a.empty() || o.c.empty()) {
            throw std::invalid_argument("the linking state sum needs --a and --c");
        }
        LinkingWeights w{parse_complex(o.a), parse_complex(o.c)};
        auto s = linking_state_sum(b, w);
        j["a"] = complex_to_json(w.a);
        j["c"] = complex_to_json(w.c);
        j["components"] = s.components;
        j["sigma"] = complex_to_json(s.sigma);
        j["z"] = complex_to_json(s.z);
        emit(out, j);
        return kExitOk;
    }
    if (o.kind == "bracket" || o.kind == "oracle") {
        auto p = bracket_params(o);
        j["A"] = complex_to_json(p.A);
        j["d"] = complex_to_json(p.d);
        Complex oracle = bracket_oracle(b, p);
        j["oracle"] = complex_to_json(oracle);
        if (o.kind == "oracle") {
            emit(out, j);
            return kExitOk;
        }
        Complex value = bracket3(b, p);
        double residual = std::abs(value - oracle);
        bool agree = residual <= default_tolerance(Tolerance::phase().eps);
        j["bracket"] = complex_to_json(value);
        j["residual"] = residual;
        j["agree"] = agree;
        j["unitary"] = tl_unitary(p);
        emit(out, j);
        return agree ? kExitOk : kExitVerificationFailed;
    }
    throw UnknownNameError("unknown invariant kind '" + o.kind + "' (expected tau, linking, bracket or oracle)");
}

// ---- sim ----

struct SimOptions {
    GateSource gate;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    std::optional<size_t> n;
    std::string state;
    size_t qubit = 1;
    int bit = 0;
};

int cmd_sim_trace(const SimOptions &o, std::ostream &out) {
    auto u = o.gate.load();
    auto s = sample_trace_probability(u, o.shots, o.seed);
    Complex tr = trace_amplitude(u);
    bool within = std::abs(s.estimate - s.exact_p) <= 3 * s.std_error + 1e-12;
    emit(out, {{"gate", o.gate.label()},
               {"exact_p", s.exact_p},
               {"estimate", s.estimate},
               {"stderr", s.std_error},
               {"shots", s.shots},
               {"seed", s.seed},
               {"trace", complex_to_json(tr)},
               {"abs_trace_exact", s.abs_trace_exact},
               {"abs_trace_estimate", s.abs_trace_estimate},
               {"within_3sigma", within}});
    return kExitOk;
}

int cmd_sim_teleport(const SimOptions &o, std::ostream &out) {
    auto u = o.gate.load();
    size_t n = u.num_qubits();
    if (o.n && *o.n != n) {
        throw DimensionError("--n " + std::to_string(*o.n) + " does not match a gate on " + std::to_string(n) +
                             " qubits");
    }
    std::optional<StateVector> psi;
    if (o.state.empty()) {
        Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
        psi = StateVector(random_amplitudes(u.dim(), rng));
    } else {
        psi = load_state(o.state).normalized();
    }
    auto t = teleport_protocol(u, *psi, o.seed);
    double fidelity = std::norm(inner(apply(u, *psi), t.received));
    emit(out, {{"gate", o.gate.label()},
               {"n", n},
               {"seed", o.seed},
               {"classical_bits", t.classical_bits},
               {"outcome_prob", t.outcome_prob},
               {"total_prob", t.total_prob},
               {"fidelity", fidelity},
               {"phase", complex_to_json(t.fidelity.phase)},
               {"residual", t.fidelity.residual},
               {"input", state_json(*psi)},
               {"received", state_json(t.received)}});
    return t.fidelity.equal ? kExitOk : kExitVerificationFailed;
}

int cmd_sim_project(const SimOptions &o, std::ostream &out) {
    if (o.state.empty()) {
        throw std::invalid_argument("projection needs --state");
    }
    auto psi = load_state(o.state);
    auto r = project_qubit(psi, o.qubit, o.bit);
    json j{{"state", o.state}, {"qubit", o.qubit}, {"bit", o.bit}, {"prob", r.prob}};
    if (!r.residual) {
        j["verdict"] = "zero-probability";
        j["residual"] = nullptr;
    } else {
        j["residual"] = state_json(*r.residual);
        if (r.entangled) {
            j["verdict"] = *r.entangled ? "entangled" : "unentangled";
        } else {
            j["verdict"] = nullptr;
        }
    }
    emit(out, j);
    return kExitOk;
}

// ---- catalog / selftest ----

int cmd_catalog(bool as_json, std::ostream &out) {
    auto gates = gate_catalog();
    std::vector<LinkEntry> links = load_link_catalog(default_link_catalog_path());
    if (as_json) {
        json j{{"gates", json::array()}, {"links", json::array()}};
        for (const auto &g : gates) {
            j["gates"].push_back({{"name", g.name}, {"description", g.description}});
        }
        for (const auto &l : links) {
            j["links"].push_back({{"name", l.name}, {"braid", to_string(l.braid)}});
        }
        emit(out, j);
        return kExitOk;
    }
    out << "gates:\n";
    for (const auto &g : gates) {
        out << "  " << std::left << std::setw(16) << g.name << g.description << '\n';
    }
    out << "links:\n";
    for (const auto &l : links) {
        out << "  " << std::left << std::setw(10) << l.name << to_string(l.braid) << '\n';
    }
    return kExitOk;
}

int cmd_selftest(bool as_json, std::ostream &out) {
    auto checks = run_golden();
    size_t failed = 0;
    for (const auto &c : checks) {
        failed += !c.pass;
    }
    if (as_json) {
        emit(out, golden_to_json(checks));
    } else {
        for (const auto &c : checks) {
            out << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  expected " << c.expected << "  computed "
                << c.computed << '\n';
        }
        out << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    }
    return failed == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Braiding gates, braid invariants and small quantum-process simulations.", "braidgate"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 verification failed, 2 usage error, 3 size guard exceeded.\n"
               "BRAIDGATE_TOL overrides the default comparison tolerance.");

    YbeOptions ybe;
    auto *ybe_cmd = app.add_subcommand("ybe", "Check the Yang-Baxter equation for a gate");
    ybe.gate.add_to(ybe_cmd, true);
    ybe_cmd->add_option("--form", ybe.form, "braided or algebraic")
        ->check(CLI::IsMember({"braided", "algebraic"}));
    ybe_cmd->add_option("--tol", ybe.tol, "Residual tolerance");

    GateOptions gate;
    auto *gate_cmd = app.add_subcommand("gate", "Classify a two-qubit gate or verify a CNOT construction");
    gate.gate.add_to(gate_cmd, true);
    auto *classify = gate_cmd->add_flag("--classify", gate.classify, "Entangling test and CNOT count");
    auto *decompose =
        gate_cmd->add_option("--decompose-verify", gate.decompose, "thm0 (Q G Q), thm1 (R0 form) or thm2 (R form)");
    classify->excludes(decompose);
    gate_cmd->add_option("--seed", gate.seed, "Seed for the random witness search");
    gate_cmd->callback([&] {
        if (!gate.classify && gate.decompose.empty()) {
            throw CLI::ValidationError("gate", "one of --classify or --decompose-verify is required");
        }
    });

    BraidOptions braid;
    auto *braid_cmd = app.add_subcommand("braid", "Parse a braid word and describe its closure");
    braid_cmd->add_option("word", braid.word, "Braid word, e.g. \"n=3; 1 -2 1\"")->required();
    braid_cmd->add_option("--conjugate", braid.conjugate, "Conjugate by this word: g b g^-1");
    braid_cmd->add_option("--stabilize", braid.stabilize, "Append s_n^(+1|-1) on a new strand")
        ->check(CLI::IsMember({-1, 1}));
    braid_cmd->add_flag("--inverse", braid.inverse, "Replace the word by its inverse");
    braid_cmd->add_flag("--reduce", braid.reduce, "Cancel adjacent inverse pairs");

    InvariantOptions inv;
    auto *inv_cmd = app.add_subcommand("invariant", "Evaluate a link invariant of a braid closure");
    inv_cmd->add_option("word", inv.word, "Braid word");
    inv_cmd->add_option("--link", inv.link, "Named link from the catalog");
    inv_cmd->add_option("--kind", inv.kind, "tau, linking, bracket or oracle");
    inv_cmd->add_option("--a", inv.a, "Linking weight a as re,im");
    inv_cmd->add_option("--c", inv.c, "Linking weight c as re,im");
    inv_cmd->add_option("--A", inv.A, "Bracket variable A as re,im (unit modulus)");
    inv_cmd->add_option("--theta", inv.theta, "Bracket angle, A = exp(i theta)");

    SimOptions sim;
    auto *sim_cmd = app.add_subcommand("sim", "Simulate a quantum process");
    sim_cmd->require_subcommand(1);
    auto *trace_cmd = sim_cmd->add_subcommand("trace", "Estimate |tr U| from sampled delta measurements");
    sim.gate.add_to(trace_cmd, false);
    trace_cmd->add_option("--shots", sim.shots, "Number of samples")->check(CLI::PositiveNumber);
    trace_cmd->add_option("--seed", sim.seed, "Sampler seed");
    auto *tele_cmd = sim_cmd->add_subcommand("teleport", "Teleport U psi through the T-basis functionals");
    sim.gate.add_to(tele_cmd, false);
    tele_cmd->add_option("--n", sim.n, "Number of qubits (checked against the gate)");
    tele_cmd->add_option("--seed", sim.seed, "Seed for the outcome and the random input state");
    tele_cmd->add_option("--state", sim.state, "JSON amplitude file for psi (default: random)");
    auto *proj_cmd = sim_cmd->add_subcommand("project", "Project one qubit and classify the residual state");
    proj_cmd->add_option("--state", sim.state, "aravind, ghz or a JSON amplitude file")->required();
    proj_cmd->add_option("--qubit", sim.qubit, "Qubit to measure (1-based)");
    proj_cmd->add_option("--bit", sim.bit, "Outcome to project onto")->check(CLI::IsMember({0, 1}));

    bool catalog_json = false;
    auto *catalog_cmd = app.add_subcommand("catalog", "List named gates and links");
    catalog_cmd->add_flag("--json", catalog_json, "Machine-readable output");

    bool selftest_json = false;
    auto *selftest_cmd = app.add_subcommand("selftest", "Recompute every reference value");
    selftest_cmd->add_flag("--json", selftest_json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (ybe_cmd->parsed()) {
            return cmd_ybe(ybe, out);
        }
        if (gate_cmd->parsed()) {
            return cmd_gate(gate, out);
        }
        if (braid_cmd->parsed()) {
            return cmd_braid(braid, out);
        }
        if (inv_cmd->parsed()) {
            return cmd_invariant(inv, out);
        }
        if (trace_cmd->parsed()) {
            return cmd_sim_trace(sim, out);
        }
        if (tele_cmd->parsed()) {
            return cmd_sim_teleport(sim, out);
        }
        if (proj_cmd->parsed()) {
            return cmd_sim_project(sim, out);
        }
        if (catalog_cmd->parsed()) {
            return cmd_catalog(catalog_json, out);
        }
        if (selftest_cmd->parsed()) {
            return cmd_selftest(selftest_json, out);
        }
    } catch (const GuardError &e) {
        err << "error: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error &e) {
        err << "verification failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace braidgate
