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

#include "braidgate/golden.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "braidgate/braid_rep.h"
#include "braidgate/braid_word.h"
#include "braidgate/constructions.h"
#include "braidgate/entangle.h"
#include "braidgate/gates.h"
#include "braidgate/link_catalog.h"
#include "braidgate/linking.h"
#include "braidgate/processes.h"
#include "braidgate/tau.h"
#include "braidgate/temperley_lieb.h"
#include "braidgate/ybe.h"

namespace braidgate {

namespace {

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(6);
    out << x;
    return out.str();
}

std::string fmt(Complex z) {
    if (z.imag() == 0) {
        return fmt(z.real());
    }
    return fmt(z.real()) + (z.imag() < 0 ? "" : "+") + fmt(z.imag()) + "i";
}

class Suite {
   public:
    /// Runs `body`, which fills in the computed text and returns pass/fail.
    void check(std::string name, std::string expected, const std::function<bool(std::string &)> &body) {
        std::string computed;
        bool pass = false;
        try {
            pass = body(computed);
        } catch (const std::exception &e) {
            computed = std::string("error: ") + e.what();
        }
        checks_.push_back({std::move(name), std::move(expected), std::move(computed), pass});
    }

    void residual(std::string name, double tol, const std::function<double()> &body) {
        check(std::move(name), "<= " + fmt(tol), [&](std::string &out) {
            double r = body();
            out = fmt(r);
            return r <= tol;
        });
    }

    void flag(std::string name, bool expected, const std::function<bool()> &body) {
        check(std::move(name), expected ? "true" : "false", [&](std::string &out) {
            bool v = body();
            out = v ? "true" : "false";
            return v == expected;
        });
    }

    void tau_value(std::string name, const ScaledGenerator &gen, const std::string &word, TauValue expected) {
        check(std::move(name), expected.to_string(), [&](std::string &out) {
            auto v = tau(parse_braid(word), gen).value;
            out = v.to_string();
            return v == expected;
        });
    }

    std::vector<GoldenCheck> take() { return std::move(checks_); }

   private:
    std::vector<GoldenCheck> checks_;
};

const double kSqrt2 = std::numbers::sqrt2;

TauValue tv(int64_t mantissa, int exp) {
    return {mantissa, exp};
}

}  // namespace

GoldenConfig GoldenConfig::standard() {
    return {gates::R(), scaled_R()};
}

std::vector<GoldenCheck> run_golden(const GoldenConfig &config) {
    using namespace gates;
    const auto &r = config.r;
    const auto &gen = config.r_scaled;
    const double exact = Tolerance::exact().eps;
    const double phase = Tolerance::phase().eps;
    Suite s;

    // Gates and constructions.
    s.residual("Q is I x H", exact, [] { return max_abs_diff(Q(), kron(I2(), H())); });
    s.residual("Q D Q = CNOT", exact, [] { return verify_qdq_cnot().residual; });
    s.residual("R0 construction = CNOT up to phase", phase, [] { return verify_r0_cnot().residual; });
    s.residual("R construction = CNOT up to phase", phase,
               [&] { return equal_up_to_phase(r_cnot_expression(r), CNOT()).residual; });
    s.flag("R unitary", true, [&] { return is_unitary(r); });
    s.residual("R^8 = I", exact, [&] { return max_abs_diff(power(r, 8), ComplexMatrix::identity(4)); });
    s.residual("R + R^-1 = sqrt2 I", exact, [&] {
        return max_abs_diff(r + inverse(r), Complex(kSqrt2) * ComplexMatrix::identity(4));
    });
    s.residual("tr_2(R) = sqrt2 I", exact, [&] {
        return max_abs_diff(partial_trace_last(r, 2), Complex(kSqrt2) * ComplexMatrix::identity(2));
    });
    s.residual("tr_2(R^-1) = sqrt2 I", exact, [&] {
        return max_abs_diff(partial_trace_last(inverse(r), 2), Complex(kSqrt2) * ComplexMatrix::identity(2));
    });
    s.residual("R on basis gives the Bell images", exact, [&] {
        const double h = 1 / kSqrt2;
        // Column k is the image of basis state k.
        ComplexMatrix images{{h, 0, 0, h}, {0, h, -h, 0}, {0, h, h, 0}, {-h, 0, 0, h}};
        return max_abs_diff(r, images);
    });

    // Yang-Baxter.
    s.residual("braided YBE: R", exact, [&] { return check_ybe_braided(r).residual; });
    s.residual("braided YBE: SWAP", exact, [] { return check_ybe_braided(SWAP()).residual; });
    s.residual("algebraic YBE: D", exact, [] { return check_ybe_algebraic(D()).residual; });
    s.residual("algebraic YBE: P", exact, [] {
        return check_ybe_algebraic(P(1.0, kI, -1.0, std::polar(1.0, 0.7))).residual;
    });
    s.residual("algebraic YBE: SWAP R", exact, [&] { return check_ybe_algebraic(SWAP() * r).residual; });

    // Entanglement and CNOT counts.
    s.flag("Bell state entangled", true, [] {
        const double h = 1 / kSqrt2;
        std::vector<Complex> bell{h, 0, 0, h};
        return state_is_entangled(bell);
    });
    s.flag("R entangling", true, [&] { return is_entangling(r).entangling; });
    s.flag("SWAP entangling", false, [] { return is_entangling(SWAP()).entangling; });
    s.flag("R0 entangling", true, [] { return is_entangling(R0()).entangling; });
    s.check("CNOT count: H x H", "0", [](std::string &out) {
        out = to_string(cnot_count_class(kron(H(), H())).count);
        return out == "0";
    });
    s.check("CNOT count: R", "1", [&](std::string &out) {
        out = to_string(cnot_count_class(r).count);
        return out == "1";
    });
    s.check("CNOT count: R0", "2", [](std::string &out) {
        out = to_string(cnot_count_class(R0()).count);
        return out == "2";
    });

    // Representations.
    s.residual("rep: s1 s2 s1 = s2 s1 s2", exact, [&] {
        return max_abs_diff(rep_matrix(parse_braid("1 2 1"), r), rep_matrix(parse_braid("2 1 2"), r));
    });
    s.residual("rep: s1 s3 = s3 s1", exact, [&] {
        return max_abs_diff(rep_matrix(parse_braid("1 3"), r), rep_matrix(parse_braid("3 1"), r));
    });
    s.flag("exact rep: s^8 = 1", true, [&] {
        return rep_exact(parse_braid("n=2; 1 1 1 1 1 1 1 1"), gen) == ExactScaledMatrix::identity(4);
    });
    s.flag("exact rep: s + s^-1 = sqrt2", true, [&] {
        return rep_exact(parse_braid("n=2; 1"), gen) + rep_exact(parse_braid("n=2; -1"), gen) ==
               sqrt2_times_identity(4);
    });
    s.residual("circuit (alpha x beta) R (gamma x delta) = CNOT up to phase", phase, [&] {
        ExtendedCircuit c(2, {LocalItem{1, gamma()}, LocalItem{2, delta()}, BraidItem{1}, LocalItem{1, alpha()},
                              LocalItem{2, beta()}});
        return equal_up_to_phase(circuit_matrix(c, r), CNOT()).residual;
    });
    s.residual("local gate on strand 1 commutes with s3", exact, [&] {
        ExtendedCircuit a(4, {LocalItem{1, H()}, BraidItem{3}});
        ExtendedCircuit b(4, {BraidItem{3}, LocalItem{1, H()}});
        return max_abs_diff(circuit_matrix(a, r), circuit_matrix(b, r));
    });

    // Braid words.
    s.check("Whitehead closure: components, lk", "2, 0", [](std::string &out) {
        auto info = closure_info(parse_braid("1 1 -2 1 -2"));
        int lk = info.component_count == 2 ? info.linking_number(1, 2) : -99;
        out = std::to_string(info.component_count) + ", " + std::to_string(lk);
        return info.component_count == 2 && lk == 0;
    });
    s.check("Hopf closure: components, writhe, lk", "2, 2, 1", [](std::string &out) {
        auto info = closure_info(parse_braid("n=2; 1 1"));
        int lk = info.component_count == 2 ? info.linking_number(1, 2) : -99;
        out = std::to_string(info.component_count) + ", " + std::to_string(info.writhe) + ", " + std::to_string(lk);
        return info.component_count == 2 && info.writhe == 2 && lk == 1;
    });
    s.check("Borromean closure: components, pairwise lk", "3, 0 0 0", [](std::string &out) {
        auto info = closure_info(parse_braid("1 -2 1 -2 1 -2"));
        out = std::to_string(info.component_count) + ",";
        bool ok = info.component_count == 3;
        for (int i = 1; ok && i <= 3; ++i) {
            for (int j = i + 1; j <= 3; ++j) {
                int lk = info.linking_number(i, j);
                out += " " + std::to_string(lk);
                ok = ok && lk == 0;
            }
        }
        return ok;
    });

    // tau.
    s.tau_value("tau: unlink of three", gen, "n=3;", tv(1, 6));
    s.tau_value("tau: Hopf link", gen, "n=2; 1 1", tv(0, 0));
    s.tau_value("tau: trefoil", gen, "n=2; 1 1 1", tv(-1, 3));
    s.tau_value("tau: figure eight", gen, "1 -2 1 -2", tv(-1, 4));
    s.tau_value("tau: Borromean rings", gen, "1 -2 1 -2 1 -2", tv(-1, 6));
    s.tau_value("tau: Whitehead link", gen, "1 1 -2 1 -2", tv(-1, 5));
    const TauValue powers[8] = {tv(1, 4), tv(1, 3), tv(0, 0), tv(-1, 3), tv(-1, 4), tv(-1, 3), tv(0, 0), tv(1, 3)};
    for (int k = 0; k < 8; ++k) {
        std::string word = "n=2;";
        for (int j = 0; j < k; ++j) {
            word += " 1";
        }
        s.tau_value("tau: s^" + std::to_string(k), gen, word, powers[k]);
    }
    s.check("tau: Whitehead = 2 tau(trefoil)", "true", [&](std::string &out) {
        auto w = tau(parse_braid("1 1 -2 1 -2"), gen).value;
        auto t = tau(parse_braid("n=2; 1 1 1"), gen).value;
        out = w.to_string() + " vs 2*(" + t.to_string() + ")";
        return w == t.times_sqrt2().times_sqrt2() && w.mantissa != 0;
    });
    s.check("tau recurrence tau(s^k+1) = sqrt2 tau(s^k) - tau(s^k-1)", "table", [&](std::string &out) {
        double prev = tau(BraidWord(2, {}), gen).value_float;
        double cur = tau(BraidWord(2, {1}), gen).value_float;
        bool ok = true;
        for (int k = 1; k < 8; ++k) {
            double next = kSqrt2 * cur - prev;
            ok = ok && std::abs(next - powers[k + 1 < 8 ? k + 1 : 0].to_double()) <= 1e-12;
            prev = cur;
            cur = next;
        }
        out = ok ? "table" : "mismatch";
        return ok;
    });
    s.flag("skein at Hopf site 0: 0 + 4 = sqrt2 * 2sqrt2", true, [] {
        auto rep = skein_check(parse_braid("n=2; 1 1"), 0);
        return rep.holds && rep.tau_b == tv(0, 0) && rep.tau_flipped == tv(1, 4) && rep.tau_deleted == tv(1, 3);
    });
    s.flag("tau equivalent under stabilization", true, [&] {
        auto b = parse_braid("1 -2 1 1");
        return tau_equivalent(tau(b, gen).value, tau(markov_stabilize(b, 1), gen).value);
    });
    s.flag("tau distinguishes Hopf and trefoil", false, [&] {
        return tau_equivalent(tau(parse_braid("n=2; 1 1"), gen).value, tau(parse_braid("n=2; 1 1 1"), gen).value);
    });
    s.flag("tau distinguishes s^3 and s^7", false, [&] {
        return tau_equivalent(tau(parse_braid("n=2; 1 1 1"), gen).value,
                              tau(parse_braid("n=2; 1 1 1 1 1 1 1"), gen).value);
    });
    try {
        for (const auto &entry : load_link_catalog(default_link_catalog_path())) {
            s.check("catalog link '" + entry.name + "' parses", "ok", [&](std::string &out) {
                out = to_string(entry.braid);
                return true;
            });
        }
    } catch (const std::exception &e) {
        s.check("link catalog loads", "ok", [&](std::string &out) {
            out = e.what();
            return false;
        });
    }

    // Linking state sum.
    const LinkingWeights w{std::polar(1.0, 0.4), std::polar(1.0, -1.1)};
    s.residual("Hopf state sum = 2(a^2 + c^2)", exact, [&] {
        auto z = linking_state_sum(parse_braid("n=2; 1 1"), w);
        return std::abs(z.sigma - 2.0 * (w.a * w.a + w.c * w.c));
    });
    for (int k = 0; k <= 5; ++k) {
        s.residual("T(2," + std::to_string(2 * k) + ") Z = 2(1 + (c^2/a^2)^" + std::to_string(k) + ")", exact, [&] {
            auto z = linking_state_sum(BraidWord(2, std::vector<int>(2 * k, 1)), w);
            return std::abs(z.z - 2.0 * (1.0 + int_pow(w.c * w.c / (w.a * w.a), k)));
        });
    }

    // Temperley-Lieb.
    auto p = BracketParams::from_theta(std::numbers::pi / 10);
    s.residual("TL: braid relation", exact, [&] {
        return max_abs_diff(tl_rep3(parse_braid("1 2 1"), p), tl_rep3(parse_braid("2 1 2"), p));
    });
    s.flag("TL: Phi(s1) unitary at theta = pi/10", true, [&] { return is_unitary(tl_generator(1, p)); });
    s.flag("TL: U1 not unitary", false, [&] { return is_unitary(U1(p.d)); });
    s.residual("TL: tr U1 = tr U2 = d", exact, [&] {
        return std::max(std::abs(trace(U1(p.d)) - p.d), std::abs(trace(U2(p.d)) - p.d));
    });
    s.residual("TL: tr U1U2 = tr U2U1 = 1", exact, [&] {
        auto rel = tl_relations(p.d);
        return std::max(std::abs(rel.tr_u1u2 - 1.0), std::abs(rel.tr_u2u1 - 1.0));
    });
    s.residual("TL: U1 U2 U1 = U1", exact, [&] { return tl_relations(p.d).u1u2u1_minus_u1; });
    s.residual("TL: U2 U1 U2 = U2", exact, [&] { return tl_relations(p.d).u2u1u2_minus_u2; });
    s.residual("TL: U1^2 = d U1, U2^2 = d U2", exact, [&] {
        auto rel = tl_relations(p.d);
        return std::max(rel.u1sq_minus_d_u1, rel.u2sq_minus_d_u2);
    });

    // Quantum processes.
    s.check("delta(1) = |00> + |11>", "1 0 0 1", [](std::string &out) {
        auto d = make_delta(1);
        out.clear();
        for (auto a : d.amplitudes()) {
            out += (out.empty() ? "" : " ") + fmt(a);
        }
        return out == "1 0 0 1";
    });
    s.residual("<delta|delta> = 8 for n = 3", exact, [] { return std::abs(inner(make_delta(3), make_delta(3)) - 8.0); });
    s.residual("<delta|(I x I)|delta> = 4 for n = 2", exact,
               [] { return std::abs(trace_amplitude(ComplexMatrix::identity(4)) - 4.0); });
    s.flag("teleportation basis orthogonal for M = I", true, [] { return basis_orthogonality(I2()).orthogonal; });
    s.flag("teleportation basis orthogonal for M = [[z,w],[-w*,z*]]", true, [] {
        Complex z = 0.6;
        Complex w{0, 0.8};
        return basis_orthogonality(ComplexMatrix{{z, w}, {-std::conj(w), std::conj(z)}}).orthogonal;
    });
    for (int bit : {0, 1}) {
        std::string verdict = bit == 0 ? "unentangled" : "entangled";
        s.check("3-qubit projection: qubit 1 -> " + std::to_string(bit), verdict + ", 0.5", [&](std::string &out) {
            auto res = project_qubit(aravind_state(), 1, bit);
            bool ent = res.entangled.value_or(false);
            out = std::string(ent ? "entangled" : "unentangled") + ", " + fmt(res.prob);
            return ent == (bit == 1) && std::abs(res.prob - 0.5) <= exact;
        });
    }
    s.flag("GHZ: every single-qubit projection unentangled", true, [] {
        for (size_t k = 1; k <= 3; ++k) {
            for (int bit : {0, 1}) {
                auto res = project_qubit(ghz_state(3), k, bit);
                if (!res.entangled.has_value() || *res.entangled) {
                    return false;
                }
            }
        }
        return true;
    });

    return s.take();
}

nlohmann::json golden_to_json(const std::vector<GoldenCheck> &checks) {
    auto arr = nlohmann::json::array();
    size_t failed = 0;
    for (const auto &c : checks) {
        arr.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}});
        failed += !c.pass;
    }
    return {{"checks", arr}, {"total", checks.size()}, {"failed", failed}};
}

}  // namespace braidgate
