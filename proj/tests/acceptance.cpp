// Acceptance suite: twelve numbered criteria, one PASS/FAIL line each.
// Run with no arguments to execute all, or --criterion N for a single one.
// Exit status is nonzero if any executed criterion fails.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "lnd/grading.hpp"
#include "lnd/groebner.hpp"
#include "lnd/models.hpp"

using namespace lnd;

namespace {

std::vector<std::string> g_detail;

void detail(const std::string& line) { g_detail.push_back("    " + line); }

bool expect(bool cond, const std::string& what) {
    if (!cond) detail("unmet: " + what);
    return cond;
}

// 1. fundamental-pair relations for the basic pairs d = 1..8
bool criterion1() {
    bool ok = true;
    for (int d = 1; d <= 8; ++d) {
        RelationReport rep = check_relations(basic_pair(d));
        if (!rep.ok) detail("d=" + std::to_string(d) + ": " + rep.failures.front());
        ok = ok && rep.ok;
    }
    return ok;
}

// 2. golden d=3 covariant identities
bool criterion2() {
    FundamentalPair p = basic_pair(3);
    auto P = [&](const char* s) { return Polynomial::parse(s, p.table); };
    Polynomial f = P("2*x0*x2 - x1^2");
    Polynomial g = P("3*x0^2*x3 - 3*x0*x1*x2 + x1^3");
    Polynomial F = P("3*x1*x3 - 2*x2^2");
    Polynomial G = P("3*x0*x3^2 - 3*x1*x2*x3 + 4/3*x2^3");
    Polynomial h = P("9*x0^2*x3^2 - 18*x0*x1*x2*x3 + 8*x0*x2^3 + 6*x1^3*x3 - 3*x1^2*x2^2");
    Polynomial s = P("3*x0*x3 - x1*x2");
    bool ok = true;
    ok &= expect(p.D.apply(s) == f, "Ds = f");
    ok &= expect(p.D.apply(g).is_zero(), "D(g) = 0");
    ok &= expect(p.D.apply(h).is_zero(), "D(h) = 0");
    ok &= expect(p.U.apply(F).is_zero(), "U(F) = 0");
    ok &= expect(p.U.apply(G).is_zero(), "U(G) = 0");
    ok &= expect(s * s == h + f * F.scaled(Rational(2)), "s^2 = h + 2fF");
    Polynomial x0 = Polynomial::variable(p.table, 0);
    Polynomial x3 = Polynomial::variable(p.table, 3);
    ok &= expect(f * f * f * x3.scaled(Rational(6)) ==
                     x0 * s * s * s - g.scaled(Rational(3)) * s * s +
                         x0 * h.scaled(Rational(3)) * s - g * h,
                 "6 f^3 x3 = x0 s^3 - 3 g s^2 + 3 x0 h s - g h");
    return ok;
}

// helper: all monomials of total degree <= cap over a table
std::vector<Monomial> monomials_up_to(const VarTablePtr& table, int cap) {
    std::vector<Monomial> out;
    std::vector<int> exps(table->size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == table->size()) {
            out.emplace_back(exps);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            exps[i] = v;
            rec(i + 1, left - v);
        }
        exps[i] = 0;
    };
    rec(0, cap);
    return out;
}

// 3. operator identities on monomial bases and kernel elements
bool criterion3() {
    bool ok = true;
    long long checked1 = 0, checked2 = 0;
    for (int d = 1; d <= 4; ++d) {
        FundamentalPair p = basic_pair(d);
        for (const Monomial& mono : monomials_up_to(p.table, 4)) {
            Polynomial f = Polynomial::monomial(p.table, mono, Rational(1));
            for (unsigned m = 1; m <= 3; ++m)
                for (unsigned n = 1; n <= 3; ++n) {
                    ++checked1;
                    if (!verify_identity1(p, f, m, n)) {
                        detail("identity1 fails: d=" + std::to_string(d) + " m=" +
                               std::to_string(m) + " n=" + std::to_string(n) + " on " +
                               f.to_string());
                        ok = false;
                    }
                }
        }
        for (int j = 1; j <= 4; ++j)
            for (long long w = 0; w <= 4; ++w)
                for (const Polynomial& f : kernel_basis(p, Which::D, j, w))
                    for (unsigned n = 1; n <= 3; ++n) {
                        ++checked2;
                        Identity2Report rep = verify_identity2(p, f, n);
                        if (!rep.ok) {
                            detail("identity2 fails: d=" + std::to_string(d) + " degree=" +
                                   std::to_string(j) + " weight=" + std::to_string(w) +
                                   " n=" + std::to_string(n));
                            ok = false;
                        }
                    }
    }
    detail(std::to_string(checked1) + " instances of the first identity, " +
           std::to_string(checked2) + " of the second");
    return ok;
}

// 4. partition-difference count equals exact nullspace dimension
bool criterion4() {
    bool ok = true;
    long long slices = 0;
    for (int d = 1; d <= 6; ++d) {
        FundamentalPair p = basic_pair(d);
        for (int j = 0; j <= 6; ++j)
            for (long long w = 0; w <= static_cast<long long>(j) * d; ++w) {
                ++slices;
                long long counted = cayley_sylvester(d, j, w);
                long long actual = static_cast<long long>(kernel_basis(p, Which::D, j, w).size());
                if (counted != actual) {
                    detail("d=" + std::to_string(d) + " j=" + std::to_string(j) + " w=" +
                           std::to_string(w) + ": count " + std::to_string(counted) +
                           " vs nullspace " + std::to_string(actual));
                    ok = false;
                }
            }
    }
    detail(std::to_string(slices) + " slices compared");
    return ok;
}

// 5. Hermite reciprocity
bool criterion5() {
    bool ok = true;
    for (int d = 1; d <= 8; ++d)
        for (long long i = 0; i <= 4; ++i) {
            HermiteReport rep = hermite_check(d, i, 8);
            if (!rep.ok) {
                detail(*rep.first_mismatch);
                ok = false;
            }
        }
    return ok;
}

// 6. criterion certificates across small d
bool criterion6() {
    bool ok = true;

    {
        CriterionVerdict v = criterion(basic_pair(1), 3);
        ok &= expect(v.pair_compatible == SearchStatus::YesWithCertificate &&
                         v.pair_certificate && v.pair_certificate->degree == 1,
                     "d=1: weight-1 certificate at degree 1");
    }
    {
        FundamentalPair p = basic_pair(3);
        CriterionVerdict v = criterion(p, 5);
        bool prop = false;
        if (v.triple_certificate && v.triple_certificate->degree == 2) {
            Polynomial t2 = Polynomial::parse("2*x0*x2 - x1^2", p.table);
            const Polynomial& c = v.triple_certificate->element;
            prop = c.scaled(t2.leading_term().coeff) == t2.scaled(c.leading_term().coeff);
        }
        ok &= expect(prop, "d=3: weight-2 certificate proportional to the quadratic covariant");
        bool absent = true;
        for (int j = 1; j <= 9; ++j)
            if (!kernel_basis(p, Which::D, j, 1).empty()) absent = false;
        ok &= expect(absent, "d=3: weight-1 kernel empty through degree 9");
    }
    {
        FundamentalPair p = basic_pair(4);
        bool absent = true;
        for (int j = 1; j <= 10; ++j)
            if (!kernel_basis(p, Which::D, j, 2).empty()) absent = false;
        ok &= expect(absent, "d=4: weight-2 kernel empty through degree 10");
        CriterionVerdict v = criterion(p, 6);
        ok &= expect(v.pair_compatible == SearchStatus::ImpossibleByParity,
                     "d=4: weight-1 ruled out by parity");
    }
    {
        CriterionVerdict v = criterion(basic_pair(5), 7);
        ok &= expect(v.pair_compatible == SearchStatus::YesWithCertificate &&
                         v.pair_certificate && v.pair_certificate->degree == 5,
                     "d=5: weight-1 certificate at degree 5");
        if (v.pair_certificate)
            detail("d=5 certificate degree " + std::to_string(v.pair_certificate->degree) +
                   ", verified " + (verify_certificate(basic_pair(5), *v.pair_certificate) ? "yes" : "NO"));
    }
    {
        CriterionVerdict v = criterion(basic_pair(7), 7);
        ok &= expect(v.pair_compatible == SearchStatus::YesWithCertificate && v.pair_certificate,
                     "d=7: weight-1 certificate within bound 7");
        if (v.pair_certificate)
            detail("d=7 certificate at degree " + std::to_string(v.pair_certificate->degree));
    }
    return ok;
}

// 7. named kernel elements of the two direct sums
bool criterion7() {
    NamedCertificateReport rep = verify_named_certificates();
    for (const auto& line : rep.lines) detail(line);
    return rep.ok;
}

// deterministic rng for criteria 8 and 9 (kept local on purpose)
struct Rng {
    unsigned long long s;
    explicit Rng(unsigned long long seed) : s(seed) {}
    unsigned long long next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 16;
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

Polynomial random_poly(Rng& rng, const VarTablePtr& table, int max_degree, int terms) {
    Polynomial f = Polynomial::zero(table);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> exps(table->size(), 0);
        int degree = static_cast<int>(rng.range(0, max_degree));
        for (int i = 0; i < degree; ++i) ++exps[static_cast<std::size_t>(rng.range(0, static_cast<long long>(table->size()) - 1))];
        long long num = rng.range(-9, 9);
        if (num == 0) num = 1;
        f = f + Polynomial::monomial(table, Monomial(exps), Rational(num, rng.range(1, 4)));
    }
    return f;
}

// 8. isotypic decomposition on random inputs
bool criterion8() {
    bool ok = true;
    Rng rng(880814);
    for (int d = 1; d <= 4; ++d) {
        FundamentalPair p = basic_pair(d);
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial f = random_poly(rng, p.table, 5, 4);
            IsotypicDecomposition dec = isotypic_decompose(p, f);
            Polynomial sum = Polynomial::zero(p.table);
            for (const auto& [n, part] : dec.parts) {
                sum = sum + part;
                if (!p.D.apply_power(part, n + 1).is_zero()) {
                    detail("component " + std::to_string(n) + " not killed by D^{n+1} (d=" +
                           std::to_string(d) + ")");
                    ok = false;
                }
                IsotypicDecomposition again = isotypic_decompose(p, part);
                if (again.parts.size() != 1 || !(again.parts.begin()->second == part)) {
                    detail("idempotence fails at d=" + std::to_string(d));
                    ok = false;
                }
            }
            if (!(sum == f)) {
                detail("parts do not sum to input at d=" + std::to_string(d));
                ok = false;
            }
        }
    }
    return ok;
}

// 9. squarefree and covariant-module reductions round-trip
bool criterion9() {
    bool ok = true;
    Rng rng(990814);
    for (int d = 1; d <= 4; ++d) {
        FundamentalPair p = basic_pair(d);
        auto ys = gamma_generators(d, p.table);
        for (std::size_t j = 0; j < ys.size(); ++j)
            if (!(ys[j].leading_term().mono == Monomial::unit(p.table->size(), j, 2))) {
                detail("generator " + std::to_string(j) + " does not lead with its square (d=" +
                       std::to_string(d) + ")");
                ok = false;
            }
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial f = random_poly(rng, p.table, 6, 4);
            if (!(beta_decompose(f).reassemble() == f)) {
                detail("beta round-trip fails at d=" + std::to_string(d));
                ok = false;
            }
            if (!(gamma_reduce(d, f).reassemble() == f)) {
                detail("gamma round-trip fails at d=" + std::to_string(d));
                ok = false;
            }
        }
    }
    return ok;
}

// 10. matrix models: relations, moment invariance, certificates
bool criterion10() {
    bool ok = true;
    auto run = [&](const ModelInstance& mi) {
        std::string tag = mi.name + " m=" + std::to_string(mi.m) + " n=" + std::to_string(mi.n);
        RelationReport rel = check_relations(mi.pair);
        if (!rel.ok) {
            detail(tag + ": ambient relations fail: " + rel.failures.front());
            ok = false;
        }
        CheckReport mom = check_moment_invariance(mi);
        if (!mom.ok) {
            detail(tag + ": moment generators not annihilated");
            ok = false;
        }
        CheckReport cert = check_certificate(mi);
        if (!cert.ok) {
            detail(tag + ": certificate checks fail");
            for (const auto& line : cert.lines) detail("  " + line);
            ok = false;
        }
    };
    for (int n = 1; n <= 3; ++n) run(build_cm(n));
    for (int n = 1; n <= 2; ++n) {
        run(build_cm_rank2(n, Rational(0)));
        run(build_cm_rank2(n, Rational(1, 2)));
    }
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) run(build_quiver(m, n));

    // the explicit derivative identities for the trace certificates
    {
        ModelInstance cm = build_cm(2);
        Polynomial trX = cm.certificate;
        Polynomial g = cm.pair.U.apply(trX);
        ok &= expect(!g.is_zero() && cm.pair.U.apply(g).is_zero(), "cm: deg_U(tr X) = 1");
    }
    {
        ModelInstance r2 = build_cm_rank2(2, Rational(1, 2));
        Polynomial trA = r2.certificate;
        Polynomial g = r2.pair.U.apply(trA);
        ok &= expect(!g.is_zero() && r2.pair.U.apply(g).is_zero(), "cm-rank2: deg_U(tr A) = 1");
    }
    {
        ModelInstance q = build_quiver(2, 2);
        PolyMatrix x0 = mat_of_vars(q.table, 0, 2);
        PolyMatrix x1 = mat_of_vars(q.table, 4, 2);
        Polynomial expected = mat_trace(mat_mul(x0, x1)).scaled(Rational(2));
        Polynomial df = q.pair.D.apply(q.certificate);
        ok &= expect(df == expected, "quiver m=2: D(tr XY) = 2 tr(X0 X1)");
        ok &= expect(q.pair.D.apply(df).is_zero(), "quiver m=2: D^2(tr XY) = 0");
        Polynomial uf = q.pair.U.apply(q.certificate);
        ok &= expect(q.pair.U.apply(uf).is_zero(), "quiver m=2: U^2(tr XY) = 0");

        ModelInstance q1 = build_quiver(1, 2);
        PolyMatrix x = mat_of_vars(q1.table, 0, 2);
        ok &= expect(q1.pair.D.apply(q1.certificate) == mat_trace(mat_mul(x, x)),
                     "quiver m=1: D(tr XY) = tr X^2");
    }
    return ok;
}

// 11. quotient-level relations for the quiver models
bool criterion11() {
    bool ok = true;
    {
        ModelInstance mi = build_quiver(2, 1);
        CheckReport rep = check_sl2_mod_ideal(mi, ModIdealMode::Groebner);
        ok &= expect(rep.ok, "quiver m=2 n=1: relations hold modulo the moment ideal (groebner)");
    }
    {
        ModelInstance mi = build_quiver(3, 1);
        CheckReport rep = check_sl2_mod_ideal(mi, ModIdealMode::Groebner);
        ok &= expect(rep.ok, "quiver m=3 n=1: relations hold modulo the moment ideal (groebner)");
        for (const auto& line : rep.lines)
            if (line.rfind("FAILED", 0) == 0) {
                detail(line);
                break;
            }
    }
    {
        ModelInstance mi = build_quiver(3, 1);
        CheckReport rep = check_sl2_mod_ideal(mi, ModIdealMode::Points);
        ok &= expect(rep.ok, "quiver m=3 n=1: residuals vanish at the built-in points");
        for (const auto& line : rep.lines)
            if (line.rfind("FAILED", 0) == 0) {
                detail(line);
                break;
            }
    }
    if (!ok)
        detail("the m=3 failures above are genuine: the displayed normal form is nonzero "
               "modulo a proper ideal and the displayed residual is nonzero at an on-locus "
               "point, so no implementation choice can make these checks true");
    return ok;
}

// 12. explicit out-of-scope statement
bool criterion12() {
    detail("not reproduced at this scale: the density property itself, transitivity of the "
           "special automorphism group, flexibility, and jet interpolation; compatibility of "
           "pairs and triples is certified only through the weight-1/weight-2 kernel "
           "criterion exercised by criteria 6, 7 and 10");
    return true;
}

struct Entry {
    int id;
    const char* text;
    bool (*fn)();
};

const Entry kCriteria[] = {
    {1, "fundamental-pair relations for d = 1..8", criterion1},
    {2, "golden d=3 covariant identities", criterion2},
    {3, "operator identities on monomials and kernel elements", criterion3},
    {4, "partition count equals nullspace dimension (d,j <= 6)", criterion4},
    {5, "Hermite reciprocity (d,j <= 8, i <= 4)", criterion5},
    {6, "compatibility certificates for d = 1,3,4,5,7", criterion6},
    {7, "named kernel elements of the two direct sums", criterion7},
    {8, "isotypic decomposition on 100 random inputs per d <= 4", criterion8},
    {9, "free-module reductions on 100 random inputs per d <= 4", criterion9},
    {10, "matrix models: relations, moments, certificates", criterion10},
    {11, "quotient-level relations for quiver m = 2, 3", criterion11},
    {12, "out-of-scope results stated explicitly", criterion12},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    int failures = 0, ran = 0;
    for (const Entry& e : kCriteria) {
        if (only != 0 && e.id != only) continue;
        ++ran;
        g_detail.clear();
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = e.fn();
        const auto t1 = std::chrono::steady_clock::now();
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.text << " ["
                  << ms << " ms]\n";
        for (const auto& line : g_detail) std::cout << line << "\n";
        if (!ok) ++failures;
    }
    if (ran == 0) {
        std::cerr << "no such criterion\n";
        return 2;
    }
    if (only == 0)
        std::cout << (failures == 0 ? "all criteria passed"
                                    : std::to_string(failures) + " criterion(s) failed")
                  << "\n";
    return failures == 0 ? 0 : 1;
}
