#pragma once

// The matrix models: Calogero-Moser (D = X d/dY), its rank-2 extension on
// (A, B, v1, v2, w1, w2), and the cyclic-quiver family on block matrices
// X_a, Y_a with framing vector v and covector w.  Builds the fundamental
// pairs on the ambient entry rings, the moment-map relation generators, the
// trace certificates, and the quotient-level relation checks.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/groebner.hpp"
#include "lnd/sl2.hpp"

namespace lnd {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline PolyMatrix mat_of_vars(const VarTablePtr& table, std::size_t first, std::size_t n) {
    PolyMatrix m(n, std::vector<Polynomial>(n, Polynomial::zero(table)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Polynomial::variable(table, first + i * n + j);
    return m;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size();
    PolyMatrix c(n, std::vector<Polynomial>(n, Polynomial::zero(a[0][0].table())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

inline PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = a[i][j] - b[i][j];
    return c;
}

inline PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = a[i][j] + b[i][j];
    return c;
}

inline Polynomial mat_trace(const PolyMatrix& a) {
    Polynomial t = Polynomial::zero(a[0][0].table());
    for (std::size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    return t;
}

struct ModelInstance {
    std::string name;  // cm | cm-rank2 | quiver
    int m = 1;         // quiver cycle length; 1 otherwise
    int n = 1;         // matrix size
    Rational tau = 0;  // cm-rank2 parameter
    std::vector<Rational> lambda;  // quiver parameters
    VarTablePtr table;
    FundamentalPair pair;
    std::vector<Polynomial> moment_generators;
    Polynomial certificate;
    // whether the fundamental-pair relations hold on the ambient ring
    // (discovered, not assumed: false for quiver with m >= 3)
    bool relations_ambient = true;
};

// D(Y_ij) = X_ij, everything else killed; U mirrors with X and Y swapped.
// Moment generators: entries of [X, Y].  Certificate: Tr X.
inline ModelInstance build_cm(int n) {
    if (n < 1) throw std::invalid_argument("build_cm: n must be positive");
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names.push_back("X_" + std::to_string(i) + "_" + std::to_string(j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names.push_back("Y_" + std::to_string(i) + "_" + std::to_string(j));
    VarTablePtr table = VarTable::of(std::move(names));

    std::vector<Polynomial> dimg, uimg;
    for (std::size_t k = 0; k < nn; ++k) dimg.push_back(Polynomial::zero(table));
    for (std::size_t k = 0; k < nn; ++k) dimg.push_back(Polynomial::variable(table, k));
    for (std::size_t k = 0; k < nn; ++k) uimg.push_back(Polynomial::variable(table, nn + k));
    for (std::size_t k = 0; k < nn; ++k) uimg.push_back(Polynomial::zero(table));

    PolyMatrix X = mat_of_vars(table, 0, n);
    PolyMatrix Y = mat_of_vars(table, nn, n);
    PolyMatrix comm = mat_sub(mat_mul(X, Y), mat_mul(Y, X));

    ModelInstance mi{"cm",
                     1,
                     n,
                     Rational(0),
                     {},
                     table,
                     FundamentalPair(Derivation(table, std::move(dimg)),
                                     Derivation(table, std::move(uimg))),
                     {},
                     mat_trace(X),
                     true};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mi.moment_generators.push_back(comm[i][j]);
    return mi;
}

// D = A d/dB + v1 d/dv2 - w2 d/dw1; U is the mirror.  Moment generators:
// entries of [A, B] - vw with (vw)_ij = v1_i w1_j + v2_i w2_j (the tau I_n
// shift is constant, hence invariant).  Certificate: Tr A.
inline ModelInstance build_cm_rank2(int n, const Rational& tau) {
    if (n < 1) throw std::invalid_argument("build_cm_rank2: n must be positive");
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::string> names;
    auto push_mat = [&](const std::string& base) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                names.push_back(base + "_" + std::to_string(i) + "_" + std::to_string(j));
    };
    auto push_vec = [&](const std::string& base) {
        for (int i = 0; i < n; ++i) names.push_back(base + "_" + std::to_string(i));
    };
    push_mat("A");   // [0, nn)
    push_mat("B");   // [nn, 2nn)
    push_vec("v1");  // [2nn, 2nn+n)
    push_vec("v2");
    push_vec("w1");
    push_vec("w2");
    VarTablePtr table = VarTable::of(std::move(names));
    const std::size_t v1o = 2 * nn, v2o = v1o + n, w1o = v2o + n, w2o = w1o + n;

    std::vector<Polynomial> dimg(table->size(), Polynomial::zero(table));
    std::vector<Polynomial> uimg(table->size(), Polynomial::zero(table));
    for (std::size_t k = 0; k < nn; ++k) {
        dimg[nn + k] = Polynomial::variable(table, k);   // D(B) = A
        uimg[k] = Polynomial::variable(table, nn + k);   // U(A) = B
    }
    for (int i = 0; i < n; ++i) {
        dimg[v2o + i] = Polynomial::variable(table, v1o + i);             // D(v2) = v1
        dimg[w1o + i] = Polynomial::variable(table, w2o + i).scaled(-1);  // D(w1) = -w2
        uimg[v1o + i] = Polynomial::variable(table, v2o + i);             // U(v1) = v2
        uimg[w2o + i] = Polynomial::variable(table, w1o + i).scaled(-1);  // U(w2) = -w1
    }

    PolyMatrix A = mat_of_vars(table, 0, n);
    PolyMatrix B = mat_of_vars(table, nn, n);
    PolyMatrix comm = mat_sub(mat_mul(A, B), mat_mul(B, A));

    ModelInstance mi{"cm-rank2",
                     1,
                     n,
                     tau,
                     {},
                     table,
                     FundamentalPair(Derivation(table, std::move(dimg)),
                                     Derivation(table, std::move(uimg))),
                     {},
                     mat_trace(A),
                     true};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Polynomial vw = Polynomial::variable(table, v1o + i) * Polynomial::variable(table, w1o + j) +
                            Polynomial::variable(table, v2o + i) * Polynomial::variable(table, w2o + j);
            mi.moment_generators.push_back(comm[i][j] - vw);
        }
    return mi;
}

inline std::vector<Rational> default_lambda(int m) {
    std::vector<Rational> l;
    for (int i = 0; i < m; ++i) l.emplace_back(i + 1);
    return l;
}

// Cyclic quiver on m blocks of size n with a one-dimensional framing at
// block 0.  X_a sits in block position (a, a+1 mod m), Y_a in (a+1 mod m, a).
//   D(Y_a) = (X_{a+1} X_{a+2} ... X_{a+m-1})-entry, D kills X, v, w;
//   U(X_a) = (Y_{a+m-1} ... Y_{a+1})-entry,        U kills Y, v, w.
// For m = 1 the cycle degenerates to the Calogero-Moser rule D(Y) = X,
// U(X) = Y on single matrices.  Moment generators: for each block a the
// entries of X_a Y_a - Y_{a-1} X_{a-1} + [a=0] vw - lambda_a I_n, plus the
// framing scalar wv - n * sum(lambda).  Certificate: Tr XY.
inline ModelInstance build_quiver(int m, int n, std::vector<Rational> lambda = {}) {
    if (m < 1 || n < 1) throw std::invalid_argument("build_quiver: m, n must be positive");
    if (lambda.empty()) lambda = default_lambda(m);
    if (static_cast<int>(lambda.size()) != m)
        throw std::invalid_argument("build_quiver: lambda needs exactly m entries");

    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::string> names;
    auto push_block = [&](const std::string& base, int a) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                names.push_back(base + "_" + std::to_string(a) + "_" + std::to_string(i) + "_" +
                                std::to_string(j));
    };
    for (int a = 0; a < m; ++a) push_block("X", a);
    for (int a = 0; a < m; ++a) push_block("Y", a);
    for (int i = 0; i < n; ++i) names.push_back("v_" + std::to_string(i));
    for (int i = 0; i < n; ++i) names.push_back("w_" + std::to_string(i));
    VarTablePtr table = VarTable::of(std::move(names));

    auto xoff = [&](int a) { return static_cast<std::size_t>(((a % m) + m) % m) * nn; };
    auto yoff = [&](int a) { return (static_cast<std::size_t>(m) + ((a % m) + m) % m) * nn; };
    const std::size_t voff = 2 * static_cast<std::size_t>(m) * nn;
    const std::size_t woff = voff + n;

    std::vector<PolyMatrix> X, Y;
    for (int a = 0; a < m; ++a) X.push_back(mat_of_vars(table, xoff(a), n));
    for (int a = 0; a < m; ++a) Y.push_back(mat_of_vars(table, yoff(a), n));

    auto xprod = [&](int from, int count) {  // X_from X_{from+1} ... (count factors)
        PolyMatrix p = X[((from % m) + m) % m];
        for (int k = 1; k < count; ++k) p = mat_mul(p, X[((from + k) % m + m) % m]);
        return p;
    };
    auto yprod_desc = [&](int from, int count) {  // Y_from Y_{from-1} ... (count factors)
        PolyMatrix p = Y[((from % m) + m) % m];
        for (int k = 1; k < count; ++k) p = mat_mul(p, Y[((from - k) % m + m) % m]);
        return p;
    };

    std::vector<Polynomial> dimg(table->size(), Polynomial::zero(table));
    std::vector<Polynomial> uimg(table->size(), Polynomial::zero(table));
    for (int a = 0; a < m; ++a) {
        PolyMatrix dy = (m == 1) ? X[0] : xprod(a + 1, m - 1);
        PolyMatrix ux = (m == 1) ? Y[0] : yprod_desc(a + m - 1, m - 1);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                dimg[yoff(a) + i * n + j] = dy[i][j];
                uimg[xoff(a) + i * n + j] = ux[i][j];
            }
    }

    ModelInstance mi{"quiver",
                     m,
                     n,
                     Rational(0),
                     lambda,
                     table,
                     FundamentalPair(Derivation(table, std::move(dimg)),
                                     Derivation(table, std::move(uimg))),
                     {},
                     Polynomial::zero(table),
                     m <= 2};

    // certificate f = Tr XY = sum_a Tr(X_a Y_a)
    Polynomial f = Polynomial::zero(table);
    for (int a = 0; a < m; ++a) f = f + mat_trace(mat_mul(X[a], Y[a]));
    mi.certificate = f;

    // moment generators
    for (int a = 0; a < m; ++a) {
        PolyMatrix blk = mat_sub(mat_mul(X[a], Y[a]), mat_mul(Y[(a + m - 1) % m], X[(a + m - 1) % m]));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Polynomial g = blk[i][j];
                if (a == 0)
                    g = g + Polynomial::variable(table, voff + i) *
                                Polynomial::variable(table, woff + j);
                if (i == j) g = g - Polynomial::constant(table, lambda[a]);
                mi.moment_generators.push_back(g);
            }
    }
    Polynomial scalar = Polynomial::zero(table);
    for (int i = 0; i < n; ++i)
        scalar = scalar + Polynomial::variable(table, woff + i) * Polynomial::variable(table, voff + i);
    Rational lam_alpha = 0;
    for (const auto& l : lambda) lam_alpha += l * n;
    mi.moment_generators.push_back(scalar - Polynomial::constant(table, lam_alpha));
    return mi;
}

// ---------------------------------------------------------------------------
// Checks

struct CheckReport {
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool cond, const std::string& what) {
        lines.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
        if (!cond) ok = false;
    }
    void note(const std::string& what) { lines.push_back("note: " + what); }
};

// Trace certificate behavior:
//   cm / cm-rank2:  f = Tr X (resp. Tr A) satisfies Df = 0 and deg_U f = 1.
//   quiver: f = Tr XY satisfies Df = m Tr(X_0 ... X_{m-1}) (m >= 2; Tr X^2
//   when m = 1), Uf = m Tr(Y_{m-1} ... Y_0) (Tr Y^2 when m = 1), and
//   D(Df) = U(Uf) = 0, all on the ambient ring.
inline CheckReport check_certificate(const ModelInstance& mi) {
    CheckReport rep;
    const Polynomial& f = mi.certificate;
    const auto& D = mi.pair.D;
    const auto& U = mi.pair.U;
    if (mi.name == "quiver") {
        const int m = mi.m, n = mi.n;
        const std::size_t nn = static_cast<std::size_t>(n) * n;
        std::vector<PolyMatrix> X, Y;
        for (int a = 0; a < m; ++a) X.push_back(mat_of_vars(mi.table, static_cast<std::size_t>(a) * nn, n));
        for (int a = 0; a < m; ++a)
            Y.push_back(mat_of_vars(mi.table, (static_cast<std::size_t>(m) + a) * nn, n));
        PolyMatrix xp = X[0], yp = Y[m - 1];
        if (m == 1) {
            xp = mat_mul(X[0], X[0]);
            yp = mat_mul(Y[0], Y[0]);
        } else {
            for (int a = 1; a < m; ++a) xp = mat_mul(xp, X[a]);
            for (int a = m - 2; a >= 0; --a) yp = mat_mul(yp, Y[a]);
        }
        const Rational mult = (m == 1) ? Rational(1) : Rational(m);
        Polynomial df = D.apply(f), uf = U.apply(f);
        rep.check(df == mat_trace(xp).scaled(mult),
                  m >= 2 ? "D(Tr XY) = m Tr(X_0 ... X_{m-1})" : "D(Tr XY) = Tr X^2");
        rep.check(uf == mat_trace(yp).scaled(mult),
                  m >= 2 ? "U(Tr XY) = m Tr(Y_{m-1} ... Y_0)" : "U(Tr XY) = Tr Y^2");
        rep.check(D.apply(df).is_zero(), "D(D(Tr XY)) = 0");
        rep.check(U.apply(uf).is_zero(), "U(U(Tr XY)) = 0");
    } else {
        rep.check(D.apply(f).is_zero(), "D(certificate) = 0");
        Polynomial uf = U.apply(f);
        rep.check(!uf.is_zero(), "U(certificate) nonzero");
        rep.check(U.apply(uf).is_zero(), "U^2(certificate) = 0  (deg_U = 1)");
    }
    return rep;
}

// Both derivations must annihilate every moment generator (the descent
// mechanism to the quotient).
inline CheckReport check_moment_invariance(const ModelInstance& mi) {
    CheckReport rep;
    for (std::size_t k = 0; k < mi.moment_generators.size(); ++k) {
        const auto& g = mi.moment_generators[k];
        rep.check(mi.pair.D.apply(g).is_zero(), "D kills moment generator " + std::to_string(k));
        rep.check(mi.pair.U.apply(g).is_zero(), "U kills moment generator " + std::to_string(k));
    }
    return rep;
}

using PointAssignment = std::vector<Rational>;  // one value per table variable

// Scalar (n = 1) families on the relation locus, used when no point file is
// supplied.  quiver: x_a = 1, y_a = t + lambda_1 + ... + lambda_a, v = 1,
// w = sum(lambda), for five values of t.
inline std::vector<PointAssignment> builtin_points(const ModelInstance& mi) {
    if (mi.n != 1)
        throw std::invalid_argument("built-in point families exist only for n = 1; supply points");
    std::vector<PointAssignment> pts;
    if (mi.name == "cm") {
        pts.push_back({Rational(1), Rational(2)});
    } else if (mi.name == "cm-rank2") {
        // (A, B, v1, v2, w1, w2) with v1 w1 + v2 w2 = 0
        pts.push_back({Rational(1), Rational(2), Rational(1), Rational(2), Rational(2), Rational(-1)});
    } else if (mi.name == "quiver") {
        const int m = mi.m;
        for (int tv : {0, 1, -1, 2, 5}) {
            PointAssignment p(mi.table->size(), Rational(0));
            Rational sum = 0;
            for (int a = 0; a < m; ++a) p[static_cast<std::size_t>(a)] = 1;  // x_a = 1
            for (int a = 0; a < m; ++a) {
                if (a >= 1) sum += mi.lambda[a];
                p[static_cast<std::size_t>(m + a)] = Rational(tv) + sum;  // y_a
            }
            Rational total = 0;
            for (const auto& l : mi.lambda) total += l;
            p[2 * static_cast<std::size_t>(m)] = 1;          // v
            p[2 * static_cast<std::size_t>(m) + 1] = total;  // w
            pts.push_back(std::move(p));
        }
    } else {
        throw std::invalid_argument("unknown model: " + mi.name);
    }
    return pts;
}

enum class ModIdealMode { Groebner, Points };

// Verifies the fundamental-pair relations modulo the moment ideal: the
// residual derivations R1 = [D,[D,U]] + 2D and R2 = [U,[D,U]] - 2U must send
// every variable into the ideal (groebner mode) or vanish at every sample
// point of the relation locus (points mode).  Groebner mode also insists the
// ideal is proper, so membership cannot hold vacuously.
inline CheckReport check_sl2_mod_ideal(const ModelInstance& mi, ModIdealMode mode,
                                       const std::vector<PointAssignment>& points = {},
                                       GroebnerGuards guards = {}) {
    CheckReport rep;
    const Derivation r1 = bracket(mi.pair.D, mi.pair.E) + mi.pair.D.scaled(Rational(2));
    const Derivation r2 = bracket(mi.pair.U, mi.pair.E) + mi.pair.U.scaled(Rational(-2));

    if (mode == ModIdealMode::Groebner) {
        IdealBasis ideal(mi.moment_generators, guards);
        rep.check(ideal.is_proper(), "moment ideal is proper (membership checks are meaningful)");
        rep.note("groebner basis size " + std::to_string(ideal.groebner().size()));
        for (std::size_t i = 0; i < mi.table->size(); ++i) {
            const std::string v = mi.table->name(i);
            Polynomial n1 = ideal.normal_form(r1.image(i));
            Polynomial n2 = ideal.normal_form(r2.image(i));
            std::string msg1 = "([D,[D,U]] + 2D)(" + v + ") in ideal";
            if (!n1.is_zero()) msg1 += "; normal form " + n1.to_string();
            std::string msg2 = "([U,[D,U]] - 2U)(" + v + ") in ideal";
            if (!n2.is_zero()) msg2 += "; normal form " + n2.to_string();
            rep.check(n1.is_zero(), msg1);
            rep.check(n2.is_zero(), msg2);
        }
        return rep;
    }

    const std::vector<PointAssignment>& pts = points.empty() ? builtin_points(mi) : points;
    if (pts.empty()) throw std::invalid_argument("points mode needs at least one point");
    bool residuals_ok = true;
    for (std::size_t pi = 0; pi < pts.size(); ++pi) {
        const auto& pt = pts[pi];
        if (pt.size() != mi.table->size())
            throw std::invalid_argument("point " + std::to_string(pi) +
                                        " does not assign every variable");
        bool on_locus = true;
        for (const auto& g : mi.moment_generators)
            if (g.evaluate(pt) != 0) on_locus = false;
        rep.check(on_locus, "point " + std::to_string(pi) + " lies on the relation locus");
        if (!on_locus) continue;
        for (std::size_t i = 0; i < mi.table->size(); ++i) {
            const Rational a = r1.image(i).evaluate(pt);
            const Rational b = r2.image(i).evaluate(pt);
            if (a != 0) {
                residuals_ok = false;
                rep.check(false, "([D,[D,U]] + 2D)(" + mi.table->name(i) + ") = " +
                                     rat_to_string(a) + " at point " + std::to_string(pi));
            }
            if (b != 0) {
                residuals_ok = false;
                rep.check(false, "([U,[D,U]] - 2U)(" + mi.table->name(i) + ") = " +
                                     rat_to_string(b) + " at point " + std::to_string(pi));
            }
        }
    }
    rep.check(residuals_ok, "relation residuals vanish at every on-locus sample point");
    return rep;
}

}  // namespace lnd
