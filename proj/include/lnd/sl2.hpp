#pragma once

// Fundamental pairs (D, U) of locally nilpotent derivations with E = [D, U],
// the basic pair on k[x_0..x_d], E-weight gradings, the quadratic covariants
// T_2i, the involution alpha, square-free module decompositions, isotypic
// decomposition, and the certificate helpers around ker D.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/derivation.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/rational.hpp"

namespace lnd {

struct FundamentalPair {
    VarTablePtr table;
    Derivation D;
    Derivation U;
    Derivation E;  // [D, U]
    // E-weight of each variable; present iff E is diagonal on the variables.
    std::optional<std::vector<long long>> weights;

    FundamentalPair(Derivation d, Derivation u)
        : table(d.table()), D(std::move(d)), U(std::move(u)), E(bracket(D, U)) {
        require_same_table(D.table(), U.table());
        weights = detect_weights(E);
    }

    static std::optional<std::vector<long long>> detect_weights(const Derivation& e) {
        std::vector<long long> w;
        const auto& table = e.table();
        for (std::size_t i = 0; i < table->size(); ++i) {
            const Polynomial& img = e.image(i);
            if (img.is_zero()) {
                w.push_back(0);
                continue;
            }
            if (img.terms().size() != 1) return std::nullopt;
            const auto& t = img.terms()[0];
            if (t.mono != Monomial::unit(table->size(), i)) return std::nullopt;
            if (rat_den(t.coeff) != 1) return std::nullopt;
            const Int n = rat_num(t.coeff);
            if (n < -(1ll << 40) || n > (1ll << 40)) return std::nullopt;
            w.push_back(static_cast<long long>(n));
        }
        return w;
    }
};

struct RelationCheckOptions {
    int sample_degree = 2;  // total degree of sample monomials for the bracket identity
    int max_mn = 3;         // check [D^m U^n, E] = 2(n-m) D^m U^n for m, n up to this
};

struct RelationReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::optional<Polynomial> first_residual;

    void record(const std::string& what, const Polynomial& residual) {
        ok = false;
        failures.push_back(what + "; residual " + residual.to_string());
        if (!first_residual) first_residual = residual;
    }
};

namespace detail {
inline void all_monomials_up_to(std::size_t nvars, int maxdeg, std::vector<Monomial>& out) {
    std::vector<int> exps(nvars, 0);
    // iterate all exponent vectors with total degree <= maxdeg
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == nvars) {
            out.emplace_back(exps);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[i] = e;
            self(self, i + 1, remaining - e);
        }
        exps[i] = 0;
    };
    rec(rec, 0, maxdeg);
}
}  // namespace detail

// Verifies [D,[D,U]] = -2D and [U,[D,U]] = 2U on every generator, then the
// operator identity [D^m U^n, E] = 2(n-m) D^m U^n on sample monomials.
inline RelationReport check_relations(const FundamentalPair& p, RelationCheckOptions opts = {}) {
    RelationReport rep;
    const Derivation r1 = bracket(p.D, p.E) + p.D.scaled(Rational(2));
    const Derivation r2 = bracket(p.U, p.E) + p.U.scaled(Rational(-2));
    for (std::size_t i = 0; i < p.table->size(); ++i) {
        if (!r1.image(i).is_zero())
            rep.record("[D,[D,U]] != -2D on " + p.table->name(i), r1.image(i));
        if (!r2.image(i).is_zero())
            rep.record("[U,[D,U]] != 2U on " + p.table->name(i), r2.image(i));
    }
    if (!rep.ok) return rep;

    std::vector<Monomial> samples;
    detail::all_monomials_up_to(p.table->size(), opts.sample_degree, samples);
    for (int m = 0; m <= opts.max_mn; ++m) {
        for (int n = 0; n <= opts.max_mn; ++n) {
            if (m == 0 && n == 0) continue;
            for (const auto& mono : samples) {
                Polynomial mu = Polynomial::monomial(p.table, mono, Rational(1));
                auto op = [&](const Polynomial& f) {
                    return p.D.apply_power(p.U.apply_power(f, n), m);
                };
                Polynomial lhs = op(p.E.apply(mu)) - p.E.apply(op(mu));
                Polynomial rhs = op(mu).scaled(Rational(2 * (n - m)));
                Polynomial res = lhs - rhs;
                if (!res.is_zero()) {
                    std::ostringstream what;
                    what << "[D^" << m << " U^" << n << ", E] != 2(n-m) D^m U^n on "
                         << mu.to_string();
                    rep.record(what.str(), res);
                    return rep;  // one witness is enough
                }
            }
        }
    }
    return rep;
}

// The basic fundamental pair on k[x_0..x_d]:
//   D x_i = x_{i-1} (D x_0 = 0),  U x_i = (i+1)(d-i) x_{i+1} (U x_d = 0),
//   E x_i = (d-2i) x_i.
inline FundamentalPair basic_pair(int d, const std::string& prefix = "x") {
    if (d < 1) throw std::invalid_argument("basic pair needs d >= 1");
    VarTablePtr table = VarTable::indexed(prefix, static_cast<std::size_t>(d) + 1);
    std::vector<Polynomial> dimg, uimg;
    for (int i = 0; i <= d; ++i) {
        dimg.push_back(i == 0 ? Polynomial::zero(table) : Polynomial::variable(table, i - 1));
        uimg.push_back(i == d ? Polynomial::zero(table)
                              : Polynomial::variable(table, i + 1).scaled(Rational((i + 1) * (d - i))));
    }
    FundamentalPair p(Derivation(table, std::move(dimg)), Derivation(table, std::move(uimg)));
    RelationCheckOptions cheap;
    cheap.sample_degree = 1;
    cheap.max_mn = 2;
    auto rep = check_relations(p, cheap);
    if (!rep.ok) throw std::logic_error("basic pair failed relation check: " + rep.failures.front());
    return p;
}

// Concatenates pairs over disjoint variable sets into one pair on the tensor
// product ring.  Throws if variable names collide.
inline FundamentalPair direct_sum(const std::vector<FundamentalPair>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum of zero blocks");
    std::vector<std::string> names;
    for (const auto& b : blocks)
        for (const auto& n : b.table->names()) names.push_back(n);
    VarTablePtr table = VarTable::of(std::move(names));  // throws on duplicates

    auto transport = [&](const Polynomial& f, std::size_t offset) {
        Polynomial acc = Polynomial::zero(table);
        for (const auto& t : f.terms()) {
            std::vector<int> exps(table->size(), 0);
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) exps[offset + i] = t.mono.exp(i);
            acc = acc + Polynomial::monomial(table, Monomial(std::move(exps)), t.coeff);
        }
        return acc;
    };

    std::vector<Polynomial> dimg, uimg;
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.table->size(); ++i) {
            dimg.push_back(transport(b.D.image(i), offset));
            uimg.push_back(transport(b.U.image(i), offset));
        }
        offset += b.table->size();
    }
    return FundamentalPair(Derivation(table, std::move(dimg)), Derivation(table, std::move(uimg)));
}

// Thrown by grading-dependent operations when E is not diagonal on the
// variables (no weight grading available).
struct no_weights_error : std::invalid_argument {
    no_weights_error()
        : std::invalid_argument("operation requires a diagonal E; this pair has no weight grading") {}
};

inline const std::vector<long long>& require_weights(const FundamentalPair& p) {
    if (!p.weights) throw no_weights_error();
    return *p.weights;
}

inline long long monomial_weight(const FundamentalPair& p, const Monomial& m) {
    const auto& w = require_weights(p);
    long long acc = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) acc += static_cast<long long>(m.exp(i)) * w[i];
    return acc;
}

inline std::map<long long, Polynomial> weight_decompose(const FundamentalPair& p, const Polynomial& f) {
    require_same_table(f.table(), p.table);
    std::map<long long, Polynomial> parts;
    for (const auto& t : f.terms()) {
        long long w = monomial_weight(p, t.mono);
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, Polynomial::zero(p.table)).first;
        it->second = it->second + Polynomial::monomial(p.table, t.mono, t.coeff);
    }
    return parts;
}

// Weight of a weight-homogeneous polynomial; nullopt if it mixes weights.
inline std::optional<long long> homogeneous_weight(const FundamentalPair& p, const Polynomial& f) {
    if (f.is_zero()) return std::nullopt;
    auto parts = weight_decompose(p, f);
    if (parts.size() != 1) return std::nullopt;
    return parts.begin()->first;
}

// ---------------------------------------------------------------------------
// p_n, q_n and the Appendix identities

struct UniPoly {
    std::vector<Int> coeffs;  // ascending degree

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + Rational(coeffs[i]);
        return acc;
    }
};

// p_n(x) = prod_{1<=i<=n} (x - (i-1)),  q_n(x) = prod_{1<=i<=n} (x + (i-1)).
inline UniPoly pnqn(unsigned n, char which) {
    if (which != 'p' && which != 'q') throw std::invalid_argument("pnqn: which must be 'p' or 'q'");
    std::vector<Int> c{1};
    for (unsigned i = 1; i <= n; ++i) {
        const Int root = (which == 'p') ? Int(i - 1) : -Int(i - 1);
        // multiply by (x - root)
        std::vector<Int> next(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= root * c[k];
        }
        c = std::move(next);
    }
    return UniPoly{std::move(c)};
}

// Identity for m, n >= 1:
//   D^m U^n = D^{m-1} U^{n-1} (U D + n E - n(n-1) I).
inline bool verify_identity1(const FundamentalPair& p, const Polynomial& f, unsigned m, unsigned n,
                             Polynomial* residual = nullptr) {
    if (m < 1 || n < 1) throw std::invalid_argument("identity requires m, n >= 1");
    Polynomial lhs = p.D.apply_power(p.U.apply_power(f, n), m);
    Polynomial inner = p.U.apply(p.D.apply(f)) + p.E.apply(f).scaled(Rational(n)) -
                       f.scaled(Rational(n * (n - 1)));
    Polynomial rhs = p.D.apply_power(p.U.apply_power(inner, n - 1), m - 1);
    Polynomial res = lhs - rhs;
    if (residual) *residual = res;
    return res.is_zero();
}

struct Identity2Report {
    bool ok = false;
    Polynomial lhs;  // D^n U^n f
    Polynomial rhs;  // n! * p_n(E) f
};

// For f in ker D:  D^n U^n f = n! p_n(E) f, where p_n(E) acts on each weight
// component by substituting the weight.
inline Identity2Report verify_identity2(const FundamentalPair& p, const Polynomial& f, unsigned n) {
    require_weights(p);
    if (!p.D.apply(f).is_zero())
        throw std::invalid_argument("verify_identity2: input is not in ker D");
    Identity2Report rep;
    rep.lhs = p.D.apply_power(p.U.apply_power(f, n), n);
    UniPoly pn = pnqn(n, 'p');
    Polynomial rhs = Polynomial::zero(p.table);
    for (const auto& [w, part] : weight_decompose(p, f))
        rhs = rhs + part.scaled(pn.eval(Rational(w)));
    rep.rhs = rhs.scaled(Rational(factorial(n)));
    rep.ok = (rep.lhs == rep.rhs);
    return rep;
}

// ---------------------------------------------------------------------------
// Isotypic decomposition: B = (+)_n U^n D^n (F_n), per weight component.

struct IsotypicDecomposition {
    std::map<unsigned, Polynomial> parts;  // n -> component in U^n D^n(F_n)
};

inline IsotypicDecomposition isotypic_decompose(const FundamentalPair& p, const Polynomial& f,
                                                unsigned cap = 0) {
    require_weights(p);
    require_same_table(f.table(), p.table);
    IsotypicDecomposition out;
    auto add_part = [&](unsigned n, const Polynomial& piece) {
        auto it = out.parts.find(n);
        if (it == out.parts.end())
            out.parts.emplace(n, piece);
        else
            it->second = it->second + piece;
    };
    for (const auto& [w, hw] : weight_decompose(p, f)) {
        Polynomial h = hw;
        std::optional<unsigned> prev_n;
        while (!h.is_zero()) {
            auto nil = nilpotency_degree(p.D, h, cap);
            if (!nil.detected)
                throw nilpotency_error("isotypic_decompose: D not nilpotent on input within cap");
            const unsigned n = nil.degree;
            if (prev_n && n >= *prev_n)
                throw std::logic_error("isotypic_decompose: D-degree failed to decrease");
            prev_n = n;
            if (n == 0) {
                add_part(0, h);
                break;
            }
            Rational c = 1;
            for (unsigned i = 1; i <= n; ++i)
                c *= Rational(i) * Rational(w + 2ll * n - i + 1);
            if (c == 0) throw std::logic_error("isotypic_decompose: vanishing normalization constant");
            Polynomial top =
                p.U.apply_power(p.D.apply_power(h, n), n).scaled(Rational(1) / c);
            add_part(n, top);
            h = h - top;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadratic covariants, the involution alpha, and square-free decompositions.

// T_2i = sum_{0<=j<=2i} (-1)^j x_j x_{2i-j}, for 0 <= i <= floor(d/2).
inline std::vector<Polynomial> quadratic_covariants(int d, const VarTablePtr& table) {
    if (d < 1) throw std::invalid_argument("quadratic covariants need d >= 1");
    if (table->size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("table size does not match d");
    std::vector<Polynomial> out;
    for (int i = 0; 2 * i <= d; ++i) {
        Polynomial t = Polynomial::zero(table);
        for (int j = 0; j <= 2 * i; ++j) {
            Monomial m =
                Monomial::unit(table->size(), j).times(Monomial::unit(table->size(), 2 * i - j));
            t = t + Polynomial::monomial(table, std::move(m), Rational(j % 2 ? -1 : 1));
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline std::vector<Polynomial> quadratic_covariants(const FundamentalPair& p) {
    return quadratic_covariants(static_cast<int>(p.table->size()) - 1, p.table);
}

// A ring endomorphism given by variable images.
struct Substitution {
    VarTablePtr table;
    std::vector<Polynomial> images;

    Polynomial apply(const Polynomial& f) const { return f.substitute(table, images); }
};

// alpha(x_i) = ((d-i)!/i!) x_{d-i}; an involution with alpha D alpha = U.
inline Substitution alpha_involution(int d, const VarTablePtr& table) {
    if (table->size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("table size does not match d");
    std::vector<Polynomial> imgs;
    for (int i = 0; i <= d; ++i) {
        Rational c = Rational(factorial(static_cast<unsigned>(d - i)), factorial(static_cast<unsigned>(i)));
        imgs.push_back(Polynomial::variable(table, d - i).scaled(c));
    }
    return Substitution{table, std::move(imgs)};
}

inline Substitution alpha_involution(const FundamentalPair& p) {
    return alpha_involution(static_cast<int>(p.table->size()) - 1, p.table);
}

// s D s^{-1} for an involutive substitution s (s = s^{-1}).
inline Derivation conjugate(const Substitution& s, const Derivation& d) {
    std::vector<Polynomial> imgs;
    for (std::size_t i = 0; i < s.table->size(); ++i)
        imgs.push_back(s.apply(d.apply(s.apply(Polynomial::variable(s.table, i)))));
    return Derivation(s.table, std::move(imgs));
}

// A representation  f = sum_u  c_u(g_0..g_N) * u  over square-free monomials
// u, with the coefficients written as polynomials in fresh generator
// variables g_j standing for the subring generators gen_images[j].
struct SqfreeDecomposition {
    VarTablePtr ambient;
    VarTablePtr gens;                    // one fresh variable per generator
    std::vector<Polynomial> gen_images;  // generator j as an ambient polynomial
    std::map<Monomial, Polynomial, DegrevlexGreater> coeffs;  // square-free u -> coeff in k[g]

    Polynomial reassemble() const {
        Polynomial acc = Polynomial::zero(ambient);
        for (const auto& [u, c] : coeffs)
            acc = acc + c.substitute(ambient, gen_images) *
                            Polynomial::monomial(ambient, u, Rational(1));
        return acc;
    }
};

// B is a free k[x_0^2 .. x_d^2]-module on the square-free monomials: split
// each exponent vector into its square part and square-free part.
inline SqfreeDecomposition beta_decompose(const Polynomial& f) {
    SqfreeDecomposition dec;
    dec.ambient = f.table();
    const std::size_t nv = dec.ambient->size();
    dec.gens = VarTable::indexed("t", nv);
    for (std::size_t i = 0; i < nv; ++i) {
        Monomial sq = Monomial::unit(nv, i, 2);
        dec.gen_images.push_back(Polynomial::monomial(dec.ambient, std::move(sq), Rational(1)));
    }
    for (const auto& t : f.terms()) {
        Monomial u = t.mono.squarefree_part();
        Monomial half = t.mono.half_of_square_part();
        auto it = dec.coeffs.find(u);
        if (it == dec.coeffs.end()) it = dec.coeffs.emplace(u, Polynomial::zero(dec.gens)).first;
        it->second = it->second + Polynomial::monomial(dec.gens, std::move(half), t.coeff);
    }
    return dec;
}

// The generators y_0..y_d of the kernel-side free module structure:
// y_i = T_2i for 0 <= i <= floor(d/2), y_{d-i} = alpha(T_2i) for the rest.
// Each y_j has leading monomial x_j^2 (asserted).
inline std::vector<Polynomial> gamma_generators(int d, const VarTablePtr& table) {
    auto ts = quadratic_covariants(d, table);
    auto alpha = alpha_involution(d, table);
    std::vector<Polynomial> y(static_cast<std::size_t>(d) + 1, Polynomial::zero(table));
    const int m = d / 2;
    for (int i = 0; i <= m; ++i) y[i] = ts[i];
    for (int i = 0; i <= m; ++i) {
        const int j = d - i;
        if (j > m) y[j] = alpha.apply(ts[i]);
    }
    for (int j = 0; j <= d; ++j) {
        const auto& lt = y[j].leading_term();
        if (lt.mono != Monomial::unit(table->size(), j, 2))
            throw std::logic_error("gamma generator y_" + std::to_string(j) +
                                   " does not lead with x_" + std::to_string(j) + "^2");
    }
    return y;
}

// Rewrites f over the subring k[y_0..y_d] as a combination of square-free
// monomials by descending degrevlex elimination of leading terms.
inline SqfreeDecomposition gamma_reduce(int d, const Polynomial& f) {
    SqfreeDecomposition dec;
    dec.ambient = f.table();
    if (dec.ambient->size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("gamma_reduce: table size does not match d");
    dec.gens = VarTable::indexed("t", dec.ambient->size());
    dec.gen_images = gamma_generators(d, dec.ambient);

    std::vector<Rational> lead_coeff;
    for (const auto& y : dec.gen_images) lead_coeff.push_back(y.leading_term().coeff);

    Polynomial rest = f;
    while (!rest.is_zero()) {
        const auto& lt = rest.leading_term();
        const Monomial u_sf = lt.mono.squarefree_part();
        const Monomial half = lt.mono.half_of_square_part();

        // gamma(half): product of y_j^{half_j}; its leading term is
        // (prod lc(y_j)^{half_j}) * half^2 by multiplicativity of the order.
        Polynomial g = Polynomial::constant(dec.ambient, Rational(1));
        Rational lc = 1;
        for (std::size_t j = 0; j < dec.ambient->size(); ++j) {
            for (int k = 0; k < half.exp(j); ++k) {
                g = g * dec.gen_images[j];
                lc *= lead_coeff[j];
            }
        }
        const Rational scale = lt.coeff / lc;

        auto it = dec.coeffs.find(u_sf);
        if (it == dec.coeffs.end()) it = dec.coeffs.emplace(u_sf, Polynomial::zero(dec.gens)).first;
        it->second = it->second + Polynomial::monomial(dec.gens, half, scale);

        Polynomial subtract = g.times_monomial(u_sf, scale);
        Polynomial next = rest - subtract;
        if (!next.is_zero() && !degrevlex_less(next.leading_term().mono, lt.mono))
            throw std::logic_error("gamma_reduce: leading monomial failed to decrease");
        rest = std::move(next);
    }
    return dec;
}

// ---------------------------------------------------------------------------
// Witness extraction for the compatibility criterion.

enum class CertKind { A1, A2 };

struct WitnessReport {
    bool ok = false;
    Polynomial g;  // U(f)
    std::vector<std::string> checks;
};

// For nonzero f in ker D of weight 1 (A1) or 2 (A2), g = U(f) is a local
// slice witness: deg_U g = 0 and deg_D g = 1 for A1; deg_D g = deg_U g = 1
// for A2.
inline WitnessReport useful2_witness(const FundamentalPair& p, const Polynomial& f, CertKind kind) {
    if (f.is_zero()) throw std::invalid_argument("useful2_witness: zero input");
    if (!p.D.apply(f).is_zero()) throw std::invalid_argument("useful2_witness: input not in ker D");
    auto w = homogeneous_weight(p, f);
    const long long expected = (kind == CertKind::A1) ? 1 : 2;
    if (!w || *w != expected)
        throw std::invalid_argument("useful2_witness: input must be weight-homogeneous of weight " +
                                    std::to_string(expected));
    WitnessReport rep;
    rep.g = p.U.apply(f);
    auto note = [&](bool cond, const std::string& what) {
        rep.checks.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
        return cond;
    };
    bool ok = note(!rep.g.is_zero(), "g = U(f) is nonzero");
    if (!ok) {
        rep.ok = false;
        return rep;
    }
    const Polynomial dg = p.D.apply(rep.g);
    const Polynomial ddg = p.D.apply(dg);
    const Polynomial ug = p.U.apply(rep.g);
    const Polynomial uug = p.U.apply(ug);
    ok = note(!dg.is_zero(), "deg_D g >= 1") && ok;
    ok = note(ddg.is_zero(), "deg_D g <= 1") && ok;
    if (kind == CertKind::A1) {
        ok = note(ug.is_zero(), "deg_U g = 0") && ok;
    } else {
        ok = note(!ug.is_zero(), "deg_U g >= 1") && ok;
        ok = note(uug.is_zero(), "deg_U g <= 1") && ok;
    }
    rep.ok = ok;
    return rep;
}

}  // namespace lnd
