#pragma once

// Weight-graded slices B_{j,w} (total degree j, E-weight w), matrices of D
// and U between slices, kernel bases A_w = (ker D) cap B_w, dimension counts
// via the partition formula, and the certificate search deciding whether
// A_1 (resp. A_2) contains a nonzero element.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/linalg.hpp"
#include "lnd/sl2.hpp"

namespace lnd {

// Ordered monomial basis of the slice of total degree j and weight w.
// Basis monomials are listed in descending degrevlex order.
struct GradedComponent {
    int degree = 0;
    long long weight = 0;
    std::vector<Monomial> basis;

    std::size_t dim() const { return basis.size(); }

    std::optional<std::size_t> index_of(const Monomial& m) const {
        auto it = std::lower_bound(basis.begin(), basis.end(), m,
                                   [](const Monomial& a, const Monomial& b) {
                                       return degrevlex_less(b, a);  // descending
                                   });
        if (it == basis.end() || !(*it == m)) return std::nullopt;
        return static_cast<std::size_t>(it - basis.begin());
    }

    Polynomial element(const VarTablePtr& table, const std::vector<Rational>& coords) const {
        if (coords.size() != basis.size())
            throw std::invalid_argument("coordinate vector does not match basis size");
        Polynomial acc = Polynomial::zero(table);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coords[i] != 0) acc = acc + Polynomial::monomial(table, basis[i], coords[i]);
        return acc;
    }
};

// Enumerates the degree-j monomials of weight w.  Prunes on the reachable
// weight range of the remaining variables.
inline GradedComponent graded_component(const FundamentalPair& p, int degree, long long weight) {
    const auto& w = require_weights(p);
    if (degree < 0) throw std::invalid_argument("graded_component: negative degree");
    const std::size_t nv = w.size();

    // suffix extremes of the variable weights
    std::vector<long long> maxw(nv + 1, 0), minw(nv + 1, 0);
    long long lo = 0, hi = 0;
    for (std::size_t i = nv; i-- > 0;) {
        hi = std::max(hi, w[i]);
        lo = std::min(lo, w[i]);
        maxw[i] = hi;
        minw[i] = lo;
    }
    // with `left` degree to distribute among vars i.., achievable weight lies in
    // [left*min(0-free? no: exactly degree used)]: every unit of degree shifts by w[i],
    // and all `left` units must be spent, so range is [left*minw', left*maxw'] where
    // minw'/maxw' are the extreme variable weights among i..nv-1.
    std::vector<long long> maxv(nv, 0), minv(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        long long a = w[i], b = w[i];
        for (std::size_t j = i + 1; j < nv; ++j) {
            a = std::min(a, w[j]);
            b = std::max(b, w[j]);
        }
        minv[i] = a;
        maxv[i] = b;
    }

    GradedComponent comp;
    comp.degree = degree;
    comp.weight = weight;
    std::vector<int> exps(nv, 0);
    auto rec = [&](auto&& self, std::size_t i, int left, long long acc) -> void {
        if (i == nv) {
            if (left == 0 && acc == weight) comp.basis.emplace_back(exps);
            return;
        }
        const long long need = weight - acc;
        if (left * minv[i] > need || left * maxv[i] < need) return;
        for (int e = 0; e <= left; ++e) {
            exps[i] = e;
            self(self, i + 1, left - e, acc + static_cast<long long>(e) * w[i]);
        }
        exps[i] = 0;
    };
    rec(rec, 0, degree, 0);
    std::sort(comp.basis.begin(), comp.basis.end(),
              [](const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); });
    return comp;
}

// Matrix of a linear map between slices, columns indexed by `source` basis
// monomials, rows by `target`.  Any image monomial outside `target` is a
// grading violation and throws.
inline QMatrix matrix_of(const FundamentalPair& p, const Derivation& d, const GradedComponent& source,
                         const GradedComponent& target) {
    QMatrix mat(target.dim(), source.dim());
    for (std::size_t c = 0; c < source.dim(); ++c) {
        Polynomial img = d.apply(Polynomial::monomial(p.table, source.basis[c], Rational(1)));
        for (const auto& t : img.terms()) {
            auto r = target.index_of(t.mono);
            if (!r)
                throw std::logic_error("image monomial " +
                                       Polynomial::monomial(p.table, t.mono, Rational(1)).to_string() +
                                       " missing from target slice");
            mat.at(*r, c) = t.coeff;
        }
    }
    return mat;
}

enum class Which { D, U };

inline const Derivation& select(const FundamentalPair& p, Which which) {
    return which == Which::D ? p.D : p.U;
}

// D shifts weight by +2, U by -2.
inline long long weight_shift(Which which) { return which == Which::D ? 2 : -2; }

// Basis of ker(D: B_{j,w} -> B_{j,w+2}) (resp. U, target weight w-2) as
// polynomials, from the reduced echelon nullspace (deterministic).
inline std::vector<Polynomial> kernel_basis(const FundamentalPair& p, Which which, int degree,
                                            long long weight) {
    GradedComponent src = graded_component(p, degree, weight);
    if (src.dim() == 0) return {};
    GradedComponent dst = graded_component(p, degree, weight + weight_shift(which));
    QMatrix m = matrix_of(p, select(p, which), src, dst);
    std::vector<Polynomial> out;
    for (const auto& v : nullspace_reduced(m)) out.push_back(src.element(p.table, v));
    return out;
}

// ---------------------------------------------------------------------------
// Dimension counts for the basic pair via partition numbers.

namespace detail {
// Number of partitions of t into at most j parts, each part at most d.
// P[p][u] after round s counts partitions of u into <= p parts of size <= s,
// via P_s[p][u] = P_{s-1}[p][u] + P_s[p-1][u-s] (second term: peel one part
// of size s).  Ascending p and u makes the in-place update read exactly the
// old value for the first term and the new one for the second.
inline long long bounded_partitions(int t, int j, int d) {
    if (t < 0) return 0;
    if (t == 0) return 1;
    if (j <= 0 || d <= 0) return 0;
    std::vector<std::vector<long long>> P(static_cast<std::size_t>(j) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(t) + 1, 0));
    for (int p = 0; p <= j; ++p) P[p][0] = 1;
    for (int s = 1; s <= d; ++s)
        for (int p = 1; p <= j; ++p)
            for (int u = s; u <= t; ++u) P[p][u] += P[p - 1][u - s];
    return P[j][t];
}
}  // namespace detail

// dim of the weight-w slice of (ker D) in degree j for the basic pair on
// k[x_0..x_d]:  N(j,d,t) - N(j,d,t-1) with t = (jd - w)/2, where N counts
// partitions of t into at most j parts each at most d.  Zero when w < 0 or
// jd - w is odd or negative.
inline long long cayley_sylvester(int d, int j, long long w) {
    if (d < 0 || j < 0) throw std::invalid_argument("cayley_sylvester: negative parameters");
    if (w < 0) return 0;
    const long long jd = static_cast<long long>(j) * d;
    if (w > jd) return 0;
    if ((jd - w) % 2 != 0) return 0;
    const long long t = (jd - w) / 2;
    if (t > 1000000) throw std::invalid_argument("cayley_sylvester: slice too large");
    auto N = [&](long long u) {
        return u < 0 ? 0 : detail::bounded_partitions(static_cast<int>(u), j, d);
    };
    return N(t) - N(t - 1);
}

struct HermiteReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::optional<std::string> first_mismatch;
};

// Checks the reciprocity cayley_sylvester(d, j, i) = cayley_sylvester(j, d, i)
// for all j <= j_cap, cross-validating both counts against the nullspace
// dimension of the actual slice whenever that slice has at most cross_cap
// monomials.
inline HermiteReport hermite_check(int d, long long i, int j_cap, std::size_t cross_cap = 64) {
    if (d < 1) throw std::invalid_argument("hermite_check: d must be positive");
    if (i < 0) throw std::invalid_argument("hermite_check: weight must be nonnegative");
    HermiteReport rep;
    std::map<int, FundamentalPair> pairs;
    auto pair_for = [&](int deg) -> const FundamentalPair& {
        auto it = pairs.find(deg);
        if (it == pairs.end()) it = pairs.emplace(deg, basic_pair(deg)).first;
        return it->second;
    };
    for (int j = 0; j <= j_cap; ++j) {
        const long long lhs = cayley_sylvester(d, j, i);
        const long long rhs = cayley_sylvester(j, d, i);
        std::string line = "d=" + std::to_string(d) + " j=" + std::to_string(j) +
                           " i=" + std::to_string(i) + ": count " + std::to_string(lhs) +
                           " vs swapped " + std::to_string(rhs);
        if (lhs != rhs) {
            rep.ok = false;
            if (!rep.first_mismatch) rep.first_mismatch = line;
            rep.lines.push_back(line + "  MISMATCH");
            continue;
        }
        GradedComponent slice = graded_component(pair_for(d), j, i);
        if (slice.dim() > 0 && slice.dim() <= cross_cap) {
            const long long dim =
                static_cast<long long>(kernel_basis(pair_for(d), Which::D, j, i).size());
            if (dim != lhs) {
                rep.ok = false;
                std::string bad = line + "  nullspace dim " + std::to_string(dim) + " DISAGREES";
                if (!rep.first_mismatch) rep.first_mismatch = bad;
                rep.lines.push_back(bad);
                continue;
            }
            line += ", nullspace dim " + std::to_string(dim) + " agrees";
        }
        rep.lines.push_back(line + "  ok");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The compatibility criterion: search for nonzero elements of A_1 and A_2.

struct Certificate {
    CertKind kind;
    int degree = 0;
    long long weight = 0;
    Polynomial element;
};

enum class SearchStatus { YesWithCertificate, NotFoundBelowBound, ImpossibleByParity };

inline std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::YesWithCertificate: return "yes-with-certificate";
        case SearchStatus::NotFoundBelowBound: return "not-found-below-bound";
        case SearchStatus::ImpossibleByParity: return "impossible-by-parity";
    }
    return "?";
}

struct CriterionVerdict {
    SearchStatus triple_compatible = SearchStatus::NotFoundBelowBound;  // A_2
    SearchStatus pair_compatible = SearchStatus::NotFoundBelowBound;    // A_1
    std::optional<Certificate> triple_certificate;
    std::optional<Certificate> pair_certificate;
    int search_bound = 0;
};

// Searches degrees 1..degree_bound for a nonzero kernel element of weight 1
// (pair compatibility) and weight 2 (triple compatibility).  First hit in
// degree order wins; within a degree the first reduced-echelon basis vector
// is taken.  If every variable weight is even, weight 1 is unreachable in
// any degree and A_1 is settled by parity.
inline CriterionVerdict criterion(const FundamentalPair& p, int degree_bound) {
    if (degree_bound < 1) throw std::invalid_argument("criterion: bound must be positive");
    const auto& w = require_weights(p);
    CriterionVerdict v;
    v.search_bound = degree_bound;

    bool all_even = true;
    for (long long wi : w)
        if (wi % 2 != 0) all_even = false;
    if (all_even) v.pair_compatible = SearchStatus::ImpossibleByParity;

    for (int j = 1; j <= degree_bound; ++j) {
        if (v.pair_compatible == SearchStatus::NotFoundBelowBound && !v.pair_certificate) {
            auto basis = kernel_basis(p, Which::D, j, 1);
            if (!basis.empty()) {
                v.pair_compatible = SearchStatus::YesWithCertificate;
                v.pair_certificate = Certificate{CertKind::A1, j, 1, basis.front()};
            }
        }
        if (!v.triple_certificate) {
            auto basis = kernel_basis(p, Which::D, j, 2);
            if (!basis.empty()) {
                v.triple_compatible = SearchStatus::YesWithCertificate;
                v.triple_certificate = Certificate{CertKind::A2, j, 2, basis.front()};
            }
        }
        if (v.triple_certificate &&
            (v.pair_certificate || v.pair_compatible == SearchStatus::ImpossibleByParity))
            break;
    }
    return v;
}

// Independent re-verification of a certificate's invariants.
inline bool verify_certificate(const FundamentalPair& p, const Certificate& c) {
    if (c.element.is_zero()) return false;
    if (!p.D.apply(c.element).is_zero()) return false;
    auto w = homogeneous_weight(p, c.element);
    const long long expected = (c.kind == CertKind::A1) ? 1 : 2;
    if (!w || *w != expected || c.weight != expected) return false;
    if (c.element.total_degree() != c.degree || !c.element.is_homogeneous()) return false;
    return true;
}

struct NamedCertificateReport {
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool cond, const std::string& what) {
        lines.push_back(std::string(cond ? "ok: " : "FAILED: ") + what);
        if (!cond) ok = false;
    }
};

// The two displayed kernel elements on doubled coordinate sets:
//   V4 (+) V4:  x0 y3 - x1 y2 + x2 y1 - x3 y0            (weight 2, in A_2)
//   V3 (+) V3:  y2(2x0x2 - x1^2) - y1(3x0x3 - x1x2) + y0(3x1x3 - 2x2^2)
//                                                        (weight 1, in A_1)
inline NamedCertificateReport verify_named_certificates() {
    NamedCertificateReport rep;
    {
        FundamentalPair p = direct_sum({basic_pair(4, "x"), basic_pair(4, "y")});
        Polynomial f = Polynomial::parse("x0*y3 - x1*y2 + x2*y1 - x3*y0", p.table);
        rep.check(!f.is_zero(), "V4+V4 element nonzero");
        rep.check(p.D.apply(f).is_zero(), "V4+V4 element killed by D");
        auto w = homogeneous_weight(p, f);
        rep.check(w && *w == 2, "V4+V4 element has weight 2");
        rep.check(p.D.apply(f.scaled(Rational(-7, 3))).is_zero(), "scalar multiple killed by D");
    }
    {
        FundamentalPair p = direct_sum({basic_pair(3, "x"), basic_pair(3, "y")});
        // y2 (2 x0 x2 - x1^2) - y1 (3 x0 x3 - x1 x2) + y0 (3 x1 x3 - 2 x2^2)
        Polynomial f = Polynomial::variable(p.table, 6) * Polynomial::parse("2*x0*x2 - x1^2", p.table) -
                       Polynomial::variable(p.table, 5) * Polynomial::parse("3*x0*x3 - x1*x2", p.table) +
                       Polynomial::variable(p.table, 4) * Polynomial::parse("3*x1*x3 - 2*x2^2", p.table);
        rep.check(!f.is_zero(), "V3+V3 element nonzero");
        rep.check(p.D.apply(f).is_zero(), "V3+V3 element killed by D");
        auto w = homogeneous_weight(p, f);
        rep.check(w && *w == 1, "V3+V3 element has weight 1");
        rep.check(p.D.apply(f.scaled(Rational(5))).is_zero(), "scalar multiple killed by D");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Image membership in a forced graded slice.

// Matrix of the n-th power of the derivation between slices.
inline QMatrix matrix_of_power(const FundamentalPair& p, const Derivation& d, unsigned n,
                               const GradedComponent& source, const GradedComponent& target) {
    QMatrix mat(target.dim(), source.dim());
    for (std::size_t c = 0; c < source.dim(); ++c) {
        Polynomial img =
            d.apply_power(Polynomial::monomial(p.table, source.basis[c], Rational(1)), n);
        for (const auto& t : img.terms()) {
            auto r = target.index_of(t.mono);
            if (!r) throw std::logic_error("power image escapes the expected slice");
            mat.at(*r, c) = t.coeff;
        }
    }
    return mat;
}

// Finds g with D^n g = h (resp. U^n) inside the slice forced by the grading:
// same total degree, weight shifted by -2n (resp. +2n).  Requires h to be
// weight-homogeneous; degree components are solved independently.  Returns
// nullopt when any component is unsolvable.
inline std::optional<Polynomial> solve_image(const FundamentalPair& p, Which which, unsigned n,
                                             const Polynomial& h) {
    require_same_table(h.table(), p.table);
    if (n < 1) throw std::invalid_argument("solve_image: power must be positive");
    if (h.is_zero()) return Polynomial::zero(p.table);
    auto w = homogeneous_weight(p, h);
    if (!w) throw std::invalid_argument("solve_image: input must be weight-homogeneous");

    // split by total degree; the derivations here preserve it
    std::map<int, Polynomial> by_degree;
    for (const auto& t : h.terms()) {
        int deg = t.mono.degree();
        auto it = by_degree.find(deg);
        if (it == by_degree.end()) it = by_degree.emplace(deg, Polynomial::zero(p.table)).first;
        it->second = it->second + Polynomial::monomial(p.table, t.mono, t.coeff);
    }

    const long long source_weight = *w - static_cast<long long>(n) * weight_shift(which);
    Polynomial g = Polynomial::zero(p.table);
    for (const auto& [deg, part] : by_degree) {
        GradedComponent src = graded_component(p, deg, source_weight);
        GradedComponent dst = graded_component(p, deg, *w);
        if (src.dim() == 0) return std::nullopt;
        QMatrix m = matrix_of_power(p, select(p, which), n, src, dst);
        std::vector<Rational> b(dst.dim(), Rational(0));
        for (const auto& t : part.terms()) {
            auto r = dst.index_of(t.mono);
            if (!r) throw std::logic_error("solve_image: right-hand side escapes its slice");
            b[*r] = t.coeff;
        }
        auto sol = solve_particular(m, b);
        if (!sol) return std::nullopt;
        g = g + src.element(p.table, *sol);
    }
    return g;
}

}  // namespace lnd
