#pragma once

// Minimal Buchberger engine under degrevlex: reduced Groebner bases and
// normal forms, sized for ideal-membership checks in at most a dozen
// variables.  Not a general-purpose CAS.

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

struct GroebnerGuards {
    std::size_t max_vars = 12;
    std::size_t max_basis = 500;
    int max_degree = 20;
};

struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// One full division pass: returns the remainder of f modulo the basis, no
// term of which is divisible by any basis leading monomial.
inline Polynomial normal_form_impl(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial rem = f.table() ? Polynomial::zero(f.table()) : Polynomial();
    Polynomial work = f;
    while (!work.is_zero()) {
        const auto& lt = work.leading_term();
        bool reduced = false;
        for (const auto& g : basis) {
            const auto& glt = g.leading_term();
            if (glt.mono.divides(lt.mono)) {
                work = work - g.times_monomial(lt.mono.divided_by(glt.mono), lt.coeff / glt.coeff);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem = rem + Polynomial::monomial(work.table(), lt.mono, lt.coeff);
            work = work - Polynomial::monomial(work.table(), lt.mono, lt.coeff);
        }
    }
    return rem;
}

}  // namespace detail

class IdealBasis {
public:
    IdealBasis(std::vector<Polynomial> generators, GroebnerGuards guards = {})
        : generators_(std::move(generators)), guards_(guards) {
        for (const auto& g : generators_) {
            if (!g.table()) throw std::invalid_argument("generator without a variable table");
            if (table_)
                require_same_table(table_, g.table());
            else
                table_ = g.table();
        }
        if (!table_) throw std::invalid_argument("ideal needs at least one generator");
        if (table_->size() > guards_.max_vars)
            throw guard_error("ideal in " + std::to_string(table_->size()) +
                              " variables exceeds the guard of " + std::to_string(guards_.max_vars));
        compute();
    }

    const VarTablePtr& table() const { return table_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<Polynomial>& groebner() const { return basis_; }

    Polynomial normal_form(const Polynomial& f) const {
        require_same_table(f.table(), table_);
        return detail::normal_form_impl(f, basis_);
    }

    bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

    // proper ideal <=> 1 does not reduce to 0 <=> no constant in the basis
    bool is_proper() const {
        return !contains(Polynomial::constant(table_, Rational(1)));
    }

private:
    void check_degree(const Polynomial& f) const {
        if (f.total_degree() > guards_.max_degree)
            throw guard_error("S-polynomial reduction reached degree " +
                              std::to_string(f.total_degree()) + ", above the guard of " +
                              std::to_string(guards_.max_degree));
    }

    void compute() {
        // seed with monic nonzero generators, in input order
        for (const auto& g : generators_) {
            if (g.is_zero()) continue;
            check_degree(g);
            basis_.push_back(g.scaled(Rational(1) / g.leading_term().coeff));
        }

        struct Pair {
            std::size_t i, j;
            int lcm_degree;
            std::size_t seq;
        };
        std::deque<Pair> queue;
        std::size_t seq = 0;
        auto push_pairs_with = [&](std::size_t j) {
            for (std::size_t i = 0; i < j; ++i)
                queue.push_back(Pair{i, j,
                                     basis_[i].leading_term().mono.lcm_with(
                                         basis_[j].leading_term().mono).degree(),
                                     seq++});
        };
        for (std::size_t j = 0; j < basis_.size(); ++j) push_pairs_with(j);

        auto pop_best = [&]() {
            auto best = queue.begin();
            for (auto it = queue.begin(); it != queue.end(); ++it)
                if (it->lcm_degree < best->lcm_degree ||
                    (it->lcm_degree == best->lcm_degree && it->seq < best->seq))
                    best = it;
            Pair p = *best;
            queue.erase(best);
            return p;
        };

        while (!queue.empty()) {
            Pair pr = pop_best();
            const Polynomial& f = basis_[pr.i];
            const Polynomial& g = basis_[pr.j];
            const Monomial& fm = f.leading_term().mono;
            const Monomial& gm = g.leading_term().mono;
            if (fm.coprime_with(gm)) continue;  // first Buchberger criterion
            Monomial lcm = fm.lcm_with(gm);
            Polynomial s = f.times_monomial(lcm.divided_by(fm), Rational(1)) -
                           g.times_monomial(lcm.divided_by(gm), Rational(1));
            Polynomial r = detail::normal_form_impl(s, basis_);
            if (r.is_zero()) continue;
            check_degree(r);
            r = r.scaled(Rational(1) / r.leading_term().coeff);
            basis_.push_back(std::move(r));
            if (basis_.size() > guards_.max_basis)
                throw guard_error("basis grew past the guard of " +
                                  std::to_string(guards_.max_basis) + " elements");
            push_pairs_with(basis_.size() - 1);
        }

        interreduce();
    }

    void interreduce() {
        // drop elements whose leading monomial is divisible by another's
        std::vector<Polynomial> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Monomial& mi = basis_[i].leading_term().mono;
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j) continue;
                const Monomial& mj = basis_[j].leading_term().mono;
                if (mj.divides(mi) && !(mj == mi && j > i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(basis_[i]);
        }
        // fully reduce each survivor against the others
        std::vector<Polynomial> reduced;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<Polynomial> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            Polynomial r = detail::normal_form_impl(kept[i], others);
            if (!r.is_zero()) reduced.push_back(r.scaled(Rational(1) / r.leading_term().coeff));
        }
        std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
            return degrevlex_less(b.leading_term().mono, a.leading_term().mono);
        });
        basis_ = std::move(reduced);
    }

    VarTablePtr table_;
    std::vector<Polynomial> generators_;
    GroebnerGuards guards_;
    std::vector<Polynomial> basis_;
};

}  // namespace lnd
