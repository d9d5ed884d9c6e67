#pragma once

// Dense exponent vectors and the graded reverse lexicographic order.
//
// Variables are ordered by index: x_{N-1} > ... > x_1 > x_0.  Under degrevlex
// u > v iff deg u > deg v, or degrees tie and the last nonzero coordinate of
// exp(u) - exp(v), reading from the largest variable down to the smallest, is
// negative.  Equivalently: scanning exp(u) - exp(v) upward from index 0, the
// first nonzero entry is negative.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lnd {

class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("negative exponent");
    }

    std::size_t nvars() const { return e_.size(); }
    int exp(std::size_t i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }

    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

    bool is_one() const {
        for (int x : e_)
            if (x) return false;
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // this / o; caller must ensure o.divides(*this).
    Monomial divided_by(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= o.e_[i];
            if (r.e_[i] < 0) throw std::invalid_argument("non-divisible monomial quotient");
        }
        return r;
    }

    Monomial lcm_with(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    // u = (squarefree part) * (square part), square part = prod x_i^(2*floor(e_i/2)).
    Monomial squarefree_part() const {
        Monomial r = *this;
        for (auto& x : r.e_) x %= 2;
        return r;
    }

    // The "half" m with u = m^2 * squarefree_part: exponents floor(e_i/2).
    Monomial half_of_square_part() const {
        Monomial r = *this;
        for (auto& x : r.e_) x /= 2;
        return r;
    }

    static Monomial unit(std::size_t nvars, std::size_t i, int power = 1) {
        Monomial r(nvars);
        r.e_[i] = power;
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

  private:
    std::vector<int> e_;
};

// true iff a < b in degrevlex.
inline bool degrevlex_less(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials from different rings");
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        int diff = a.exp(i) - b.exp(i);
        if (diff != 0) return diff > 0;  // first nonzero from the smallest variable: positive means smaller
    }
    return false;
}

inline bool degrevlex_greater(const Monomial& a, const Monomial& b) { return degrevlex_less(b, a); }

struct DegrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(b, a); }
};

struct DegrevlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_less(a, b); }
};

}  // namespace lnd
