#pragma once

// k-linear derivations of a polynomial ring, given by the images of the
// variables.  apply() extends by the Leibniz rule; everything else (brackets,
// nilpotency chains, exponential flows) is built on top of apply().

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/polynomial.hpp"

namespace lnd {

struct nilpotency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Derivation {
  public:
    Derivation(VarTablePtr table, std::vector<Polynomial> images)
        : table_(std::move(table)), images_(std::move(images)) {
        if (images_.size() != table_->size())
            throw std::invalid_argument("derivation needs one image per variable");
        for (const auto& p : images_) require_same_table(p.table(), table_);
    }

    static Derivation zero(VarTablePtr table) {
        std::vector<Polynomial> imgs(table->size(), Polynomial::zero(table));
        return Derivation(std::move(table), std::move(imgs));
    }

    const VarTablePtr& table() const { return table_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(std::size_t i) const { return images_.at(i); }

    bool is_zero() const {
        for (const auto& p : images_)
            if (!p.is_zero()) return false;
        return true;
    }

    // Largest total degree among variable images; 0 for the zero derivation.
    int max_image_degree() const {
        int d = 0;
        for (const auto& p : images_) d = std::max(d, p.total_degree());
        return std::max(d, 0);
    }

    Polynomial apply(const Polynomial& f) const {
        require_same_table(f.table(), table_);
        Polynomial acc = Polynomial::zero(table_);
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (images_[i].is_zero()) continue;
            Polynomial df = f.derivative(i);
            if (!df.is_zero()) acc = acc + df * images_[i];
        }
        return acc;
    }

    Polynomial apply_power(const Polynomial& f, unsigned n) const {
        Polynomial g = f;
        for (unsigned i = 0; i < n && !g.is_zero(); ++i) g = apply(g);
        return g;
    }

    Derivation operator+(const Derivation& o) const {
        require_same_table(table_, o.table_);
        std::vector<Polynomial> imgs;
        imgs.reserve(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) imgs.push_back(images_[i] + o.images_[i]);
        return Derivation(table_, std::move(imgs));
    }

    Derivation scaled(const Rational& c) const {
        std::vector<Polynomial> imgs;
        imgs.reserve(images_.size());
        for (const auto& p : images_) imgs.push_back(p.scaled(c));
        return Derivation(table_, std::move(imgs));
    }

    bool operator==(const Derivation& o) const {
        return same_table(table_, o.table_) && images_ == o.images_;
    }

  private:
    VarTablePtr table_;
    std::vector<Polynomial> images_;
};

// [A, B] = A.B - B.A, again a derivation, determined by its values on the
// variables.
inline Derivation bracket(const Derivation& a, const Derivation& b) {
    require_same_table(a.table(), b.table());
    std::vector<Polynomial> imgs;
    imgs.reserve(a.images().size());
    for (std::size_t i = 0; i < a.images().size(); ++i)
        imgs.push_back(a.apply(b.image(i)) - b.apply(a.image(i)));
    return Derivation(a.table(), std::move(imgs));
}

// Iteration cap used by nilpotency chains and exponential flows when the
// caller does not pass one.
inline unsigned default_nilpotency_cap(const Derivation& d, const Polynomial& f) {
    const int fd = std::max(f.total_degree(), 0);
    return 4u * static_cast<unsigned>(fd + 1) * static_cast<unsigned>(d.max_image_degree() + 1);
}

struct NilpotencyReport {
    bool detected = false;
    unsigned degree = 0;                // max n with D^n f != 0, valid iff detected
    std::vector<Polynomial> chain;      // f, Df, ..., D^degree f (nonzero entries only)
    unsigned cap = 0;
};

// deg_D f for nonzero f.  If D^k f is still nonzero after `cap` applications
// the report says so instead of looping forever.
inline NilpotencyReport nilpotency_degree(const Derivation& d, const Polynomial& f,
                                          unsigned cap = 0) {
    if (f.is_zero()) throw std::invalid_argument("nilpotency degree of the zero polynomial is undefined");
    NilpotencyReport rep;
    rep.cap = cap ? cap : default_nilpotency_cap(d, f);
    rep.chain.push_back(f);
    for (unsigned k = 0; k < rep.cap; ++k) {
        Polynomial next = d.apply(rep.chain.back());
        if (next.is_zero()) {
            rep.detected = true;
            rep.degree = k;
            return rep;
        }
        rep.chain.push_back(std::move(next));
    }
    return rep;  // not detected within cap
}

// exp(tD) f = sum_n t^n D^n f / n!.  Throws if D does not annihilate f within
// the cap, since the sum would not be polynomial.
inline Polynomial exp_apply(const Derivation& d, const Rational& t, const Polynomial& f,
                            unsigned cap = 0) {
    if (!cap) cap = default_nilpotency_cap(d, f);
    Polynomial acc = f;
    Polynomial dn = f;
    Rational fact = 1;
    Rational tn = 1;
    for (unsigned n = 1; !dn.is_zero(); ++n) {
        if (n > cap)
            throw nilpotency_error("exp_apply: derivation not locally nilpotent on input within cap " +
                                   std::to_string(cap));
        dn = d.apply(dn);
        fact *= n;
        tn *= t;
        if (!dn.is_zero()) acc = acc + dn.scaled(tn / fact);
    }
    return acc;
}

}  // namespace lnd
