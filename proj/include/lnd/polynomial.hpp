#pragma once

// Immutable multivariate polynomials over Q with a dense exponent
// representation.  Terms are kept sorted in strictly descending degrevlex
// order with no zero coefficients, so the leading term is terms()[0] and
// equality is plain structural equality.
//
// Text format (used by the parser, the printer and the CLI):
//
//   expr   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := ident ('^' uint)?
//   coeff  := int ('/' uint)?
//
// Whitespace is insignificant.  The printer emits terms in descending
// monomial order, factors in ascending variable order, omits unit
// coefficients and ^1 exponents, and writes a leading '-' for a negative
// first coefficient; the parser additionally accepts that optional sign
// before the first term, a strict superset of the grammar above.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lnd/monomial.hpp"
#include "lnd/rational.hpp"
#include "lnd/vartable.hpp"

namespace lnd {

class Polynomial {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
        bool operator==(const Term& o) const { return coeff == o.coeff && mono == o.mono; }
    };

    Polynomial() = default;
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {
        if (!table_) throw std::invalid_argument("null variable table");
    }

    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }

    static Polynomial constant(VarTablePtr table, Rational c) {
        Polynomial p(std::move(table));
        if (c != 0) p.terms_.push_back({Monomial(p.table_->size()), std::move(c)});
        return p;
    }

    static Polynomial variable(VarTablePtr table, std::size_t i) {
        Polynomial p(table);
        if (i >= table->size()) throw std::out_of_range("variable index out of range");
        p.terms_.push_back({Monomial::unit(table->size(), i), Rational(1)});
        return p;
    }

    static Polynomial monomial(VarTablePtr table, Monomial m, Rational c) {
        Polynomial p(table);
        if (m.nvars() != table->size()) throw std::invalid_argument("monomial arity mismatch");
        if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    const VarTablePtr& table() const { return table_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
        return terms_.front();
    }

    // -1 for the zero polynomial (which has degree -infinity).
    int total_degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    Rational coeff_of(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.mono == m) return t.coeff;
        return Rational(0);
    }

    bool operator==(const Polynomial& p) const {
        return same_table(table_, p.table_) && terms_ == p.terms_;
    }
    bool operator!=(const Polynomial& p) const { return !(*this == p); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_table(table_, o.table_);
        Polynomial r(table_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            if (terms_[i].mono == o.terms_[j].mono) {
                Rational c = terms_[i].coeff + o.terms_[j].coeff;
                if (c != 0) r.terms_.push_back({terms_[i].mono, std::move(c)});
                ++i, ++j;
            } else if (degrevlex_greater(terms_[i].mono, o.terms_[j].mono)) {
                r.terms_.push_back(terms_[i++]);
            } else {
                r.terms_.push_back(o.terms_[j++]);
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        require_same_table(table_, o.table_);
        std::map<Monomial, Rational, DegrevlexGreater> acc;
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) acc[a.mono.times(b.mono)] += a.coeff * b.coeff;
        Polynomial r(table_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) r.terms_.push_back({m, std::move(c)});
        return r;
    }

    Polynomial scaled(const Rational& c) const {
        if (c == 0) return zero(table_);
        Polynomial r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    Polynomial times_monomial(const Monomial& m, const Rational& c) const {
        if (c == 0) return zero(table_);
        Polynomial r = *this;
        for (auto& t : r.terms_) {
            t.mono = t.mono.times(m);
            t.coeff *= c;
        }
        return r;  // multiplying by a fixed monomial preserves the order
    }

    Polynomial pow(unsigned n) const {
        Polynomial r = constant(table_, Rational(1));
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(table_);
        for (const auto& t : terms_) {
            int e = t.mono.exp(var);
            if (e == 0) continue;
            auto exps = t.mono.exps();
            exps[var] -= 1;
            r.terms_.push_back({Monomial(std::move(exps)), t.coeff * e});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return degrevlex_greater(a.mono, b.mono); });
        return r;
    }

    // Ring homomorphism determined by variable images (which live in `target`).
    Polynomial substitute(const VarTablePtr& target, const std::vector<Polynomial>& images) const {
        if (images.size() != table_->size())
            throw std::invalid_argument("substitute: one image per variable required");
        // cache powers of each image that actually occur
        std::vector<std::vector<Polynomial>> powers(images.size());
        Polynomial acc = zero(target);
        for (const auto& t : terms_) {
            Polynomial prod = constant(target, t.coeff);
            for (std::size_t i = 0; i < images.size(); ++i) {
                int e = t.mono.exp(i);
                if (e == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(target, Rational(1)));
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
                prod = prod * pw[e];
            }
            acc = acc + prod;
        }
        return acc;
    }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (point.size() != table_->size())
            throw std::invalid_argument("evaluate: one value per variable required");
        Rational acc = 0;
        for (const auto& t : terms_) {
            Rational prod = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (int k = 0; k < t.mono.exp(i); ++k) prod *= point[i];
            acc += prod;
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coeff;
            if (first) {
                if (c < 0) {
                    out << "-";
                    c = -c;
                }
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            bool unit = (c == 1);
            if (!unit || t.mono.is_one()) out << rat_to_string(c);
            bool star = !unit && !t.mono.is_one();
            for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
                int e = t.mono.exp(i);
                if (e == 0) continue;
                if (star) out << "*";
                out << table_->name(i);
                if (e > 1) out << "^" << e;
                star = true;
            }
        }
        return out.str();
    }

    static Polynomial parse(const std::string& text, const VarTablePtr& table);

  private:
    VarTablePtr table_;
    std::vector<Term> terms_;
};

namespace detail {

class PolyParser {
  public:
    PolyParser(const std::string& text, VarTablePtr table)
        : text_(text), table_(std::move(table)) {}

    Polynomial run() {
        Polynomial acc = Polynomial::zero(table_);
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') sign = (take() == '-') ? -1 : 1;
        acc = acc + parse_term(sign);
        skip_ws();
        while (pos_ < text_.size()) {
            char op = take();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            acc = acc + parse_term(op == '-' ? -1 : 1);
            skip_ws();
        }
        return acc;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }

    Polynomial parse_term(int sign) {
        skip_ws();
        Rational coeff(sign);
        Monomial mono(table_->size());
        bool saw_anything = false;
        char c = peek();
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            coeff *= parse_coeff();
            saw_anything = true;
        } else {
            parse_factor(mono);
            saw_anything = true;
        }
        skip_ws();
        while (peek() == '*') {
            take();
            parse_factor(mono);
            skip_ws();
        }
        if (!saw_anything) fail("empty term");
        return Polynomial::monomial(table_, std::move(mono), std::move(coeff));
    }

    Rational parse_coeff() {
        skip_ws();
        std::size_t start = pos_;
        if (peek() == '+' || peek() == '-') ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        Int num(text_.substr(start, pos_ - start));
        Int den = 1;
        if (peek() == '/') {
            take();
            std::size_t dstart = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator digits");
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            den = Int(text_.substr(dstart, pos_ - dstart));
            if (den == 0) fail("zero denominator");
        }
        return Rational(num, den);
    }

    void parse_factor(Monomial& mono) {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected variable name");
        std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto idx = table_->find(name);
        if (!idx) { pos_ = start; fail("unknown variable '" + name + "'"); }
        int power = 1;
        if (peek() == '^') {
            take();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent digits");
            std::size_t estart = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            power = std::stoi(text_.substr(estart, pos_ - estart));
        }
        auto exps = mono.exps();
        exps[*idx] += power;
        mono = Monomial(std::move(exps));
    }

    const std::string& text_;
    VarTablePtr table_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial Polynomial::parse(const std::string& text, const VarTablePtr& table) {
    return detail::PolyParser(text, table).run();
}

}  // namespace lnd
