#pragma once

// Exact arithmetic for the ground field.  All computation in this library is
// over Q; nothing is ever rounded.  Boost.Multiprecision keeps cpp_rational
// canonical (gcd(num, den) = 1, den > 0), which is exactly the invariant we
// need, so we use it directly instead of rolling our own bignum.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lnd {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

inline Int rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// Prints "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

// Accepts int ('/' uint)?  with an optional leading sign on the numerator.
inline Rational parse_rational(const std::string& text) {
    std::size_t i = 0;
    auto fail = [&](const char* what) -> void { throw parse_error(what, i); };
    if (text.empty()) fail("empty rational literal");
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') start = 1;
    std::size_t slash = text.find('/');
    std::string num = text.substr(0, slash == std::string::npos ? slash : slash);
    if (num.size() <= start) fail("missing digits");
    for (std::size_t k = start; k < num.size(); ++k) {
        i = k;
        if (!std::isdigit(static_cast<unsigned char>(num[k]))) fail("bad digit in numerator");
    }
    Int n(num);
    Int d = 1;
    if (slash != std::string::npos) {
        std::string den = text.substr(slash + 1);
        if (den.empty()) { i = slash + 1; fail("missing denominator"); }
        for (std::size_t k = 0; k < den.size(); ++k) {
            i = slash + 1 + k;
            if (!std::isdigit(static_cast<unsigned char>(den[k]))) fail("bad digit in denominator");
        }
        d = Int(den);
        if (d == 0) { i = slash + 1; fail("zero denominator"); }
    }
    return Rational(n, d);
}

}  // namespace lnd
