#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quartic {

// Exact arithmetic used everywhere: arbitrary-precision integers and
// always-normalized fractions (denominator > 0, gcd(num, den) = 1).
// GMP keeps mpq_class canonical through arithmetic; raw constructions
// go through make_rational below.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline bool is_normalized(const Rational& q) {
    return sgn(q.get_den()) > 0 && gcd(q.get_num(), q.get_den()) == 1;
}

// Quotient num/den, failing loudly if the division is not exact.  The
// division-polynomial recurrences rely on this: a nonzero remainder there
// is an implementation bug, never valid data.
inline Integer exact_div(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw std::logic_error("exact_div: division by zero");
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0)
        throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

// Integer square root of a perfect square; throws on non-squares.
inline Integer isqrt_exact(const Integer& n) {
    if (sgn(n) < 0)
        throw std::logic_error("isqrt_exact: negative argument");
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (sgn(rem) != 0)
        throw std::logic_error("isqrt_exact: not a perfect square");
    return root;
}

inline Integer square(const Integer& n) { return n * n; }

inline Integer fourth_power(const Integer& n) {
    Integer s = n * n;
    return s * s;
}

// Strict decimal parser: optional leading '-', then digits only.  GMP's own
// string constructor tolerates whitespace, which is too loose for CLI input.
inline std::optional<Integer> parse_integer(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    std::string_view digits = text;
    if (digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty())
        return std::nullopt;
    for (char ch : digits)
        if (ch < '0' || ch > '9')
            return std::nullopt;
    if (digits.size() > 1 && digits.front() == '0')
        return std::nullopt;
    return Integer(std::string(text), 10);
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace quartic
