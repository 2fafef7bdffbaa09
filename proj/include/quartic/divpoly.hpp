#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "quartic/curve.hpp"
#include "quartic/rational.hpp"

namespace quartic {

// Division polynomials of y^2 = x^3 + a x + b, evaluated as exact integers
// at a fixed integral point (x0, y0).  Standard recurrences:
//
//   psi_1 = 1
//   psi_2 = 2y
//   psi_3 = 3x^4 + 6ax^2 + 12bx - a^2
//   psi_4 = 4y(x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - 8b^2 - a^3)
//   psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3          (m >= 2)
//   psi_{2m}   = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / 2y
//
//   phi_n   = x psi_n^2 - psi_{n+1} psi_{n-1}
//   omega_n = (psi_{n+2} psi_{n-1}^2 - psi_{n-2} psi_{n+1}^2) / 4y
//
// with psi_0 = 0 and psi_{-n} = -psi_n, so psi_{-1} = -1 and
// psi_{-2} = -2y.  Then n(x0, y0) = (phi_n / psi_n^2, omega_n / psi_n^3).
// Every division above must be exact; a remainder signals a bug, and
// exact_div throws rather than truncating.
class DivPolyContext {
  public:
    DivPolyContext(Integer a, Integer b, Integer x0, Integer y0)
        : a_(std::move(a)), b_(std::move(b)), x0_(std::move(x0)),
          y0_(std::move(y0)), two_y_(2 * y0_), four_y_(4 * y0_) {
        Integer rhs = x0_ * x0_ * x0_ + a_ * x0_ + b_;
        if (y0_ * y0_ != rhs)
            throw std::invalid_argument(
                "DivPolyContext: (x0, y0) not on y^2 = x^3 + ax + b");
        // cache_[k] holds psi_{k-2}; seed psi_{-2} .. psi_4
        Integer p2 = two_y_;
        Integer p3 = 3 * fourth_power(x0_) + 6 * a_ * square(x0_) +
                     12 * b_ * x0_ - square(a_);
        Integer p4 =
            four_y_ * (square(x0_) * fourth_power(x0_) +
                       5 * a_ * fourth_power(x0_) +
                       20 * b_ * square(x0_) * x0_ - 5 * square(a_) * square(x0_) -
                       4 * a_ * b_ * x0_ - 8 * square(b_) - a_ * square(a_));
        cache_ = {-p2, Integer(-1), Integer(0), Integer(1), p2, p3, p4};
    }

    // E6 with its generator: a = -36, b = 0, P = (-3, 9).
    static DivPolyContext e6_generator() {
        return DivPolyContext(Integer(-36), Integer(0), Integer(-3), Integer(9));
    }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }
    const Integer& x0() const { return x0_; }
    const Integer& y0() const { return y0_; }

    Integer psi(long n) {
        if (n < -2)
            return -psi_at(-n);
        extend_to(n);
        return cache_[static_cast<size_t>(n + 2)];
    }

    Integer phi(long n) {
        if (n < 1)
            throw std::invalid_argument("phi: n must be positive");
        extend_to(n + 1);
        return x0_ * square(at(n)) - at(n + 1) * at(n - 1);
    }

    Integer omega(long n) {
        if (n < 1)
            throw std::invalid_argument("omega: n must be positive");
        extend_to(n + 2);
        return exact_div(at(n + 2) * square(at(n - 1)) -
                             at(n - 2) * square(at(n + 1)),
                         four_y_);
    }

    // n(x0, y0) from the polynomial values; the curve must be of the
    // congruent-number shape (b = 0, a = -c^2) for the result to be typed
    // as a CurvePoint of that family.
    CurvePoint point(long n) {
        if (n < 1)
            throw std::invalid_argument("point: n must be positive");
        Integer den = psi(n);
        if (sgn(den) == 0)
            throw std::invalid_argument(
                "point: psi_n vanishes, n*(x0,y0) is at infinity");
        return CurvePoint(make_rational(phi(n), square(den)),
                          make_rational(omega(n), den * square(den)));
    }

    // Largest index whose psi value has been computed (for cache tests).
    long cached_up_to() const { return static_cast<long>(cache_.size()) - 3; }

  private:
    const Integer& at(long n) {
        // only valid after extend_to; n >= -2
        return cache_[static_cast<size_t>(n + 2)];
    }

    Integer psi_at(long n) {
        extend_to(n);
        return cache_[static_cast<size_t>(n + 2)];
    }

    void extend_to(long n) {
        for (long k = cached_up_to() + 1; k <= n; ++k) {
            Integer value;
            if (k % 2 == 1) {
                long m = (k - 1) / 2;  // m >= 2 here since k >= 5
                value = at(m + 2) * at(m) * square(at(m)) -
                        at(m - 1) * at(m + 1) * square(at(m + 1));
            } else {
                long m = k / 2;  // m >= 3 here since k >= 6
                value = exact_div(at(m) * (at(m + 2) * square(at(m - 1)) -
                                           at(m - 2) * square(at(m + 1))),
                                  two_y_);
            }
            cache_.push_back(std::move(value));
        }
    }

    Integer a_;
    Integer b_;
    Integer x0_;
    Integer y0_;
    Integer two_y_;
    Integer four_y_;
    std::vector<Integer> cache_;
};

}  // namespace quartic
