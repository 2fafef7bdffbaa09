#pragma once

#include <stdexcept>
#include <utility>

#include "quartic/rational.hpp"

namespace quartic {

// The congruent-number family E_c : y^2 = x^3 - c^2 x over Q, exact affine
// arithmetic only.  The main pipeline runs on c = 6 with generator (-3, 9).

struct CongruentCurve {
    Integer c;

    explicit CongruentCurve(Integer constant) : c(std::move(constant)) {
        if (sgn(c) == 0)
            throw std::invalid_argument("CongruentCurve: c must be nonzero");
        // discriminant of x^3 - c^2 x is 64 c^6, nonzero whenever c is
        Integer disc = 64 * fourth_power(c) * square(c);
        if (sgn(disc) == 0)
            throw std::logic_error("CongruentCurve: vanishing discriminant");
    }

    Integer c_squared() const { return c * c; }
};

inline CongruentCurve e6() { return CongruentCurve(Integer(6)); }

// Affine rational point or the point at infinity (the group identity).
class CurvePoint {
  public:
    CurvePoint(Rational x, Rational y)
        : x_(std::move(x)), y_(std::move(y)), infinity_(false) {}

    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return infinity_; }

    const Rational& x() const {
        require_affine();
        return x_;
    }

    const Rational& y() const {
        require_affine();
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity_ || b.infinity_)
            return a.infinity_ && b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

  private:
    CurvePoint() : infinity_(true) {}

    void require_affine() const {
        if (infinity_)
            throw std::logic_error("CurvePoint: no coordinates at infinity");
    }

    Rational x_;
    Rational y_;
    bool infinity_;
};

inline bool on_curve(const CurvePoint& pt, const CongruentCurve& curve) {
    if (pt.is_infinity())
        return true;
    const Rational& x = pt.x();
    const Rational& y = pt.y();
    return y * y == x * x * x - Rational(curve.c_squared()) * x;
}

inline CurvePoint negate(const CurvePoint& pt) {
    if (pt.is_infinity())
        return pt;
    return CurvePoint(pt.x(), -pt.y());
}

// True for the identity and the three points with y = 0 (x in {0, c, -c}).
inline bool is_two_torsion(const CurvePoint& pt, const CongruentCurve& curve) {
    if (!on_curve(pt, curve))
        throw std::invalid_argument("is_two_torsion: point not on curve");
    return pt.is_infinity() || sgn(numerator(pt.y())) == 0;
}

// Chord-tangent addition.  Both inputs are validated; feeding garbage into
// the group law would silently corrupt every tuple generated downstream.
inline CurvePoint add(const CurvePoint& p, const CurvePoint& q,
                      const CongruentCurve& curve) {
    if (!on_curve(p, curve) || !on_curve(q, curve))
        throw std::invalid_argument("add: point not on curve");
    if (p.is_infinity())
        return q;
    if (q.is_infinity())
        return p;

    const Rational& x1 = p.x();
    const Rational& y1 = p.y();
    const Rational& x2 = q.x();
    const Rational& y2 = q.y();

    Rational slope;
    if (x1 == x2) {
        if (y1 == -y2)
            return CurvePoint::infinity();  // inverse pair, includes y = 0
        slope = (3 * x1 * x1 - Rational(curve.c_squared())) / (2 * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = slope * slope - x1 - x2;
    Rational y3 = slope * (x1 - x3) - y1;
    return CurvePoint(std::move(x3), std::move(y3));
}

// Left-to-right double-and-add; n >= 1.
inline CurvePoint scalar_mul(unsigned long n, const CurvePoint& p,
                             const CongruentCurve& curve) {
    if (n == 0)
        throw std::invalid_argument("scalar_mul: n must be positive");
    if (!on_curve(p, curve))
        throw std::invalid_argument("scalar_mul: point not on curve");
    int top = 63;
    while (top > 0 && !((n >> top) & 1ul))
        --top;
    CurvePoint acc = p;
    for (int bit = top - 1; bit >= 0; --bit) {
        acc = add(acc, acc, curve);
        if ((n >> bit) & 1ul)
            acc = add(acc, p, curve);
    }
    return acc;
}

}  // namespace quartic
