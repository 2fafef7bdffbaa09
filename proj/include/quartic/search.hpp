#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "quartic/curve.hpp"
#include "quartic/quartic_map.hpp"
#include "quartic/rational.hpp"

namespace quartic {

// Bounded exhaustive certification, independent of the elliptic-curve
// generator: every solution with all |components| <= bound is found by
// matching the two sides of the equation over precomputed pair sums.

struct SearchReport {
    unsigned long bound = 0;
    std::vector<QuarticTuple> nondegenerate_primitives;  // canonical, sorted
    unsigned long degenerate_count = 0;
    std::chrono::duration<double> elapsed{0};
};

inline bool is_degenerate(const QuarticTuple& t) {
    return sgn(t.X) == 0 || sgn(t.Y) == 0 || sgn(t.U) == 0 || sgn(t.V) == 0;
}

namespace detail {

// sum fits in uint64 for bound <= 2048 with lots of headroom
inline constexpr unsigned long kSearchBoundCap = 2048;

struct PairSum {
    std::uint64_t sum;
    std::uint32_t hi;
    std::uint32_t lo;
};

// orders canonical tuples by largest component, then lexicographically
struct TupleOrder {
    bool operator()(const std::array<std::uint64_t, 4>& a,
                    const std::array<std::uint64_t, 4>& b) const {
        std::uint64_t ma = std::max(a[0], a[2]);
        std::uint64_t mb = std::max(b[0], b[2]);
        if (ma != mb)
            return ma < mb;
        return a < b;
    }
};

}  // namespace detail

// Meet-in-the-middle enumeration: the multisets {X^4 + Y^4 : 0 <= Y <= X <= B}
// and {2(U^4 + V^4) : 0 <= V <= U <= B} are sorted once and swept together,
// O(B^2 log B) instead of four nested loops.  Matches containing a zero
// component are tallied as degenerate; the rest are kept only when primitive
// (componentwise gcd 1), already in canonical orientation by construction.
inline SearchReport enumerate_solutions(unsigned long bound) {
    if (bound < 1)
        throw std::invalid_argument("enumerate_solutions: bound must be >= 1");
    if (bound > detail::kSearchBoundCap)
        throw std::invalid_argument(
            "enumerate_solutions: bound exceeds the pairing-strategy cap");
    auto started = std::chrono::steady_clock::now();

    std::vector<std::uint64_t> pow4(bound + 1);
    for (unsigned long k = 0; k <= bound; ++k) {
        std::uint64_t k2 = static_cast<std::uint64_t>(k) * k;
        pow4[k] = k2 * k2;
    }

    std::vector<detail::PairSum> lhs;
    std::vector<detail::PairSum> rhs;
    lhs.reserve((bound + 1) * (bound + 2) / 2);
    rhs.reserve((bound + 1) * (bound + 2) / 2);
    for (std::uint32_t hi = 0; hi <= bound; ++hi) {
        for (std::uint32_t lo = 0; lo <= hi; ++lo) {
            std::uint64_t s = pow4[hi] + pow4[lo];
            lhs.push_back({s, hi, lo});
            rhs.push_back({2 * s, hi, lo});
        }
    }
    auto by_sum = [](const detail::PairSum& a, const detail::PairSum& b) {
        return a.sum < b.sum;
    };
    std::sort(lhs.begin(), lhs.end(), by_sum);
    std::sort(rhs.begin(), rhs.end(), by_sum);

    std::set<std::array<std::uint64_t, 4>, detail::TupleOrder> primitives;
    std::set<std::array<std::uint64_t, 4>, detail::TupleOrder> degenerate;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < lhs.size() && j < rhs.size()) {
        if (lhs[i].sum < rhs[j].sum) {
            ++i;
        } else if (rhs[j].sum < lhs[i].sum) {
            ++j;
        } else {
            std::uint64_t s = lhs[i].sum;
            std::size_t i_end = i;
            while (i_end < lhs.size() && lhs[i_end].sum == s)
                ++i_end;
            std::size_t j_end = j;
            while (j_end < rhs.size() && rhs[j_end].sum == s)
                ++j_end;
            for (std::size_t a = i; a < i_end; ++a) {
                for (std::size_t b = j; b < j_end; ++b) {
                    std::array<std::uint64_t, 4> t = {lhs[a].hi, lhs[a].lo,
                                                      rhs[b].hi, rhs[b].lo};
                    if (t[0] == 0 || t[1] == 0 || t[2] == 0 || t[3] == 0) {
                        degenerate.insert(t);
                        continue;
                    }
                    std::uint64_t g = std::gcd(std::gcd(t[0], t[1]),
                                               std::gcd(t[2], t[3]));
                    if (g == 1)
                        primitives.insert(t);
                }
            }
            i = i_end;
            j = j_end;
        }
    }

    SearchReport report;
    report.bound = bound;
    report.degenerate_count = degenerate.size();
    for (const auto& t : primitives) {
        QuarticTuple tuple{Integer(static_cast<unsigned long>(t[0])),
                           Integer(static_cast<unsigned long>(t[1])),
                           Integer(static_cast<unsigned long>(t[2])),
                           Integer(static_cast<unsigned long>(t[3]))};
        if (!verify(tuple))
            throw std::logic_error("enumerate_solutions: emitted tuple fails");
        report.nondegenerate_primitives.push_back(std::move(tuple));
    }
    report.elapsed = std::chrono::steady_clock::now() - started;
    return report;
}

// ---------------------------------------------------------------------------
// Congruent-number witness: a point with y != 0 on E_n yields a rational
// right triangle of area exactly n, the classical constructive direction.
// ---------------------------------------------------------------------------

struct RationalTriangle {
    Rational leg_a;
    Rational leg_b;
    Rational hypotenuse;
};

inline RationalTriangle triangle_from_point(const CurvePoint& pt,
                                            const Integer& n) {
    if (sgn(n) <= 0)
        throw std::invalid_argument("triangle_from_point: n must be positive");
    CongruentCurve curve(n);
    if (pt.is_infinity() || !on_curve(pt, curve))
        throw std::invalid_argument(
            "triangle_from_point: need an affine point on E_n");
    if (sgn(numerator(pt.y())) == 0)
        throw std::invalid_argument("triangle_from_point: 2-torsion input");

    const Rational& x = pt.x();
    Rational y_abs = abs(pt.y());
    Rational nsq(square(n));
    RationalTriangle tri{abs(x * x - nsq) / y_abs,
                         abs(2 * Rational(n) * x) / y_abs,
                         (x * x + nsq) / y_abs};
    Rational aa = tri.leg_a * tri.leg_a;
    Rational bb = tri.leg_b * tri.leg_b;
    if (aa + bb != tri.hypotenuse * tri.hypotenuse)
        throw std::logic_error("triangle_from_point: not a right triangle");
    if (tri.leg_a * tri.leg_b != 2 * Rational(n))
        throw std::logic_error("triangle_from_point: area is not n");
    return tri;
}

}  // namespace quartic
