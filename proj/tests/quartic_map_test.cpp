#include <gtest/gtest.h>

#include <random>

#include "quartic/curve.hpp"
#include "quartic/divpoly.hpp"
#include "quartic/quartic_map.hpp"

using namespace quartic;

namespace {

Rational rat(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

CurvePoint generator() { return CurvePoint(rat(-3), rat(9)); }

QuarticTuple tuple(long x, long y, long u, long v) {
    return QuarticTuple{Integer(x), Integer(y), Integer(u), Integer(v)};
}

QuarticTuple scaled(const QuarticTuple& t, const Integer& k) {
    return QuarticTuple{k * t.X, k * t.Y, k * t.U, k * t.V};
}

CurvePoint nth_point(unsigned long n) {
    return scalar_mul(n, generator(), e6());
}

}  // namespace

TEST(Substitution, AtGenerator) {
    SubstitutionTriple s = substitution_from_point(generator());
    EXPECT_EQ(s.t, rat(9));
    EXPECT_EQ(s.v, rat(-63));
    EXPECT_EQ(s.u, rat(180));
}

TEST(Substitution, RationalSolutionAtDouble) {
    SubstitutionTriple s = substitution_from_point(nth_point(2));
    // (U+t, U-t, U, V) satisfies the quartic over Q; recheck here
    auto fourth = [](const Rational& r) -> Rational {
        Rational sq = r * r;
        return sq * sq;
    };
    EXPECT_EQ(fourth(s.u + s.t) + fourth(s.u - s.t),
              2 * (fourth(s.u) + fourth(s.v)));
}

TEST(Substitution, RejectsTwoTorsionAndInfinity) {
    EXPECT_THROW(substitution_from_point(CurvePoint(rat(0), rat(0))),
                 std::invalid_argument);
    EXPECT_THROW(substitution_from_point(CurvePoint::infinity()),
                 std::invalid_argument);
}

TEST(DifferenceTripleMap, ForwardAtGenerator) {
    DifferenceTriple d = difference_triple_from_point(generator(), e6());
    EXPECT_EQ(d.X, rat(-63));
    EXPECT_EQ(d.Y, rat(9));
    EXPECT_EQ(d.Z, rat(1620));
    // (-63)^4 - 9^4 = 15746400 = 6 * 1620^2
    EXPECT_EQ(fourth_power(Integer(-63)) - fourth_power(Integer(9)), 15746400);
    EXPECT_EQ(6 * square(Integer(1620)), 15746400);
}

TEST(DifferenceTripleMap, ForwardRejectsTwoTorsion) {
    EXPECT_THROW(difference_triple_from_point(CurvePoint(rat(0), rat(0)), e6()),
                 std::invalid_argument);
}

// The x^2 + 2cx - c^2 first component closes the identity
//   X^4 - Y^4 = 16 c (x^3 - c^2 x)(x^2 + c^2)^2
// for every integer x; with the cx coefficient it already fails at x = -3.
TEST(DifferenceTripleMap, QuarticIdentityHoldsForRandomX) {
    std::mt19937_64 rng(20240819);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int i = 0; i < 100; ++i) {
        Integer x(dist(rng));
        Integer lhs = fourth_power(x * x + 12 * x - 36) -
                      fourth_power(x * x - 12 * x - 36);
        Integer rhs = 96 * (x * x * x - 36 * x) * square(x * x + 36);
        EXPECT_EQ(lhs, rhs) << "x=" << x;
    }
}

TEST(DifferenceTripleMap, UncorrectedFormFailsAtMinusThree) {
    Integer x(-3);
    Integer printed = fourth_power(x * x + 6 * x - 36) -
                      fourth_power(x * x - 12 * x - 36);
    Integer rhs = 96 * (x * x * x - 36 * x) * square(x * x + 36);
    EXPECT_NE(printed, rhs);
    EXPECT_EQ(printed - rhs, -11652336);  // pinned gap
}

TEST(DifferenceTripleMap, BackwardExamples) {
    CongruentCurve curve = e6();
    CurvePoint pt = point_from_difference_triple(Integer(-63), Integer(9),
                                                 Integer(1620), curve);
    EXPECT_TRUE(on_curve(pt, curve));
    EXPECT_EQ(pt, CurvePoint(rat(-6, 49), rat(-720, 343)));

    EXPECT_THROW(point_from_difference_triple(Integer(3), Integer(3),
                                              Integer(0), curve),
                 std::invalid_argument);
    EXPECT_THROW(point_from_difference_triple(Integer(1), Integer(1),
                                              Integer(1), curve),
                 std::invalid_argument);
    EXPECT_THROW(point_from_difference_triple(Integer(0), Integer(1),
                                              Integer(1), curve),
                 std::invalid_argument);
}

TEST(DifferenceTripleMap, BackwardLandsOnCurveForForwardOutputs) {
    CongruentCurve curve = e6();
    for (unsigned long k = 1; k <= 5; ++k) {
        DifferenceTriple d = difference_triple_from_point(nth_point(k), curve);
        // clear denominators: (X, Y, Z) -> (mX, mY, m^2 Z) keeps the relation
        Integer m = denominator(d.X) * denominator(d.Y) * denominator(d.Z);
        Integer X = numerator(d.X * Rational(m));
        Integer Y = numerator(d.Y * Rational(m));
        Integer Z = numerator(d.Z * Rational(m * m));
        CurvePoint back = point_from_difference_triple(X, Y, Z, curve);
        EXPECT_TRUE(on_curve(back, curve)) << "k=" << k;
    }
}

TEST(TupleFromTriple, Examples) {
    QuarticTuple t1 = tuple_from_triple(
        NumeratorTriple{Integer(-3), Integer(9), Integer(1)});
    EXPECT_EQ(t1, tuple(1701, 1539, 1620, -567));

    QuarticTuple t2 = tuple_from_triple(
        NumeratorTriple{Integer(25), Integer(-35), Integer(2)});
    EXPECT_EQ(t2, tuple(988521, -1661081, -336280, -1437599));

    // homogeneity with weight 9: (b, w, e) -> (81 b, 729 w, 9 e)
    QuarticTuple t2big = tuple_from_triple(
        NumeratorTriple{Integer(2025), Integer(-25515), Integer(18)});
    Integer nine8 = fourth_power(square(Integer(9)));
    EXPECT_EQ(t2big, scaled(t2, nine8));
}

TEST(TupleFromTriple, RejectsInvalidTriples) {
    EXPECT_THROW(
        tuple_from_triple(NumeratorTriple{Integer(1), Integer(1), Integer(1)}),
        std::invalid_argument);
    EXPECT_THROW(
        tuple_from_triple(NumeratorTriple{Integer(-3), Integer(9), Integer(0)}),
        std::invalid_argument);
}

TEST(TripleFromPoint, Examples) {
    NumeratorTriple tr1 = triple_from_point(generator());
    EXPECT_EQ(tr1.b, -3);
    EXPECT_EQ(tr1.w, 9);
    EXPECT_EQ(tr1.e, 1);

    NumeratorTriple tr2 = triple_from_point(nth_point(2));
    EXPECT_EQ(tr2.b, 25);
    EXPECT_EQ(tr2.w, -35);
    EXPECT_EQ(tr2.e, 2);

    NumeratorTriple tr3 = triple_from_point(nth_point(3));
    EXPECT_TRUE(homogenized_relation_holds(tr3));
    EXPECT_GT(sgn(tr3.e), 0);
    Integer g = gcd(tr3.b, tr3.e);
    EXPECT_EQ(g, 1);
}

TEST(TripleFromPoint, RejectsTorsion) {
    EXPECT_THROW(triple_from_point(CurvePoint(rat(0), rat(0))),
                 std::invalid_argument);
    EXPECT_THROW(triple_from_point(CurvePoint::infinity()),
                 std::invalid_argument);
}

TEST(ReducePrimitive, Examples) {
    auto [p1, d1] = reduce_primitive(tuple(1701, 1539, 1620, -567));
    EXPECT_EQ(p1, tuple(21, 19, 20, -7));
    EXPECT_EQ(d1, 81);

    auto [p2, d2] = reduce_primitive(tuple(21, 19, 20, 7));
    EXPECT_EQ(p2, tuple(21, 19, 20, 7));
    EXPECT_EQ(d2, 1);

    auto [p3, d3] = reduce_primitive(tuple(2, 2, 2, 0));
    EXPECT_EQ(p3, tuple(1, 1, 1, 0));
    EXPECT_EQ(d3, 2);

    EXPECT_THROW(reduce_primitive(tuple(0, 0, 0, 0)), std::invalid_argument);
}

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(tuple(189, 171, 180, -63)),
              tuple(189, 171, 180, 63));
    QuarticTuple second = tuple(988521, -1661081, -336280, -1437599);
    EXPECT_EQ(canonicalize(second), tuple(1661081, 988521, 1437599, 336280));
    EXPECT_EQ(canonicalize(tuple(21, 19, 20, 7)), tuple(21, 19, 20, 7));
}

TEST(Verify, Examples) {
    EXPECT_TRUE(verify(tuple(21, 19, 20, 7)));
    EXPECT_EQ(fourth_power(Integer(21)) + fourth_power(Integer(19)), 324802);
    EXPECT_TRUE(verify(tuple(1, 1, 1, 0)));
    EXPECT_FALSE(verify(tuple(1, 1, 1, 1)));
}

TEST(Verify, RejectsAllUnitPerturbations) {
    QuarticTuple base = tuple(21, 19, 20, 7);
    Integer* parts[4] = {&base.X, &base.Y, &base.U, &base.V};
    for (int i = 0; i < 4; ++i) {
        for (int delta : {-1, 1}) {
            QuarticTuple probe = base;
            Integer* probe_parts[4] = {&probe.X, &probe.Y, &probe.U, &probe.V};
            *probe_parts[i] = *parts[i] + delta;
            EXPECT_FALSE(verify(probe)) << "component " << i << " " << delta;
        }
    }
}

TEST(MultipleOf, Examples) {
    QuarticTuple base = tuple(21, 19, 20, 7);
    auto f9 = multiple_of(tuple(189, 171, 180, -63), base);
    ASSERT_TRUE(f9.has_value());
    EXPECT_EQ(*f9, 9);

    auto f1 = multiple_of(base, base);
    ASSERT_TRUE(f1.has_value());
    EXPECT_EQ(*f1, 1);

    EXPECT_FALSE(
        multiple_of(tuple(988521, -1661081, -336280, -1437599), base));
}

TEST(Generate, FirstMultiple) {
    for (Source source : {Source::divpoly, Source::group_law}) {
        SolutionRecord rec = generate(1, source);
        EXPECT_EQ(rec.raw, tuple(1701, 1539, 1620, -567));
        EXPECT_EQ(rec.d, 81);
        EXPECT_EQ(rec.primitive, tuple(21, 19, 20, -7));
        EXPECT_EQ(rec.canonical, tuple(21, 19, 20, 7));
    }
}

TEST(Generate, SecondMultipleBothSources) {
    SolutionRecord dv = generate(2, Source::divpoly);
    SolutionRecord gl = generate(2, Source::group_law);
    QuarticTuple expected = tuple(988521, -1661081, -336280, -1437599);
    EXPECT_EQ(dv.primitive, expected);
    EXPECT_EQ(gl.primitive, expected);
    // raw tuples differ by the weight-9 homogeneity factor 9^8
    EXPECT_EQ(gl.d, 1);
    EXPECT_EQ(dv.d, fourth_power(square(Integer(9))));
}

TEST(Generate, ThirdMultipleMatchesTable) {
    SolutionRecord rec = generate(3, Source::divpoly);
    EXPECT_EQ(to_string(rec.primitive.X), "-22394369951939");
    EXPECT_EQ(to_string(rec.primitive.Y), "-59719152671941");
    EXPECT_EQ(to_string(rec.primitive.U), "-41056761311940");
    EXPECT_EQ(to_string(rec.primitive.V), "43690772126393");
}

TEST(Generate, RejectsZero) {
    EXPECT_THROW(generate(0, Source::divpoly), std::invalid_argument);
}

// The parametrization equals the rational construction scaled by t e^8.
TEST(Pipeline, ParametrizationMatchesRationalDerivation) {
    for (unsigned long n = 1; n <= 8; ++n) {
        CurvePoint pt = nth_point(n);
        NumeratorTriple tr = triple_from_point(pt);
        SubstitutionTriple s = substitution_from_point(pt);
        QuarticTuple raw = tuple_from_triple(tr);
        Rational scale = Rational(fourth_power(square(tr.e))) * s.t;
        EXPECT_EQ(Rational(raw.X), (s.u + s.t) * scale) << "n=" << n;
        EXPECT_EQ(Rational(raw.Y), (s.u - s.t) * scale) << "n=" << n;
        EXPECT_EQ(Rational(raw.U), s.u * scale) << "n=" << n;
        EXPECT_EQ(Rational(raw.V), s.v * scale) << "n=" << n;
    }
}

TEST(Pipeline, LinearStructure) {
    DivPolyContext ctx = DivPolyContext::e6_generator();
    for (unsigned long n = 1; n <= 20; ++n) {
        SolutionRecord rec = generate(n, Source::divpoly, ctx);
        EXPECT_EQ(rec.raw.X + rec.raw.Y, 2 * rec.raw.U) << "n=" << n;
        EXPECT_TRUE(verify(rec.raw));
        auto [prim, d] = reduce_primitive(rec.primitive);
        EXPECT_EQ(d, 1);
    }
}

TEST(Pipeline, HomogeneityScalesByEighthPower) {
    std::vector<long> lambdas{2, 3, 9};
    for (unsigned long n = 1; n <= 4; ++n) {
        NumeratorTriple tr = triple_from_point(nth_point(n));
        QuarticTuple base = tuple_from_triple(tr);
        for (long lambda : lambdas) {
            Integer L(lambda);
            NumeratorTriple scaled_triple{square(L) * tr.b,
                                          L * square(L) * tr.w, L * tr.e};
            QuarticTuple expect = scaled(base, fourth_power(square(L)));
            EXPECT_EQ(tuple_from_triple(scaled_triple), expect)
                << "n=" << n << " lambda=" << lambda;
        }
    }
}

// Negating the point negates w, which exchanges and negates X, Y and
// negates U; V is even in w.  Canonical forms coincide.
TEST(Pipeline, NegationSymmetry) {
    for (unsigned long n = 1; n <= 10; ++n) {
        CurvePoint pt = nth_point(n);
        QuarticTuple raw = tuple_from_triple(triple_from_point(pt));
        QuarticTuple mirrored =
            tuple_from_triple(triple_from_point(negate(pt)));
        EXPECT_EQ(mirrored.X, -raw.Y) << "n=" << n;
        EXPECT_EQ(mirrored.Y, -raw.X) << "n=" << n;
        EXPECT_EQ(mirrored.U, -raw.U) << "n=" << n;
        EXPECT_EQ(mirrored.V, raw.V) << "n=" << n;
        EXPECT_EQ(canonicalize(reduce_primitive(mirrored).first),
                  canonicalize(reduce_primitive(raw).first))
            << "n=" << n;
    }
}

TEST(Pipeline, SourcesAgreeOnPrimitives) {
    DivPolyContext ctx = DivPolyContext::e6_generator();
    for (unsigned long n = 1; n <= 25; ++n) {
        SolutionRecord dv = generate(n, Source::divpoly, ctx);
        SolutionRecord gl = generate(n, Source::group_law, ctx);
        EXPECT_EQ(dv.primitive, gl.primitive) << "n=" << n;
        EXPECT_EQ(dv.canonical, gl.canonical) << "n=" << n;
    }
}
