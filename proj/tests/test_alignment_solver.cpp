#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "multifold/alignment_solver.hpp"
#include "multifold/parse.hpp"
#include "oracles.hpp"

using namespace multifold;

namespace {

Poly P(std::string_view text) { return poly_parse(text); }

Rational q(long n, long d = 1) { return make_rational(n, d); }

Rational tol_1e(int digits) {
    Rational t(1, 1);
    for (int i = 0; i < digits; ++i) t /= 10;
    return t;
}

double cos_deg(double degrees) { return std::cos(degrees * std::numbers::pi / 180.0); }

}  // namespace

TEST(Certify, Examples) {
    EXPECT_TRUE(certify(P("x^2 - 2"), Interval(q(1), q(2))));
    EXPECT_FALSE(certify(P("x^2 - 2"), Interval(q(-3), q(3))));
    EXPECT_FALSE(certify(P("x^2 + 1"), Interval(q(-100), q(100))));
    EXPECT_FALSE(certify(P("x^2 + 1"), Interval(q(0), q(1))));
}

TEST(Roll, SquareRootOfTwo) {
    const Rational tol = tol_1e(12);
    Rational x = roll_to_alignment(compile(P("x^2 - 2")), Interval(q(1), q(2)), tol);
    const long double oracle = oracle::bisect(P("x^2 - 2"), 1.0L, 2.0L);
    EXPECT_LE(std::fabs(static_cast<long double>(x.get_d()) - oracle), 1e-12L);
    EXPECT_LE(abs(x * x - 2), tol);
    EXPECT_GE(x, q(1));
    EXPECT_LE(x, q(2));
}

TEST(Roll, RootAtEndpoint) {
    EXPECT_EQ(roll_to_alignment(compile(P("x")), Interval(q(0), q(1)), tol_1e(12)), q(0));
    EXPECT_EQ(roll_to_alignment(compile(P("x - 1")), Interval(q(0), q(1)), tol_1e(12)), q(1));
    // exact rational root found when a bisection midpoint lands on it
    EXPECT_EQ(roll_to_alignment(compile(P("2x - 1")), Interval(q(0), q(1)), tol_1e(12)), q(1, 2));
}

TEST(Roll, Errors) {
    EXPECT_THROW(roll_to_alignment(compile(P("x^2 + 1")), Interval(q(0), q(2)), tol_1e(12)), NoRoot);
    EXPECT_THROW(roll_to_alignment(compile(P("x^2 - 3x + 2")), Interval(q(0), q(3)), tol_1e(12)), NotIsolated);
    EXPECT_THROW(roll_to_alignment(compile(P("x^2 - 2x + 1")), Interval(q(0), q(2)), tol_1e(12)), EvenTouch);
    FoldScript s = compile(P("x^2 - 2"));
    EXPECT_THROW(roll_to_alignment(s, Interval(q(-1), q(2)), tol_1e(12)), DomainError);
    EXPECT_THROW(roll_to_alignment(s, Interval(q(1), s.bound() + 1), tol_1e(12)), DomainError);
    EXPECT_THROW(roll_to_alignment(s, Interval(q(1), q(2)), q(0)), DomainError);
}

TEST(SolveReal, SquareRootOfTwo) {
    RootReport r = solve_real(P("x^2 - 2"));
    ASSERT_EQ(r.roots.size(), 2u);
    const long double s = oracle::bisect(P("x^2 - 2"), 1.0L, 2.0L);
    EXPECT_LE(std::fabs(static_cast<long double>(r.roots[0].value.get_d()) + s), 1e-12L);
    EXPECT_LE(std::fabs(static_cast<long double>(r.roots[1].value.get_d()) - s), 1e-12L);
    EXPECT_EQ(r.bound, q(3));
    EXPECT_EQ(r.tolerance, default_tolerance());
}

TEST(SolveReal, Quintic) {
    // cos 5u = 16c^5 - 20c^3 + 5c, so the roots are cos u with cos 5u = 1/2
    const Poly p = P("16x^5 - 20x^3 + 5x - 1/2");
    RootReport r = solve_real(p);
    ASSERT_EQ(r.roots.size(), 5u);
    std::vector<double> expected = {cos_deg(12), 0.5, cos_deg(84), cos_deg(132), cos_deg(156)};
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(r.roots[i].value.get_d(), expected[i], 1e-10);
    EXPECT_EQ(eval_horner(p, q(1, 2)), 0);
    auto half = std::find_if(r.roots.begin(), r.roots.end(), [](const RealRoot& x) { return x.value == q(1, 2); });
    ASSERT_NE(half, r.roots.end());
    EXPECT_EQ(half->residual, 0);
}

TEST(SolveReal, NoRealRoots) {
    EXPECT_TRUE(solve_real(P("x^2 + 1")).roots.empty());
    EXPECT_THROW(solve_real(P("0")), DomainError);
    EXPECT_THROW(solve_real(P("7")), DomainError);
    EXPECT_THROW(solve_real(P("x"), q(0)), DomainError);
}

TEST(SolveReal, ZeroRoot) {
    RootReport r = solve_real(P("x^3 - x"));
    ASSERT_EQ(r.roots.size(), 3u);
    EXPECT_EQ(r.roots[0].value, q(-1));
    EXPECT_EQ(r.roots[1].value, q(0));
    EXPECT_EQ(r.roots[2].value, q(1));
}

TEST(SolveReal, Multiplicities) {
    Poly p = P("x - 1") * P("x - 1") * P("x - 1") * P("x + 2") * P("x^2 - 3");
    RootReport r = solve_real(p);
    ASSERT_EQ(r.roots.size(), 4u);
    EXPECT_EQ(r.roots[0].multiplicity, 1u);  // -2
    EXPECT_EQ(r.roots[1].multiplicity, 1u);  // -sqrt(3)
    EXPECT_EQ(r.roots[2].value, q(1));
    EXPECT_EQ(r.roots[2].multiplicity, 3u);
    for (const auto& root : r.roots) EXPECT_LE(root.residual, r.tolerance);
}

TEST(SolveReal, RandomLinearFactors) {
    oracle::Generator gen(31);
    const Rational tol = tol_1e(10);
    for (int i = 0; i < 40; ++i) {
        const long n = gen.integer(1, 6);
        std::vector<Rational> rs;
        while (static_cast<long>(rs.size()) < n) {
            const long den = gen.integer(1, 6);
            Rational r(gen.integer(-5 * den, 5 * den), den);
            r.canonicalize();
            if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
        }
        Poly p = Poly::constant(gen.nonzero_rational(10, 10));
        for (const auto& r : rs) p = p * Poly(std::vector<Rational>{Rational(-r), Rational(1)});
        std::sort(rs.begin(), rs.end());
        RootReport report = solve_real(p, tol);
        ASSERT_EQ(report.roots.size(), rs.size()) << format_poly(p);
        for (std::size_t k = 0; k < rs.size(); ++k) {
            EXPECT_LE(abs(report.roots[k].value - rs[k]), tol) << format_poly(p);
            EXPECT_TRUE(report.roots[k].certified);
            EXPECT_TRUE(certify(squarefree_part(p), report.roots[k].isolating));
            EXPECT_LE(abs(eval_horner(p, report.roots[k].value)), tol);
        }
    }
}

TEST(SolveReal, AgreesWithSimulatedGap) {
    oracle::Generator gen(32);
    for (int i = 0; i < 15; ++i) {
        Poly p = gen.poly_up_to(5);
        RootReport report = solve_real(p);
        FoldScript script = compile(p, report.bound);
        FoldScript mirrored = compile(negate_variable(p), report.bound);
        for (const auto& root : report.roots) {
            const bool negative = sgn(root.value) < 0;
            Scene scene = elaborate(negative ? mirrored : script);
            Rational g = *evaluate(scene, negative ? Rational(-root.value) : root.value).final_gap;
            EXPECT_EQ(g, eval_horner(p, root.value));
            EXPECT_LE(abs(g), report.tolerance);
        }
    }
}

TEST(SolveComplex, Examples) {
    ComplexRootReport i = solve_complex(P("x^2 + 1"));
    ASSERT_EQ(i.pairs.size(), 2u);
    EXPECT_EQ(i.pairs[0].re, 0);
    EXPECT_EQ(i.pairs[0].im, -1);
    EXPECT_EQ(i.pairs[1].im, 1);

    ComplexRootReport c = solve_complex(P("x^2 - 2x + 5"));
    ASSERT_EQ(c.pairs.size(), 2u);
    for (const auto& z : c.pairs) {
        EXPECT_NEAR(z.re.get_d(), 1.0, 1e-9);
        EXPECT_NEAR(std::fabs(z.im.get_d()), 2.0, 1e-9);
        EXPECT_LE(z.residual, tol_1e(9));
    }
    auto [pr, pi] = eval_complex(P("x^2 - 2x + 5"), q(1), q(0));
    EXPECT_EQ(abs(pr) + abs(pi), 4);

    ComplexRootReport r = solve_complex(P("x^2 - 2"));
    ASSERT_EQ(r.pairs.size(), 2u);
    for (const auto& z : r.pairs) {
        EXPECT_EQ(z.im, 0);
        EXPECT_NEAR(std::fabs(z.re.get_d()), std::numbers::sqrt2, 1e-12);
    }
}

TEST(SolveComplex, MatchesSimultaneousIteration) {
    oracle::Generator gen(33);
    for (int i = 0; i < 8; ++i) {
        Poly p = gen.poly_up_to(3, 5, 3);
        if (gcd(p, derivative(p)).degree() > 0) continue;
        ComplexRootReport report = solve_complex(p);
        const auto roots = oracle::durand_kerner(p);
        EXPECT_EQ(report.pairs.size(), roots.size()) << format_poly(p);
        for (const auto& z : roots) {
            auto hit = std::find_if(report.pairs.begin(), report.pairs.end(), [&](const ComplexRoot& c) {
                return std::fabs(c.re.get_d() - static_cast<double>(z.real())) < 1e-6 &&
                       std::fabs(c.im.get_d() - static_cast<double>(z.imag())) < 1e-6;
            });
            EXPECT_NE(hit, report.pairs.end()) << format_poly(p);
        }
    }
}

TEST(SolveComplex, AllRealRootsHaveZeroImaginaryPart) {
    ComplexRootReport r = solve_complex(P("x^3 - 7x + 6"));
    ASSERT_EQ(r.pairs.size(), 3u);
    for (const auto& z : r.pairs) EXPECT_EQ(z.im, 0);
}
