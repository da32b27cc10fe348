#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "multifold/parse.hpp"
#include "multifold/reduction.hpp"
#include "oracles.hpp"

using namespace multifold;

namespace {

Poly P(std::string_view text) { return poly_parse(text); }

Rational q(long n, long d = 1) { return make_rational(n, d); }

/// Rejection-sample a squarefree polynomial.
Poly random_squarefree(oracle::Generator& gen, int max_degree) {
    while (true) {
        Poly p = gen.poly_up_to(max_degree, 10, 10);
        if (gcd(p, derivative(p)).degree() == 0) return p;
    }
}

/// Σ|c_k|·max(1, |t|)^k, the scale a residual of q at t is measured against.
double scaled_norm(const Poly& q, long double t) {
    long double r = std::max<long double>(1.0L, std::fabs(t));
    long double acc = 0;
    for (std::size_t k = q.coeffs().size(); k-- > 0;) acc = acc * r + std::fabs(static_cast<long double>(q.coeffs()[k].get_d()));
    return static_cast<double>(acc);
}

/// |q(t)| evaluated exactly at the double nearest t.
double exact_residual(const Poly& q, long double t) {
    return std::fabs(q(from_double(static_cast<double>(t))).get_d());
}

}  // namespace

TEST(Interpolate, RecoversPolynomial) {
    oracle::Generator gen(2);
    for (int i = 0; i < 30; ++i) {
        Poly p = gen.poly(static_cast<int>(gen.integer(0, 9)));
        std::vector<Rational> xs, ys;
        for (int k = 0; k <= p.degree(); ++k) {
            xs.push_back(q(k * 3 - 5, 2));
            ys.push_back(p(xs.back()));
        }
        EXPECT_EQ(interpolate(xs, ys), p);
    }
}

TEST(SumRoots, Examples) {
    // roots of x^2+1 are ±i: ordered sums 2i, -2i, 0, 0
    EXPECT_EQ(sum_roots_poly(P("x^2 + 1")), P("x^2") * P("x^2 + 4"));
    EXPECT_EQ(sum_roots_poly(P("x - 1")), P("x - 2"));
    EXPECT_EQ(sum_roots_poly(P("x")), P("x"));
    EXPECT_THROW(sum_roots_poly(P("3")), DomainError);
}

TEST(DiffRoots, Examples) {
    EXPECT_EQ(diff_roots_poly(P("x - 1")), P("x"));
    EXPECT_EQ(diff_roots_poly(P("x^2 + 1")), P("x^2") * P("x^2 + 4"));
    // roots 1 ± 2i: differences 0, 0, ±4i
    EXPECT_EQ(diff_roots_poly(P("x^2 - 2x + 5")), P("x^2") * P("x^2 + 16"));
    EXPECT_THROW(diff_roots_poly(Poly{}), DomainError);
}

TEST(SumRoots, InterpolationMatchesResultantOffTheNodes) {
    // S(t) is Res_y(p(y), p(t - y)) up to one constant factor; compare
    // ratios at non-integer t, which are never interpolation nodes.
    oracle::Generator gen(4);
    for (int i = 0; i < 15; ++i) {
        Poly p = random_squarefree(gen, 4);
        Poly s = sum_roots_poly(p);
        Poly d = diff_roots_poly(p);
        const Rational t1 = q(1, 3), t2 = q(-7, 5);
        const Rational rs1 = oracle::sylvester_resultant(p, compose_linear(p, t1, q(-1)));
        const Rational rs2 = oracle::sylvester_resultant(p, compose_linear(p, t2, q(-1)));
        EXPECT_EQ(s(t1) * rs2, s(t2) * rs1);
        const Rational rd1 = oracle::sylvester_resultant(p, compose_linear(p, t1, q(1)));
        const Rational rd2 = oracle::sylvester_resultant(p, compose_linear(p, t2, q(1)));
        EXPECT_EQ(d(t1) * rd2, d(t2) * rd1);
    }
}

TEST(SumRoots, DegreeBoundAndDiagonalFactor) {
    oracle::Generator gen(6);
    for (int i = 0; i < 25; ++i) {
        Poly p = gen.poly_up_to(5, 10, 10);
        const int n = p.degree();
        EXPECT_LE(sum_roots_poly(p).degree(), n * n);
        Poly d = diff_roots_poly(p);
        EXPECT_LE(d.degree(), n * n);
        EXPECT_GE(strip_x_factors(d).second, static_cast<std::size_t>(n));
    }
}

TEST(RealPart, Examples) {
    // c·x²(4x² + 4): real root 0 = Re(±i)
    EXPECT_EQ(real_part_poly(P("x^2 + 1")), P("x^2") * P("x^2 + 1"));
    EXPECT_EQ(real_part_poly(P("x - 3")), P("x - 3"));
    // c·(2x-2)²((2x-2)² + 16)
    EXPECT_EQ(real_part_poly(P("x^2 - 2x + 5")), P("x - 1") * P("x - 1") * P("x^2 - 2x + 5"));
}

TEST(ImagPart, Examples) {
    // c·x(-4x² + 4): roots 0, ±1
    EXPECT_EQ(imag_part_poly(P("x^2 + 1")), P("x^3 - x"));
    EXPECT_EQ(imag_part_poly(P("x - 3")), P("x"));
    EXPECT_EQ(imag_part_poly(P("x^2 - 2x + 5")), P("x^3 - 4x"));
}

TEST(Reduce, Examples) {
    RealImagReduction r = reduce(P("x^2 - 2"));
    EXPECT_EQ(r.source, P("x^2 - 2"));
    // ±sqrt(2) are roots of q_re = S(2x), S having roots ±2 sqrt(2), 0, 0
    EXPECT_EQ(r.q_re, P("x^2") * P("x^2 - 2"));
    EXPECT_EQ(r.q_im, P("x^3 + 2x"));
    RealImagReduction lin = reduce(P("x - 3"));
    EXPECT_EQ(lin.q_re(q(3)), 0);
    EXPECT_EQ(lin.q_im(q(0)), 0);
    EXPECT_THROW(reduce(P("0")), DomainError);
    EXPECT_THROW(reduce(P("5")), DomainError);
}

TEST(Reduce, RepeatedRootsUseTheSquarefreePart) {
    Poly p = P("x^2 + 1") * P("x^2 + 1") * P("x - 2");
    RealImagReduction r = reduce(p);
    EXPECT_EQ(r.q_re(q(0)), 0);
    EXPECT_EQ(r.q_re(q(2)), 0);
    EXPECT_EQ(r.q_im(q(1)), 0);
    EXPECT_EQ(r.q_im(q(-1)), 0);
}

TEST(Reduce, ComplexRootsSatisfyComponentPolynomials) {
    oracle::Generator gen(9);
    for (int i = 0; i < 20; ++i) {
        Poly p = random_squarefree(gen, 5);
        RealImagReduction r = reduce(p);
        for (const auto& z : oracle::durand_kerner(p)) {
            EXPECT_LE(exact_residual(r.q_re, z.real()), 1e-6 * scaled_norm(r.q_re, z.real())) << format_poly(p);
            EXPECT_LE(exact_residual(r.q_im, z.imag()), 1e-6 * scaled_norm(r.q_im, z.imag())) << format_poly(p);
        }
    }
}
