/*
   Copyright 2026 The fockcheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fockcheck/identities.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace fockcheck {
namespace {

using testing::exact;

TEST(Xi, SmallCaseCoefficients) {
    // P(u) = (u+1)(u+2) = u(u-1) + 4u + 2 for j = l = 2.
    const auto xi = xi_coeffs(2, 2, 0);
    ASSERT_EQ(xi.C.size(), 3u);
    EXPECT_EQ(xi.C[0], Rational(2));
    EXPECT_EQ(xi.C[1], Rational(4));
    EXPECT_EQ(xi.C[2], Rational(1));
    EXPECT_THROW(xi_coeffs(1, 3, 0), UsageError);
    EXPECT_THROW(xi_coeffs(4, 3, 0), UsageError);
}

TEST(Q, Values) {
    EXPECT_EQ(q_coefficient(2, 2, 1, 1), Rational(3, 2));
    EXPECT_EQ(q_coefficient(2, 3, 1, 1), Rational(4));
    EXPECT_THROW(q_coefficient(3, 3, 1, 3), UsageError);
}

TEST(Theta, Examples) {
    EXPECT_EQ(theta(2, 3, 1).definitional, Rational(1));
    EXPECT_EQ(theta(2, 2, 1).definitional, Rational(1, 2));
    EXPECT_EQ(theta(2, 2, 1).closed, Rational(1, 2));
    EXPECT_EQ(theta(5, 9, 0).definitional, Rational(0));
    EXPECT_EQ(theta(4, 7, 3).definitional, Rational(27, 2));
}

TEST(Theta, RecoveredFromSeries) {
    NumericContext ctx;
    ctx.truncation = 60;
    const Estimate s = theta_from_series(3, 4, 2, ctx);
    const PrecisionScope scope(ctx.bits());
    EXPECT_LE(magnitude(s.value - BigComplex(BigFloat(4))), 10 * s.error);
}

TEST(Cjl, SeriesMatchesClosedForm) {
    NumericContext ctx;
    ctx.truncation = 60;
    const PrecisionScope scope(ctx.bits());
    const BigComplex A = testing::big("0.7", "-0.3"), B = testing::big("1.1", "0.4");
    const Estimate s = cjl_series(3, 5, 2, A, B, ctx);
    const Estimate c = cjl_closed(3, 5, 2, A, B, ctx);
    EXPECT_LE(magnitude(s.value - c.value), 10 * (s.error + c.error));
}

TEST(Cjl, VanishesAtLatticeRootForMZero) {
    NumericContext ctx;
    ctx.truncation = 60;
    const PrecisionScope scope(ctx.bits());
    const BigComplex A(BigFloat(0), BigFloat::pi() * BigFloat(2));
    const Estimate c = cjl_closed(2, 2, 0, A, BigComplex(BigFloat(1)), ctx);
    EXPECT_LE(magnitude(c.value), 10 * c.error + 1e-55L);
}

TEST(Rho, TwoPiIAtMOne) {
    NumericContext ctx;
    ctx.truncation = 100;
    const PrecisionScope scope(ctx.bits());
    const BigComplex x(BigFloat(0), BigFloat::pi() * BigFloat(2));
    const Estimate r = rho(0, x, 1, ctx);
    EXPECT_LT(magnitude(r.value - x), 1e-30L);
    ctx.truncation = 20;
    EXPECT_THROW(rho(0, x, 1, ctx), TruncationGuardError);
}

TEST(Rho, FrozenValues) {
    // 200-term reference sums at 50 digits.
    NumericContext ctx;
    const PrecisionScope scope(ctx.bits());
    const Estimate a = rho(2, testing::big("1", "-0.5"), 1, ctx);
    EXPECT_LT(testing::distance(a.value, "5.8904600589930445495116363123467856", "-6.4056132842275498251074969008259941"),
              1e-33L);
    EXPECT_LT(testing::distance(rho_closed_m1(2, testing::big("1", "-0.5"), ctx),
                                "5.8904600589930445495116363123467856", "-6.4056132842275498251074969008259941"),
              1e-33L);
    const Estimate b = rho(1, testing::big("0.75", "1.25"), 2, ctx);
    EXPECT_LT(testing::distance(b.value, "-18.492773523994644573269133857023386", "25.343667882212121872126130208381435"),
              1e-32L);
}

TEST(Rho, DifferenceChainReducesToClosedForms) {
    NumericContext ctx;
    const PrecisionScope scope(ctx.bits());
    for (unsigned m = 1; m <= 5; ++m) {
        const ChainResult c = rho_difference_chain(testing::big("-1.2", "0.9"), m, ctx);
        for (const auto& s : c.steps) EXPECT_LE(s.residual, 10 * s.bound);
        EXPECT_LE(magnitude(c.first.value - c.first_closed), 10 * c.first.error) << m;
        EXPECT_LE(magnitude(c.second.value - c.second_closed), 10 * c.second.error) << m;
        EXPECT_EQ(c.second_from_chain, m >= 2);
    }
}

TEST(Obstruction, Certificate) {
    NumericContext ctx;
    const auto c = exp_obstruction(1, ctx);
    EXPECT_EQ(c.x_required, Rational(-2));
    EXPECT_EQ(c.exp_required, Rational(-1));
    EXPECT_EQ(c.eliminated, "x^2*Y + 2*x*Y");
    EXPECT_TRUE(c.system_satisfied);
    EXPECT_EQ(c.gap.to_string(30), "1.13533528323661269189399949497");
    EXPECT_THROW(exp_obstruction(0, ctx), UsageError);
}

TEST(Roots, LatticePointsForMZero) {
    NumericContext ctx;
    const auto roots = kernel_one_roots(0, Region{}, ctx);
    const PrecisionScope scope(ctx.bits());
    const BigFloat two_pi = BigFloat::pi() * BigFloat(2);
    for (int k : {-2, -1, 1, 2}) {
        const BigComplex target(BigFloat(0), two_pi * BigFloat(k));
        EXPECT_TRUE(std::any_of(roots.begin(), roots.end(),
                                [&](const BigComplex& r) { return magnitude(r - target) < 1e-40L; }))
            << k;
    }
    for (const auto& r : roots) EXPECT_GT(magnitude(r), 1.0L);
}

/// m! sum_{k<2000} x^k/(k+m)!, summed term by term.
BigComplex long_series(unsigned m, const BigComplex& x) {
    BigComplex term(BigFloat(1)), sum(BigFloat(1));
    for (unsigned k = 1; k < 2000; ++k) {
        term = term * x / BigFloat(k + m);
        sum += term;
    }
    return sum;
}

TEST(Roots, NonZeroRootsExistForPositiveM) {
    NumericContext ctx;
    for (unsigned m = 1; m <= 3; ++m) {
        const auto roots = kernel_one_roots(m, Region{-2, 8, -20, 20}, ctx);
        ASSERT_FALSE(roots.empty()) << m;
        const PrecisionScope scope(bits_for_digits(90));
        for (const auto& r : roots) {
            const BigComplex x{rounded(r.re, working_precision()), rounded(r.im, working_precision())};
            EXPECT_LT(magnitude(long_series(m, x) - BigComplex(BigFloat(1))), 1e-45L) << m;
        }
    }
}

/// Leibniz expansion of det(w_lambda^k), k = 1..n.
ExactComplex leibniz(const std::vector<ExactComplex>& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    ExactComplex det;
    do {
        ExactComplex term(Rational(1));
        for (std::size_t r = 0; r < n; ++r) term *= pow(w[r], static_cast<unsigned>(perm[r] + 1));
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
        if (inversions % 2 == 0)
            det += term;
        else
            det -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

TEST(Vandermonde, ProductFormulaMatchesLeibniz) {
    NumericContext ctx;
    const std::vector<std::vector<ExactComplex>> cases{
        {exact("1"), exact("2"), exact("3")},
        {exact("0.5", "1"), exact("-1"), exact("0", "-2"), exact("3/4", "1/4")},
        {exact("1", "1"), exact("2"), exact("1", "1")},
        {exact("0"), exact("1"), exact("2")},
        {exact("1"), exact("-1"), exact("0", "1"), exact("0", "-1"), exact("2", "3")}};
    for (const auto& nodes : cases) {
        const auto r = vandermonde_independence<ExactComplex>(nodes, ctx);
        EXPECT_EQ(r.det, leibniz(nodes));
        EXPECT_EQ(r.independent, !leibniz(nodes).is_zero());
    }
    EXPECT_FALSE(vandermonde_independence<ExactComplex>(cases[2], ctx).independent);
    const PrecisionScope scope(ctx.bits());
    std::vector<BigComplex> big;
    for (const auto& w : cases[1]) big.push_back(to_big(w));
    EXPECT_TRUE(vandermonde_independence<BigComplex>(big, ctx).independent);
}

}  // namespace
}  // namespace fockcheck
