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

#include "fockcheck/numeric.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace fockcheck {
namespace {

TEST(Rational, ParsesDecimalsFractionsAndExponents) {
    EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("2.5e-3"), Rational(1, 400));
    EXPECT_EQ(parse_rational("1.5E+2"), Rational(150));
    EXPECT_THROW(parse_rational("1.2.3"), std::exception);
    EXPECT_THROW(parse_rational(""), std::exception);
}

TEST(Rational, FormatsTerminatingDecimalsAsDecimals) {
    EXPECT_EQ(format_rational(Rational(5, 4)), "1.25");
    EXPECT_EQ(format_rational(Rational(-7)), "-7");
    EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
}

TEST(Complex, ParsesPairs) {
    const ExactComplex z = parse_complex("0.5,-2");
    EXPECT_EQ(z.re, Rational(1, 2));
    EXPECT_EQ(z.im, Rational(-2));
}

TEST(BigFloat, CarriesRequestedPrecision) {
    const PrecisionScope scope(bits_for_digits(50));
    const BigFloat third = BigFloat(1) / BigFloat(3);
    EXPECT_EQ(third.to_string(20), "3.3333333333333333333e-1");
    const BigFloat two_pi = BigFloat::pi() * BigFloat(2);
    EXPECT_EQ(two_pi.to_string(30), "6.28318530717958647692528676656");
    EXPECT_EQ(BigFloat(0).to_string(10), "0");
}

TEST(BigFloat, MovedFromValuesCanBeReassigned) {
    BigFloat a(3);
    BigFloat b(std::move(a));
    a = BigFloat(4);
    EXPECT_EQ(a + b, BigFloat(7));
}

TEST(BigComplex, ExpOfTwoPiIIsOne) {
    const PrecisionScope scope(bits_for_digits(60));
    const BigComplex z = exp(BigComplex(BigFloat(0), BigFloat::pi() * BigFloat(2)));
    EXPECT_LT(magnitude(z - BigComplex(BigFloat(1))), 1e-60L);
}

TEST(Context, ValidatesInvariants) {
    NumericContext ctx;
    EXPECT_NO_THROW(ctx.validate());
    ctx.precision = 20;
    EXPECT_THROW(ctx.validate(), UsageError);
    ctx.precision = 30;
    ctx.tolerance = 1e-15L;
    EXPECT_NO_THROW(ctx.validate());
    ctx.tolerance = 1e-16L;
    EXPECT_THROW(ctx.validate(), UsageError);
    ctx.tolerance = 0;
    EXPECT_THROW(ctx.validate(), UsageError);
}

TEST(TailBound, DominatesGeometricAndExponentialTails) {
    // sum_{k>=10} 2^-k = 2^-9
    const long double geometric = tail_sum_bound([](unsigned k) { return -std::log(2.0L) * k; }, 10);
    EXPECT_GE(geometric, std::ldexp(1.0L, -9));
    EXPECT_LE(geometric, 4 * std::ldexp(1.0L, -9));
    // sum_{k>=20} 3^k/k!
    long double exact = 0, term = 1;
    for (unsigned k = 1; k < 200; ++k) {
        term *= 3.0L / k;
        if (k >= 20) exact += term;
    }
    const long double bound = tail_sum_bound([](unsigned k) { return k * std::log(3.0L) - log_factorial(k); }, 20);
    EXPECT_GE(bound, exact);
    EXPECT_LE(bound, 3 * exact);
}

TEST(Parallel, EveryIndexRunsOnceAndErrorsPropagate) {
    std::vector<int> hits(100, 0);
    parallel_for(100, 4, [&](unsigned i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
    EXPECT_THROW(parallel_for(10, 3, [](unsigned i) { if (i == 7) throw std::runtime_error("x"); }),
                 std::runtime_error);
}

}  // namespace
}  // namespace fockcheck
