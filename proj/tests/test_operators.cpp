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

#include "fockcheck/operators.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace fockcheck {
namespace {

using testing::exact;

SymbolPair kernel_pair(unsigned m, const char* a, const char* b) {
    const ExactComplex one(Rational(1));
    return {m, KernelCombo<ExactComplex>{m, {{one, exact(a)}}}, KernelCombo<ExactComplex>{m, {{one, exact(b)}}}};
}

TEST(MonomialAction, ClosedForm) {
    // T_{z^2 conj(z)} z^3 on m = 1: (3+2+1)!/(3+2-1+1)! z^4 = 6 z^4.
    const MonoAction a = toeplitz_mono_action(1, 2, 1, 3);
    ASSERT_TRUE(a.degree);
    EXPECT_EQ(*a.degree, 4u);
    EXPECT_EQ(a.coef, Rational(6));
    EXPECT_FALSE(toeplitz_mono_action(0, 0, 3, 2).degree);
    EXPECT_EQ(toeplitz_mono_action(2, 0, 2, 2).coef, Rational(12));
}

TEST(ToeplitzMatrix, ClosedFormEqualsOracle) {
    NumericContext ctx;
    ctx.truncation = 10;
    MixedSymbol<ExactComplex> s{{{exact("1", "2"), 3, 1}, {exact("-1/3"), 0, 2}, {exact("5"), 2, 2}}};
    for (unsigned m = 0; m <= 3; ++m)
        EXPECT_EQ(toeplitz_matrix(s, m, ctx).gram, toeplitz_matrix_oracle(s, m, ctx).gram) << "m=" << m;
}

TEST(SemiCommutator, IdentitySymbolDiagonal) {
    // f = g = z on m = 1: T_{|z|^2} - T_z T_conj(z) = diag(2, 1, 1, ...).
    NumericContext ctx;
    ctx.truncation = 8;
    const ExactComplex zero, one(Rational(1));
    const SymbolPair pair{1, Polynomial{{zero, one}}, Polynomial{{zero, one}}};
    const auto t = semi_commutator_matrix<ExactComplex>(pair, ctx);
    EXPECT_EQ(t.truncation_error, 0.0L);
    for (unsigned i = 0; i < t.size(); ++i)
        for (unsigned j = 0; j + 1 < t.size(); ++j) {
            const Rational expected = i != j ? Rational(0) : (i == 0 ? Rational(2) : Rational(1));
            EXPECT_EQ(t.gram_at(i, j), ExactComplex(expected * t.norms[i])) << i << "," << j;
        }
}

TEST(SemiCommutator, ExactModeNeedsPolynomials) {
    NumericContext ctx;
    EXPECT_THROW(semi_commutator_matrix<ExactComplex>(kernel_pair(1, "1", "1"), ctx), UsageError);
}

TEST(SemiCommutator, NodePairCoefficientMatchesMatrix) {
    NumericContext ctx;
    ctx.truncation = 30;
    ctx.precision = 50;
    const SymbolPair pair = kernel_pair(1, "1", "1");
    const auto t = semi_commutator_matrix<BigComplex>(pair, ctx);
    const auto& f = std::get<KernelCombo<ExactComplex>>(pair.f);
    const auto& g = std::get<KernelCombo<ExactComplex>>(pair.g);
    const PrecisionScope scope(ctx.bits());
    for (unsigned j = 0; j <= 3; ++j)
        for (unsigned l = 0; l <= 3; ++l) {
            const Estimate c = semicomm_coefficient(f, g, l, j, ctx);
            EXPECT_LT(magnitude(c.value - t.gram_at(j, l)), 1e-40L) << j << "," << l;
        }
    // Corner coefficient: K_1(1) - 1 = e - 2.
    const Estimate c00 = semicomm_coefficient(f, g, 0, 0, ctx);
    EXPECT_LT(testing::distance(c00.value, "0.71828182845904523536028747135266249775724709369995957", "0"), 1e-45L);
}

TEST(SemiCommutator, GuardTripsOnWideNodes) {
    NumericContext ctx;
    ctx.truncation = 20;
    EXPECT_THROW(semi_commutator_matrix<BigComplex>(kernel_pair(1, "15", "1"), ctx), TruncationGuardError);
}

TEST(Hankel, GramEqualsSemiCommutator) {
    NumericContext ctx;
    ctx.truncation = 24;
    const ExactComplex one(Rational(1));
    const SymbolPair pair{2, KernelCombo<ExactComplex>{2, {{one, exact("0.5", "1")}, {exact("-2"), exact("-1")}}},
                          ExpSymbol{exact("0.25", "-0.75")}};
    const auto t = semi_commutator_matrix<BigComplex>(pair, ctx);
    const HankelGram h(pair, ctx);
    const PrecisionScope scope(ctx.bits());
    for (unsigned i = 0; i <= 14; ++i)
        for (unsigned j = 0; j <= 14; ++j) {
            const Estimate e = h.entry(i, j);
            EXPECT_LE(magnitude(e.value - t.entry(i, j)), 10 * (t.truncation_error + e.error)) << i << "," << j;
        }
}

TEST(Berezin, MatchesIndependentSeries) {
    // Reference: coefficient convolution with 300 terms at 50 digits.
    NumericContext ctx;
    const SymbolPair pair = kernel_pair(1, "1", "1");
    const PrecisionScope scope(ctx.bits());
    const Estimate at0 = berezin_transform(pair, testing::big("0", "0"), ctx);
    EXPECT_LT(testing::distance(at0.value, "1.7182818284590452353602874713526625", "0"), 1e-33L);
    const Estimate at1 = berezin_transform(pair, testing::big("1", "1"), ctx);
    EXPECT_LT(testing::distance(at1.value, "4.2442456129018657396983961182238631", "0"), 1e-33L);
    const Estimate at2 = berezin_transform(pair, testing::big("-1", "0.5"), ctx);
    EXPECT_LT(testing::distance(at2.value, "0.57961190784804646259304063833907057", "0"), 1e-33L);
    EXPECT_LT(at1.error, 1e-50L);
}

TEST(Compose, ZeroOperatorCompositionIsZero) {
    NumericContext ctx;
    ctx.truncation = 6;
    const ExactComplex one(Rational(1));
    const auto tf = toeplitz_matrix<ExactComplex>(AnalyticOperator{Polynomial{{one}}}, 0, 6, ctx);
    const auto tg = toeplitz_matrix<ExactComplex>(ConjugateOperator{Polynomial{{ExactComplex(), one}}}, 0, 6, ctx);
    const auto c = compose(tf, tg);
    EXPECT_EQ(c.gram, tg.gram);
    const auto d = subtract(c, tg);
    for (const auto& v : d.gram) EXPECT_TRUE(v.is_zero());
}

}  // namespace
}  // namespace fockcheck
