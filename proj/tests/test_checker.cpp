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

#include "fockcheck/checker.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace fockcheck {
namespace {

using testing::exact;

/// -2 pi i to 100 digits.
const char* kMinusTwoPi =
    "-6.28318530717958647692528676655900576839433879875021164194988918461563281257241799725606965068423413596";

KernelCombo<ExactComplex> single(unsigned m, const ExactComplex& node, const ExactComplex& c = exact("1")) {
    return {m, {{c, node}}};
}

TEST(DecideKernelCombos, Examples) {
    NumericContext ctx;
    EXPECT_EQ(decide_semicommutator(single(1, exact("0"), exact("5")), single(1, exact("3", "1")), 1, ctx).decision,
              Decision::Zero);
    EXPECT_EQ(decide_semicommutator(single(1, exact("1")), single(1, exact("0", "1")), 1, ctx).decision,
              Decision::NonZero);
    const Verdict lattice = decide_semicommutator(single(0, exact("0", kMinusTwoPi)), single(0, exact("1")), 0, ctx);
    EXPECT_EQ(lattice.decision, Decision::Zero);
    EXPECT_EQ(lattice.route, Route::Theorem);
    EXPECT_EQ(decide_semicommutator(single(0, exact("0", "6")), single(0, exact("1")), 0, ctx).decision,
              Decision::NonZero);
}

TEST(DecidePolynomials, Examples) {
    const auto series = [](std::vector<ExactComplex> c) {
        MonomialSeries<ExactComplex> s;
        s.coeffs = std::move(c);
        return s;
    };
    const ExactComplex o, one = exact("1");
    EXPECT_EQ(decide_polynomial(series({o, o, one}), series({exact("3")}), 2).decision, Decision::Zero);
    EXPECT_EQ(decide_polynomial(series({o, one}), series({o, one}), 1).decision, Decision::NonZero);
    EXPECT_EQ(decide_polynomial(series({one, one}), series({o, o, o, one}), 0).decision, Decision::NonZero);
    EXPECT_EQ(decide_polynomial(series({one, o, o}), series({o, one}), 0).decision, Decision::Zero);
}

TEST(NumericVerdict, KernelPairIsNonZeroWithWitness) {
    NumericContext ctx;
    ctx.truncation = 30;
    ctx.precision = 50;
    const SymbolPair pair{1, single(1, exact("1")), single(1, exact("1"))};
    const Verdict v = numeric_verdict(pair, ctx);
    EXPECT_EQ(v.decision, Decision::NonZero);
    ASSERT_TRUE(v.witness);
    EXPECT_GT(v.witness->magnitude, 1e-3L);
}

TEST(NumericVerdict, ConstantSymbolIsExactlyZero) {
    NumericContext ctx;
    const SymbolPair pair{3, Polynomial{{exact("7", "-1")}}, Polynomial{{exact("1"), exact("2"), exact("0", "1")}}};
    const Verdict v = numeric_verdict(pair, ctx);
    EXPECT_EQ(v.decision, Decision::Zero);
    EXPECT_EQ(v.max_entry, 0.0L);
    ASSERT_TRUE(v.threshold);
}

TEST(NumericVerdict, LatticePairFlipsWithM) {
    NumericContext ctx;
    ctx.truncation = 60;
    ctx.precision = 80;
    const ExactComplex node = exact("0", kMinusTwoPi);
    const Verdict zero = numeric_verdict({0, single(0, node), single(0, exact("1"))}, ctx);
    EXPECT_EQ(zero.decision, Decision::Zero);
    EXPECT_LT(zero.max_entry, 1e-12L);
    const Verdict nonzero = numeric_verdict({1, single(1, node), single(1, exact("1"))}, ctx);
    EXPECT_EQ(nonzero.decision, Decision::NonZero);
}

TEST(NumericVerdict, TranslationByConstantsKeepsZero) {
    NumericContext ctx;
    ctx.truncation = 60;
    ctx.precision = 80;
    const ExactComplex node = exact("0", kMinusTwoPi);
    KernelCombo<ExactComplex> f = single(0, node);
    f.terms.push_back({exact("3", "1"), exact("0")});
    KernelCombo<ExactComplex> g = single(0, exact("1"));
    g.terms.push_back({exact("-2"), exact("0")});
    const SymbolPair pair{0, f, g};
    EXPECT_EQ(theorem_verdict(pair, ctx)->decision, Decision::Zero);
    EXPECT_EQ(numeric_verdict(pair, ctx).decision, Decision::Zero);
}

TEST(TheoremVerdict, Routes) {
    NumericContext ctx;
    EXPECT_EQ(theorem_verdict({2, ExpSymbol{exact("1")}, ExpSymbol{exact("0", "1")}}, ctx)->decision, Decision::NonZero);
    EXPECT_EQ(theorem_verdict({2, ExpSymbol{exact("0")}, ExpSymbol{exact("0", "1")}}, ctx)->decision, Decision::Zero);
    // e^{az} = K_0(z, conj a): the lattice condition applies at m = 0.
    const auto v = theorem_verdict({0, ExpSymbol{exact("0", "1")}, single(0, exact("6.28318530717958647692528676655900576839433879875021164", "0"))}, ctx);
    ASSERT_TRUE(v);
    EXPECT_EQ(v->decision, Decision::Zero);
    // Mixed classes have no structural answer.
    EXPECT_FALSE(theorem_verdict({1, Polynomial{{exact("0"), exact("1")}}, single(1, exact("1"))}, ctx));
    EXPECT_FALSE(theorem_verdict({0, Polynomial{{exact("0"), exact("1")}}, single(0, exact("1"))}, ctx));
}

TEST(Consistency, AgreesOnReferencePairs) {
    NumericContext ctx;
    ctx.truncation = 30;
    ctx.precision = 50;
    const ConsistencyReport nonzero = consistency_report({1, single(1, exact("1")), single(1, exact("1"))}, ctx);
    EXPECT_TRUE(nonzero.agree);
    EXPECT_EQ(nonzero.numeric_verdict.decision, Decision::NonZero);
    EXPECT_GT(nonzero.berezin_deviation, 1e-4L);
    const ConsistencyReport constant =
        consistency_report({1, single(1, exact("0"), exact("2")), single(1, exact("1", "-1"))}, ctx);
    EXPECT_TRUE(constant.agree);
    EXPECT_LT(constant.berezin_deviation, 1e-8L);
    ctx.truncation = 60;
    ctx.precision = 80;
    const ConsistencyReport lattice =
        consistency_report({0, single(0, exact("0", kMinusTwoPi)), single(0, exact("1"))}, ctx);
    EXPECT_TRUE(lattice.agree);
    EXPECT_LT(lattice.berezin_deviation, 1e-8L);
}

TEST(Consistency, DetectsForcedMismatch) {
    NumericContext ctx;
    ctx.truncation = 40;
    ctx.precision = 30;
    ctx.tolerance = 1e-15L;
    const ConsistencyReport r =
        consistency_report({0, single(0, exact("0", "-6.2831853071795866")), single(0, exact("1"))}, ctx);
    EXPECT_FALSE(r.agree);
    EXPECT_EQ(r.theorem_verdict->decision, Decision::Zero);
    EXPECT_EQ(r.numeric_verdict.decision, Decision::NonZero);
}

}  // namespace
}  // namespace fockcheck
