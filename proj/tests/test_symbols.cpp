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

#include "fockcheck/symbols.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

namespace fockcheck {
namespace {

using testing::exact;

const char* kPair = R"({"m": 1,
  "f": {"kind": "kernel_combo", "terms": [{"c": {"re": "2"}, "w": {"re": "1", "im": "-0.5"}},
                                          {"c": {"re": "1"}, "w": {"re": "0"}}]},
  "g": {"kind": "poly", "coeffs": [{"re": "0"}, {"re": "1", "im": "1/3"}]}})";

TEST(SymbolSpec, RoundTripsThroughCanonicalJson) {
    const SymbolPair pair = parse_symbol_spec(kPair);
    EXPECT_EQ(pair.m, 1u);
    const std::string canonical = serialize_symbol_spec(pair);
    EXPECT_EQ(serialize_symbol_spec(parse_symbol_spec(canonical)), canonical);
    EXPECT_NE(canonical.find("\"1/3\""), std::string::npos);
}

TEST(SymbolSpec, ErrorsNameTheField) {
    const auto path_of = [](const std::string& doc) {
        try {
            parse_symbol_spec(doc);
        } catch (const ParseError& e) {
            return e.path();
        }
        return std::string("no error");
    };
    EXPECT_EQ(path_of("{not json"), "$");
    EXPECT_EQ(path_of(R"({"m": 1, "f": {"kind": "nope"}, "g": {"kind": "poly", "coeffs": []}})"), "f.kind");
    EXPECT_EQ(path_of(R"({"m": 1, "f": {"kind": "exp", "a": {"re": 1}}, "g": {"kind": "poly", "coeffs": []}})"),
              "f.a.re");
    EXPECT_EQ(path_of(R"({"m": -1, "f": {"kind": "poly", "coeffs": []}, "g": {"kind": "poly", "coeffs": []}})"), "m");
    EXPECT_EQ(path_of(R"({"m": 0, "f": {"kind": "kernel_combo", "terms": [{"c": {"re": "1"}}]},
                        "g": {"kind": "poly", "coeffs": []}})"),
              "f.terms[0].w");
}

TEST(SymbolSpec, MixedSymbols) {
    const char* doc = R"({"m": 2, "symbol": {"kind": "mixed", "terms": [{"c": {"re": "1"}, "p": 1, "q": 2},
                                                                       {"c": {"re": "-1"}, "p": 1, "q": 2}]}})";
    EXPECT_TRUE(is_mixed_spec(doc));
    EXPECT_FALSE(is_mixed_spec(kPair));
    const MixedSpec spec = parse_mixed_spec(doc);
    EXPECT_EQ(spec.m, 2u);
    EXPECT_TRUE(canonical(spec.symbol).terms.empty());
}

TEST(KernelCombo, NormalizationMergesNodesAndDropsZeros) {
    KernelCombo<ExactComplex> f{1, {{exact("1"), exact("0.5", "1")}, {exact("-1"), exact("1/2", "1")}, {exact("3"), exact("0")}}};
    const auto n = normalize_combo(f);
    ASSERT_EQ(n.terms.size(), 1u);
    EXPECT_TRUE(is_constant(n));
    NumericContext ctx;
    const PrecisionScope scope(ctx.bits());
    KernelCombo<BigComplex> g{1, {{to_big(exact("1")), testing::big("0.5", "0")},
                                  {to_big(exact("1")), testing::big("0.5000000000000000000000000000000000000001", "0")}}};
    EXPECT_EQ(normalize_combo(g, ctx).terms.size(), 1u);
}

TEST(KernelCombo, ExpansionCoefficients) {
    // K_2(z, w) = sum 2! (z conj w)^k/(k+2)!
    const KernelCombo<ExactComplex> f{2, {{exact("3"), exact("0", "1")}}};
    NumericContext ctx;
    ctx.truncation = 6;
    const auto s = expand_kernel_combo(f, ctx);
    ASSERT_EQ(s.coeffs.size(), 7u);
    EXPECT_EQ(s.coeffs[0], exact("3"));
    EXPECT_EQ(s.coeffs[1], exact("0", "-1"));
    EXPECT_EQ(s.coeffs[2], exact("-1/4"));
    EXPECT_EQ(s.coeffs[3], exact("0", "1/20"));
    EXPECT_GT(s.tail_bound, 0.0L);
    EXPECT_LT(s.tail_bound, 1e-4L);
}

TEST(KernelCombo, GuardRejectsShortExpansion) {
    const KernelCombo<ExactComplex> f{0, {{exact("1"), exact("20")}}};
    NumericContext ctx;
    ctx.truncation = 30;
    EXPECT_THROW(expand_kernel_combo(f, ctx), TruncationGuardError);
    const AnalyticSymbol sym = f;
    EXPECT_THROW(check_truncation_guard(sym, 0, ctx), TruncationGuardError);
    ctx.truncation = 51;
    EXPECT_NO_THROW(check_truncation_guard(sym, 0, ctx));
    // Polynomials never trip the guard.
    EXPECT_NO_THROW(check_truncation_guard(AnalyticSymbol(Polynomial{{exact("1"), exact("100")}}), 0, ctx));
}

TEST(Exponential, SeriesAndKernelIdentity) {
    NumericContext ctx;
    ctx.truncation = 12;
    const auto s = exp_series(exact("2"), ctx);
    EXPECT_EQ(s.coeffs[3], exact("4/3"));
    for (unsigned m = 0; m <= 4; ++m) {
        EXPECT_EQ(exp_kernel_identity_check<ExactComplex>(m, exact("0.5", "-1.5"), ctx), 0.0L);
        const PrecisionScope scope(ctx.bits());
        EXPECT_LT(exp_kernel_identity_check<BigComplex>(m, testing::big("0.5", "-1.5"), ctx), 1e-60L);
    }
}

TEST(AnalyticSymbol, ClassificationAndEvaluation) {
    const SymbolPair pair = parse_symbol_spec(kPair);
    EXPECT_FALSE(is_constant(pair.f));
    EXPECT_FALSE(is_finite(pair.f));
    EXPECT_TRUE(is_finite(pair.g));
    EXPECT_TRUE(is_constant(AnalyticSymbol(ExpSymbol{exact("0")})));
    EXPECT_NEAR(static_cast<double>(growth_radius(pair.f)), std::hypot(1.0, 0.5), 1e-12);
    NumericContext ctx;
    const PrecisionScope scope(ctx.bits());
    // g(z) = (1 + i/3) z at z = 3: 3 + i.
    EXPECT_LT(testing::distance(evaluate(pair.g, 1, testing::big("3", "0"), ctx), "3", "1"), 1e-55L);
    // e^{az} at z = 1 equals e^a.
    const BigComplex e = evaluate(ExpSymbol{exact("1")}, 0, testing::big("1", "0"), ctx);
    EXPECT_LT(testing::distance(e, "2.71828182845904523536028747135266249775724709369995957496697", "0"), 1e-55L);
}

}  // namespace
}  // namespace fockcheck
