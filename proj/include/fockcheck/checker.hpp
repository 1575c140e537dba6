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

// Zero / non-zero decisions for semi-commutators: structural verdicts from
// the symbol class, numeric verdicts from truncated matrices, and the
// cross-check between them.

#ifndef FOCKCHECK_CHECKER_HPP
#define FOCKCHECK_CHECKER_HPP

#include "fockcheck/operators.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace fockcheck {

enum class Decision { Zero, NonZero, Inconclusive };
enum class Route { Theorem, Numeric };

const char* to_string(Decision d);
const char* to_string(Route r);

struct Witness {
    unsigned i = 0;
    unsigned j = 0;
    long double magnitude = 0.0L;
};

struct Verdict {
    Decision decision = Decision::Inconclusive;
    Route route = Route::Theorem;
    std::string certificate;
    /// Present on every NonZero verdict of the numeric route.
    std::optional<Witness> witness;
    /// Numeric route only: max entry, truncation error and the threshold T.
    long double max_entry = 0.0L;
    long double truncation_error = 0.0L;
    std::optional<long double> threshold;
};

/// Kernel combinations. For m >= 1 zero iff one side is constant; for m = 0
/// also zero when every conj(a_j) b_l lies in 2 pi i Z within 10^(-P/2).
Verdict decide_semicommutator(const KernelCombo<ExactComplex>& f, const KernelCombo<ExactComplex>& g, unsigned m,
                              const NumericContext& ctx);
/// Polynomials, any m: zero iff one side has degree 0.
Verdict decide_polynomial(const MonomialSeries<ExactComplex>& f, const MonomialSeries<ExactComplex>& g, unsigned m);

/// Structural verdict when the pair falls in a class with a known answer.
std::optional<Verdict> theorem_verdict(const SymbolPair& pair, const NumericContext& ctx);

/// Verdict from the truncated semi-commutator: Zero below T = 10 * error + tau,
/// NonZero above 10 T, Inconclusive in between.
Verdict numeric_verdict(const SymbolPair& pair, const NumericContext& ctx);
/// The same classification for an already computed semi-commutator matrix.
template <Scalar C>
Verdict verdict_from_matrix(const OperatorMatrix<C>& t, const NumericContext& ctx);

struct ConsistencyReport {
    std::optional<Verdict> theorem_verdict;
    Verdict numeric_verdict;
    /// max over the grid of |Berezin(f conj g)(z) - f(z) conj(g(z))|.
    long double berezin_deviation = 0.0L;
    long double berezin_error = 0.0L;
    long double berezin_zero_threshold = 0.0L;
    bool agree = false;
    std::string disagreement;
};

/// The 3 x 3 grid {-1, 0, 1} + i {-1, 0, 1}.
std::vector<ExactComplex> berezin_grid();

/// Largest Berezin deviation over the grid and the matching error bound.
std::pair<long double, long double> berezin_deviation(const SymbolPair& pair, const NumericContext& ctx);

ConsistencyReport consistency_report(const SymbolPair& pair, const NumericContext& ctx);

nlohmann::json verdict_json(const Verdict& v);
nlohmann::json consistency_json(const ConsistencyReport& r);

}  // namespace fockcheck

#endif  // FOCKCHECK_CHECKER_HPP
