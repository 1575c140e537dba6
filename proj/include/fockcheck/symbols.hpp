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

// Symbol classes: kernel combinations, power series, polynomials,
// exponentials and mixed z / conj(z) polynomials, plus their JSON form.

#ifndef FOCKCHECK_SYMBOLS_HPP
#define FOCKCHECK_SYMBOLS_HPP

#include "fockcheck/fock_core.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fockcheck {

template <Scalar C>
struct KernelTerm {
    C coeff;
    C node;
};

/// f(z) = sum_i coeff_i K_m(z, node_i).
template <Scalar C>
struct KernelCombo {
    unsigned m = 0;
    std::vector<KernelTerm<C>> terms;
};

/// Coefficient majorant |a_k| <= scale * radius^k * shift!/(k+shift)!,
/// valid for every k. Used to bound series tails weighted by monomial norms.
struct Majorant {
    long double scale = 0.0L;
    long double radius = 0.0L;
    unsigned shift = 0;

    long double log_bound(unsigned k) const;
};

/// sum_k coeffs[k] z^k with tail_bound >= sum_{k >= size} |a_k|. A series
/// without a majorant is a polynomial.
template <Scalar C>
struct MonomialSeries {
    unsigned m = 0;
    std::vector<C> coeffs;
    long double tail_bound = 0.0L;
    std::optional<Majorant> majorant;

    unsigned degree() const { return coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1); }
    bool finite() const { return !majorant || majorant->scale == 0.0L; }
    /// Coefficient k, or zero past the stored range.
    C coeff(unsigned k) const { return k < coeffs.size() ? coeffs[k] : C(); }
};

struct Polynomial {
    std::vector<ExactComplex> coeffs;
};

/// e^{a z}.
struct ExpSymbol {
    ExactComplex a;
};

using AnalyticSymbol =
    std::variant<KernelCombo<ExactComplex>, Polynomial, ExpSymbol, MonomialSeries<ExactComplex>>;

template <Scalar C>
struct MixedTerm {
    C coeff;
    unsigned p = 0;
    unsigned q = 0;
};

/// sum coeff z^p conj(z)^q.
template <Scalar C>
struct MixedSymbol {
    std::vector<MixedTerm<C>> terms;
};

/// Operand pair of a semi-commutator T_{f conj(g)} - T_f T_{conj(g)}.
struct SymbolPair {
    unsigned m = 0;
    AnalyticSymbol f;
    AnalyticSymbol g;
};

/// Mixed-symbol document consumed by the toeplitz command.
struct MixedSpec {
    unsigned m = 0;
    MixedSymbol<ExactComplex> symbol;
};

/* ---------------------------------------------------------- combinations */

/// Merges equal nodes and drops zero coefficients (exact equality).
KernelCombo<ExactComplex> normalize_combo(const KernelCombo<ExactComplex>& f);
/// Nodes closer than 10^(-P/2) are merged; coefficients below 10^(-P/2) dropped.
KernelCombo<BigComplex> normalize_combo(const KernelCombo<BigComplex>& f, const NumericContext& ctx);

/// True for a normalized combination that is empty or has only the node 0.
template <Scalar C>
bool is_constant(const KernelCombo<C>& normalized) {
    for (const auto& t : normalized.terms)
        if (!t.node.is_zero()) return false;
    return true;
}

/// Coefficients of f up to degree N = ctx.truncation. Throws
/// TruncationGuardError unless N + m >= 2 max|node|.
template <Scalar C>
MonomialSeries<C> expand_kernel_combo(const KernelCombo<C>& f, const NumericContext& ctx);
/// Same expansion to an explicit degree, without the guard.
template <Scalar C>
MonomialSeries<C> expand_kernel_combo_to(const KernelCombo<C>& f, unsigned degree, const NumericContext& ctx);

/// Coefficients a^k/k! of e^{az} up to ctx.truncation; guard N >= 2|a|.
template <Scalar C>
MonomialSeries<C> exp_series(const C& a, const NumericContext& ctx);

/// Maximum coefficient deviation between e^{conj(a) z} and
/// (conj(a) z)^m K_m(z,a)/m! + q_m(conj(a) z) up to degree N.
template <Scalar C>
long double exp_kernel_identity_check(unsigned m, const C& a, const NumericContext& ctx);

/* -------------------------------------------------------- analytic symbols */

bool is_constant(const AnalyticSymbol& f);
/// True when the symbol is a polynomial (finitely many non-zero coefficients).
bool is_finite(const AnalyticSymbol& f);
/// Radius governing series growth: max |node| or |a|; 0 for polynomials.
long double growth_radius(const AnalyticSymbol& f);
/// Throws TruncationGuardError unless N >= 2 R + m + 10 for transcendental symbols.
void check_truncation_guard(const AnalyticSymbol& f, unsigned m, const NumericContext& ctx);

/// Taylor coefficients of f to `degree`, with tail bound and majorant.
template <Scalar C>
MonomialSeries<C> series_to_degree(const AnalyticSymbol& f, unsigned m, unsigned degree, const NumericContext& ctx);

BigComplex evaluate(const AnalyticSymbol& f, unsigned m, const BigComplex& z, const NumericContext& ctx);

KernelCombo<BigComplex> to_big(const KernelCombo<ExactComplex>& f);
MonomialSeries<BigComplex> to_big(const MonomialSeries<ExactComplex>& f);
MixedSymbol<BigComplex> to_big(const MixedSymbol<ExactComplex>& f);

/// Merges duplicate (p, q), drops zero coefficients, sorts by (p, q).
template <Scalar C>
MixedSymbol<C> canonical(const MixedSymbol<C>& s);

/* ---------------------------------------------------------------- JSON */

SymbolPair parse_symbol_spec(const std::string& text);
std::string serialize_symbol_spec(const SymbolPair& pair);
nlohmann::json symbol_pair_json(const SymbolPair& pair);
nlohmann::json analytic_symbol_json(const AnalyticSymbol& f);

MixedSpec parse_mixed_spec(const std::string& text);
nlohmann::json mixed_spec_json(const MixedSpec& spec);

/// True when the document's top level has a "symbol" field (mixed spec).
bool is_mixed_spec(const std::string& text);

nlohmann::json complex_json(const ExactComplex& z);
nlohmann::json complex_json(const BigComplex& z, unsigned digits);

}  // namespace fockcheck

#endif  // FOCKCHECK_SYMBOLS_HPP
