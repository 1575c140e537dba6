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

// Truncated Toeplitz matrices in the monomial basis, semi-commutators,
// Hankel Gram entries and the Berezin transform.

#ifndef FOCKCHECK_OPERATORS_HPP
#define FOCKCHECK_OPERATORS_HPP

#include "fockcheck/symbols.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace fockcheck {

/// T_{z^p conj(z)^q} z^j = coef z^degree; no degree when the image is zero.
struct MonoAction {
    Rational coef;
    std::optional<unsigned> degree;
};

MonoAction toeplitz_mono_action(unsigned m, unsigned p, unsigned q, unsigned j);

/// Operator on span{z^0..z^N}. `gram` holds <T z^j, z^i>_m row-major; the
/// orthonormal entry is gram / sqrt(n_i n_j) with n_k = (k+m)!/m!.
template <Scalar C>
struct OperatorMatrix {
    unsigned m = 0;
    unsigned N = 0;
    std::vector<C> gram;
    std::vector<Rational> norms;
    /// Bound on |computed - true| of each orthonormal entry (infinite when
    /// the column is not valid).
    std::vector<long double> entry_error;
    /// Column j is correct up to entry_error.
    std::vector<bool> column_valid;
    /// T z^j lies inside the truncated space.
    std::vector<bool> column_closed;
    /// Maximum entry_error over valid columns.
    long double truncation_error = 0.0L;

    unsigned size() const { return N + 1; }
    std::size_t index(unsigned i, unsigned j) const { return static_cast<std::size_t>(i) * (N + 1) + j; }
    const C& gram_at(unsigned i, unsigned j) const { return gram[index(i, j)]; }
    long double error_at(unsigned i, unsigned j) const { return entry_error[index(i, j)]; }
    /// Orthonormal entry <T e_j, e_i> at the working precision.
    BigComplex entry(unsigned i, unsigned j) const;
    /// Upper bound on |entry(i, j)|.
    long double entry_magnitude(unsigned i, unsigned j) const;
    /// Coefficient of z^i in T z^j.
    C monomial_coefficient(unsigned i, unsigned j) const;
};

/// T_f, T_{conj g} and T_{f conj g} for analytic f, g.
struct AnalyticOperator {
    AnalyticSymbol f;
};
struct ConjugateOperator {
    AnalyticSymbol g;
};
struct ProductOperator {
    AnalyticSymbol f;
    AnalyticSymbol g;
};

template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const MixedSymbol<C>& symbol, unsigned m, const NumericContext& ctx);
/// Same matrix from <phi z^j, z^i>_m = sum c <z^(j+p), z^(i+q)>_m only.
template <Scalar C>
OperatorMatrix<C> toeplitz_matrix_oracle(const MixedSymbol<C>& symbol, unsigned m, const NumericContext& ctx);

/// The series of f and g are taken to degree `degree` (at least N).
template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const AnalyticOperator& op, unsigned m, unsigned degree, const NumericContext& ctx);
template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const ConjugateOperator& op, unsigned m, unsigned degree, const NumericContext& ctx);
template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const ProductOperator& op, unsigned m, unsigned degree, const NumericContext& ctx);

/// Matrix of A B restricted to the truncated space.
template <Scalar C>
OperatorMatrix<C> compose(const OperatorMatrix<C>& a, const OperatorMatrix<C>& b);
template <Scalar C>
OperatorMatrix<C> subtract(const OperatorMatrix<C>& a, const OperatorMatrix<C>& b);

/// Series degree used for the product symbol: grows from 2N+20 until the
/// neglected tail is below 10^(-P), capped at 6N+400.
unsigned product_series_degree(const SymbolPair& pair, const NumericContext& ctx);

/// T_{f conj g} - T_f T_{conj g}. The exact kind requires polynomial symbols.
template <Scalar C>
OperatorMatrix<C> semi_commutator_matrix(const SymbolPair& pair, const NumericContext& ctx);

/// sum_{k >= max(0, j-l)} m!/(k+m)! (l+k+m)!/(k+l-j+m)! A^k B^(l+k-j)
///   - sum_{k <= j} m!/(k+m)! (j+m)!/(k+l-j+m)! (l+m)!/(j-k+m)! A^k B^(l+k-j),
/// with the infinite sum cut after `terms` terms and its tail bounded.
Estimate coefficient_pair_series(unsigned j, unsigned l, unsigned m, const BigComplex& A, const BigComplex& B,
                                 unsigned terms, const NumericContext& ctx);

/// Coefficient of z^j in (T_{f conj g} - T_f T_{conj g}) z^l times ||z^j||^2,
/// assembled from node pairs: sum a_i conj(b_lambda) C(j, l; conj(A_i), B_lambda).
Estimate semicomm_coefficient(const KernelCombo<ExactComplex>& f, const KernelCombo<ExactComplex>& g, unsigned l,
                              unsigned j, const NumericContext& ctx);

/// <H_{conj g} e_j, H_{conj f} e_i>_m from inner products and the projection sum.
class HankelGram {
   public:
    HankelGram(const SymbolPair& pair, const NumericContext& ctx);
    Estimate entry(unsigned i, unsigned j) const;

   private:
    unsigned m_;
    NumericContext ctx_;
    MonomialSeries<BigComplex> f_;
    MonomialSeries<BigComplex> g_;
    std::vector<BigFloat> weight_;
    std::vector<long double> log_weight_;
    Majorant fm_;
    Majorant gm_;
};

Estimate hankel_gram_entry(const SymbolPair& pair, unsigned i, unsigned j, const NumericContext& ctx);

/// <f conj(g) k_z, k_z>_m for the normalized kernel k_z.
Estimate berezin_transform(const SymbolPair& pair, const BigComplex& z, const NumericContext& ctx);

/// Majorant of the series, or a synthetic one for polynomials.
template <Scalar C>
Majorant effective_majorant(const MonomialSeries<C>& s);

/// log((k+m)!/m!).
long double log_norm(unsigned m, unsigned k);

}  // namespace fockcheck

#endif  // FOCKCHECK_OPERATORS_HPP
