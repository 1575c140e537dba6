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

// Falling-factorial expansions, the C(j, l) sums and their closed form, the
// Theta coefficient, rho(j) with its difference chain, the exponential
// obstruction, roots of K_m(x) = 1 and Vandermonde determinants.

#ifndef FOCKCHECK_IDENTITIES_HPP
#define FOCKCHECK_IDENTITIES_HPP

#include "fockcheck/operators.hpp"

#include <string>
#include <vector>

namespace fockcheck {

/// Coordinates of P(u) = prod_{i=1}^{j} (l + u - j + i) in the falling
/// factorial basis u(u-1)...(u-i+1), where u = k + m.
struct XiCoefficients {
    unsigned j = 0;
    unsigned l = 0;
    unsigned m = 0;
    std::vector<Rational> C;
};

XiCoefficients xi_coeffs(unsigned j, unsigned l, unsigned m);
/// prod_{i=1}^{j} (l + k + m - j + i).
Rational xi_product(unsigned j, unsigned l, unsigned m, unsigned k);
/// C_0 + sum_i C_i prod_{lambda<i} (k + m - lambda).
Rational xi_reconstruction(const XiCoefficients& xi, unsigned k);
/// prod_{i=1}^{j} (l+m+i) - sum_i C_i (m+j)!/(m+j-i)!; zero when the expansion holds.
Rational xi_endpoint_defect(const XiCoefficients& xi);
/// prod (l+m+i)/(m+i) - 1 - sum_{i<j} C_i m!/(j-i+m)!; zero by the endpoint identity.
Rational xi_cancellation_defect(const XiCoefficients& xi);

/// The two sums defining C(j, l) with the infinite one cut at N = ctx.truncation.
Estimate cjl_series(unsigned j, unsigned l, unsigned m, const BigComplex& A, const BigComplex& B,
                    const NumericContext& ctx);
/// J - M + (E - 1) sum_{i=0}^{j} C_i A^i B^(l+i-j) with E = K_m(AB).
Estimate cjl_closed(unsigned j, unsigned l, unsigned m, const BigComplex& A, const BigComplex& B,
                    const NumericContext& ctx);

/// Q_k for 1 <= k <= j-1.
Rational q_coefficient(unsigned j, unsigned l, unsigned m, unsigned k);

struct ThetaValues {
    Rational definitional;
    Rational closed;
};

ThetaValues theta(unsigned j, unsigned l, unsigned m);

/// Theta recovered numerically as the A^(j-1) B^(l-1) coefficient of
/// cjl_series - (E-1) sum C_i A^i B^(l+i-j), by sampling j-1 values of A and
/// solving for the polynomial coefficients.
Estimate theta_from_series(unsigned j, unsigned l, unsigned m, const NumericContext& ctx);

/// rho(j) = sum_{k>=1} x^k/k! prod_{i=1}^{m} (k+j+i), cut at N.
Estimate rho(unsigned j, const BigComplex& x, unsigned m, const NumericContext& ctx);
/// x e^x + (j+1)(e^x - 1): rho at m = 1.
BigComplex rho_closed_m1(unsigned j, const BigComplex& x, const NumericContext& ctx);

struct ChainStep {
    unsigned r = 0;  // order of the forward difference in j
    unsigned b = 0;  // base point
    BigComplex from_chain;
    BigComplex direct;
    long double residual = 0.0L;
    long double bound = 0.0L;
};

struct ChainResult {
    unsigned m = 0;
    std::vector<ChainStep> steps;
    /// sum_{k>=1} x^k/k! (k+m) and sum_{k>=1} x^k/k! (k+m-1)(k+m).
    Estimate first;
    Estimate second;
    /// False when m = 1: the second sum has no difference-chain source.
    bool second_from_chain = true;
    BigComplex first_closed;
    BigComplex second_closed;
};

/// Forward differences of rho(0..m+2) reduced to the two sums above, every
/// intermediate compared with its direct series.
ChainResult rho_difference_chain(const BigComplex& x, unsigned m, const NumericContext& ctx);

struct ObstructionCertificate {
    unsigned m = 0;
    Rational x_required;
    Rational exp_required;
    /// |e^x_required - exp_required| = e^{-(m+1)} + m.
    BigFloat gap;
    /// (second equation) - (m-1) (first equation), as a polynomial in x and Y = e^x.
    std::string eliminated;
    bool system_satisfied = false;
};

ObstructionCertificate exp_obstruction(unsigned m, const NumericContext& ctx);

struct Region {
    long double x0 = -1.0L;
    long double x1 = 1.0L;
    long double y0 = -30.0L;
    long double y1 = 30.0L;
    bool contains(long double re, long double im) const { return re >= x0 && re <= x1 && im >= y0 && im <= y1; }
};

/// Non-zero roots of K_m(x) = 1 in the region, from grid seeds and Newton.
std::vector<BigComplex> kernel_one_roots(unsigned m, const Region& region, const NumericContext& ctx);

template <Scalar C>
struct VandermondeResult {
    C det;
    bool independent = false;
};

/// prod w_i prod_{l<j} (w_j - w_l), the determinant of (w_lambda^k), k = 1..N.
template <Scalar C>
VandermondeResult<C> vandermonde_independence(const std::vector<C>& nodes, const NumericContext& ctx);

}  // namespace fockcheck

#endif  // FOCKCHECK_IDENTITIES_HPP
