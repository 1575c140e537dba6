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

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>

namespace fockcheck {

namespace {

void require_jl(unsigned j, unsigned l) {
    if (j < 2 || l < j) throw UsageError("requires l >= j >= 2 (got j = " + std::to_string(j) + ", l = " +
                                         std::to_string(l) + ")");
}

void guard_radius(long double r, unsigned m, const NumericContext& ctx, const char* what) {
    const long double need = 2.0L * r + m + 10.0L;
    if (static_cast<long double>(ctx.truncation) < need)
        throw TruncationGuardError(std::string("truncation degree ") + std::to_string(ctx.truncation) +
                                   " is below 2|" + what + "| + m + 10 = " + format_bound(need));
}

Rational binomial(unsigned n, unsigned k) { return factorial_ratio(n, k) / factorial(n - k); }

}  // namespace

/* ----------------------------------------------------------------- Xi */

Rational xi_product(unsigned j, unsigned l, unsigned m, unsigned k) {
    Rational p(1);
    for (unsigned i = 1; i <= j; ++i) p *= Rational(static_cast<long long>(l + k + m + i) - j);
    return p;
}

XiCoefficients xi_coeffs(unsigned j, unsigned l, unsigned m) {
    require_jl(j, l);
    // Newton forward differences of P(u) = prod_{i=1}^{j} (l + u - j + i) on u = 0..j.
    std::vector<Rational> diff;
    for (unsigned u = 0; u <= j; ++u) {
        Rational p(1);
        for (unsigned i = 1; i <= j; ++i) p *= Rational(static_cast<long long>(l + u + i) - j);
        diff.push_back(p);
    }
    XiCoefficients xi{j, l, m, {}};
    for (unsigned i = 0; i <= j; ++i) {
        xi.C.push_back(diff[0] / factorial(i));
        for (unsigned t = 0; t + 1 < diff.size(); ++t) diff[t] = diff[t + 1] - diff[t];
        diff.pop_back();
    }
    return xi;
}

Rational xi_reconstruction(const XiCoefficients& xi, unsigned k) {
    Rational sum = xi.C[0];
    Rational falling(1);
    for (unsigned i = 1; i <= xi.j; ++i) {
        falling *= Rational(static_cast<long long>(k + xi.m) - (i - 1));
        sum += xi.C[i] * falling;
    }
    return sum;
}

Rational xi_endpoint_defect(const XiCoefficients& xi) {
    Rational lhs(1);
    for (unsigned i = 1; i <= xi.j; ++i) lhs *= xi.l + xi.m + i;
    Rational rhs;
    for (unsigned i = 0; i <= xi.j; ++i) rhs += xi.C[i] * factorial_ratio(xi.m + xi.j, xi.m + xi.j - i);
    return lhs - rhs;
}

Rational xi_cancellation_defect(const XiCoefficients& xi) {
    Rational ratio(1);
    for (unsigned i = 1; i <= xi.j; ++i) ratio *= Rational(xi.l + xi.m + i, xi.m + i);
    Rational sum;
    for (unsigned i = 0; i < xi.j; ++i) sum += xi.C[i] * factorial_ratio(xi.m, xi.j - i + xi.m);
    return ratio - 1 - sum;
}

/* ------------------------------------------------------------- C(j, l) */

Rational q_coefficient(unsigned j, unsigned l, unsigned m, unsigned k) {
    require_jl(j, l);
    if (k < 1 || k > j - 1) throw UsageError("Q_k requires 1 <= k <= j - 1 (got k = " + std::to_string(k) + ")");
    const Rational lead = factorial_ratio(m, k + m);
    return lead * (factorial_ratio(l + k + m, k + l - j + m) -
                   factorial_ratio(j + m, k + l - j + m) * factorial_ratio(l + m, j - k + m));
}

Estimate cjl_series(unsigned j, unsigned l, unsigned m, const BigComplex& A, const BigComplex& B,
                    const NumericContext& ctx) {
    require_jl(j, l);
    guard_radius(magnitude(A) * magnitude(B), m, ctx, "AB");
    return coefficient_pair_series(j, l, m, A, B, ctx.truncation + 1, ctx);
}

Estimate cjl_closed(unsigned j, unsigned l, unsigned m, const BigComplex& A, const BigComplex& B,
                    const NumericContext& ctx) {
    require_jl(j, l);
    const XiCoefficients xi = xi_coeffs(j, l, m);
    const PrecisionScope scope(ctx.bits());
    const long double u = rounding_unit<BigComplex>();
    const BigComplex ab = A * B;
    const BigComplex e = kernel_eval(m, ab, ctx);
    // A^i B^(l+i-j) for i = 0..j.
    std::vector<BigComplex> mono;
    for (unsigned i = 0; i <= j; ++i) mono.push_back(pow(A, i) * pow(B, l + i - j));
    long double abs_sum = 0.0L;
    BigComplex jsum;
    for (unsigned k = 1; k + 1 <= j; ++k) {
        const BigComplex t = mono[k] * BigFloat(q_coefficient(j, l, m, k));
        abs_sum += magnitude(t);
        jsum += t;
    }
    BigComplex msum;
    for (unsigned i = 0; i + 2 <= j; ++i) {
        BigComplex inner;
        for (unsigned k = 1; k + i + 1 <= j; ++k) inner += pow(ab, k) * BigFloat(factorial_ratio(m, k + m));
        const BigComplex t = mono[i] * BigFloat(xi.C[i]) * inner;
        abs_sum += magnitude(t);
        msum += t;
    }
    BigComplex csum;
    for (unsigned i = 0; i <= j; ++i) csum += mono[i] * BigFloat(xi.C[i]);
    const BigComplex correction = (e - BigComplex(BigFloat(1))) * csum;
    abs_sum += magnitude(correction) + magnitude(csum) * (1.0L + magnitude(e));
    const long double e_err = std::pow(10.0L, -static_cast<long double>(ctx.precision)) * (1.0L + magnitude(e));
    return {jsum - msum + correction, e_err * magnitude(csum) + 8.0L * (j + 2) * (j + 2) * u * abs_sum};
}

/* --------------------------------------------------------------- Theta */

ThetaValues theta(unsigned j, unsigned l, unsigned m) {
    require_jl(j, l);
    const XiCoefficients xi = xi_coeffs(j, l, m);
    Rational def = q_coefficient(j, l, m, j - 1);
    for (unsigned i = 0; i + 2 <= j; ++i) def -= xi.C[i] * factorial_ratio(m, j - i - 1 + m);
    return {def, Rational(m * (j - 1) * (l - 1), m + 1)};
}

Estimate theta_from_series(unsigned j, unsigned l, unsigned m, const NumericContext& ctx) {
    require_jl(j, l);
    const XiCoefficients xi = xi_coeffs(j, l, m);
    const unsigned n = j - 1;
    const PrecisionScope scope(ctx.bits());
    const BigComplex one(BigFloat(1));
    // With B = 1 the reduced sum is sum_{t=1}^{j-1} theta_t A^t.
    std::vector<std::vector<BigFloat>> v(n, std::vector<BigFloat>(n));
    std::vector<BigComplex> rhs(n);
    long double eval_err = 0.0L;
    for (unsigned s = 0; s < n; ++s) {
        const BigFloat a = BigFloat(Rational(s + 1, 4 * j));
        for (unsigned t = 0; t < n; ++t) v[s][t] = pow_int(a, t + 1);
        const BigComplex A(a);
        const Estimate series = cjl_series(j, l, m, A, one, ctx);
        const BigComplex e = kernel_eval(m, A, ctx);
        BigComplex csum;
        for (unsigned i = 0; i <= j; ++i) csum += BigComplex(pow_int(a, i)) * BigFloat(xi.C[i]);
        rhs[s] = series.value - (e - one) * csum;
        const long double e_err = ctx.precision_threshold(0) * (1.0L + magnitude(e));
        eval_err = std::max(eval_err, series.error + e_err * magnitude(csum) +
                                          8.0L * rounding_unit<BigComplex>() * magnitude(series.value));
    }
    // Gauss-Jordan inverse of the sample matrix.
    std::vector<std::vector<BigFloat>> inv(n, std::vector<BigFloat>(n));
    for (unsigned s = 0; s < n; ++s) inv[s][s] = BigFloat(1);
    for (unsigned c = 0; c < n; ++c) {
        unsigned pivot = c;
        for (unsigned r = c + 1; r < n; ++r)
            if (abs(v[r][c]) > abs(v[pivot][c])) pivot = r;
        std::swap(v[c], v[pivot]);
        std::swap(inv[c], inv[pivot]);
        const BigFloat d = v[c][c];
        for (unsigned t = 0; t < n; ++t) {
            v[c][t] /= d;
            inv[c][t] /= d;
        }
        for (unsigned r = 0; r < n; ++r) {
            if (r == c) continue;
            const BigFloat f = v[r][c];
            for (unsigned t = 0; t < n; ++t) {
                v[r][t] -= f * v[c][t];
                inv[r][t] -= f * inv[c][t];
            }
        }
    }
    BigComplex value;
    long double row_norm = 0.0L;
    for (unsigned s = 0; s < n; ++s) {
        value += rhs[s] * inv[n - 1][s];
        row_norm += abs(inv[n - 1][s]).to_long_double();
    }
    return {value, row_norm * eval_err * (1.0L + 1e-6L)};
}

/* ----------------------------------------------------------------- rho */

namespace {

/// sum_{k=1}^{N} x^k/k! prod_{i=lo}^{hi} (k+b+i) with tail bound.
Estimate product_weighted_exp(const BigComplex& x, unsigned b, unsigned lo, unsigned hi, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    const long double u = rounding_unit<BigComplex>();
    BigComplex sum;
    BigComplex power(BigFloat(1));
    long double abs_sum = 0.0L;
    for (unsigned k = 1; k <= ctx.truncation; ++k) {
        power = power * x / BigFloat(k);
        BigInt weight = 1;
        for (unsigned i = lo; i <= hi; ++i) weight *= k + b + i;
        const BigComplex t = power * BigFloat(weight);
        abs_sum += magnitude(t);
        sum += t;
    }
    long double tail = 0.0L;
    if (!x.is_zero()) {
        const long double lx = std::log(magnitude(x));
        tail = tail_sum_bound(
            [&](unsigned k) {
                long double s = k * lx - log_factorial(k);
                for (unsigned i = lo; i <= hi; ++i) s += std::log(static_cast<long double>(k + b + i));
                return s;
            },
            ctx.truncation + 1);
    }
    return {sum, tail + (hi - lo + 4.0L) * 2.0L * u * abs_sum};
}

}  // namespace

Estimate rho(unsigned j, const BigComplex& x, unsigned m, const NumericContext& ctx) {
    if (m < 1) throw UsageError("rho requires m >= 1");
    guard_radius(magnitude(x), m, ctx, "x");
    return product_weighted_exp(x, j, 1, m, ctx);
}

BigComplex rho_closed_m1(unsigned j, const BigComplex& x, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    const BigComplex ex = exp(x);
    return x * ex + (ex - BigComplex(BigFloat(1))) * BigFloat(j + 1);
}

ChainResult rho_difference_chain(const BigComplex& x, unsigned m, const NumericContext& ctx) {
    if (m < 1) throw UsageError("the difference chain requires m >= 1");
    guard_radius(magnitude(x), m, ctx, "x");
    const PrecisionScope scope(ctx.bits());
    const long double u = rounding_unit<BigComplex>();
    std::vector<Estimate> values;
    for (unsigned b = 0; b <= m + 2; ++b) values.push_back(rho(b, x, m, ctx));

    ChainResult out;
    out.m = m;
    const auto chain = [&](unsigned r, unsigned b) {
        // (m-r)!/m! Delta^r rho(b)
        BigComplex acc;
        long double err = 0.0L;
        long double abs_sum = 0.0L;
        for (unsigned t = 0; t <= r; ++t) {
            const BigComplex term = values[b + t].value * BigFloat(binomial(r, t));
            abs_sum += magnitude(term);
            err += binomial(r, t).convert_to<long double>() * values[b + t].error;
            if ((r - t) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        const Rational scale = factorial_ratio(m - r, m);
        const long double s = scale.convert_to<long double>();
        return Estimate{acc * BigFloat(scale), s * (err + (r + 3.0L) * u * abs_sum)};
    };
    for (unsigned r = 1; r + 1 <= m; ++r) {
        for (unsigned b = 0; b + r <= m + 2; ++b) {
            const Estimate c = chain(r, b);
            const Estimate d = product_weighted_exp(x, b, r + 1, m, ctx);
            ChainStep step;
            step.r = r;
            step.b = b;
            step.from_chain = c.value;
            step.direct = d.value;
            step.residual = magnitude(c.value - d.value);
            step.bound = c.error + d.error;
            out.steps.push_back(step);
        }
    }
    out.first = chain(m - 1, 0);
    if (m >= 2) {
        out.second = chain(m - 2, 0);
    } else {
        out.second = product_weighted_exp(x, 0, 0, 1, ctx);
        out.second_from_chain = false;
    }
    const BigComplex ex = exp(x);
    const BigComplex em1 = ex - BigComplex(BigFloat(1));
    out.first_closed = x * ex + em1 * BigFloat(m);
    out.second_closed = x * x * ex + x * ex * BigFloat(2 * m) + em1 * BigFloat(m * (m - 1));
    return out;
}

/* ---------------------------------------------------------- obstruction */

namespace {

/// Polynomial in x and Y with rational coefficients, keyed by (deg x, deg Y).
using Poly2 = std::map<std::pair<unsigned, unsigned>, Rational>;

Poly2 combine(const Poly2& a, const Rational& s, const Poly2& b) {
    Poly2 out = a;
    for (const auto& [k, c] : b) out[k] += s * c;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::string to_string(const Poly2& p) {
    std::string out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        const auto [dx, dy] = it->first;
        Rational c = it->second;
        const bool negative = c < 0;
        if (negative) c = -c;
        out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
        std::string mono;
        if (dx == 1) mono = "x";
        if (dx > 1) mono = "x^" + std::to_string(dx);
        if (dy > 0) mono += (mono.empty() ? "" : "*") + std::string(dy == 1 ? "Y" : "Y^" + std::to_string(dy));
        if (mono.empty())
            out += format_rational(c);
        else
            out += (c == 1 ? "" : format_rational(c) + "*") + mono;
    }
    return out.empty() ? "0" : out;
}

Rational evaluate(const Poly2& p, const Rational& x, const Rational& y) {
    Rational s;
    for (const auto& [k, c] : p) {
        Rational t = c;
        for (unsigned i = 0; i < k.first; ++i) t *= x;
        for (unsigned i = 0; i < k.second; ++i) t *= y;
        s += t;
    }
    return s;
}

}  // namespace

ObstructionCertificate exp_obstruction(unsigned m, const NumericContext& ctx) {
    if (m < 1) throw UsageError("the obstruction requires m >= 1");
    const Rational mm(m);
    // x Y + m (Y - 1) = 0 and x^2 Y + 2m x Y + m(m-1)(Y - 1) = 0 with Y = e^x.
    const Poly2 eq1{{{1, 1}, Rational(1)}, {{0, 1}, mm}, {{0, 0}, -mm}};
    const Poly2 eq2{{{2, 1}, Rational(1)}, {{1, 1}, 2 * mm}, {{0, 1}, mm * (m - 1)}, {{0, 0}, -mm * (m - 1)}};
    const Poly2 reduced = combine(eq2, -Rational(m - 1), eq1);
    // Every surviving monomial carries x Y; the cofactor must be linear in x.
    Poly2 cofactor;
    for (const auto& [k, c] : reduced) {
        if (k.first < 1 || k.second != 1) throw std::logic_error("elimination left a term without the factor x Y");
        cofactor[{k.first - 1, 0}] = c;
    }
    if (cofactor.size() != 2 || !cofactor.count({1, 0}) || !cofactor.count({0, 0}))
        throw std::logic_error("eliminated cofactor is not linear in x");
    ObstructionCertificate cert;
    cert.m = m;
    cert.x_required = -cofactor[{0, 0}] / cofactor[{1, 0}];
    // eq1 at the required x is a Y + b = 0.
    const Rational a = cert.x_required + mm;
    cert.exp_required = mm / a;
    cert.eliminated = to_string(reduced);
    cert.system_satisfied = evaluate(eq1, cert.x_required, cert.exp_required) == 0 &&
                            evaluate(eq2, cert.x_required, cert.exp_required) == 0;
    const PrecisionScope scope(ctx.bits());
    cert.gap = abs(exp(BigFloat(cert.x_required)) - BigFloat(cert.exp_required));
    return cert;
}

/* --------------------------------------------------------------- roots */

namespace {

using cld = std::complex<long double>;

/// K_m(x) and its derivative in long double, for seeding.
std::pair<cld, cld> kernel_ld(unsigned m, cld x) {
    const long double r = std::abs(x);
    if (r < m + 2.0L) {
        cld value = 0, deriv = 0, term = 1;
        for (unsigned k = 0; k < 400; ++k) {
            if (k > 0) term *= x / static_cast<long double>(k + m);
            value += term;
            if (k + 1 < 400) deriv += term * static_cast<long double>(k + 1) / static_cast<long double>(k + 1 + m);
            if (std::abs(term) < 1e-22L && k > 2.0L * r) break;
        }
        return {value, deriv};
    }
    // E_m = m!(e^x - q_m)/x^m and E_m' = m (E_{m-1} - E_m)/x.
    const cld ex = std::exp(x);
    std::vector<cld> e(m + 1);
    e[0] = ex;
    for (unsigned k = 1; k <= m; ++k) e[k] = (e[k - 1] - 1.0L) * static_cast<long double>(k) / x;
    if (m == 0) return {ex, ex};
    return {e[m], static_cast<long double>(m) * (e[m - 1] - e[m]) / x};
}

/// K_{m-1}(x) for the derivative at full precision (K_{-1} is unused).
BigComplex kernel_derivative(unsigned m, const BigComplex& x, const BigComplex& e_m, const NumericContext& ctx) {
    if (m == 0) return e_m;
    const BigComplex e_prev = kernel_eval(m - 1, x, ctx);
    return (e_prev - e_m) * BigFloat(m) / x;
}

}  // namespace

std::vector<BigComplex> kernel_one_roots(unsigned m, const Region& region, const NumericContext& ctx) {
    if (!(region.x0 <= region.x1 && region.y0 <= region.y1)) throw UsageError("empty search region");
    constexpr long double spacing = 0.25L;
    const auto nx = static_cast<unsigned>(std::floor((region.x1 - region.x0) / spacing)) + 1;
    const auto ny = static_cast<unsigned>(std::floor((region.y1 - region.y0) / spacing)) + 1;
    if (static_cast<unsigned long long>(nx) * ny > 4000000ULL) throw UsageError("search region too large");
    const long double small = std::pow(10.0L, -static_cast<long double>(ctx.precision) / 4.0L);
    std::vector<std::optional<cld>> seeds(static_cast<std::size_t>(nx) * ny);
    parallel_for(nx * ny, ctx.jobs, [&](unsigned idx) {
        cld x(region.x0 + spacing * (idx / ny), region.y0 + spacing * (idx % ny));
        for (unsigned it = 0; it < 60; ++it) {
            const auto [e, d] = kernel_ld(m, x);
            if (d == cld(0)) return;
            const cld step = (e - 1.0L) / d;
            x -= step;
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return;
            if (std::abs(step) <= 1e-16L * std::max(1.0L, std::abs(x))) break;
        }
        const auto [e, d] = kernel_ld(m, x);
        if (std::abs(e - 1.0L) < 1e-9L && std::abs(x) > 1e-6L && region.contains(x.real(), x.imag()))
            seeds[idx] = x;
    });
    std::vector<cld> unique;
    for (const auto& s : seeds) {
        if (!s) continue;
        const bool seen = std::any_of(unique.begin(), unique.end(),
                                      [&](const cld& u) { return std::abs(u - *s) < 1e-8L * std::max(1.0L, std::abs(u)); });
        if (!seen) unique.push_back(*s);
    }

    const PrecisionScope scope(ctx.bits());
    const long double accept = std::pow(10.0L, 10.0L - static_cast<long double>(ctx.precision));
    const long double tiny = std::pow(10.0L, -static_cast<long double>(ctx.precision));
    std::vector<std::optional<BigComplex>> polished(unique.size());
    parallel_for(static_cast<unsigned>(unique.size()), ctx.jobs, [&](unsigned idx) {
        BigComplex x{BigFloat(unique[idx].real()), BigFloat(unique[idx].imag())};
        BigComplex e = kernel_eval(m, x, ctx);
        for (unsigned it = 0; it < 60; ++it) {
            const BigComplex step = (e - BigComplex(BigFloat(1))) / kernel_derivative(m, x, e, ctx);
            x -= step;
            e = kernel_eval(m, x, ctx);
            if (magnitude(step) <= tiny * std::max(1.0L, magnitude(x))) break;
        }
        if (magnitude(e - BigComplex(BigFloat(1))) < accept && magnitude(x) >= small &&
            region.contains(x.re.to_long_double(), x.im.to_long_double()))
            polished[idx] = x;
    });
    std::vector<BigComplex> roots;
    for (auto& p : polished) {
        if (!p) continue;
        const bool seen =
            std::any_of(roots.begin(), roots.end(), [&](const BigComplex& r) { return magnitude(r - *p) < small; });
        if (!seen) roots.push_back(std::move(*p));
    }
    // Real parts of conjugate pairs differ only by rounding noise, so order on a quantized real part.
    const auto key = [](const BigComplex& z) { return std::round(z.re.to_long_double() * 1e12L); };
    std::sort(roots.begin(), roots.end(), [&](const BigComplex& a, const BigComplex& b) {
        if (key(a) != key(b)) return key(a) < key(b);
        return a.im < b.im;
    });
    return roots;
}

/* ---------------------------------------------------------- Vandermonde */

template <Scalar C>
VandermondeResult<C> vandermonde_independence(const std::vector<C>& nodes, const NumericContext& ctx) {
    if (nodes.empty()) throw UsageError("Vandermonde check needs at least one node");
    std::optional<PrecisionScope> scope;
    if constexpr (!is_exact_v<C>) scope.emplace(ctx.bits());
    C det = from_rational<C>(Rational(1));
    for (const auto& w : nodes) det *= w;
    for (std::size_t l = 0; l < nodes.size(); ++l)
        for (std::size_t j = l + 1; j < nodes.size(); ++j) det *= nodes[j] - nodes[l];
    VandermondeResult<C> out{det, false};
    if constexpr (is_exact_v<C>)
        out.independent = !det.is_zero();
    else
        out.independent = magnitude(det) > std::pow(10.0L, -static_cast<long double>(ctx.precision) / 2.0L);
    return out;
}

template VandermondeResult<ExactComplex> vandermonde_independence(const std::vector<ExactComplex>&,
                                                                  const NumericContext&);
template VandermondeResult<BigComplex> vandermonde_independence(const std::vector<BigComplex>&,
                                                                const NumericContext&);

}  // namespace fockcheck
