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

#include <algorithm>
#include <cmath>
#include <limits>

namespace fockcheck {

namespace {

constexpr long double kInf = std::numeric_limits<long double>::infinity();
constexpr long double kNegInf = -std::numeric_limits<long double>::infinity();

/// Working precision of ctx for floating kinds; no-op for exact ones.
template <Scalar C>
class KindScope {
   public:
    explicit KindScope(const NumericContext& ctx) {
        if constexpr (!is_exact_v<C>) scope_.emplace(ctx.bits());
    }

   private:
    std::optional<PrecisionScope> scope_;
};

template <Scalar C>
C scaled(const C& z, const Rational& q) {
    if constexpr (is_exact_v<C>)
        return z * q;
    else
        return z * BigFloat(q);
}

template <Scalar C>
OperatorMatrix<C> blank_matrix(unsigned m, unsigned n) {
    OperatorMatrix<C> a;
    a.m = m;
    a.N = n;
    const std::size_t size = static_cast<std::size_t>(n + 1) * (n + 1);
    a.gram.assign(size, C());
    a.entry_error.assign(size, 0.0L);
    a.column_valid.assign(n + 1, true);
    a.column_closed.assign(n + 1, true);
    for (unsigned k = 0; k <= n; ++k) a.norms.push_back(monomial_norm_sq(m, k));
    return a;
}

template <Scalar C>
void finish(OperatorMatrix<C>& a) {
    a.truncation_error = 0.0L;
    for (unsigned j = 0; j <= a.N; ++j) {
        if (!a.column_valid[j]) {
            for (unsigned i = 0; i <= a.N; ++i) a.entry_error[a.index(i, j)] = kInf;
            continue;
        }
        for (unsigned i = 0; i <= a.N; ++i) a.truncation_error = std::max(a.truncation_error, a.error_at(i, j));
    }
}

/// Orthonormal-scale magnitudes of every entry.
template <Scalar C>
std::vector<long double> magnitudes(const OperatorMatrix<C>& a) {
    std::vector<long double> out(a.gram.size());
    for (unsigned i = 0; i <= a.N; ++i)
        for (unsigned j = 0; j <= a.N; ++j) out[a.index(i, j)] = a.entry_magnitude(i, j);
    return out;
}

long double log_magnitude(const auto& z) {
    if (z.is_zero()) return kNegInf;
    return std::log(magnitude(z));
}

/// Bound on sum_{q >= q0} |f_{i-j+q}| |g_q| n_{i+q}, orthonormally scaled,
/// for the part of the product sum not covered by stored coefficients.
long double product_tail(unsigned m, unsigned i, unsigned j, long long lf, long long lg, bool finite_f,
                         bool finite_g, const Majorant& fm, const Majorant& gm) {
    if (finite_f && finite_g) return 0.0L;
    const long long shift = static_cast<long long>(j) - static_cast<long long>(i);
    const long long qmax = std::min(lg, lf + shift);
    if (finite_g && qmax == lg) return 0.0L;
    if (finite_f && qmax == lf + shift) return 0.0L;
    const long long q0 = std::max(qmax + 1, std::max(0LL, shift));
    const auto term = [&](unsigned q) {
        return fm.log_bound(static_cast<unsigned>(i + q - j)) + gm.log_bound(q) + log_norm(m, i + q);
    };
    const long double tail = tail_sum_bound(term, static_cast<unsigned>(q0));
    if (tail == 0.0L) return 0.0L;
    return std::exp(std::log(tail) - 0.5L * (log_norm(m, i) + log_norm(m, j)));
}

template <Scalar C>
std::vector<C> norm_values(unsigned m, unsigned count) {
    std::vector<C> out;
    out.reserve(count);
    for (unsigned k = 0; k < count; ++k) out.push_back(from_rational<C>(monomial_norm_sq(m, k)));
    return out;
}

}  // namespace

long double log_norm(unsigned m, unsigned k) { return log_factorial(k + m) - log_factorial(m); }

template <Scalar C>
Majorant effective_majorant(const MonomialSeries<C>& s) {
    if (!s.finite()) return *s.majorant;
    long double scale = 0.0L;
    for (unsigned k = 0; k < s.coeffs.size(); ++k)
        if (!s.coeffs[k].is_zero()) scale = std::max(scale, std::exp(log_magnitude(s.coeffs[k]) + log_factorial(k)));
    return Majorant{scale * (1.0L + 1e-12L), 1.0L, 0};
}

template Majorant effective_majorant(const MonomialSeries<ExactComplex>&);
template Majorant effective_majorant(const MonomialSeries<BigComplex>&);

/* ------------------------------------------------------------ matrices */

template <Scalar C>
BigComplex OperatorMatrix<C>::entry(unsigned i, unsigned j) const {
    const BigComplex g = to_big(gram_at(i, j));
    return g / sqrt(BigFloat(norms[i]) * BigFloat(norms[j]));
}

template <Scalar C>
long double OperatorMatrix<C>::entry_magnitude(unsigned i, unsigned j) const {
    const auto& g = gram_at(i, j);
    if (g.is_zero()) return 0.0L;
    return std::exp(std::log(magnitude(g)) - 0.5L * (log_norm(m, i) + log_norm(m, j))) * (1.0L + 1e-12L);
}

template <Scalar C>
C OperatorMatrix<C>::monomial_coefficient(unsigned i, unsigned j) const {
    return scaled(gram_at(i, j), Rational(1) / norms[i]);
}

template struct OperatorMatrix<ExactComplex>;
template struct OperatorMatrix<BigComplex>;

MonoAction toeplitz_mono_action(unsigned m, unsigned p, unsigned q, unsigned j) {
    if (j + p < q) return {Rational(0), std::nullopt};
    const unsigned d = j + p - q;
    return {factorial_ratio(j + p + m, d + m), d};
}

template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const MixedSymbol<C>& symbol, unsigned m, const NumericContext& ctx) {
    const KindScope<C> scope(ctx);
    const MixedSymbol<C> s = canonical(symbol);
    auto a = blank_matrix<C>(m, ctx.truncation);
    for (const auto& t : s.terms) {
        for (unsigned j = 0; j <= a.N; ++j) {
            const MonoAction act = toeplitz_mono_action(m, t.p, t.q, j);
            if (!act.degree) continue;
            const unsigned d = *act.degree;
            if (d > a.N) {
                a.column_closed[j] = false;
                continue;
            }
            a.gram[a.index(d, j)] += scaled(t.coeff, act.coef * a.norms[d]);
        }
    }
    if constexpr (!is_exact_v<C>) {
        const long double u = rounding_unit<C>() * (s.terms.size() + 2);
        for (unsigned i = 0; i <= a.N; ++i)
            for (unsigned j = 0; j <= a.N; ++j) a.entry_error[a.index(i, j)] = u * a.entry_magnitude(i, j);
    }
    finish(a);
    return a;
}

template <Scalar C>
OperatorMatrix<C> toeplitz_matrix_oracle(const MixedSymbol<C>& symbol, unsigned m, const NumericContext& ctx) {
    const KindScope<C> scope(ctx);
    auto a = blank_matrix<C>(m, ctx.truncation);
    unsigned reach = 0;
    for (const auto& t : symbol.terms) reach = std::max(reach, t.p);
    for (const auto& t : symbol.terms) {
        for (unsigned j = 0; j <= a.N; ++j) {
            for (unsigned i = 0; i <= a.N; ++i) {
                const Rational w = weighted_monomial_integral(m, j + t.p, i + t.q);
                if (w != 0) a.gram[a.index(i, j)] += scaled(t.coeff, w);
            }
            for (unsigned i = a.N + 1; i <= a.N + reach; ++i)
                if (weighted_monomial_integral(m, j + t.p, i + t.q) != 0 && !t.coeff.is_zero())
                    a.column_closed[j] = false;
        }
    }
    if constexpr (!is_exact_v<C>) {
        const long double u = rounding_unit<C>() * (symbol.terms.size() + 2);
        for (unsigned i = 0; i <= a.N; ++i)
            for (unsigned j = 0; j <= a.N; ++j) a.entry_error[a.index(i, j)] = u * a.entry_magnitude(i, j);
    }
    finish(a);
    return a;
}

template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const AnalyticOperator& op, unsigned m, unsigned degree, const NumericContext& ctx) {
    const KindScope<C> scope(ctx);
    auto a = blank_matrix<C>(m, ctx.truncation);
    const auto f = series_to_degree<C>(op.f, m, std::max(degree, a.N), ctx);
    unsigned top = 0;
    for (unsigned k = 0; k < f.coeffs.size(); ++k)
        if (!f.coeffs[k].is_zero()) top = k;
    for (unsigned j = 0; j <= a.N; ++j) {
        for (unsigned i = j; i <= a.N; ++i) a.gram[a.index(i, j)] = scaled(f.coeff(i - j), a.norms[i]);
        a.column_closed[j] = f.finite() && j + top <= a.N;
    }
    if constexpr (!is_exact_v<C>) {
        const long double u = 3.0L * rounding_unit<C>();
        for (unsigned i = 0; i <= a.N; ++i)
            for (unsigned j = 0; j <= a.N; ++j) a.entry_error[a.index(i, j)] = u * a.entry_magnitude(i, j);
    }
    finish(a);
    return a;
}

template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const ConjugateOperator& op, unsigned m, unsigned degree,
                                  const NumericContext& ctx) {
    const KindScope<C> scope(ctx);
    auto a = blank_matrix<C>(m, ctx.truncation);
    const auto g = series_to_degree<C>(op.g, m, std::max(degree, a.N), ctx);
    for (unsigned j = 0; j <= a.N; ++j)
        for (unsigned i = 0; i <= j; ++i) a.gram[a.index(i, j)] = scaled(conj(g.coeff(j - i)), a.norms[j]);
    if constexpr (!is_exact_v<C>) {
        const long double u = 3.0L * rounding_unit<C>();
        for (unsigned i = 0; i <= a.N; ++i)
            for (unsigned j = 0; j <= a.N; ++j) a.entry_error[a.index(i, j)] = u * a.entry_magnitude(i, j);
    }
    finish(a);
    return a;
}

template <Scalar C>
OperatorMatrix<C> toeplitz_matrix(const ProductOperator& op, unsigned m, unsigned degree, const NumericContext& ctx) {
    const KindScope<C> scope(ctx);
    auto a = blank_matrix<C>(m, ctx.truncation);
    const unsigned d = std::max(degree, a.N);
    const auto f = series_to_degree<C>(op.f, m, d, ctx);
    const auto g = series_to_degree<C>(op.g, m, d, ctx);
    const long long lf = static_cast<long long>(f.coeffs.size()) - 1;
    const long long lg = static_cast<long long>(g.coeffs.size()) - 1;
    const Majorant fm = effective_majorant(f);
    const Majorant gm = effective_majorant(g);
    const auto norms = norm_values<C>(m, static_cast<unsigned>(a.N + lg + 1));
    const long double u = rounding_unit<C>();
    parallel_for(a.N + 1, ctx.jobs, [&](unsigned j) {
        for (unsigned i = 0; i <= a.N; ++i) {
            const long long shift = static_cast<long long>(j) - static_cast<long long>(i);
            const long long qmax = std::min(lg, lf + shift);
            C acc;
            long double abs_sum = 0.0L;
            long long count = 0;
            for (long long q = std::max(0LL, shift); q <= qmax; ++q) {
                const auto& fc = f.coeffs[static_cast<std::size_t>(q - shift)];
                const auto& gc = g.coeffs[static_cast<std::size_t>(q)];
                if (fc.is_zero() || gc.is_zero()) continue;
                C term = fc * conj(gc) * norms[static_cast<std::size_t>(i + q)];
                if constexpr (!is_exact_v<C>) abs_sum += magnitude(term);
                acc += term;
                ++count;
            }
            a.gram[a.index(i, j)] = acc;
            long double err = product_tail(m, i, j, lf, lg, f.finite(), g.finite(), fm, gm);
            if constexpr (!is_exact_v<C>) {
                if (abs_sum > 0.0L)
                    err += (count + 3) * u *
                           std::exp(std::log(abs_sum) - 0.5L * (log_norm(m, i) + log_norm(m, j)));
            }
            a.entry_error[a.index(i, j)] = err;
        }
    });
    for (unsigned j = 0; j <= a.N; ++j) a.column_closed[j] = false;
    finish(a);
    return a;
}

template <Scalar C>
OperatorMatrix<C> compose(const OperatorMatrix<C>& a, const OperatorMatrix<C>& b) {
    auto out = blank_matrix<C>(a.m, a.N);
    std::optional<PrecisionScope> scope;
    if constexpr (!is_exact_v<C>) {
        mpfr_prec_t bits = working_precision();
        if (!a.gram.empty()) bits = std::max(bits, a.gram.front().re.precision());
        scope.emplace(bits);
    }
    std::vector<C> inv_norms;
    for (unsigned s = 0; s <= a.N; ++s) inv_norms.push_back(from_rational<C>(Rational(1) / a.norms[s]));
    const auto mag_a = magnitudes(a);
    const auto mag_b = magnitudes(b);
    const long double u = rounding_unit<C>();
    for (unsigned j = 0; j <= a.N; ++j) {
        bool valid = b.column_valid[j] && b.column_closed[j];
        bool closed = b.column_closed[j];
        for (unsigned s = 0; s <= a.N; ++s) {
            if (b.gram_at(s, j).is_zero()) continue;
            valid = valid && a.column_valid[s];
            closed = closed && a.column_closed[s];
        }
        out.column_valid[j] = valid;
        out.column_closed[j] = closed;
        if (!valid) continue;
        for (unsigned i = 0; i <= a.N; ++i) {
            C acc;
            long double err = 0.0L;
            long double abs_sum = 0.0L;
            for (unsigned s = 0; s <= a.N; ++s) {
                const long double ea = a.error_at(i, s);
                const long double eb = b.error_at(s, j);
                const long double ma = mag_a[a.index(i, s)];
                const long double mb = mag_b[b.index(s, j)];
                err += ma * eb + ea * mb + ea * eb;
                abs_sum += ma * mb;
                if (a.gram_at(i, s).is_zero() || b.gram_at(s, j).is_zero()) continue;
                acc += a.gram_at(i, s) * b.gram_at(s, j) * inv_norms[s];
            }
            out.gram[out.index(i, j)] = acc;
            out.entry_error[out.index(i, j)] = err + (a.N + 4) * u * abs_sum;
        }
    }
    finish(out);
    return out;
}

template <Scalar C>
OperatorMatrix<C> subtract(const OperatorMatrix<C>& a, const OperatorMatrix<C>& b) {
    auto out = blank_matrix<C>(a.m, a.N);
    const long double u = rounding_unit<C>();
    for (unsigned j = 0; j <= a.N; ++j) {
        out.column_valid[j] = a.column_valid[j] && b.column_valid[j];
        out.column_closed[j] = a.column_closed[j] && b.column_closed[j];
        for (unsigned i = 0; i <= a.N; ++i) {
            const auto k = out.index(i, j);
            out.gram[k] = a.gram[k] - b.gram[k];
            out.entry_error[k] = a.entry_error[k] + b.entry_error[k] +
                                 2.0L * u * (a.entry_magnitude(i, j) + b.entry_magnitude(i, j));
        }
    }
    finish(out);
    return out;
}

#define FOCKCHECK_INSTANTIATE(C)                                                                               \
    template OperatorMatrix<C> toeplitz_matrix(const MixedSymbol<C>&, unsigned, const NumericContext&);        \
    template OperatorMatrix<C> toeplitz_matrix_oracle(const MixedSymbol<C>&, unsigned, const NumericContext&); \
    template OperatorMatrix<C> toeplitz_matrix<C>(const AnalyticOperator&, unsigned, unsigned,                 \
                                                  const NumericContext&);                                      \
    template OperatorMatrix<C> toeplitz_matrix<C>(const ConjugateOperator&, unsigned, unsigned,                \
                                                  const NumericContext&);                                      \
    template OperatorMatrix<C> toeplitz_matrix<C>(const ProductOperator&, unsigned, unsigned,                  \
                                                  const NumericContext&);                                      \
    template OperatorMatrix<C> compose(const OperatorMatrix<C>&, const OperatorMatrix<C>&);                    \
    template OperatorMatrix<C> subtract(const OperatorMatrix<C>&, const OperatorMatrix<C>&);

FOCKCHECK_INSTANTIATE(ExactComplex)
FOCKCHECK_INSTANTIATE(BigComplex)
#undef FOCKCHECK_INSTANTIATE

/* -------------------------------------------------------- semi-commutator */

unsigned product_series_degree(const SymbolPair& pair, const NumericContext& ctx) {
    const unsigned n = ctx.truncation;
    if (is_finite(pair.f) && is_finite(pair.g)) return n;
    const unsigned cap = 6 * n + 400;
    const long double target = std::pow(10.0L, -static_cast<long double>(ctx.precision));
    const PrecisionScope scope(64);
    NumericContext rough = ctx;
    rough.precision = 30;
    unsigned d = 2 * n + 20;
    while (true) {
        const auto f = series_to_degree<BigComplex>(pair.f, pair.m, d, rough);
        const auto g = series_to_degree<BigComplex>(pair.g, pair.m, d, rough);
        const Majorant fm = effective_majorant(f);
        const Majorant gm = effective_majorant(g);
        const long long lf = static_cast<long long>(f.coeffs.size()) - 1;
        const long long lg = static_cast<long long>(g.coeffs.size()) - 1;
        long double worst = 0.0L;
        for (unsigned i = 0; i <= n && worst <= target; ++i)
            for (unsigned j = 0; j <= n && worst <= target; ++j)
                worst = std::max(worst, product_tail(pair.m, i, j, lf, lg, f.finite(), g.finite(), fm, gm));
        if (worst <= target || d >= cap) return d;
        d = std::min(cap, d + d / 2);
    }
}

template <Scalar C>
OperatorMatrix<C> semi_commutator_matrix(const SymbolPair& pair, const NumericContext& ctx) {
    check_truncation_guard(pair.f, pair.m, ctx);
    check_truncation_guard(pair.g, pair.m, ctx);
    if constexpr (is_exact_v<C>) {
        if (!is_finite(pair.f) || !is_finite(pair.g))
            throw UsageError("exact semi-commutator requires polynomial symbols");
    }
    const unsigned d = product_series_degree(pair, ctx);
    const auto product = toeplitz_matrix<C>(ProductOperator{pair.f, pair.g}, pair.m, d, ctx);
    const auto tf = toeplitz_matrix<C>(AnalyticOperator{pair.f}, pair.m, ctx.truncation, ctx);
    const auto tg = toeplitz_matrix<C>(ConjugateOperator{pair.g}, pair.m, ctx.truncation, ctx);
    const KindScope<C> scope(ctx);
    return subtract(product, compose(tf, tg));
}

template OperatorMatrix<ExactComplex> semi_commutator_matrix(const SymbolPair&, const NumericContext&);
template OperatorMatrix<BigComplex> semi_commutator_matrix(const SymbolPair&, const NumericContext&);

Estimate coefficient_pair_series(unsigned j, unsigned l, unsigned m, const BigComplex& A, const BigComplex& B,
                                 unsigned terms, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    const unsigned k0 = j > l ? j - l : 0;
    const long double u = rounding_unit<BigComplex>();
    BigComplex sum;
    long double abs_sum = 0.0L;
    // A^k B^(l+k-j) for k = k0 onwards.
    BigComplex power = pow(A, k0) * pow(B, l + k0 - j);
    const BigComplex ab = A * B;
    const unsigned k_end = k0 + std::max(terms, 1U);
    for (unsigned k = k0; k < k_end; ++k) {
        if (k > k0) power *= ab;
        const Rational c = factorial_ratio(m, k + m) * factorial_ratio(l + k + m, k + l - j + m);
        BigComplex term = power * BigFloat(c);
        abs_sum += magnitude(term);
        sum += term;
        if (k <= j) {
            const Rational c2 = factorial_ratio(m, k + m) * factorial_ratio(j + m, k + l - j + m) *
                                factorial_ratio(l + m, j - k + m);
            BigComplex t2 = power * BigFloat(c2);
            abs_sum += magnitude(t2);
            sum -= t2;
        }
    }
    // The finite sum may extend past the truncation when terms is small.
    for (unsigned k = k_end; k <= j; ++k) {
        const BigComplex p = pow(A, k) * pow(B, l + k - j);
        const Rational c2 =
            factorial_ratio(m, k + m) * factorial_ratio(j + m, k + l - j + m) * factorial_ratio(l + m, j - k + m);
        const BigComplex t2 = p * BigFloat(c2);
        abs_sum += magnitude(t2);
        sum -= t2;
    }
    long double tail = 0.0L;
    if (!A.is_zero() && !B.is_zero()) {
        const long double la = std::log(magnitude(A));
        const long double lb = std::log(magnitude(B));
        tail = tail_sum_bound(
            [&](unsigned k) {
                return log_factorial(m) - log_factorial(k + m) + log_factorial(l + k + m) -
                       log_factorial(k + l - j + m) + k * la + (static_cast<long double>(l) + k - j) * lb;
            },
            k_end);
    }
    return {sum, tail + (2.0L * (k_end + j) + 4.0L) * u * abs_sum};
}

Estimate semicomm_coefficient(const KernelCombo<ExactComplex>& f, const KernelCombo<ExactComplex>& g, unsigned l,
                              unsigned j, const NumericContext& ctx) {
    if (f.m != g.m) throw UsageError("kernel combinations carry different weight orders");
    const SymbolPair pair{f.m, f, g};
    check_truncation_guard(pair.f, f.m, ctx);
    check_truncation_guard(pair.g, f.m, ctx);
    const auto nf = normalize_combo(f);
    const auto ng = normalize_combo(g);
    const PrecisionScope scope(ctx.bits());
    const unsigned terms = product_series_degree(pair, ctx) + 1;
    Estimate out{BigComplex(), 0.0L};
    for (const auto& a : nf.terms) {
        for (const auto& b : ng.terms) {
            const BigComplex weight = to_big(a.coeff) * conj(to_big(b.coeff));
            const Estimate c = coefficient_pair_series(j, l, f.m, conj(to_big(a.node)), to_big(b.node), terms, ctx);
            out.value += weight * c.value;
            out.error += magnitude(weight) * c.error + 4.0L * rounding_unit<BigComplex>() * magnitude(weight * c.value);
        }
    }
    return out;
}

/* ----------------------------------------------------------------- Hankel */

HankelGram::HankelGram(const SymbolPair& pair, const NumericContext& ctx) : m_(pair.m), ctx_(ctx) {
    check_truncation_guard(pair.f, pair.m, ctx);
    check_truncation_guard(pair.g, pair.m, ctx);
    const unsigned d = product_series_degree(pair, ctx);
    const PrecisionScope scope(ctx.bits());
    f_ = series_to_degree<BigComplex>(pair.f, m_, d, ctx);
    g_ = series_to_degree<BigComplex>(pair.g, m_, d, ctx);
    fm_ = effective_majorant(f_);
    gm_ = effective_majorant(g_);
    // <z^k, z^k>_m from the radial moments I(n) = n I(n-1), normalized by I(m).
    const std::size_t count = ctx.truncation + g_.coeffs.size() + 1;
    Rational moment(1);
    Rational base(1);
    std::vector<Rational> moments;
    for (unsigned n = 0; n < count + m_; ++n) {
        if (n > 0) moment *= n;
        if (n == m_) base = moment;
        moments.push_back(moment);
    }
    for (std::size_t k = 0; k < count; ++k) {
        weight_.emplace_back(moments[k + m_] / base);
        log_weight_.push_back(log_norm(m_, static_cast<unsigned>(k)));
    }
}

Estimate HankelGram::entry(unsigned i, unsigned j) const {
    const PrecisionScope scope(ctx_.bits());
    const long double u = rounding_unit<BigComplex>();
    const long long lf = static_cast<long long>(f_.coeffs.size()) - 1;
    const long long lg = static_cast<long long>(g_.coeffs.size()) - 1;
    const long long shift = static_cast<long long>(j) - static_cast<long long>(i);
    // <conj(g) z^j, conj(f) z^i> = sum_{p,q} f_p conj(g_q) <z^(j+p), z^(i+q)>.
    BigComplex t1;
    long double abs_sum = 0.0L;
    for (long long q = std::max(0LL, shift); q <= std::min(lg, lf + shift); ++q) {
        const BigComplex term = f_.coeffs[static_cast<std::size_t>(q - shift)] *
                                conj(g_.coeffs[static_cast<std::size_t>(q)]) * weight_[static_cast<std::size_t>(i + q)];
        abs_sum += magnitude(term);
        t1 += term;
    }
    // Projection part: sum_s <T_{conj g} z^j, z^s> conj(<T_{conj f} z^i, z^s>) / <z^s, z^s>.
    BigComplex t2;
    for (unsigned s = 0; s <= std::min(i, j); ++s) {
        const BigComplex gs = conj(g_.coeff(j - s)) * weight_[j];
        const BigComplex fs = conj(conj(f_.coeff(i - s)) * weight_[i]);
        const BigComplex term = gs * fs / weight_[s];
        abs_sum += magnitude(term);
        t2 += term;
    }
    const BigFloat scale = sqrt(weight_[i] * weight_[j]);
    const long double log_scale = 0.5L * (log_weight_[i] + log_weight_[j]);
    long double err = product_tail(m_, i, j, lf, lg, f_.finite(), g_.finite(), fm_, gm_);
    if (abs_sum > 0.0L) err += (2.0L * (lg + i + 4)) * u * std::exp(std::log(abs_sum) - log_scale);
    return {(t1 - t2) / scale, err};
}

Estimate hankel_gram_entry(const SymbolPair& pair, unsigned i, unsigned j, const NumericContext& ctx) {
    if (i > ctx.truncation || j > ctx.truncation) throw UsageError("Hankel entry index exceeds the truncation degree");
    return HankelGram(pair, ctx).entry(i, j);
}

/* ---------------------------------------------------------------- Berezin */

Estimate berezin_transform(const SymbolPair& pair, const BigComplex& z, const NumericContext& ctx) {
    check_truncation_guard(pair.f, pair.m, ctx);
    check_truncation_guard(pair.g, pair.m, ctx);
    const unsigned m = pair.m;
    const long double r = magnitude(z);
    const long double target = std::pow(10.0L, -static_cast<long double>(ctx.precision));
    const unsigned cap = 6 * ctx.truncation + 400;
    NumericContext rough = ctx;
    rough.precision = 30;

    // |u_n| <= scale (R + |z|)^n s!/(n+s)! with s = min(shift, m), for the
    // Taylor coefficients u_n of f(w) K_m(w, z).
    const auto product_bound = [&](const Majorant& mj) {
        return Majorant{mj.scale, mj.radius + r, std::min(mj.shift, m)};
    };
    const auto limit = [](const AnalyticSymbol& s, const MonomialSeries<BigComplex>& series) {
        if (std::holds_alternative<MonomialSeries<ExactComplex>>(s) && !series.finite())
            return static_cast<unsigned>(series.coeffs.size() - 1);
        return std::numeric_limits<unsigned>::max();
    };
    unsigned d = std::max(ctx.truncation, 20U);
    long double tail = 0.0L;
    while (true) {
        const PrecisionScope scope(64);
        const auto f = series_to_degree<BigComplex>(pair.f, m, d, rough);
        const auto g = series_to_degree<BigComplex>(pair.g, m, d, rough);
        const unsigned lim = std::min(limit(pair.f, f), limit(pair.g, g));
        const unsigned used = std::min(d, lim);
        const Majorant uf = product_bound(effective_majorant(f));
        const Majorant ug = product_bound(effective_majorant(g));
        tail = tail_sum_bound([&](unsigned n) { return uf.log_bound(n) + ug.log_bound(n) + log_norm(m, n); },
                              used + 1);
        if (tail <= target || d >= cap || used < d) {
            d = used;
            break;
        }
        d = std::min(cap, d + d / 2);
    }

    const PrecisionScope scope(ctx.bits());
    const long double u = rounding_unit<BigComplex>();
    const auto f = series_to_degree<BigComplex>(pair.f, m, d, ctx);
    const auto g = series_to_degree<BigComplex>(pair.g, m, d, ctx);
    // m! conj(z)^s/(s+m)!
    std::vector<BigComplex> kz;
    kz.reserve(d + 1);
    BigComplex term(BigFloat(1));
    const BigComplex zbar = conj(z);
    for (unsigned s = 0; s <= d; ++s) {
        if (s > 0) term = term * zbar / BigFloat(s + m);
        kz.push_back(term);
    }
    const auto times_kernel = [&](const MonomialSeries<BigComplex>& s) {
        std::vector<BigComplex> out(d + 1);
        for (unsigned n = 0; n <= d; ++n)
            for (unsigned p = 0; p <= n && p < s.coeffs.size(); ++p)
                if (!s.coeffs[p].is_zero()) out[n] += s.coeffs[p] * kz[n - p];
        return out;
    };
    const auto uf = times_kernel(f);
    const auto vg = times_kernel(g);
    BigComplex inner;
    long double abs_sum = 0.0L;
    for (unsigned n = 0; n <= d; ++n) {
        const BigComplex t = uf[n] * conj(vg[n]) * BigFloat(monomial_norm_sq(m, n));
        abs_sum += magnitude(t);
        inner += t;
    }
    const BigComplex kzz = kernel_eval(m, BigComplex(norm(z)), ctx);
    const BigFloat kzz_abs = abs(kzz);
    const long double k_low = kzz_abs.to_long_double() * (1.0L - 1e-12L);
    const long double err = (tail + (4.0L * d + 8.0L) * u * abs_sum) / k_low + 8.0L * u * magnitude(inner) / k_low;
    return {inner / kzz, err};
}

}  // namespace fockcheck
