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

#include <cmath>

namespace fockcheck {

const char* to_string(Decision d) {
    switch (d) {
        case Decision::Zero:
            return "Zero";
        case Decision::NonZero:
            return "NonZero";
        case Decision::Inconclusive:
            return "Inconclusive";
    }
    return "Inconclusive";
}

const char* to_string(Route r) { return r == Route::Theorem ? "theorem" : "numeric"; }

namespace {

Verdict theorem(Decision d, std::string certificate) {
    Verdict v;
    v.decision = d;
    v.route = Route::Theorem;
    v.certificate = std::move(certificate);
    return v;
}

/// Distance from x to the nearest point of 2 pi Z.
BigFloat distance_to_2pi_lattice(const BigFloat& x) {
    const BigFloat period = BigFloat::pi() * BigFloat(2);
    const BigFloat k = round_to_integer(x / period);
    return abs(x - k * period);
}

std::optional<KernelCombo<ExactComplex>> as_kernel_combo(const AnalyticSymbol& f, unsigned m) {
    if (const auto* k = std::get_if<KernelCombo<ExactComplex>>(&f)) return *k;
    // e^{az} = K_0(z, conj a).
    if (const auto* e = std::get_if<ExpSymbol>(&f); e && m == 0)
        return KernelCombo<ExactComplex>{0, {{ExactComplex(Rational(1)), conj(e->a)}}};
    return std::nullopt;
}

MonomialSeries<ExactComplex> finite_series(const AnalyticSymbol& f, unsigned m, const NumericContext& ctx) {
    unsigned degree = 0;
    if (const auto* p = std::get_if<Polynomial>(&f))
        degree = p->coeffs.empty() ? 0 : static_cast<unsigned>(p->coeffs.size() - 1);
    else if (const auto* s = std::get_if<MonomialSeries<ExactComplex>>(&f))
        degree = s->degree();
    return series_to_degree<ExactComplex>(f, m, degree, ctx);
}

unsigned true_degree(const MonomialSeries<ExactComplex>& s) {
    unsigned d = 0;
    for (unsigned k = 0; k < s.coeffs.size(); ++k)
        if (!s.coeffs[k].is_zero()) d = k;
    return d;
}

}  // namespace

template <Scalar C>
Verdict verdict_from_matrix(const OperatorMatrix<C>& t, const NumericContext& ctx) {
    Verdict v;
    v.route = Route::Numeric;
    Witness w;
    bool any = false;
    for (unsigned j = 0; j < t.size(); ++j) {
        if (!t.column_valid[j]) continue;
        any = true;
        for (unsigned i = 0; i < t.size(); ++i) {
            const long double mag = t.entry_magnitude(i, j);
            if (mag > w.magnitude) w = {i, j, mag};
        }
    }
    if (!any) throw TruncationGuardError("no column of the truncated semi-commutator is valid");
    v.max_entry = w.magnitude;
    v.truncation_error = t.truncation_error;
    const long double threshold = 10.0L * t.truncation_error + ctx.tolerance;
    v.threshold = threshold;
    const std::string where = " at (" + std::to_string(w.i) + "," + std::to_string(w.j) + ")";
    if (w.magnitude < threshold) {
        v.decision = Decision::Zero;
        v.certificate = "max entry " + format_bound(w.magnitude) + " below threshold " + format_bound(threshold);
    } else if (w.magnitude > 10.0L * threshold) {
        v.decision = Decision::NonZero;
        v.witness = w;
        v.certificate = "max entry " + format_bound(w.magnitude) + where;
    } else {
        v.decision = Decision::Inconclusive;
        v.certificate = "max entry " + format_bound(w.magnitude) + where + " inside [T, 10T] with T = " +
                        format_bound(threshold);
    }
    return v;
}

template Verdict verdict_from_matrix(const OperatorMatrix<ExactComplex>&, const NumericContext&);
template Verdict verdict_from_matrix(const OperatorMatrix<BigComplex>&, const NumericContext&);

Verdict decide_semicommutator(const KernelCombo<ExactComplex>& f, const KernelCombo<ExactComplex>& g, unsigned m,
                              const NumericContext& ctx) {
    const auto nf = normalize_combo(f);
    const auto ng = normalize_combo(g);
    if (is_constant(nf)) return theorem(Decision::Zero, "f constant after normalization");
    if (is_constant(ng)) return theorem(Decision::Zero, "g constant after normalization");
    if (m >= 1) return theorem(Decision::NonZero, "f and g are non-constant kernel combinations and m >= 1");
    const PrecisionScope scope(ctx.bits());
    const BigFloat tol = pow_int(BigFloat(10), -static_cast<long>(ctx.precision / 2));
    for (const auto& a : nf.terms)
        for (const auto& b : ng.terms) {
            const BigComplex p = to_big(conj(a.node) * b.node);
            if (abs(p.re) >= tol || distance_to_2pi_lattice(p.im) >= tol)
                return theorem(Decision::NonZero, "node product conj(" + format_rational(a.node.re) + "," +
                                                      format_rational(a.node.im) + ") * (" +
                                                      format_rational(b.node.re) + "," + format_rational(b.node.im) +
                                                      ") not in 2 pi i Z");
        }
    return theorem(Decision::Zero, "all node products in 2 pi i Z");
}

Verdict decide_polynomial(const MonomialSeries<ExactComplex>& f, const MonomialSeries<ExactComplex>& g, unsigned) {
    if (true_degree(f) == 0) return theorem(Decision::Zero, "f constant");
    if (true_degree(g) == 0) return theorem(Decision::Zero, "g constant");
    return theorem(Decision::NonZero, "f and g are non-constant polynomials (degrees " +
                                          std::to_string(true_degree(f)) + ", " + std::to_string(true_degree(g)) +
                                          ")");
}

std::optional<Verdict> theorem_verdict(const SymbolPair& pair, const NumericContext& ctx) {
    if (is_constant(pair.f)) return theorem(Decision::Zero, "f constant");
    if (is_constant(pair.g)) return theorem(Decision::Zero, "g constant");
    const auto kf = as_kernel_combo(pair.f, pair.m);
    const auto kg = as_kernel_combo(pair.g, pair.m);
    if (kf && kg) return decide_semicommutator(*kf, *kg, pair.m, ctx);
    if (std::holds_alternative<ExpSymbol>(pair.f) && std::holds_alternative<ExpSymbol>(pair.g))
        return theorem(Decision::NonZero, "exponential symbols with ab != 0 and m >= 1");
    if (is_finite(pair.f) && is_finite(pair.g))
        return decide_polynomial(finite_series(pair.f, pair.m, ctx), finite_series(pair.g, pair.m, ctx), pair.m);
    return std::nullopt;
}

Verdict numeric_verdict(const SymbolPair& pair, const NumericContext& ctx) {
    if (is_finite(pair.f) && is_finite(pair.g)) return verdict_from_matrix(semi_commutator_matrix<ExactComplex>(pair, ctx), ctx);
    return verdict_from_matrix(semi_commutator_matrix<BigComplex>(pair, ctx), ctx);
}

std::vector<ExactComplex> berezin_grid() {
    std::vector<ExactComplex> grid;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) grid.emplace_back(Rational(x), Rational(y));
    return grid;
}

std::pair<long double, long double> berezin_deviation(const SymbolPair& pair, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    long double worst = 0.0L;
    long double error = 0.0L;
    for (const auto& point : berezin_grid()) {
        const BigComplex z = to_big(point);
        const Estimate b = berezin_transform(pair, z, ctx);
        const BigComplex product = evaluate(pair.f, pair.m, z, ctx) * conj(evaluate(pair.g, pair.m, z, ctx));
        worst = std::max(worst, magnitude(b.value - product));
        error = std::max(error, b.error + ctx.precision_threshold(2) * (1.0L + magnitude(product)));
    }
    return {worst, error};
}

ConsistencyReport consistency_report(const SymbolPair& pair, const NumericContext& ctx) {
    ConsistencyReport r;
    r.theorem_verdict = theorem_verdict(pair, ctx);
    r.numeric_verdict = numeric_verdict(pair, ctx);
    std::tie(r.berezin_deviation, r.berezin_error) = berezin_deviation(pair, ctx);
    r.berezin_zero_threshold = 10.0L * r.berezin_error + ctx.tolerance;
    r.agree = true;
    const Decision numeric = r.numeric_verdict.decision;
    if (r.theorem_verdict && numeric != Decision::Inconclusive && r.theorem_verdict->decision != numeric) {
        r.agree = false;
        r.disagreement = std::string("theorem route says ") + to_string(r.theorem_verdict->decision) +
                         ", numeric route says " + to_string(numeric);
        return r;
    }
    const Decision reference = numeric != Decision::Inconclusive || !r.theorem_verdict
                                   ? numeric
                                   : r.theorem_verdict->decision;
    const bool berezin_zero = r.berezin_deviation <= r.berezin_zero_threshold;
    if ((reference == Decision::Zero && !berezin_zero) || (reference == Decision::NonZero && berezin_zero)) {
        r.agree = false;
        r.disagreement = std::string("verdict ") + to_string(reference) + " but Berezin deviation is " +
                         format_bound(r.berezin_deviation) + " against threshold " +
                         format_bound(r.berezin_zero_threshold);
    }
    return r;
}

nlohmann::json verdict_json(const Verdict& v) {
    nlohmann::json j;
    j["decision"] = to_string(v.decision);
    j["route"] = to_string(v.route);
    j["certificate"] = v.certificate;
    if (v.route == Route::Numeric) {
        j["max_entry"] = format_bound(v.max_entry);
        j["truncation_error"] = format_bound(v.truncation_error);
        if (v.threshold) j["threshold"] = format_bound(*v.threshold);
    }
    if (v.witness)
        j["witness"] = {{"i", std::to_string(v.witness->i)}, {"j", std::to_string(v.witness->j)}, {"magnitude", format_bound(v.witness->magnitude)}};
    return j;
}

nlohmann::json consistency_json(const ConsistencyReport& r) {
    nlohmann::json j;
    j["theorem_verdict"] = r.theorem_verdict ? verdict_json(*r.theorem_verdict) : nlohmann::json(nullptr);
    j["numeric_verdict"] = verdict_json(r.numeric_verdict);
    j["berezin_deviation"] = format_bound(r.berezin_deviation);
    j["berezin_error"] = format_bound(r.berezin_error);
    j["berezin_zero_threshold"] = format_bound(r.berezin_zero_threshold);
    j["agree"] = r.agree;
    if (!r.agree) j["disagreement"] = r.disagreement;
    return j;
}

}  // namespace fockcheck
