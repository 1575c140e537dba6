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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

namespace fockcheck {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <Scalar C>
C convert(const ExactComplex& z) {
    if constexpr (is_exact_v<C>)
        return z;
    else
        return to_big(z);
}

template <Scalar C>
KernelCombo<C> convert(const KernelCombo<ExactComplex>& f) {
    KernelCombo<C> out{f.m, {}};
    for (const auto& t : f.terms) out.terms.push_back({convert<C>(t.coeff), convert<C>(t.node)});
    return out;
}

template <Scalar C>
long double max_node(const KernelCombo<C>& f) {
    long double r = 0.0L;
    for (const auto& t : f.terms) r = std::max(r, magnitude(t.node));
    return r;
}

void set_tail_from_majorant(auto& series) {
    if (series.finite()) {
        series.tail_bound = 0.0L;
        return;
    }
    const Majorant& mj = *series.majorant;
    series.tail_bound = tail_sum_bound([&](unsigned k) { return mj.log_bound(k); },
                                       static_cast<unsigned>(series.coeffs.size()));
}

}  // namespace

long double Majorant::log_bound(unsigned k) const {
    if (scale <= 0.0L) return -std::numeric_limits<long double>::infinity();
    if (radius <= 0.0L) return k == 0 ? std::log(scale) : -std::numeric_limits<long double>::infinity();
    return std::log(scale) + k * std::log(radius) + log_factorial(shift) - log_factorial(k + shift);
}

/* ---------------------------------------------------------- combinations */

KernelCombo<ExactComplex> normalize_combo(const KernelCombo<ExactComplex>& f) {
    KernelCombo<ExactComplex> out{f.m, {}};
    for (const auto& t : f.terms) {
        auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const auto& u) { return u.node == t.node; });
        if (it == out.terms.end())
            out.terms.push_back(t);
        else
            it->coeff += t.coeff;
    }
    std::erase_if(out.terms, [](const auto& t) { return t.coeff.is_zero(); });
    return out;
}

KernelCombo<BigComplex> normalize_combo(const KernelCombo<BigComplex>& f, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    const long double eps = std::pow(10.0L, -static_cast<long double>(ctx.precision) / 2.0L);
    KernelCombo<BigComplex> out{f.m, {}};
    for (const auto& t : f.terms) {
        auto it = std::find_if(out.terms.begin(), out.terms.end(),
                               [&](const auto& u) { return magnitude(u.node - t.node) < eps; });
        if (it == out.terms.end())
            out.terms.push_back(t);
        else
            it->coeff += t.coeff;
    }
    std::erase_if(out.terms, [&](const auto& t) { return magnitude(t.coeff) < eps; });
    for (auto& t : out.terms)
        if (magnitude(t.node) < eps) t.node = BigComplex();
    return out;
}

template <Scalar C>
MonomialSeries<C> expand_kernel_combo_to(const KernelCombo<C>& f, unsigned degree, const NumericContext& ctx) {
    std::optional<PrecisionScope> scope;
    if constexpr (!is_exact_v<C>) scope.emplace(ctx.bits());
    MonomialSeries<C> out;
    out.m = f.m;
    out.coeffs.assign(degree + 1, C());
    long double scale = 0.0L;
    long double radius = 0.0L;
    for (const auto& t : f.terms) {
        const C w = conj(t.node);
        C term = t.coeff;
        out.coeffs[0] += term;
        for (unsigned k = 1; k <= degree; ++k) {
            term = term * w / from_rational<C>(Rational(k + f.m));
            out.coeffs[k] += term;
        }
        scale += magnitude(t.coeff);
        radius = std::max(radius, magnitude(t.node));
    }
    if (radius > 0.0L) {
        out.majorant = Majorant{scale, radius, f.m};
        long double tail = 0.0L;
        for (const auto& t : f.terms)
            tail += magnitude(t.coeff) * kernel_series_tail_bound(f.m, magnitude(t.node), degree);
        out.tail_bound = tail;
    }
    return out;
}

template <Scalar C>
MonomialSeries<C> expand_kernel_combo(const KernelCombo<C>& f, const NumericContext& ctx) {
    const long double r = max_node(f);
    if (ctx.truncation + f.m < 2.0L * r)
        throw TruncationGuardError("truncation degree " + std::to_string(ctx.truncation) +
                                   " too small for kernel nodes of modulus " + format_bound(r));
    return expand_kernel_combo_to(f, ctx.truncation, ctx);
}

namespace {

template <Scalar C>
MonomialSeries<C> exp_series_to(const C& a, unsigned degree, const NumericContext& ctx) {
    std::optional<PrecisionScope> scope;
    if constexpr (!is_exact_v<C>) scope.emplace(ctx.bits());
    MonomialSeries<C> out;
    out.coeffs.reserve(degree + 1);
    C term = from_rational<C>(Rational(1));
    out.coeffs.push_back(term);
    for (unsigned k = 1; k <= degree; ++k) {
        term = term * a / from_rational<C>(Rational(k));
        out.coeffs.push_back(term);
    }
    const long double r = magnitude(a);
    if (!a.is_zero()) {
        out.majorant = Majorant{1.0L, r, 0};
        out.tail_bound = kernel_series_tail_bound(0, r, degree);
    }
    return out;
}

}  // namespace

template <Scalar C>
MonomialSeries<C> exp_series(const C& a, const NumericContext& ctx) {
    const long double r = magnitude(a);
    if (ctx.truncation < 2.0L * r)
        throw TruncationGuardError("truncation degree " + std::to_string(ctx.truncation) +
                                   " too small for exponent of modulus " + format_bound(r));
    return exp_series_to(a, ctx.truncation, ctx);
}

template <Scalar C>
long double exp_kernel_identity_check(unsigned m, const C& a, const NumericContext& ctx) {
    std::optional<PrecisionScope> scope;
    if constexpr (!is_exact_v<C>) scope.emplace(ctx.bits());
    const unsigned n = ctx.truncation;
    const C abar = conj(a);
    const auto lhs = exp_series_to(abar, n, ctx);
    const KernelCombo<C> kernel{m, {{from_rational<C>(Rational(1)), a}}};
    const auto k_series = expand_kernel_combo_to(kernel, n, ctx);
    const C lead = pow(abar, m) / from_rational<C>(Rational(factorial(m)));
    long double deviation = 0.0L;
    C power = from_rational<C>(Rational(1));
    for (unsigned d = 0; d <= n; ++d) {
        C rhs;
        if (d < m)
            rhs = power / from_rational<C>(Rational(factorial(d)));
        else
            rhs = lead * k_series.coeffs[d - m];
        const C diff = lhs.coeffs[d] - rhs;
        if (!diff.is_zero()) deviation = std::max(deviation, magnitude(diff));
        power *= abar;
    }
    return deviation;
}

template MonomialSeries<ExactComplex> expand_kernel_combo_to(const KernelCombo<ExactComplex>&, unsigned,
                                                             const NumericContext&);
template MonomialSeries<BigComplex> expand_kernel_combo_to(const KernelCombo<BigComplex>&, unsigned,
                                                           const NumericContext&);
template MonomialSeries<ExactComplex> expand_kernel_combo(const KernelCombo<ExactComplex>&, const NumericContext&);
template MonomialSeries<BigComplex> expand_kernel_combo(const KernelCombo<BigComplex>&, const NumericContext&);
template MonomialSeries<ExactComplex> exp_series(const ExactComplex&, const NumericContext&);
template MonomialSeries<BigComplex> exp_series(const BigComplex&, const NumericContext&);
template long double exp_kernel_identity_check(unsigned, const ExactComplex&, const NumericContext&);
template long double exp_kernel_identity_check(unsigned, const BigComplex&, const NumericContext&);

/* -------------------------------------------------------- analytic symbols */

bool is_constant(const AnalyticSymbol& f) {
    return std::visit(overloaded{
                          [](const KernelCombo<ExactComplex>& k) { return is_constant(normalize_combo(k)); },
                          [](const Polynomial& p) {
                              for (std::size_t k = 1; k < p.coeffs.size(); ++k)
                                  if (!p.coeffs[k].is_zero()) return false;
                              return true;
                          },
                          [](const ExpSymbol& e) { return e.a.is_zero(); },
                          [](const MonomialSeries<ExactComplex>& s) {
                              if (!s.finite()) return false;
                              for (std::size_t k = 1; k < s.coeffs.size(); ++k)
                                  if (!s.coeffs[k].is_zero()) return false;
                              return true;
                          },
                      },
                      f);
}

bool is_finite(const AnalyticSymbol& f) {
    return std::visit(overloaded{
                          [](const KernelCombo<ExactComplex>& k) { return is_constant(normalize_combo(k)); },
                          [](const Polynomial&) { return true; },
                          [](const ExpSymbol& e) { return e.a.is_zero(); },
                          [](const MonomialSeries<ExactComplex>& s) { return s.finite(); },
                      },
                      f);
}

long double growth_radius(const AnalyticSymbol& f) {
    return std::visit(overloaded{
                          [](const KernelCombo<ExactComplex>& k) { return max_node(normalize_combo(k)); },
                          [](const Polynomial&) { return 0.0L; },
                          [](const ExpSymbol& e) { return magnitude(e.a); },
                          [](const MonomialSeries<ExactComplex>& s) {
                              return s.finite() ? 0.0L : s.majorant->radius;
                          },
                      },
                      f);
}

void check_truncation_guard(const AnalyticSymbol& f, unsigned m, const NumericContext& ctx) {
    if (is_finite(f)) return;
    const long double r = growth_radius(f);
    const long double need = 2.0L * r + m + 10.0L;
    if (static_cast<long double>(ctx.truncation) < need)
        throw TruncationGuardError("truncation degree " + std::to_string(ctx.truncation) + " is below 2R + m + 10 = " +
                                   format_bound(need) + " for a symbol of growth radius " + format_bound(r));
}

template <Scalar C>
MonomialSeries<C> series_to_degree(const AnalyticSymbol& f, unsigned m, unsigned degree, const NumericContext& ctx) {
    MonomialSeries<C> out = std::visit(
        overloaded{
            [&](const KernelCombo<ExactComplex>& k) {
                auto s = expand_kernel_combo_to(convert<C>(normalize_combo(k)), degree, ctx);
                if (s.finite()) s.coeffs.resize(1);
                return s;
            },
            [&](const Polynomial& p) {
                MonomialSeries<C> s;
                for (const auto& c : p.coeffs) s.coeffs.push_back(convert<C>(c));
                return s;
            },
            [&](const ExpSymbol& e) {
                auto s = exp_series_to(convert<C>(e.a), degree, ctx);
                if (s.finite()) s.coeffs.resize(1);
                return s;
            },
            [&](const MonomialSeries<ExactComplex>& src) {
                MonomialSeries<C> s;
                for (const auto& c : src.coeffs) s.coeffs.push_back(convert<C>(c));
                s.majorant = src.majorant;
                set_tail_from_majorant(s);
                return s;
            },
        },
        f);
    out.m = m;
    if (out.coeffs.empty()) out.coeffs.emplace_back();
    return out;
}

template MonomialSeries<ExactComplex> series_to_degree(const AnalyticSymbol&, unsigned, unsigned,
                                                       const NumericContext&);
template MonomialSeries<BigComplex> series_to_degree(const AnalyticSymbol&, unsigned, unsigned,
                                                     const NumericContext&);

BigComplex evaluate(const AnalyticSymbol& f, unsigned m, const BigComplex& z, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    const auto horner = [&](const std::vector<ExactComplex>& coeffs) {
        BigComplex acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + to_big(*it);
        return acc;
    };
    return std::visit(overloaded{
                          [&](const KernelCombo<ExactComplex>& k) {
                              BigComplex acc;
                              for (const auto& t : k.terms)
                                  acc += to_big(t.coeff) * kernel_eval(m, z * conj(to_big(t.node)), ctx);
                              return acc;
                          },
                          [&](const Polynomial& p) { return horner(p.coeffs); },
                          [&](const ExpSymbol& e) { return exp(to_big(e.a) * z); },
                          [&](const MonomialSeries<ExactComplex>& s) { return horner(s.coeffs); },
                      },
                      f);
}

KernelCombo<BigComplex> to_big(const KernelCombo<ExactComplex>& f) { return convert<BigComplex>(f); }

MonomialSeries<BigComplex> to_big(const MonomialSeries<ExactComplex>& f) {
    MonomialSeries<BigComplex> out{f.m, {}, f.tail_bound, f.majorant};
    for (const auto& c : f.coeffs) out.coeffs.push_back(to_big(c));
    return out;
}

MixedSymbol<BigComplex> to_big(const MixedSymbol<ExactComplex>& f) {
    MixedSymbol<BigComplex> out;
    for (const auto& t : f.terms) out.terms.push_back({to_big(t.coeff), t.p, t.q});
    return out;
}

template <Scalar C>
MixedSymbol<C> canonical(const MixedSymbol<C>& s) {
    std::map<std::pair<unsigned, unsigned>, C> merged;
    for (const auto& t : s.terms) merged[{t.p, t.q}] += t.coeff;
    MixedSymbol<C> out;
    for (auto& [pq, c] : merged)
        if (!c.is_zero()) out.terms.push_back({c, pq.first, pq.second});
    return out;
}

template MixedSymbol<ExactComplex> canonical(const MixedSymbol<ExactComplex>&);
template MixedSymbol<BigComplex> canonical(const MixedSymbol<BigComplex>&);

/* ---------------------------------------------------------------- JSON */

namespace {

const json& field(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw ParseError(path, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
    return *it;
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

Rational parse_decimal(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "expected a decimal string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const UsageError& e) {
        throw ParseError(path, e.what());
    }
}

long double parse_real(const json& v, const std::string& path) {
    if (!v.is_string()) throw ParseError(path, "expected a decimal string");
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    const long double value = std::strtold(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(value) || value < 0)
        throw ParseError(path, "expected a non-negative decimal, got '" + s + "'");
    return value;
}

unsigned parse_unsigned(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 100000)
        throw ParseError(path, "expected a non-negative integer");
    return static_cast<unsigned>(v.get<long long>());
}

ExactComplex parse_complex_json(const json& v, const std::string& path) {
    if (!v.is_object()) throw ParseError(path, "expected {\"re\", \"im\"}");
    for (const auto& [key, _] : v.items())
        if (key != "re" && key != "im") throw ParseError(join(path, key), "unknown field");
    ExactComplex z;
    z.re = parse_decimal(field(v, "re", path), join(path, "re"));
    if (v.contains("im")) z.im = parse_decimal(v["im"], join(path, "im"));
    return z;
}

std::vector<ExactComplex> parse_complex_list(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path, "expected an array");
    std::vector<ExactComplex> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_complex_json(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

std::string format_real(long double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.21Lg", x);
    return buf;
}

AnalyticSymbol parse_analytic(const json& v, unsigned m, const std::string& path) {
    if (!v.is_object()) throw ParseError(path, "expected a symbol object");
    if (v.contains("m") && parse_unsigned(v["m"], join(path, "m")) != m)
        throw ParseError(join(path, "m"), "weight order differs from the top-level m = " + std::to_string(m));
    const json& kind_v = field(v, "kind", path);
    if (!kind_v.is_string()) throw ParseError(join(path, "kind"), "expected a string");
    const std::string kind = kind_v.get<std::string>();
    if (kind == "kernel_combo") {
        const json& terms = field(v, "terms", path);
        if (!terms.is_array()) throw ParseError(join(path, "terms"), "expected an array");
        KernelCombo<ExactComplex> f{m, {}};
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string tp = join(path, "terms") + "[" + std::to_string(i) + "]";
            f.terms.push_back({parse_complex_json(field(terms[i], "c", tp), tp + ".c"),
                               parse_complex_json(field(terms[i], "w", tp), tp + ".w")});
        }
        return f;
    }
    if (kind == "poly") return Polynomial{parse_complex_list(field(v, "coeffs", path), join(path, "coeffs"))};
    if (kind == "exp") return ExpSymbol{parse_complex_json(field(v, "a", path), join(path, "a"))};
    if (kind == "monomial_series") {
        MonomialSeries<ExactComplex> s;
        s.m = m;
        s.coeffs = parse_complex_list(field(v, "coeffs", path), join(path, "coeffs"));
        if (v.contains("tail")) {
            const std::string tp = join(path, "tail");
            const json& t = v["tail"];
            Majorant mj;
            mj.scale = parse_real(field(t, "scale", tp), join(tp, "scale"));
            mj.radius = parse_real(field(t, "radius", tp), join(tp, "radius"));
            if (t.contains("shift")) mj.shift = parse_unsigned(t["shift"], join(tp, "shift"));
            s.majorant = mj;
            set_tail_from_majorant(s);
        }
        return s;
    }
    throw ParseError(join(path, "kind"), "unknown kind '" + kind + "'");
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("$", std::string("malformed JSON: ") + e.what());
    }
}

unsigned parse_m(const json& doc) {
    if (!doc.is_object()) throw ParseError("$", "expected a JSON object");
    return parse_unsigned(field(doc, "m", ""), "m");
}

}  // namespace

json complex_json(const ExactComplex& z) { return json{{"re", format_rational(z.re)}, {"im", format_rational(z.im)}}; }

json complex_json(const BigComplex& z, unsigned digits) {
    return json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}};
}

json analytic_symbol_json(const AnalyticSymbol& f) {
    const auto list = [](const std::vector<ExactComplex>& coeffs) {
        json arr = json::array();
        for (const auto& c : coeffs) arr.push_back(complex_json(c));
        return arr;
    };
    return std::visit(overloaded{
                          [&](const KernelCombo<ExactComplex>& k) {
                              json terms = json::array();
                              for (const auto& t : k.terms)
                                  terms.push_back({{"c", complex_json(t.coeff)}, {"w", complex_json(t.node)}});
                              return json{{"kind", "kernel_combo"}, {"terms", terms}};
                          },
                          [&](const Polynomial& p) { return json{{"kind", "poly"}, {"coeffs", list(p.coeffs)}}; },
                          [&](const ExpSymbol& e) { return json{{"kind", "exp"}, {"a", complex_json(e.a)}}; },
                          [&](const MonomialSeries<ExactComplex>& s) {
                              json out{{"kind", "monomial_series"}, {"coeffs", list(s.coeffs)}};
                              if (s.majorant)
                                  out["tail"] = json{{"scale", format_real(s.majorant->scale)},
                                                     {"radius", format_real(s.majorant->radius)},
                                                     {"shift", s.majorant->shift}};
                              return out;
                          },
                      },
                      f);
}

json symbol_pair_json(const SymbolPair& pair) {
    return json{{"m", pair.m}, {"f", analytic_symbol_json(pair.f)}, {"g", analytic_symbol_json(pair.g)}};
}

SymbolPair parse_symbol_spec(const std::string& text) {
    const json doc = parse_document(text);
    SymbolPair pair;
    pair.m = parse_m(doc);
    pair.f = parse_analytic(field(doc, "f", ""), pair.m, "f");
    pair.g = parse_analytic(field(doc, "g", ""), pair.m, "g");
    return pair;
}

std::string serialize_symbol_spec(const SymbolPair& pair) { return symbol_pair_json(pair).dump(); }

bool is_mixed_spec(const std::string& text) {
    const json doc = parse_document(text);
    return doc.is_object() && doc.contains("symbol");
}

MixedSpec parse_mixed_spec(const std::string& text) {
    const json doc = parse_document(text);
    MixedSpec spec;
    spec.m = parse_m(doc);
    const json& sym = field(doc, "symbol", "");
    const json& kind = field(sym, "kind", "symbol");
    if (!kind.is_string() || kind.get<std::string>() != "mixed")
        throw ParseError("symbol.kind", "expected \"mixed\"");
    const json& terms = field(sym, "terms", "symbol");
    if (!terms.is_array()) throw ParseError("symbol.terms", "expected an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string tp = "symbol.terms[" + std::to_string(i) + "]";
        spec.symbol.terms.push_back({parse_complex_json(field(terms[i], "c", tp), tp + ".c"),
                                     parse_unsigned(field(terms[i], "p", tp), tp + ".p"),
                                     parse_unsigned(field(terms[i], "q", tp), tp + ".q")});
    }
    return spec;
}

json mixed_spec_json(const MixedSpec& spec) {
    json terms = json::array();
    for (const auto& t : spec.symbol.terms) terms.push_back({{"c", complex_json(t.coeff)}, {"p", t.p}, {"q", t.q}});
    return json{{"m", spec.m}, {"symbol", {{"kind", "mixed"}, {"terms", terms}}}};
}

}  // namespace fockcheck
