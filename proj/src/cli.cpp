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

#include "fockcheck/cli.hpp"

#include "fockcheck/acceptance.hpp"
#include "fockcheck/checker.hpp"
#include "fockcheck/identities.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace fockcheck {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

struct Flags {
    std::optional<unsigned> m;
    unsigned truncation = 40;
    unsigned precision = 60;
    std::string tolerance = "1e-20";
    std::string input;
    std::string out;
    std::string format = "text";
    unsigned jobs = 1;
    bool no_timing = false;

    std::string identity;
    std::optional<unsigned> j;
    std::optional<unsigned> l;
    std::optional<unsigned> k;
    std::string x;
    std::string a;
    std::string A;
    std::string B;
    std::string z;
    std::string nodes;
    std::string region = "-1,1,-30,30";
    std::string entry;
    std::string op = "product";
    bool matrix = false;
    std::vector<std::string> suites;
};

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Outcome {
    ojson inputs = ojson::object();
    json results = json::object();
    std::vector<Check> checks;
    int code = kExitOk;
};

long double parse_tolerance(const std::string& text) {
    char* end = nullptr;
    const long double v = std::strtold(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size()) throw UsageError("--tolerance: not a number: '" + text + "'");
    return v;
}

ExactComplex complex_flag(const std::string& name, const std::string& text) {
    if (text.empty()) throw UsageError("--" + name + " is required");
    try {
        return parse_complex(text);
    } catch (const std::exception& e) {
        throw UsageError("--" + name + ": " + e.what());
    }
}

unsigned required(const std::optional<unsigned>& v, const char* name) {
    if (!v) throw UsageError(std::string("--") + name + " is required");
    return *v;
}

std::string read_input(const Flags& f) {
    if (f.input.empty()) throw UsageError("--input is required");
    if (f.input == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(f.input);
    if (!in) throw UsageError("--input: cannot open '" + f.input + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SymbolPair read_pair(const Flags& f) {
    SymbolPair pair = parse_symbol_spec(read_input(f));
    if (f.m && *f.m != pair.m)
        throw UsageError("--m " + std::to_string(*f.m) + " disagrees with the document's m = " + std::to_string(pair.m));
    return pair;
}

json number(unsigned v) { return std::to_string(v); }
json number(long double v) { return format_bound(v); }

json big(const BigComplex& z, const NumericContext& ctx) { return complex_json(z, ctx.precision); }

json estimate_json(const Estimate& e, const NumericContext& ctx) {
    return {{"value", big(e.value, ctx)}, {"error", number(e.error)}};
}

template <Scalar C>
json matrix_json(const OperatorMatrix<C>& t, const NumericContext& ctx) {
    const PrecisionScope scope(ctx.bits());
    json rows = json::array();
    for (unsigned i = 0; i < t.size(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < t.size(); ++j) row.push_back(big(t.entry(i, j), ctx));
        rows.push_back(std::move(row));
    }
    return rows;
}

json gram_json(const OperatorMatrix<ExactComplex>& t) {
    json rows = json::array();
    for (unsigned i = 0; i < t.size(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < t.size(); ++j) row.push_back(complex_json(t.gram_at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Scalar C>
json matrix_summary(const OperatorMatrix<C>& t) {
    unsigned valid = 0;
    for (bool v : t.column_valid) valid += v ? 1 : 0;
    return {{"size", number(t.size())}, {"valid_columns", number(valid)}, {"truncation_error", number(t.truncation_error)}};
}

/* ------------------------------------------------------------ commands */

Outcome cmd_kernel(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const unsigned m = f.m.value_or(0);
    const ExactComplex xe = complex_flag("x", f.x);
    o.inputs = {{"m", number(m)}, {"x", complex_json(xe)}};
    const PrecisionScope scope(ctx.bits());
    const BigComplex x = to_big(xe);
    const BigComplex value = kernel_eval(m, x, ctx);
    const BigComplex series = kernel_eval_series(m, x, ctx);
    o.results["value"] = big(value, ctx);
    o.results["branch"] = magnitude(x) >= 0.5L ? "closed" : "series";
    o.results["series"] = big(series, ctx);
    o.results["series_tail_bound"] = number(kernel_series_tail_bound(m, magnitude(x), ctx.truncation));
    if (!x.is_zero()) {
        const BigComplex closed = kernel_eval_closed(m, x, ctx);
        o.results["closed"] = big(closed, ctx);
        const long double diff = magnitude(series - closed);
        const long double bound = ctx.precision_threshold(5) * std::max(1.0L, magnitude(value));
        o.checks.push_back({"series and closed form agree", diff <= bound, format_bound(diff) + " <= " + format_bound(bound)});
    }
    return o;
}

Outcome cmd_toeplitz(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const std::string text = read_input(f);
    if (is_mixed_spec(text)) {
        const MixedSpec spec = parse_mixed_spec(text);
        if (f.m && *f.m != spec.m) throw UsageError("--m disagrees with the document's m");
        o.inputs = ojson::parse(mixed_spec_json(spec).dump());
        const auto t = toeplitz_matrix(spec.symbol, spec.m, ctx);
        const auto oracle = toeplitz_matrix_oracle(spec.symbol, spec.m, ctx);
        o.results["summary"] = matrix_summary(t);
        o.results["gram"] = gram_json(t);
        o.results["matrix"] = matrix_json(t, ctx);
        o.checks.push_back({"closed form equals inner-product oracle", t.gram == oracle.gram, "exact comparison"});
        return o;
    }
    SymbolPair pair = parse_symbol_spec(text);
    if (f.m && *f.m != pair.m) throw UsageError("--m disagrees with the document's m");
    o.inputs = ojson::parse(symbol_pair_json(pair).dump());
    o.inputs["operator"] = f.op;
    const auto build = [&]<Scalar C>(std::type_identity<C>) {
        if (f.op == "analytic") {
            check_truncation_guard(pair.f, pair.m, ctx);
            return toeplitz_matrix<C>(AnalyticOperator{pair.f}, pair.m, ctx.truncation, ctx);
        }
        if (f.op == "conjugate") {
            check_truncation_guard(pair.g, pair.m, ctx);
            return toeplitz_matrix<C>(ConjugateOperator{pair.g}, pair.m, ctx.truncation, ctx);
        }
        check_truncation_guard(pair.f, pair.m, ctx);
        check_truncation_guard(pair.g, pair.m, ctx);
        return toeplitz_matrix<C>(ProductOperator{pair.f, pair.g}, pair.m, product_series_degree(pair, ctx), ctx);
    };
    if (is_finite(pair.f) && is_finite(pair.g)) {
        const auto t = build(std::type_identity<ExactComplex>{});
        o.results["summary"] = matrix_summary(t);
        o.results["gram"] = gram_json(t);
        o.results["matrix"] = matrix_json(t, ctx);
    } else {
        const auto t = build(std::type_identity<BigComplex>{});
        o.results["summary"] = matrix_summary(t);
        o.results["matrix"] = matrix_json(t, ctx);
    }
    return o;
}

std::pair<unsigned, unsigned> parse_index_pair(const std::string& text, const char* flag) {
    unsigned a = 0, b = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> a >> comma >> b) || comma != ',' || !in.eof())
        throw UsageError(std::string("--") + flag + ": expected 'a,b', got '" + text + "'");
    return {a, b};
}

template <Scalar C>
void semicomm_results(Outcome& o, const Flags& f, const SymbolPair& pair, const NumericContext& ctx) {
    const auto t = semi_commutator_matrix<C>(pair, ctx);
    const Verdict v = verdict_from_matrix(t, ctx);
    o.results["verdict"] = verdict_json(v);
    o.results["max_entry"] = number(v.max_entry);
    o.results["summary"] = matrix_summary(t);
    if (f.matrix) o.results["matrix"] = matrix_json(t, ctx);
    if (f.entry.empty()) return;
    const auto [j, l] = parse_index_pair(f.entry, "entry");
    if (j > ctx.truncation || l > ctx.truncation) throw UsageError("--entry: index beyond the truncation degree");
    const auto* kf = std::get_if<KernelCombo<ExactComplex>>(&pair.f);
    const auto* kg = std::get_if<KernelCombo<ExactComplex>>(&pair.g);
    if (!kf || !kg) throw UsageError("--entry needs kernel-combination symbols");
    const PrecisionScope scope(ctx.bits());
    const Estimate c = semicomm_coefficient(*kf, *kg, l, j, ctx);
    const BigComplex gram = to_big(t.gram_at(j, l));
    const long double scale = std::sqrt(BigFloat(t.norms[j] * t.norms[l]).to_long_double());
    const long double bound = c.error + t.error_at(j, l) * scale;
    const long double diff = magnitude(c.value - gram);
    o.results["coefficient"] = {{"j", number(j)}, {"l", number(l)}, {"from_node_pairs", estimate_json(c, ctx)},
                                {"from_matrix", big(gram, ctx)}};
    o.checks.push_back({"node-pair coefficient equals matrix entry", diff <= 10.0L * bound,
                        format_bound(diff) + " <= 10 * " + format_bound(bound)});
}

Outcome cmd_semicomm(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const SymbolPair pair = read_pair(f);
    o.inputs = ojson::parse(symbol_pair_json(pair).dump());
    if (is_finite(pair.f) && is_finite(pair.g))
        semicomm_results<ExactComplex>(o, f, pair, ctx);
    else
        semicomm_results<BigComplex>(o, f, pair, ctx);
    return o;
}

Outcome cmd_berezin(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const SymbolPair pair = read_pair(f);
    o.inputs = ojson::parse(symbol_pair_json(pair).dump());
    std::vector<ExactComplex> points = f.z.empty() ? berezin_grid() : std::vector<ExactComplex>{complex_flag("z", f.z)};
    const PrecisionScope scope(ctx.bits());
    json rows = json::array();
    long double worst = 0.0L;
    for (const auto& p : points) {
        const BigComplex z = to_big(p);
        const Estimate b = berezin_transform(pair, z, ctx);
        const BigComplex product = evaluate(pair.f, pair.m, z, ctx) * conj(evaluate(pair.g, pair.m, z, ctx));
        const long double dev = magnitude(b.value - product);
        worst = std::max(worst, dev);
        rows.push_back({{"z", complex_json(p)},
                        {"berezin", estimate_json(b, ctx)},
                        {"product", big(product, ctx)},
                        {"deviation", number(dev)}});
    }
    o.results["points"] = rows;
    o.results["max_deviation"] = number(worst);
    return o;
}

std::vector<ExactComplex> parse_nodes(const std::string& text) {
    if (text.empty()) throw UsageError("--nodes is required (e.g. '1,0;0,1')");
    std::vector<ExactComplex> nodes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ';')) nodes.push_back(complex_flag("nodes", item));
    return nodes;
}

Outcome cmd_identity(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const unsigned m = f.m.value_or(0);
    const std::string& name = f.identity;
    o.inputs["identity"] = name;
    o.inputs["m"] = number(m);
    const PrecisionScope scope(ctx.bits());
    if (name == "theta" || name == "xi" || name == "q" || name == "cjl") {
        o.inputs["j"] = number(required(f.j, "j"));
        o.inputs["l"] = number(required(f.l, "l"));
    }
    if (name == "theta") {
        const unsigned j = *f.j, l = *f.l;
        const ThetaValues th = theta(j, l, m);
        const Estimate s = theta_from_series(j, l, m, ctx);
        o.results["value"] = format_rational(th.closed);
        o.results["definitional"] = format_rational(th.definitional);
        o.results["closed"] = format_rational(th.closed);
        o.results["from_series"] = estimate_json(s, ctx);
        const long double diff = magnitude(s.value - to_big(ExactComplex(th.closed)));
        o.checks.push_back({"definitional equals closed form", th.definitional == th.closed, "exact"});
        o.checks.push_back({"series coefficient equals closed form", diff <= 10.0L * s.error,
                            format_bound(diff) + " <= 10 * " + format_bound(s.error)});
    } else if (name == "xi") {
        const unsigned j = *f.j, l = *f.l;
        const XiCoefficients xi = xi_coeffs(j, l, m);
        json coeffs = json::array();
        for (const auto& c : xi.C) coeffs.push_back(format_rational(c));
        o.results["C"] = coeffs;
        bool recon = true;
        for (unsigned k = 0; k <= 12; ++k) recon = recon && xi_reconstruction(xi, k) == xi_product(j, l, m, k);
        o.checks.push_back({"leading coefficient is 1", xi.C[j] == 1, format_rational(xi.C[j])});
        o.checks.push_back({"next coefficient is jl", xi.C[j - 1] == Rational(j * l), format_rational(xi.C[j - 1])});
        o.checks.push_back({"expansion reproduces the product for k = 0..12", recon, "exact"});
        o.checks.push_back({"endpoint identity", xi_endpoint_defect(xi) == 0, format_rational(xi_endpoint_defect(xi))});
        o.checks.push_back({"cancellation identity", xi_cancellation_defect(xi) == 0,
                            format_rational(xi_cancellation_defect(xi))});
    } else if (name == "q") {
        json values = json::object();
        const unsigned lo = f.k.value_or(1), hi = f.k.value_or(*f.j - 1);
        for (unsigned k = lo; k <= hi; ++k) values[std::to_string(k)] = format_rational(q_coefficient(*f.j, *f.l, m, k));
        if (f.k) o.inputs["k"] = number(*f.k);
        o.results["Q"] = values;
    } else if (name == "cjl") {
        const ExactComplex Ae = complex_flag("A", f.A), Be = complex_flag("B", f.B);
        o.inputs["A"] = complex_json(Ae);
        o.inputs["B"] = complex_json(Be);
        const Estimate s = cjl_series(*f.j, *f.l, m, to_big(Ae), to_big(Be), ctx);
        const Estimate c = cjl_closed(*f.j, *f.l, m, to_big(Ae), to_big(Be), ctx);
        o.results["series"] = estimate_json(s, ctx);
        o.results["closed"] = estimate_json(c, ctx);
        const long double diff = magnitude(s.value - c.value);
        o.checks.push_back({"series equals closed form", diff <= 10.0L * (s.error + c.error),
                            format_bound(diff) + " <= 10 * " + format_bound(s.error + c.error)});
    } else if (name == "rho") {
        const unsigned j = f.j.value_or(0);
        const ExactComplex xe = complex_flag("x", f.x);
        o.inputs["j"] = number(j);
        o.inputs["x"] = complex_json(xe);
        const Estimate r = rho(j, to_big(xe), m, ctx);
        o.results["rho"] = estimate_json(r, ctx);
        if (m == 1) {
            const BigComplex closed = rho_closed_m1(j, to_big(xe), ctx);
            o.results["closed"] = big(closed, ctx);
            const long double diff = magnitude(r.value - closed);
            o.checks.push_back({"series equals closed form", diff <= 10.0L * r.error,
                                format_bound(diff) + " <= 10 * " + format_bound(r.error)});
        }
    } else if (name == "rho-chain") {
        const ExactComplex xe = complex_flag("x", f.x);
        o.inputs["x"] = complex_json(xe);
        const ChainResult chain = rho_difference_chain(to_big(xe), m, ctx);
        json steps = json::array();
        bool ok = true;
        for (const auto& s : chain.steps) {
            ok = ok && s.residual <= 10.0L * s.bound;
            steps.push_back({{"r", number(s.r)},
                             {"b", number(s.b)},
                             {"from_chain", big(s.from_chain, ctx)},
                             {"direct", big(s.direct, ctx)},
                             {"residual", number(s.residual)},
                             {"bound", number(s.bound)}});
        }
        o.results["steps"] = steps;
        o.results["first"] = estimate_json(chain.first, ctx);
        o.results["first_closed"] = big(chain.first_closed, ctx);
        o.results["second"] = estimate_json(chain.second, ctx);
        o.results["second_source"] = chain.second_from_chain ? "chain" : "direct series";
        o.results["second_closed"] = big(chain.second_closed, ctx);
        const long double d1 = magnitude(chain.first.value - chain.first_closed);
        const long double d2 = magnitude(chain.second.value - chain.second_closed);
        o.checks.push_back({"chain residuals within 10 x bound", ok, std::to_string(chain.steps.size()) + " steps"});
        o.checks.push_back({"first reduced sum equals closed form", d1 <= 10.0L * chain.first.error,
                            format_bound(d1) + " <= 10 * " + format_bound(chain.first.error)});
        o.checks.push_back({"second reduced sum equals closed form", d2 <= 10.0L * chain.second.error,
                            format_bound(d2) + " <= 10 * " + format_bound(chain.second.error)});
    } else if (name == "obstruction") {
        const ObstructionCertificate c = exp_obstruction(m, ctx);
        o.results["eliminated"] = c.eliminated;
        o.results["x_required"] = format_rational(c.x_required);
        o.results["exp_required"] = format_rational(c.exp_required);
        o.results["gap"] = c.gap.to_string(ctx.precision);
        o.results["system_satisfied"] = c.system_satisfied;
        o.checks.push_back({"eliminated system is consistent", c.system_satisfied, "exact"});
        o.checks.push_back({"gap exceeds m - 1", c.gap > BigFloat(m) - BigFloat(1), c.gap.to_string(12)});
    } else if (name == "exp-kernel") {
        const ExactComplex a = complex_flag("a", f.a);
        o.inputs["a"] = complex_json(a);
        const long double exact = exp_kernel_identity_check<ExactComplex>(m, a, ctx);
        const long double dev = exp_kernel_identity_check<BigComplex>(m, to_big(a), ctx);
        o.results["exact_deviation"] = number(exact);
        o.results["deviation"] = number(dev);
        o.checks.push_back({"exact coefficients agree", exact == 0.0L, format_bound(exact)});
        o.checks.push_back({"floating deviation within 10^(5-P)", dev <= ctx.precision_threshold(5), format_bound(dev)});
    } else if (name == "vandermonde") {
        const auto nodes = parse_nodes(f.nodes);
        json in = json::array();
        for (const auto& w : nodes) in.push_back(complex_json(w));
        o.inputs["nodes"] = ojson::parse(in.dump());
        const auto r = vandermonde_independence<ExactComplex>(nodes, ctx);
        bool distinct_nonzero = true;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            distinct_nonzero = distinct_nonzero && !nodes[i].is_zero();
            for (std::size_t k = i + 1; k < nodes.size(); ++k) distinct_nonzero = distinct_nonzero && !(nodes[i] == nodes[k]);
        }
        o.results["determinant"] = complex_json(r.det);
        o.results["independent"] = r.independent;
        o.checks.push_back({"independent iff nodes are distinct and non-zero", r.independent == distinct_nonzero, ""});
    } else {
        throw UsageError("unknown identity '" + name + "'");
    }
    return o;
}

Region parse_region(const std::string& text) {
    Region r;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(text);
    if (!(in >> r.x0 >> c1 >> r.x1 >> c2 >> r.y0 >> c3 >> r.y1) || c1 != ',' || c2 != ',' || c3 != ',' || !in.eof())
        throw UsageError("--region: expected 'x0,x1,y0,y1', got '" + text + "'");
    return r;
}

Outcome cmd_roots(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const unsigned m = f.m.value_or(0);
    const Region region = parse_region(f.region);
    o.inputs = {{"m", number(m)}, {"region", f.region}};
    const auto roots = kernel_one_roots(m, region, ctx);
    const PrecisionScope scope(ctx.bits());
    json list = json::array();
    long double worst = 0.0L;
    for (const auto& x : roots) {
        const long double residual = magnitude(kernel_eval(m, x, ctx) - BigComplex(BigFloat(1)));
        worst = std::max(worst, residual);
        list.push_back({{"x", big(x, ctx)}, {"residual", number(residual)}});
    }
    o.results["count"] = number(static_cast<unsigned>(roots.size()));
    o.results["roots"] = list;
    o.checks.push_back({"every root satisfies |K_m(x) - 1| < 10^(10-P)", worst < ctx.precision_threshold(10),
                        format_bound(worst)});
    return o;
}

Outcome cmd_check(const Flags& f, const NumericContext& ctx) {
    Outcome o;
    const SymbolPair pair = read_pair(f);
    o.inputs = ojson::parse(symbol_pair_json(pair).dump());
    const ConsistencyReport r = consistency_report(pair, ctx);
    o.results = consistency_json(r);
    o.checks.push_back({"theorem, numeric and Berezin routes agree", r.agree, r.agree ? "" : r.disagreement});
    return o;
}

Outcome cmd_verify_all(const Flags& f, const NumericContext& ctx, bool precision_given) {
    Outcome o;
    AcceptanceOptions options;
    if (precision_given) options.precision = ctx.precision;
    options.jobs = ctx.jobs;
    const std::vector<std::string>& names = f.suites.empty() ? acceptance_suite_names() : f.suites;
    json suites = json::array();
    for (const auto& name : names) {
        const SuiteResult r = run_acceptance_suite(name, options);
        json s = {{"name", r.name}, {"description", r.description}, {"pass", r.pass}, {"detail", r.detail}};
        if (!f.no_timing) s["seconds"] = format_bound(r.seconds);
        suites.push_back(std::move(s));
        o.checks.push_back({r.name, r.pass, r.detail});
    }
    o.inputs["suites"] = names;
    o.inputs["precision_override"] = precision_given ? number(ctx.precision) : json(nullptr);
    o.results["suites"] = suites;
    return o;
}

/* -------------------------------------------------------------- output */

void flatten(const ojson& v, const std::string& prefix, std::ostream& out) {
    if (v.is_object()) {
        if (v.empty()) out << prefix << ": {}\n";
        for (const auto& [key, item] : v.items()) flatten(item, prefix.empty() ? key : prefix + "." + key, out);
    } else if (v.is_array()) {
        if (v.empty()) out << prefix << ": []\n";
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], prefix + "[" + std::to_string(i) + "]", out);
    } else if (v.is_string()) {
        out << prefix << ": " << v.get<std::string>() << "\n";
    } else {
        out << prefix << ": " << v.dump() << "\n";
    }
}

std::string render(const ojson& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream out;
    flatten(report, "", out);
    return out.str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Flags f;
    CLI::App app{"Toeplitz and Hankel operator checks on Fock-Sobolev spaces", "fockcheck"};
    app.require_subcommand(1);
    const auto common = [&](CLI::App* sub) {
        sub->add_option("--m", f.m, "weight order m");
        sub->add_option("--truncation", f.truncation, "truncation degree N");
        sub->add_option("--precision", f.precision, "decimal digits P");
        sub->add_option("--tolerance", f.tolerance, "zero tolerance tau");
        sub->add_option("--input", f.input, "symbol document, or - for stdin");
        sub->add_option("--out", f.out, "write the report here instead of stdout");
        sub->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--jobs", f.jobs, "worker threads");
        sub->add_flag("--no-timing", f.no_timing, "report elapsed_ms as 0 for byte-stable output");
    };
    CLI::App* kernel = app.add_subcommand("kernel", "evaluate K_m at x");
    common(kernel);
    kernel->add_option("--x", f.x, "point as re,im");
    CLI::App* toeplitz = app.add_subcommand("toeplitz", "truncated Toeplitz matrix");
    common(toeplitz);
    toeplitz->add_option("--operator", f.op, "analytic, conjugate or product (symbol pairs)")
        ->check(CLI::IsMember({"analytic", "conjugate", "product"}));
    CLI::App* semicomm = app.add_subcommand("semicomm", "truncated semi-commutator and numeric verdict");
    common(semicomm);
    semicomm->add_flag("--matrix", f.matrix, "include every entry");
    semicomm->add_option("--entry", f.entry, "j,l: compare one coefficient with its node-pair sum");
    CLI::App* berezin = app.add_subcommand("berezin", "Berezin transform of f conj(g)");
    common(berezin);
    berezin->add_option("--z", f.z, "point as re,im (default: 3x3 grid)");
    CLI::App* identity = app.add_subcommand("identity", "closed-form identities");
    common(identity);
    identity->add_option("name", f.identity, "identity")
        ->required()
        ->check(CLI::IsMember({"theta", "xi", "q", "cjl", "rho", "rho-chain", "obstruction", "exp-kernel", "vandermonde"}));
    identity->add_option("--j", f.j);
    identity->add_option("--l", f.l);
    identity->add_option("--k", f.k);
    identity->add_option("--x", f.x, "re,im");
    identity->add_option("--a", f.a, "re,im");
    identity->add_option("--A", f.A, "re,im");
    identity->add_option("--B", f.B, "re,im");
    identity->add_option("--nodes", f.nodes, "re,im;re,im;...");
    CLI::App* roots = app.add_subcommand("roots", "non-zero roots of K_m(x) = 1");
    common(roots);
    roots->add_option("--region", f.region, "x0,x1,y0,y1");
    CLI::App* check = app.add_subcommand("check", "theorem verdict against numeric verdict and Berezin deviation");
    common(check);
    CLI::App* verify = app.add_subcommand("verify-all", "run the property suites");
    common(verify);
    verify->add_option("--suite", f.suites, "run only these suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "fockcheck: " << e.what() << "\n";
        return kExitUsage;
    }
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    const auto start = std::chrono::steady_clock::now();
    NumericContext ctx;
    Outcome o;
    try {
        ctx.truncation = f.truncation;
        ctx.precision = f.precision;
        ctx.tolerance = parse_tolerance(f.tolerance);
        ctx.jobs = f.jobs;
        ctx.validate();
        for (const auto& s : f.suites)
            if (std::find(acceptance_suite_names().begin(), acceptance_suite_names().end(), s) ==
                acceptance_suite_names().end())
                throw UsageError("--suite: unknown suite '" + s + "'");
        if (name == "kernel") o = cmd_kernel(f, ctx);
        if (name == "toeplitz") o = cmd_toeplitz(f, ctx);
        if (name == "semicomm") o = cmd_semicomm(f, ctx);
        if (name == "berezin") o = cmd_berezin(f, ctx);
        if (name == "identity") o = cmd_identity(f, ctx);
        if (name == "roots") o = cmd_roots(f, ctx);
        if (name == "check") o = cmd_check(f, ctx);
        if (name == "verify-all") o = cmd_verify_all(f, ctx, sub->count("--precision") > 0);
    } catch (const ParseError& e) {
        err << "fockcheck: input error at " << e.path() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "fockcheck: usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TruncationGuardError& e) {
        err << "fockcheck: truncation guard: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        err << "fockcheck: numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }

    ojson report;
    report["command"] = {{"name", name == "identity" ? "identity " + f.identity : name}, {"argv", args}};
    report["inputs"] = o.inputs;
    report["context"] = {{"truncation", std::to_string(ctx.truncation)},
                         {"precision", std::to_string(ctx.precision)},
                         {"tolerance", format_bound(ctx.tolerance)}};
    report["results"] = ojson::parse(o.results.dump());
    ojson checks = ojson::array();
    int code = o.code;
    for (const auto& c : o.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!c.pass) code = kExitInconsistent;
    }
    report["checks"] = checks;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report["elapsed_ms"] = f.no_timing ? std::string("0") : std::to_string(ms.count());

    const std::string text = render(report, f.format);
    if (f.out.empty()) {
        out << text;
    } else {
        std::ofstream file(f.out);
        if (!(file << text)) {
            err << "fockcheck: cannot write '" << f.out << "'\n";
            return kExitUsage;
        }
    }
    for (const auto& c : o.checks)
        if (!c.pass) err << "fockcheck: check failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    return code;
}

}  // namespace fockcheck
