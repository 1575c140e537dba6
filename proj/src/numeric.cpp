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

#include "fockcheck/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace fockcheck {

namespace {

thread_local mpfr_prec_t tls_precision = 0;

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty() || !all_digits(s)) throw UsageError("not a number: '" + std::string(whole) + "'");
    BigInt value{std::string(s)};
    return negative ? BigInt(-value) : value;
}

BigInt pow10(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

}  // namespace

/* ------------------------------------------------------------- precision */

mpfr_prec_t bits_for_digits(unsigned digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + kGuardBits;
}

mpfr_prec_t working_precision() noexcept {
    if (tls_precision == 0) tls_precision = bits_for_digits(60);
    return tls_precision;
}

PrecisionScope::PrecisionScope(mpfr_prec_t bits) noexcept : previous_(working_precision()) {
    tls_precision = std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN);
}

PrecisionScope::~PrecisionScope() { tls_precision = previous_; }

/* -------------------------------------------------------------- BigFloat */

BigFloat::BigFloat() {
    mpfr_init2(v_, working_precision());
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(NoInit, mpfr_prec_t bits) { mpfr_init2(v_, bits); }

BigFloat::BigFloat(double value) : BigFloat() { mpfr_set_d(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(long double value) : BigFloat() { mpfr_set_ld(v_, value, MPFR_RNDN); }

BigFloat::BigFloat(const Rational& value) : BigFloat() { mpfr_set_q(v_, value.backend().data(), MPFR_RNDN); }

BigFloat::BigFloat(const BigInt& value) : BigFloat() { mpfr_set_z(v_, value.backend().data(), MPFR_RNDN); }

BigFloat::BigFloat(const BigFloat& other) : BigFloat(NoInit{}, other.precision()) {
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    v_[0] = other.v_[0];
    other.v_->_mpfr_d = nullptr;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this == &other) return *this;
    if (moved_from())
        mpfr_init2(v_, other.precision());
    else if (precision() != other.precision())
        mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    std::swap(v_[0], other.v_[0]);
    return *this;
}

BigFloat::~BigFloat() {
    if (!moved_from()) mpfr_clear(v_);
}

BigFloat BigFloat::parse(std::string_view text) {
    const std::string s(trim(text));
    BigFloat r;
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw UsageError("not a decimal number: '" + s + "'");
    return r;
}

BigFloat BigFloat::pi() {
    BigFloat r;
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::with_precision(mpfr_prec_t bits) {
    BigFloat r(NoInit{}, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
}

std::string BigFloat::to_string(unsigned digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t exponent = 0;
    char* raw_digits = mpfr_get_str(nullptr, &exponent, 10, std::max(digits, 1U), v_, MPFR_RNDN);
    std::string mantissa(raw_digits);
    mpfr_free_str(raw_digits);
    std::string sign;
    if (!mantissa.empty() && mantissa.front() == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
    std::string out = sign + mantissa.substr(0, 1);
    if (mantissa.size() > 1) out += "." + mantissa.substr(1);
    if (exponent - 1 != 0) out += "e" + std::to_string(static_cast<long>(exponent - 1));
    return out;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(NoInit{}, precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::NoInit{}, std::max(a.precision(), b.precision()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::NoInit{}, std::max(a.precision(), b.precision()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::NoInit{}, std::max(a.precision(), b.precision()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(BigFloat::NoInit{}, std::max(a.precision(), b.precision()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

namespace {

template <class F>
BigFloat unary(const BigFloat& x, F f) {
    BigFloat r = BigFloat::with_precision(x.precision());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat round_to_integer(const BigFloat& x) { return unary(x, mpfr_rint); }

BigFloat pow_int(const BigFloat& x, long n) {
    BigFloat r = BigFloat::with_precision(x.precision());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
    BigFloat r = BigFloat::with_precision(std::max(a.precision(), b.precision()));
    mpfr_hypot(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

BigFloat rounded(const BigFloat& x, mpfr_prec_t bits) {
    BigFloat r = BigFloat::with_precision(bits);
    mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

/* --------------------------------------------------------------- Complex */

BigComplex rounded(const BigComplex& z, mpfr_prec_t bits) { return {rounded(z.re, bits), rounded(z.im, bits)}; }


BigFloat abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex exp(const BigComplex& z) {
    const BigFloat scale = exp(z.re);
    BigFloat s = BigFloat::with_precision(z.im.precision());
    BigFloat c = BigFloat::with_precision(z.im.precision());
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return {scale * c, scale * s};
}

BigComplex to_big(const ExactComplex& z) { return {BigFloat(z.re), BigFloat(z.im)}; }

long double magnitude(const ExactComplex& z) {
    const PrecisionScope scope(64);
    return abs(to_big(z)).to_long_double() * (1.0L + 1e-15L);
}

long double magnitude(const BigComplex& z) {
    return (abs(z.re) + abs(z.im)).to_long_double() * (1.0L + 1e-15L);
}

/* -------------------------------------------------------- decimal format */

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw UsageError("empty number");
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(trim(s.substr(0, slash)), s);
        const BigInt den = parse_integer(trim(s.substr(slash + 1)), s);
        if (den == 0) throw UsageError("zero denominator in '" + std::string(s) + "'");
        return Rational(num, den);
    }
    std::string_view mant = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        mant = s.substr(0, e);
        const BigInt ex = parse_integer(s.substr(e + 1), s);
        if (abs(ex) > 100000) throw UsageError("exponent out of range in '" + std::string(s) + "'");
        exponent = ex.convert_to<long>();
    }
    bool negative = false;
    if (!mant.empty() && (mant.front() == '+' || mant.front() == '-')) {
        negative = mant.front() == '-';
        mant.remove_prefix(1);
    }
    std::string digits;
    long fraction_digits = 0;
    if (const auto dot = mant.find('.'); dot != std::string_view::npos) {
        const auto ip = mant.substr(0, dot);
        const auto fp = mant.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || !all_digits(ip) || !all_digits(fp))
            throw UsageError("not a number: '" + std::string(s) + "'");
        digits = std::string(ip) + std::string(fp);
        fraction_digits = static_cast<long>(fp.size());
    } else {
        if (mant.empty() || !all_digits(mant)) throw UsageError("not a number: '" + std::string(s) + "'");
        digits = std::string(mant);
    }
    BigInt value(digits);
    if (negative) value = -value;
    const long shift = exponent - fraction_digits;
    if (shift >= 0) return Rational(value * pow10(static_cast<unsigned>(shift)));
    return Rational(value, pow10(static_cast<unsigned>(-shift)));
}

std::string format_rational(const Rational& q) {
    const BigInt num = numerator(q);
    BigInt den = denominator(q);
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return num.str() + "/" + denominator(q).str();
    const unsigned k = std::max(twos, fives);
    const BigInt scaled = num * pow10(k) / denominator(q);
    std::string body = abs(scaled).str();
    const std::string sign = scaled < 0 ? "-" : "";
    if (k == 0) return sign + body;
    if (body.size() <= k) body = std::string(k - body.size() + 1, '0') + body;
    return sign + body.substr(0, body.size() - k) + "." + body.substr(body.size() - k);
}

ExactComplex parse_complex(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) return ExactComplex(parse_rational(text));
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string format_bound(long double value) {
    if (std::isinf(value)) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Le", value);
    return buf;
}

/* -------------------------------------------------------------- contexts */

void NumericContext::validate() const {
    if (truncation < 1) throw UsageError("truncation degree must be at least 1");
    if (precision < 30) throw UsageError("precision must be at least 30 digits");
    if (!(tolerance > 0) || !std::isfinite(tolerance)) throw UsageError("tolerance must be positive");
    const long double digits = std::ceil(-std::log10(tolerance) - 1e-9L);
    if (static_cast<long double>(precision) < 2 * digits)
        throw UsageError("precision " + std::to_string(precision) + " is below twice the tolerance digits (" +
                         std::to_string(static_cast<long>(digits)) + ")");
    if (jobs < 1) throw UsageError("jobs must be at least 1");
}

long double NumericContext::precision_threshold(int e) const {
    return std::pow(10.0L, static_cast<long double>(e) - static_cast<long double>(precision));
}

/* ----------------------------------------------------------- series bounds */

long double log_factorial(unsigned n) { return std::lgamma(static_cast<long double>(n) + 1.0L); }

long double tail_sum_bound(const std::function<long double(unsigned)>& log_term, unsigned from) {
    constexpr long double neg_inf = -std::numeric_limits<long double>::infinity();
    long double sum = 0.0L;
    long double previous_ratio = std::numeric_limits<long double>::infinity();
    long double current = log_term(from);
    for (unsigned k = from; k < from + 200000; ++k) {
        const long double next = log_term(k + 1);
        if (current == neg_inf && next == neg_inf) return sum * (1.0L + 1e-12L);
        sum += std::exp(current);
        const long double log_ratio = next - current;
        const long double ratio = current == neg_inf ? 0.0L : std::exp(log_ratio);
        if (ratio <= 0.5L && ratio <= previous_ratio) {
            // Remaining terms are dominated by exp(next) * (1 + 1/2 + 1/4 + ...).
            return (sum + 2.0L * std::exp(next)) * (1.0L + 1e-12L);
        }
        previous_ratio = ratio;
        current = next;
    }
    return std::numeric_limits<long double>::infinity();
}

void parallel_for(unsigned count, unsigned jobs, const std::function<void(unsigned)>& body) {
    if (jobs <= 1 || count <= 1) {
        for (unsigned i = 0; i < count; ++i) body(i);
        return;
    }
    const mpfr_prec_t bits = working_precision();
    std::atomic<unsigned> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    const unsigned n = std::min(jobs, count);
    workers.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        workers.emplace_back([&] {
            const PrecisionScope scope(bits);
            try {
                for (unsigned i = next++; i < count; i = next++) body(i);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace fockcheck
