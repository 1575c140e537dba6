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

// Scalar layer: exact rationals, arbitrary-precision floats, the complex
// wrapper over both, and the numeric context shared by every computation.

#ifndef FOCKCHECK_NUMERIC_HPP
#define FOCKCHECK_NUMERIC_HPP

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace fockcheck {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/* ---------------------------------------------------------------- errors */

/// Invalid arguments or violated preconditions (CLI exit code 1).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A truncation degree too small for the requested accuracy (CLI exit code 2).
class TruncationGuardError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document; `path` names the offending field.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

   private:
    std::string path_;
};

/* ------------------------------------------------------------- precision */

inline constexpr mpfr_prec_t kGuardBits = 32;

/// Bits needed to carry `digits` significant decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(unsigned digits);

/// Thread-local precision used by default-constructed BigFloat values.
mpfr_prec_t working_precision() noexcept;

/// RAII override of the calling thread's working precision.
class PrecisionScope {
   public:
    explicit PrecisionScope(mpfr_prec_t bits) noexcept;
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

   private:
    mpfr_prec_t previous_;
};

/* -------------------------------------------------------------- BigFloat */

/// Owning MPFR value. Each value carries its own precision; binary operations
/// round to the larger operand precision.
class BigFloat {
   public:
    BigFloat();
    template <std::integral I>
    BigFloat(I value) : BigFloat() {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<I>)
            mpfr_set_si(v_, static_cast<long>(value), MPFR_RNDN);
        else
            mpfr_set_ui(v_, static_cast<unsigned long>(value), MPFR_RNDN);
    }
    explicit BigFloat(double value);
    explicit BigFloat(long double value);
    explicit BigFloat(const Rational& value);
    explicit BigFloat(const BigInt& value);

    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    /// Parses a decimal literal ("-1.25e-3") at the working precision.
    static BigFloat parse(std::string_view text);
    static BigFloat pi();
    /// Uninitialised-value constructor with an explicit precision.
    static BigFloat with_precision(mpfr_prec_t bits);

    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }
    mpfr_ptr raw() noexcept { return v_; }
    mpfr_srcptr raw() const noexcept { return v_; }

    bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
    int sign() const noexcept { return mpfr_sgn(v_); }
    long double to_long_double() const noexcept { return mpfr_get_ld(v_, MPFR_RNDN); }
    double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits, trailing zeros
    /// stripped ("2.5e-3", "1", "-7.25").
    std::string to_string(unsigned digits) const;

    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);
    BigFloat operator-() const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend auto operator<=>(const BigFloat& a, const BigFloat& b) {
        const int c = mpfr_cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

   private:
    struct NoInit {};
    BigFloat(NoInit, mpfr_prec_t bits);
    bool moved_from() const noexcept { return v_->_mpfr_d == nullptr; }

    mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat round_to_integer(const BigFloat& x);
BigFloat pow_int(const BigFloat& x, long n);
BigFloat hypot(const BigFloat& a, const BigFloat& b);
/// Copy of x rounded to `bits` of precision.
BigFloat rounded(const BigFloat& x, mpfr_prec_t bits);

/* --------------------------------------------------------------- Complex */

/// Complex number over an exact (Rational) or floating (BigFloat) field.
template <class R>
struct Complex {
    using value_type = R;

    R re{};
    R im{};

    Complex() = default;
    Complex(R real) : re(std::move(real)), im() {}  // NOLINT(google-explicit-constructor)
    Complex(R real, R imag) : re(std::move(real)), im(std::move(imag)) {}

    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o) {
        R r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const R& s) {
        re *= s;
        im *= s;
        return *this;
    }
    Complex& operator/=(const R& s) {
        re /= s;
        im /= s;
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        const R d = o.re * o.re + o.im * o.im;
        if (d == R(0)) throw std::domain_error("complex division by zero");
        R r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    Complex operator-() const { return {-re, -im}; }

    bool is_zero() const { return re == R(0) && im == R(0); }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const R& s) { return a *= s; }
    friend Complex operator*(const R& s, Complex a) { return a *= s; }
    friend Complex operator/(Complex a, const R& s) { return a /= s; }
    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

using ExactComplex = Complex<Rational>;
using BigComplex = Complex<BigFloat>;

template <class C>
inline constexpr bool is_exact_v = std::is_same_v<C, ExactComplex>;

template <class C>
concept Scalar = std::is_same_v<C, ExactComplex> || std::is_same_v<C, BigComplex>;

template <class R>
Complex<R> conj(const Complex<R>& z) {
    return {z.re, -z.im};
}

/// |z|^2 in the scalar's own field.
template <class R>
R norm(const Complex<R>& z) {
    return z.re * z.re + z.im * z.im;
}

/// z^n by repeated squaring; 0^0 = 1.
template <class R>
Complex<R> pow(Complex<R> base, unsigned n) {
    Complex<R> result(R(1));
    while (n > 0) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n > 0) base *= base;
    }
    return result;
}

/// Embeds an exact rational into the scalar kind C.
template <Scalar C>
C from_rational(const Rational& q) {
    if constexpr (is_exact_v<C>)
        return C(q);
    else
        return C(BigFloat(q));
}

BigFloat abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex to_big(const ExactComplex& z);
inline const BigComplex& to_big(const BigComplex& z) { return z; }
BigComplex rounded(const BigComplex& z, mpfr_prec_t bits);

/// Upper bound on |z| as a long double (exact kinds are rounded outward).
long double magnitude(const ExactComplex& z);
long double magnitude(const BigComplex& z);

/// Relative rounding unit of one elementary operation: 0 for exact scalars.
template <Scalar C>
long double rounding_unit() {
    if constexpr (is_exact_v<C>)
        return 0.0L;
    else
        return std::ldexp(1.0L, static_cast<int>(1 - working_precision()));
}

/* -------------------------------------------------------- decimal format */

/// Parses "12", "-1.25", "3e-4", "1.5E+2" or "p/q" exactly.
Rational parse_rational(std::string_view text);
/// Terminating decimals are written as decimals, everything else as "p/q".
std::string format_rational(const Rational& q);
/// Parses "re,im" (either part a decimal literal or fraction).
ExactComplex parse_complex(std::string_view text);

std::string format_bound(long double value);

/* -------------------------------------------------------------- contexts */

/// Weight order of the Fock–Sobolev space.
struct FockParams {
    unsigned m = 0;
};

/// Truncation degree, decimal precision and zero tolerance for one computation.
struct NumericContext {
    unsigned truncation = 40;
    unsigned precision = 60;
    long double tolerance = 1e-20L;
    unsigned jobs = 1;

    /// Throws UsageError when an invariant is violated.
    void validate() const;
    mpfr_prec_t bits() const { return bits_for_digits(precision); }
    /// 10^(e - P): the precision-relative thresholds used throughout.
    long double precision_threshold(int e) const;
};

/// A floating value together with a bound on its total error.
struct Estimate {
    BigComplex value;
    long double error = 0.0L;
};

/* ----------------------------------------------------------- series bounds */

/// Upper bound on sum_{k >= from} exp(log_term(k)). Terms are summed until the
/// ratio of consecutive terms is at most 1/2 and non-increasing, after which
/// the remainder is dominated by a geometric series.
long double tail_sum_bound(const std::function<long double(unsigned)>& log_term, unsigned from);

/// log(n!) in long double.
long double log_factorial(unsigned n);

/// Runs body(index) for index in [0, count) on up to `jobs` threads. Every
/// worker inherits the caller's working precision.
void parallel_for(unsigned count, unsigned jobs, const std::function<void(unsigned)>& body);

}  // namespace fockcheck

#endif  // FOCKCHECK_NUMERIC_HPP
