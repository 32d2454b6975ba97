#ifndef STREV_SCALAR_HPP
#define STREV_SCALAR_HPP

#include <concepts>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace strev {

/// Arbitrary-precision rational; GMP keeps every result in lowest terms
/// with a positive denominator.
using BigRational = mpq_class;
using BigInteger = mpz_class;

class ArithmeticError : public std::domain_error {
public:
    explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// The operations every matrix routine relies on. Any exact field that
/// satisfies this can be dropped into BasicMatrix.
template <typename F>
concept ExactField = std::regular<F> && requires(const F a, const F b) {
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { a / b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
};

/// Element of Q(i): re + im*i with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(BigRational re, BigRational im = 0);
    GaussianRational(long num, long den);

    static GaussianRational zero() { return {}; }
    static GaussianRational one() { return GaussianRational(1L); }
    static GaussianRational imag_unit() { return {BigRational(0), BigRational(1)}; }

    const BigRational& re() const noexcept { return re_; }
    const BigRational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    BigRational norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Lexicographic on (re, im). Only used to canonicalize orderings.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : cmp(a.im_, b.im_) < 0;
    }

private:
    BigRational re_{0};
    BigRational im_{0};
};

static_assert(ExactField<GaussianRational>);

/// Integer power; negative exponents go through the inverse.
GaussianRational pow(const GaussianRational& a, long k);

/// Grammar: scalar := real | real imag | imag, imag := [+|-] rat "i" | [+|-] "i",
/// rat := [-] int ["/" posint]. Whitespace around the whole token is ignored.
GaussianRational parse_scalar(std::string_view text);
std::string format_scalar(const GaussianRational& a);

std::ostream& operator<<(std::ostream& os, const GaussianRational& a);

}  // namespace strev

template <>
struct std::hash<strev::GaussianRational> {
    std::size_t operator()(const strev::GaussianRational& z) const {
        return std::hash<std::string>{}(strev::format_scalar(z));
    }
};

#endif  // STREV_SCALAR_HPP
