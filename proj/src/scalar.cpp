#include "strev/scalar.hpp"

#include <cctype>
#include <ostream>

namespace strev {

GaussianRational::GaussianRational(BigRational re, BigRational im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational::GaussianRational(long num, long den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    re_ = BigRational(num, den);
    re_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    if (is_real()) return {1 / re_, 0};
    BigRational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    // Most entries in this code base are real or zero; skip the cross terms.
    if (is_zero() || o.is_zero()) {
        re_ = 0;
        im_ = 0;
    } else if (is_real() && o.is_real()) {
        re_ *= o.re_;
    } else if (o.is_real()) {
        re_ *= o.re_;
        im_ *= o.re_;
    } else if (is_real()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
    } else {
        BigRational r = re_ * o.re_ - im_ * o.im_;
        BigRational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
    }
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational pow(const GaussianRational& a, long k) {
    if (k < 0) {
        if (a.is_zero()) throw ArithmeticError("zero raised to a negative power");
        return pow(a.inverse(), -k);
    }
    GaussianRational result = GaussianRational::one();
    GaussianRational base = a;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return result;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    GaussianRational parse() {
        skip_space();
        if (at_end()) fail("empty scalar");

        Term first = term(/*leading=*/true);
        if (first.imaginary) {
            finish();
            return {0, first.value};
        }
        if (at_end_after_space()) return {first.value, 0};

        std::size_t sign_pos = pos_;
        if (peek() != '+' && peek() != '-') fail("expected '+' or '-' before imaginary part");
        Term second = term(/*leading=*/false);
        if (!second.imaginary) fail_at("second term must be imaginary", sign_pos);
        finish();
        return {first.value, second.value};
    }

private:
    struct Term {
        BigRational value;
        bool imaginary = false;
    };

    Term term(bool leading) {
        bool negative = false;
        bool explicit_sign = false;
        std::size_t sign_pos = pos_;
        bool plus_sign = peek() == '+';
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            explicit_sign = true;
            ++pos_;
        }
        // imag := [+|-] rat "i" and rat may carry its own '-'
        bool double_sign = false;
        if (explicit_sign && peek() == '-') {
            negative = !negative;
            double_sign = true;
            ++pos_;
        }
        if (!leading && !explicit_sign) fail("expected sign");

        Term t;
        if (peek() == 'i') {
            ++pos_;
            t.value = negative ? -1 : 1;
            t.imaginary = true;
            return t;
        }
        std::size_t start = pos_;
        BigInteger num = digits();
        BigInteger den = 1;
        if (peek() == '/') {
            ++pos_;
            std::size_t den_pos = pos_;
            den = digits();
            if (den == 0) fail_at("zero denominator", den_pos);
        }
        if (pos_ == start) fail("expected digits");
        t.value = BigRational(num, den);
        t.value.canonicalize();
        if (negative) t.value = -t.value;
        if (peek() == 'i') {
            ++pos_;
            t.imaginary = true;
        } else if (double_sign) {
            fail_at("doubled sign before real part", sign_pos);
        } else if (leading && plus_sign) {
            // a leading '+' is only part of the imaginary production
            fail_at("unexpected '+' before real part", sign_pos);
        }
        return t;
    }

    BigInteger digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return BigInteger(std::string(text_.substr(start, pos_ - start)));
    }

    void finish() {
        if (!at_end_after_space()) fail("trailing characters");
    }

    bool at_end_after_space() {
        std::size_t save = pos_;
        skip_space();
        if (at_end()) return true;
        pos_ = save;
        return false;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }
    [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
        throw ParseError("malformed scalar '" + std::string(text_) + "': " + what, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GaussianRational parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_scalar(const GaussianRational& a) {
    const BigRational& re = a.re();
    const BigRational& im = a.im();
    if (sgn(im) == 0) return re.get_str();

    std::string imag;
    if (im == 1) {
        imag = "i";
    } else if (im == -1) {
        imag = "-i";
    } else {
        imag = im.get_str() + "i";
    }
    if (sgn(re) == 0) return imag;
    return re.get_str() + (sgn(im) > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& a) { return os << format_scalar(a); }

}  // namespace strev
