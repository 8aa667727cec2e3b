#include "pmonoid/scalar.hpp"

#include <ostream>

#include "pmonoid/errors.hpp"

namespace pmonoid {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Parses an optionally signed "p" or "p/q" with decimal digits only.
mpq_class parse_rational(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
    if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
        throw FormatError("malformed scalar '" + std::string(whole) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) {
        d = mpz_class(std::string(den), 10);
        if (d == 0) throw FormatError("zero denominator in scalar '" + std::string(whole) + "'");
    }
    mpq_class q(n, d);
    q.canonicalize();
    return negative ? mpq_class(-q) : q;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw FormatError("empty scalar");
    if (s.back() != 'i') return Scalar(parse_rational(s, text));

    std::string_view body = s.substr(0, s.size() - 1);
    // The imaginary part starts at the last sign that is not the leading one.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    std::string_view real_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view imag_text = split == std::string_view::npos ? body : body.substr(split);

    mpq_class re = real_text.empty() ? mpq_class(0) : parse_rational(real_text, text);
    mpq_class im;
    if (imag_text.empty() || imag_text == "+") {
        im = 1;
    } else if (imag_text == "-") {
        im = -1;
    } else {
        im = parse_rational(imag_text, text);
    }
    return Scalar(std::move(re), std::move(im));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    const mpq_class n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& other) {
    re_ += other.re_;
    im_ += other.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
    re_ -= other.re_;
    im_ -= other.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
    if (sgn(im_) == 0 && sgn(other.im_) == 0) {
        re_ *= other.re_;
        return *this;
    }
    mpq_class re = re_ * other.re_ - im_ * other.im_;
    mpq_class im = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
    if (other.is_zero()) throw DivisionByZero("division by zero");
    if (sgn(other.im_) == 0) {
        re_ /= other.re_;
        im_ /= other.re_;
        return *this;
    }
    return *this *= other.inverse();
}

std::string Scalar::to_string() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = im_.get_str() + "i";
    }
    if (sgn(re_) == 0) return imag;
    if (imag.front() != '-') imag.insert(imag.begin(), '+');
    return re_.get_str() + imag;
}

std::size_t Scalar::hash() const {
    std::hash<std::string> h;
    return h(re_.get_str()) * 31u ^ h(im_.get_str());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pmonoid
