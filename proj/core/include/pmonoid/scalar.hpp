#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pmonoid {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are always kept in lowest terms with positive denominators, so
/// equal values are structurally identical.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
    Scalar(mpq_class re, mpq_class im);
    Scalar(long num, long den);

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    /// Parses "a/b+c/di" style text. Either part may be omitted ("5", "-2i",
    /// "i", "1/2-i"). Throws FormatError on malformed input.
    static Scalar parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2 as a rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    /// Multiplicative inverse; throws DivisionByZero on zero.
    Scalar inverse() const;

    std::string to_string() const;
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::size_t hash() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline Scalar conj(const Scalar& a) { return a.conj(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pmonoid

template <>
struct std::hash<pmonoid::Scalar> {
    std::size_t operator()(const pmonoid::Scalar& s) const noexcept { return s.hash(); }
};
