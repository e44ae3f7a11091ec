#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace schurzeta {

using Rational = mpq_class;
using Complex = std::complex<double>;

enum class EvalMode { Exact, Float };

// Numeric value that is either an exact big rational or a complex double.
// Arithmetic stays exact as long as both operands are exact.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(int n) : v_(Rational(n)) {}
    Scalar(long n) : v_(Rational(static_cast<signed long>(n))) {}
    Scalar(const Rational& r) : v_(r) {}
    Scalar(Rational&& r) : v_(std::move(r)) {}
    Scalar(double d) : v_(Complex(d, 0.0)) {}
    Scalar(Complex c) : v_(c) {}

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }

    const Rational& rational() const {
        if (!is_exact()) throw std::domain_error("scalar is not exact");
        return std::get<Rational>(v_);
    }

    Complex to_complex() const {
        if (is_exact()) return Complex(std::get<Rational>(v_).get_d(), 0.0);
        return std::get<Complex>(v_);
    }

    bool is_integer() const {
        return is_exact() && std::get<Rational>(v_).get_den() == 1;
    }

    long to_long() const {
        if (!is_integer()) throw std::domain_error("scalar is not an integer");
        const mpz_class& num = std::get<Rational>(v_).get_num();
        if (!num.fits_slong_p()) throw std::overflow_error("integer scalar too large");
        return num.get_si();
    }

    bool is_zero() const {
        if (is_exact()) return std::get<Rational>(v_) == 0;
        return std::get<Complex>(v_) == Complex(0.0, 0.0);
    }

    double abs() const {
        if (is_exact()) {
            Rational a = std::get<Rational>(v_);
            return std::abs(a.get_d());
        }
        return std::abs(std::get<Complex>(v_));
    }

    Scalar operator-() const {
        if (is_exact()) return Scalar(Rational(-std::get<Rational>(v_)));
        return Scalar(-std::get<Complex>(v_));
    }

    Scalar& operator+=(const Scalar& o) {
        if (is_exact() && o.is_exact()) std::get<Rational>(v_) += std::get<Rational>(o.v_);
        else v_ = to_complex() + o.to_complex();
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        if (is_exact() && o.is_exact()) std::get<Rational>(v_) -= std::get<Rational>(o.v_);
        else v_ = to_complex() - o.to_complex();
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_exact() && o.is_exact()) std::get<Rational>(v_) *= std::get<Rational>(o.v_);
        else v_ = to_complex() * o.to_complex();
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (is_exact() && o.is_exact()) {
            if (o.is_zero()) throw std::domain_error("division by zero");
            std::get<Rational>(v_) /= std::get<Rational>(o.v_);
        } else {
            v_ = to_complex() / o.to_complex();
        }
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.is_exact() && b.is_exact())
            return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
        return a.to_complex() == b.to_complex();
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "num/den" for exact values (plain integer when den == 1), "re+imi" otherwise.
    std::string str() const;

    static Scalar parse_rational(const std::string& text);

private:
    std::variant<Rational, Complex> v_;
};

std::string rational_str(const Rational& r);
Rational parse_rational_string(const std::string& text);

}  // namespace schurzeta
