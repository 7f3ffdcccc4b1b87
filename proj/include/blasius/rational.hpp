#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace blasius {

// Exact arbitrary-precision rational. Canonical form is maintained by GMP:
// gcd(num, den) == 1 and den > 0 after every operation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                    // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Accepts "n", "n/d", or decimal/scientific strings like "-3.22e-7".
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Integer power, k may be negative (then *this must be nonzero).
    Rational pow_int(long k) const;

    // Nearest rationals with denominator a power of two <= 2^bits.
    Rational floor_to_den_bits(unsigned bits) const;
    Rational ceil_to_den_bits(unsigned bits) const;
    std::size_t den_bits() const { return mpz_sizeinbase(v_.get_den().get_mpz_t(), 2); }

    mpz_class floor() const;
    mpz_class ceil() const;

    double to_double() const { return v_.get_d(); }
    long double to_long_double() const;

    std::string to_fraction_string() const { return v_.get_str(); }
    // Decimal string with `digits` significant digits, rounded toward the given
    // direction (-1 down, +1 up); exact when the value is exactly representable.
    std::string to_decimal_string(int digits, int round_dir) const;

private:
    mpq_class v_;
};

inline Rational abs(const Rational& q) { return q.abs(); }
inline const Rational& min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline const Rational& max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

}  // namespace blasius
