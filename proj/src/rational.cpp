#include "blasius/rational.hpp"

#include <cctype>
#include <cmath>

namespace blasius {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    if (s.find('/') != std::string::npos) {
        mpq_class q(s, 10);
        q.canonicalize();
        return Rational(q);
    }
    // decimal / scientific form: [+-]digits[.digits][eE[+-]exp]
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        exp10 = std::stol(s.substr(epos + 1));
    }
    auto dot = mant.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(mant.size() - dot - 1);
        mant.erase(dot, 1);
    }
    if (mant.empty() || mant == "+" || mant == "-")
        throw std::invalid_argument("Rational::parse: bad number '" + s + "'");
    mpz_class m(mant.c_str(), 10);
    mpq_class q(m);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 >= 0)
        q *= p10;
    else
        q /= p10;
    q.canonicalize();
    return Rational(q);
}

Rational Rational::pow_int(long k) const {
    if (k == 0) return Rational(1);
    bool inv = k < 0;
    unsigned long e = static_cast<unsigned long>(inv ? -k : k);
    if (inv && is_zero()) throw std::domain_error("Rational::pow_int: 0^negative");
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
    mpq_class r(n, d);
    r.canonicalize();
    Rational out(r);
    return inv ? Rational(1) / out : out;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

Rational Rational::floor_to_den_bits(unsigned bits) const {
    if (den_bits() <= bits) return *this;
    mpz_class scaled_num = v_.get_num() << bits;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), v_.get_den().get_mpz_t());
    mpz_class den(1);
    den <<= bits;
    mpq_class r(q, den);
    r.canonicalize();
    return Rational(r);
}

Rational Rational::ceil_to_den_bits(unsigned bits) const {
    if (den_bits() <= bits) return *this;
    mpz_class scaled_num = v_.get_num() << bits;
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), v_.get_den().get_mpz_t());
    mpz_class den(1);
    den <<= bits;
    mpq_class r(q, den);
    r.canonicalize();
    return Rational(r);
}

long double Rational::to_long_double() const {
    // mpq -> long double with more effective precision than get_d()
    mpf_class f(v_, 128);
    // mpf has no direct long double accessor; split into high and low doubles
    double hi = f.get_d();
    mpf_class rem = f - hi;
    double lo = rem.get_d();
    return static_cast<long double>(hi) + static_cast<long double>(lo);
}

std::string Rational::to_decimal_string(int digits, int round_dir) const {
    if (digits < 1) digits = 1;
    if (is_zero()) return "0";
    bool neg = sign() < 0;
    mpq_class a(::abs(v_));
    // find exponent e with 10^{e} <= a < 10^{e+1}
    long e = 0;
    mpq_class ten(10);
    mpq_class x = a;
    while (x >= ten) { x /= 10; ++e; }
    while (x < 1) { x *= 10; --e; }
    // want integer m with m = a * 10^{digits-1-e}, directional rounding
    long shift = digits - 1 - e;
    mpq_class scaled = a;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        scaled *= p10;
    else
        scaled /= p10;
    // directional rounding in terms of the signed value
    bool round_up_abs = (round_dir > 0) != neg;  // round away from the bound direction
    mpz_class m;
    if (round_up_abs)
        mpz_cdiv_q(m.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    else
        mpz_fdiv_q(m.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    std::string ds = m.get_str();
    // rounding up may add a digit (e.g. 999 -> 1000): adjust exponent
    if (static_cast<long>(ds.size()) > digits) {
        e += static_cast<long>(ds.size()) - digits;
        ds = ds.substr(0, static_cast<std::size_t>(digits));
    }
    std::string out = neg ? "-" : "";
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    if (e != 0) out += "e" + std::to_string(e);
    return out;
}

}  // namespace blasius
