// Arbitrary-precision rationals on top of GMP, always in lowest terms
// with positive denominator.

#ifndef SEXTIC_RATIONAL_HPP
#define SEXTIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sextic {

struct invalid_input : std::runtime_error {
    explicit invalid_input(const std::string& m) : std::runtime_error(m) {}
};
struct computation_error : std::runtime_error {
    explicit computation_error(const std::string& m) : std::runtime_error(m) {}
};

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_((long int)n) {}
    Rational(long n, long d) : v_((long int)n, (long int)d) {
        if (d == 0) throw invalid_input("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    // Parses "p", "p/q" or a plain decimal like "-1.25".
    static Rational parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw invalid_input("rational division by zero");
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

    Rational pow(unsigned e) const;
    Rational inverse() const {
        if (is_zero()) throw invalid_input("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // "p" for integers, otherwise "p/q".
    std::string str() const;
    double to_double() const { return v_.get_d(); }
    std::size_t hash() const;

  private:
    mpq_class v_;
};

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return Rational(n, d); }

// gcd used for content computations: gcd(num)/lcm(den) > 0, so dividing a
// list of rationals by the gcd of the list yields coprime integers.
Rational content_gcd(const Rational& a, const Rational& b);

mpz_class gcd_z(const mpz_class& a, const mpz_class& b);

}  // namespace sextic

#endif
