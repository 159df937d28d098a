#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcf {

/// Error type for all library failures that violate a documented contract.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arbitrary-precision rational number, always in lowest terms with positive
/// denominator. The canonical zero is 0/1. Value type, safe to share across
/// threads after construction.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                       // NOLINT: implicit by design
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "p", "-p" or "p/q" with arbitrary-precision decimal digits.
    static Rat from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw Error("Rat: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw Error("Rat: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rat(std::move(v));
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw Error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }

    Rat inv() const {
        if (is_zero()) throw Error("Rat: inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    /// Integer exponent; negative exponents invert (zero base rejected).
    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        Rat base = e < 0 ? inv() : *this;
        unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1
                                : static_cast<unsigned long>(e);
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), base.v_.get_num_mpz_t(), n);
        mpz_pow_ui(r.get_den_mpz_t(), base.v_.get_den_mpz_t(), n);
        r.canonicalize();
        return Rat(std::move(r));
    }

    /// gcd(n1,n2)/lcm(d1,d2): the positive generator of the fractional ideal
    /// spanned by the two values. content(x, 0) = |x|.
    static Rat content(const Rat& x, const Rat& y) {
        if (x.is_zero()) return y.abs();
        if (y.is_zero()) return x.abs();
        mpz_class n, d;
        mpz_gcd(n.get_mpz_t(), x.v_.get_num_mpz_t(), y.v_.get_num_mpz_t());
        mpz_lcm(d.get_mpz_t(), x.v_.get_den_mpz_t(), y.v_.get_den_mpz_t());
        mpq_class r(n, d);
        r.canonicalize();
        return Rat(std::move(r));
    }

    std::string to_string() const { return v_.get_str(); }
    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }

    /// Exact conversion when the value is a small integer.
    long to_long() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw Error("Rat: not a small integer: " + to_string());
        return v_.get_num().get_si();
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// Exact binomial coefficient C(n, k) for possibly large n (k small).
inline Rat binom(long n, long k) {
    if (k < 0) return Rat(0);
    mpz_class r = 1;
    for (long i = 0; i < k; ++i) { r *= (n - i); }
    mpz_class f = 1;
    for (long i = 2; i <= k; ++i) f *= i;
    mpq_class q(r, f);
    q.canonicalize();
    return Rat(std::move(q));
}

/// (-1)^e for any integer e (negative exponents allowed: parity only).
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace hcf
