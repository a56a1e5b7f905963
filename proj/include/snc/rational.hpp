#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace snc {

/// Exact rational scalar. Always kept in lowest terms with positive
/// denominator; zero is 0/1. Backed by GMP, so numerator and denominator
/// are arbitrary-precision and no operation ever rounds.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);

    /// Parses "p" or "p/q" (ASCII decimal, optional leading '-' on p,
    /// q positive). Rejects anything else, including "p/0".
    static Rational from_string(const std::string& s);

    /// num / 2^64, used for seeded probability draws.
    static Rational from_u64_over_2_64(std::uint64_t num);

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

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

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    /// Canonical text form: "p" when the denominator is 1, else "p/q".
    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Column vector of exact rationals. Componentwise relations and their
/// existential negations live in linalg.hpp.
using RatVector = std::vector<Rational>;

}  // namespace snc
