#include "snc/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "snc/errors.hpp"

namespace snc {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    const auto bad = [&] { return ParseError("not a rational: '" + s + "'", 1, 1); };
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) throw bad();
    if (i < s.size()) {
        if (s[i] != '/') throw bad();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) throw bad();
        std::string den = s.substr(den_begin);
        if (den.find_first_not_of('0') == std::string::npos)
            throw ParseError("zero denominator in '" + s + "'", 1, 1);
    }
    Rational r;
    if (mpq_set_str(r.v_.get_mpq_t(), s.c_str(), 10) != 0) throw bad();
    r.v_.canonicalize();
    return r;
}

Rational Rational::from_u64_over_2_64(std::uint64_t num) {
    Rational r;
    mpz_class n;
    mpz_import(n.get_mpz_t(), 1, 1, sizeof(num), 0, 0, &num);
    mpz_class d(1);
    d <<= 64;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace snc
