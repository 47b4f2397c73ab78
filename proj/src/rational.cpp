#include "jetspace/rational.hpp"

#include <cctype>
#include <ostream>

namespace jetspace {

Rational rational_from_string(const std::string& text) {
    std::size_t pos = 0;
    auto bad = [&](const char* msg) { throw parse_error(msg, pos); };
    if (text.empty()) bad("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    bool digits = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) digits = true;
    if (!digits) bad("malformed rational literal");
    if (i < text.size()) {
        if (text[i] != '/') bad("malformed rational literal");
        ++i;
        bool den_digits = false;
        for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i) den_digits = true;
        if (!den_digits || i < text.size()) bad("malformed rational literal");
    }
    Rational q;
    // mpq_set_str rejects an explicit leading '+'.
    const std::string cleaned = text[0] == '+' ? text.substr(1) : text;
    if (mpq_set_str(q.get_mpq_t(), cleaned.c_str(), 10) != 0) bad("malformed rational literal");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) throw division_by_zero();
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw division_by_zero();
    Rational n = norm();
    return GaussianRational(re / n, -im / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational new_re = re * o.re - im * o.im;
    Rational new_im = re * o.im + im * o.re;
    re = std::move(new_re);
    im = std::move(new_im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

GaussianRational gq_add(const GaussianRational& x, const GaussianRational& y) { return x + y; }
GaussianRational gq_mul(const GaussianRational& x, const GaussianRational& y) { return x * y; }
GaussianRational gq_inv(const GaussianRational& x) { return x.inverse(); }

GaussianRational gq_pow(GaussianRational base, unsigned long exp) {
    GaussianRational result(1);
    while (exp > 0) {
        if (exp & 1UL) result *= base;
        base *= base;
        exp >>= 1UL;
    }
    return result;
}

namespace {

// "i", "-i", "2*i", "-1/2*i"; q must be nonzero.
std::string imaginary_part_to_string(const Rational& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return rational_to_string(q) + "*i";
}

}  // namespace

std::string gq_to_string(const GaussianRational& x) {
    if (x.is_zero()) return "0";
    if (x.is_real()) return rational_to_string(x.re);
    if (x.is_imaginary()) return imaginary_part_to_string(x.im);
    std::string out = rational_to_string(x.re);
    if (x.im > 0) out += "+";
    out += imaginary_part_to_string(x.im);
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << gq_to_string(x); }

}  // namespace jetspace
