#include "foldseq/rational.hpp"

#include <cmath>

namespace fsq {

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt{s});
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) fail(ErrorKind::Malformed, "zero denominator in '" + s + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Malformed, "not a rational: '" + s + "'");
    }
}

double to_double(const Rational& q) { return q.get_d(); }

double log_bigint(const BigInt& a) {
    if (a <= 0) return -INFINITY;
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, a.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_of_ratio(const Rational& r) {
    if (r <= 0) return -INFINITY;
    Rational excess = r - 1;
    if (excess >= 0 && excess < Rational(1, 4)) return std::log1p(excess.get_d());
    return log_bigint(r.get_num()) - log_bigint(r.get_den());
}

Rational dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) fail(ErrorKind::Argument, "dimension mismatch in dot product");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational l1_norm(const QVec& v) {
    Rational s = 0;
    for (const auto& x : v) s += abs(x);
    return s;
}

QVec normalized_l1(const QVec& v) {
    Rational n = l1_norm(v);
    if (n == 0) return v;
    QVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

bool all_nonnegative(const QVec& v) {
    for (const auto& x : v)
        if (x < 0) return false;
    return true;
}

bool all_zero(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace fsq
