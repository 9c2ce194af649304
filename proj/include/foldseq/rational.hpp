#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace fsq {

using BigInt = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;

enum class ErrorKind {
    Argument,
    Malformed,
    Validation,
    Budget,
    IO,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

double to_double(const Rational& q);
// Natural log of a positive big integer without overflowing a double.
double log_bigint(const BigInt& a);
// log(num/den) for a rational >= 1, accurate when the value is close to 1.
double log_of_ratio(const Rational& r);

Rational dot(const QVec& a, const QVec& b);
Rational l1_norm(const QVec& v);
QVec normalized_l1(const QVec& v);
bool all_nonnegative(const QVec& v);
bool all_zero(const QVec& v);

}  // namespace fsq
