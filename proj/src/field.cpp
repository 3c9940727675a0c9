#include "cotor/field.hpp"

#include <numeric>

namespace cotor {

namespace {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw ArithmeticOverflow("rational arithmetic overflow");
  return static_cast<long long>(v);
}

Scalar reduce_fraction(__int128 num, __int128 den) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 a = num < 0 ? -num : num;
  __int128 b = den;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) return {0, 1};
  return {checked(num / a), checked(den / a)};
}

long long mod_pow(long long base, long long exp, long long p) {
  long long r = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % p;
    base = (__int128)base * base % p;
    exp >>= 1;
  }
  return r;
}

}  // namespace

Field Field::prime(long long p) {
  if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
  return Field(Kind::Prime, p);
}

Field Field::rationals() { return Field(Kind::Rational, 0); }

long long Field::order() const {
  if (kind_ != Kind::Prime) throw Error("infinite field has no order");
  return p_;
}

Scalar Field::from_int(long long n) const {
  if (kind_ == Kind::Prime) {
    long long r = n % p_;
    if (r < 0) r += p_;
    return {r, 1};
  }
  return {n, 1};
}

Scalar Field::element(long long n) const {
  if (kind_ != Kind::Prime) throw Error("cannot index elements of an infinite field");
  if (n < 0 || n >= p_) throw Error("element index out of range");
  return {n, 1};
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return {(a.num + b.num) % p_, 1};
  return reduce_fraction((__int128)a.num * b.den + (__int128)b.num * a.den,
                         (__int128)a.den * b.den);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Prime) return {(long long)((__int128)a.num * b.num % p_), 1};
  return reduce_fraction((__int128)a.num * b.num, (__int128)a.den * b.den);
}

Scalar Field::neg(const Scalar& a) const {
  if (kind_ == Kind::Prime) return {a.num == 0 ? 0 : p_ - a.num, 1};
  return {-a.num, a.den};
}

Scalar Field::inv(const Scalar& a) const {
  if (a.num == 0) throw Error("division by zero");
  if (kind_ == Kind::Prime) return {mod_pow(a.num, p_ - 2, p_), 1};
  return reduce_fraction(a.den, a.num);
}

std::string Field::to_string(const Scalar& a) const {
  if (a.den == 1) return std::to_string(a.num);
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

}  // namespace cotor
