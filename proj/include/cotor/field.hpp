#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cotor {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArithmeticOverflow : Error {
  using Error::Error;
};

/// An exact scalar: a residue in [0, p) when the field is prime,
/// or a reduced fraction num/den (den > 0) when the field is rational.
struct Scalar {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

/// F_p for a prime p, or the rationals. All arithmetic is exact.
class Field {
 public:
  enum class Kind { Prime, Rational };

  static Field prime(long long p);
  static Field rationals();

  Kind kind() const { return kind_; }
  long long p() const { return p_; }
  bool is_finite() const { return kind_ == Kind::Prime; }
  /// Number of elements; only valid for finite fields.
  long long order() const;

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long n) const;
  /// The n-th field element, 0 <= n < order(). Finite fields only.
  Scalar element(long long n) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  bool is_zero(const Scalar& a) const { return a.num == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

  std::string to_string(const Scalar& a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Kind kind, long long p) : kind_(kind), p_(p) {}

  Kind kind_;
  long long p_;
};

}  // namespace cotor
