#ifndef HOMEXT_FIELD_HPP
#define HOMEXT_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "homext/error.hpp"

namespace homext {

enum class FieldKind { Rational, Prime };

struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  std::uint64_t p = 0;  // set iff kind == Prime

  static FieldSpec rational() { return {FieldKind::Rational, 0}; }
  static FieldSpec prime(std::uint64_t p) { return {FieldKind::Prime, p}; }

  bool operator==(const FieldSpec&) const = default;
};

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator; prime-field values are residues in [0, p).
/// Canonical form makes equality syntactic.
class Scalar {
 public:
  Scalar() : v_(0) {}
  explicit Scalar(long n) : v_(n) {}
  explicit Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

 private:
  mpq_class v_;
};

/// Arithmetic context for Scalar values of one FieldSpec. All results are
/// canonical; prime-field operations reduce mod p on every step.
class Field {
 public:
  Field() : spec_(FieldSpec::rational()) {}
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long n) const;
  Scalar from_fraction(long num, long den) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws Error on zero
  Scalar div(const Scalar& a, const Scalar& b) const;

  /// Accepts "3", "-7/2", and for prime fields also "4 mod 7".
  /// Fractions over a prime field are resolved by modular inversion;
  /// a denominator divisible by p is an error.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& a) const;

  bool operator==(const Field& o) const { return spec_ == o.spec_; }

 private:
  Scalar reduce(mpq_class v) const;

  FieldSpec spec_;
};

}  // namespace homext

#endif
