#include "homext/field.hpp"

#include <algorithm>

namespace homext {

namespace {

bool probably_prime(std::uint64_t p) {
  mpz_class z(static_cast<unsigned long>(p));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) != 0;
}

}  // namespace

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.kind == FieldKind::Prime) {
    if (spec_.p < 2 || !probably_prime(spec_.p))
      throw Error("field: p = " + std::to_string(spec_.p) + " is not prime");
  }
}

Scalar Field::reduce(mpq_class v) const {
  if (spec_.kind == FieldKind::Rational) return Scalar(std::move(v));
  mpz_class p(static_cast<unsigned long>(spec_.p));
  mpz_class den = v.get_den();
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  if (den != 1) {
    mpz_class dinv;
    mpz_class dmod = den % p;
    if (dmod < 0) dmod += p;
    if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error("scalar not in F_" + std::to_string(spec_.p) +
                  ": denominator divisible by p");
    num = (num * dinv) % p;
  }
  return Scalar(mpq_class(num));
}

Scalar Field::from_int(long n) const { return reduce(mpq_class(n)); }

Scalar Field::from_fraction(long num, long den) const {
  if (den == 0) throw Error("zero denominator");
  return reduce(mpq_class(num, den));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  return reduce(a.raw() + b.raw());
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  return reduce(a.raw() - b.raw());
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  return reduce(a.raw() * b.raw());
}

Scalar Field::neg(const Scalar& a) const { return reduce(-a.raw()); }

Scalar Field::inv(const Scalar& a) const {
  if (a.is_zero()) throw Error("division by zero");
  if (spec_.kind == FieldKind::Rational)
    return Scalar(mpq_class(1) / a.raw());
  mpz_class p(static_cast<unsigned long>(spec_.p));
  mpz_class v = a.raw().get_num();
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error("division by zero in F_" + std::to_string(spec_.p));
  return Scalar(mpq_class(r));
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  return mul(a, inv(b));
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  // strip spaces
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  auto mod_pos = s.find("mod");
  if (mod_pos != std::string::npos) {
    if (spec_.kind != FieldKind::Prime)
      throw Error("scalar '" + std::string(text) + "': 'mod' outside a prime field");
    std::string mod_part = s.substr(mod_pos + 3);
    if (mod_part != std::to_string(spec_.p))
      throw Error("scalar '" + std::string(text) + "': modulus mismatch, field is F_" +
                  std::to_string(spec_.p));
    s = s.substr(0, mod_pos);
  }
  if (s.empty()) throw Error("empty scalar");
  try {
    mpq_class v(s, 10);
    v.canonicalize();
    if (v.get_den() == 0) throw Error("zero denominator");
    return reduce(v);
  } catch (const std::invalid_argument&) {
    throw Error("unparsable scalar '" + std::string(text) + "'");
  }
}

std::string Field::format(const Scalar& a) const {
  return a.raw().get_str();
}

}  // namespace homext
