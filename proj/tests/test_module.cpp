#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homext/module.hpp"
#include "homext/resolution.hpp"

using namespace homext;

namespace {

const Field Q{FieldSpec::rational()};

AlgebraPtr make_kx2() {
  return std::make_shared<AlgebraPresentation>(build_truncated_polynomial(Q, {2}));
}
AlgebraPtr make_kx3() {
  return std::make_shared<AlgebraPresentation>(build_truncated_polynomial(Q, {3}));
}
AlgebraPtr make_q2() {
  return std::make_shared<AlgebraPresentation>(build_quantum_ci(Q, Scalar(2)));
}

Vec elem(const AlgebraPtr& a, std::initializer_list<std::size_t> idxs) {
  Vec v(a->dim, a->field.zero());
  for (std::size_t i : idxs) v[i] = a->field.one();
  return v;
}

ModuleRep schulz_module(const AlgebraPtr& q2) {
  return cyclic_quotient(q2, {elem(q2, {1, 2})}, "M");
}

ModuleRep simple_module(const AlgebraPtr& a) {
  std::vector<Vec> gens;
  for (std::size_t r : a->radical_indices) {
    Vec e(a->dim, a->field.zero());
    e[r] = a->field.one();
    gens.push_back(e);
  }
  return cyclic_quotient(a, gens, "k");
}

Mat inverse_of(const Mat& p) { return solve_full_rank(p, Mat::identity(p.field, p.rows)); }

ModuleRep conjugate(const ModuleRep& m, const Mat& p) {
  ModuleRep out = m;
  Mat pinv = inverse_of(p);
  for (Mat& a : out.action) a = mul(p, mul(a, pinv));
  return out;
}

Mat random_invertible(const Field& f, std::mt19937_64& rng, std::size_t n) {
  while (true) {
    Mat p(f, n, n);
    for (Scalar& s : p.data) s = f.from_int(static_cast<long>(rng() % 7) - 3);
    if (is_invertible(p)) return p;
  }
}

/// Independent oracle: the intertwining system assembled target-major
/// instead of source-major, rank computed directly.
std::size_t hom_dimension_oracle(const ModuleRep& m, const ModuleRep& n) {
  const Field& f = m.algebra->field;
  const std::size_t dm = m.dim, dn = n.dim;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.algebra->dim; ++i)
    for (std::size_t c = 0; c < dm; ++c)
      for (std::size_t r = 0; r < dn; ++r) {
        Vec row(dn * dm, f.zero());
        for (std::size_t s = 0; s < dm; ++s)
          row[r * dm + s] = f.add(row[r * dm + s], m.action[i].at(s, c));
        for (std::size_t s = 0; s < dn; ++s)
          row[s * dm + c] = f.sub(row[s * dm + c], n.action[i].at(r, s));
        rows.push_back(std::move(row));
      }
  Mat sys = from_columns(f, dn * dm, rows);  // transposed system; rank agrees
  return dn * dm - rank_of(sys);
}

}  // namespace

TEST_CASE("free modules") {
  AlgebraPtr kx2 = make_kx2();
  ModuleRep zero = free_module(kx2, 0);
  CHECK(zero.dim == 0);
  CHECK(validate_module(zero).ok);

  ModuleRep reg = free_module(kx2, 1);
  CHECK(reg.dim == 2);
  CHECK(validate_module(reg).ok);
  // x acts as the nilpotent Jordan block on {1, x}
  Mat expected(Q, 2, 2);
  expected.at(1, 0) = Q.one();
  CHECK(reg.action[1] == expected);

  AlgebraPtr q2 = make_q2();
  ModuleRep f2 = free_module(q2, 2);
  CHECK(f2.dim == 8);
  CHECK(validate_module(f2).ok);
  CHECK(mul(f2.action[1], f2.action[1]).is_zero());  // x^2 = 0
}

TEST_CASE("direct sums") {
  AlgebraPtr kx2 = make_kx2();
  ModuleRep k = simple_module(kx2);
  ModuleRep zero = free_module(kx2, 0);

  ModuleRep k_plus_zero = direct_sum(k, zero);
  CHECK(k_plus_zero.dim == k.dim);
  CHECK(k_plus_zero.action == k.action);

  ModuleRep kk = direct_sum(k, k);
  CHECK(kk.dim == 2);
  CHECK(kk.action[1].is_zero());
  CHECK(validate_module(kk).ok);

  AlgebraPtr q2 = make_q2();
  ModuleRep sum = direct_sum(schulz_module(q2), free_module(q2, 1));
  CHECK(sum.dim == 6);
  CHECK(validate_module(sum).ok);

  CHECK_THROWS_AS(direct_sum(k, free_module(q2, 1)), Error);
}

TEST_CASE("cyclic quotients") {
  AlgebraPtr q2 = make_q2();
  ModuleRep whole = cyclic_quotient(q2, {});
  CHECK(whole.dim == 4);
  CHECK(whole.action == free_module(q2, 1).action);

  // zero generator changes nothing
  ModuleRep by_zero = cyclic_quotient(q2, {Vec(4, Q.zero())});
  CHECK(by_zero.action == whole.action);

  ModuleRep m = schulz_module(q2);
  CHECK(m.dim == 2);
  CHECK(validate_module(m).ok);
  // basis {1, x}: x.1 = x, y.1 = -x, x.x = y.x = 0, xy acts as zero
  Mat ax(Q, 2, 2), ay(Q, 2, 2);
  ax.at(1, 0) = Q.one();
  ay.at(1, 0) = Q.from_int(-1);
  CHECK(m.action[1] == ax);
  CHECK(m.action[2] == ay);
  CHECK(m.action[3].is_zero());

  AlgebraPtr kx3 = make_kx3();
  ModuleRep n = cyclic_quotient(kx3, {elem(kx3, {2})});
  CHECK(n.dim == 2);
  CHECK(validate_module(n).ok);
  CHECK(n.action[1].at(1, 0) == Q.one());     // x.1 = x
  CHECK(n.action[1].at(0, 1) == Q.zero());
  CHECK(mul(n.action[1], n.action[1]).is_zero());

  // generators spanning the algebra give the zero module
  ModuleRep z = cyclic_quotient(q2, {elem(q2, {0})});
  CHECK(z.dim == 0);
  CHECK(validate_module(z).ok);
}

TEST_CASE("the explicit Schulz matrices agree with the quotient construction") {
  AlgebraPtr q2 = make_q2();
  ModuleRep explicit_m;
  explicit_m.name = "M_explicit";
  explicit_m.algebra = q2;
  explicit_m.dim = 2;
  explicit_m.action.assign(4, Mat(Q, 2, 2));
  explicit_m.action[0] = Mat::identity(Q, 2);
  explicit_m.action[1].at(1, 0) = Q.one();
  explicit_m.action[2].at(1, 0) = Q.from_int(-1);
  CHECK(validate_module(explicit_m).ok);
  CHECK(explicit_m.action == schulz_module(q2).action);
}

TEST_CASE("a corrupted action is caught with the offending pair") {
  AlgebraPtr q2 = make_q2();
  ModuleRep m = schulz_module(q2);
  m.action[3].at(1, 0) = Q.one();  // xy must act as zero on this module
  ValidationReport rep = validate_module(m);
  CHECK(!rep.ok);
  bool found = false;
  for (const Violation& v : rep.violations)
    if (v.axiom == "structure constants respected" && v.witness == "(x, y)")
      found = true;
  CHECK(found);
}

TEST_CASE("hom bases") {
  AlgebraPtr kx2 = make_kx2();
  ModuleRep k = simple_module(kx2);
  ModuleRep reg = free_module(kx2, 1);

  // maps out of a free module are determined by the image of the unit
  CHECK(hom_basis(reg, k).basis.size() == k.dim);
  CHECK(hom_basis(reg, reg).basis.size() == reg.dim);
  CHECK(hom_basis(k, k).basis.size() == 1);

  AlgebraPtr q2 = make_q2();
  ModuleRep m = schulz_module(q2);
  HomBasis end_m = hom_basis(m, m);
  CHECK(end_m.basis.size() == 2);  // scalars + the socle map 1 -> x
  CHECK(end_m.basis.size() == hom_dimension_oracle(m, m));

  for (const Mat& phi : end_m.basis)
    for (std::size_t i = 0; i < 4; ++i)
      CHECK(mul(phi, m.action[i]) == mul(m.action[i], phi));

  // basis elements are linearly independent
  std::vector<Vec> flat;
  for (const Mat& phi : end_m.basis) flat.push_back(phi.data);
  CHECK(rank_of(from_columns(Q, 4, flat)) == end_m.basis.size());
}

TEST_CASE("hom dimension is invariant under base change") {
  AlgebraPtr kx3 = make_kx3();
  ModuleRep m = cyclic_quotient(kx3, {elem(kx3, {2})});
  ModuleRep n = simple_module(kx3);
  std::size_t expected = hom_basis(m, n).basis.size();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    ModuleRep mc = conjugate(m, random_invertible(Q, rng, m.dim));
    ModuleRep nc = conjugate(n, random_invertible(Q, rng, n.dim));
    CHECK(validate_module(mc).ok);
    CHECK(hom_basis(mc, nc).basis.size() == expected);
  }
}

TEST_CASE("duality") {
  AlgebraPtr q2 = make_q2();
  ModuleRep m = schulz_module(q2);

  ModuleRep dd = dual(dual(m));
  CHECK(dd.name == m.name);
  CHECK(dd.same_presentation(m));

  ModuleRep dm = dual(m);
  CHECK(validate_module(dm).ok);
  CHECK(hom_basis(dm, dm).basis.size() == hom_basis(m, m).basis.size());

  // contravariance on hom dimensions
  ModuleRep k = simple_module(q2);
  CHECK(hom_basis(m, k).basis.size() == hom_basis(dual(k), dual(m)).basis.size());
  CHECK(hom_basis(k, m).basis.size() == hom_basis(dual(m), dual(k)).basis.size());

  // the dual of the regular module over the self-injective k[x]/(x^2) is free
  AlgebraPtr kx2 = make_kx2();
  ModuleRep dreg = dual(free_module(kx2, 1));
  AlgebraPtr op = std::make_shared<AlgebraPresentation>(opposite(*kx2));
  auto cert = is_isomorphic(dreg, free_module(op, 1), 0, 16);
  REQUIRE(cert.has_value());
  CHECK(verify_iso_certificate(dreg, free_module(op, 1), *cert));
}

TEST_CASE("randomized isomorphism testing") {
  AlgebraPtr kx2 = make_kx2();
  ModuleRep k = simple_module(kx2);
  ModuleRep reg = free_module(kx2, 1);

  // literal equality short-circuits to the identity
  auto same = is_isomorphic(k, k, 9, 4);
  REQUIRE(same.has_value());
  CHECK(same->map == Mat::identity(Q, 1));

  CHECK(!is_isomorphic(k, reg, 0, 8).has_value());  // dims 1 vs 2

  // first syzygy of k is k again
  ModuleRep omega_k = syzygy(k, 1);
  CHECK(omega_k.dim == 1);
  auto cert = is_isomorphic(omega_k, k, 0, 16);
  REQUIRE(cert.has_value());
  CHECK(verify_iso_certificate(omega_k, k, *cert));

  // self-isomorphism through the hom-basis search, not the shortcut
  AlgebraPtr kx3 = make_kx3();
  ModuleRep n = cyclic_quotient(kx3, {elem(kx3, {2})});
  std::mt19937_64 rng(17);
  ModuleRep nc = conjugate(n, random_invertible(Q, rng, n.dim));
  auto self_cert = is_isomorphic(n, nc, 1, 32);
  REQUIRE(self_cert.has_value());
  CHECK(verify_iso_certificate(n, nc, *self_cert));

  // zero modules are isomorphic
  CHECK(is_isomorphic(free_module(kx3, 0), cyclic_quotient(kx3, {elem(kx3, {0})}), 0, 4)
            .has_value());

  // non-isomorphic equal-dimension modules: k + k vs A over k[x]/(x^2)
  CHECK(!is_isomorphic(direct_sum(k, k), reg, 0, 24).has_value());
}

TEST_CASE("every constructed module validates") {
  AlgebraPtr q2 = make_q2();
  AlgebraPtr kx3 = make_kx3();
  for (const ModuleRep& m :
       {free_module(q2, 1), free_module(q2, 3), schulz_module(q2), simple_module(q2),
        dual(schulz_module(q2)), direct_sum(schulz_module(q2), free_module(q2, 1)),
        cyclic_quotient(kx3, {elem(kx3, {1})}), syzygy(schulz_module(q2), 2)})
    CHECK(validate_module(m).ok);
}
