#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "homext/matrix.hpp"

using namespace homext;

namespace {

const Field Q{FieldSpec::rational()};

Mat make(const Field& f, std::size_t rows, std::size_t cols,
         std::initializer_list<long> entries) {
  Mat m(f, rows, cols);
  std::size_t i = 0;
  for (long e : entries) m.data[i++] = f.from_int(e);
  return m;
}

Mat random_int_matrix(const Field& f, std::mt19937_64& rng, std::size_t rows,
                      std::size_t cols, long lo, long hi) {
  Mat m(f, rows, cols);
  for (Scalar& s : m.data)
    s = f.from_int(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)));
  return m;
}

}  // namespace

TEST_CASE("scalar canonical form") {
  CHECK(Q.from_fraction(2, 4) == Q.from_fraction(1, 2));
  CHECK(Q.from_fraction(1, -2) == Q.from_fraction(-1, 2));
  CHECK(Q.format(Q.from_fraction(-7, 2)) == "-7/2");
  CHECK(Q.parse("-7/2") == Q.from_fraction(-7, 2));
  CHECK(Q.parse("3") == Q.from_int(3));

  Field f7{FieldSpec::prime(7)};
  CHECK(f7.parse("4 mod 7") == f7.from_int(4));
  CHECK(f7.from_int(-3) == f7.from_int(4));
  CHECK(f7.parse("1/2") == f7.from_int(4));  // 2 * 4 = 8 = 1 mod 7
  CHECK_THROWS_AS(Field{FieldSpec::prime(6)}, Error);
  Field f2{FieldSpec::prime(2)};
  CHECK_THROWS_AS(f2.parse("1/2"), Error);
}

TEST_CASE("rref identity and zero") {
  Mat id = Mat::identity(Q, 2);
  RrefResult r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 2);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});

  Mat z(Q, 3, 4);
  RrefResult rz = rref(z);
  CHECK(rz.reduced == z);
  CHECK(rz.rank == 0);
  CHECK(rz.pivots.empty());
}

TEST_CASE("rref rank-one matrix") {
  // row2 = 2 * row1
  Mat m = make(Q, 2, 2, {1, 2, 2, 4});
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
  CHECK(r.reduced == make(Q, 2, 2, {1, 2, 0, 0}));
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_int_matrix(Q, rng, 1 + rng() % 6, 1 + rng() % 6, -5, 5);
    RrefResult r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
  }
}

TEST_CASE("nullspace basis canonical form") {
  CHECK(nullspace_basis(Mat::identity(Q, 3)).empty());

  auto full = nullspace_basis(Mat(Q, 2, 3));
  REQUIRE(full.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(full[i][j] == (i == j ? Q.one() : Q.zero()));
  }

  Mat row = make(Q, 1, 2, {1, 1});
  auto ns = nullspace_basis(row);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == Vec{Q.from_int(-1), Q.from_int(1)});
}

TEST_CASE("rank-nullity across random matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Mat m = random_int_matrix(Q, rng, 1 + rng() % 7, 1 + rng() % 7, -4, 4);
    auto ns = nullspace_basis(m);
    CHECK(rank_of(m) + ns.size() == m.cols);
    for (const Vec& v : ns) CHECK(is_zero_vec(mul(m, v)));
  }
}

TEST_CASE("solve") {
  Mat id = Mat::identity(Q, 3);
  Vec b{Q.from_int(3), Q.from_int(-1), Q.from_fraction(1, 2)};
  auto x = solve(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  // free variable zeroed
  Mat row = make(Q, 1, 2, {1, 1});
  auto y = solve(row, Vec{Q.one()});
  REQUIRE(y.has_value());
  CHECK(*y == Vec{Q.one(), Q.zero()});

  // inconsistent
  Mat col = make(Q, 2, 1, {1, 1});
  CHECK(!solve(col, Vec{Q.zero(), Q.one()}).has_value());

  CHECK_THROWS_AS(solve(row, Vec{Q.one(), Q.one()}), Error);
}

TEST_CASE("solve returns exact solutions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Mat m = random_int_matrix(Q, rng, 2 + rng() % 5, 2 + rng() % 5, -5, 5);
    Vec target(m.cols);
    for (Scalar& s : target) s = Q.from_int(static_cast<long>(rng() % 7) - 3);
    Vec b = mul(m, target);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(mul(m, *x) == b);  // bit-exact, no tolerance
  }
}

TEST_CASE("cohomology_dim") {
  // lone cohomology: zero maps around a 1-dim space
  Mat d_in(Q, 1, 0);
  Mat d_out(Q, 1, 1);
  CHECK(cohomology_dim(d_in, d_out) == 1);

  // exactness: d_in surjective onto ker d_out
  Mat inj = make(Q, 2, 1, {1, 0});  // image = first coordinate
  Mat proj = make(Q, 1, 2, {0, 1});  // kernel = first coordinate
  CHECK(cohomology_dim(inj, proj) == 0);

  // Hom complex of the period-one resolution: all differentials vanish
  Mat zero_in(Q, 1, 1);
  Mat zero_out(Q, 1, 1);
  CHECK(cohomology_dim(zero_in, zero_out) == 1);

  Mat not_complex_in = make(Q, 2, 1, {1, 0});
  Mat not_complex_out = make(Q, 1, 2, {1, 0});
  CHECK_THROWS_WITH_AS(cohomology_dim(not_complex_in, not_complex_out),
                       "not a complex", Error);
}

TEST_CASE("prime field agrees with rationals reduced mod p") {
  const std::uint64_t p = 1000003;
  Field fp{FieldSpec::prime(p)};
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    Mat mq(Q, rows, cols);
    Mat mp(fp, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
      long v = static_cast<long>(rng() % 19) - 9;
      mq.data[i] = Q.from_int(v);
      mp.data[i] = fp.from_int(v);
    }
    RrefResult rq = rref(mq);
    RrefResult rp = rref(mp);
    REQUIRE(rq.pivots == rp.pivots);  // no pivot degenerates mod this large p
    for (std::size_t i = 0; i < rows * cols; ++i) {
      const mpq_class& q = rq.reduced.data[i].raw();
      Scalar reduced = fp.parse(q.get_str());
      CHECK(reduced == rp.reduced.data[i]);
    }
  }
}

TEST_CASE("span tracker canonical rows and complement") {
  SpanTracker span(Q, 3);
  CHECK(span.add(Vec{Q.one(), Q.one(), Q.zero()}));
  CHECK(!span.add(Vec{Q.from_int(2), Q.from_int(2), Q.zero()}));
  CHECK(span.add(Vec{Q.zero(), Q.zero(), Q.from_int(5)}));
  CHECK(span.rank() == 2);
  CHECK(span.contains(Vec{Q.from_int(3), Q.from_int(3), Q.from_int(10)}));
  CHECK(!span.contains(Vec{Q.one(), Q.zero(), Q.zero()}));
  // e_0 is independent of {(1,1,0),(0,0,1)} and is scanned first
  auto comp = complement_indices(span);
  CHECK(comp == std::vector<std::size_t>{0});
}
