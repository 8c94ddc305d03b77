#ifndef HOMEXT_MATRIX_HPP
#define HOMEXT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "homext/field.hpp"

namespace homext {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over an exact field. Empty shapes (0 rows or
/// 0 columns) are legal everywhere.
struct Mat {
  Field field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Scalar> data;

  Mat() = default;
  Mat(Field f, std::size_t r, std::size_t c)
      : field(std::move(f)), rows(r), cols(c), data(r * c) {}

  static Mat identity(const Field& f, std::size_t n);

  Scalar& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  Vec col(std::size_t c) const;
  void set_col(std::size_t c, const Vec& v);

  bool is_zero() const;
  bool operator==(const Mat& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && data == o.data;
  }
};

struct RrefResult {
  Mat reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Unique reduced row-echelon form (Gauss-Jordan, exact arithmetic).
RrefResult rref(const Mat& m);

std::size_t rank_of(const Mat& m);

/// Canonical kernel basis: one vector per free column, that free variable
/// set to 1, pivot coordinates read off the rref rows, other free
/// variables 0. Count always equals cols - rank.
std::vector<Vec> nullspace_basis(const Mat& m);

/// Particular solution of m*x = b with all free variables zero, or
/// nullopt when inconsistent. Length mismatch is a contract violation.
std::optional<Vec> solve(const Mat& m, const Vec& b);

/// dim ker(d_out) - rank(d_in) at a cochain position. Throws "not a
/// complex" when d_out * d_in != 0.
std::size_t cohomology_dim(const Mat& d_in, const Mat& d_out);

Mat mul(const Mat& a, const Mat& b);
Vec mul(const Mat& a, const Vec& v);
Mat transpose(const Mat& m);
Mat hstack(const Mat& a, const Mat& b);
Mat from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);

Vec add(const Field& f, const Vec& a, const Vec& b);
Vec scale(const Field& f, const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

bool is_invertible(const Mat& m);

/// Solves K * X = R column by column; K must have full column rank and
/// every column of R must be consistent.
Mat solve_full_rank(const Mat& K, const Mat& R);

/// Incrementally maintained reduced echelon basis of a span of vectors.
/// The row set is the canonical rref basis of the subspace, so two equal
/// subspaces always produce identical rows.
class SpanTracker {
 public:
  SpanTracker(Field f, std::size_t ambient_dim)
      : field_(std::move(f)), ambient_(ambient_dim) {}

  /// Returns true when the vector enlarged the span.
  bool add(Vec v);
  bool contains(Vec v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  void reduce_in_place(Vec& v) const;

  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;              // sorted by pivot column
  std::vector<std::size_t> pivot_cols_;
};

/// Indices j such that the standard basis vectors e_j complete the given
/// span to the full ambient space; scanned in index order, so the choice
/// is canonical.
std::vector<std::size_t> complement_indices(const SpanTracker& span);

}  // namespace homext

#endif
