#include "homext/matrix.hpp"

#include <algorithm>

namespace homext {

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows);
  for (std::size_t r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

void Mat::set_col(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows; ++r) at(r, c) = v[r];
}

bool Mat::is_zero() const {
  return std::all_of(data.begin(), data.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

RrefResult rref(const Mat& m) {
  RrefResult res;
  res.reduced = m;
  Mat& a = res.reduced;
  const Field& f = m.field;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < a.cols && pivot_row < a.rows; ++c) {
    std::size_t r = pivot_row;
    while (r < a.rows && a.at(r, c).is_zero()) ++r;
    if (r == a.rows) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < a.cols; ++j)
        std::swap(a.at(r, j), a.at(pivot_row, j));
    Scalar piv_inv = f.inv(a.at(pivot_row, c));
    for (std::size_t j = c; j < a.cols; ++j)
      a.at(pivot_row, j) = f.mul(piv_inv, a.at(pivot_row, j));
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == pivot_row || a.at(i, c).is_zero()) continue;
      Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols; ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(pivot_row, j)));
    }
    res.pivots.push_back(c);
    ++pivot_row;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t rank_of(const Mat& m) { return rref(m).rank; }

std::vector<Vec> nullspace_basis(const Mat& m) {
  RrefResult r = rref(m);
  const Field& f = m.field;
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m.cols, f.zero());
    v[free_col] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i)
      v[r.pivots[i]] = f.neg(r.reduced.at(i, free_col));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows)
    throw Error("solve: rhs length " + std::to_string(b.size()) +
                " does not match " + std::to_string(m.rows) + " rows");
  Mat aug = hstack(m, from_columns(m.field, m.rows, {b}));
  RrefResult r = rref(aug);
  const Field& f = m.field;
  if (!r.pivots.empty() && r.pivots.back() == m.cols) return std::nullopt;
  Vec x(m.cols, f.zero());
  for (std::size_t i = 0; i < r.rank; ++i)
    x[r.pivots[i]] = r.reduced.at(i, m.cols);
  return x;
}

std::size_t cohomology_dim(const Mat& d_in, const Mat& d_out) {
  if (d_in.rows != d_out.cols)
    throw Error("cohomology_dim: cochain position dimension mismatch");
  if (!mul(d_out, d_in).is_zero()) throw Error("not a complex");
  std::size_t ker = d_out.cols - rank_of(d_out);
  std::size_t im = rank_of(d_in);
  return ker - im;  // >= 0 once the composite vanishes
}

Mat mul(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw Error("mul: inner dimension mismatch");
  const Field& f = a.field;
  Mat c(f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        c.at(i, j) = f.add(c.at(i, j), f.mul(aik, bkj));
      }
    }
  return c;
}

Vec mul(const Mat& a, const Vec& v) {
  if (a.cols != v.size()) throw Error("mul: vector length mismatch");
  const Field& f = a.field;
  Vec out(a.rows, f.zero());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (a.at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] = f.add(out[i], f.mul(a.at(i, j), v[j]));
    }
  return out;
}

Mat transpose(const Mat& m) {
  Mat t(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) throw Error("hstack: row mismatch");
  Mat c(a.field, a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
  }
  return c;
}

Mat from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("from_columns: length mismatch");
    m.set_col(c, cols[c]);
  }
  return m;
}

Vec add(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vec add: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec scale(const Field& f, const Scalar& c, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(c, v[i]);
  return out;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool is_invertible(const Mat& m) {
  return m.rows == m.cols && rank_of(m) == m.rows;
}

Mat solve_full_rank(const Mat& K, const Mat& R) {
  if (K.rows != R.rows) throw Error("solve_full_rank: row mismatch");
  RrefResult r = rref(hstack(K, R));
  if (r.rank != K.cols)
    throw Error("solve_full_rank: matrix does not have full column rank or "
                "system inconsistent");
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.pivots[i] != i)
      throw Error("solve_full_rank: system inconsistent");
  Mat x(K.field, K.cols, R.cols);
  for (std::size_t i = 0; i < K.cols; ++i)
    for (std::size_t j = 0; j < R.cols; ++j)
      x.at(i, j) = r.reduced.at(i, K.cols + j);
  return x;
}

void SpanTracker::reduce_in_place(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = v[pivot_cols_[i]];  // by value: the loop below overwrites v
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      v[j] = field_.sub(v[j], field_.mul(c, rows_[i][j]));
  }
}

bool SpanTracker::add(Vec v) {
  if (v.size() != ambient_) throw Error("SpanTracker: length mismatch");
  reduce_in_place(v);
  std::size_t pivot = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  if (pivot == ambient_) return false;
  Scalar inv = field_.inv(v[pivot]);
  for (std::size_t j = 0; j < ambient_; ++j) v[j] = field_.mul(inv, v[j]);
  // back-eliminate to keep the basis fully reduced
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar& c = rows_[i][pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, v[j]));
  }
  auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
  std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
  pivot_cols_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  return true;
}

bool SpanTracker::contains(Vec v) const {
  if (v.size() != ambient_) throw Error("SpanTracker: length mismatch");
  reduce_in_place(v);
  return is_zero_vec(v);
}

std::vector<std::size_t> complement_indices(const SpanTracker& span) {
  SpanTracker work = span;
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < span.ambient_dim(); ++j) {
    Vec e(span.ambient_dim());
    e[j] = Scalar(1);
    if (work.add(e)) out.push_back(j);
  }
  return out;
}

}  // namespace homext
