#include "homext/resolution.hpp"

namespace homext {

namespace {

/// Cover matrix sending generator slot j to target vector reps[j]:
/// column (j, t) = e_t * reps[j].
Mat cover_matrix(const ModuleRep& target, const std::vector<Vec>& reps) {
  const Field& f = target.algebra->field;
  const std::size_t da = target.algebra->dim;
  Mat cover(f, target.dim, reps.size() * da);
  for (std::size_t j = 0; j < reps.size(); ++j)
    for (std::size_t t = 0; t < da; ++t)
      cover.set_col(j * da + t, mul(target.action[t], reps[j]));
  return cover;
}

/// Representatives of a basis of top(m) = m / rad m, canonical via the
/// complement-index scan.
std::vector<Vec> top_representatives(const ModuleRep& m) {
  const Field& f = m.algebra->field;
  SpanTracker rad_m(f, m.dim);
  for (std::size_t r : m.algebra->radical_indices)
    for (std::size_t s = 0; s < m.dim; ++s) rad_m.add(m.action[r].col(s));
  std::vector<Vec> reps;
  for (std::size_t j : complement_indices(rad_m)) {
    Vec e(m.dim, f.zero());
    e[j] = f.one();
    reps.push_back(std::move(e));
  }
  return reps;
}

ModuleRep kernel_submodule(const ModuleRep& ambient, const Mat& kernel_cols,
                           std::string name) {
  const Field& f = ambient.algebra->field;
  ModuleRep syz;
  syz.name = std::move(name);
  syz.algebra = ambient.algebra;
  syz.dim = kernel_cols.cols;
  for (std::size_t i = 0; i < ambient.algebra->dim; ++i) {
    Mat moved = mul(ambient.action[i], kernel_cols);
    syz.action.push_back(syz.dim == 0 ? Mat(f, 0, 0)
                                      : solve_full_rank(kernel_cols, moved));
  }
  return syz;
}

}  // namespace

std::pair<ModuleRep, Mat> minimal_cover(const ModuleRep& m) {
  if (!m.algebra) throw Error("minimal_cover: algebra reference unresolved");
  if (!locality(*m.algebra).is_local)
    throw Error("minimal covers certified only for local algebras");
  std::vector<Vec> reps = top_representatives(m);
  ModuleRep free = free_module(m.algebra, reps.size());
  Mat cover = cover_matrix(m, reps);
  if (rank_of(cover) != m.dim)
    throw Error("minimal_cover: cover not surjective (invalid input?)");
  return {std::move(free), std::move(cover)};
}

Resolution::Resolution(ModuleRep m, ResolutionOptions opts)
    : module_(std::move(m)), opts_(std::move(opts)) {
  if (!module_.algebra) throw Error("Resolution: algebra reference unresolved");
  minimal_ = opts_.minimal && opts_.padding.empty();
  if (opts_.minimal && !locality(*module_.algebra).is_local)
    throw Error("minimal covers certified only for local algebras");
  zero_module_.name = "0";
  zero_module_.algebra = module_.algebra;
  zero_module_.dim = 0;
  for (std::size_t i = 0; i < module_.algebra->dim; ++i)
    zero_module_.action.push_back(Mat(module_.algebra->field, 0, 0));
}

void Resolution::compute_next_step() {
  const std::size_t n = steps_.size();
  const ModuleRep& target = n == 0 ? module_ : steps_.back().syzygy;
  const Field& f = module_.algebra->field;

  std::vector<Vec> reps;
  if (opts_.minimal) {
    reps = top_representatives(target);
  } else {
    for (std::size_t j = 0; j < target.dim; ++j) {
      Vec e(target.dim, f.zero());
      e[j] = f.one();
      reps.push_back(std::move(e));
    }
  }
  auto pad = opts_.padding.find(n);
  if (pad != opts_.padding.end())
    for (std::size_t i = 0; i < pad->second; ++i)
      reps.push_back(Vec(target.dim, f.zero()));

  ResolutionStep step;
  step.free_rank = reps.size();
  step.cover = cover_matrix(target, reps);
  if (rank_of(step.cover) != target.dim)
    throw Error("resolution: cover not surjective (invalid input?)");
  step.kernel_basis = from_columns(f, step.cover.cols, nullspace_basis(step.cover));
  ModuleRep ambient = free_module(module_.algebra, step.free_rank);
  step.syzygy = kernel_submodule(
      ambient, step.kernel_basis,
      "O^" + std::to_string(n + 1) + "(" + module_.name + ")");
  if (step.syzygy.dim == 0 && !terminated_at_) terminated_at_ = n;
  steps_.push_back(std::move(step));
}

void Resolution::extend(std::size_t upto) {
  while (steps_.size() <= upto && !terminated_at_) compute_next_step();
}

const ModuleRep& Resolution::syzygy_module(std::size_t n) const {
  if (n == 0) return module_;
  if (n - 1 < steps_.size()) return steps_[n - 1].syzygy;
  if (terminated_at_) return zero_module_;
  throw Error("syzygy_module: resolution not extended through step " +
              std::to_string(n - 1));
}

std::vector<std::size_t> Resolution::betti() const {
  std::vector<std::size_t> b;
  for (const ResolutionStep& s : steps_) b.push_back(s.free_rank);
  return b;
}

Mat Resolution::free_differential(std::size_t i) const {
  if (i == 0 || i >= steps_.size())
    throw Error("free_differential: index out of computed range");
  return mul(steps_[i - 1].kernel_basis, steps_[i].cover);
}

std::vector<std::vector<Vec>> Resolution::differential_algebra_entries(
    std::size_t i) const {
  Mat d = free_differential(i);
  const std::size_t da = module_.algebra->dim;
  const std::size_t b_prev = steps_[i - 1].free_rank;
  const std::size_t b_cur = steps_[i].free_rank;
  std::vector<std::vector<Vec>> grid(b_prev, std::vector<Vec>(b_cur));
  for (std::size_t j = 0; j < b_cur; ++j) {
    Vec col = d.col(j * da + module_.algebra->unit_index);
    for (std::size_t k = 0; k < b_prev; ++k)
      grid[k][j] = Vec(col.begin() + static_cast<std::ptrdiff_t>(k * da),
                       col.begin() + static_cast<std::ptrdiff_t>((k + 1) * da));
  }
  return grid;
}

std::optional<std::size_t> detect_termination(const Resolution& r) {
  return r.terminated_at();
}

ModuleRep syzygy(const ModuleRep& m, std::size_t n) {
  if (n == 0) return m;
  Resolution r(m);
  r.extend(n - 1);
  return r.syzygy_module(n);
}

std::optional<PeriodicityCertificate> detect_periodicity(Resolution& r,
                                                         std::size_t window,
                                                         std::uint64_t seed) {
  if (!r.minimal()) return std::nullopt;
  r.extend(window);
  if (r.terminated_at()) return std::nullopt;
  constexpr unsigned kTrials = 32;
  std::vector<std::size_t> betti = r.betti();
  for (std::size_t q = 1; q <= window; ++q) {
    for (std::size_t s = 0; s < q; ++s) {
      const ModuleRep& a = r.syzygy_module(s);
      const ModuleRep& b = r.syzygy_module(q);
      if (a.dim == 0 || a.dim != b.dim) continue;
      if (betti[s] != betti[q]) continue;
      auto iso = is_isomorphic(a, b, seed, kTrials);
      if (iso) return PeriodicityCertificate{s, q - s, std::move(*iso)};
    }
  }
  return std::nullopt;
}

}  // namespace homext
