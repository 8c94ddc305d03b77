#include "homext/ext.hpp"

namespace homext {

namespace {

std::optional<std::size_t> last_nonzero_index(const std::vector<std::size_t>& dims) {
  std::optional<std::size_t> out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] != 0) out = i;
  return out;
}

}  // namespace

ExtProfile ext_dims(Resolution& r, const ModuleRep& n, std::size_t cutoff) {
  if (!(*r.module().algebra == *n.algebra))
    throw Error("ext_dims: modules live over different algebras");
  const Field& f = n.algebra->field;
  const std::size_t dn = n.dim;

  r.extend(cutoff + 1);
  auto rank_at = [&](std::size_t i) -> std::size_t {
    return i < r.steps_computed() ? r.step(i).free_rank : 0;
  };

  // Hom(A^b, N) = N^b via images of the generators; the cochain map
  // induced by d_{i+1} applies the N-action of its algebra entries
  // blockwise.
  auto delta = [&](std::size_t i) -> Mat {
    const std::size_t rows = rank_at(i + 1) * dn;
    const std::size_t cols = rank_at(i) * dn;
    Mat d(f, rows, cols);
    if (rows == 0 || cols == 0) return d;
    auto grid = r.differential_algebra_entries(i + 1);
    for (std::size_t j = 0; j < rank_at(i + 1); ++j)
      for (std::size_t k = 0; k < rank_at(i); ++k) {
        Mat block = n.act(grid[k][j]);
        for (std::size_t rr = 0; rr < dn; ++rr)
          for (std::size_t cc = 0; cc < dn; ++cc)
            d.at(j * dn + rr, k * dn + cc) = block.at(rr, cc);
      }
    return d;
  };

  ExtProfile profile;
  profile.source_name = r.module().name;
  profile.target_name = n.name;
  Mat d_in(f, rank_at(0) * dn, 0);
  for (std::size_t i = 0; i <= cutoff; ++i) {
    Mat d_out = delta(i);
    profile.dims.push_back(cohomology_dim(d_in, d_out));
    d_in = std::move(d_out);
  }
  return profile;
}

ExtProfile ext_dims(const ModuleRep& m, const ModuleRep& n, std::size_t cutoff) {
  ResolutionOptions opts;
  opts.minimal = locality(*m.algebra).is_local;
  Resolution r(m, opts);
  return ext_dims(r, n, cutoff);
}

namespace {

ExtDegreeReport degree_report_from(const ModuleRep& m, Resolution& r,
                                   const ModuleRep& against, std::size_t cutoff,
                                   std::uint64_t seed) {
  ExtDegreeReport rep;
  rep.module_name = m.name;
  rep.cutoff = cutoff;

  if (m.dim == 0) {
    rep.zero_module = true;
    rep.exact = true;
    rep.value = DegreeValue::finite(0);
    rep.certificate = {CertKind::FinitePd, 0, 0, 0};
    rep.profile.source_name = m.name;
    rep.profile.target_name = against.name;
    rep.profile.dims.assign(cutoff + 1, 0);
    return rep;
  }

  // a termination at step cutoff+1 still forces a look at degree pd itself
  // (the top degree can be nonzero there), so the profile runs through pd
  std::size_t profile_cutoff = cutoff;
  if (r.minimal()) {
    r.extend(cutoff + 1);
    if (r.terminated_at()) profile_cutoff = std::max(cutoff, *r.terminated_at());
  }
  rep.profile = ext_dims(r, against, profile_cutoff);
  rep.last_nonzero = last_nonzero_index(rep.profile.dims);
  const std::size_t last = rep.last_nonzero.value_or(0);

  if (r.minimal() && r.terminated_at()) {
    rep.exact = true;
    rep.value = DegreeValue::finite(last);
    rep.certificate = {CertKind::FinitePd, *r.terminated_at(), 0, 0};
    return rep;
  }
  if (r.minimal()) {
    if (auto cert = detect_periodicity(r, cutoff, seed)) {
      const std::size_t s = cert->start, p = cert->period;
      bool window_nonzero = false;
      for (std::size_t i = s + 1; i <= s + p; ++i)
        if (rep.profile.dims[i] != 0) window_nonzero = true;
      rep.exact = true;
      rep.value = window_nonzero ? DegreeValue::infinite() : DegreeValue::finite(last);
      rep.certificate = {CertKind::Periodicity, 0, s, p};
      return rep;
    }
  }
  rep.exact = false;
  rep.bound = last;
  rep.certificate = {CertKind::CutoffOnly, 0, 0, 0};
  return rep;
}

Resolution make_resolution(const ModuleRep& m) {
  ResolutionOptions opts;
  opts.minimal = locality(*m.algebra).is_local;
  return Resolution(m, opts);
}

}  // namespace

ExtDegreeReport self_ext_degree(const ModuleRep& m, std::size_t cutoff,
                                std::uint64_t seed) {
  Resolution r = make_resolution(m);
  return degree_report_from(m, r, m, cutoff, seed);
}

ExtDegreeReport ext_with_ring_degree(const ModuleRep& m, std::size_t cutoff,
                                     std::uint64_t seed) {
  ModuleRep sum = direct_sum(m, free_module(m.algebra, 1));
  Resolution r = make_resolution(sum);
  return degree_report_from(sum, r, sum, cutoff, seed);
}

CMReport cm_status(const ModuleRep& m, std::size_t cutoff, std::uint64_t seed) {
  CMReport rep;
  rep.module_name = m.name;
  rep.cutoff = cutoff;

  if (m.dim == 0) {
    rep.vanishing_bound = 0;
    rep.certified = true;
    rep.certificate = {CertKind::FinitePd, 0, 0, 0};
    rep.in_cm = true;
    rep.vs_ring.dims.assign(cutoff + 1, 0);
    return rep;
  }

  Resolution r = make_resolution(m);
  ModuleRep ring = free_module(m.algebra, 1);
  std::size_t probe_cutoff = cutoff;
  if (r.minimal()) {
    r.extend(cutoff + 1);
    if (r.terminated_at()) probe_cutoff = std::max(cutoff, *r.terminated_at());
  }
  rep.vs_ring = ext_dims(r, ring, probe_cutoff);

  std::size_t d = 0;
  for (std::size_t i = 1; i <= probe_cutoff; ++i)
    if (rep.vs_ring.dims[i] != 0) d = i;
  rep.vanishing_bound = d;

  if (r.minimal() && r.terminated_at()) {
    rep.certified = true;
    rep.certificate = {CertKind::FinitePd, *r.terminated_at(), 0, 0};
  } else if (r.minimal()) {
    if (auto cert = detect_periodicity(r, cutoff, seed)) {
      const std::size_t s = cert->start, p = cert->period;
      const std::size_t from = std::max(d, s);
      bool window_zero = from + p <= cutoff;
      for (std::size_t i = from + 1; window_zero && i <= from + p; ++i)
        if (rep.vs_ring.dims[i] != 0) window_zero = false;
      if (window_zero) {
        rep.certified = true;
        rep.certificate = {CertKind::Periodicity, 0, s, p};
      }
    }
  }
  if (rep.certified) rep.in_cm = (d == 0);
  return rep;
}

}  // namespace homext
