#include "homext/audit.hpp"

#include <algorithm>

namespace homext {

namespace {

std::optional<std::size_t> last_nonzero_index(const std::vector<std::size_t>& dims) {
  std::optional<std::size_t> out;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (dims[i] != 0) out = i;
  return out;
}

}  // namespace

PdReport projective_dimension(const ModuleRep& m, std::size_t cutoff,
                              std::uint64_t seed) {
  PdReport rep;
  rep.module_name = m.name;
  rep.cutoff = cutoff;

  if (m.dim == 0) {
    rep.value = PdValue::finite(0);
    rep.method = PdMethod::Termination;
    rep.vanishing_check = VanishingCrossCheck{std::nullopt, true};
    return rep;
  }

  const bool local = locality(*m.algebra).is_local;
  ResolutionOptions opts;
  opts.minimal = local;
  Resolution r(m, opts);
  r.extend(cutoff + 1);

  if (local && r.terminated_at()) {
    rep.value = PdValue::finite(*r.terminated_at());
    rep.method = PdMethod::Termination;
  } else if (local) {
    if (auto cert = detect_periodicity(r, cutoff, seed)) {
      rep.value = PdValue::infinite();
      rep.method = PdMethod::Periodicity;
      rep.periodicity = std::move(cert);
    }
  }

  // Ext^*(M, A) probe; for a certified finite value this is a theorem and
  // disagreement flags an engine bug.
  std::size_t probe_cutoff = cutoff;
  if (rep.value.is_finite()) probe_cutoff = std::max(cutoff, rep.value.value);
  ExtProfile vs_ring = ext_dims(r, free_module(m.algebra, 1), probe_cutoff);
  VanishingCrossCheck check;
  check.sup_nonzero = last_nonzero_index(vs_ring.dims);
  if (rep.value.is_finite()) {
    const std::size_t n = rep.value.value;
    check.agrees = vs_ring.dims[n] != 0;
    for (std::size_t i = n + 1; i < vs_ring.dims.size(); ++i)
      if (vs_ring.dims[i] != 0) check.agrees = false;
  }
  rep.vanishing_check = std::move(check);
  return rep;
}

GarcVerdict garc_check(const ModuleRep& m, std::size_t cutoff, std::uint64_t seed) {
  GarcVerdict v;
  v.module_name = m.name;
  v.n_star = ext_with_ring_degree(m, cutoff, seed);
  v.pd = projective_dimension(m, cutoff, seed);

  if (v.n_star.certified_infinite()) {
    v.verdict = GarcOutcome::Consistent;
    v.note = "ext.deg(M+A) certified infinite; the bound pd <= ext.deg(M+A) is vacuous";
    return v;
  }
  if (v.n_star.certified_finite()) {
    const std::size_t ns = v.n_star.value.value;
    if (v.pd.value.is_finite()) {
      if (v.pd.value.value == ns) {
        v.verdict = GarcOutcome::Consistent;
        v.note = "pd(M) = ext.deg(M+A) = " + std::to_string(ns);
      } else if (v.pd.value.value > ns) {
        v.verdict = GarcOutcome::Violation;
        v.note = "certified pd(M) = " + std::to_string(v.pd.value.value) +
                 " exceeds certified ext.deg(M+A) = " + std::to_string(ns);
      } else {
        v.verdict = GarcOutcome::Inconclusive;
        v.note = "internal consistency: certified pd below certified ext.deg(M+A)";
      }
    } else if (v.pd.value.kind == PdValue::Kind::Infinite) {
      v.verdict = GarcOutcome::Violation;
      v.note = "pd(M) certified infinite while ext.deg(M+A) certified finite";
    } else {
      v.verdict = GarcOutcome::Inconclusive;
      v.flagged_candidate = true;
      v.note = "ext.deg(M+A) certified finite but pd unresolved at cutoff";
    }
    return v;
  }
  v.verdict = GarcOutcome::Inconclusive;
  if (v.n_star.bound < cutoff && !v.pd.value.is_finite()) {
    v.flagged_candidate = true;
    v.note = "observed ext.deg(M+A) bound " + std::to_string(v.n_star.bound) +
             " with vanishing tail, no termination through cutoff; "
             "GARC-failure candidate";
  } else {
    v.note = "values uncertified at cutoff";
  }
  return v;
}

PdReport injective_dimension(AlgebraPtr a, std::size_t cutoff, std::uint64_t seed) {
  ModuleRep d = dual(free_module(a, 1));
  d.name = "D(" + a->name + ")";
  PdReport rep = projective_dimension(d, cutoff, seed);
  rep.module_name = "id(" + a->name + ") via pd of " + d.name;
  return rep;
}

GorensteinSymmetryReport gorenstein_symmetry_check(AlgebraPtr a, std::size_t cutoff,
                                                   std::uint64_t seed) {
  GorensteinSymmetryReport rep;
  AlgebraPtr op = std::make_shared<AlgebraPresentation>(opposite(*a));
  rep.id_opposite = injective_dimension(op, cutoff, seed);
  rep.id_plain = injective_dimension(a, cutoff, seed);

  ModuleRep d_reg = dual(free_module(op, 1));  // left module over a (bit-equal value)
  d_reg.name = "D(" + op->name + ")";
  rep.middle = ext_with_ring_degree(d_reg, cutoff, seed);

  const bool mid_fin = rep.middle.certified_finite();
  const bool mid_inf = rep.middle.certified_infinite();
  if (rep.id_opposite.value.is_finite() && mid_fin)
    rep.equality_certified = rep.id_opposite.value.value == rep.middle.value.value;
  else if (rep.id_opposite.value.kind == PdValue::Kind::Infinite && mid_inf)
    rep.equality_certified = true;

  if (mid_fin && rep.id_plain.value.is_finite())
    rep.inequality_certified = rep.middle.value.value <= rep.id_plain.value.value;
  else if (rep.id_plain.value.kind == PdValue::Kind::Infinite)
    rep.inequality_certified = mid_fin || mid_inf;
  return rep;
}

DualitySymmetryReport duality_symmetry_check(const ModuleRep& m, std::size_t cutoff) {
  DualitySymmetryReport rep;
  rep.plain = ext_dims(m, m, cutoff);
  ModuleRep dm = dual(m);
  rep.dualized = ext_dims(dm, dm, cutoff);
  rep.agree = rep.plain.dims == rep.dualized.dims;
  return rep;
}

AuslanderBoundProbe auslander_bound_probe(const ModuleRep& m,
                                          const std::vector<ModuleRep>& family,
                                          std::size_t cutoff, std::uint64_t seed) {
  for (const ModuleRep& n : family)
    if (!(*n.algebra == *m.algebra))
      throw Error("auslander_bound_probe: family member over a different algebra");

  AuslanderBoundProbe probe;
  probe.module_name = m.name;
  probe.cutoff = cutoff;

  const bool local = locality(*m.algebra).is_local;
  ResolutionOptions opts;
  opts.minimal = local;
  Resolution r(m, opts);
  r.extend(cutoff + 1);

  const bool finite_pd = local && r.terminated_at().has_value();
  std::optional<PeriodicityCertificate> period;
  if (local && !finite_pd) period = detect_periodicity(r, cutoff, seed);
  const std::size_t probe_cutoff =
      finite_pd ? std::max(cutoff, *r.terminated_at()) : cutoff;

  for (const ModuleRep& n : family) {
    ExtProfile profile = ext_dims(r, n, probe_cutoff);
    auto last = last_nonzero_index(profile.dims);
    ProbeMember member{n.name, last.value_or(0), !last.has_value()};

    bool certified = finite_pd;
    if (!certified && period) {
      const std::size_t from = std::max(period->start, last.value_or(0));
      certified = from + period->period <= cutoff;
      for (std::size_t i = from + 1; certified && i <= from + period->period; ++i)
        if (profile.dims[i] != 0) certified = false;
    }
    if (certified) {
      probe.b_relative = std::max(probe.b_relative, member.last_nonzero);
      probe.certified.push_back(std::move(member));
    } else if (last.value_or(0) < cutoff) {
      probe.uncertified_observed.push_back(std::move(member));
    } else {
      probe.not_vanishing.push_back(n.name);
    }
  }
  return probe;
}

std::vector<ModuleRep> enumerate_cyclic_family(AlgebraPtr a,
                                               const std::vector<Scalar>& coefficient_set,
                                               std::size_t max_generators,
                                               std::size_t size_limit,
                                               std::uint64_t seed) {
  if (!a) throw Error("enumerate_cyclic_family: algebra reference unresolved");
  const std::size_t nr = a->radical_indices.size();
  const std::size_t base = coefficient_set.size();
  if (base == 0) throw Error("enumerate_cyclic_family: empty coefficient set");

  // raw tuple count: sum over sizes g of base^(nr*g)
  std::size_t total = 0;
  double estimate = 0;
  for (std::size_t g = 0; g <= max_generators; ++g) {
    double block = 1;
    for (std::size_t i = 0; i < nr * g; ++i) block *= static_cast<double>(base);
    estimate += block;
    if (estimate > static_cast<double>(size_limit))
      throw Error("enumerate_cyclic_family: enumeration of ~" +
                  std::to_string(static_cast<std::size_t>(estimate)) +
                  " tuples exceeds the configured limit of " +
                  std::to_string(size_limit));
    total = static_cast<std::size_t>(estimate);
  }
  (void)total;

  constexpr unsigned kDedupTrials = 16;
  const Field& f = a->field;
  std::vector<ModuleRep> family;
  for (std::size_t g = 0; g <= max_generators; ++g) {
    const std::size_t digits = nr * g;
    std::vector<std::size_t> odo(digits, 0);
    while (true) {
      std::vector<Vec> gens(g, Vec(a->dim, f.zero()));
      for (std::size_t d = 0; d < digits; ++d)
        gens[d / nr][a->radical_indices[d % nr]] = coefficient_set[odo[d]];
      ModuleRep q = cyclic_quotient(a, gens);

      bool duplicate = false;
      for (const ModuleRep& kept : family) {
        if (kept.dim != q.dim) continue;
        if (kept.action == q.action ||
            is_isomorphic(kept, q, seed, kDedupTrials).has_value()) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) family.push_back(std::move(q));

      // odometer, most significant digit last
      std::size_t d = 0;
      while (d < digits && ++odo[d] == base) odo[d++] = 0;
      if (d == digits) break;
    }
  }
  return family;
}

FamilyAuditReport audit_family(AlgebraPtr a, const std::vector<ModuleRep>& family,
                               std::size_t cutoff, std::uint64_t seed) {
  if (family.empty()) throw Error("audit_family: empty family");
  FamilyAuditReport rep;
  rep.algebra_name = a->name;
  rep.cutoff = cutoff;

  for (const ModuleRep& m : family) {
    if (!(*m.algebra == *a))
      throw Error("audit_family: family member over a different algebra");
    MemberAudit audit;
    audit.name = m.name;
    audit.self_ext = self_ext_degree(m, cutoff, seed);
    audit.pd = projective_dimension(m, cutoff, seed);
    audit.cm = cm_status(m, cutoff, seed);
    audit.garc = garc_check(m, cutoff, seed);
    rep.members.push_back(std::move(audit));
  }

  for (const MemberAudit& m : rep.members) {
    if (m.self_ext.certified_finite())
      rep.fed_lower_bound = std::max(rep.fed_lower_bound, m.self_ext.value.value);
    if (m.pd.value.is_finite()) {
      // a certified pd = n forces ext.deg(M+A) = n, so it feeds the same bound
      rep.fed_lower_bound = std::max(rep.fed_lower_bound, m.pd.value.value);
      rep.fpd_estimate = std::max(rep.fpd_estimate, m.pd.value.value);
    }
    if (!m.self_ext.exact)
      rep.uncertified.push_back({m.name, m.self_ext.bound});
    if (m.garc.verdict == GarcOutcome::Violation)
      rep.garc_violations.push_back(m.name);
    if (m.pd.vanishing_check && !m.pd.vanishing_check->agrees) rep.internal_consistency_failure = true;
  }

  rep.injdim_left = injective_dimension(a, cutoff, seed);
  rep.injdim_right = injective_dimension(
      std::make_shared<AlgebraPresentation>(opposite(*a)), cutoff, seed);

  RingConditionFindings& t = rep.conditions;
  for (const MemberAudit& m : rep.members) {
    const bool ext_certified = m.self_ext.exact;
    const bool pd_certified = m.pd.value.certified();
    if (ext_certified && pd_certified) {
      const bool ext_fin = m.self_ext.certified_finite();
      const bool pd_fin = m.pd.value.is_finite();
      if (ext_fin != pd_fin) {
        t.finiteness_classes_agree = false;
        t.notes.push_back("member " + m.name +
                          ": finite ext.deg and finite pd classes differ");
      }
    }
    if (m.cm.in_cm == true && m.self_ext.certified_finite()) {
      t.cm_finite_sup = std::max(t.cm_finite_sup, m.self_ext.value.value);
      const bool free_member = m.pd.value.is_finite() && m.pd.value.value == 0;
      if (!free_member || m.self_ext.value.value != 0) {
        t.cm_finite_members_free = false;
        t.notes.push_back("member " + m.name +
                          ": CM with certified finite ext.deg but not free");
      }
    }
  }
  if (rep.injdim_left.value.is_finite()) {
    if (rep.fed_lower_bound > rep.injdim_left.value.value) {
      t.fed_bounded_by_id = false;
      t.notes.push_back("fed lower bound exceeds certified id(A)");
    }
  } else if (rep.injdim_left.value.kind == PdValue::Kind::Unknown) {
    t.notes.push_back("id(A) uncertified at cutoff; bound (5) not checked");
  }
  return rep;
}

}  // namespace homext
