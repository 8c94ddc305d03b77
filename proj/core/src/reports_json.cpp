#include "homext/reports_json.hpp"

namespace homext {

namespace {

ojson pd_value_json(const PdValue& v) {
  switch (v.kind) {
    case PdValue::Kind::Finite:
      return ojson(v.value);
    case PdValue::Kind::Infinite:
      return ojson("infinite");
    case PdValue::Kind::Unknown:
      return ojson("unknown beyond cutoff");
  }
  return {};
}

const char* cert_name(CertKind k) {
  switch (k) {
    case CertKind::FinitePd:
      return "FinitePd";
    case CertKind::Periodicity:
      return "Periodicity";
    case CertKind::CutoffOnly:
      return "CutoffOnly";
  }
  return "";
}

const char* method_name(PdMethod m) {
  switch (m) {
    case PdMethod::Termination:
      return "Termination";
    case PdMethod::Periodicity:
      return "Periodicity";
    case PdMethod::CutoffOnly:
      return "CutoffOnly";
  }
  return "";
}

const char* garc_name(GarcOutcome o) {
  switch (o) {
    case GarcOutcome::Consistent:
      return "Consistent";
    case GarcOutcome::Violation:
      return "Violation";
    case GarcOutcome::Inconclusive:
      return "Inconclusive";
  }
  return "";
}

ojson opt_size(const std::optional<std::size_t>& v) {
  if (v) return ojson(*v);
  return ojson(nullptr);
}

}  // namespace

ojson report_json(const ValidationReport& r) {
  ojson j;
  j["ok"] = r.ok;
  ojson v = ojson::array();
  for (const Violation& violation : r.violations) {
    ojson entry;
    entry["axiom"] = violation.axiom;
    entry["witness"] = violation.witness;
    v.push_back(entry);
  }
  j["violations"] = v;
  return j;
}

ojson report_json(const LocalityWitness& w) {
  ojson j;
  j["local"] = w.is_local;
  j["nilpotency_index"] = w.nilpotency_index;
  return j;
}

ojson report_json(const ExtProfile& p) {
  ojson j;
  j["source"] = p.source_name;
  j["target"] = p.target_name;
  j["dims"] = p.dims;
  return j;
}

ojson report_json(const Certificate& c) {
  ojson j;
  j["certificate"] = cert_name(c.kind);
  if (c.kind == CertKind::FinitePd) j["pd"] = c.pd;
  if (c.kind == CertKind::Periodicity) {
    j["start"] = c.start;
    j["period"] = c.period;
  }
  return j;
}

ojson report_json(const ExtDegreeReport& r) {
  ojson j;
  j["module"] = r.module_name;
  if (r.exact) {
    if (r.value.kind == DegreeValue::Kind::Infinite)
      j["value"] = "infinite";
    else
      j["value"] = r.value.value;
  } else {
    j["bound"] = r.bound;
  }
  j["certificate"] = cert_name(r.certificate.kind);
  if (r.certificate.kind == CertKind::FinitePd) j["pd"] = r.certificate.pd;
  if (r.certificate.kind == CertKind::Periodicity) {
    j["start"] = r.certificate.start;
    j["period"] = r.certificate.period;
  }
  j["cutoff"] = r.cutoff;
  j["last_nonzero"] = opt_size(r.last_nonzero);
  if (r.zero_module) j["note"] = "zero module";
  j["dims"] = r.profile.dims;
  return j;
}

ojson report_json(const CMReport& r) {
  ojson j;
  j["module"] = r.module_name;
  j["cutoff"] = r.cutoff;
  j["vanishing_bound"] = opt_size(r.vanishing_bound);
  j["certified"] = r.certified;
  j["certificate"] = cert_name(r.certificate.kind);
  if (r.in_cm)
    j["in_CM"] = *r.in_cm;
  else
    j["in_CM"] = nullptr;
  j["dims_vs_ring"] = r.vs_ring.dims;
  return j;
}

ojson report_json(const PeriodicityCertificate& c) {
  ojson j;
  j["start"] = c.start;
  j["period"] = c.period;
  j["seed_used"] = c.iso.seed_used;
  return j;
}

ojson report_json(const PdReport& r) {
  ojson j;
  j["module"] = r.module_name;
  j["pd"] = pd_value_json(r.value);
  j["method"] = method_name(r.method);
  j["cutoff"] = r.cutoff;
  if (r.periodicity) j["periodicity"] = report_json(*r.periodicity);
  if (r.vanishing_check) {
    ojson e;
    e["sup_nonzero_ext_vs_ring"] = opt_size(r.vanishing_check->sup_nonzero);
    e["agrees"] = r.vanishing_check->agrees;
    j["vanishing_crosscheck"] = e;
  }
  return j;
}

ojson report_json(const GarcVerdict& v) {
  ojson j;
  j["module"] = v.module_name;
  j["verdict"] = garc_name(v.verdict);
  j["flagged_candidate"] = v.flagged_candidate;
  j["note"] = v.note;
  j["ext_deg_with_ring"] = report_json(v.n_star);
  j["pd"] = report_json(v.pd);
  return j;
}

ojson report_json(const GorensteinSymmetryReport& r) {
  ojson j;
  j["id_opposite"] = report_json(r.id_opposite);
  j["ext_deg_dual_regular_plus_ring"] = report_json(r.middle);
  j["id"] = report_json(r.id_plain);
  j["equality_certified"] = r.equality_certified;
  j["inequality_certified"] = r.inequality_certified;
  return j;
}

ojson report_json(const DualitySymmetryReport& r) {
  ojson j;
  j["profile"] = report_json(r.plain);
  j["dual_profile"] = report_json(r.dualized);
  j["agree"] = r.agree;
  return j;
}

ojson report_json(const AuslanderBoundProbe& p) {
  ojson j;
  j["module"] = p.module_name;
  j["cutoff"] = p.cutoff;
  j["b_relative"] = p.b_relative;
  auto members = [](const std::vector<ProbeMember>& ms) {
    ojson arr = ojson::array();
    for (const ProbeMember& m : ms) {
      ojson e;
      e["name"] = m.name;
      e["last_nonzero"] = m.last_nonzero;
      e["all_zero"] = m.profile_all_zero;
      arr.push_back(e);
    }
    return arr;
  };
  j["certified"] = members(p.certified);
  j["uncertified_observed"] = members(p.uncertified_observed);
  j["not_vanishing"] = p.not_vanishing;
  return j;
}

ojson report_json(const FamilyAuditReport& r) {
  ojson j;
  j["algebra"] = r.algebra_name;
  j["cutoff"] = r.cutoff;
  j["fed_lower_bound"] = r.fed_lower_bound;
  j["fpd_estimate"] = r.fpd_estimate;
  ojson uncert = ojson::array();
  for (const UncertifiedEntry& u : r.uncertified) {
    ojson e;
    e["module"] = u.name;
    e["observed_bound"] = u.observed_bound;
    uncert.push_back(e);
  }
  j["uncertified"] = uncert;
  ojson members = ojson::array();
  for (const MemberAudit& m : r.members) {
    ojson e;
    e["module"] = m.name;
    e["ext_deg"] = report_json(m.self_ext);
    e["pd"] = report_json(m.pd);
    e["cm"] = report_json(m.cm);
    e["garc"] = report_json(m.garc);
    members.push_back(e);
  }
  j["members"] = members;
  ojson cond;
  cond["finiteness_classes_agree"] = r.conditions.finiteness_classes_agree;
  cond["cm_finite_members_free"] = r.conditions.cm_finite_members_free;
  cond["cm_finite_sup"] = r.conditions.cm_finite_sup;
  cond["fed_bounded_by_id"] = r.conditions.fed_bounded_by_id;
  cond["notes"] = r.conditions.notes;
  j["ring_conditions"] = cond;
  j["injective_dimension"] = report_json(r.injdim_left);
  j["injective_dimension_opposite"] = report_json(r.injdim_right);
  j["garc_violations"] = r.garc_violations;
  j["internal_consistency_failure"] = r.internal_consistency_failure;
  return j;
}

ojson resolution_report_json(const Resolution& r,
                             const std::optional<PeriodicityCertificate>& cert) {
  ojson j;
  j["module"] = r.module().name;
  j["minimal"] = r.minimal();
  j["betti"] = r.betti();
  ojson dims = ojson::array();
  for (std::size_t i = 0; i <= r.steps_computed(); ++i)
    dims.push_back(r.syzygy_module(i).dim);
  j["syzygy_dims"] = dims;
  if (r.terminated_at())
    j["terminated_at"] = *r.terminated_at();
  else
    j["terminated_at"] = nullptr;
  if (cert)
    j["periodicity"] = report_json(*cert);
  else
    j["periodicity"] = nullptr;
  return j;
}

}  // namespace homext
