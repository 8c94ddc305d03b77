#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "homext/reports_json.hpp"
#include "homext/suite.hpp"
#include "homext/workspace.hpp"

namespace fs = std::filesystem;
using namespace homext;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // parse / validation errors
constexpr int kExitViolation = 2;   // certified violation or internal inconsistency

struct GlobalOpts {
  std::string format = "text";
  std::size_t cutoff = 20;
  std::uint64_t seed = 0;
  std::size_t enum_limit = 5000;
  std::string fixtures_dir;

  bool json() const { return format == "json"; }
};

Workspace load_workspace(const GlobalOpts& g) {
  std::vector<fs::path> paths;
  std::string dir = g.fixtures_dir;
  if (dir.empty())
    if (const char* env = std::getenv("HOMEXT_FIXTURES")) dir = env;
  if (dir.empty() && fs::is_directory("fixtures")) dir = "fixtures";
  if (!dir.empty()) paths.push_back(dir);
  Workspace ws = parse_workspace(paths);
  ws.config.default_cutoff = g.cutoff;
  ws.config.default_seed = g.seed;
  ws.config.enumeration_limit = g.enum_limit;
  ws.config.output_format = g.format;
  return ws;
}

std::string value_str(const ExtDegreeReport& r) {
  if (r.exact) {
    if (r.value.kind == DegreeValue::Kind::Infinite) return "infinite";
    return std::to_string(r.value.value);
  }
  return "≥ " + std::to_string(r.bound);
}

std::string cert_str(const Certificate& c) {
  switch (c.kind) {
    case CertKind::FinitePd:
      return "FinitePd(" + std::to_string(c.pd) + ")";
    case CertKind::Periodicity:
      return "Periodicity(" + std::to_string(c.start) + "," +
             std::to_string(c.period) + ")";
    case CertKind::CutoffOnly:
      return "CutoffOnly";
  }
  return "";
}

std::string pd_str(const PdReport& r) {
  switch (r.value.kind) {
    case PdValue::Kind::Finite:
      return std::to_string(r.value.value);
    case PdValue::Kind::Infinite:
      return "infinite";
    case PdValue::Kind::Unknown:
      return "unknown beyond cutoff " + std::to_string(r.cutoff);
  }
  return "";
}

void print_dims(std::ostream& out, const std::vector<std::size_t>& dims) {
  for (std::size_t i = 0; i < dims.size(); ++i) out << (i ? " " : "") << dims[i];
}

int cmd_validate(const GlobalOpts& g, const std::vector<std::string>& files) {
  Workspace ws = load_workspace(g);
  bool all_ok = true;
  for (const std::string& file : files) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << file << ": cannot read\n";
      return kExitUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    ojson probe = ojson::parse(text, nullptr, false);
    if (probe.is_discarded()) {
      std::cerr << file << ": malformed JSON\n";
      return kExitUsage;
    }
    if (probe.contains("table")) {
      AlgebraPresentation a = parse_algebra_document(text, file);
      ValidationReport rep = validate_algebra(a);
      if (g.json()) {
        ojson j = report_json(rep);
        j["name"] = a.name;
        if (rep.ok) j["locality"] = report_json(locality(a));
        std::cout << j.dump(2) << "\n";
      } else if (rep.ok) {
        LocalityWitness w = locality(a);
        std::cout << a.name << ": ok: " << (w.is_local ? "local, " : "")
                  << "dim " << a.dim << "\n";
      } else {
        std::cout << a.name << ": INVALID\n";
        for (const Violation& v : rep.violations)
          std::cout << "  " << v.axiom << " fails at " << v.witness << "\n";
      }
      if (rep.ok)
        ws.algebras[a.name] = std::make_shared<AlgebraPresentation>(std::move(a));
      all_ok = all_ok && rep.ok;
    } else if (probe.contains("algebra")) {
      ModuleRep m = parse_module_document(text, file, ws);
      ValidationReport rep = validate_module(m);
      if (g.json()) {
        ojson j = report_json(rep);
        j["name"] = m.name;
        std::cout << j.dump(2) << "\n";
      } else if (rep.ok) {
        std::cout << m.name << ": ok: module, dim " << m.dim << " over "
                  << m.algebra->name << "\n";
      } else {
        std::cout << m.name << ": INVALID\n";
        for (const Violation& v : rep.violations)
          std::cout << "  " << v.axiom << " fails at " << v.witness << "\n";
      }
      all_ok = all_ok && rep.ok;
    } else {
      std::cerr << file << ": unrecognized document\n";
      return kExitUsage;
    }
  }
  return all_ok ? kExitOk : kExitUsage;
}

int cmd_resolve(const GlobalOpts& g, const std::string& module_name, std::size_t upto) {
  Workspace ws = load_workspace(g);
  const ModuleRep& m = ws.module(module_name);
  ResolutionOptions opts;
  opts.minimal = locality(*m.algebra).is_local;
  Resolution r(m, opts);
  r.extend(upto);
  auto cert = detect_periodicity(r, upto, g.seed);
  if (g.json()) {
    ojson j = resolution_report_json(r, cert);
    j["pd_report"] = report_json(projective_dimension(m, upto, g.seed));
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "resolution of " << m.name << " over " << m.algebra->name
            << (r.minimal() ? " (minimal)" : " (free covers)") << "\n";
  std::cout << "step:   ";
  for (std::size_t i = 0; i < r.steps_computed(); ++i) std::cout << i << " ";
  std::cout << "\nbetti:  ";
  for (std::size_t b : r.betti()) std::cout << b << " ";
  std::cout << "\nsyzygy: ";
  for (std::size_t i = 1; i <= r.steps_computed(); ++i)
    std::cout << r.syzygy_module(i).dim << " ";
  std::cout << "\n";
  if (r.terminated_at())
    std::cout << "terminated at step " << *r.terminated_at() << " (pd = "
              << *r.terminated_at() << ")\n";
  else
    std::cout << "no termination through step " << upto << "\n";
  if (cert)
    std::cout << "periodicity: Omega^" << cert->start << " = Omega^"
              << cert->start + cert->period << " certified (period " << cert->period
              << ")\n";
  else
    std::cout << "periodicity: none found (inconclusive)\n";
  return kExitOk;
}

int cmd_ext(const GlobalOpts& g, const std::string& m_name, const std::string& n_name) {
  Workspace ws = load_workspace(g);
  ExtProfile p = ext_dims(ws.module(m_name), ws.module(n_name), g.cutoff);
  if (g.json()) {
    std::cout << report_json(p).dump(2) << "\n";
  } else {
    std::cout << "dim Ext^i(" << p.source_name << ", " << p.target_name
              << ") for i = 0.." << g.cutoff << ":\n";
    print_dims(std::cout, p.dims);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_extdeg(const GlobalOpts& g, const std::string& m_name) {
  Workspace ws = load_workspace(g);
  ExtDegreeReport r = self_ext_degree(ws.module(m_name), g.cutoff, g.seed);
  if (g.json()) {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << "ext.deg(" << r.module_name << ") = " << value_str(r) << "  ["
              << cert_str(r.certificate) << ", cutoff " << r.cutoff << "]\n";
    std::cout << "dims: ";
    print_dims(std::cout, r.profile.dims);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_pd(const GlobalOpts& g, const std::string& m_name) {
  Workspace ws = load_workspace(g);
  PdReport r = projective_dimension(ws.module(m_name), g.cutoff, g.seed);
  if (g.json())
    std::cout << report_json(r).dump(2) << "\n";
  else {
    std::cout << "pd(" << r.module_name << ") = " << pd_str(r) << "\n";
    if (r.vanishing_check && r.vanishing_check->sup_nonzero)
      std::cout << "sup nonzero Ext^i(M, A): " << *r.vanishing_check->sup_nonzero << "\n";
    if (r.vanishing_check && !r.vanishing_check->agrees)
      std::cout << "INTERNAL CONSISTENCY FAILURE: Ext^*(M,A) probe disagrees\n";
  }
  return (r.vanishing_check && !r.vanishing_check->agrees) ? kExitViolation : kExitOk;
}

int cmd_injdim(const GlobalOpts& g, const std::string& algebra_name) {
  Workspace ws = load_workspace(g);
  AlgebraPtr a = ws.algebra(algebra_name);
  PdReport left = injective_dimension(a, g.cutoff, g.seed);
  PdReport right = injective_dimension(
      std::make_shared<AlgebraPresentation>(opposite(*a)), g.cutoff, g.seed);
  if (g.json()) {
    ojson j;
    j["algebra"] = a->name;
    j["id"] = report_json(left);
    j["id_opposite"] = report_json(right);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "id(" << a->name << ") = " << pd_str(left) << "\n";
    std::cout << "id(" << a->name << "^op) = " << pd_str(right) << "\n";
  }
  return kExitOk;
}

int cmd_audit_module(const GlobalOpts& g, const std::string& m_name) {
  Workspace ws = load_workspace(g);
  const ModuleRep& m = ws.module(m_name);
  ExtDegreeReport self_ext = self_ext_degree(m, g.cutoff, g.seed);
  PdReport pd = projective_dimension(m, g.cutoff, g.seed);
  CMReport cm = cm_status(m, g.cutoff, g.seed);
  GarcVerdict garc = garc_check(m, g.cutoff, g.seed);
  DualitySymmetryReport duality = duality_symmetry_check(m, g.cutoff);

  bool violation = garc.verdict == GarcOutcome::Violation ||
                   (pd.vanishing_check && !pd.vanishing_check->agrees) || !duality.agree;
  if (g.json()) {
    ojson j;
    j["module"] = m.name;
    j["ext_deg"] = report_json(self_ext);
    j["pd"] = report_json(pd);
    j["cm"] = report_json(cm);
    j["garc"] = report_json(garc);
    j["duality_symmetry"] = report_json(duality);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "audit of " << m.name << " over " << m.algebra->name << " (cutoff "
              << g.cutoff << ")\n";
    std::cout << "  ext.deg: " << value_str(self_ext) << "  ["
              << cert_str(self_ext.certificate) << "]\n";
    std::cout << "  pd:      " << pd_str(pd) << "\n";
    std::cout << "  CM:      d = "
              << (cm.vanishing_bound ? std::to_string(*cm.vanishing_bound) : "?")
              << (cm.certified ? " (certified)" : " (observed only)") << "\n";
    std::cout << "  GARC:    "
              << (garc.verdict == GarcOutcome::Consistent     ? "consistent"
                  : garc.verdict == GarcOutcome::Violation    ? "VIOLATION"
                                                              : "inconclusive")
              << (garc.flagged_candidate ? " (flagged candidate)" : "") << " — "
              << garc.note << "\n";
    std::cout << "  duality symmetry: " << (duality.agree ? "agrees" : "DISAGREES")
              << "\n";
  }
  return violation ? kExitViolation : kExitOk;
}

int cmd_audit_family(const GlobalOpts& g, const std::string& algebra_name,
                     const std::string& coeffs, std::size_t max_gens) {
  Workspace ws = load_workspace(g);
  AlgebraPtr a = ws.algebra(algebra_name);
  std::vector<Scalar> coefficient_set;
  std::stringstream ss(coeffs);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) coefficient_set.push_back(a->field.parse(tok));
  if (coefficient_set.empty())
    throw Error("audit-family: empty coefficient set");

  auto family = enumerate_cyclic_family(a, coefficient_set, max_gens,
                                        ws.config.enumeration_limit, g.seed);
  FamilyAuditReport rep = audit_family(a, family, g.cutoff, g.seed);
  if (g.json()) {
    std::cout << report_json(rep).dump(2) << "\n";
  } else {
    std::cout << "family audit of " << rep.algebra_name << " (" << rep.members.size()
              << " members, cutoff " << rep.cutoff << ")\n";
    for (const MemberAudit& m : rep.members)
      std::cout << "  " << m.name << ": ext.deg " << value_str(m.self_ext) << " ["
                << cert_str(m.self_ext.certificate) << "], pd " << pd_str(m.pd)
                << "\n";
    std::cout << "fed lower bound (certified): " << rep.fed_lower_bound << "\n";
    std::cout << "fpd estimate (certified):    " << rep.fpd_estimate << "\n";
    std::cout << "id(A) = " << pd_str(rep.injdim_left) << ", id(A^op) = "
              << pd_str(rep.injdim_right) << "\n";
    if (!rep.uncertified.empty()) {
      std::cout << "uncertified ledger:\n";
      for (const UncertifiedEntry& u : rep.uncertified)
        std::cout << "  " << u.name << ": observed bound " << u.observed_bound
                  << " (inconclusive)\n";
    }
    if (!rep.garc_violations.empty()) {
      std::cout << "certified GARC violations:\n";
      for (const std::string& name : rep.garc_violations)
        std::cout << "  " << name << "\n";
    }
    std::cout << "ring-level condition findings: "
              << (rep.conditions.finiteness_classes_agree && rep.conditions.cm_finite_members_free &&
                          rep.conditions.fed_bounded_by_id
                      ? "consistent"
                      : "INCONSISTENT")
              << "\n";
  }
  return (rep.has_certified_violation() || rep.internal_consistency_failure)
             ? kExitViolation
             : kExitOk;
}

int cmd_fixtures_run(const GlobalOpts& g) {
  std::vector<SuiteCheck> checks = run_acceptance_suite();
  bool all = true;
  if (g.json()) {
    ojson arr = ojson::array();
    for (const SuiteCheck& c : checks) {
      ojson j;
      j["id"] = c.id;
      j["name"] = c.name;
      j["pass"] = c.pass;
      j["detail"] = c.detail;
      arr.push_back(j);
      all = all && c.pass;
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const SuiteCheck& c : checks) {
      std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": "
                << c.name << "\n       " << c.detail << "\n";
      all = all && c.pass;
    }
  }
  return all ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ext/syzygy computations over finite-dimensional algebras"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cutoff", g.cutoff, "cohomological cutoff (default 20)");
  app.add_option("--seed", g.seed, "seed for randomized certificates (default 0)");
  app.add_option("--fixtures", g.fixtures_dir,
                 "fixtures directory (default ./fixtures or $HOMEXT_FIXTURES)");
  app.add_option("--enum-limit", g.enum_limit,
                 "family enumeration size limit (default 5000)");

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "validate algebra/module documents");
  validate->add_option("files", validate_files, "JSON documents")->required();

  std::string resolve_module;
  std::size_t resolve_upto = 20;
  auto* resolve = app.add_subcommand("resolve", "build a free resolution");
  resolve->add_option("module", resolve_module)->required();
  resolve->add_option("--upto", resolve_upto, "resolve through this step");

  std::string ext_m, ext_n;
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N) per degree");
  ext->add_option("M", ext_m)->required();
  ext->add_option("N", ext_n)->required();

  std::string extdeg_m;
  auto* extdeg = app.add_subcommand("extdeg", "self-extension degree with certificate");
  extdeg->add_option("M", extdeg_m)->required();

  std::string pd_m;
  auto* pd = app.add_subcommand("pd", "projective dimension report");
  pd->add_option("M", pd_m)->required();

  std::string injdim_a;
  auto* injdim = app.add_subcommand("injdim", "injective dimension of the regular module");
  injdim->add_option("algebra", injdim_a)->required();

  std::string audit_m;
  auto* audit_module = app.add_subcommand("audit-module", "full per-module audit");
  audit_module->add_option("M", audit_m)->required();

  std::string family_a, family_coeffs = "0,1";
  std::size_t family_max_gens = 1;
  auto* audit_family_cmd =
      app.add_subcommand("audit-family", "cyclic-family audit of an algebra");
  audit_family_cmd->add_option("algebra", family_a)->required();
  audit_family_cmd->add_option("--coeffs", family_coeffs,
                               "comma-separated generator coefficients");
  audit_family_cmd->add_option("--max-gens", family_max_gens,
                               "maximum generators per ideal");

  auto* fixtures = app.add_subcommand("fixtures", "fixture suite operations");
  auto* fixtures_run = fixtures->add_subcommand("run", "run the acceptance suite");

  // let --cutoff / --seed / --format follow the subcommand as well
  for (CLI::App* sub : {validate, resolve, ext, extdeg, pd, injdim, audit_module,
                        audit_family_cmd, fixtures})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return cmd_validate(g, validate_files);
    if (*resolve) return cmd_resolve(g, resolve_module, resolve_upto);
    if (*ext) return cmd_ext(g, ext_m, ext_n);
    if (*extdeg) return cmd_extdeg(g, extdeg_m);
    if (*pd) return cmd_pd(g, pd_m);
    if (*injdim) return cmd_injdim(g, injdim_a);
    if (*audit_module) return cmd_audit_module(g, audit_m);
    if (*audit_family_cmd)
      return cmd_audit_family(g, family_a, family_coeffs, family_max_gens);
    if (*fixtures) {
      if (*fixtures_run) return cmd_fixtures_run(g);
      std::cerr << "fixtures: expected a subcommand (run)\n";
      return kExitUsage;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
