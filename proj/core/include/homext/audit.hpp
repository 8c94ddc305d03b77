#ifndef HOMEXT_AUDIT_HPP
#define HOMEXT_AUDIT_HPP

#include "homext/ext.hpp"

namespace homext {

/// Projective dimension by resolution termination (local algebras), with
/// syzygy periodicity certifying the infinite case, plus the
/// Ext^*(M, A)-vanishing cross-check. A cross-check disagreement on a
/// certified finite value is an internal-consistency failure.
PdReport projective_dimension(const ModuleRep& m, std::size_t cutoff,
                              std::uint64_t seed);

enum class GarcOutcome { Consistent, Violation, Inconclusive };

struct GarcVerdict {
  std::string module_name;
  GarcOutcome verdict = GarcOutcome::Inconclusive;
  ExtDegreeReport n_star;  // ext.deg(M + A)
  PdReport pd;
  /// Uncertified but suspicious: n_star observed finite while the
  /// resolution shows no termination through the cutoff.
  bool flagged_candidate = false;
  std::string note;
};

GarcVerdict garc_check(const ModuleRep& m, std::size_t cutoff, std::uint64_t seed);

/// id over `a` of the regular module, computed as a projective dimension
/// over the opposite algebra of the transpose-dual of the regular module.
/// The other side is injective_dimension(opposite(a)).
PdReport injective_dimension(AlgebraPtr a, std::size_t cutoff, std::uint64_t seed);

struct GorensteinSymmetryReport {
  PdReport id_opposite;        // id of the regular module over the opposite side
  ExtDegreeReport middle;      // ext.deg(D(regular) + A)
  PdReport id_plain;           // id of the regular module over a itself
  bool equality_certified = false;    // id_opposite == middle
  bool inequality_certified = false;  // middle <= id_plain
};

GorensteinSymmetryReport gorenstein_symmetry_check(AlgebraPtr a, std::size_t cutoff,
                                                   std::uint64_t seed);

struct DualitySymmetryReport {
  ExtProfile plain;   // Ext^i(M, M)
  ExtProfile dualized;  // Ext^i(DM, DM) over the opposite algebra
  bool agree = false;
};

DualitySymmetryReport duality_symmetry_check(const ModuleRep& m, std::size_t cutoff);

struct ProbeMember {
  std::string name;
  std::size_t last_nonzero = 0;
  bool profile_all_zero = false;
};

struct AuslanderBoundProbe {
  std::string module_name;
  std::size_t cutoff = 0;
  std::size_t b_relative = 0;  // max last-nonzero over certified members
  std::vector<ProbeMember> certified;   // certified eventual vanishing
  std::vector<ProbeMember> uncertified_observed;  // trailing zeros, no certificate
  std::vector<std::string> not_vanishing;  // nonzero Ext at the cutoff edge
};

/// Family-relative probe of the Auslander bound: a lower bound for the
/// ring-level quantity, counting only certified members.
AuslanderBoundProbe auslander_bound_probe(const ModuleRep& m,
                                          const std::vector<ModuleRep>& family,
                                          std::size_t cutoff, std::uint64_t seed);

/// Deterministic enumeration of cyclic quotients A/(g_1..g_t), t <=
/// max_generators, each generator a radical-supported coordinate vector
/// with coefficients from the given set; deduplicated by action tables and
/// certified isomorphism. Throws when the raw tuple count exceeds
/// size_limit.
std::vector<ModuleRep> enumerate_cyclic_family(AlgebraPtr a,
                                               const std::vector<Scalar>& coefficient_set,
                                               std::size_t max_generators,
                                               std::size_t size_limit,
                                               std::uint64_t seed);

struct UncertifiedEntry {
  std::string name;
  std::size_t observed_bound = 0;
};

struct MemberAudit {
  std::string name;
  ExtDegreeReport self_ext;
  PdReport pd;
  CMReport cm;
  GarcVerdict garc;
};

struct RingConditionFindings {
  /// (2) among certified members, finite ext.deg and finite pd coincide.
  bool finiteness_classes_agree = true;
  /// (3) certified-CM members with certified finite ext.deg are free...
  bool cm_finite_members_free = true;
  /// (4) ...and the sup of their extension degrees is zero.
  std::size_t cm_finite_sup = 0;
  /// (5) fed lower bound <= id(A), checked when id is certified.
  bool fed_bounded_by_id = true;
  std::vector<std::string> notes;
};

struct FamilyAuditReport {
  std::string algebra_name;
  std::size_t cutoff = 0;
  std::vector<MemberAudit> members;
  std::size_t fed_lower_bound = 0;  // certified-finite values only
  std::size_t fpd_estimate = 0;     // certified-finite pd only
  std::vector<UncertifiedEntry> uncertified;
  RingConditionFindings conditions;
  PdReport injdim_left;
  PdReport injdim_right;
  std::vector<std::string> garc_violations;
  bool internal_consistency_failure = false;

  bool has_certified_violation() const { return !garc_violations.empty(); }
};

/// Per-member reports folded into family-relative fed/fpd bounds and the
/// ring-level condition checks. Ring-level suprema count only certified
/// finite values; everything else lands in the uncertified ledger.
FamilyAuditReport audit_family(AlgebraPtr a, const std::vector<ModuleRep>& family,
                               std::size_t cutoff, std::uint64_t seed);

}  // namespace homext

#endif
