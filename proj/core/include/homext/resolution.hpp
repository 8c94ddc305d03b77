#ifndef HOMEXT_RESOLUTION_HPP
#define HOMEXT_RESOLUTION_HPP

#include <map>
#include <optional>

#include "homext/module.hpp"

namespace homext {

/// One step of a free resolution: the free cover of the current target
/// (the module at step 0, the previous syzygy afterwards), the canonical
/// kernel basis inside the free module, and the kernel as a module.
struct ResolutionStep {
  std::size_t free_rank = 0;
  Mat cover;         // dim(target) x (free_rank * dim A)
  Mat kernel_basis;  // (free_rank * dim A) x dim(syzygy), canonical columns
  ModuleRep syzygy;
};

struct ResolutionOptions {
  /// Minimal covers by tops (local algebras only). When false, covers use
  /// one free generator per basis vector of the target.
  bool minimal = true;
  /// step -> number of redundant rank-1 summands appended to that cover,
  /// each mapping to zero. Any padding makes the resolution non-minimal.
  std::map<std::size_t, std::size_t> padding;
};

/// Free resolution of a module, extended on demand and cached. Extension
/// has a single owner; completed prefixes are stable and shareable.
class Resolution {
 public:
  explicit Resolution(ModuleRep m, ResolutionOptions opts = {});

  void extend(std::size_t upto);  // computes steps 0..upto, stops at a zero syzygy

  const ModuleRep& module() const { return module_; }
  bool minimal() const { return minimal_; }
  std::size_t steps_computed() const { return steps_.size(); }
  const ResolutionStep& step(std::size_t i) const { return steps_.at(i); }

  /// Omega^n; n = 0 is the module itself. Past a terminated resolution
  /// this is the zero module.
  const ModuleRep& syzygy_module(std::size_t n) const;

  std::vector<std::size_t> betti() const;
  std::optional<std::size_t> terminated_at() const { return terminated_at_; }

  /// d_i : F_i -> F_{i-1} of the associated free complex (i >= 1), as a
  /// plain field matrix.
  Mat free_differential(std::size_t i) const;
  /// The same differential as a rank(F_{i-1}) x rank(F_i) grid of algebra
  /// elements, read off the slot-major free basis.
  std::vector<std::vector<Vec>> differential_algebra_entries(std::size_t i) const;

 private:
  void compute_next_step();

  ModuleRep module_;
  ResolutionOptions opts_;
  bool minimal_ = true;
  std::vector<ResolutionStep> steps_;
  std::optional<std::size_t> terminated_at_;
  ModuleRep zero_module_;
};

/// Free cover of m. Minimal (rank = dim of the top) over local algebras;
/// throws for non-local algebras.
std::pair<ModuleRep, Mat> minimal_cover(const ModuleRep& m);

/// detect_termination: the step at which a zero kernel appeared, i.e. the
/// projective dimension when the resolution is minimal.
std::optional<std::size_t> detect_termination(const Resolution& r);

/// Omega^n M from a fresh minimal resolution.
ModuleRep syzygy(const ModuleRep& m, std::size_t n);

struct PeriodicityCertificate {
  std::size_t start = 0;   // s
  std::size_t period = 1;  // p >= 1
  IsoCertificate iso;      // Omega^s = Omega^{s+p}
};

/// Scans pairs s < s+p <= window with matching syzygy dimensions and Betti
/// numbers in lexicographic (s+p, s) order, certifying the first pair the
/// randomized isomorphism search confirms. nullopt is inconclusive.
/// Requires a minimal resolution (canonical syzygy representatives).
std::optional<PeriodicityCertificate> detect_periodicity(Resolution& r,
                                                         std::size_t window,
                                                         std::uint64_t seed);

enum class PdMethod { Termination, Periodicity, CutoffOnly };

struct PdValue {
  enum class Kind { Finite, Infinite, Unknown } kind = Kind::Unknown;
  std::size_t value = 0;  // set iff Finite

  static PdValue finite(std::size_t n) { return {Kind::Finite, n}; }
  static PdValue infinite() { return {Kind::Infinite, 0}; }
  static PdValue unknown() { return {Kind::Unknown, 0}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool certified() const { return kind != Kind::Unknown; }
};

struct VanishingCrossCheck {
  std::optional<std::size_t> sup_nonzero;  // sup{i <= cutoff : Ext^i(M,A) != 0}
  bool agrees = true;  // meaningful when pd is certified finite
};

struct PdReport {
  std::string module_name;
  PdValue value;
  PdMethod method = PdMethod::CutoffOnly;
  std::size_t cutoff = 0;
  std::optional<PeriodicityCertificate> periodicity;
  std::optional<VanishingCrossCheck> vanishing_check;
};

}  // namespace homext

#endif
