#ifndef HOMEXT_EXT_HPP
#define HOMEXT_EXT_HPP

#include "homext/resolution.hpp"

namespace homext {

struct ExtProfile {
  std::string source_name;
  std::string target_name;
  std::vector<std::size_t> dims;  // indexed by cohomological degree 0..cutoff
};

/// Dimensions of Ext^i(M, N) for 0 <= i <= cutoff as cohomology of the
/// Hom cochain complex of an already-built resolution of M.
ExtProfile ext_dims(Resolution& r, const ModuleRep& n, std::size_t cutoff);

/// Convenience overload: resolves m internally (minimal where the algebra
/// is local, plain free covers otherwise).
ExtProfile ext_dims(const ModuleRep& m, const ModuleRep& n, std::size_t cutoff);

enum class CertKind { FinitePd, Periodicity, CutoffOnly };

struct Certificate {
  CertKind kind = CertKind::CutoffOnly;
  std::size_t pd = 0;      // FinitePd
  std::size_t start = 0;   // Periodicity
  std::size_t period = 0;  // Periodicity
};

struct DegreeValue {
  enum class Kind { Finite, Infinite } kind = Kind::Finite;
  std::size_t value = 0;

  static DegreeValue finite(std::size_t n) { return {Kind::Finite, n}; }
  static DegreeValue infinite() { return {Kind::Infinite, 0}; }
};

/// Value-or-lower-bound for an extension degree, with its soundness
/// certificate and the cutoff it was computed at.
struct ExtDegreeReport {
  std::string module_name;
  std::size_t cutoff = 0;
  std::optional<std::size_t> last_nonzero;
  bool exact = false;        // Exact vs LowerBound
  DegreeValue value;         // meaningful when exact
  std::size_t bound = 0;     // meaningful when !exact
  Certificate certificate;
  bool zero_module = false;
  ExtProfile profile;

  bool certified_finite() const {
    return exact && value.kind == DegreeValue::Kind::Finite;
  }
  bool certified_infinite() const {
    return exact && value.kind == DegreeValue::Kind::Infinite;
  }
};

/// ext.deg(M) = sup{ i : Ext^i(M,M) != 0 }, certified exact when the
/// resolution terminates or syzygy periodicity plus first-argument
/// dimension shifting settles the tail; a lower bound otherwise.
ExtDegreeReport self_ext_degree(const ModuleRep& m, std::size_t cutoff,
                                std::uint64_t seed);

/// Same report for M + A (free rank 1 summand).
ExtDegreeReport ext_with_ring_degree(const ModuleRep& m, std::size_t cutoff,
                                     std::uint64_t seed);

struct CMReport {
  std::string module_name;
  std::size_t cutoff = 0;
  std::optional<std::size_t> vanishing_bound;  // least d: Ext^i(M,A)=0 for d<i<=cutoff
  bool certified = false;
  Certificate certificate;
  std::optional<bool> in_cm;  // set only when certified
  ExtProfile vs_ring;
};

CMReport cm_status(const ModuleRep& m, std::size_t cutoff, std::uint64_t seed);

}  // namespace homext

#endif
