#ifndef HOMEXT_MODULE_HPP
#define HOMEXT_MODULE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homext/algebra.hpp"

namespace homext {

/// A finitely generated left module as a matrix representation: one
/// dim x dim action matrix per algebra basis element. The zero module
/// (dim 0) is a first-class value everywhere.
struct ModuleRep {
  std::string name;
  AlgebraPtr algebra;
  std::size_t dim = 0;
  std::vector<Mat> action;  // action[i] = left multiplication by e_i

  /// Action of an arbitrary algebra element (coordinate vector).
  Mat act(const Vec& element) const;

  bool same_presentation(const ModuleRep& o) const {
    return *algebra == *o.algebra && dim == o.dim && action == o.action;
  }
};

ValidationReport validate_module(const ModuleRep& m);

/// rank copies of the left regular representation, block diagonal. The
/// basis is slot-major: flat index = slot * dim(A) + algebra basis index,
/// so a vector in A^rank reads off as rank consecutive algebra elements.
ModuleRep free_module(AlgebraPtr a, std::size_t rank);

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n);

/// A / (left ideal generated by the given elements), with the canonical
/// complement basis and induced actions. Empty generator list gives the
/// free module of rank 1; generators spanning A give the zero module.
ModuleRep cyclic_quotient(AlgebraPtr a, const std::vector<Vec>& generators,
                          std::string name = "");

struct HomBasis {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Mat> basis;  // target_dim x source_dim intertwiners
};

/// Canonical basis of all A-linear maps m -> n (nullspace of the stacked
/// intertwining system, fixed free-variable convention).
HomBasis hom_basis(const ModuleRep& m, const ModuleRep& n);

/// Vector-space dual with transposed actions, a module over the opposite
/// algebra. Involutive up to the "D(...)" name wrapper.
ModuleRep dual(const ModuleRep& m);

struct IsoCertificate {
  Mat map;  // invertible A-linear map source -> target
  std::uint64_t seed_used = 0;
};

/// Randomized one-sided isomorphism test: a returned certificate is always
/// sound (A-linear and invertible); nullopt is inconclusive. Coefficients
/// are drawn from {0..t} on trial t, fully determined by the seed.
std::optional<IsoCertificate> is_isomorphic(const ModuleRep& m, const ModuleRep& n,
                                            std::uint64_t seed, unsigned trials);

/// Direct check that a certificate is a genuine isomorphism m -> n.
bool verify_iso_certificate(const ModuleRep& m, const ModuleRep& n,
                            const IsoCertificate& cert);

}  // namespace homext

#endif
