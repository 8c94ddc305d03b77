#ifndef HOMEXT_ALGEBRA_HPP
#define HOMEXT_ALGEBRA_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "homext/matrix.hpp"

namespace homext {

/// Sparse multiplication table: (i, j) -> list of (k, c) meaning
/// e_i * e_j = sum c * e_k. Absent pairs are zero products.
using StructureTable =
    std::map<std::pair<std::size_t, std::size_t>,
             std::vector<std::pair<std::size_t, Scalar>>>;

/// A finite-dimensional associative unital algebra given by structure
/// constants over an exact field, with a declared radical basis.
/// Immutable after validation; share via AlgebraPtr.
struct AlgebraPresentation {
  std::string name;
  Field field;
  std::size_t dim = 1;
  std::vector<std::string> basis_names;
  std::size_t unit_index = 0;
  std::vector<std::size_t> radical_indices;  // sorted, never contains unit
  StructureTable table;

  /// Product of two coordinate vectors.
  Vec multiply(const Vec& u, const Vec& v) const;
  /// Matrix of left multiplication by e_i (column j = e_i * e_j).
  Mat left_mult_matrix(std::size_t i) const;
  /// Coordinates of e_i * e_j.
  Vec basis_product(std::size_t i, std::size_t j) const;

  bool is_radical_coordinate_vector(const Vec& v) const;
  std::string format_element(const Vec& v) const;

  bool operator==(const AlgebraPresentation& o) const {
    return name == o.name && field == o.field && dim == o.dim &&
           basis_names == o.basis_names && unit_index == o.unit_index &&
           radical_indices == o.radical_indices && table == o.table;
  }
};

using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

struct LocalityWitness {
  bool is_local = false;
  std::size_t nilpotency_index = 0;  // least t with radical^t = 0
};

struct Violation {
  std::string axiom;
  std::string witness;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Checks associativity, the unit law, and that the declared radical is a
/// nilpotent two-sided ideal. Axiom failures come back in the report with
/// a witnessing basis triple; malformed indices throw Error instead.
ValidationReport validate_algebra(const AlgebraPresentation& a);

/// Requires a valid algebra.
LocalityWitness locality(const AlgebraPresentation& a);

/// The four-dimensional algebra k<x,y>/(x^2, y^2, xy - q yx) on basis
/// {1, x, y, xy}. q must be nonzero; its multiplicative order is the
/// caller's concern.
AlgebraPresentation build_quantum_ci(const Field& field, const Scalar& q);

/// Monomial-basis presentation of k[x_1..x_n]/(x_1^{a_1}, ..., x_n^{a_n}).
/// Every exponent must be >= 2.
AlgebraPresentation build_truncated_polynomial(const Field& field,
                                               const std::vector<unsigned>& exponents);

/// Transposed structure constants; involutive (the name toggles an "^op"
/// suffix so the double opposite is bit-identical).
AlgebraPresentation opposite(const AlgebraPresentation& a);

/// The base field as a one-dimensional algebra.
AlgebraPresentation build_base_field(const Field& field);

}  // namespace homext

#endif
