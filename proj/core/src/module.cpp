#include "homext/module.hpp"

#include <random>

namespace homext {

Mat ModuleRep::act(const Vec& element) const {
  if (!algebra) throw Error("module '" + name + "': algebra reference unresolved");
  if (element.size() != algebra->dim)
    throw Error("act: element length mismatch");
  const Field& f = algebra->field;
  Mat out(f, dim, dim);
  for (std::size_t t = 0; t < algebra->dim; ++t) {
    if (element[t].is_zero()) continue;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        const Scalar& e = action[t].at(r, c);
        if (e.is_zero()) continue;
        out.at(r, c) = f.add(out.at(r, c), f.mul(element[t], e));
      }
  }
  return out;
}

ValidationReport validate_module(const ModuleRep& m) {
  if (!m.algebra) throw Error("module '" + m.name + "': algebra reference unresolved");
  const AlgebraPresentation& a = *m.algebra;
  if (m.action.size() != a.dim)
    throw Error("module '" + m.name + "': expected " + std::to_string(a.dim) +
                " action matrices, got " + std::to_string(m.action.size()));
  for (const Mat& mat : m.action)
    if (mat.rows != m.dim || mat.cols != m.dim)
      throw Error("module '" + m.name + "': action matrix shape mismatch");

  ValidationReport report;
  auto fail = [&](std::string axiom, std::string witness) {
    report.ok = false;
    report.violations.push_back({std::move(axiom), std::move(witness)});
  };

  if (m.action[a.unit_index] != Mat::identity(a.field, m.dim))
    fail("unit acts as identity", a.basis_names[a.unit_index]);

  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Mat lhs = mul(m.action[i], m.action[j]);
      Mat rhs = m.act(a.basis_product(i, j));
      if (!(lhs == rhs))
        fail("structure constants respected",
             "(" + a.basis_names[i] + ", " + a.basis_names[j] + ")");
    }
  return report;
}

ModuleRep free_module(AlgebraPtr a, std::size_t rank) {
  if (!a) throw Error("free_module: algebra reference unresolved");
  const std::size_t d = a->dim;
  ModuleRep m;
  m.name = rank == 1 ? "A" : "A^" + std::to_string(rank);
  m.algebra = a;
  m.dim = rank * d;
  const Field& f = a->field;
  for (std::size_t i = 0; i < d; ++i) {
    Mat reg = a->left_mult_matrix(i);
    Mat block(f, m.dim, m.dim);
    for (std::size_t s = 0; s < rank; ++s)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          block.at(s * d + r, s * d + c) = reg.at(r, c);
    m.action.push_back(std::move(block));
  }
  return m;
}

ModuleRep direct_sum(const ModuleRep& m, const ModuleRep& n) {
  if (!m.algebra || !n.algebra) throw Error("direct_sum: algebra reference unresolved");
  if (!(*m.algebra == *n.algebra))
    throw Error("direct_sum: modules live over different algebras");
  ModuleRep s;
  s.name = "(" + m.name + " + " + n.name + ")";
  s.algebra = m.algebra;
  s.dim = m.dim + n.dim;
  const Field& f = m.algebra->field;
  for (std::size_t i = 0; i < m.algebra->dim; ++i) {
    Mat block(f, s.dim, s.dim);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c)
        block.at(r, c) = m.action[i].at(r, c);
    for (std::size_t r = 0; r < n.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c)
        block.at(m.dim + r, m.dim + c) = n.action[i].at(r, c);
    s.action.push_back(std::move(block));
  }
  return s;
}

ModuleRep cyclic_quotient(AlgebraPtr a, const std::vector<Vec>& generators,
                          std::string name) {
  if (!a) throw Error("cyclic_quotient: algebra reference unresolved");
  const std::size_t d = a->dim;
  const Field& f = a->field;

  // left ideal = span{ e_i * g }, closed because basis products are
  // linear combinations of basis elements
  SpanTracker ideal(f, d);
  for (const Vec& g : generators) {
    if (g.size() != d) throw Error("cyclic_quotient: generator length mismatch");
    for (std::size_t i = 0; i < d; ++i) {
      Vec ei(d, f.zero());
      ei[i] = f.one();
      ideal.add(a->multiply(ei, g));
    }
  }

  std::vector<std::size_t> comp = complement_indices(ideal);
  const std::size_t qdim = comp.size();

  ModuleRep q;
  if (name.empty()) {
    if (generators.empty()) {
      name = "A";
    } else {
      name = "A/(";
      for (std::size_t g = 0; g < generators.size(); ++g)
        name += (g ? ", " : "") + a->format_element(generators[g]);
      name += ")";
    }
  }
  q.name = std::move(name);
  q.algebra = a;
  q.dim = qdim;

  // P = [ideal basis | complement basis]; the quotient coordinates of v
  // are the complement block of P^{-1} v.
  std::vector<Vec> pcols = ideal.rows();
  for (std::size_t j : comp) {
    Vec e(d, f.zero());
    e[j] = f.one();
    pcols.push_back(std::move(e));
  }
  Mat P = from_columns(f, d, pcols);
  const std::size_t ideal_rank = ideal.rank();

  for (std::size_t i = 0; i < a->dim; ++i) {
    Mat rhs(f, d, qdim);
    for (std::size_t u = 0; u < qdim; ++u) {
      Vec e(d, f.zero());
      e[comp[u]] = f.one();
      Vec ei(d, f.zero());
      ei[i] = f.one();
      rhs.set_col(u, a->multiply(ei, e));
    }
    Mat z = solve_full_rank(P, rhs);
    Mat act(f, qdim, qdim);
    for (std::size_t r = 0; r < qdim; ++r)
      for (std::size_t c = 0; c < qdim; ++c)
        act.at(r, c) = z.at(ideal_rank + r, c);
    q.action.push_back(std::move(act));
  }
  return q;
}

HomBasis hom_basis(const ModuleRep& m, const ModuleRep& n) {
  if (!m.algebra || !n.algebra) throw Error("hom_basis: algebra reference unresolved");
  if (!(*m.algebra == *n.algebra))
    throw Error("hom_basis: modules live over different algebras");
  const Field& f = m.algebra->field;
  const std::size_t dm = m.dim, dn = n.dim, da = m.algebra->dim;

  // unknowns phi[r][c] flattened as r*dm + c; equations
  // (phi * Am_i - An_i * phi)[r][c] = 0
  Mat sys(f, da * dn * dm, dn * dm);
  std::size_t row = 0;
  for (std::size_t i = 0; i < da; ++i) {
    const Mat& am = m.action[i];
    const Mat& an = n.action[i];
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) {
        for (std::size_t s = 0; s < dm; ++s) {
          const Scalar& a_sc = am.at(s, c);
          if (!a_sc.is_zero())
            sys.at(row, r * dm + s) = f.add(sys.at(row, r * dm + s), a_sc);
        }
        for (std::size_t s = 0; s < dn; ++s) {
          const Scalar& a_rs = an.at(r, s);
          if (!a_rs.is_zero())
            sys.at(row, s * dm + c) = f.sub(sys.at(row, s * dm + c), a_rs);
        }
        ++row;
      }
  }

  HomBasis hb;
  hb.source_dim = dm;
  hb.target_dim = dn;
  for (const Vec& v : nullspace_basis(sys)) {
    Mat phi(f, dn, dm);
    for (std::size_t r = 0; r < dn; ++r)
      for (std::size_t c = 0; c < dm; ++c) phi.at(r, c) = v[r * dm + c];
    hb.basis.push_back(std::move(phi));
  }
  return hb;
}

ModuleRep dual(const ModuleRep& m) {
  if (!m.algebra) throw Error("dual: algebra reference unresolved");
  ModuleRep d;
  if (m.name.size() >= 3 && m.name.starts_with("D(") && m.name.ends_with(")"))
    d.name = m.name.substr(2, m.name.size() - 3);
  else
    d.name = "D(" + m.name + ")";
  d.algebra = std::make_shared<AlgebraPresentation>(opposite(*m.algebra));
  d.dim = m.dim;
  for (const Mat& a : m.action) d.action.push_back(transpose(a));
  return d;
}

bool verify_iso_certificate(const ModuleRep& m, const ModuleRep& n,
                            const IsoCertificate& cert) {
  if (cert.map.rows != n.dim || cert.map.cols != m.dim) return false;
  if (!is_invertible(cert.map)) return false;
  for (std::size_t i = 0; i < m.algebra->dim; ++i)
    if (!(mul(cert.map, m.action[i]) == mul(n.action[i], cert.map))) return false;
  return true;
}

std::optional<IsoCertificate> is_isomorphic(const ModuleRep& m, const ModuleRep& n,
                                            std::uint64_t seed, unsigned trials) {
  if (!m.algebra || !n.algebra)
    throw Error("is_isomorphic: algebra reference unresolved");
  if (!(*m.algebra == *n.algebra))
    throw Error("is_isomorphic: modules live over different algebras");
  const Field& f = m.algebra->field;

  if (m.dim == n.dim && m.action == n.action)
    return IsoCertificate{Mat::identity(f, m.dim), seed};
  if (m.dim != n.dim) return std::nullopt;
  if (m.dim == 0) return IsoCertificate{Mat(f, 0, 0), seed};

  HomBasis fwd = hom_basis(m, n);
  if (fwd.basis.empty()) return std::nullopt;
  HomBasis bwd = hom_basis(n, m);
  if (bwd.basis.size() != fwd.basis.size()) return std::nullopt;

  std::mt19937_64 rng(seed);
  for (unsigned t = 1; t <= trials; ++t) {
    Mat phi(f, n.dim, m.dim);
    for (const Mat& b : fwd.basis) {
      // coefficients from the expanding range {0..t}
      long c = static_cast<long>(rng() % (static_cast<std::uint64_t>(t) + 1));
      if (c == 0) continue;
      Scalar cs = f.from_int(c);
      for (std::size_t r = 0; r < phi.rows; ++r)
        for (std::size_t col = 0; col < phi.cols; ++col)
          phi.at(r, col) = f.add(phi.at(r, col), f.mul(cs, b.at(r, col)));
    }
    if (is_invertible(phi)) return IsoCertificate{std::move(phi), seed};
  }
  return std::nullopt;
}

}  // namespace homext
