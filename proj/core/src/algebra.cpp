#include "homext/algebra.hpp"

#include <algorithm>
#include <set>

namespace homext {

Vec AlgebraPresentation::basis_product(std::size_t i, std::size_t j) const {
  Vec out(dim, field.zero());
  auto it = table.find({i, j});
  if (it == table.end()) return out;
  for (const auto& [k, c] : it->second) out[k] = field.add(out[k], c);
  return out;
}

Vec AlgebraPresentation::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != dim || v.size() != dim)
    throw Error("multiply: coordinate length mismatch");
  Vec out(dim, field.zero());
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (v[j].is_zero()) continue;
      Scalar uv = field.mul(u[i], v[j]);
      auto it = table.find({i, j});
      if (it == table.end()) continue;
      for (const auto& [k, c] : it->second)
        out[k] = field.add(out[k], field.mul(uv, c));
    }
  }
  return out;
}

Mat AlgebraPresentation::left_mult_matrix(std::size_t i) const {
  Mat m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) m.set_col(j, basis_product(i, j));
  return m;
}

bool AlgebraPresentation::is_radical_coordinate_vector(const Vec& v) const {
  std::set<std::size_t> rad(radical_indices.begin(), radical_indices.end());
  for (std::size_t k = 0; k < dim; ++k)
    if (!v[k].is_zero() && rad.find(k) == rad.end()) return false;
  return true;
}

std::string AlgebraPresentation::format_element(const Vec& v) const {
  std::string out;
  for (std::size_t k = 0; k < dim; ++k) {
    if (v[k].is_zero()) continue;
    std::string coeff = field.format(v[k]);
    if (!out.empty()) out += " + ";
    if (k == unit_index)
      out += coeff;
    else if (coeff == "1")
      out += basis_names[k];
    else
      out += coeff + "*" + basis_names[k];
  }
  return out.empty() ? "0" : out;
}

namespace {

void check_well_formed(const AlgebraPresentation& a) {
  if (a.dim == 0) throw Error("algebra '" + a.name + "': dim must be >= 1");
  if (a.basis_names.size() != a.dim)
    throw Error("algebra '" + a.name + "': basis name count != dim");
  if (a.unit_index >= a.dim)
    throw Error("algebra '" + a.name + "': unit index out of range");
  std::set<std::size_t> seen;
  for (std::size_t r : a.radical_indices) {
    if (r >= a.dim)
      throw Error("algebra '" + a.name + "': radical index out of range");
    if (!seen.insert(r).second)
      throw Error("algebra '" + a.name + "': duplicate radical index");
  }
  for (const auto& [ij, terms] : a.table) {
    if (ij.first >= a.dim || ij.second >= a.dim)
      throw Error("algebra '" + a.name + "': table index out of range");
    for (const auto& [k, c] : terms) {
      (void)c;
      if (k >= a.dim)
        throw Error("algebra '" + a.name + "': table target index out of range");
    }
  }
  if (!std::is_sorted(a.radical_indices.begin(), a.radical_indices.end()))
    throw Error("algebra '" + a.name + "': radical indices must be sorted");
}

std::vector<Vec> radical_power_basis(const AlgebraPresentation& a,
                                     const std::vector<Vec>& prev) {
  SpanTracker span(a.field, a.dim);
  for (std::size_t r : a.radical_indices) {
    Vec er(a.dim, a.field.zero());
    er[r] = a.field.one();
    for (const Vec& v : prev) span.add(a.multiply(er, v));
  }
  return span.rows();
}

}  // namespace

ValidationReport validate_algebra(const AlgebraPresentation& a) {
  check_well_formed(a);
  ValidationReport report;
  auto fail = [&](std::string axiom, std::string witness) {
    report.ok = false;
    report.violations.push_back({std::move(axiom), std::move(witness)});
  };

  const std::size_t u = a.unit_index;
  for (std::size_t i = 0; i < a.dim; ++i) {
    Vec ei(a.dim, a.field.zero());
    ei[i] = a.field.one();
    if (a.basis_product(u, i) != ei)
      fail("unit", "e_unit * " + a.basis_names[i]);
    if (a.basis_product(i, u) != ei)
      fail("unit", a.basis_names[i] + " * e_unit");
  }

  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < a.dim; ++k) {
        Vec jk = a.basis_product(j, k);
        Vec ek(a.dim, a.field.zero());
        ek[k] = a.field.one();
        Vec ei(a.dim, a.field.zero());
        ei[i] = a.field.one();
        if (a.multiply(ij, ek) != a.multiply(ei, jk)) {
          fail("associativity", "(" + a.basis_names[i] + ", " + a.basis_names[j] +
                                    ", " + a.basis_names[k] + ")");
        }
      }
    }

  if (std::find(a.radical_indices.begin(), a.radical_indices.end(), u) !=
      a.radical_indices.end())
    fail("radical", "unit element declared radical");

  for (std::size_t r : a.radical_indices) {
    for (std::size_t i = 0; i < a.dim; ++i) {
      if (!a.is_radical_coordinate_vector(a.basis_product(i, r)))
        fail("radical ideal", a.basis_names[i] + " * " + a.basis_names[r]);
      if (!a.is_radical_coordinate_vector(a.basis_product(r, i)))
        fail("radical ideal", a.basis_names[r] + " * " + a.basis_names[i]);
    }
  }

  // nilpotency: powers strictly shrink until zero
  std::vector<Vec> power;
  for (std::size_t r : a.radical_indices) {
    Vec er(a.dim, a.field.zero());
    er[r] = a.field.one();
    power.push_back(std::move(er));
  }
  std::size_t prev_rank = power.size();
  for (std::size_t t = 1; !power.empty(); ++t) {
    if (t > a.dim + 1) {
      fail("radical nilpotent", "radical power did not reach zero");
      break;
    }
    power = radical_power_basis(a, power);
    if (power.size() >= prev_rank && !power.empty()) {
      fail("radical nilpotent", "radical power stabilized nonzero");
      break;
    }
    prev_rank = power.size();
  }

  return report;
}

LocalityWitness locality(const AlgebraPresentation& a) {
  LocalityWitness w;
  w.is_local = (a.dim == 1 + a.radical_indices.size());
  std::vector<Vec> power;
  for (std::size_t r : a.radical_indices) {
    Vec er(a.dim, a.field.zero());
    er[r] = a.field.one();
    power.push_back(std::move(er));
  }
  std::size_t t = 1;  // empty radical: rad^1 = 0 already
  while (!power.empty()) {
    power = radical_power_basis(a, power);
    ++t;
    if (t > a.dim + 2) throw Error("locality: radical is not nilpotent");
  }
  w.nilpotency_index = t;
  return w;
}

AlgebraPresentation build_quantum_ci(const Field& field, const Scalar& q) {
  if (q.is_zero()) throw Error("build_quantum_ci: q must be nonzero");
  AlgebraPresentation a;
  a.field = field;
  a.name = "quantum_ci(q=" + field.format(q) + ")";
  a.dim = 4;
  a.basis_names = {"1", "x", "y", "xy"};
  a.unit_index = 0;
  a.radical_indices = {1, 2, 3};
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, Scalar c) {
    a.table[{i, j}].push_back({k, std::move(c)});
  };
  for (std::size_t i = 0; i < 4; ++i) {
    put(0, i, i, field.one());
    if (i != 0) put(i, 0, i, field.one());
  }
  put(1, 2, 3, field.one());          // x * y = xy
  put(2, 1, 3, field.inv(q));         // y * x = q^{-1} xy
  // all other radical products vanish
  return a;
}

AlgebraPresentation build_truncated_polynomial(const Field& field,
                                               const std::vector<unsigned>& exponents) {
  if (exponents.empty())
    throw Error("build_truncated_polynomial: need at least one exponent");
  for (unsigned e : exponents)
    if (e < 2) throw Error("build_truncated_polynomial: exponents must be >= 2");

  const std::size_t n = exponents.size();
  std::vector<std::string> vars;
  static const char* kShort[] = {"x", "y", "z", "w"};
  for (std::size_t i = 0; i < n; ++i)
    vars.push_back(n <= 4 ? kShort[i] : "x" + std::to_string(i + 1));

  std::size_t dim = 1;
  for (unsigned e : exponents) dim *= e;

  // first variable fastest: index = sum t_i * prod_{j<i} a_j
  auto tuple_of = [&](std::size_t idx) {
    std::vector<unsigned> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = static_cast<unsigned>(idx % exponents[i]);
      idx /= exponents[i];
    }
    return t;
  };
  auto index_of = [&](const std::vector<unsigned>& t) {
    std::size_t idx = 0, stride = 1;
    for (std::size_t i = 0; i < n; ++i) {
      idx += t[i] * stride;
      stride *= exponents[i];
    }
    return idx;
  };
  auto name_of = [&](const std::vector<unsigned>& t) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      if (t[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars[i];
      if (t[i] > 1) s += "^" + std::to_string(t[i]);
    }
    return s.empty() ? std::string("1") : s;
  };

  AlgebraPresentation a;
  a.field = field;
  a.name = "k[";
  for (std::size_t i = 0; i < n; ++i) a.name += (i ? "," : "") + vars[i];
  a.name += "]/(";
  for (std::size_t i = 0; i < n; ++i)
    a.name += (i ? "," : "") + vars[i] + "^" + std::to_string(exponents[i]);
  a.name += ")";
  a.dim = dim;
  a.unit_index = 0;
  for (std::size_t idx = 0; idx < dim; ++idx) {
    a.basis_names.push_back(name_of(tuple_of(idx)));
    if (idx != 0) a.radical_indices.push_back(idx);
  }
  for (std::size_t i = 0; i < dim; ++i) {
    auto ti = tuple_of(i);
    for (std::size_t j = 0; j < dim; ++j) {
      auto tj = tuple_of(j);
      std::vector<unsigned> sum(n);
      bool zero = false;
      for (std::size_t v = 0; v < n; ++v) {
        sum[v] = ti[v] + tj[v];
        if (sum[v] >= exponents[v]) zero = true;
      }
      if (!zero) a.table[{i, j}].push_back({index_of(sum), field.one()});
    }
  }
  return a;
}

AlgebraPresentation opposite(const AlgebraPresentation& a) {
  AlgebraPresentation op = a;
  op.table.clear();
  for (const auto& [ij, terms] : a.table) op.table[{ij.second, ij.first}] = terms;
  constexpr const char* kSuffix = "^op";
  if (op.name.size() >= 3 && op.name.ends_with(kSuffix))
    op.name.resize(op.name.size() - 3);
  else
    op.name += kSuffix;
  return op;
}

AlgebraPresentation build_base_field(const Field& field) {
  AlgebraPresentation a;
  a.field = field;
  a.name = "k";
  a.dim = 1;
  a.basis_names = {"1"};
  a.unit_index = 0;
  a.table[{0, 0}].push_back({0, field.one()});
  return a;
}

}  // namespace homext
