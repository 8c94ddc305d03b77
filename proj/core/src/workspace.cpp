#include "homext/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace homext {

namespace {

using ojson = nlohmann::ordered_json;

Field field_from_json(const ojson& j, const std::string& ctx) {
  if (!j.is_object() || !j.contains("kind"))
    throw Error(ctx + ": field must be an object with a 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field(FieldSpec::rational());
  if (kind == "prime") {
    if (!j.contains("p")) throw Error(ctx + ": prime field needs 'p'");
    return Field(FieldSpec::prime(j.at("p").get<std::uint64_t>()));
  }
  throw Error(ctx + ": unknown field kind '" + kind + "'");
}

ojson field_to_json(const Field& f) {
  ojson j;
  if (f.spec().kind == FieldKind::Rational) {
    j["kind"] = "rational";
  } else {
    j["kind"] = "prime";
    j["p"] = f.spec().p;
  }
  return j;
}

Scalar scalar_from_json(const Field& f, const ojson& j, const std::string& ctx) {
  try {
    if (j.is_number_integer()) return f.from_int(j.get<long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ctx + ": " + e.what());
  }
  throw Error(ctx + ": scalar must be a string or integer");
}

Vec vec_from_json(const Field& f, const ojson& j, std::size_t len,
                  const std::string& ctx) {
  if (!j.is_array() || j.size() != len)
    throw Error(ctx + ": expected an array of " + std::to_string(len) + " scalars");
  Vec v;
  for (const auto& e : j) v.push_back(scalar_from_json(f, e, ctx));
  return v;
}

ojson parse_json(const std::string& text, const std::string& ctx) {
  ojson j = ojson::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ctx + ": malformed JSON");
  return j;
}

}  // namespace

AlgebraPtr Workspace::algebra(const std::string& name) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw Error("unknown algebra '" + name + "'");
  return it->second;
}

const ModuleRep& Workspace::module(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw Error("unknown module '" + name + "'");
  return it->second;
}

AlgebraPresentation parse_algebra_document(const std::string& json_text,
                                           const std::string& context) {
  ojson j = parse_json(json_text, context);
  AlgebraPresentation a;
  try {
    a.name = j.at("name").get<std::string>();
    a.field = field_from_json(j.at("field"), context);
    a.dim = j.at("dim").get<std::size_t>();
    a.basis_names = j.at("basis").get<std::vector<std::string>>();
    a.unit_index = j.at("unit").get<std::size_t>();
    a.radical_indices = j.at("radical").get<std::vector<std::size_t>>();
    std::sort(a.radical_indices.begin(), a.radical_indices.end());
    for (const auto& entry : j.at("table")) {
      if (!entry.is_array() || entry.size() != 3)
        throw Error(context + ": table entries are [i, j, [[k, scalar], ...]]");
      std::size_t bi = entry[0].get<std::size_t>();
      std::size_t bj = entry[1].get<std::size_t>();
      std::vector<std::pair<std::size_t, Scalar>> terms;
      for (const auto& term : entry[2]) {
        if (!term.is_array() || term.size() != 2)
          throw Error(context + ": table terms are [k, scalar]");
        terms.emplace_back(term[0].get<std::size_t>(),
                           scalar_from_json(a.field, term[1], context));
      }
      if (a.table.count({bi, bj}))
        throw Error(context + ": duplicate table entry (" + std::to_string(bi) +
                    ", " + std::to_string(bj) + ")");
      a.table[{bi, bj}] = std::move(terms);
    }
  } catch (const ojson::exception& e) {
    throw Error(context + ": " + e.what());
  }
  return a;
}

ModuleRep parse_module_document(const std::string& json_text,
                                const std::string& context,
                                const Workspace& resolve_in) {
  ojson j = parse_json(json_text, context);
  ModuleRep m;
  try {
    m.name = j.at("name").get<std::string>();
    std::string algebra_name = j.at("algebra").get<std::string>();
    auto it = resolve_in.algebras.find(algebra_name);
    if (it == resolve_in.algebras.end())
      throw Error(context + ": module '" + m.name + "' references unknown algebra '" +
                  algebra_name + "'");
    m.algebra = it->second;
    const Field& f = m.algebra->field;

    if (j.contains("cyclic")) {
      std::vector<Vec> gens;
      for (const auto& g : j.at("cyclic"))
        gens.push_back(vec_from_json(f, g, m.algebra->dim, context));
      ModuleRep q = cyclic_quotient(m.algebra, gens, m.name);
      q.name = m.name;
      return q;
    }

    m.dim = j.at("dim").get<std::size_t>();
    const auto& actions = j.at("action");
    if (!actions.is_array() || actions.size() != m.algebra->dim)
      throw Error(context + ": expected one action matrix per algebra basis element");
    for (const auto& mat_json : actions) {
      Mat mat(f, m.dim, m.dim);
      if (!mat_json.is_array() || mat_json.size() != m.dim)
        throw Error(context + ": action matrix must be " + std::to_string(m.dim) +
                    " rows");
      for (std::size_t r = 0; r < m.dim; ++r) {
        Vec row = vec_from_json(f, mat_json[r], m.dim, context);
        for (std::size_t c = 0; c < m.dim; ++c) mat.at(r, c) = row[c];
      }
      m.action.push_back(std::move(mat));
    }
  } catch (const ojson::exception& e) {
    throw Error(context + ": " + e.what());
  }
  return m;
}

std::string algebra_to_json_text(const AlgebraPresentation& a) {
  ojson j;
  j["name"] = a.name;
  j["field"] = field_to_json(a.field);
  j["dim"] = a.dim;
  j["basis"] = a.basis_names;
  j["unit"] = a.unit_index;
  j["radical"] = a.radical_indices;
  ojson table = ojson::array();
  for (const auto& [ij, terms] : a.table) {
    ojson entry = ojson::array();
    entry.push_back(ij.first);
    entry.push_back(ij.second);
    ojson jterms = ojson::array();
    for (const auto& [k, c] : terms)
      jterms.push_back(ojson::array({k, a.field.format(c)}));
    entry.push_back(jterms);
    table.push_back(entry);
  }
  j["table"] = table;
  return j.dump(2);
}

std::string module_to_json_text(const ModuleRep& m) {
  ojson j;
  j["name"] = m.name;
  j["algebra"] = m.algebra ? m.algebra->name : "";
  j["dim"] = m.dim;
  ojson actions = ojson::array();
  const Field& f = m.algebra->field;
  for (const Mat& mat : m.action) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < mat.rows; ++r) {
      ojson row = ojson::array();
      for (std::size_t c = 0; c < mat.cols; ++c) row.push_back(f.format(mat.at(r, c)));
      rows.push_back(row);
    }
    actions.push_back(rows);
  }
  j["action"] = actions;
  return j.dump(2);
}

Workspace parse_workspace(const std::vector<std::filesystem::path>& paths) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const fs::path& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<fs::path> dir_files;
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
          dir_files.push_back(entry.path());
      std::sort(dir_files.begin(), dir_files.end());
      files.insert(files.end(), dir_files.begin(), dir_files.end());
    } else if (fs::is_regular_file(p)) {
      files.push_back(p);
    } else {
      throw Error("workspace: no such file or directory: " + p.string());
    }
  }

  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    if (!in) throw Error("workspace: cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  Workspace ws;
  std::vector<std::pair<fs::path, std::string>> module_docs;
  for (const fs::path& p : files) {
    std::string text = slurp(p);
    ojson j = parse_json(text, p.string());
    if (j.contains("table")) {
      AlgebraPresentation a = parse_algebra_document(text, p.string());
      ValidationReport report = validate_algebra(a);
      if (!report.ok) {
        std::string msg = p.string() + ": algebra '" + a.name + "' fails validation:";
        for (const Violation& v : report.violations)
          msg += " [" + v.axiom + " at " + v.witness + "]";
        throw Error(msg);
      }
      if (ws.algebras.count(a.name))
        throw Error(p.string() + ": duplicate algebra name '" + a.name + "'");
      std::string name = a.name;  // the move below empties a
      ws.algebras[name] = std::make_shared<AlgebraPresentation>(std::move(a));
    } else if (j.contains("algebra")) {
      module_docs.emplace_back(p, std::move(text));
    } else {
      throw Error(p.string() + ": document is neither an algebra ('table') nor a "
                  "module ('algebra')");
    }
  }
  for (const auto& [p, text] : module_docs) {
    ModuleRep m = parse_module_document(text, p.string(), ws);
    ValidationReport report = validate_module(m);
    if (!report.ok) {
      std::string msg = p.string() + ": module '" + m.name + "' fails validation:";
      for (const Violation& v : report.violations)
        msg += " [" + v.axiom + " at " + v.witness + "]";
      throw Error(msg);
    }
    if (ws.modules.count(m.name))
      throw Error(p.string() + ": duplicate module name '" + m.name + "'");
    std::string name = m.name;
    ws.modules[name] = std::move(m);
  }
  return ws;
}

}  // namespace homext
