#ifndef HOMEXT_WORKSPACE_HPP
#define HOMEXT_WORKSPACE_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "homext/module.hpp"

namespace homext {

struct WorkspaceConfig {
  std::size_t default_cutoff = 20;
  std::uint64_t default_seed = 0;
  std::size_t enumeration_limit = 5000;
  std::string output_format = "text";
};

/// Named algebras and modules loaded from JSON documents. Every module's
/// algebra reference resolves within the workspace.
struct Workspace {
  std::map<std::string, AlgebraPtr> algebras;
  std::map<std::string, ModuleRep> modules;
  WorkspaceConfig config;

  AlgebraPtr algebra(const std::string& name) const;
  const ModuleRep& module(const std::string& name) const;
};

/// Loads the given files (and directories, *.json in filename order).
/// Algebra documents carry a "table" key, module documents an "algebra"
/// reference with either explicit "action" matrices or "cyclic"
/// generators. Everything is validated; duplicate names, unresolved
/// references and out-of-field scalars are errors with file context.
Workspace parse_workspace(const std::vector<std::filesystem::path>& paths);

/// Structural parse of a single document (no axiom validation).
AlgebraPresentation parse_algebra_document(const std::string& json_text,
                                           const std::string& context);
ModuleRep parse_module_document(const std::string& json_text,
                                const std::string& context,
                                const Workspace& resolve_in);

std::string algebra_to_json_text(const AlgebraPresentation& a);
std::string module_to_json_text(const ModuleRep& m);

}  // namespace homext

#endif
