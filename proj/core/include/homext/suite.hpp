#ifndef HOMEXT_SUITE_HPP
#define HOMEXT_SUITE_HPP

#include <string>
#include <vector>

namespace homext {

struct SuiteCheck {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// The fixture acceptance suite: builds the reference algebras and
/// modules in-process and exercises every check at its stated tolerance
/// (exact arithmetic, fixed seeds). Deterministic.
std::vector<SuiteCheck> run_acceptance_suite();

}  // namespace homext

#endif
