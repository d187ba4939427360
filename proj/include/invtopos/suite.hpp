#ifndef INVTOPOS_SUITE_HPP_
#define INVTOPOS_SUITE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace invtopos::suite {

struct Options {
  std::uint64_t seed = 7;
  int random_instances = 120;  // criterion 2 requires at least 100
  bool fixtures_only = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  int checks = 0;
  std::vector<std::string> failures;
};

struct Report {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

Report run(Options const& options);

}  // namespace invtopos::suite

#endif  // INVTOPOS_SUITE_HPP_
