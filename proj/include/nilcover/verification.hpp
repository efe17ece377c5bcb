#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilcover/catalog.hpp"
#include "nilcover/clique.hpp"
#include "nilcover/pair_graph.hpp"

namespace nilcover::verification {

struct Settings {
  catalog::BuildOptions build;
  PairGraphLimits limits;
  CliqueOptions clique;
};

enum class Status { Pass, Fail, Inconclusive, Error };
std::string_view to_string(Status s);

/// Collects the outcome of the individual assertions of one check.
class Log {
 public:
  bool expect(bool ok, std::string what);
  void note(std::string what);

  bool failed() const noexcept { return failed_; }
  const std::vector<std::string>& lines() const noexcept { return lines_; }

 private:
  bool failed_ = false;
  std::vector<std::string> lines_;
};

struct Check {
  std::string id;
  std::string title;
  std::function<void(const Settings&, Log&)> run;
};

struct CheckResult {
  std::string id;
  std::string title;
  Status status = Status::Pass;
  std::vector<std::string> details;
  double seconds = 0;
};

/// Every named check in a fixed order.
const std::vector<Check>& checks();
const Check* find_check(std::string_view id);

/// Timeouts become Inconclusive, cap and construction errors become Error.
CheckResult run_check(const Check& check, const Settings& settings);
/// Runs the selected checks (all when `only` is empty); results keep the
/// order of checks(). Throws std::invalid_argument on an unknown id.
std::vector<CheckResult> run_checks(std::span<const std::string> only, const Settings& settings, bool parallel = false);

/// Groups used by the invariant suites.
std::vector<std::string> property_catalog();

/// Least d > 1 with d ≡ 1 (mod p) dividing order / p-part: a lower bound for
/// the number of Sylow p-subgroups of a group of that order with no normal
/// Sylow p-subgroup.
std::size_t least_nontrivial_sylow_count(std::size_t order, unsigned p);

}  // namespace nilcover::verification
