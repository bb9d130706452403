#pragma once

#include "posetlie/poset.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetlie {

struct HarnessOptions
{
  unsigned jobs = 1;
};

struct CriterionResult
{
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
};

/// 1..11
const std::vector<int>& criterion_ids();
std::string criterion_title(int id);
double criterion_limit(int id);

/// Runs one criterion; passes only if every check holds within the time limit.
CriterionResult run_criterion(int id, const HarnessOptions& options = {});

/// Block names accepted by `verify`: all, crowns, bipartite, length-one,
/// example20, example6, oracle, sigma, supports, algebra, properties, or a number.
/// Throws InvalidParameter.
std::vector<int> suite_criteria(std::string_view suite);
const std::vector<std::string>& suite_names();

/// Runs the block, reporting each result as it finishes.
std::vector<CriterionResult> run_suite(std::string_view suite, const HarnessOptions& options,
                                       const std::function<void(const CriterionResult&)>& report = {});

/// One line: "criterion N: PASS|FAIL  title  (t s / limit s)  detail"
std::string format_result(const CriterionResult& result);

/// Named suite posets with |B| <= max_pairs.
std::vector<std::pair<std::string, Poset>> suite_posets(std::size_t max_pairs);

} // namespace posetlie
