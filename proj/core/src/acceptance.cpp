#include "paulispec/acceptance.hpp"

namespace paulispec {
namespace accept {

std::vector<Criterion> all_criteria(int) { return {}; }

std::vector<CriterionResult> run_criteria(const std::vector<int>&, int, bool) {
  return {};
}

std::string results_to_json(const std::vector<CriterionResult>&) { return "{}"; }
std::string results_to_junit(const std::vector<CriterionResult>&) { return ""; }

}  // namespace accept
}  // namespace paulispec
