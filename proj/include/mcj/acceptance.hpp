#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mcj {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  bool quick = false;  // skip the multivariate quadrature criteria (2 and 4)
  int threads = 0;
  std::uint64_t seed = 20240611;
};

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& opt, const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace mcj
