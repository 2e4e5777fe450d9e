#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "resonax/mc.hpp"
#include "resonax/weights.hpp"

namespace resonax::acceptance {

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = kDefaultSampleCount;
  ParallelOptions parallel;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  double time_limit = 0;  // seconds; pass requires seconds < time_limit
  std::string detail;
};

/// Deterministic random weight matrices with n <= max_n, r <= max_r, entries in [-bound, bound].
std::vector<WeightMatrix> random_matrices(std::uint64_t seed, std::size_t count, std::size_t max_n,
                                          std::size_t max_r, std::int64_t bound, bool admissible_only);

CriterionResult remark_linear_23();
CriterionResult quasi_circular_consistency();
CriterionResult shear_family();
CriterionResult oracle_equivalence();
CriterionResult certificate_soundness();
CriterionResult cartan_property();
CriterionResult mc_calibration(const Options& options);
CriterionResult change_of_variables(const Options& options);

std::vector<CriterionResult> run_all(const Options& options = {},
                                     const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_line(const CriterionResult& result);

}  // namespace resonax::acceptance
