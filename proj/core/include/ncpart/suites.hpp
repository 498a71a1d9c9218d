#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ncpart/category.hpp"

namespace ncpart {

struct SuiteOptions {
  std::string lambda = "Z2";
  std::string gamma = "free:1";
  int max_kl = 2;  // bound on k, l, m for composition and axioms
  int max_l = 4;   // middle bound for counting, with k, m <= 1
  std::uint64_t seed = 1;
};

// First line of every verify report.
std::string suite_header(std::string_view suite, const SuiteOptions& options);

// Master composition law and preservation of both colour conditions, one line per shape.
Report composition_suite(const SuiteOptions& options);
// Middle-solution counts against brute force, one line per shape.
Report counting_suite(const SuiteOptions& options);

// composition | counting | axioms | fixtures | all. Throws UnknownSpec on other names.
Report run_suite(std::string_view suite, const SuiteOptions& options);

}  // namespace ncpart
