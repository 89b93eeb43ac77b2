// Property suites shared by the unit tests and the acceptance binary.
#ifndef GHWLAB_TESTS_PROPERTIES_HPP
#define GHWLAB_TESTS_PROPERTIES_HPP

#include "ghwlab/defining_sets.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;  // first failure, if any
};

/// The parameter points of the example reproductions.
std::vector<ghwlab::DefiningSet> example_sets();

std::vector<Result> oracle_equivalence();
Result monotone_and_singleton();
Result charsum_exhaustive(int m);
Result charsum_sampled(int m, std::uint64_t samples, std::uint32_t seed);
std::vector<Result> lemma_suite();
std::vector<Result> defining_set_identities();
Result theta_independence();
Result variant_symmetry();
std::vector<Result> linear_algebra(std::uint32_t seed);

/// Everything above, in a fixed order.
std::vector<Result> all(std::uint32_t seed);

}  // namespace props

#endif  // GHWLAB_TESTS_PROPERTIES_HPP
