#ifndef GHWLAB_CODE_HPP
#define GHWLAB_CODE_HPP

#include "ghwlab/defining_sets.hpp"
#include "ghwlab/fq_linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>

namespace ghwlab {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/**
 * The trace code C_D. Row i of the generator is the codeword of the i-th
 * power-basis message: Tr(e_i d) for univariate sets, and for bivariate sets
 * Tr_1^m(u_i x) on the first m rows followed by Tr_1^k(v_j y) on the next k.
 */
struct CodeInstance {
  std::shared_ptr<const DefiningSet> defining_set;
  int q = 0;
  int length = 0;
  int message_dim = 0;
  int code_dim = 0;
  FqMatrix generator;   // message_dim x length
  FqMatrix code_basis;  // code_dim x length, canonical RREF rows of the generator
};

/// Generator evaluated column-per-point in D's order, by field multiplication.
FqMatrix generator_matrix(const DefiningSet& d);

CodeInstance build_code(const DefiningSet& d);

/// Messages whose codeword vanishes identically, as a subspace of the ambient.
Subspace kernel_space(const DefiningSet& d);

using WeightDistribution = std::map<int, std::uint64_t>;

/// Tally over all q^code_dim codewords. Throws BudgetExceeded past `budget`.
WeightDistribution weight_distribution(const CodeInstance& c, std::uint64_t budget = kDefaultBudget,
                                       unsigned threads = 1);

/// Smallest nonzero codeword weight (0 for the zero code).
int min_distance(const CodeInstance& c, std::uint64_t budget = kDefaultBudget, unsigned threads = 1);

int min_distance(const WeightDistribution& wd);

}  // namespace ghwlab

#endif  // GHWLAB_CODE_HPP
