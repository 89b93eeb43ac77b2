#ifndef GHWLAB_GHW_HPP
#define GHWLAB_GHW_HPP

#include "ghwlab/code.hpp"
#include "ghwlab/defining_sets.hpp"
#include "ghwlab/fq_linalg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ghwlab {

struct SearchOptions {
  unsigned threads = 1;
  /// Largest number of subspaces a single oracle stratum may enumerate.
  std::uint64_t budget = kDefaultBudget;
};

struct OracleResult {
  std::int64_t value = 0;
  Subspace witness = Subspace::zero(0, 2);
  std::uint64_t witness_index = 0;
};

/**
 * d_r as the minimum support over all r-dimensional subcodes. Subcodes are
 * enumerated as r-dimensional subspaces of F_q^{code_dim} mapped through the
 * canonical code basis, so messages are taken modulo the kernel space.
 * The witness lives in F_q^{code_dim}.
 */
OracleResult ghw_support_oracle(const CodeInstance& code, int r, const SearchOptions& opts = {});

/// |D ∩ H^⊥| by testing each point of D against the canonical trace dual of H.
std::int64_t dual_intersection_count(const DefiningSet& d, const Subspace& h);

/**
 * d_r = |D| - max |D ∩ H^⊥| over r-dimensional H of the flattened ambient with
 * H ∩ K = {0}. Ties resolve to the first H in enumeration order.
 */
OracleResult ghw_dual_oracle(const DefiningSet& d, const Subspace& k, int r, const SearchOptions& opts = {});

/// Closed forms. Exact integer arithmetic; ParameterError on invalid input.
std::int64_t theorem1_formula(int q, int m, int k, int h, int r);
std::int64_t theorem2_formula(int q, int m, int s, int k, int l, int r);
std::int64_t theorem3_formula(int m, int r);

struct FormulaPiece {
  int r_min = 0;
  int r_max = 0;
  std::string expression;
};

/// Piecewise closed-form hierarchy for a parameter point; pieces cover 1..top.
struct ClosedFormSpec {
  int class_id = 0;
  ClassParams params;
  std::vector<FormulaPiece> pieces;

  int top() const;
  std::int64_t evaluate(int r) const;
};

struct FormulaAvailability {
  std::optional<ClosedFormSpec> spec;
  std::string reason;  // why no closed form applies, when spec is empty
};

FormulaAvailability closed_form_for(const DefiningSet& d);

/**
 * Character-sum value of |D ∩ H^⊥| for the butterfly set over F_{2^m}:
 * (2^{2m} + 2^m S - 2^{2m} [(1,1) in H]) / 2^{r+2}, where
 * S = sum over (a, b) in H of (-1)^{Tr(b(a+1))} - (-1)^{Tr(a(b+1))}.
 */
std::int64_t butterfly_charsum_intersection(const Subspace& h, int m);

/// Precomputed per-point trace data over F_{2^m}^2, indexed by the flattened
/// coordinate vector read as a binary number (bit i = coordinate i).
class ButterflyTables {
 public:
  explicit ButterflyTables(int m);

  int m() const noexcept { return m_; }
  /// (-1)^{Tr(b(a+1))} - (-1)^{Tr(a(b+1))} in {-2, 0, 2}.
  int difference(std::uint32_t point) const { return diff_[point]; }
  /// True iff (Tr(b(a+1)), Tr(a(b+1))) == (0, 1).
  bool pattern01(std::uint32_t point) const { return pattern01_[point]; }
  std::uint32_t one_one() const noexcept { return one_one_; }

  /// Summed difference, pattern-(0,1) count and (1,1) membership over span(basis).
  struct SpanStats {
    std::int64_t difference_sum = 0;
    std::int64_t pattern01_count = 0;
    bool contains_one_one = false;
  };
  SpanStats span_stats(const FqMatrix& basis) const;

  std::int64_t charsum(const FqMatrix& basis) const;

 private:
  int m_;
  std::vector<int> diff_;
  std::vector<bool> pattern01_;
  std::uint32_t one_one_;
};

struct LemmaCheck {
  std::string name;
  std::string description;
  std::uint64_t cases = 0;
  std::vector<std::string> violations;
  std::string witness;
  bool passed() const { return violations.empty(); }
};

struct LemmaReport {
  std::vector<LemmaCheck> checks;
  bool passed() const;
};

/// Exhaustive structural checks for the defining set's class (none for custom
/// sets or non-butterfly patterns).
LemmaReport lemma_checks(const DefiningSet& d, const SearchOptions& opts = {});

struct Methods {
  bool support = false;
  bool dual = false;
  bool formula = false;
  bool any() const { return support || dual || formula; }
  static Methods all() { return {true, true, true}; }
};

/// Estimated oracle effort: subspaces enumerated and point tests performed.
struct OracleCost {
  std::uint64_t dual_subspaces = 0;
  std::uint64_t dual_tests = 0;
  std::uint64_t support_subspaces = 0;
  std::uint64_t support_tests = 0;
  std::uint64_t tests(const Methods& m) const {
    return (m.dual ? dual_tests : 0) + (m.support ? support_tests : 0);
  }
};

OracleCost oracle_cost(const DefiningSet& d, int code_dim);

/// Hierarchy values stated for known parameter points, used as golden checks.
struct ReferenceExample {
  std::string name;
  int length = 0;
  int dim = 0;
  int distance = 0;
  std::vector<std::int64_t> hierarchy;  // empty: parameters are flagged, no values to compare
  std::string note;
};

std::optional<ReferenceExample> reference_example(const DefiningSet& d);

struct HierarchyRow {
  int r = 0;
  std::optional<std::int64_t> d_support;
  std::optional<std::int64_t> d_dual;
  std::optional<std::int64_t> d_formula;
  std::optional<std::string> witness;          // dual-oracle optimum H
  std::optional<std::string> witness_support;  // support-oracle optimum, code coordinates
  bool agree = true;

  std::optional<std::int64_t> value() const;
};

struct HierarchyReport {
  std::shared_ptr<const DefiningSet> defining_set;
  int length = 0;
  int message_dim = 0;
  int dim = 0;
  int kernel_dim = 0;
  Methods methods;
  std::string formula_status;  // "available" or the reason it is not
  std::vector<HierarchyRow> rows;
  bool monotone = true;
  bool singleton = true;
  bool full_support = true;
  bool full_support_required = false;
  std::optional<LemmaReport> lemmas;
  std::optional<ReferenceExample> reference;
  bool reference_match = true;
  std::vector<std::string> notes;
  std::map<std::string, double> timings_ms;

  std::vector<std::int64_t> hierarchy() const;
  bool failed() const;
};

struct VerifyOptions {
  Methods methods = Methods::all();
  SearchOptions search;
  bool lemmas = false;
};

HierarchyReport verify_hierarchy(const DefiningSet& d, const VerifyOptions& opts);

}  // namespace ghwlab

#endif  // GHWLAB_GHW_HPP
