#include "ghwlab/code.hpp"
#include "naive.hpp"

#include <doctest.h>

using namespace ghwlab;

namespace {

WeightDistribution naive_distribution(const FqMatrix& gen, int q) {
  WeightDistribution wd;
  for (const auto& msg : naive::all_vectors(static_cast<int>(gen.rows()), q)) {
    FqVector c = gen.transpose() * msg;
    int w = 0;
    for (auto x : c) w += x % q != 0 ? 1 : 0;
    ++wd[w];
  }
  return wd;
}

}  // namespace

TEST_CASE("code parameters at the example points") {
  struct Row {
    DefiningSet d;
    int n, k, dist;
  };
  const std::vector<Row> rows{
      {class2_build(2, 3, 1, 2, 1), 12, 5, 4}, {class3_build(2), 4, 4, 1},      {class1_build(2, 4, 2, 0), 12, 4, 6},
      {class1_build(3, 3, 1, 2), 18, 3, 12},   {class3_build(3), 16, 6, 6},     {class2_build(3, 2, 1, 2, 1), 36, 4, 18},
      {class2_build(2, 2, 1, 2, 1), 4, 3, 2},  {class1_build(3, 4, 2, 2), 54, 4, 36},
  };
  for (const auto& row : rows) {
    CAPTURE(row.d.label());
    const CodeInstance c = build_code(row.d);
    CHECK(c.length == row.n);
    CHECK(c.code_dim == row.k);
    CHECK(min_distance(c) == row.dist);
  }
}

TEST_CASE("generator rows are direct trace evaluations") {
  for (const auto& d : {class1_build(3, 3, 1, 2), class2_build(2, 3, 1, 2, 1), class3_build(3)}) {
    const CodeInstance c = build_code(d);
    CHECK(c.generator == naive::generator(d));
    CHECK(c.code_dim == naive::code_rank(c.generator, c.q));
    CHECK(c.code_basis.rows() == c.code_dim);
  }
}

TEST_CASE("weight distribution matches message enumeration and is thread-independent") {
  for (const auto& d : {class1_build(3, 3, 1, 2), class2_build(2, 2, 1, 2, 1), class3_variant_build(3, {0, 0})}) {
    const CodeInstance c = build_code(d);
    const auto naive_wd = naive_distribution(c.generator, c.q);
    // Message enumeration counts each codeword q^{dim K} times.
    const auto mult = static_cast<std::uint64_t>(ipow(c.q, c.message_dim - c.code_dim));
    WeightDistribution scaled;
    for (const auto& [w, n] : naive_wd) scaled[w] = n / mult;
    CHECK(weight_distribution(c) == scaled);
    CHECK(weight_distribution(c, kDefaultBudget, 3) == scaled);
    std::uint64_t total = 0;
    for (const auto& [w, n] : scaled) total += n;
    CHECK(total == static_cast<std::uint64_t>(ipow(c.q, c.code_dim)));
  }
}

TEST_CASE("kernel space is nontrivial only where codewords collapse") {
  CHECK(kernel_space(class3_build(3)).dim() == 0);
  CHECK(kernel_space(class1_build(3, 3, 1, 2)).dim() == 0);
  const DefiningSet v = class3_variant_build(3, {0, 0});
  CHECK(kernel_space(v).dim() == build_code(v).message_dim - build_code(v).code_dim);
}

TEST_CASE("budget is enforced") {
  const CodeInstance c = build_code(class1_build(3, 4, 2, 2));
  CHECK_THROWS_AS(weight_distribution(c, 10), BudgetExceeded);
  try {
    weight_distribution(c, 10);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 81);
    CHECK(e.budget() == 10);
  }
}

TEST_CASE("empty defining sets are rejected") {
  const FieldPtr f = make_field(2, 2);
  CHECK_THROWS_AS(build_code(custom_univariate(f, {})), ParameterError);
}
