#include "ghwlab/code.hpp"

#include "ghwlab/parallel.hpp"

namespace ghwlab {

namespace {

std::vector<FieldElement> power_basis(const FieldPtr& f) {
  std::vector<FieldElement> basis;
  for (int i = 0; i < f->degree(); ++i) {
    FqVector e = FqVector::Zero(f->degree());
    e(i) = 1;
    basis.emplace_back(f, std::move(e));
  }
  return basis;
}

}  // namespace

FqMatrix generator_matrix(const DefiningSet& d) {
  const int m = d.first_field()->degree();
  const auto n = static_cast<Eigen::Index>(d.size());
  FqMatrix g(d.ambient_dim(), n);
  const auto u = power_basis(d.first_field());
  std::vector<FieldElement> v;
  if (d.bivariate()) v = power_basis(d.second_field());
  for (Eigen::Index col = 0; col < n; ++col) {
    const DefiningPoint& p = d.points()[static_cast<std::size_t>(col)];
    for (int i = 0; i < m; ++i) g(i, col) = trace_to_prime(u[static_cast<std::size_t>(i)] * p.x);
    for (std::size_t j = 0; j < v.size(); ++j) {
      g(m + static_cast<Eigen::Index>(j), col) = trace_to_prime(v[j] * *p.y);
    }
  }
  return g;
}

CodeInstance build_code(const DefiningSet& d) {
  if (d.size() == 0) throw ParameterError("defining set is empty");
  CodeInstance c;
  c.defining_set = std::make_shared<const DefiningSet>(d);
  c.q = d.q();
  c.length = static_cast<int>(d.size());
  c.message_dim = d.ambient_dim();
  c.generator = generator_matrix(d);
  Rref r = rref(c.generator, c.q);
  c.code_dim = r.rank;
  c.code_basis = r.matrix.topRows(r.rank);
  return c;
}

Subspace kernel_space(const DefiningSet& d) {
  if (d.size() == 0) return Subspace::full(d.ambient_dim(), d.q());
  return kernel(generator_matrix(d).transpose(), d.q());
}

WeightDistribution weight_distribution(const CodeInstance& c, std::uint64_t budget, unsigned threads) {
  const std::int64_t total = ipow(c.q, c.code_dim);
  if (static_cast<std::uint64_t>(total) > budget) {
    throw BudgetExceeded("weight distribution needs " + std::to_string(total) + " codewords, budget is " +
                             std::to_string(budget),
                         static_cast<std::uint64_t>(total), budget);
  }
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, static_cast<std::uint64_t>(total)));
  std::vector<std::vector<std::uint64_t>> tallies(chunks, std::vector<std::uint64_t>(static_cast<std::size_t>(c.length) + 1, 0));
  const int q = c.q;
  const int k = c.code_dim;
  parallel_chunks(chunks, threads, [&](std::uint64_t chunk) {
    const auto begin = static_cast<std::uint64_t>(total) * chunk / chunks;
    const auto end = static_cast<std::uint64_t>(total) * (chunk + 1) / chunks;
    std::vector<int> digits(static_cast<std::size_t>(k));
    std::uint64_t rest = begin;
    FqRow word = FqRow::Zero(c.length);
    for (int i = 0; i < k; ++i) {
      digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
      word += digits[static_cast<std::size_t>(i)] * c.code_basis.row(i);
    }
    word = mod_q(word, q);
    auto& tally = tallies[chunk];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      ++tally[static_cast<std::size_t>((word.array() != 0).count())];
      for (int i = 0; i < k; ++i) {
        word = mod_q(word + c.code_basis.row(i), q);
        if (++digits[static_cast<std::size_t>(i)] < q) break;
        digits[static_cast<std::size_t>(i)] = 0;
      }
    }
  });
  WeightDistribution wd;
  for (const auto& t : tallies) {
    for (std::size_t w = 0; w < t.size(); ++w) {
      if (t[w] != 0) wd[static_cast<int>(w)] += t[w];
    }
  }
  return wd;
}

int min_distance(const WeightDistribution& wd) {
  for (const auto& [w, count] : wd) {
    if (w > 0 && count > 0) return w;
  }
  return 0;
}

int min_distance(const CodeInstance& c, std::uint64_t budget, unsigned threads) {
  return min_distance(weight_distribution(c, budget, threads));
}

}  // namespace ghwlab
