#include "properties.hpp"

#include "ghwlab/code.hpp"
#include "ghwlab/ghw.hpp"
#include "naive.hpp"

#include <random>
#include <set>
#include <sstream>

namespace props {

using namespace ghwlab;

namespace {

void fail(Result& r, const std::string& why) {
  if (r.passed) r.detail = why;
  r.passed = false;
}

std::vector<std::int64_t> dual_hierarchy(const DefiningSet& d) {
  VerifyOptions o;
  o.methods = Methods{false, true, false};
  return verify_hierarchy(d, o).hierarchy();
}

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Greedy theta choice scanning from the largest element down, so it differs from the default.
std::vector<FieldElement> descending_thetas(const FieldPtr& f, int k, int h) {
  std::vector<FieldElement> chosen;
  for (std::uint64_t i = f->size() - 1; i > 0 && static_cast<int>(chosen.size()) < h; --i) {
    FieldElement c = FieldElement::from_index(f, i);
    if (is_in_subfield(c, k)) continue;
    bool ok = true;
    for (const auto& t : chosen) ok = ok && !is_in_subfield(c - t, k);
    if (ok) chosen.push_back(c);
  }
  return chosen;
}

// Uniform random matrix over F_q.
FqMatrix random_rows(std::mt19937& rng, int rows, int cols, int q) {
  std::uniform_int_distribution<int> dist(0, q - 1);
  FqMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  }
  return m;
}

}  // namespace

std::vector<DefiningSet> example_sets() {
  std::vector<DefiningSet> out;
  out.push_back(class1_build(3, 3, 1, 2));
  out.push_back(class1_build(3, 4, 2, 2));
  out.push_back(class1_build(2, 4, 2, 1));
  out.push_back(class2_build(2, 3, 1, 2, 1));
  out.push_back(class2_build(3, 2, 1, 2, 1));
  out.push_back(class2_build(2, 2, 1, 2, 1));
  out.push_back(class3_build(2));
  out.push_back(class3_build(3));
  return out;
}

std::vector<Result> oracle_equivalence() {
  std::vector<Result> out;
  for (const auto& d : example_sets()) {
    Result res{"oracle equivalence " + d.label(), true, 0, ""};
    const CodeInstance c = build_code(d);
    const Subspace k = kernel_space(d);
    for (int r = 1; r <= c.code_dim; ++r) {
      const auto s = ghw_support_oracle(c, r).value;
      const auto v = ghw_dual_oracle(d, k, r).value;
      ++res.cases;
      if (s != v) fail(res, "r=" + std::to_string(r) + " support=" + std::to_string(s) + " dual=" + std::to_string(v));
    }
    out.push_back(std::move(res));
  }
  return out;
}

Result monotone_and_singleton() {
  Result res{"Wei monotonicity and generalized Singleton", true, 0, ""};
  auto sets = example_sets();
  sets.push_back(class1_build(2, 5, 1, 1));
  sets.push_back(class1_build(3, 2, 1, 1));
  sets.push_back(class2_build(2, 4, 2, 2, 1));
  sets.push_back(class2_build(2, 3, 1, 3, 1));
  for (int m : {2, 3}) {
    for (TracePattern p : {TracePattern{0, 0}, TracePattern{1, 0}, TracePattern{1, 1}}) {
      sets.push_back(class3_variant_build(m, p));
    }
  }
  for (const auto& d : sets) {
    VerifyOptions o;
    o.methods = Methods{false, true, true};
    const HierarchyReport rep = verify_hierarchy(d, o);
    const auto h = rep.hierarchy();
    ++res.cases;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto r = static_cast<std::int64_t>(i + 1);
      if (i > 0 && h[i] <= h[i - 1]) fail(res, d.label() + ": not strictly increasing: " + join(h));
      if (h[i] > rep.length - rep.dim + r) fail(res, d.label() + ": Singleton bound fails at r=" + std::to_string(r));
    }
  }
  return res;
}

Result charsum_exhaustive(int m) {
  Result res{"character sum = direct count, all subspaces, m=" + std::to_string(m), true, 0, ""};
  const DefiningSet d = class3_build(m);
  for (int r = 0; r <= 2 * m; ++r) {
    SubspaceEnumerator e(2 * m, r, 2);
    e.for_each([&](std::uint64_t, const FqMatrix& basis) {
      const Subspace h = Subspace::from_canonical(basis, 2);
      ++res.cases;
      const auto a = butterfly_charsum_intersection(h, m);
      const auto b = dual_intersection_count(d, h);
      if (a != b) fail(res, "H=" + h.serialize() + " charsum=" + std::to_string(a) + " count=" + std::to_string(b));
    });
  }
  return res;
}

Result charsum_sampled(int m, std::uint64_t samples, std::uint32_t seed) {
  Result res{"character sum = direct count, sampled, m=" + std::to_string(m), true, 0, ""};
  const DefiningSet d = class3_build(m);
  std::mt19937 rng(seed);
  std::vector<SubspaceEnumerator> strata;
  for (int r = 0; r <= 2 * m; ++r) strata.emplace_back(2 * m, r, 2);
  std::uniform_int_distribution<int> pick_r(0, 2 * m);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto& e = strata[static_cast<std::size_t>(pick_r(rng))];
    std::uniform_int_distribution<std::uint64_t> pick(0, e.count() - 1);
    const Subspace h = e.at(pick(rng));
    ++res.cases;
    const auto a = butterfly_charsum_intersection(h, m);
    const auto b = dual_intersection_count(d, h);
    if (a != b) fail(res, "H=" + h.serialize() + " charsum=" + std::to_string(a) + " count=" + std::to_string(b));
  }
  return res;
}

std::vector<Result> lemma_suite() {
  std::vector<Result> out;
  for (const auto& d : example_sets()) {
    Result res{"structural checks " + d.label(), true, 0, ""};
    const LemmaReport rep = lemma_checks(d);
    if (rep.checks.empty()) fail(res, "no checks ran");
    for (const auto& c : rep.checks) {
      res.cases += c.cases;
      if (!c.passed()) fail(res, c.name + ": " + c.violations.front());
      if (c.cases == 0) fail(res, c.name + ": no cases");
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<Result> defining_set_identities() {
  std::vector<Result> out;

  Result sizes{"|D| closed forms", true, 0, ""};
  for (int q : {2, 3}) {
    for (int m = 2; m <= 5; ++m) {
      for (int k = 1; k < m; ++k) {
        if (m % k != 0) continue;
        for (int h = 0; h < q && (h + 1) * ipow(q, k) < ipow(q, m); ++h) {
          ++sizes.cases;
          const auto want = ipow(q, m) - (h + 1) * ipow(q, k);
          if (static_cast<std::int64_t>(class1_build(q, m, k, h).size()) != want) {
            fail(sizes, "class 1 size at q=" + std::to_string(q) + " m=" + std::to_string(m));
          }
        }
      }
    }
  }
  for (int q : {2, 3}) {
    for (int m = 2; m <= 4; ++m) {
      for (int k = 2; k <= 4; ++k) {
        for (int s = 1; s < m; ++s) {
          for (int l = 1; l < k; ++l) {
            if (m % s != 0 || k % l != 0 || k - l > m - s) continue;
            ++sizes.cases;
            const auto want = (ipow(q, m) - ipow(q, s)) * (ipow(q, k) - ipow(q, l));
            if (static_cast<std::int64_t>(class2_build(q, m, s, k, l).size()) != want) {
              fail(sizes, "class 2 size at q=" + std::to_string(q) + " m=" + std::to_string(m) + " k=" +
                              std::to_string(k));
            }
          }
        }
      }
    }
  }
  for (int m = 2; m <= 5; ++m) {
    ++sizes.cases;
    if (static_cast<std::int64_t>(class3_build(m).size()) != ipow(2, 2 * m - 2)) {
      fail(sizes, "class 3 size at m=" + std::to_string(m));
    }
  }
  out.push_back(sizes);

  Result members{"class 1 membership by coset scan", true, 0, ""};
  for (const auto& d : {class1_build(3, 3, 1, 2), class1_build(2, 4, 2, 1), class1_build(3, 4, 2, 2)}) {
    const auto& p = std::get<Class1Params>(d.params());
    const auto sub = enumerate_subfield(d.first_field(), p.k);
    std::set<std::uint64_t> excluded;
    std::vector<FieldElement> shifts{FieldElement::zero(d.first_field())};
    shifts.insert(shifts.end(), p.thetas.begin(), p.thetas.end());
    for (const auto& t : shifts) {
      for (const auto& s : sub) excluded.insert((t + s).index());
    }
    std::set<std::uint64_t> got;
    for (const auto& pt : d.points()) got.insert(pt.x.index());
    for (const auto& x : all_elements(d.first_field())) {
      ++members.cases;
      if ((got.count(x.index()) != 0) == (excluded.count(x.index()) != 0)) {
        fail(members, d.label() + ": element " + x.to_string());
      }
    }
  }
  out.push_back(members);

  Result butterfly{"class 3 trace-pattern predicate and equivalent membership form", true, 0, ""};
  for (int m = 2; m <= 4; ++m) {
    ++butterfly.cases;
    if (!class3_membership_equivalence(m)) fail(butterfly, "predicates differ at m=" + std::to_string(m));
    const DefiningSet d = class3_build(m);
    std::set<std::pair<std::uint64_t, std::uint64_t>> got;
    for (const auto& pt : d.points()) got.insert({pt.x.index(), pt.y->index()});
    const auto one = FieldElement::one(d.first_field());
    for (const auto& x : all_elements(d.first_field())) {
      for (const auto& y : all_elements(d.first_field())) {
        const bool want = trace_to_prime(x * (y + one)) == 0 && trace_to_prime(y * (x + one)) == 1;
        if (want != (got.count({x.index(), y.index()}) != 0)) fail(butterfly, "pair mismatch at m=" + std::to_string(m));
      }
    }
  }
  out.push_back(butterfly);

  out.push_back(theta_independence());
  return out;
}

Result theta_independence() {
  Result res{"class 1 hierarchy independent of theta choice", true, 0, ""};
  for (auto [q, m, k, h] : std::vector<std::array<int, 4>>{{3, 3, 1, 2}, {2, 4, 2, 1}, {3, 4, 2, 2}, {2, 4, 1, 1}}) {
    const DefiningSet a = class1_build(q, m, k, h);
    const auto alt = descending_thetas(a.first_field(), k, h);
    const DefiningSet b = class1_build(q, m, k, h, ThetaStrategy::Explicit, alt);
    ++res.cases;
    const auto& ta = std::get<Class1Params>(a.params()).thetas;
    if (ta == alt) fail(res, a.label() + ": alternative thetas coincide with the default");
    const auto ha = dual_hierarchy(a);
    const auto hb = dual_hierarchy(b);
    if (ha != hb) fail(res, a.label() + ": " + join(ha) + " vs " + join(hb));
  }
  return res;
}

Result variant_symmetry() {
  Result res{"class 3 pattern 10 hierarchy equals pattern 01", true, 0, ""};
  for (int m : {2, 3}) {
    ++res.cases;
    const auto a = dual_hierarchy(class3_variant_build(m, TracePattern{0, 1}));
    const auto b = dual_hierarchy(class3_variant_build(m, TracePattern{1, 0}));
    if (a != b) fail(res, "m=" + std::to_string(m) + ": " + join(a) + " vs " + join(b));
  }
  return res;
}

std::vector<Result> linear_algebra(std::uint32_t seed) {
  std::vector<Result> out;
  std::mt19937 rng(seed);

  Result counts{"subspace enumeration counts match Gaussian binomials", true, 0, ""};
  for (int q : {2, 3}) {
    for (int n = 0; n <= 6; ++n) {
      for (int r = 0; r <= n; ++r) {
        SubspaceEnumerator e(n, r, q);
        std::set<std::string> seen;
        bool canonical = true;
        e.for_each([&](std::uint64_t, const FqMatrix& b) {
          seen.insert(Subspace::from_canonical(b, q).serialize() + "|" + std::to_string(b.rows()));
          canonical = canonical && rref(b, q).matrix == b;
        });
        ++counts.cases;
        const auto g = gaussian_binomial(n, r, q);
        if (e.count() != g || seen.size() != g || !canonical) {
          fail(counts, "[" + std::to_string(n) + "," + std::to_string(r) + "]_" + std::to_string(q));
        }
        const bool small = (q == 2 && n <= 4) || (q == 3 && n <= 3);
        if (small && naive::count_subspaces(n, r, q) != g) {
          fail(counts, "brute-force span count differs at [" + std::to_string(n) + "," + std::to_string(r) + "]_" +
                           std::to_string(q));
        }
      }
    }
  }
  out.push_back(counts);

  Result involution{"trace dual is an involution", true, 0, ""};
  Result complement{"dim H + dim H^perp = ambient dimension", true, 0, ""};
  for (auto [q, n1, n2] : std::vector<std::array<int, 3>>{{2, 4, 0}, {3, 3, 0}, {2, 3, 2}, {3, 2, 2}, {2, 6, 0}}) {
    TraceGram g = trace_gram(make_field(q, n1));
    if (n2 > 0) g = block_diagonal(g, trace_gram(make_field(q, n2)));
    const int n = g.dim();
    for (int t = 0; t < 40; ++t) {
      std::uniform_int_distribution<int> pick(0, n);
      const Subspace h = span(random_rows(rng, pick(rng), n, q), n, q);
      const Subspace hd = dual(h, g);
      ++involution.cases;
      ++complement.cases;
      if (dual(hd, g) != h) fail(involution, "H=" + h.serialize());
      if (h.dim() + hd.dim() != n) fail(complement, "H=" + h.serialize());
      for (Eigen::Index i = 0; i < h.basis().rows(); ++i) {
        for (Eigen::Index j = 0; j < hd.basis().rows(); ++j) {
          if (g.form(h.basis().row(i).transpose(), hd.basis().row(j).transpose()) != 0) {
            fail(complement, "non-orthogonal pair for H=" + h.serialize());
          }
        }
      }
    }
  }
  out.push_back(involution);
  out.push_back(complement);

  Result chunks{"chunked enumeration partitions the index range", true, 0, ""};
  for (auto [n, r, q] : std::vector<std::array<int, 3>>{{6, 3, 2}, {5, 2, 3}, {4, 2, 2}, {3, 1, 2}, {2, 2, 3}}) {
    SubspaceEnumerator e(n, r, q);
    std::vector<std::string> whole;
    e.for_each([&](std::uint64_t, const FqMatrix& b) { whole.push_back(to_digits(b.reshaped<Eigen::RowMajor>())); });
    for (std::uint64_t cc : {1U, 2U, 3U, 7U}) {
      ++chunks.cases;
      std::vector<std::string> joined;
      std::uint64_t expect = 0;
      for (std::uint64_t c = 0; c < cc; ++c) {
        const auto [lo, hi] = e.chunk(c, cc);
        if (lo != expect || hi < lo) fail(chunks, "gap or overlap before chunk " + std::to_string(c));
        expect = hi;
        e.for_range(lo, hi, [&](std::uint64_t idx, const FqMatrix& b) {
          joined.push_back(to_digits(b.reshaped<Eigen::RowMajor>()));
          if (idx % 17 == 0 && !(e.at(idx).basis() == b)) fail(chunks, "at() differs from the stream");
        });
      }
      if (expect != e.count() || joined != whole) {
        fail(chunks, "chunks of [" + std::to_string(n) + "," + std::to_string(r) + "]_" + std::to_string(q) +
                         " into " + std::to_string(cc) + " do not reproduce the stream");
      }
    }
  }
  out.push_back(chunks);

  Result reduction{"parallel reduction is deterministic", true, 0, ""};
  for (const auto& d : {class2_build(2, 3, 1, 2, 1), class3_build(3), class1_build(3, 3, 1, 2)}) {
    const Subspace k = kernel_space(d);
    const int top = d.ambient_dim() - k.dim();
    for (int r = 1; r <= top; ++r) {
      const auto base = ghw_dual_oracle(d, k, r, SearchOptions{1, kDefaultBudget});
      for (unsigned threads : {2U, 3U, 7U}) {
        ++reduction.cases;
        const auto other = ghw_dual_oracle(d, k, r, SearchOptions{threads, kDefaultBudget});
        if (other.value != base.value || other.witness_index != base.witness_index) {
          fail(reduction, d.label() + " r=" + std::to_string(r) + " threads=" + std::to_string(threads));
        }
      }
    }
  }
  out.push_back(reduction);
  return out;
}

std::vector<Result> all(std::uint32_t seed) {
  std::vector<Result> out;
  auto append = [&out](std::vector<Result> v) {
    for (auto& r : v) out.push_back(std::move(r));
  };
  append(oracle_equivalence());
  out.push_back(monotone_and_singleton());
  out.push_back(charsum_exhaustive(2));
  out.push_back(charsum_exhaustive(3));
  out.push_back(charsum_sampled(4, 10000, seed));
  append(lemma_suite());
  append(defining_set_identities());
  out.push_back(variant_symmetry());
  append(linear_algebra(seed));
  return out;
}

}  // namespace props
