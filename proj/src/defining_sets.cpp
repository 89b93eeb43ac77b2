#include "ghwlab/defining_sets.hpp"

#include <algorithm>
#include <sstream>

namespace ghwlab {

namespace {

TraceGram ambient_gram(const FieldPtr& first, const FieldPtr& second) {
  if (!second) return trace_gram(first);
  return block_diagonal(trace_gram(first), trace_gram(second));
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw ParameterError(msg);
}

}  // namespace

DefiningSet::DefiningSet(ClassParams params, FieldPtr first, FieldPtr second, std::vector<DefiningPoint> points)
    : params_(std::move(params)),
      first_(std::move(first)),
      second_(std::move(second)),
      points_(std::move(points)),
      ambient_dim_(first_->degree() + (second_ ? second_->degree() : 0)),
      coords_(static_cast<Eigen::Index>(points_.size()), ambient_dim_),
      gram_(ambient_gram(first_, second_)) {
  if (second_ && second_->q() != first_->q()) throw ParameterError("bivariate fields must share q");
  const int m = first_->degree();
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const DefiningPoint& p = points_[i];
    if (p.y.has_value() != bivariate()) throw ParameterError("point arity does not match the defining set");
    coords_.row(row).head(m) = p.x.coeffs().transpose();
    if (p.y) coords_.row(row).tail(second_->degree()) = p.y->coeffs().transpose();
  }
}

int DefiningSet::class_id() const noexcept {
  return std::visit(
      [](const auto& p) -> int {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Class1Params>) return 1;
        if constexpr (std::is_same_v<T, Class2Params>) return 2;
        if constexpr (std::is_same_v<T, Class3Params>) return 3;
        return 0;
      },
      params_);
}

std::string DefiningSet::label() const {
  std::ostringstream os;
  std::visit(
      [&os](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Class1Params>) {
          os << "class 1 q=" << p.q << " m=" << p.m << " k=" << p.k << " h=" << p.h;
        } else if constexpr (std::is_same_v<T, Class2Params>) {
          os << "class 2 q=" << p.q << " m=" << p.m << " s=" << p.s << " k=" << p.k << " l=" << p.l;
        } else if constexpr (std::is_same_v<T, Class3Params>) {
          os << "class 3 m=" << p.m;
          if (!(p.pattern == TracePattern{0, 1})) os << " pattern=" << p.pattern.to_string();
        } else {
          os << "custom q=" << p.q << " m=" << p.m;
        }
      },
      params_);
  return os.str();
}

namespace {

void check_class1(int q, int m, int k, int h) {
  require(is_prime(q), "q=" + std::to_string(q) + " must be prime");
  require(k >= 1 && k < m, "requires 1 <= k < m");
  require(m % k == 0, "requires k | m");
  require(h >= 0, "requires h >= 0");
  require(h <= q - 1, "requires h <= q-1 (h >= q is outside the supported regime)");
}

}  // namespace

void validate_thetas(const std::vector<FieldElement>& thetas, int k) {
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    require(!thetas[i].is_zero(), "theta_" + std::to_string(i + 1) + " must be nonzero");
    require(!is_in_subfield(thetas[i], k),
            "theta_" + std::to_string(i + 1) + " - theta_0 lies in F_{q^k}; requires theta_i - theta_j not in F_{q^k}");
    for (std::size_t j = 0; j < i; ++j) {
      require(!is_in_subfield(thetas[i] - thetas[j], k), "theta_" + std::to_string(i + 1) + " - theta_" +
                                                             std::to_string(j + 1) +
                                                             " lies in F_{q^k}; requires theta_i - theta_j not in F_{q^k}");
    }
  }
}

std::vector<FieldElement> first_coset_thetas(const FieldPtr& field, int k, int h) {
  std::vector<FieldElement> chosen;
  for (std::uint64_t i = 1; i < field->size() && static_cast<int>(chosen.size()) < h; ++i) {
    FieldElement cand = FieldElement::from_index(field, i);
    if (is_in_subfield(cand, k)) continue;
    const bool ok = std::none_of(chosen.begin(), chosen.end(),
                                 [&](const FieldElement& t) { return is_in_subfield(cand - t, k); });
    if (ok) chosen.push_back(std::move(cand));
  }
  require(static_cast<int>(chosen.size()) == h, "not enough cosets of F_{q^k} for h thetas");
  return chosen;
}

DefiningSet class1_build(int q, int m, int k, int h, ThetaStrategy strategy, std::vector<FieldElement> thetas) {
  check_class1(q, m, k, h);
  FieldPtr field = make_field(q, m);
  if (strategy == ThetaStrategy::FirstCosets) {
    thetas = first_coset_thetas(field, k, h);
  } else {
    require(static_cast<int>(thetas.size()) == h,
            "explicit theta list has " + std::to_string(thetas.size()) + " entries, expected h=" + std::to_string(h));
    for (const auto& t : thetas) {
      require(*t.context() == *field, "theta does not belong to F_{q^m}");
    }
    validate_thetas(thetas, k);
  }
  std::vector<DefiningPoint> points;
  for (std::uint64_t i = 0; i < field->size(); ++i) {
    FieldElement x = FieldElement::from_index(field, i);
    bool in_omega = is_in_subfield(x, k);
    for (std::size_t t = 0; !in_omega && t < thetas.size(); ++t) in_omega = is_in_subfield(x - thetas[t], k);
    if (!in_omega) points.push_back({std::move(x), std::nullopt});
  }
  Class1Params params{q, m, k, h, std::move(thetas)};
  return DefiningSet(std::move(params), field, nullptr, std::move(points));
}

DefiningSet class2_build(int q, int m, int s, int k, int l) {
  require(is_prime(q), "q=" + std::to_string(q) + " must be prime");
  require(s > 0 && s < m, "requires 0 < s < m");
  require(l > 0 && l < k, "requires 0 < l < k");
  require(m % s == 0, "requires s | m");
  require(k % l == 0, "requires l | k");
  require(k - l <= m - s, "requires k-l <= m-s");
  FieldPtr fm = make_field(q, m);
  FieldPtr fk = (k == m) ? fm : make_field(q, k);
  std::vector<FieldElement> xs;
  std::vector<FieldElement> ys;
  for (std::uint64_t i = 0; i < fm->size(); ++i) {
    FieldElement x = FieldElement::from_index(fm, i);
    if (!is_in_subfield(x, s)) xs.push_back(std::move(x));
  }
  for (std::uint64_t i = 0; i < fk->size(); ++i) {
    FieldElement y = FieldElement::from_index(fk, i);
    if (!is_in_subfield(y, l)) ys.push_back(std::move(y));
  }
  std::vector<DefiningPoint> points;
  points.reserve(xs.size() * ys.size());
  for (const auto& x : xs) {
    for (const auto& y : ys) points.push_back({x, y});
  }
  Class2Params params{q, m, s, k, l, false};
  params.exceptional = ipow(q, m - s) <= ipow(q, m + l - k - s) + 1;
  return DefiningSet(params, fm, fk, std::move(points));
}

DefiningSet class3_variant_build(int m, TracePattern pattern) {
  require(m >= 2, "requires m >= 2");
  require(pattern.first >= 0 && pattern.first <= 1 && pattern.second >= 0 && pattern.second <= 1,
          "pattern entries must be 0 or 1");
  FieldPtr f = make_field(2, m);
  const FieldElement one = FieldElement::one(f);
  const std::vector<FieldElement> elems = all_elements(f);
  std::vector<DefiningPoint> points;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (trace_to_prime(x * (y + one)) == pattern.first && trace_to_prime(y * (x + one)) == pattern.second) {
        points.push_back({x, y});
      }
    }
  }
  return DefiningSet(Class3Params{m, pattern}, f, f, std::move(points));
}

DefiningSet class3_build(int m) { return class3_variant_build(m, TracePattern{0, 1}); }

bool class3_membership_equivalence(int m) {
  require(m >= 2, "requires m >= 2");
  FieldPtr f = make_field(2, m);
  const FieldElement one = FieldElement::one(f);
  const std::vector<FieldElement> elems = all_elements(f);
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      const bool butterfly = trace_to_prime(x * (y + one)) == 0 && trace_to_prime(y * (x + one)) == 1;
      const bool intro = trace_to_prime(x * (x + y)) == 0 && trace_to_prime(y * (x + y)) == 1;
      if (butterfly != intro) return false;
    }
  }
  return true;
}

DefiningSet custom_univariate(const FieldPtr& field, std::vector<FieldElement> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<DefiningPoint> points;
  for (auto& e : elements) {
    require(*e.context() == *field, "element does not belong to the field");
    points.push_back({std::move(e), std::nullopt});
  }
  return DefiningSet(CustomParams{field->q(), field->degree()}, field, nullptr, std::move(points));
}

}  // namespace ghwlab
