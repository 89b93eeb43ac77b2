#ifndef GHWLAB_DEFINING_SETS_HPP
#define GHWLAB_DEFINING_SETS_HPP

#include "ghwlab/finite_field.hpp"
#include "ghwlab/fq_linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ghwlab {

/// D = F_{q^m} minus the union of the cosets theta_i + F_{q^k}, i = 0..h, theta_0 = 0.
struct Class1Params {
  int q = 0;
  int m = 0;
  int k = 0;
  int h = 0;
  std::vector<FieldElement> thetas;  // theta_1..theta_h; theta_0 = 0 is implicit
};

/// D = (F_{q^m} \ F_{q^s}) x (F_{q^k} \ F_{q^l}).
struct Class2Params {
  int q = 0;
  int m = 0;
  int s = 0;
  int k = 0;
  int l = 0;
  /// q^{m-s} <= q^{m+l-k-s} + 1; only q = m = k = 2, s = l = 1.
  bool exceptional = false;
};

/// Trace pattern (Tr(x(y+1)), Tr(y(x+1))) over F_2; (0,1) is the butterfly set.
struct TracePattern {
  int first = 0;
  int second = 1;
  std::string to_string() const { return std::to_string(first) + std::to_string(second); }
  friend bool operator==(const TracePattern&, const TracePattern&) = default;
};

struct Class3Params {
  int m = 0;
  TracePattern pattern;
};

/// Arbitrary univariate set, used for kernel and sanity checks only.
struct CustomParams {
  int q = 0;
  int m = 0;
};

using ClassParams = std::variant<Class1Params, Class2Params, Class3Params, CustomParams>;

enum class ThetaStrategy { FirstCosets, Explicit };

/// One point of D: x alone for univariate sets, (x, y) for bivariate ones.
struct DefiningPoint {
  FieldElement x;
  std::optional<FieldElement> y;
};

/**
 * Explicit ordered defining set. Points are in global element order
 * (univariate) or lexicographic pair order (bivariate); the flattened ambient
 * is F_q^m or F_q^{m+k} with the first field's coordinates first.
 */
class DefiningSet {
 public:
  DefiningSet(ClassParams params, FieldPtr first, FieldPtr second, std::vector<DefiningPoint> points);

  bool bivariate() const noexcept { return second_ != nullptr; }
  int q() const noexcept { return first_->q(); }
  const FieldPtr& first_field() const noexcept { return first_; }
  const FieldPtr& second_field() const noexcept { return second_; }
  const ClassParams& params() const noexcept { return params_; }
  const std::vector<DefiningPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Dimension of the flattened ambient, which is also the message dimension.
  int ambient_dim() const noexcept { return ambient_dim_; }
  /// |D| x ambient_dim matrix of flattened point coordinates.
  const FqMatrix& coordinates() const noexcept { return coords_; }
  /// Block-diagonal trace form of the ambient.
  const TraceGram& gram() const noexcept { return gram_; }

  /// 1, 2, 3, or 0 for a custom set.
  int class_id() const noexcept;
  /// Human readable label such as "class 2 q=2 m=3 s=1 k=2 l=1".
  std::string label() const;

 private:
  ClassParams params_;
  FieldPtr first_;
  FieldPtr second_;
  std::vector<DefiningPoint> points_;
  int ambient_dim_;
  FqMatrix coords_;
  TraceGram gram_;
};

/// Validates q, m, k, h; returns the h theta values picked greedily in global
/// element order so that all pairwise differences (including with 0) avoid F_{q^k}.
std::vector<FieldElement> first_coset_thetas(const FieldPtr& field, int k, int h);

void validate_thetas(const std::vector<FieldElement>& thetas, int k);

DefiningSet class1_build(int q, int m, int k, int h, ThetaStrategy strategy = ThetaStrategy::FirstCosets,
                         std::vector<FieldElement> thetas = {});

DefiningSet class2_build(int q, int m, int s, int k, int l);

DefiningSet class3_build(int m);

/// All (x, y) in F_{2^m}^2 with (Tr(x(y+1)), Tr(y(x+1))) == pattern.
DefiningSet class3_variant_build(int m, TracePattern pattern);

/// Exhaustively compares the predicate (Tr(x(x+y)), Tr(y(x+y))) == (0,1)
/// with the butterfly predicate over all of F_{2^m}^2.
bool class3_membership_equivalence(int m);

/// Univariate set of explicit elements (sorted, deduplicated).
DefiningSet custom_univariate(const FieldPtr& field, std::vector<FieldElement> elements);

}  // namespace ghwlab

#endif  // GHWLAB_DEFINING_SETS_HPP
