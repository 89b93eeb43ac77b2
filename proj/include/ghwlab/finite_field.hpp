#ifndef GHWLAB_FINITE_FIELD_HPP
#define GHWLAB_FINITE_FIELD_HPP

#include "ghwlab/types.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ghwlab {

class FieldElement;

/**
 * F_{q^n} for prime q, represented in the power basis 1, g, ..., g^{n-1}
 * where g is the residue of x modulo a fixed monic irreducible polynomial.
 *
 * The modulus is the lexicographically smallest monic irreducible of degree n,
 * comparing coefficient tuples (c_0, c_1, ..., c_{n-1}) from the constant term
 * upward. For n = 1 this is the polynomial x, so every element is a scalar.
 *
 * Contexts are immutable and shared through FieldPtr.
 */
class FieldContext {
 public:
  int q() const noexcept { return q_; }
  int degree() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  /// Coefficients c_0..c_n of the monic modulus, constant term first.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  /// "q=<p> n=<d> mod=<digits>", modulus digits constant first.
  std::string describe() const;

  bool operator==(const FieldContext& other) const noexcept {
    return q_ == other.q_ && modulus_ == other.modulus_;
  }

  /// Product of coefficient vectors reduced modulo the modulus.
  FqVector multiply(const FqVector& a, const FqVector& b) const;

 private:
  friend std::shared_ptr<const FieldContext> make_field(int q, int n);
  FieldContext(int q, int n, std::vector<int> modulus);

  int q_;
  int n_;
  std::uint64_t size_;
  std::vector<int> modulus_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Builds F_{q^n}. Deterministic: equal arguments give equal moduli.
FieldPtr make_field(int q, int n);

/// True iff the monic polynomial with the given coefficients (constant first)
/// is irreducible over F_q.
bool is_irreducible(const std::vector<int>& monic, int q);

class FieldElement {
 public:
  FieldElement(FieldPtr ctx, FqVector coeffs);

  static FieldElement zero(const FieldPtr& ctx);
  static FieldElement one(const FieldPtr& ctx);
  /// Residue of x, the power-basis generator g.
  static FieldElement generator(const FieldPtr& ctx);
  /// Element whose coordinates are the base-q digits of `index`, low first.
  static FieldElement from_index(const FieldPtr& ctx, std::uint64_t index);
  static FieldElement parse(const FieldPtr& ctx, std::string_view digits);
  /// Constant c in F_q embedded in the field.
  static FieldElement scalar(const FieldPtr& ctx, int c);

  const FieldPtr& context() const noexcept { return ctx_; }
  const FqVector& coeffs() const noexcept { return coeffs_; }

  /// Position in the global element order (coordinates read base q, low first).
  std::uint64_t index() const;
  bool is_zero() const { return coeffs_.isZero(); }
  std::string to_string() const { return to_digits(coeffs_); }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  /// x -> x^{q^times}
  FieldElement frobenius(int times = 1) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return *a.ctx_ == *b.ctx_ && a.coeffs_ == b.coeffs_;
  }
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
    return a.index() <=> b.index();
  }

 private:
  FieldPtr ctx_;
  FqVector coeffs_;
};

/// Tr_1^n(x) = x + x^q + ... + x^{q^{n-1}}, returned as a scalar in [0, q).
int trace_to_prime(const FieldElement& x);

/// Tr_k^n(x) = sum_{i < n/k} x^{q^{k i}}. Requires k | n.
FieldElement relative_trace(const FieldElement& x, int k);

/// Trace from the degree-k subfield down to F_q of an element of that subfield,
/// computed inside the big field as sum_{i < k} y^{q^i}.
int subfield_trace_to_prime(const FieldElement& y, int k);

/// x^{q^k} == x. Requires k | n.
bool is_in_subfield(const FieldElement& x, int k);

/// All q^k elements of the degree-k subfield, in global element order.
std::vector<FieldElement> enumerate_subfield(const FieldPtr& ctx, int k);

/// Every element of the field in global element order.
std::vector<FieldElement> all_elements(const FieldPtr& ctx);

}  // namespace ghwlab

#endif  // GHWLAB_FINITE_FIELD_HPP
