#ifndef GHWLAB_FQ_LINALG_HPP
#define GHWLAB_FQ_LINALG_HPP

#include "ghwlab/finite_field.hpp"
#include "ghwlab/types.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ghwlab {

int inv_mod(int a, int q);

/// Entrywise reduction into [0, q).
template <typename Derived>
FqMatrix mod_q(const Eigen::MatrixBase<Derived>& m, int q) {
  return m.unaryExpr([q](FqScalar x) { return ((x % q) + q) % q; }).eval();
}

inline FqMatrix mul_mod(const FqMatrix& a, const FqMatrix& b, int q) { return mod_q(a * b, q); }

struct Rref {
  FqMatrix matrix;
  int rank = 0;
  std::vector<int> pivots;
};

/// Canonical reduced row echelon form: pivots are 1, pivot columns are
/// otherwise zero, pivot columns strictly increase, zero rows last.
Rref rref(const FqMatrix& m, int q);

/**
 * An F_q-subspace of F_q^N held by its canonical RREF basis, so two subspaces
 * are equal as sets iff their basis matrices are identical.
 */
class Subspace {
 public:
  static Subspace zero(int ambient, int q);
  static Subspace full(int ambient, int q);
  /// Takes a basis that is already canonical RREF with full row rank.
  static Subspace from_canonical(FqMatrix basis, int q);
  /// "row;row;..." digit strings of the canonical basis; "" is the zero subspace.
  static Subspace parse(std::string_view text, int ambient, int q);

  int ambient_dim() const noexcept { return static_cast<int>(basis_.cols()); }
  int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  int q() const noexcept { return q_; }
  const FqMatrix& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(ipow(q_, dim())); }

  bool contains(const FqVector& v) const;
  std::string serialize() const;

  /// Visits all q^dim vectors of the subspace, starting with zero.
  template <typename F>
  void for_each_vector(F&& f) const {
    FqVector v = FqVector::Zero(ambient_dim());
    std::vector<int> digits(static_cast<std::size_t>(dim()), 0);
    f(static_cast<const FqVector&>(v));
    for (;;) {
      int i = 0;
      for (; i < dim(); ++i) {
        v = mod_q(v + basis_.row(i).transpose(), q_);
        if (++digits[static_cast<std::size_t>(i)] < q_) break;
        digits[static_cast<std::size_t>(i)] = 0;
      }
      if (i == dim()) return;
      f(static_cast<const FqVector&>(v));
    }
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.q_ == b.q_ && a.basis_.rows() == b.basis_.rows() && a.basis_.cols() == b.basis_.cols() &&
           a.basis_ == b.basis_;
  }

 private:
  Subspace(FqMatrix basis, std::vector<int> pivots, int q)
      : basis_(std::move(basis)), pivots_(std::move(pivots)), q_(q) {}

  FqMatrix basis_;
  std::vector<int> pivots_;
  int q_;
};

/// Row space of `rows` (any number of possibly dependent rows of length `ambient`).
Subspace span(const FqMatrix& rows, int ambient, int q);

/// {v : m v = 0}.
Subspace kernel(const FqMatrix& m, int q);

/// Orthogonal complement under the standard dot product.
Subspace annihilator(const Subspace& h);

Subspace intersect(const Subspace& a, const Subspace& b);

/// H1 + H2.
Subspace sum(const Subspace& a, const Subspace& b);

inline bool contains(const Subspace& h, const FqVector& v) { return h.contains(v); }

/**
 * Symmetric nondegenerate bilinear form defining trace duals: entry (i, j) is
 * Tr(b_i b_j) over the power basis, or the block-diagonal assembly of two such
 * forms for a product ambient F_{q^m} x F_{q^k} (F_{q^m} coordinates first).
 */
class TraceGram {
 public:
  TraceGram(FqMatrix matrix, int q);
  const FqMatrix& matrix() const noexcept { return matrix_; }
  int q() const noexcept { return q_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
  int form(const FqVector& u, const FqVector& v) const;

 private:
  FqMatrix matrix_;
  int q_;
};

TraceGram trace_gram(const FieldPtr& ctx);
TraceGram block_diagonal(const TraceGram& a, const TraceGram& b);

/// {v : <h, v> = 0 for all h in H}, computed as kernel(B G).
Subspace dual(const Subspace& h, const TraceGram& g);

/// Number of r-dimensional subspaces of F_q^N. Throws on uint64 overflow.
std::uint64_t gaussian_binomial(int n, int r, int q);

/**
 * Enumerates every r-dimensional subspace of F_q^N exactly once as a canonical
 * RREF basis. Order: pivot sets in lexicographic order, then the free entries
 * (row-major, first free entry least significant) counted as a base-q integer.
 *
 * Indices are global, so [begin, end) slices can be handed to independent
 * workers without coordination.
 */
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(int ambient, int r, int q);

  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return r_; }
  int q() const noexcept { return q_; }
  std::uint64_t count() const noexcept { return total_; }

  Subspace at(std::uint64_t index) const;

  /// Index range of chunk `chunk_index` out of `chunk_count` contiguous chunks.
  std::pair<std::uint64_t, std::uint64_t> chunk(std::uint64_t chunk_index, std::uint64_t chunk_count) const;

  /// Calls f(index, basis) for each index in [begin, end). `basis` is reused
  /// between calls.
  template <typename F>
  void for_range(std::uint64_t begin, std::uint64_t end, F&& f) const {
    end = std::min(end, total_);
    if (begin >= end) return;
    std::size_t b = block_of(begin);
    std::uint64_t local = begin - blocks_[b].offset;
    FqMatrix basis;
    std::vector<int> digits;
    load_block(b, local, basis, digits);
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      f(idx, static_cast<const FqMatrix&>(basis));
      if (idx + 1 == end) break;
      const Block& blk = blocks_[b];
      std::size_t pos = 0;
      for (; pos < blk.free.size(); ++pos) {
        const auto [row, col] = blk.free[pos];
        if (++digits[pos] < q_) {
          basis(row, col) = digits[pos];
          break;
        }
        digits[pos] = 0;
        basis(row, col) = 0;
      }
      if (pos == blk.free.size()) {
        ++b;
        load_block(b, 0, basis, digits);
      }
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for_range(0, total_, std::forward<F>(f));
  }

 private:
  struct Block {
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> free;  // (row, col)
    std::uint64_t count = 0;
    std::uint64_t offset = 0;
  };

  std::size_t block_of(std::uint64_t index) const;
  void load_block(std::size_t b, std::uint64_t local, FqMatrix& basis, std::vector<int>& digits) const;

  int ambient_;
  int r_;
  int q_;
  std::vector<Block> blocks_;
  std::uint64_t total_ = 0;
};

}  // namespace ghwlab

#endif  // GHWLAB_FQ_LINALG_HPP
