#include "ghwlab/fq_linalg.hpp"

#include <sstream>

namespace ghwlab {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

int inv_mod(int a, int q) {
  a = ((a % q) + q) % q;
  if (a == 0) throw FieldError("inverse of zero in F_" + std::to_string(q));
  int r = 1;
  for (int e = q - 2, b = a; e > 0; e >>= 1, b = b * b % q) {
    if (e & 1) r = r * b % q;
  }
  return r;
}

Rref rref(const FqMatrix& m, int q) {
  Rref out;
  out.matrix = mod_q(m, q);
  FqMatrix& a = out.matrix;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index lead = 0;
  for (Eigen::Index c = 0; c < cols && lead < rows; ++c) {
    Eigen::Index p = lead;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != lead) a.row(p).swap(a.row(lead));
    const int inv = inv_mod(a(lead, c), q);
    if (inv != 1) a.row(lead) = mod_q(a.row(lead) * inv, q);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == lead || a(r, c) == 0) continue;
      const int f = a(r, c);
      a.row(r) = mod_q(a.row(r) - f * a.row(lead), q);
    }
    out.pivots.push_back(static_cast<int>(c));
    ++lead;
  }
  out.rank = static_cast<int>(lead);
  return out;
}

Subspace Subspace::zero(int ambient, int q) { return Subspace(FqMatrix(0, ambient), {}, q); }

Subspace Subspace::full(int ambient, int q) {
  std::vector<int> piv(static_cast<std::size_t>(ambient));
  for (int i = 0; i < ambient; ++i) piv[static_cast<std::size_t>(i)] = i;
  return Subspace(FqMatrix::Identity(ambient, ambient), std::move(piv), q);
}

Subspace Subspace::from_canonical(FqMatrix basis, int q) {
  Rref r = rref(basis, q);
  if (r.rank != basis.rows() || r.matrix != basis) {
    throw ParameterError("basis is not in canonical reduced row echelon form");
  }
  return Subspace(std::move(basis), std::move(r.pivots), q);
}

Subspace Subspace::parse(std::string_view text, int ambient, int q) {
  std::vector<FqVector> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t semi = text.find(';', start);
    const std::string_view part = text.substr(start, semi == std::string_view::npos ? text.size() - start : semi - start);
    if (static_cast<int>(part.size()) != ambient) throw ParameterError("subspace row has wrong length");
    rows.push_back(from_digits(part, q));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  FqMatrix m(static_cast<Eigen::Index>(rows.size()), ambient);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return span(m, ambient, q);
}

bool Subspace::contains(const FqVector& v) const {
  if (v.size() != ambient_dim()) throw ParameterError("vector length does not match ambient dimension");
  // v is in the row space iff v minus its pivot-coordinate combination vanishes.
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    FqScalar acc = v(c);
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
      acc += (q_ - v(pivots_[i])) * basis_(static_cast<Eigen::Index>(i), c);
    }
    if (acc % q_ != 0) return false;
  }
  return true;
}

std::string Subspace::serialize() const {
  std::string s;
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    if (i > 0) s.push_back(';');
    s += to_digits(basis_.row(i));
  }
  return s;
}

Subspace span(const FqMatrix& rows, int ambient, int q) {
  if (rows.rows() > 0 && rows.cols() != ambient) throw ParameterError("span: row length does not match ambient");
  if (rows.rows() == 0) return Subspace::zero(ambient, q);
  Rref r = rref(rows, q);
  return Subspace::from_canonical(r.matrix.topRows(r.rank), q);
}

Subspace kernel(const FqMatrix& m, int q) {
  const int cols = static_cast<int>(m.cols());
  if (m.rows() == 0) return Subspace::full(cols, q);
  const Rref r = rref(m, q);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  FqMatrix basis(cols - r.rank, cols);
  int out = 0;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    FqRow v = FqRow::Zero(cols);
    v(f) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      v(r.pivots[i]) = (q - r.matrix(static_cast<Eigen::Index>(i), f)) % q;
    }
    basis.row(out++) = v;
  }
  return span(basis, cols, q);
}

Subspace annihilator(const Subspace& h) {
  if (h.dim() == 0) return Subspace::full(h.ambient_dim(), h.q());
  return kernel(h.basis(), h.q());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.q() != b.q()) throw ParameterError("intersect: ambient mismatch");
  const Subspace aa = annihilator(a);
  const Subspace bb = annihilator(b);
  FqMatrix stacked(aa.dim() + bb.dim(), a.ambient_dim());
  stacked << aa.basis(), bb.basis();
  return kernel(stacked, a.q());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.q() != b.q()) throw ParameterError("sum: ambient mismatch");
  FqMatrix stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return span(stacked, a.ambient_dim(), a.q());
}

TraceGram::TraceGram(FqMatrix matrix, int q) : matrix_(std::move(matrix)), q_(q) {
  if (matrix_.rows() != matrix_.cols()) throw ParameterError("trace form must be square");
  if (matrix_ != matrix_.transpose()) throw ParameterError("trace form must be symmetric");
  if (kernel(matrix_, q_).dim() != 0) throw ParameterError("trace form is degenerate");
}

int TraceGram::form(const FqVector& u, const FqVector& v) const {
  return static_cast<int>(((u.transpose() * matrix_ * v)(0, 0)) % q_);
}

TraceGram trace_gram(const FieldPtr& ctx) {
  const int n = ctx->degree();
  std::vector<FieldElement> basis;
  for (int i = 0; i < n; ++i) {
    FqVector e = FqVector::Zero(n);
    e(i) = 1;
    basis.emplace_back(ctx, std::move(e));
  }
  FqMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = trace_to_prime(basis[static_cast<std::size_t>(i)] * basis[static_cast<std::size_t>(j)]);
  }
  return TraceGram(std::move(g), ctx->q());
}

TraceGram block_diagonal(const TraceGram& a, const TraceGram& b) {
  if (a.q() != b.q()) throw ParameterError("block_diagonal: characteristic mismatch");
  FqMatrix g = FqMatrix::Zero(a.dim() + b.dim(), a.dim() + b.dim());
  g.topLeftCorner(a.dim(), a.dim()) = a.matrix();
  g.bottomRightCorner(b.dim(), b.dim()) = b.matrix();
  return TraceGram(std::move(g), a.q());
}

Subspace dual(const Subspace& h, const TraceGram& g) {
  if (h.ambient_dim() != g.dim()) throw ParameterError("dual: subspace and trace form dimensions differ");
  if (h.dim() == 0) return Subspace::full(h.ambient_dim(), h.q());
  return kernel(mul_mod(h.basis(), g.matrix(), g.q()), g.q());
}

std::uint64_t gaussian_binomial(int n, int r, int q) {
  if (r < 0 || r > n) return 0;
  // [n, r] = [n-1, r-1] + q^r [n-1, r]
  std::vector<std::uint64_t> row(static_cast<std::size_t>(r) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, r); j >= 1; --j) {
      const u128 v =
          static_cast<u128>(row[static_cast<std::size_t>(j) - 1]) +
          static_cast<u128>(ipow(q, j)) * row[static_cast<std::size_t>(j)];
      if (v > UINT64_MAX) throw ParameterError("Gaussian binomial overflows 64 bits");
      row[static_cast<std::size_t>(j)] = static_cast<std::uint64_t>(v);
    }
  }
  return row[static_cast<std::size_t>(r)];
}

SubspaceEnumerator::SubspaceEnumerator(int ambient, int r, int q) : ambient_(ambient), r_(r), q_(q) {
  if (ambient < 0 || r < 0 || r > ambient) {
    throw ParameterError("subspace dimension r=" + std::to_string(r) + " outside [0, " + std::to_string(ambient) + "]");
  }
  if (!is_prime(q)) throw ParameterError("q must be prime");
  std::vector<int> piv(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) piv[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Block blk;
    blk.pivots = piv;
    for (int i = 0; i < r; ++i) {
      for (int c = piv[static_cast<std::size_t>(i)] + 1; c < ambient; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) blk.free.emplace_back(i, c);
      }
    }
    blk.count = static_cast<std::uint64_t>(ipow(q, static_cast<int>(blk.free.size())));
    blk.offset = total_;
    total_ += blk.count;
    blocks_.push_back(std::move(blk));
    // next r-combination of [0, ambient) in lexicographic order
    int i = r - 1;
    while (i >= 0 && piv[static_cast<std::size_t>(i)] == ambient - r + i) --i;
    if (i < 0) break;
    ++piv[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j) - 1] + 1;
  }
}

std::size_t SubspaceEnumerator::block_of(std::uint64_t index) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t v, const Block& b) { return v < b.offset; });
  return static_cast<std::size_t>(std::distance(blocks_.begin(), it)) - 1;
}

void SubspaceEnumerator::load_block(std::size_t b, std::uint64_t local, FqMatrix& basis,
                                    std::vector<int>& digits) const {
  const Block& blk = blocks_[b];
  basis = FqMatrix::Zero(r_, ambient_);
  for (int i = 0; i < r_; ++i) basis(i, blk.pivots[static_cast<std::size_t>(i)]) = 1;
  digits.assign(blk.free.size(), 0);
  for (std::size_t p = 0; p < blk.free.size(); ++p) {
    digits[p] = static_cast<int>(local % static_cast<std::uint64_t>(q_));
    local /= static_cast<std::uint64_t>(q_);
    basis(blk.free[p].first, blk.free[p].second) = digits[p];
  }
}

Subspace SubspaceEnumerator::at(std::uint64_t index) const {
  if (index >= total_) throw ParameterError("subspace index out of range");
  const std::size_t b = block_of(index);
  FqMatrix basis;
  std::vector<int> digits;
  load_block(b, index - blocks_[b].offset, basis, digits);
  return Subspace::from_canonical(std::move(basis), q_);
}

std::pair<std::uint64_t, std::uint64_t> SubspaceEnumerator::chunk(std::uint64_t chunk_index,
                                                                  std::uint64_t chunk_count) const {
  if (chunk_count == 0 || chunk_index >= chunk_count) throw ParameterError("invalid chunk");
  const auto lo = static_cast<std::uint64_t>(static_cast<u128>(total_) * chunk_index / chunk_count);
  const auto hi = static_cast<std::uint64_t>(static_cast<u128>(total_) * (chunk_index + 1) / chunk_count);
  return {lo, hi};
}

}  // namespace ghwlab
