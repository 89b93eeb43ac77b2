#include "ghwlab/finite_field.hpp"

#include <algorithm>
#include <sstream>

namespace ghwlab {

FqVector from_digits(std::string_view digits, int q) {
  FqVector v(static_cast<Eigen::Index>(digits.size()));
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const int d = digits[i] - '0';
    if (d < 0 || d >= q) {
      throw ParameterError("digit string '" + std::string(digits) + "' has a digit outside [0, " +
                           std::to_string(q) + ")");
    }
    v(static_cast<Eigen::Index>(i)) = d;
  }
  return v;
}

std::int64_t ipow(std::int64_t base, int exp) {
  if (exp < 0) throw ParameterError("negative exponent in ipow");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > INT64_MAX / (base < 0 ? -base : base)) {
      throw ParameterError("integer overflow in ipow");
    }
    r *= base;
  }
  return r;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

namespace {

// Dense polynomials over F_q, constant term first, no trailing zeros (zero = {}).
using Poly = std::vector<int>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int inv_scalar(int a, int q) {
  int r = 1;
  for (int e = q - 2, b = a; e > 0; e >>= 1, b = b * b % q) {
    if (e & 1) r = r * b % q;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& m, int q) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_scalar(m.back(), q);
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back() * lead_inv % q;
    for (int j = 0; j <= dm; ++j) {
      a[shift + j] = ((a[shift + j] - c * m[j]) % q + q) % q;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    }
  }
  return poly_mod(std::move(r), m, q);
}

Poly poly_sub(Poly a, const Poly& b, int q) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % q + q) % q;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, int q) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^{q^d} mod m by d successive q-th powers.
Poly x_pow_q_pow(int d, const Poly& m, int q) {
  Poly x = poly_mod(Poly{0, 1}, m, q);
  for (int i = 0; i < d; ++i) {
    Poly acc{1};
    Poly base = x;
    for (int e = q; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, m, q);
      base = poly_mulmod(base, base, m, q);
    }
    x = acc;
  }
  return x;
}

}  // namespace

bool is_irreducible(const std::vector<int>& monic, int q) {
  Poly m = monic;
  trim(m);
  const int n = static_cast<int>(m.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x = Poly{0, 1};
  // x^{q^n} == x mod m, and gcd(x^{q^d} - x, m) == 1 for proper divisors d.
  if (!poly_sub(x_pow_q_pow(n, m, q), poly_mod(x, m, q), q).empty()) return false;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly g = poly_gcd(m, poly_sub(x_pow_q_pow(d, m, q), x, q), q);
    if (g.size() != 1) return false;
  }
  return true;
}

FieldContext::FieldContext(int q, int n, std::vector<int> modulus)
    : q_(q), n_(n), size_(static_cast<std::uint64_t>(ipow(q, n))), modulus_(std::move(modulus)) {}

std::string FieldContext::describe() const {
  std::ostringstream os;
  os << "q=" << q_ << " n=" << n_ << " mod=";
  for (int c : modulus_) os << c;
  return os.str();
}

FqVector FieldContext::multiply(const FqVector& a, const FqVector& b) const {
  std::vector<int> prod(static_cast<std::size_t>(2 * n_ - 1), 0);
  for (int i = 0; i < n_; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + a(i) * b(j)) % q_;
    }
  }
  // modulus is monic: g^n = -(c_0 + ... + c_{n-1} g^{n-1})
  for (int deg = 2 * n_ - 2; deg >= n_; --deg) {
    const int c = prod[static_cast<std::size_t>(deg)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(deg)] = 0;
    for (int j = 0; j < n_; ++j) {
      auto& t = prod[static_cast<std::size_t>(deg - n_ + j)];
      t = ((t - c * modulus_[static_cast<std::size_t>(j)]) % q_ + q_) % q_;
    }
  }
  FqVector r(n_);
  for (int i = 0; i < n_; ++i) r(i) = prod[static_cast<std::size_t>(i)];
  return r;
}

FieldPtr make_field(int q, int n) {
  if (!is_prime(q)) {
    throw ParameterError("characteristic q=" + std::to_string(q) + " is not prime");
  }
  if (n <= 0) {
    throw ParameterError("extension degree n=" + std::to_string(n) + " must be positive");
  }
  // Lexicographic scan over (c_0, ..., c_{n-1}); c_{n-1} varies fastest.
  std::vector<int> coeffs(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<int> monic = coeffs;
    monic.push_back(1);
    if ((n == 1 || coeffs[0] != 0) && is_irreducible(monic, q)) {
      return FieldPtr(new FieldContext(q, n, std::move(monic)));
    }
    int pos = n - 1;
    while (pos >= 0 && ++coeffs[static_cast<std::size_t>(pos)] == q) {
      coeffs[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw ParameterError("no irreducible polynomial found");  // unreachable for prime q
}

FieldElement::FieldElement(FieldPtr ctx, FqVector coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  if (!ctx_) throw FieldError("field element without context");
  if (coeffs_.size() != ctx_->degree()) {
    throw FieldError("coordinate vector length " + std::to_string(coeffs_.size()) + " does not match degree " +
                     std::to_string(ctx_->degree()));
  }
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i) < 0 || coeffs_(i) >= ctx_->q()) throw FieldError("coordinate outside [0, q)");
  }
}

FieldElement FieldElement::zero(const FieldPtr& ctx) { return {ctx, FqVector::Zero(ctx->degree())}; }

FieldElement FieldElement::one(const FieldPtr& ctx) { return scalar(ctx, 1); }

FieldElement FieldElement::scalar(const FieldPtr& ctx, int c) {
  FqVector v = FqVector::Zero(ctx->degree());
  v(0) = ((c % ctx->q()) + ctx->q()) % ctx->q();
  return {ctx, std::move(v)};
}

FieldElement FieldElement::generator(const FieldPtr& ctx) {
  if (ctx->degree() == 1) {
    // g is the root of x, i.e. 0.
    return zero(ctx);
  }
  FqVector v = FqVector::Zero(ctx->degree());
  v(1) = 1;
  return {ctx, std::move(v)};
}

FieldElement FieldElement::from_index(const FieldPtr& ctx, std::uint64_t index) {
  if (index >= ctx->size()) throw FieldError("element index out of range");
  FqVector v(ctx->degree());
  const auto q = static_cast<std::uint64_t>(ctx->q());
  for (int i = 0; i < ctx->degree(); ++i) {
    v(i) = static_cast<FqScalar>(index % q);
    index /= q;
  }
  return {ctx, std::move(v)};
}

FieldElement FieldElement::parse(const FieldPtr& ctx, std::string_view digits) {
  if (static_cast<int>(digits.size()) != ctx->degree()) {
    throw ParameterError("element '" + std::string(digits) + "' must have " + std::to_string(ctx->degree()) +
                         " digits");
  }
  return {ctx, from_digits(digits, ctx->q())};
}

std::uint64_t FieldElement::index() const {
  std::uint64_t idx = 0;
  for (Eigen::Index i = coeffs_.size(); i-- > 0;) {
    idx = idx * static_cast<std::uint64_t>(ctx_->q()) + static_cast<std::uint64_t>(coeffs_(i));
  }
  return idx;
}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(*a.context() == *b.context())) {
    throw FieldError("operands belong to different fields (" + a.context()->describe() + " vs " +
                     b.context()->describe() + ")");
  }
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const int q = a.ctx_->q();
  FqVector r = (a.coeffs_ + b.coeffs_).unaryExpr([q](FqScalar x) { return x % q; });
  return {a.ctx_, std::move(r)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const int q = a.ctx_->q();
  FqVector r = (a.coeffs_ - b.coeffs_).unaryExpr([q](FqScalar x) { return (x + q) % q; });
  return {a.ctx_, std::move(r)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  return {a.ctx_, a.ctx_->multiply(a.coeffs_, b.coeffs_)};
}

FieldElement FieldElement::operator-() const {
  const int q = ctx_->q();
  FqVector r = coeffs_.unaryExpr([q](FqScalar x) { return (q - x) % q; });
  return {ctx_, std::move(r)};
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement acc = one(ctx_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) acc = acc * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return acc;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  return pow(ctx_->size() - 2);
}

FieldElement FieldElement::frobenius(int times) const {
  FieldElement r = *this;
  for (int i = 0; i < times; ++i) r = r.pow(static_cast<std::uint64_t>(ctx_->q()));
  return r;
}

int trace_to_prime(const FieldElement& x) {
  const FieldElement t = relative_trace(x, 1);
  return t.coeffs()(0);
}

FieldElement relative_trace(const FieldElement& x, int k) {
  const int n = x.context()->degree();
  if (k <= 0 || n % k != 0) {
    throw ParameterError("relative trace needs k | n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  FieldElement acc = x;
  FieldElement term = x;
  for (int i = 1; i < n / k; ++i) {
    term = term.frobenius(k);
    acc = acc + term;
  }
  return acc;
}

int subfield_trace_to_prime(const FieldElement& y, int k) {
  if (!is_in_subfield(y, k)) throw FieldError("element is not in the degree-" + std::to_string(k) + " subfield");
  FieldElement acc = y;
  FieldElement term = y;
  for (int i = 1; i < k; ++i) {
    term = term.frobenius();
    acc = acc + term;
  }
  return acc.coeffs()(0);
}

bool is_in_subfield(const FieldElement& x, int k) {
  const int n = x.context()->degree();
  if (k <= 0 || n % k != 0) {
    throw ParameterError("subfield degree k=" + std::to_string(k) + " does not divide n=" + std::to_string(n));
  }
  return x.frobenius(k) == x;
}

std::vector<FieldElement> enumerate_subfield(const FieldPtr& ctx, int k) {
  if (k <= 0 || ctx->degree() % k != 0) {
    throw ParameterError("subfield degree k=" + std::to_string(k) + " does not divide n=" +
                         std::to_string(ctx->degree()));
  }
  std::vector<FieldElement> out;
  for (std::uint64_t i = 0; i < ctx->size(); ++i) {
    FieldElement x = FieldElement::from_index(ctx, i);
    if (x.frobenius(k) == x) out.push_back(std::move(x));
  }
  return out;
}

std::vector<FieldElement> all_elements(const FieldPtr& ctx) {
  std::vector<FieldElement> out;
  out.reserve(ctx->size());
  for (std::uint64_t i = 0; i < ctx->size(); ++i) out.push_back(FieldElement::from_index(ctx, i));
  return out;
}

}  // namespace ghwlab
