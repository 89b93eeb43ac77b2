#ifndef GHWLAB_TYPES_HPP
#define GHWLAB_TYPES_HPP

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghwlab {

/// Entries of every matrix over F_q live in [0, q) and are stored as plain ints.
using FqScalar = std::int32_t;
using FqMatrix = Eigen::Matrix<FqScalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using FqVector = Eigen::Matrix<FqScalar, Eigen::Dynamic, 1>;
using FqRow = Eigen::Matrix<FqScalar, 1, Eigen::Dynamic>;

/// Invalid construction parameters (non-prime q, divisibility, ranges).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arithmetic misuse: mixing contexts, inverting zero.
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive enumeration would exceed the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what), required_(required), budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Coordinates as a digit string, index 0 first ("120" is 1 + 2g).
template <typename Derived>
std::string to_digits(const Eigen::DenseBase<Derived>& v) {
  std::string s;
  s.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    s.push_back(static_cast<char>('0' + v(i)));
  }
  return s;
}

FqVector from_digits(std::string_view digits, int q);

/// Exact integer power; throws ParameterError on overflow.
std::int64_t ipow(std::int64_t base, int exp);

bool is_prime(int q);

}  // namespace ghwlab

#endif  // GHWLAB_TYPES_HPP
