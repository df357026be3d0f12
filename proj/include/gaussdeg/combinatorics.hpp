#pragma once

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "gaussdeg/bigint.hpp"
#include "gaussdeg/errors.hpp"

namespace gaussdeg {

// Append-only table of factorials, values[n] = n!. Grown on demand; reads
// never observe a partially built entry because growth happens under an
// exclusive lock in the shared instance below.
class FactorialTable {
 public:
  explicit FactorialTable(std::size_t limit = 0) {
    values_.reserve(limit + 1);
    values_.emplace_back(1);
    extend(limit);
  }

  void extend(std::size_t limit) {
    while (values_.size() <= limit)
      values_.push_back(values_.back() * BigInt(values_.size()));
  }

  std::size_t limit() const noexcept { return values_.size() - 1; }

  const BigInt& at(std::size_t n) const { return values_[n]; }

 private:
  std::vector<BigInt> values_;
};

namespace detail {

inline std::shared_mutex& factorial_mutex() {
  static std::shared_mutex m;
  return m;
}

inline FactorialTable& shared_factorials() {
  static FactorialTable table(64);
  return table;
}

}  // namespace detail

// Pre-grow the shared table; useful before a parallel scan so workers only
// ever take the shared lock.
inline void reserve_factorials(std::size_t limit) {
  std::unique_lock lock(detail::factorial_mutex());
  detail::shared_factorials().extend(limit);
}

// n! through the shared table. Thread safe; returns by value.
inline BigInt factorial(long long n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  {
    std::shared_lock lock(detail::factorial_mutex());
    const FactorialTable& table = detail::shared_factorials();
    if (static_cast<std::size_t>(n) <= table.limit()) return table.at(n);
  }
  reserve_factorials(static_cast<std::size_t>(n));
  std::shared_lock lock(detail::factorial_mutex());
  return detail::shared_factorials().at(n);
}

// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
// Negative n is outside the domain everywhere in this library.
// Multiplicative evaluation: after i steps the accumulator holds
// C(n-k+i, i), so every division is exact.
inline BigInt binomial(long long n, long long k) {
  if (n < 0) throw DomainError("binomial: negative upper index");
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt result(1);
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

}  // namespace gaussdeg
