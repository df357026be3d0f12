#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "gaussdeg/bigint.hpp"
#include "gaussdeg/combinatorics.hpp"
#include "gaussdeg/errors.hpp"

namespace gaussdeg {

// Truncated integer power series in x and y: all coefficients of x^i y^j
// with i <= max_x, j <= max_y, stored densely in row-major order.
// Truncation orders are part of the type's value; mixed-order arithmetic is
// a DomainError rather than an implicit re-truncation.
class BivariateSeries {
 public:
  BivariateSeries(int max_x, int max_y) : max_x_(max_x), max_y_(max_y) {
    if (max_x < 0 || max_y < 0)
      throw DomainError("BivariateSeries: negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(max_x + 1) *
                   static_cast<std::size_t>(max_y + 1));
  }

  int max_x() const noexcept { return max_x_; }
  int max_y() const noexcept { return max_y_; }

  const BigInt& coeff(int i, int j) const {
    check_index(i, j);
    return coeffs_[index(i, j)];
  }

  void set_coeff(int i, int j, BigInt value) {
    check_index(i, j);
    coeffs_[index(i, j)] = std::move(value);
  }

  bool same_truncation(const BivariateSeries& other) const noexcept {
    return max_x_ == other.max_x_ && max_y_ == other.max_y_;
  }

  bool operator==(const BivariateSeries& other) const = default;

 private:
  void check_index(int i, int j) const {
    if (i < 0 || i > max_x_ || j < 0 || j > max_y_)
      throw DomainError("BivariateSeries: coefficient index out of range");
  }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * (max_y_ + 1) + j;
  }

  int max_x_;
  int max_y_;
  std::vector<BigInt> coeffs_;
};

// Build a series from literal rows: rows[i][j] is the coefficient of
// x^i y^j; omitted entries are zero, surplus entries are a shape error.
inline BivariateSeries ps_from_coeffs(
    int max_x, int max_y, const std::vector<std::vector<BigInt>>& rows) {
  BivariateSeries s(max_x, max_y);
  if (static_cast<int>(rows.size()) > max_x + 1)
    throw DomainError("ps_from_coeffs: more rows than truncation allows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) > max_y + 1)
      throw DomainError("ps_from_coeffs: row longer than truncation allows");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      s.set_coeff(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  }
  return s;
}

inline BivariateSeries operator+(const BivariateSeries& a,
                                 const BivariateSeries& b) {
  if (!a.same_truncation(b))
    throw DomainError("series addition: truncation orders differ");
  BivariateSeries out(a.max_x(), a.max_y());
  for (int i = 0; i <= a.max_x(); ++i)
    for (int j = 0; j <= a.max_y(); ++j)
      out.set_coeff(i, j, a.coeff(i, j) + b.coeff(i, j));
  return out;
}

// Truncated Cauchy product. Both zero-skips matter: the kernels are built
// from sparse factors (axis-supported geometric series, tiny polynomials).
inline BivariateSeries ps_mul(const BivariateSeries& a,
                              const BivariateSeries& b) {
  if (!a.same_truncation(b))
    throw DomainError("series multiplication: truncation orders differ");
  const int mx = a.max_x(), my = a.max_y();
  BivariateSeries out(mx, my);
  for (int p = 0; p <= mx; ++p)
    for (int q = 0; q <= my; ++q) {
      const BigInt& av = a.coeff(p, q);
      if (av.is_zero()) continue;
      for (int r = 0; p + r <= mx; ++r)
        for (int s = 0; q + s <= my; ++s) {
          const BigInt& bv = b.coeff(r, s);
          if (bv.is_zero()) continue;
          out.set_coeff(p + r, q + s, out.coeff(p + r, q + s) + av * bv);
        }
    }
  return out;
}

// Multiplicative inverse; requires unit constant term so every coefficient
// of the inverse is an integer. Row-major order satisfies the recurrence's
// dependencies (all componentwise-smaller indices are already done).
inline BivariateSeries ps_inv(const BivariateSeries& a) {
  const BigInt& c0 = a.coeff(0, 0);
  if (c0 != 1 && c0 != -1)
    throw DomainError("series inverse: constant term must be 1 or -1");
  const int mx = a.max_x(), my = a.max_y();
  BivariateSeries out(mx, my);
  out.set_coeff(0, 0, c0);
  for (int i = 0; i <= mx; ++i)
    for (int j = 0; j <= my; ++j) {
      if (i == 0 && j == 0) continue;
      BigInt s(0);
      for (int p = 0; p <= i; ++p)
        for (int q = 0; q <= j; ++q) {
          if (p == 0 && q == 0) continue;
          const BigInt& av = a.coeff(p, q);
          if (av.is_zero()) continue;
          s += av * out.coeff(i - p, j - q);
        }
      out.set_coeff(i, j, -c0 * s);
    }
  return out;
}

enum class KernelKind { A_KERNEL, C_KERNEL, A_LOWER_KERNEL };

inline const char* kernel_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::A_KERNEL: return "A";
    case KernelKind::C_KERNEL: return "C";
    case KernelKind::A_LOWER_KERNEL: return "a";
  }
  return "?";
}

// The three generating kernels, assembled from explicit polynomials via
// ps_inv / ps_mul so the series route stays independent of the closed
// forms it is checked against:
//   A: 1 / ((1-x)^d (1-y)^d (1-x-y))
//   C: (x+y) * A
//   a: 1 / ((1-x)^d (1-y)^d) + A
inline BivariateSeries build_kernel(KernelKind kind, int d, int max_x,
                                    int max_y) {
  if (d < 1) throw DomainError("build_kernel: need d >= 1");
  const BivariateSeries one_minus_x =
      ps_from_coeffs(max_x, max_y, {{BigInt(1)}, {BigInt(-1)}});
  const BivariateSeries one_minus_y =
      ps_from_coeffs(max_x, max_y, {{BigInt(1), BigInt(-1)}});
  const BivariateSeries one_minus_x_minus_y = ps_from_coeffs(
      max_x, max_y, {{BigInt(1), BigInt(-1)}, {BigInt(-1)}});

  const BivariateSeries inv_x = ps_inv(one_minus_x);
  const BivariateSeries inv_y = ps_inv(one_minus_y);
  BivariateSeries separable = ps_mul(inv_x, inv_y);
  for (int i = 1; i < d; ++i)
    separable = ps_mul(ps_mul(separable, inv_x), inv_y);

  const BivariateSeries a_kernel =
      ps_mul(separable, ps_inv(one_minus_x_minus_y));
  switch (kind) {
    case KernelKind::A_KERNEL:
      return a_kernel;
    case KernelKind::C_KERNEL: {
      const BivariateSeries x_plus_y = ps_from_coeffs(
          max_x, max_y, {{BigInt(0), BigInt(1)}, {BigInt(1)}});
      return ps_mul(x_plus_y, a_kernel);
    }
    case KernelKind::A_LOWER_KERNEL:
      return separable + a_kernel;
  }
  throw DomainError("build_kernel: unknown kernel kind");
}

// Hard ceiling on total degree served through the cached-coefficient path.
constexpr int kSeriesBudget = 200;

namespace detail {

using KernelKey = std::tuple<int, int, int>;  // (kind, d, truncation)

inline std::shared_mutex& kernel_mutex() {
  static std::shared_mutex m;
  return m;
}

inline std::map<KernelKey, BivariateSeries>& kernel_cache() {
  static std::map<KernelKey, BivariateSeries> cache;
  return cache;
}

}  // namespace detail

// Coefficient of x^m y^n in the requested kernel. Kernels are cached per
// (kind, d, truncation); truncations are rounded up to a multiple of 8 so
// nearby requests share one entry. Thread safe.
inline BigInt series_coeff(KernelKind kind, int d, int m, int n,
                           int budget = kSeriesBudget) {
  if (d < 1) throw DomainError("series_coeff: need d >= 1");
  if (m < 0 || n < 0) throw DomainError("series_coeff: negative index");
  if (m + n > budget)
    throw ResourceError("series_coeff: total degree " + std::to_string(m + n) +
                        " exceeds budget " + std::to_string(budget));
  const int raw = std::max(m, n);
  const int trunc = std::max(8, (raw + 7) / 8 * 8);
  const detail::KernelKey key{static_cast<int>(kind), d, trunc};
  {
    std::shared_lock lock(detail::kernel_mutex());
    auto it = detail::kernel_cache().find(key);
    if (it != detail::kernel_cache().end()) return it->second.coeff(m, n);
  }
  BivariateSeries built = build_kernel(kind, d, trunc, trunc);
  std::unique_lock lock(detail::kernel_mutex());
  auto [it, inserted] = detail::kernel_cache().emplace(key, std::move(built));
  return it->second.coeff(m, n);
}

}  // namespace gaussdeg
