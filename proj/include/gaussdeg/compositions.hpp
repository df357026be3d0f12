#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gaussdeg/bigint.hpp"
#include "gaussdeg/combinatorics.hpp"
#include "gaussdeg/errors.hpp"

namespace gaussdeg {

// A weak m-composition of n: a weakly increasing tuple of m nonnegative
// integers whose last entry equals n.
struct WeakComposition {
  std::vector<int> parts;
  bool operator==(const WeakComposition&) const = default;
};

inline bool is_weak_composition(const WeakComposition& c, int m, int n) {
  if (m < 1 || static_cast<int>(c.parts.size()) != m) return false;
  if (c.parts.front() < 0) return false;
  for (std::size_t i = 1; i < c.parts.size(); ++i)
    if (c.parts[i] < c.parts[i - 1]) return false;
  return c.parts.back() == n;
}

// Ceiling on how many tuples an enumeration may materialize.
constexpr std::size_t kEnumerationCap = 10'000'000;

// #{weak m-compositions of n} = C(n + m - 1, m - 1).
inline BigInt count_compositions(int m, int n) {
  if (m < 1) throw DomainError("count_compositions: need at least one part");
  if (n < 0) throw DomainError("count_compositions: negative target");
  return binomial(n + m - 1, m - 1);
}

// All weak m-compositions of n in lexicographic order.
inline std::vector<WeakComposition> enumerate_compositions(
    int m, int n, std::size_t cap = kEnumerationCap) {
  BigInt total = count_compositions(m, n);
  if (total > cap)
    throw ResourceError("enumerate_compositions: " + to_decimal(total) +
                        " tuples exceeds cap " + std::to_string(cap));
  std::vector<WeakComposition> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> parts(m);
  parts[m - 1] = n;
  auto rec = [&](auto&& self, int pos, int low) -> void {
    if (pos == m - 1) {
      out.push_back(WeakComposition{parts});
      return;
    }
    for (int v = low; v <= n; ++v) {
      parts[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// Brute-force count of weak (m+d+1)-compositions of n+d whose entry at
// 1-based position m+1 is at least d. Deliberately independent of the
// closed forms below so it can serve as their oracle.
inline BigInt count_constrained(int m, int n, int d,
                                std::size_t cap = kEnumerationCap) {
  if (m < 0 || n < 0) throw DomainError("count_constrained: negative index");
  if (d < 1) throw DomainError("count_constrained: need d >= 1");
  BigInt count(0);
  for (const WeakComposition& c : enumerate_compositions(m + d + 1, n + d, cap))
    if (c.parts[m] >= d) ++count;
  return count;
}

// Closed form: C(m+n+2d, m+d) - sum_{k=1}^{d} C(m+d-k, m) C(n+d-1+k, d-1).
inline BigInt A_closed(int m, int n, int d) {
  if (m < 0 || n < 0) throw DomainError("A_closed: negative index");
  if (d < 1) throw DomainError("A_closed: need d >= 1");
  BigInt result = binomial(m + n + 2 * d, m + d);
  for (int k = 1; k <= d; ++k)
    result -= binomial(m + d - k, m) * binomial(n + d - 1 + k, d - 1);
  return result;
}

// Same value, complementary indexing of the correction sum:
// C(m+n+2d, m+d) - sum_{k=0}^{d-1} C(m+k, m) C(n+2d-1-k, d-1).
inline BigInt A_closed_alt(int m, int n, int d) {
  if (m < 0 || n < 0) throw DomainError("A_closed_alt: negative index");
  if (d < 1) throw DomainError("A_closed_alt: need d >= 1");
  BigInt result = binomial(m + n + 2 * d, m + d);
  for (int k = 0; k <= d - 1; ++k)
    result -= binomial(m + k, m) * binomial(n + 2 * d - 1 - k, d - 1);
  return result;
}

// A_closed extended by zero to negative indices; the shift identity
// c_{m,n} = A_{m-1,n} + A_{m,n-1} needs the edge cases.
inline BigInt A_extended(int m, int n, int d) {
  if (m < 0 || n < 0) return BigInt(0);
  return A_closed(m, n, d);
}

// One side of the counting bijection: a split index k, a (k+1)-composition
// alpha of d-1 and an (m-k+1+d)-composition beta of n.
struct BijectionSource {
  int k = 0;
  WeakComposition alpha;
  WeakComposition beta;
  bool operator==(const BijectionSource&) const = default;
};

// Glue alpha (minus its forced last entry d-1) to beta shifted up by d.
// The image is a weak (m+d+1)-composition of n+d whose entry at 1-based
// position m+1 is >= d, i.e. a tuple counted by count_constrained.
inline WeakComposition bijection_forward(const BijectionSource& src, int m,
                                         int n, int d) {
  if (m < 0 || n < 0) throw DomainError("bijection_forward: negative index");
  if (d < 1) throw DomainError("bijection_forward: need d >= 1");
  if (src.k < 0 || src.k > m)
    throw DomainError("bijection_forward: split index out of range");
  if (!is_weak_composition(src.alpha, src.k + 1, d - 1))
    throw DomainError("bijection_forward: alpha is not a (k+1)-composition of d-1");
  if (!is_weak_composition(src.beta, m - src.k + 1 + d, n))
    throw DomainError("bijection_forward: beta is not an (m-k+1+d)-composition of n");
  WeakComposition out;
  out.parts.reserve(m + d + 1);
  for (int i = 0; i < src.k; ++i) out.parts.push_back(src.alpha.parts[i]);
  for (int b : src.beta.parts) out.parts.push_back(b + d);
  return out;
}

// Inverse: split at the first entry >= d.
inline BijectionSource bijection_backward(const WeakComposition& comp, int m,
                                          int n, int d) {
  if (m < 0 || n < 0) throw DomainError("bijection_backward: negative index");
  if (d < 1) throw DomainError("bijection_backward: need d >= 1");
  if (!is_weak_composition(comp, m + d + 1, n + d))
    throw DomainError("bijection_backward: not an (m+d+1)-composition of n+d");
  if (comp.parts[m] < d)
    throw DomainError("bijection_backward: entry m+1 must be at least d");
  int k = 0;
  while (comp.parts[k] < d) ++k;  // terminates: parts[m] >= d
  BijectionSource src;
  src.k = k;
  src.alpha.parts.assign(comp.parts.begin(), comp.parts.begin() + k);
  src.alpha.parts.push_back(d - 1);
  for (std::size_t i = k; i < comp.parts.size(); ++i)
    src.beta.parts.push_back(comp.parts[i] - d);
  return src;
}

// Every source for given (m, n, d): k ascending, then alpha, then beta in
// lexicographic order. Total count equals A_closed(m, n, d).
inline std::vector<BijectionSource> enumerate_bijection_sources(
    int m, int n, int d, std::size_t cap = kEnumerationCap) {
  if (m < 0 || n < 0)
    throw DomainError("enumerate_bijection_sources: negative index");
  if (d < 1) throw DomainError("enumerate_bijection_sources: need d >= 1");
  BigInt total(0);
  for (int k = 0; k <= m; ++k)
    total += count_compositions(k + 1, d - 1) *
             count_compositions(m - k + 1 + d, n);
  if (total > cap)
    throw ResourceError("enumerate_bijection_sources: " + to_decimal(total) +
                        " sources exceeds cap " + std::to_string(cap));
  std::vector<BijectionSource> out;
  out.reserve(static_cast<std::size_t>(total));
  for (int k = 0; k <= m; ++k) {
    auto alphas = enumerate_compositions(k + 1, d - 1, cap);
    auto betas = enumerate_compositions(m - k + 1 + d, n, cap);
    for (const auto& alpha : alphas)
      for (const auto& beta : betas)
        out.push_back(BijectionSource{k, alpha, beta});
  }
  return out;
}

}  // namespace gaussdeg
