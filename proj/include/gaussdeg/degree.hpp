#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "gaussdeg/bigint.hpp"
#include "gaussdeg/combinatorics.hpp"
#include "gaussdeg/compositions.hpp"
#include "gaussdeg/errors.hpp"
#include "gaussdeg/power_series.hpp"

namespace gaussdeg {

// A polarization type: a tuple of elementary divisors (each >= 2, each
// dividing the next) written without trivial entries, e.g. (2), (3), (2,2).
// Ordering is lexicographic on the tuple; it fixes every report order.
class PolarizationType {
 public:
  explicit PolarizationType(std::vector<int> divisors)
      : divisors_(std::move(divisors)) {
    if (divisors_.empty() || divisors_.size() > 16)
      throw DomainError("PolarizationType: need 1 to 16 divisors");
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
      if (divisors_[i] < 2 || divisors_[i] > 1000000)
        throw DomainError("PolarizationType: divisors must be in [2, 10^6]");
      if (i > 0 && divisors_[i] % divisors_[i - 1] != 0)
        throw DomainError("PolarizationType: divisors must form a chain");
    }
  }

  // Strict comma-separated form, e.g. "2,2".
  static PolarizationType parse(std::string_view text) {
    std::vector<int> divisors;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      std::string_view token = text.substr(
          start, comma == std::string_view::npos ? comma : comma - start);
      if (token.empty())
        throw DomainError("PolarizationType: empty divisor in \"" +
                          std::string(text) + "\"");
      long long value = 0;
      for (char c : token) {
        if (c < '0' || c > '9')
          throw DomainError("PolarizationType: invalid divisor \"" +
                            std::string(token) + "\"");
        value = value * 10 + (c - '0');
        if (value > 1000000)
          throw DomainError("PolarizationType: divisor too large");
      }
      divisors.push_back(static_cast<int>(value));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return PolarizationType(std::move(divisors));
  }

  const std::vector<int>& divisors() const noexcept { return divisors_; }

  long long degree() const noexcept {
    long long d = 1;
    for (int v : divisors_) d *= v;
    return d;
  }

  // The three types whose singularity structure is established.
  bool proved() const noexcept {
    return divisors_ == std::vector<int>{2} ||
           divisors_ == std::vector<int>{3} ||
           divisors_ == std::vector<int>{2, 2};
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < divisors_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(divisors_[i]);
    }
    return out;
  }

  auto operator<=>(const PolarizationType& other) const {
    return divisors_ <=> other.divisors_;
  }
  bool operator==(const PolarizationType&) const = default;

 private:
  std::vector<int> divisors_;
};

enum class DegreeMethod { Closed, Euler, Series };
enum class Provenance { Proved, Extrapolated };

inline const char* provenance_name(Provenance p) {
  return p == Provenance::Proved ? "proved" : "formula-extrapolated";
}

// A product locus inside the moduli of ppavs of dimension g: abelian
// varieties split by an isogeny of type delta into factors of dimensions
// t and g-t. The split index is canonicalized to t <= g - t. Two branches
// are supported:
//   - smooth branch t = floor(d/2): the theta divisor is smooth;
//   - A1 window d <= t <= g/2: the singular locus is transverse of
//     dimension g - 2d.
// Anything else is an UnsupportedLocus.
class LocusSpec {
 public:
  LocusSpec(int g, PolarizationType delta, int t)
      : g_(g), delta_(std::move(delta)), t_(t) {
    if (g_ < 2) throw DomainError("LocusSpec: need g >= 2");
    if (t_ < 1 || t_ > g_ - 1)
      throw DomainError("LocusSpec: need 1 <= t <= g-1");
    if (t_ > g_ - t_) t_ = g_ - t_;
    const long long d = delta_.degree();
    if (t_ >= d) {
      smooth_branch_ = false;  // A1 window: d <= t <= g/2
    } else if (t_ == d / 2) {
      smooth_branch_ = true;
    } else {
      throw UnsupportedLocus(
          "LocusSpec: t = " + std::to_string(t_) + " with d = " +
          std::to_string(d) +
          " is neither in the A1 window [d, g/2] nor on the smooth branch "
          "t = floor(d/2)");
    }
  }

  int g() const noexcept { return g_; }
  int t() const noexcept { return t_; }
  const PolarizationType& delta() const noexcept { return delta_; }
  long long d() const noexcept { return delta_.degree(); }
  bool smooth_branch() const noexcept { return smooth_branch_; }

  // Dimension of the singular locus of the theta divisor: empty on the
  // smooth branch, g - 2d transverse double points otherwise.
  long long dim_sing() const noexcept {
    return smooth_branch_ ? -1 : g_ - 2 * d();
  }

  long long codim() const noexcept {
    return static_cast<long long>(t_) * (g_ - t_);
  }

  Provenance provenance() const noexcept {
    return delta_.proved() ? Provenance::Proved : Provenance::Extrapolated;
  }

 private:
  int g_;
  PolarizationType delta_;
  int t_;
  bool smooth_branch_;
};

// ---------------------------------------------------------------------------
// base cases

inline BigInt gauss_degree_smooth(int g) {
  if (g < 1) throw DomainError("gauss_degree_smooth: need g >= 1");
  return factorial(g);
}

inline BigInt gauss_degree_jacobian(int g, bool hyperelliptic) {
  if (g < 1) throw DomainError("gauss_degree_jacobian: need g >= 1");
  if (hyperelliptic) return BigInt(1) << (g - 1);
  return binomial(2 * g - 2, g - 1);
}

// Theta divisor smooth except for finitely many ordinary singular points.
inline BigInt gauss_degree_isolated(int g,
                                    const std::vector<long long>& mults) {
  BigInt result = gauss_degree_smooth(g);
  for (long long mult : mults) {
    if (mult < 2)
      throw DomainError("gauss_degree_isolated: multiplicities are >= 2");
    result -= mult;
  }
  if (result <= 0)
    throw DomainError("gauss_degree_isolated: multiplicity sum reaches g!");
  return result;
}

// ---------------------------------------------------------------------------
// the A1 window

namespace detail {

inline void require_a1_window(int g, int d, int t, const char* who) {
  if (d < 2) throw DomainError(std::string(who) + ": need d >= 2");
  if (t < d || 2 * t > g)
    throw DomainError(std::string(who) +
                      ": (g, d, t) outside the window d <= t <= g/2");
}

// c_{m,n} through the closed forms (never the series route, so the Euler
// route stays independent of it and works at any genus).
inline BigInt coeff_c_closed(int d, int m, int n) {
  return A_extended(m - 1, n, d) + A_extended(m, n - 1, d);
}

}  // namespace detail

// Euler characteristic of the singular locus B of the theta divisor.
inline BigInt euler_sing(int g, int d, int t) {
  detail::require_a1_window(g, d, t, "euler_sing");
  return parity_sign(g - 2 * d) * factorial(t) * factorial(g - t) *
         binomial(t - 1, d - 1) * binomial(g - t - 1, d - 1);
}

// Euler characteristic of the residual correction locus C, dim g - 2d - 1.
inline BigInt euler_C(int g, int d, int t) {
  detail::require_a1_window(g, d, t, "euler_C");
  return parity_sign(g - 2 * d - 1) * factorial(t) * factorial(g - t) *
         detail::coeff_c_closed(d, t - d, g - t - d);
}

// Euler characteristic of the base locus attached to one factor.
inline BigInt euler_base_locus(int t, int d) {
  if (d < 2) throw DomainError("euler_base_locus: need d >= 2");
  if (t < d) throw DomainError("euler_base_locus: need t >= d");
  return parity_sign(t - d) * d * binomial(t - 1, d - 1) * factorial(t);
}

// Degree of the projectivized conormal variety of the singular locus.
inline BigInt conormal_degree_sing(int g, int d, int t) {
  detail::require_a1_window(g, d, t, "conormal_degree_sing");
  return factorial(t) * factorial(g - t) * binomial(t - 1, d - 1) *
         binomial(g - t - 1, d - 1);
}

// Same quantity computed against the polarization class; d = 2 only.
inline BigInt polarization_degree_sing(int g, int t) {
  detail::require_a1_window(g, 2, t, "polarization_degree_sing");
  return factorial(t) * factorial(g - t) * binomial(g - 4, t - 2);
}

// ---------------------------------------------------------------------------
// the degree, three ways

namespace detail {

inline BigInt degree_closed(int g, int d, int t) {
  BigInt bracket = binomial(t - 1, d - 1) * binomial(g - t - 1, d - 2);
  for (int k = 2; k <= d; ++k)
    bracket += binomial(t - k, d - k) * binomial(g - t - 1 + k, d - 1);
  return factorial(t) * factorial(g - t) * bracket;
}

inline BigInt degree_euler(int g, int d, int t) {
  return factorial(g) - 2 * parity_sign(g - 2 * d) * euler_sing(g, d, t) -
         parity_sign(g - 2 * d - 1) * euler_C(g, d, t);
}

inline BigInt degree_series(int g, int d, int t) {
  BigInt a = series_coeff(KernelKind::A_LOWER_KERNEL, d, t - d, g - t - d);
  return factorial(g) - factorial(t) * factorial(g - t) * a;
}

}  // namespace detail

// Degree of the Gauss map for a generic member of the locus.
inline BigInt gauss_degree_locus(const LocusSpec& spec,
                                 DegreeMethod method = DegreeMethod::Closed) {
  if (spec.smooth_branch()) return gauss_degree_smooth(spec.g());
  const int g = spec.g(), t = spec.t(), d = static_cast<int>(spec.d());
  switch (method) {
    case DegreeMethod::Closed: return detail::degree_closed(g, d, t);
    case DegreeMethod::Euler: return detail::degree_euler(g, d, t);
    case DegreeMethod::Series: return detail::degree_series(g, d, t);
  }
  throw DomainError("gauss_degree_locus: unknown method");
}

// The polynomial forms as printed in the source table. For delta = (2)
// these agree with gauss_degree_locus everywhere; for (3) and (2,2) they
// diverge at specific loci, which the divergence scan documents. Never used
// by any scan as a degree.
inline BigInt printed_F(int g, const PolarizationType& delta, int t) {
  const int d = static_cast<int>(delta.degree());
  detail::require_a1_window(g, d, t, "printed_F");
  if (!delta.proved())
    throw DomainError("printed_F: printed forms exist only for (2), (3), (2,2)");
  const BigInt tails = factorial(t) * factorial(g - t);
  const std::vector<int>& div = delta.divisors();
  if (div == std::vector<int>{2}) return tails * g;
  if (div == std::vector<int>{3}) {
    const long long gl = g, tl = t;
    return tails * BigInt(-tl * tl + gl * tl + 3 - gl);
  }
  // delta = (2,2): tails * (g/12) * (2t+1-g) * h_g(t), exact over Z
  const BigInt gail(g), tb(t);
  const BigInt h = tb * tb * tb * tb + tb * tb * tb * (-2 * gail + 2) +
                   tb * tb * (gail * gail + gail - 7) +
                   tb * (-3 * gail * gail + 11 * gail - 8) +
                   2 * gail * gail - 10 * gail + 12;
  const BigInt numerator = tails * gail * (2 * tb + 1 - gail) * h;
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(numerator, BigInt(12), quotient, remainder);
  if (!remainder.is_zero())
    throw IntegrityError("printed_F: (2,2) polynomial not divisible by 12 at g=" +
                         std::to_string(g) + ", t=" + std::to_string(t));
  return quotient;
}

// ---------------------------------------------------------------------------
// upper bounds from singular components

struct SingularComponentData {
  long long multiplicity;
  BigInt weight;
};

inline BigInt degree_upper_bound(
    int g, const std::vector<SingularComponentData>& components) {
  BigInt bound = gauss_degree_smooth(g);
  for (const auto& component : components) {
    if (component.multiplicity < 1)
      throw DomainError("degree_upper_bound: multiplicities are >= 1");
    if (component.weight < 0)
      throw DomainError("degree_upper_bound: weights are >= 0");
    bound -= component.multiplicity * component.weight;
  }
  return bound;
}

inline BigInt upper_bound_conormal(int g, int d, int t) {
  return degree_upper_bound(g, {{2, conormal_degree_sing(g, d, t)}});
}

inline BigInt upper_bound_polarization(int g, int t) {
  return degree_upper_bound(g, {{2, polarization_degree_sing(g, t)}});
}

}  // namespace gaussdeg
