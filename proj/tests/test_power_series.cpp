#include <catch2/catch_amalgamated.hpp>

#include "gaussdeg/compositions.hpp"
#include "gaussdeg/power_series.hpp"

using gaussdeg::A_closed;
using gaussdeg::A_extended;
using gaussdeg::BigInt;
using gaussdeg::binomial;
using gaussdeg::BivariateSeries;
using gaussdeg::build_kernel;
using gaussdeg::DomainError;
using gaussdeg::KernelKind;
using gaussdeg::ps_from_coeffs;
using gaussdeg::ps_inv;
using gaussdeg::ps_mul;
using gaussdeg::ResourceError;
using gaussdeg::series_coeff;

namespace {

BivariateSeries identity_series(int mx, int my) {
  return ps_from_coeffs(mx, my, {{BigInt(1)}});
}

}  // namespace

TEST_CASE("series construction and indexing", "[series]") {
  BivariateSeries s(2, 3);
  REQUIRE(s.max_x() == 2);
  REQUIRE(s.max_y() == 3);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 3; ++j) REQUIRE(s.coeff(i, j) == 0);
  s.set_coeff(1, 2, BigInt(7));
  REQUIRE(s.coeff(1, 2) == 7);
  REQUIRE_THROWS_AS(s.coeff(3, 0), DomainError);
  REQUIRE_THROWS_AS(s.coeff(0, 4), DomainError);
  REQUIRE_THROWS_AS(s.coeff(-1, 0), DomainError);
  REQUIRE_THROWS_AS(BivariateSeries(-1, 2), DomainError);
}

TEST_CASE("ps_from_coeffs validates its shape", "[series]") {
  auto s = ps_from_coeffs(2, 2, {{BigInt(1), BigInt(-1)}, {BigInt(-1)}});
  REQUIRE(s.coeff(0, 0) == 1);
  REQUIRE(s.coeff(0, 1) == -1);
  REQUIRE(s.coeff(1, 0) == -1);
  REQUIRE(s.coeff(1, 1) == 0);
  REQUIRE_THROWS_AS(ps_from_coeffs(1, 1, {{}, {}, {}}), DomainError);
  REQUIRE_THROWS_AS(
      ps_from_coeffs(1, 1, {{BigInt(1), BigInt(2), BigInt(3)}}), DomainError);
}

TEST_CASE("arithmetic refuses mixed truncations", "[series]") {
  BivariateSeries a(2, 2), b(2, 3);
  REQUIRE_THROWS_AS(a + b, DomainError);
  REQUIRE_THROWS_AS(ps_mul(a, b), DomainError);
}

TEST_CASE("truncated product drops high-order terms", "[series]") {
  auto p = ps_from_coeffs(2, 2, {{BigInt(1), BigInt(0)}, {BigInt(1)}});  // 1+x
  auto q = ps_from_coeffs(2, 2, {{BigInt(1), BigInt(1)}});               // 1+y
  auto prod = ps_mul(p, q);
  REQUIRE(prod.coeff(0, 0) == 1);
  REQUIRE(prod.coeff(1, 0) == 1);
  REQUIRE(prod.coeff(0, 1) == 1);
  REQUIRE(prod.coeff(1, 1) == 1);
  REQUIRE(prod.coeff(2, 2) == 0);

  // x^2 * x^2 overflows the order and vanishes entirely
  BivariateSeries x2(3, 3);
  x2.set_coeff(2, 0, BigInt(1));
  REQUIRE(ps_mul(x2, x2) == BivariateSeries(3, 3));
}

TEST_CASE("ps_inv inverts unit-constant series", "[series]") {
  auto inv_1mx = ps_inv(ps_from_coeffs(5, 5, {{BigInt(1)}, {BigInt(-1)}}));
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j)
      REQUIRE(inv_1mx.coeff(i, j) == (j == 0 ? 1 : 0));

  for (auto rows : {std::vector<std::vector<BigInt>>{{BigInt(1), BigInt(-1)},
                                                     {BigInt(-1)}},
                    std::vector<std::vector<BigInt>>{{BigInt(-1), BigInt(2)},
                                                     {BigInt(3), BigInt(5)}}}) {
    auto a = ps_from_coeffs(6, 6, rows);
    REQUIRE(ps_mul(a, ps_inv(a)) == identity_series(6, 6));
    REQUIRE(ps_mul(ps_inv(a), a) == identity_series(6, 6));
  }

  REQUIRE_THROWS_AS(ps_inv(ps_from_coeffs(2, 2, {{BigInt(2)}})), DomainError);
  REQUIRE_THROWS_AS(ps_inv(BivariateSeries(2, 2)), DomainError);
}

TEST_CASE("geometric series in x+y has binomial coefficients", "[series]") {
  auto inv = ps_inv(
      ps_from_coeffs(8, 8, {{BigInt(1), BigInt(-1)}, {BigInt(-1)}}));
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      REQUIRE(inv.coeff(i, j) == binomial(i + j, i));
}

TEST_CASE("kernel coefficients match the counting closed forms", "[series]") {
  for (int d = 1; d <= 3; ++d) {
    auto A = build_kernel(KernelKind::A_KERNEL, d, 6, 6);
    auto C = build_kernel(KernelKind::C_KERNEL, d, 6, 6);
    auto a_low = build_kernel(KernelKind::A_LOWER_KERNEL, d, 6, 6);
    for (int m = 0; m <= 6; ++m)
      for (int n = 0; n <= 6; ++n) {
        REQUIRE(A.coeff(m, n) == A_closed(m, n, d));
        REQUIRE(C.coeff(m, n) ==
                A_extended(m - 1, n, d) + A_extended(m, n - 1, d));
        BigInt sep = binomial(m + d - 1, d - 1) * binomial(n + d - 1, d - 1);
        REQUIRE(a_low.coeff(m, n) == A.coeff(m, n) + sep);
        REQUIRE(a_low.coeff(m, n) == 2 * sep + C.coeff(m, n));
      }
  }
}

TEST_CASE("frozen kernel coefficients at d = 2", "[series]") {
  REQUIRE(series_coeff(KernelKind::C_KERNEL, 2, 0, 1) == 1);
  REQUIRE(series_coeff(KernelKind::C_KERNEL, 2, 1, 1) == 6);
  REQUIRE(series_coeff(KernelKind::A_LOWER_KERNEL, 2, 0, 0) == 2);
  REQUIRE(series_coeff(KernelKind::A_LOWER_KERNEL, 2, 0, 1) == 5);
  REQUIRE(series_coeff(KernelKind::A_LOWER_KERNEL, 2, 1, 1) == 14);
}

TEST_CASE("series_coeff guards its domain and budget", "[series]") {
  REQUIRE_THROWS_AS(series_coeff(KernelKind::A_KERNEL, 0, 1, 1), DomainError);
  REQUIRE_THROWS_AS(series_coeff(KernelKind::A_KERNEL, 2, -1, 0), DomainError);
  REQUIRE_THROWS_AS(series_coeff(KernelKind::A_KERNEL, 2, 150, 51),
                    ResourceError);
  // explicit budget override
  REQUIRE_THROWS_AS(series_coeff(KernelKind::A_KERNEL, 2, 5, 5, 9),
                    ResourceError);
}

TEST_CASE("cached kernels serve consistent values", "[series]") {
  BigInt first = series_coeff(KernelKind::A_KERNEL, 2, 3, 4);
  BigInt again = series_coeff(KernelKind::A_KERNEL, 2, 3, 4);
  REQUIRE(first == again);
  REQUIRE(first == A_closed(3, 4, 2));
  // a larger request lands in a different truncation bucket; values agree
  BigInt wide = series_coeff(KernelKind::A_KERNEL, 2, 3, 12);
  REQUIRE(wide == A_closed(3, 12, 2));
  REQUIRE(series_coeff(KernelKind::A_KERNEL, 2, 3, 4) == first);
}
