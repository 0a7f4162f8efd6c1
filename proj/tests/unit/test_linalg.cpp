#include <random>

#include "doctest.h"
#include "kreweras/core/linalg.hpp"
#include "kreweras/core/modp_linalg.hpp"
#include "kreweras/simd/modp.hpp"
#include "random_gen.hpp"

using namespace kreweras;
using kreweras::testing::kSeed;

namespace {

// Plain Gaussian elimination over Q, used as the rank oracle.
std::size_t naive_rank(Matrix<Rat> a) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Matrix<Rat> low_rank(std::mt19937_64& rng, std::size_t n, std::size_t m, std::size_t k) {
  Matrix<Rat> u(n, std::vector<Rat>(k)), v(k, std::vector<Rat>(m)), out(n, std::vector<Rat>(m, Rat(0)));
  for (auto& row : u)
    for (auto& x : row) x = kreweras::testing::small_rat(rng, 5);
  for (auto& row : v)
    for (auto& x : row) x = kreweras::testing::small_rat(rng, 5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) out[i][j] += u[i][l] * v[l][j];
  return out;
}

}  // namespace

TEST_CASE("property: AVX2 kernels match the scalar reference") {
  std::mt19937_64 rng(kSeed + 10);
  const std::uint32_t primes[] = {2, 3, 251, 45007, 65521, 65519};
  for (int trial = 0; trial < 1200; ++trial) {
    const std::uint32_t p = primes[trial % 6];
    std::uniform_int_distribution<std::uint32_t> res(0, p - 1);
    std::uniform_int_distribution<std::size_t> len(0, 70);
    const std::size_t n = len(rng);
    std::vector<std::uint32_t> src(n), d1(n);
    for (auto& v : src) v = res(rng);
    for (auto& v : d1) v = res(rng);
    auto d2 = d1;
    const std::uint32_t c = trial % 7 == 0 ? p - 1 : res(rng);
    simd::axpy_mod_scalar(d1.data(), src.data(), c, n, p);
    simd::axpy_mod_avx2(d2.data(), src.data(), c, n, p);
    REQUIRE(d1 == d2);
    simd::scale_mod_scalar(d1.data(), c, n, p);
    simd::scale_mod_avx2(d2.data(), c, n, p);
    REQUIRE(d1 == d2);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(d1[i] < p);
  }
}

TEST_CASE("Barrett reduction at the extremes") {
  const std::uint32_t p = 65521;
  std::vector<std::uint32_t> src(17, p - 1), d1(17, p - 1), d2(17, p - 1);
  simd::axpy_mod_scalar(d1.data(), src.data(), p - 1, 17, p);
  simd::axpy_mod_avx2(d2.data(), src.data(), p - 1, 17, p);
  CHECK(d1 == d2);
  CHECK(d1[0] == static_cast<std::uint32_t>((std::uint64_t{p - 1} * (p - 1) + p - 1) % p));
}

TEST_CASE("mod-p nullspace and dispatch paths agree") {
  std::mt19937_64 rng(kSeed + 11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = low_rank(rng, 9, 12, 1 + trial % 7);
    for (bool force : {false, true}) {
      simd::set_force_scalar(force);
      const auto m = reduce_mod_p(a, 45007);
      REQUIRE(m.has_value());
      const auto ns = m->nullspace();
      REQUIRE(ns.size() + m->rank() == 12);
      for (const auto& v : ns)
        for (std::size_t i = 0; i < 9; ++i) {
          std::uint32_t acc = 0;
          for (std::size_t j = 0; j < 12; ++j) acc = add_mod(acc, mul_mod(m->at(i, j), v[j], 45007), 45007);
          REQUIRE(acc == 0);
        }
    }
    simd::set_force_scalar(false);
  }
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS(ModpMatrix(1, 1, 70001));
}

TEST_CASE("property: fraction-free nullspace over Z") {
  std::mt19937_64 rng(kSeed + 12);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 3 + trial % 6, m = 4 + trial % 5, k = 1 + trial % 4;
    const auto a = low_rank(rng, n, m, k);
    const auto ns = rational_nullspace(a, m);
    const std::size_t rank = naive_rank(a);
    REQUIRE(ns.size() == m - rank);
    for (const auto& v : ns) {
      for (std::size_t i = 0; i < n; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < m; ++j) acc += a[i][j] * v[j];
        REQUIRE(acc.is_zero());
      }
      for (const auto& x : v) REQUIRE(x.is_integer());
    }
    REQUIRE(ff_rank(clear_row_denominators(a)) == rank);
  }
}

TEST_CASE("fraction-free nullspace over Q[x][t]") {
  const BiPoly t = BiPoly::var();
  const BiPoly x = lift_x(QX::var());
  // rows (t, x, t*x) and (1, x+1, t) -> kernel of dimension one
  Matrix<BiPoly> a{{t, x, t * x}, {BiPoly(1), x + BiPoly(1), t}};
  const auto ns = ff_nullspace(a, 3);
  REQUIRE(ns.size() == 1);
  const auto v = primitive_vector(ns[0]);
  for (const auto& row : a) CHECK((row[0] * v[0] + row[1] * v[1] + row[2] * v[2]).is_zero());
}
