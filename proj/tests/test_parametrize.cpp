#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "powsum/parametrize.hpp"

using namespace powsum;

namespace {

std::vector<CycInt> int_psi(unsigned n, const std::vector<long>& vals) {
  std::vector<CycInt> out;
  for (long v : vals) out.push_back(CycInt::from_int(n, v));
  return out;
}

std::vector<CycInt> random_psi(std::mt19937& rng, unsigned n, std::size_t len,
                               int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  std::vector<CycInt> out;
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<BigInt> c(n - 1);
    for (auto& x : c) x = d(rng);
    out.push_back(CycInt::make(n, std::move(c)));
  }
  return out;
}

}  // namespace

TEST_CASE("quadratic route reproduces the classical triples") {
  ConcertedSet s = build_n2();
  auto sol = cramer_parametrize(s, int_psi(2, {2, 1}));
  CHECK(sol.xs[0] == CycInt::from_int(2, 3));
  CHECK(sol.xs[1] == CycInt::from_int(2, 4));
  CHECK(sol.y == CycInt::from_int(2, 5));

  auto degenerate = cramer_parametrize(s, int_psi(2, {1, 0}));
  CHECK(degenerate.xs[0] == CycInt::from_int(2, 1));
  CHECK(degenerate.xs[1] == CycInt::from_int(2, 0));
  CHECK(degenerate.y == CycInt::from_int(2, 1));

  for (long p = 1; p <= 10; ++p)
    for (long q = 1; q <= 10; ++q) {
      auto t = cramer_parametrize(s, int_psi(2, {p, q}));
      CHECK(t.xs[0] == CycInt::from_int(2, p * p - q * q));
      CHECK(t.xs[1] == CycInt::from_int(2, 2 * p * q));
      CHECK(t.y == CycInt::from_int(2, p * p + q * q));
      CHECK(power_identity_holds(t));
    }
}

TEST_CASE("cramer rejects bad inputs") {
  ConcertedSet s = build_n2();
  CHECK_THROWS_AS(cramer_parametrize(s, int_psi(2, {0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cramer_parametrize(s, int_psi(2, {1})),
                  std::invalid_argument);
  // non-square: the 3-matrix tensor extension lives in dimension 9
  std::mt19937 rng(1);
  ConcertedSet wide = extend(build_pair(3), 2);
  CHECK_THROWS_AS(cramer_parametrize(wide, random_psi(rng, 3, 9, -2, 2)),
                  std::invalid_argument);
  // uncertified set
  ConcertedSet raw = user_supplied(2, build_n2().matrices());
  CHECK_THROWS_AS(cramer_parametrize(raw, int_psi(2, {2, 1})),
                  std::invalid_argument);
}

TEST_CASE("cubic one-hot evaluations match hand computation") {
  ConcertedSet t = reference_triple_n3();
  const CycInt z = CycInt::zeta(3);
  const CycInt z2 = CycInt::zeta_pow(3, 2);

  auto c1 = cramer_parametrize(t, int_psi(3, {1, 0, 0}));
  CHECK(c1.xs[0] == -z);
  CHECK(c1.xs[1] == z);
  CHECK(c1.xs[2].is_zero());
  CHECK(c1.y.is_zero());

  auto p1 = closed_form_n3(int_psi(3, {1, 0, 0}));
  CHECK(p1.xs[0] == z);
  CHECK(p1.xs[1] == -z);
  CHECK(p1.xs[2].is_zero());
  CHECK(p1.y.is_zero());

  auto c3 = cramer_parametrize(t, int_psi(3, {0, 0, 1}));
  CHECK(c3.xs[0] == -CycInt::one(3));
  CHECK(c3.xs[1] == z2);
  CHECK(c3.xs[2].is_zero());

  auto p3 = closed_form_n3(int_psi(3, {0, 0, 1}));
  CHECK(p3.xs[0] == CycInt::one(3));
  CHECK(p3.xs[1] == -z2);
  CHECK(p3.xs[2].is_zero());
  CHECK(power_identity_holds(p3));
}

TEST_CASE("cubic identity holds on random parameters through both routes") {
  std::mt19937 rng(43);
  ConcertedSet t = reference_triple_n3();
  for (int rep = 0; rep < 60; ++rep) {
    auto psi = random_psi(rng, 3, 3, -5, 5);
    if (std::all_of(psi.begin(), psi.end(),
                    [](const CycInt& p) { return p.is_zero(); }))
      continue;
    auto sol = cramer_parametrize(t, psi);
    CHECK(power_identity_holds(sol));
    auto closed = closed_form_n3(psi);
    CHECK(power_identity_holds(closed));
  }
}

TEST_CASE("the two cubic routes differ by the unit -1") {
  std::mt19937 rng(47);
  for (int rep = 0; rep < 40; ++rep) {
    auto psi = random_psi(rng, 3, 3, -4, 4);
    if (std::all_of(psi.begin(), psi.end(),
                    [](const CycInt& p) { return p.is_zero(); }))
      continue;
    RouteComparison cmp = compare_n3_routes(psi);
    CHECK(cmp.proportional);
    if (cmp.factor) CHECK(*cmp.factor == -CycInt::one(3));
  }
}

TEST_CASE("cramer output solves the linear system it came from") {
  std::mt19937 rng(53);
  ConcertedSet t = reference_triple_n3();
  for (int rep = 0; rep < 25; ++rep) {
    auto psi = random_psi(rng, 3, 3, -3, 3);
    if (std::all_of(psi.begin(), psi.end(),
                    [](const CycInt& p) { return p.is_zero(); }))
      continue;
    auto sol = cramer_parametrize(t, psi);

    // sum x_i A_i Psi = y Psi
    std::vector<CycInt> acc(3, CycInt::zero(3));
    for (std::size_t i = 0; i < 3; ++i) {
      auto img = t.matrices()[i].apply(psi);
      for (std::size_t r = 0; r < 3; ++r)
        acc[r] = acc[r] + sol.xs[i] * img[r];
    }
    for (std::size_t r = 0; r < 3; ++r) CHECK(acc[r] == sol.y * psi[r]);

    // det(sum x_i A_i - y E) = 0
    CycMatrix mix(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      mix = mix + t.matrices()[i].scaled(sol.xs[i]);
    mix = mix - CycMatrix::identity(3, 3).scaled(sol.y);
    CHECK(det(mix).is_zero());
  }
}

TEST_CASE("scaling psi scales the outputs by s^dim") {
  std::mt19937 rng(59);
  ConcertedSet t = reference_triple_n3();
  auto psi = random_psi(rng, 3, 3, -3, 3);
  CycInt s = CycInt::from_int(3, 2) + CycInt::zeta(3);
  std::vector<CycInt> scaled;
  for (const auto& p : psi) scaled.push_back(p * s);

  auto base = cramer_parametrize(t, psi);
  auto big = cramer_parametrize(t, scaled);
  CycInt s3 = s.pow(3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(big.xs[i] == base.xs[i] * s3);
  CHECK(big.y == base.y * s3);
}

TEST_CASE("rational slices and gcd reduction") {
  auto sol = cramer_parametrize(build_n2(), int_psi(2, {2, 1}));
  RationalSlice slice = rational_slice(sol);
  REQUIRE(slice.rational);
  CHECK(slice.xs == std::vector<BigInt>{3, 4});
  CHECK(slice.y == 5);

  auto doubled = cramer_parametrize(build_n2(), int_psi(2, {4, 2}));
  RationalSlice big = rational_slice(doubled);
  REQUIRE(big.rational);
  CHECK(big.xs == std::vector<BigInt>{12, 16});
  CHECK(big.y == 20);
  RationalSlice reduced = reduce_by_gcd(big);
  CHECK(reduced.xs == std::vector<BigInt>{3, 4});
  CHECK(reduced.y == 5);

  ParametrizedSolution crooked;
  crooked.n = 3;
  crooked.xs = {CycInt::zeta(3), CycInt::one(3)};
  crooked.y = CycInt::one(3);
  RationalSlice r = rational_slice(crooked);
  CHECK_FALSE(r.rational);
  CHECK(r.nonrational == std::vector<std::size_t>{0});
}

TEST_CASE("closed form rejects wrong shapes") {
  CHECK_THROWS_AS(closed_form_n3(int_psi(3, {1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_n3(int_psi(2, {1, 2, 3})), std::invalid_argument);
}
