#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "powsum/concerted.hpp"

using namespace powsum;

TEST_CASE("shift pair certifies for odd primes and braids") {
  for (unsigned n : {3u, 5u}) {
    ConcertedSet pair = build_pair(n);
    CHECK(pair.status() == CertStatus::Verified);
    CHECK(pair.k() == 2);
    CHECK(pair.dim() == n);

    const CycMatrix& a = pair.matrices()[0];
    const CycMatrix& b = pair.matrices()[1];
    CHECK(a * b == (b * a).scaled(CycInt::zeta(n)));
    CHECK(a.pow(n).is_identity());
    CHECK(b.pow(n).is_identity());
  }
  CHECK_THROWS_AS(build_pair(2), std::invalid_argument);
  CHECK_THROWS_AS(build_pair(4), std::invalid_argument);
}

TEST_CASE("shift triple certifies") {
  ConcertedSet t = build_triple(3);
  CHECK(t.status() == CertStatus::Verified);
  CHECK(t.k() == 3);
  CHECK(t.matrices()[2] == t.matrices()[0] * t.matrices()[1]);
}

TEST_CASE("n=2 pair certifies") {
  ConcertedSet s = build_n2();
  CHECK(s.status() == CertStatus::Verified);
  const CycMatrix& a = s.matrices()[0];
  const CycMatrix& b = s.matrices()[1];
  CHECK((a * b + b * a).is_zero());
}

TEST_CASE("reference cubic triple certifies") {
  ConcertedSet t = reference_triple_n3();
  CHECK(t.status() == CertStatus::Verified);
  CHECK(t.dim() == 3);
  for (const auto& m : t.matrices()) CHECK(m.pow(3).is_identity());
}

TEST_CASE("a repeated matrix is refuted with the first pattern") {
  ConcertedSet pair = build_pair(3);
  ConcertedSet dup = user_supplied(3, {pair.matrices()[0], pair.matrices()[0]});
  Certificate cert = certify(dup);
  CHECK_FALSE(cert.verified);
  REQUIRE(cert.pattern_failure.has_value());
  CHECK(cert.pattern_failure->parts == std::vector<unsigned>{1, 2});
  CHECK(cert.pattern_failure->str() == "(1,2)");
}

TEST_CASE("a singular matrix is refuted on the power condition") {
  // the cubic triple with its first matrix's only unit row zeroed out
  ConcertedSet good = reference_triple_n3();
  std::vector<CycMatrix> mats = good.matrices();
  mats[2].at(0, 2) = CycInt::zero(3);
  Certificate cert = certify(user_supplied(3, std::move(mats)));
  CHECK_FALSE(cert.verified);
  REQUIRE(cert.power_failure.has_value());
  CHECK(*cert.power_failure == 2);
}

TEST_CASE("tensor extension certifies and grows the set") {
  ConcertedSet pair = build_pair(3);
  ConcertedSet ext = extend(pair, 2);
  CHECK(ext.status() == CertStatus::Verified);
  CHECK(ext.k() == 3);
  CHECK(ext.dim() == 9);
  CHECK(ext.provenance() == Provenance::TensorExtension);

  ConcertedSet ext2 = extend(build_n2(), 2);
  CHECK(ext2.status() == CertStatus::Verified);
  CHECK(ext2.k() == 3);
  CHECK(ext2.dim() == 4);

  CHECK_THROWS_AS(extend(pair, 1), std::invalid_argument);
  CHECK_THROWS_AS(extend(pair, 3), std::invalid_argument);
  CHECK_THROWS_AS(extend(user_supplied(3, pair.matrices()), 2),
                  std::invalid_argument);
}

TEST_CASE("the naive all-distinguished tensor layout fails certification") {
  // Tensoring every slot by the same distinguished matrix looks plausible
  // but breaks: patterns that use the E-closure factor collapse to a
  // lower-degree anticommutator of the base set, which has no reason to
  // vanish. The certifier catches it at the first such pattern.
  ConcertedSet pair = build_pair(3);
  const CycMatrix& a1 = pair.matrices()[0];
  const CycMatrix& a2 = pair.matrices()[1];
  CycMatrix e = CycMatrix::identity(3, 3);

  std::vector<CycMatrix> printed = {kron(a2, a1), kron(a2, a2), kron(a2, e)};
  Certificate cert = certify(user_supplied(3, std::move(printed)));
  CHECK_FALSE(cert.verified);
  REQUIRE(cert.pattern_failure.has_value());
  CHECK(cert.pattern_failure->parts == std::vector<unsigned>{0, 1, 2});

  // and the working layout degrades the same way when l = 1
  std::vector<CycMatrix> selfclosed = {kron(a1, a1), kron(a1, a2), kron(a1, e)};
  Certificate cert2 = certify(user_supplied(3, std::move(selfclosed)));
  CHECK_FALSE(cert2.verified);
}

TEST_CASE("mixed tensor across two sets certifies") {
  ConcertedSet out = mixed_tensor(build_triple(3), build_pair(3), 2);
  CHECK(out.status() == CertStatus::Verified);
  CHECK(out.k() == 3);
  CHECK(out.dim() == 9);
  CHECK(out.provenance() == Provenance::MixedTensor);

  CHECK_THROWS_AS(mixed_tensor(build_triple(3), build_pair(5), 2),
                  std::invalid_argument);
}

TEST_CASE("certification is thread-invariant") {
  ConcertedSet t = build_triple(3);
  Certificate c1 = certify(t, 1);
  Certificate c3 = certify(t, 3);
  CHECK(c1.verified);
  CHECK(c3.verified);

  ConcertedSet dup = user_supplied(3, {t.matrices()[0], t.matrices()[0]});
  Certificate d1 = certify(dup, 1);
  Certificate d4 = certify(dup, 4);
  REQUIRE(d1.pattern_failure.has_value());
  REQUIRE(d4.pattern_failure.has_value());
  CHECK(d1.pattern_failure->parts == d4.pattern_failure->parts);
}

TEST_CASE("scalar mixing collapses to the power sum") {
  ConcertedSet t = reference_triple_n3();
  for (int x1 = -2; x1 <= 2; ++x1)
    for (int x2 = -2; x2 <= 2; ++x2)
      for (int x3 = -2; x3 <= 2; ++x3)
        CHECK(check_scalar_identity(t, {BigInt(x1), BigInt(x2), BigInt(x3)}));

  // a non-concerted family fails somewhere
  ConcertedSet dup = user_supplied(3, {t.matrices()[0], t.matrices()[0]});
  CHECK_FALSE(check_scalar_identity(dup, {BigInt(1), BigInt(1)}));

  CHECK_THROWS_AS(check_scalar_identity(t, {BigInt(1)}), std::invalid_argument);
}

TEST_CASE("two-sided split negates the tail and needs odd n") {
  ConcertedSet t = build_triple(3);
  TwoSidedSplit split = two_sided_split(t, 2, 1);
  CHECK(split.lhs.size() == 2);
  CHECK(split.rhs.size() == 1);
  CHECK(split.rhs[0] == -t.matrices()[2]);
  CHECK(split.rhs[0].pow(3) == -CycMatrix::identity(3, 3));

  CHECK_THROWS_AS(two_sided_split(t, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(two_sided_split(build_n2(), 1, 1), std::invalid_argument);
}

TEST_CASE("serialization round-trips") {
  for (const ConcertedSet& s :
       {build_pair(3), build_n2(), reference_triple_n3()}) {
    std::string text = serialize(s);
    ConcertedSet back = deserialize(text);
    CHECK(back.n() == s.n());
    CHECK(back.k() == s.k());
    CHECK(back.dim() == s.dim());
    CHECK(back.provenance() == s.provenance());
    CHECK(back.status() == CertStatus::Verified);
    for (std::size_t i = 0; i < s.k(); ++i)
      CHECK(back.matrices()[i] == s.matrices()[i]);
  }
  CHECK_THROWS_AS(deserialize("bogus"), std::invalid_argument);
}

TEST_CASE("pattern bookkeeping") {
  ExponentPattern p{{0, 1, 2}};
  CHECK(p.degree() == 3);
  CHECK(p.nonzero_slots() == 2);
  CHECK(p.str() == "(0,1,2)");
  CHECK(ExponentPattern{{0, 1, 2}} < ExponentPattern{{1, 0, 2}});
}
