#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powsum/cycmatrix.hpp"

namespace powsum {

// Count vector (n_1, ..., n_k), one slot per matrix, summing to the
// degree. Identifies one mixed-power pattern of the vanishing condition.
struct ExponentPattern {
  std::vector<unsigned> parts;

  unsigned degree() const;
  std::size_t nonzero_slots() const;
  bool operator==(const ExponentPattern& o) const { return parts == o.parts; }
  bool operator<(const ExponentPattern& o) const { return parts < o.parts; }
  std::string str() const;
};

enum class Provenance { Pair, Triple, TensorExtension, MixedTensor, UserSupplied };
enum class CertStatus { Unchecked, Verified, Refuted };

std::string to_string(Provenance p);
std::string to_string(CertStatus s);

struct Certificate {
  bool verified = false;
  // First matrix whose n-th power is not the identity, if any.
  std::optional<std::size_t> power_failure;
  // Lexicographically first count vector whose anticommutator is nonzero.
  std::optional<ExponentPattern> pattern_failure;
};

// k matrices over Z[zeta_n] claimed to satisfy: A_i^n = E for all i, and
// every degree-n anticommutator mixing at least two distinct matrices
// (each individual power < n) vanishes.
class ConcertedSet {
 public:
  ConcertedSet(unsigned n, std::vector<CycMatrix> mats, Provenance prov);

  unsigned n() const { return n_; }
  std::size_t k() const { return mats_.size(); }
  std::size_t dim() const { return mats_.front().dim(); }
  const std::vector<CycMatrix>& matrices() const { return mats_; }
  Provenance provenance() const { return prov_; }
  CertStatus status() const { return status_; }
  const std::optional<Certificate>& certificate() const { return cert_; }

  void attach(Certificate c);

 private:
  unsigned n_;
  std::vector<CycMatrix> mats_;
  Provenance prov_;
  CertStatus status_ = CertStatus::Unchecked;
  std::optional<Certificate> cert_;
};

// Exhaustive check of the defining conditions. Expands all k^n ordered
// degree-n products once, sharing prefixes, and accumulates them into
// per-pattern buckets; patterns concentrated on a single matrix are
// exempt (they equal E by the power condition).
Certificate certify(const ConcertedSet& set, unsigned threads = 1);

// Runs certify and records the outcome on the set.
ConcertedSet certified(ConcertedSet set, unsigned threads = 1);

// Shift pair over Z[zeta_n], odd prime n: A has a_{i,i+1} = zeta^i, B has
// b_{i,i+1} = zeta^{2i} (indices mod n). Satisfies AB = zeta BA.
ConcertedSet build_pair(unsigned n);

// The pair plus their product AB.
ConcertedSet build_triple(unsigned n);

// n = 2: diag(1,-1) and the 0/1 swap matrix.
ConcertedSet build_n2();

// The fixed 3x3 cubic triple used by the closed-form parametrization.
ConcertedSet reference_triple_n3();

// Grows a certified set {A_1..A_k} to k+1 matrices of squared dimension:
// B_i = A_1 (x) A_i, plus B_{k+1} = A_l (x) E, where 2 <= l <= k (1-based).
ConcertedSet extend(const ConcertedSet& base, std::size_t l = 2);

// Same shape across two certified sets with equal n: the right set's
// matrices each tensored with left's first matrix, closed off with
// L_l (x) E. Index l picks the distinguished left matrix, 2 <= l <= left.k().
ConcertedSet mixed_tensor(const ConcertedSet& left, const ConcertedSet& right,
                          std::size_t l = 2);

ConcertedSet user_supplied(unsigned n, std::vector<CycMatrix> mats);

// Sum-of-powers witness: (sum x_i A_i)^n = (sum x_i^n) E for any integers.
bool check_scalar_identity(const ConcertedSet& set,
                           const std::vector<BigInt>& xs);

// Split for two-sided equations, odd n only: first r1 matrices as-is,
// the remaining r2 negated (so (-B)^n = -B^n = -E contributes with the
// opposite sign).
struct TwoSidedSplit {
  std::vector<CycMatrix> lhs;
  std::vector<CycMatrix> rhs;
};
TwoSidedSplit two_sided_split(const ConcertedSet& set, std::size_t r1,
                              std::size_t r2);

std::string serialize(const ConcertedSet& set);
ConcertedSet deserialize(const std::string& text);

}  // namespace powsum
