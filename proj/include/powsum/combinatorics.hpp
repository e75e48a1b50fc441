#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powsum/bigint.hpp"
#include "powsum/search.hpp"

namespace powsum {

struct ResidueHistogram {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<BigInt> counts;  // per residue class, sums to C(n,m)
  bool uniform = false;
  bool hypothesis_ok = false;  // n prime and 1 <= m < n
};

// Occupation numbers of subset sums mod n over all C(n,m) m-subsets of
// {0..n-1}. For prime n the classes come out exactly equal; composite n
// is allowed as a negative control, flagged via hypothesis_ok.
ResidueHistogram residue_distribution(unsigned n, unsigned m);

struct BoundWitness {
  unsigned n = 0;
  unsigned k0 = 0;  // n + 1
  BigInt a_min;     // smallest A with tuple count beating value count bound
  BigInt tuples_at_a;       // C(A + k0, k0)
  BigInt value_cap_at_a;    // k0 * A^n
  unsigned implied_bound = 0;  // 2*k0 - 1 = 2n + 1
};

// Pigeonhole witness behind the 2n+1 representation bound: the smallest A
// where the count of non-decreasing k0-tuples in [0,A] strictly exceeds
// k0 * A^n. Degenerate early-A hits don't count: minimality means the
// inequality holds at A and fails at A-1.
BoundWitness bound_witness(unsigned n);

struct SignIdentityInstance {
  unsigned n = 0;
  std::vector<BigInt> a;
  BigInt lhs;  // sum over all 2^n sign vectors of (sum s_i a_i)^n (-1)^{#minus}
  BigInt rhs;  // 2^n n! prod a_i
  bool holds = false;
};

SignIdentityInstance sign_identity_check(const std::vector<BigInt>& a);

struct RnEntry {
  unsigned n = 0;
  std::optional<unsigned> exact;      // known exact value
  std::optional<unsigned> best_upper; // best restriction, seeds + observations
  unsigned cap_counting = 0;          // 2n + 1
  unsigned cap_sharpened = 0;         // 2n - 1, sharper published bound
  std::vector<std::string> witnesses; // display literals backing best_upper
};

// Running table of restrictions on the least r1 + r2 - 1 admitting a
// nontrivial solution, per exponent. Seeded with the established values;
// verified nontrivial solutions can only tighten it.
class RnLedger {
 public:
  static RnLedger seeded();

  // Rejects trivial or unverified-shape solutions (both sides nonempty,
  // exact equality is the caller's responsibility via verify()).
  void update(const Solution& sol);

  bool has(unsigned n) const { return entries_.count(n) > 0; }
  const RnEntry& at(unsigned n) const;
  const std::map<unsigned, RnEntry>& entries() const { return entries_; }

  struct ConjectureRow {
    unsigned n = 0;
    unsigned bound = 0;
    bool linear_ok = false;   // bound <= n
    double log_ratio = 0.0;   // bound / ln n
  };
  // Per-entry consistency with the two closing conjectures: r(n) <= n,
  // and r(n) growing no slower than a multiple of ln n. Reported, never
  // asserted.
  std::vector<ConjectureRow> conjecture_report() const;

  // True when every tracked n <= 7 has bound <= n.
  bool linear_bound_holds_through_7() const;

 private:
  std::map<unsigned, RnEntry> entries_;
};

}  // namespace powsum
