#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "powsum/bigint.hpp"

namespace powsum {

using Term = std::uint64_t;

// One verified equal-sums-of-like-powers identity. Canonical orientation:
// both sides sorted descending, lexicographically larger side on the left.
struct Solution {
  unsigned n = 0;
  std::vector<Term> lhs;
  std::vector<Term> rhs;
  unsigned r_value = 0;  // r1 + r2 - 1
  bool nontrivial = false;
};

struct VerifyOutcome {
  bool equal = false;
  BigInt lhs_sum;
  BigInt rhs_sum;
  BigInt difference;  // lhs_sum - rhs_sum
  std::optional<Solution> solution;  // set iff equal
};

// Exact power-sum comparison; fills in the nontrivial flag by multiset
// cancellation. Inequality is an outcome, not an exception.
VerifyOutcome verify(unsigned n, std::vector<Term> lhs, std::vector<Term> rhs);

// floor(v^(1/n)), exact: bracketed binary search on bit length, no
// floating point anywhere.
BigInt integer_nth_root(const BigInt& v, unsigned n);

enum class SearchMode { Exhaustive, Randomized };

struct SearchConfig {
  unsigned n = 0;       // exponent
  unsigned m = 1;       // enumerated left-tuple arity
  unsigned k = 3;       // greedy term budget
  Term a_max = 10;      // left terms range over [1, a_max]
  unsigned c = 2;       // window shrink constant, >= 1
  unsigned iter_cap = 64;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;  // randomized draws
  bool nontrivial_only = false;
  bool backtrack = false;  // bounded DFS over the candidate window
  unsigned threads = 1;

  void validate() const;  // throws std::invalid_argument
};

enum class Side { Left, Right };
enum class GreedyOutcome { Solved, BudgetExhausted, Stalled };

struct GreedyStep {
  BigInt remaining;   // signed volume before the step
  BigInt cand_floor;  // y
  BigInt cand_ceil;   // y + 1
  BigInt chosen;
  Side side;
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  GreedyOutcome outcome = GreedyOutcome::Stalled;
  std::vector<Term> left_terms;   // overshoot terms land here
  std::vector<Term> right_terms;
};

std::string to_string(GreedyOutcome o);

// Drives the signed volume toward zero by nearest n-th powers: at each
// step pick y = floor(|rem|^(1/n)) and compare the residuals of y^n and
// (y+1)^n, taking the smaller (ties to y). Overshoot flips the sign of
// the remainder, so the chosen term belongs to the opposite side of the
// equation; the sign bookkeeping records that.
GreedyTrace greedy_decompose(const BigInt& v0, const SearchConfig& cfg);

struct SearchStats {
  std::uint64_t tuples_tried = 0;
  std::uint64_t traces_solved = 0;
  std::uint64_t emitted = 0;
  std::uint64_t nontrivial = 0;
  std::optional<unsigned> best_r;
};

// Enumerates left tuples (non-decreasing, entries in [1, a_max]) or
// samples them in randomized mode, greedily decomposes each volume, and
// hands verified, canonically deduplicated solutions to the sink.
SearchStats run_search(const SearchConfig& cfg,
                       const std::function<void(const Solution&)>& sink);

Solution canonicalize(Solution s);
std::string canonical_key(const Solution& s);

// "L3R2" -> (m, k); throws on anything else.
std::pair<unsigned, unsigned> parse_algo(const std::string& text);

}  // namespace powsum
