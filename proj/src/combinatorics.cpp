#include "powsum/combinatorics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace powsum {

static bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ResidueHistogram residue_distribution(unsigned n, unsigned m) {
  if (n < 2) throw std::invalid_argument("modulus must be >= 2");
  if (m < 1 || m >= n)
    throw std::invalid_argument("subset size must satisfy 1 <= m < n");

  ResidueHistogram h;
  h.n = n;
  h.m = m;
  h.hypothesis_ok = is_prime(n);
  h.counts.assign(n, BigInt(0));

  // All m-subsets of {0..n-1} via the revolving-door order is overkill;
  // a plain lexicographic index walk is fine at n <= 31.
  std::vector<unsigned> idx(m);
  for (unsigned i = 0; i < m; ++i) idx[i] = i;
  for (;;) {
    unsigned sum = 0;
    for (unsigned i : idx) sum += i;
    h.counts[sum % n] += 1;

    int pos = static_cast<int>(m) - 1;
    while (pos >= 0 && idx[pos] == n - m + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned j = pos + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }

  h.uniform = true;
  for (const auto& c : h.counts)
    if (c != h.counts[0]) {
      h.uniform = false;
      break;
    }
  return h;
}

BoundWitness bound_witness(unsigned n) {
  if (n < 2) throw std::invalid_argument("power must be >= 2");
  BoundWitness w;
  w.n = n;
  w.k0 = n + 1;
  w.implied_bound = 2 * n + 1;

  const BigInt cap = BigInt("1000000000000");
  auto beats = [&](const BigInt& a) {
    return binomial(a + w.k0, w.k0) > BigInt(w.k0) * big_pow(a, n);
  };
  bool prev = beats(0);
  for (BigInt a = 1; a <= cap; ++a) {
    bool here = beats(a);
    if (here && !prev) {
      w.a_min = a;
      w.tuples_at_a = binomial(a + w.k0, w.k0);
      w.value_cap_at_a = BigInt(w.k0) * big_pow(a, n);
      return w;
    }
    prev = here;
  }
  throw std::runtime_error("no witness below 10^12 for n = " +
                           std::to_string(n) +
                           "; the scan cap is a safety net, raise it");
}

SignIdentityInstance sign_identity_check(const std::vector<BigInt>& a) {
  if (a.empty()) throw std::invalid_argument("need at least one coefficient");
  if (a.size() > 63) throw std::invalid_argument("too many coefficients");
  SignIdentityInstance inst;
  inst.n = static_cast<unsigned>(a.size());
  inst.a = a;

  const unsigned n = inst.n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    BigInt dot = 0;
    unsigned minus = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (std::uint64_t(1) << i)) {
        dot -= a[i];
        ++minus;
      } else {
        dot += a[i];
      }
    }
    BigInt contrib = big_pow(dot, n);
    inst.lhs += (minus % 2 == 0) ? contrib : -contrib;
  }

  inst.rhs = (BigInt(1) << n) * factorial(n);
  for (const auto& ai : a) inst.rhs *= ai;
  inst.holds = (inst.lhs == inst.rhs);
  return inst;
}

RnLedger RnLedger::seeded() {
  RnLedger ledger;
  auto seed = [&](unsigned n, std::optional<unsigned> exact, unsigned upper) {
    RnEntry e;
    e.n = n;
    e.exact = exact;
    e.best_upper = upper;
    e.cap_counting = 2 * n + 1;
    e.cap_sharpened = 2 * n - 1;
    ledger.entries_[n] = std::move(e);
  };
  seed(3, 3, 3);
  seed(4, std::nullopt, 3);
  seed(5, std::nullopt, 4);
  seed(6, std::nullopt, 5);
  seed(7, std::nullopt, 7);
  seed(8, std::nullopt, 9);
  seed(9, std::nullopt, 12);
  seed(10, std::nullopt, 15);
  seed(11, std::nullopt, 19);
  return ledger;
}

void RnLedger::update(const Solution& sol) {
  if (!sol.nontrivial)
    throw std::invalid_argument(
        "trivial solutions carry no information about the least r");
  if (sol.lhs.empty() || sol.rhs.empty())
    throw std::invalid_argument("both sides must be nonempty");

  RnEntry& e = entries_[sol.n];
  if (e.n == 0) {
    e.n = sol.n;
    e.cap_counting = 2 * sol.n + 1;
    e.cap_sharpened = 2 * sol.n - 1;
  }
  std::ostringstream lit;
  lit << "(";
  for (std::size_t i = 0; i < sol.lhs.size(); ++i)
    lit << (i ? "," : "") << sol.lhs[i];
  lit << ";";
  for (std::size_t i = 0; i < sol.rhs.size(); ++i)
    lit << (i ? "," : "") << sol.rhs[i];
  lit << ")^" << sol.n;

  if (!e.best_upper || sol.r_value < *e.best_upper) {
    e.best_upper = sol.r_value;
    e.witnesses.clear();
    e.witnesses.push_back(lit.str());
  } else if (sol.r_value == *e.best_upper) {
    e.witnesses.push_back(lit.str());
  }
}

const RnEntry& RnLedger::at(unsigned n) const {
  auto it = entries_.find(n);
  if (it == entries_.end())
    throw std::out_of_range("no entry for n = " + std::to_string(n));
  return it->second;
}

std::vector<RnLedger::ConjectureRow> RnLedger::conjecture_report() const {
  std::vector<ConjectureRow> rows;
  for (const auto& [n, e] : entries_) {
    if (!e.best_upper) continue;
    ConjectureRow row;
    row.n = n;
    row.bound = *e.best_upper;
    row.linear_ok = (*e.best_upper <= n);
    row.log_ratio = static_cast<double>(*e.best_upper) / std::log(n);
    rows.push_back(row);
  }
  return rows;
}

bool RnLedger::linear_bound_holds_through_7() const {
  for (const auto& [n, e] : entries_) {
    if (n > 7 || !e.best_upper) continue;
    if (*e.best_upper > n) return false;
  }
  return true;
}

}  // namespace powsum
