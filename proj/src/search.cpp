#include "powsum/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace powsum {

std::string to_string(GreedyOutcome o) {
  switch (o) {
    case GreedyOutcome::Solved: return "solved";
    case GreedyOutcome::BudgetExhausted: return "budget-exhausted";
    case GreedyOutcome::Stalled: return "stalled";
  }
  return "?";
}

void SearchConfig::validate() const {
  if (n < 2) throw std::invalid_argument("exponent must be >= 2");
  if (m == 0)
    throw std::invalid_argument("left arity m = 0 enumerates nothing");
  if (k == 0) throw std::invalid_argument("greedy budget k must be >= 1");
  if (a_max == 0) throw std::invalid_argument("a_max must be >= 1");
  if (c == 0) throw std::invalid_argument("shrink constant c must be >= 1");
  if (iter_cap == 0) throw std::invalid_argument("iter_cap must be >= 1");
  if (threads == 0) throw std::invalid_argument("threads must be >= 1");
  if (mode == SearchMode::Randomized && samples == 0)
    throw std::invalid_argument("randomized mode needs samples >= 1");
}

BigInt integer_nth_root(const BigInt& v, unsigned n) {
  if (v < 0) throw std::domain_error("integer_nth_root of a negative value");
  if (n == 0) throw std::domain_error("zeroth root");
  if (v == 0) return 0;
  if (n == 1) return v;
  const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
  BigInt lo = 0;
  BigInt hi = BigInt(1) << ((bits + n - 1) / n);  // hi^n >= 2^bits > v
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (big_pow(mid, n) <= v)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

static bool sides_share_a_term(const std::vector<Term>& a,
                               const std::vector<Term>& b) {
  // both sorted descending
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] > b[j])
      ++i;
    else
      ++j;
  }
  return false;
}

Solution canonicalize(Solution s) {
  auto strip = [](std::vector<Term>& v) {
    std::erase(v, Term{0});
    std::sort(v.begin(), v.end(), std::greater<>());
  };
  strip(s.lhs);
  strip(s.rhs);
  if (std::lexicographical_compare(s.lhs.begin(), s.lhs.end(), s.rhs.begin(),
                                   s.rhs.end()))
    std::swap(s.lhs, s.rhs);
  s.r_value = static_cast<unsigned>(s.lhs.size() + s.rhs.size()) - 1;
  s.nontrivial = !s.lhs.empty() && !s.rhs.empty() &&
                 !sides_share_a_term(s.lhs, s.rhs);
  return s;
}

std::string canonical_key(const Solution& s) {
  std::ostringstream out;
  out << s.n << "|";
  for (std::size_t i = 0; i < s.lhs.size(); ++i)
    out << (i ? "," : "") << s.lhs[i];
  out << ";";
  for (std::size_t i = 0; i < s.rhs.size(); ++i)
    out << (i ? "," : "") << s.rhs[i];
  return out.str();
}

VerifyOutcome verify(unsigned n, std::vector<Term> lhs,
                     std::vector<Term> rhs) {
  if (n < 2) throw std::invalid_argument("exponent must be >= 2");
  if (lhs.empty() || rhs.empty())
    throw std::invalid_argument("both sides must be nonempty");
  VerifyOutcome out;
  out.lhs_sum = 0;
  out.rhs_sum = 0;
  for (Term t : lhs) out.lhs_sum += big_pow(BigInt(t), n);
  for (Term t : rhs) out.rhs_sum += big_pow(BigInt(t), n);
  out.difference = out.lhs_sum - out.rhs_sum;
  out.equal = (out.difference == 0);
  if (out.equal) {
    Solution s;
    s.n = n;
    s.lhs = std::move(lhs);
    s.rhs = std::move(rhs);
    out.solution = canonicalize(std::move(s));
  }
  return out;
}

GreedyTrace greedy_decompose(const BigInt& v0, const SearchConfig& cfg) {
  cfg.validate();
  GreedyTrace trace;
  const unsigned n = cfg.n;

  auto push_term = [&](const BigInt& chosen, Side side) {
    if (!fits_u64(chosen))
      throw std::overflow_error("greedy term exceeds 64 bits");
    (side == Side::Left ? trace.left_terms : trace.right_terms)
        .push_back(to_u64(chosen));
  };

  if (!cfg.backtrack) {
    BigInt rem = v0;
    unsigned iters = 0;
    while (rem != 0) {
      if (trace.steps.size() >= cfg.k) {
        trace.outcome = GreedyOutcome::BudgetExhausted;
        return trace;
      }
      if (iters++ >= cfg.iter_cap) {
        trace.outcome = GreedyOutcome::BudgetExhausted;
        return trace;
      }
      BigInt av = abs(rem);
      BigInt y = integer_nth_root(av, n);
      BigInt res_low = av - big_pow(y, n);
      BigInt res_high = big_pow(y + 1, n) - av;
      BigInt chosen = (res_low <= res_high) ? y : y + 1;
      BigInt step_pow = big_pow(chosen, n);
      BigInt next = (rem > 0) ? BigInt(rem - step_pow) : BigInt(rem + step_pow);
      if (abs(next) >= av || chosen == 0) {
        trace.outcome = GreedyOutcome::Stalled;
        return trace;
      }
      Side side = (rem > 0) ? Side::Right : Side::Left;
      trace.steps.push_back({rem, y, y + 1, chosen, side});
      push_term(chosen, side);
      rem = next;
    }
    trace.outcome = GreedyOutcome::Solved;
    return trace;
  }

  // Bounded depth-first over the candidate window [floor((|rem|/c)^{1/n}),
  // floor(|rem|^{1/n}) + 1], nearest residual first, sharing iter_cap as a
  // node budget.
  unsigned nodes = 0;
  bool budget_hit = false;
  std::vector<GreedyStep> path;

  auto dfs = [&](auto&& self, const BigInt& rem) -> bool {
    if (rem == 0) return true;
    if (path.size() >= cfg.k) return false;
    if (nodes >= cfg.iter_cap) {
      budget_hit = true;
      return false;
    }
    ++nodes;
    BigInt av = abs(rem);
    BigInt hi = integer_nth_root(av, n);
    BigInt lo = integer_nth_root(av / cfg.c, n);
    std::vector<BigInt> cands;
    for (BigInt cand = lo; cand <= hi + 1; ++cand) {
      if (cand == 0) continue;
      cands.push_back(cand);
    }
    std::sort(cands.begin(), cands.end(), [&](const BigInt& a, const BigInt& b) {
      BigInt ra = abs(av - big_pow(a, n)), rb = abs(av - big_pow(b, n));
      return ra != rb ? ra < rb : a < b;
    });
    for (const BigInt& cand : cands) {
      BigInt cand_pow = big_pow(cand, n);
      BigInt next =
          (rem > 0) ? BigInt(rem - cand_pow) : BigInt(rem + cand_pow);
      if (abs(next) >= av) continue;
      Side side = (rem > 0) ? Side::Right : Side::Left;
      path.push_back({rem, hi, hi + 1, cand, side});
      if (self(self, next)) return true;
      path.pop_back();
    }
    return false;
  };

  if (dfs(dfs, v0)) {
    trace.steps = path;
    for (const auto& step : trace.steps) push_term(step.chosen, step.side);
    trace.outcome = GreedyOutcome::Solved;
  } else {
    trace.outcome =
        budget_hit ? GreedyOutcome::BudgetExhausted : GreedyOutcome::Stalled;
  }
  return trace;
}

namespace {

struct WorkerResult {
  std::vector<Solution> found;
  SearchStats stats;
};

void process_tuple(const std::vector<Term>& tuple, const SearchConfig& cfg,
                   WorkerResult& out) {
  ++out.stats.tuples_tried;
  BigInt v0 = 0;
  for (Term t : tuple) v0 += big_pow(BigInt(t), cfg.n);
  GreedyTrace trace = greedy_decompose(v0, cfg);
  if (trace.outcome != GreedyOutcome::Solved) return;
  ++out.stats.traces_solved;

  std::vector<Term> lhs(tuple);
  lhs.insert(lhs.end(), trace.left_terms.begin(), trace.left_terms.end());
  std::vector<Term> rhs(trace.right_terms);
  if (lhs.empty() || rhs.empty()) return;

  VerifyOutcome check = verify(cfg.n, std::move(lhs), std::move(rhs));
  if (!check.equal)
    throw std::logic_error("greedy trace assembled an unequal solution");
  out.found.push_back(std::move(*check.solution));
}

// Non-decreasing tuples of length m over [1, a_max] with a fixed first
// entry; `handle` sees each one.
template <typename F>
void enumerate_from(Term first, unsigned m, Term a_max, F&& handle) {
  std::vector<Term> t(m, first);
  for (;;) {
    handle(t);
    std::size_t pos = t.size() - 1;
    while (pos >= 1 && t[pos] == a_max) --pos;
    if (pos < 1) return;  // only the fixed head remains
    ++t[pos];
    for (std::size_t j = pos + 1; j < t.size(); ++j) t[j] = t[pos];
  }
}

}  // namespace

SearchStats run_search(const SearchConfig& cfg,
                       const std::function<void(const Solution&)>& sink) {
  cfg.validate();
  unsigned workers = cfg.threads;
  if (cfg.mode == SearchMode::Exhaustive && cfg.a_max < workers)
    workers = static_cast<unsigned>(cfg.a_max);  // partition is by first entry

  std::vector<WorkerResult> results(workers);

  auto worker_body = [&](unsigned w) {
    WorkerResult& mine = results[w];
    if (cfg.mode == SearchMode::Exhaustive) {
      for (Term first = 1 + w; first <= cfg.a_max; first += workers)
        enumerate_from(first, cfg.m, cfg.a_max,
                       [&](const std::vector<Term>& t) {
                         process_tuple(t, cfg, mine);
                       });
    } else {
      std::mt19937_64 rng(cfg.seed + w);
      std::uniform_int_distribution<Term> draw(1, cfg.a_max);
      std::uint64_t quota = cfg.samples / workers +
                            (w < cfg.samples % workers ? 1 : 0);
      std::vector<Term> t(cfg.m);
      for (std::uint64_t s = 0; s < quota; ++s) {
        for (auto& x : t) x = draw(rng);
        std::sort(t.begin(), t.end());
        process_tuple(t, cfg, mine);
      }
    }
  };

  if (workers == 1) {
    worker_body(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_body, w);
    for (auto& th : pool) th.join();
  }

  SearchStats total;
  std::set<std::string> seen;
  for (const auto& r : results) {
    total.tuples_tried += r.stats.tuples_tried;
    total.traces_solved += r.stats.traces_solved;
    for (const auto& sol : r.found) {
      if (cfg.nontrivial_only && !sol.nontrivial) continue;
      if (!seen.insert(canonical_key(sol)).second) continue;
      ++total.emitted;
      if (sol.nontrivial) {
        ++total.nontrivial;
        if (!total.best_r || sol.r_value < *total.best_r)
          total.best_r = sol.r_value;
      }
      sink(sol);
    }
  }
  return total;
}

std::pair<unsigned, unsigned> parse_algo(const std::string& text) {
  static const std::regex shape("L([0-9]+)R([0-9]+)");
  std::smatch m;
  if (!std::regex_match(text, m, shape))
    throw std::invalid_argument("algo must look like L2R3, got \"" + text +
                                "\"");
  unsigned lm = static_cast<unsigned>(std::stoul(m[1]));
  unsigned rk = static_cast<unsigned>(std::stoul(m[2]));
  if (lm == 0 || rk == 0)
    throw std::invalid_argument("algo arities must be positive");
  return {lm, rk};
}

}  // namespace powsum
