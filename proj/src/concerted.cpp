#include "powsum/concerted.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace powsum {

unsigned ExponentPattern::degree() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::size_t ExponentPattern::nonzero_slots() const {
  return std::count_if(parts.begin(), parts.end(),
                       [](unsigned p) { return p > 0; });
}

std::string ExponentPattern::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    out << (i ? "," : "") << parts[i];
  out << ")";
  return out.str();
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Pair: return "pair";
    case Provenance::Triple: return "triple";
    case Provenance::TensorExtension: return "tensor-extension";
    case Provenance::MixedTensor: return "mixed-tensor";
    case Provenance::UserSupplied: return "user-supplied";
  }
  return "?";
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Unchecked: return "unchecked";
    case CertStatus::Verified: return "verified";
    case CertStatus::Refuted: return "refuted";
  }
  return "?";
}

ConcertedSet::ConcertedSet(unsigned n, std::vector<CycMatrix> mats,
                           Provenance prov)
    : n_(n), mats_(std::move(mats)), prov_(prov) {
  require_prime_order(n_);
  if (mats_.empty()) throw std::invalid_argument("empty matrix set");
  for (const auto& m : mats_) {
    if (m.order() != n_)
      throw std::invalid_argument("matrix order " + std::to_string(m.order()) +
                                  " disagrees with set order " +
                                  std::to_string(n_));
    if (m.dim() != mats_.front().dim())
      throw std::invalid_argument("matrices of unequal dimension in set");
  }
}

void ConcertedSet::attach(Certificate c) {
  status_ = c.verified ? CertStatus::Verified : CertStatus::Refuted;
  cert_ = std::move(c);
}

namespace {

using Bucket = std::map<std::vector<unsigned>, CycMatrix>;

void expand(const std::vector<CycMatrix>& mats, unsigned remaining,
            std::vector<unsigned>& counts, const CycMatrix& prefix,
            Bucket& buckets) {
  if (remaining == 0) {
    auto it = buckets.find(counts);
    if (it == buckets.end())
      buckets.emplace(counts, prefix);
    else
      it->second = it->second + prefix;
    return;
  }
  for (std::size_t i = 0; i < mats.size(); ++i) {
    ++counts[i];
    expand(mats, remaining - 1, counts, prefix * mats[i], buckets);
    --counts[i];
  }
}

}  // namespace

Certificate certify(const ConcertedSet& set, unsigned threads) {
  const unsigned n = set.n();
  const auto& mats = set.matrices();
  const std::size_t k = set.k();

  Certificate cert;
  for (std::size_t i = 0; i < k; ++i) {
    if (!mats[i].pow(n).is_identity()) {
      cert.power_failure = i;
      return cert;
    }
  }

  // Full k^n expansion, bucketed by count vector. Subtrees under each
  // leading factor are independent, so that is the parallel split.
  std::vector<Bucket> partial(k, Bucket{});
  auto subtree = [&](std::size_t first) {
    std::vector<unsigned> counts(k, 0);
    counts[first] = 1;
    expand(mats, n - 1, counts, mats[first], partial[first]);
  };

  if (threads <= 1 || k == 1) {
    for (std::size_t i = 0; i < k; ++i) subtree(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mx;
    unsigned width = std::min<std::size_t>(threads, k);
    for (unsigned t = 0; t < width; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t mine;
          {
            std::lock_guard<std::mutex> lock(mx);
            if (next >= k) return;
            mine = next++;
          }
          subtree(mine);
        }
      });
    for (auto& th : pool) th.join();
  }

  Bucket buckets;
  for (auto& p : partial)
    for (auto& [key, sum] : p) {
      auto it = buckets.find(key);
      if (it == buckets.end())
        buckets.emplace(key, std::move(sum));
      else
        it->second = it->second + sum;
    }

  // std::map iterates keys in lexicographic order, so the first offender
  // found is the lexicographically first one.
  for (const auto& [key, sum] : buckets) {
    ExponentPattern pat{key};
    if (pat.nonzero_slots() < 2) continue;  // single-matrix patterns exempt
    if (!sum.is_zero()) {
      cert.pattern_failure = pat;
      return cert;
    }
  }
  cert.verified = true;
  return cert;
}

ConcertedSet certified(ConcertedSet set, unsigned threads) {
  set.attach(certify(set, threads));
  return set;
}

ConcertedSet build_pair(unsigned n) {
  require_prime_order(n);
  if (n == 2)
    throw std::invalid_argument(
        "shift pair needs an odd prime; use build_n2() for n = 2");
  CycMatrix a(n, n), b(n, n);
  for (unsigned i = 0; i < n; ++i) {
    a.at(i, (i + 1) % n) = CycInt::zeta_pow(n, i);
    b.at(i, (i + 1) % n) = CycInt::zeta_pow(n, 2u * i);
  }
  auto set = certified(
      ConcertedSet(n, {std::move(a), std::move(b)}, Provenance::Pair));
  if (set.status() != CertStatus::Verified)
    throw std::logic_error("shift pair failed certification");
  return set;
}

ConcertedSet build_triple(unsigned n) {
  ConcertedSet pair = build_pair(n);
  std::vector<CycMatrix> mats = pair.matrices();
  mats.push_back(mats[0] * mats[1]);
  auto set = certified(ConcertedSet(n, std::move(mats), Provenance::Triple));
  if (set.status() != CertStatus::Verified)
    throw std::logic_error("shift triple failed certification");
  return set;
}

ConcertedSet build_n2() {
  CycMatrix a(2, 2), b(2, 2);
  a.at(0, 0) = CycInt::one(2);
  a.at(1, 1) = -CycInt::one(2);
  b.at(0, 1) = CycInt::one(2);
  b.at(1, 0) = CycInt::one(2);
  auto set = certified(
      ConcertedSet(2, {std::move(a), std::move(b)}, Provenance::Pair));
  if (set.status() != CertStatus::Verified)
    throw std::logic_error("n=2 pair failed certification");
  return set;
}

ConcertedSet reference_triple_n3() {
  const unsigned n = 3;
  CycMatrix a1(n, 3), a2(n, 3), a3(n, 3);
  a1.at(0, 1) = CycInt::zeta(n);
  a1.at(1, 2) = CycInt::zeta_pow(n, 2);
  a1.at(2, 0) = CycInt::one(n);
  a2.at(0, 1) = CycInt::one(n);
  a2.at(1, 2) = CycInt::one(n);
  a2.at(2, 0) = CycInt::one(n);
  a3.at(0, 2) = CycInt::one(n);
  a3.at(1, 0) = CycInt::zeta(n);
  a3.at(2, 1) = CycInt::zeta_pow(n, 2);
  auto set = certified(ConcertedSet(
      n, {std::move(a1), std::move(a2), std::move(a3)}, Provenance::Triple));
  if (set.status() != CertStatus::Verified)
    throw std::logic_error("reference cubic triple failed certification");
  return set;
}

static void require_certified(const ConcertedSet& set, const char* who) {
  if (set.status() != CertStatus::Verified)
    throw std::invalid_argument(std::string(who) +
                                " requires a certified input set (status: " +
                                to_string(set.status()) + ")");
}

ConcertedSet extend(const ConcertedSet& base, std::size_t l) {
  require_certified(base, "extend");
  if (base.k() < 2)
    throw std::invalid_argument("extend needs at least two matrices");
  if (l < 2 || l > base.k())
    throw std::invalid_argument("extend index l must lie in [2, k], got " +
                                std::to_string(l));
  const auto& a = base.matrices();
  std::vector<CycMatrix> out;
  out.reserve(base.k() + 1);
  for (const auto& ai : a) out.push_back(kron(a[0], ai));
  out.push_back(kron(a[l - 1], CycMatrix::identity(base.n(), base.dim())));
  auto set = certified(
      ConcertedSet(base.n(), std::move(out), Provenance::TensorExtension));
  if (set.status() != CertStatus::Verified)
    throw std::logic_error("tensor extension failed certification");
  return set;
}

ConcertedSet mixed_tensor(const ConcertedSet& left, const ConcertedSet& right,
                          std::size_t l) {
  require_certified(left, "mixed_tensor");
  require_certified(right, "mixed_tensor");
  if (left.n() != right.n())
    throw std::invalid_argument("mixed_tensor requires equal orders, got " +
                                std::to_string(left.n()) + " and " +
                                std::to_string(right.n()));
  if (l < 2 || l > left.k())
    throw std::invalid_argument("mixed_tensor index l must lie in [2, k], got " +
                                std::to_string(l));
  const auto& lm = left.matrices();
  const auto& rm = right.matrices();
  std::vector<CycMatrix> out;
  out.reserve(right.k() + 1);
  for (const auto& ri : rm) out.push_back(kron(lm[0], ri));
  out.push_back(kron(lm[l - 1], CycMatrix::identity(right.n(), right.dim())));
  auto set = certified(
      ConcertedSet(left.n(), std::move(out), Provenance::MixedTensor));
  if (set.status() != CertStatus::Verified)
    throw std::logic_error("mixed tensor construction failed certification");
  return set;
}

ConcertedSet user_supplied(unsigned n, std::vector<CycMatrix> mats) {
  return ConcertedSet(n, std::move(mats), Provenance::UserSupplied);
}

bool check_scalar_identity(const ConcertedSet& set,
                           const std::vector<BigInt>& xs) {
  if (xs.size() != set.k())
    throw std::invalid_argument("expected " + std::to_string(set.k()) +
                                " coefficients, got " +
                                std::to_string(xs.size()));
  const unsigned n = set.n();
  CycMatrix mix(n, set.dim());
  BigInt power_sum = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mix = mix + set.matrices()[i].scaled(CycInt::from_int(n, xs[i]));
    power_sum += big_pow(xs[i], n);
  }
  CycMatrix expect =
      CycMatrix::identity(n, set.dim()).scaled(CycInt::from_int(n, power_sum));
  return mix.pow(n) == expect;
}

TwoSidedSplit two_sided_split(const ConcertedSet& set, std::size_t r1,
                              std::size_t r2) {
  if (set.n() % 2 == 0)
    throw std::invalid_argument(
        "two-sided split needs odd n: negation flips the sign of an n-th "
        "power only for odd exponents");
  if (r1 + r2 != set.k())
    throw std::invalid_argument("r1 + r2 = " + std::to_string(r1 + r2) +
                                " does not match set size " +
                                std::to_string(set.k()));
  if (r1 == 0 || r2 == 0)
    throw std::invalid_argument("both sides need at least one matrix");
  TwoSidedSplit split;
  for (std::size_t i = 0; i < r1; ++i) split.lhs.push_back(set.matrices()[i]);
  for (std::size_t i = r1; i < set.k(); ++i)
    split.rhs.push_back(-set.matrices()[i]);
  return split;
}

std::string serialize(const ConcertedSet& set) {
  std::ostringstream out;
  out << "concerted-set v1\n";
  out << "n " << set.n() << "\n";
  out << "k " << set.k() << "\n";
  out << "dim " << set.dim() << "\n";
  out << "provenance " << to_string(set.provenance()) << "\n";
  out << "status " << to_string(set.status()) << "\n";
  for (std::size_t m = 0; m < set.k(); ++m) {
    out << "matrix " << m << "\n";
    const CycMatrix& mat = set.matrices()[m];
    for (std::size_t i = 0; i < mat.dim(); ++i) {
      for (std::size_t j = 0; j < mat.dim(); ++j)
        out << (j ? " | " : "") << mat.at(i, j).str(false);
      out << "\n";
    }
  }
  return out.str();
}

namespace {

std::vector<std::string> split_str(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = s.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + sep.size();
  }
}

}  // namespace

ConcertedSet deserialize(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto next_line = [&]() -> std::string {
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return line;
    }
    throw std::invalid_argument("truncated concerted-set text");
  };

  if (next_line() != "concerted-set v1")
    throw std::invalid_argument("missing concerted-set v1 header");
  auto field = [&](const std::string& name) -> std::string {
    std::string l = next_line();
    if (l.rfind(name + " ", 0) != 0)
      throw std::invalid_argument("expected field '" + name + "', got '" + l +
                                  "'");
    return l.substr(name.size() + 1);
  };
  unsigned n = static_cast<unsigned>(std::stoul(field("n")));
  std::size_t k = std::stoul(field("k"));
  std::size_t dim = std::stoul(field("dim"));
  std::string prov_name = field("provenance");
  std::string status_name = field("status");

  Provenance prov = Provenance::UserSupplied;
  for (Provenance p : {Provenance::Pair, Provenance::Triple,
                       Provenance::TensorExtension, Provenance::MixedTensor,
                       Provenance::UserSupplied})
    if (to_string(p) == prov_name) prov = p;

  std::vector<CycMatrix> mats;
  for (std::size_t m = 0; m < k; ++m) {
    std::string head = next_line();
    if (head != "matrix " + std::to_string(m))
      throw std::invalid_argument("expected 'matrix " + std::to_string(m) +
                                  "', got '" + head + "'");
    CycMatrix mat(n, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      auto cells = split_str(next_line(), " | ");
      if (cells.size() != dim)
        throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                    std::to_string(cells.size()) +
                                    " cells, expected " + std::to_string(dim));
      for (std::size_t j = 0; j < dim; ++j)
        mat.at(i, j) = CycInt::parse(cells[j], n);
    }
    mats.push_back(std::move(mat));
  }
  ConcertedSet set(n, std::move(mats), prov);
  // Stored status is advisory; only a fresh certificate upgrades it.
  if (status_name == "verified" || status_name == "refuted")
    set.attach(certify(set));
  return set;
}

}  // namespace powsum
