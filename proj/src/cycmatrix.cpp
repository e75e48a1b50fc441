#include "powsum/cycmatrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace powsum {

static void require_compatible(const CycMatrix& a, const CycMatrix& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("mixed cyclotomic orders " +
                                std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
  if (a.dim() != b.dim())
    throw std::invalid_argument("mixed matrix dimensions " +
                                std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()));
}

CycMatrix CycMatrix::identity(unsigned order, std::size_t dim) {
  CycMatrix m(order, dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = CycInt::one(order);
  return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  require_compatible(*this, o);
  CycMatrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  require_compatible(*this, o);
  CycMatrix r(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

CycMatrix CycMatrix::operator-() const {
  CycMatrix r(*this);
  for (auto& x : r.e_) x = -x;
  return r;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  require_compatible(*this, o);
  CycMatrix r(order_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const CycInt& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        const CycInt& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  }
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  return order_ == o.order_ && dim_ == o.dim_ && e_ == o.e_;
}

CycMatrix CycMatrix::scaled(const CycInt& s) const {
  CycMatrix r(*this);
  for (auto& x : r.e_) x = x * s;
  return r;
}

CycMatrix CycMatrix::pow(unsigned long e) const {
  CycMatrix acc = identity(order_, dim_);
  CycMatrix base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool CycMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](const CycInt& x) { return x.is_zero(); });
}

bool CycMatrix::is_identity() const {
  return *this == identity(order_, dim_);
}

std::vector<CycInt> CycMatrix::apply(const std::vector<CycInt>& v) const {
  if (v.size() != dim_)
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match dimension " +
                                std::to_string(dim_));
  std::vector<CycInt> r(dim_, CycInt::zero(order_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      if (at(i, j).is_zero()) continue;
      r[i] = r[i] + at(i, j) * v[j];
    }
  return r;
}

std::string CycMatrix::str() const {
  std::vector<std::string> cells(dim_ * dim_);
  std::vector<std::size_t> width(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      cells[i * dim_ + j] = at(i, j).str(false);
      width[j] = std::max(width[j], cells[i * dim_ + j].size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < dim_; ++i) {
    out << "[ ";
    for (std::size_t j = 0; j < dim_; ++j) {
      const std::string& c = cells[i * dim_ + j];
      out << c << std::string(width[j] - c.size(), ' ');
      out << (j + 1 < dim_ ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

CycMatrix kron(const CycMatrix& a, const CycMatrix& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("mixed cyclotomic orders in kron");
  const std::size_t da = a.dim(), db = b.dim();
  CycMatrix r(a.order(), da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const CycInt& aij = a.at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * db + k, j * db + l) = aij * b.at(k, l);
        }
    }
  return r;
}

static CycMatrix minor_of(const CycMatrix& m, std::size_t row,
                          std::size_t col) {
  CycMatrix r(m.order(), m.dim() - 1);
  std::size_t ri = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (i == row) continue;
    std::size_t rj = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j == col) continue;
      r.at(ri, rj) = m.at(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

CycInt det_cofactor(const CycMatrix& m) {
  const std::size_t d = m.dim();
  if (d == 0) return CycInt::one(m.order());
  if (d == 1) return m.at(0, 0);
  CycInt acc = CycInt::zero(m.order());
  for (std::size_t j = 0; j < d; ++j) {
    if (m.at(0, j).is_zero()) continue;
    CycInt term = m.at(0, j) * det_cofactor(minor_of(m, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

CycInt det_bareiss(CycMatrix m) {
  const std::size_t d = m.dim();
  if (d == 0) return CycInt::one(m.order());
  bool negate = false;
  CycInt prev = CycInt::one(m.order());
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < d && m.at(r, k).is_zero()) ++r;
      if (r == d) return CycInt::zero(m.order());
      for (std::size_t j = 0; j < d; ++j) std::swap(m.at(k, j), m.at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < d; ++i)
      for (std::size_t j = k + 1; j < d; ++j)
        m.at(i, j) = exact_div(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j),
                               prev);
    prev = m.at(k, k);
  }
  CycInt result = m.at(d - 1, d - 1);
  return negate ? -result : result;
}

CycInt det(const CycMatrix& m) {
  return m.dim() <= 6 ? det_cofactor(m) : det_bareiss(m);
}

AnticommutatorResult gen_anticommutator(
    const std::vector<std::pair<CycMatrix, unsigned>>& factors) {
  std::vector<const CycMatrix*> mats;
  std::vector<unsigned> counts;
  unsigned total = 0;
  for (const auto& [mat, mult] : factors) {
    if (mult == 0) continue;
    if (!mats.empty()) require_compatible(*mats.front(), mat);
    mats.push_back(&mat);
    counts.push_back(mult);
    total += mult;
  }
  if (total == 0)
    throw std::invalid_argument("anticommutator needs at least one factor");

  const unsigned order = mats.front()->order();
  const std::size_t dim = mats.front()->dim();
  CycMatrix acc(order, dim);
  BigInt seen = 0;

  // Depth-first over distinct arrangements, sharing prefix products.
  auto rec = [&](auto&& self, unsigned remaining,
                 const std::optional<CycMatrix>& prefix) -> void {
    if (remaining == 0) {
      acc = acc + *prefix;
      seen += 1;
      return;
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      if (counts[i] == 0) continue;
      --counts[i];
      self(self, remaining - 1,
           prefix ? std::optional<CycMatrix>(*prefix * *mats[i])
                  : std::optional<CycMatrix>(*mats[i]));
      ++counts[i];
    }
  };
  rec(rec, total, std::nullopt);

  BigInt expected = factorial(total);
  for (unsigned c : counts) expected /= factorial(c);
  if (seen != expected)
    throw std::logic_error("arrangement count mismatch: saw " + seen.get_str() +
                           ", expected " + expected.get_str());
  return {std::move(acc), std::move(seen)};
}

}  // namespace powsum
