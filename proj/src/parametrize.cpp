#include "powsum/parametrize.hpp"

#include <algorithm>
#include <stdexcept>

namespace powsum {

bool power_identity_holds(const ParametrizedSolution& s) {
  CycInt acc = CycInt::zero(s.y.order());
  for (const auto& x : s.xs) acc = acc + x.pow(s.n);
  return acc == s.y.pow(s.n);
}

ParametrizedSolution cramer_parametrize(const ConcertedSet& set,
                                        const std::vector<CycInt>& psi) {
  if (set.status() != CertStatus::Verified)
    throw std::invalid_argument("cramer_parametrize requires a certified set");
  if (set.dim() != set.k())
    throw std::invalid_argument(
        "square system needed (dim " + std::to_string(set.dim()) + " vs k " +
        std::to_string(set.k()) + "); the n=2 pair and the cubic reference "
        "triple both qualify");
  if (psi.size() != set.dim())
    throw std::invalid_argument("psi length " + std::to_string(psi.size()) +
                                " does not match dimension " +
                                std::to_string(set.dim()));
  const unsigned n = set.n();
  for (const auto& p : psi)
    if (p.order() != n)
      throw std::invalid_argument("psi entry order mismatch");
  if (std::all_of(psi.begin(), psi.end(),
                  [](const CycInt& p) { return p.is_zero(); }))
    throw std::invalid_argument("psi must not be the zero vector");

  const std::size_t d = set.dim();
  CycMatrix m(n, d);
  for (std::size_t col = 0; col < d; ++col) {
    std::vector<CycInt> image = set.matrices()[col].apply(psi);
    for (std::size_t row = 0; row < d; ++row) m.at(row, col) = image[row];
  }

  ParametrizedSolution out;
  out.n = n;
  out.delta = det(m);
  for (std::size_t col = 0; col < d; ++col) {
    CycMatrix replaced(m);
    for (std::size_t row = 0; row < d; ++row) replaced.at(row, col) = psi[row];
    out.deltas.push_back(det(replaced));
  }
  out.xs = out.deltas;
  out.y = out.delta;

  if (!power_identity_holds(out))
    throw std::logic_error(
        "power identity failed on a certified set; certification is unsound");
  return out;
}

ParametrizedSolution closed_form_n3(const std::vector<CycInt>& psi) {
  if (psi.size() != 3)
    throw std::invalid_argument("the cubic closed form takes three parameters");
  for (const auto& p : psi)
    if (p.order() != 3)
      throw std::invalid_argument("the cubic closed form works over order 3");

  const CycInt z = CycInt::zeta(3);
  const CycInt z2 = CycInt::zeta_pow(3, 2);
  const CycInt one = CycInt::one(3);
  const CycInt& p1 = psi[0];
  const CycInt& p2 = psi[1];
  const CycInt& p3 = psi[2];

  ParametrizedSolution out;
  out.n = 3;
  out.y = p1 * p3.pow(2) * (one - z2) - p3 * p2.pow(2) * (one - z) -
          p2 * p1.pow(2) * (z - z2);
  out.xs = {
      z * p1.pow(3) + z2 * p2.pow(3) + p3.pow(3),
      -(z * p1.pow(3) + p2.pow(3) + z2 * p3.pow(3)),
      p3 * p1.pow(2) * (one - z2) - p1 * p2.pow(2) * (one - z) -
          p2 * p3.pow(2) * (z - z2),
  };
  out.deltas = out.xs;
  out.delta = out.y;
  return out;
}

RouteComparison compare_n3_routes(const std::vector<CycInt>& psi) {
  RouteComparison cmp;
  cmp.cramer = cramer_parametrize(reference_triple_n3(), psi);
  cmp.closed = closed_form_n3(psi);

  std::vector<std::pair<CycInt, CycInt>> pairs;
  for (std::size_t i = 0; i < 3; ++i)
    pairs.emplace_back(cmp.cramer.xs[i], cmp.closed.xs[i]);
  pairs.emplace_back(cmp.cramer.y, cmp.closed.y);

  const CycInt* anchor_c = nullptr;
  const CycInt* anchor_p = nullptr;
  for (const auto& [c, p] : pairs) {
    if (!c.is_zero()) {
      anchor_c = &c;
      anchor_p = &p;
      break;
    }
  }
  if (!anchor_c) {
    // Both routes degenerate to zero everywhere iff closed is zero too.
    cmp.proportional = std::all_of(
        pairs.begin(), pairs.end(),
        [](const auto& pr) { return pr.second.is_zero(); });
    return cmp;
  }
  CycInt factor;
  try {
    factor = exact_div(*anchor_p, *anchor_c);
  } catch (const std::domain_error&) {
    return cmp;  // not proportional over the ring
  }
  for (const auto& [c, p] : pairs)
    if (p != factor * c) return cmp;
  cmp.proportional = true;
  cmp.factor = factor;
  return cmp;
}

RationalSlice rational_slice(const ParametrizedSolution& s) {
  RationalSlice out;
  for (std::size_t i = 0; i < s.xs.size(); ++i)
    if (!s.xs[i].is_rational()) out.nonrational.push_back(i);
  if (!s.y.is_rational()) out.nonrational.push_back(s.xs.size());
  if (!out.nonrational.empty()) return out;
  out.rational = true;
  for (const auto& x : s.xs) out.xs.push_back(x.coeffs()[0]);
  out.y = s.y.coeffs()[0];
  return out;
}

RationalSlice reduce_by_gcd(RationalSlice s) {
  if (!s.rational) return s;
  BigInt g = abs(s.y);
  for (const auto& x : s.xs) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : s.xs) x /= g;
    s.y /= g;
  }
  return s;
}

}  // namespace powsum
