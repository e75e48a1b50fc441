#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "powsum/cyclotomic.hpp"

namespace powsum {

// Dense square matrix over Z[zeta_n]. Multiplication skips zero entries,
// which matters: the construction matrices are permutation-sparse.
class CycMatrix {
 public:
  CycMatrix(unsigned order, std::size_t dim)
      : order_(order), dim_(dim), e_(dim * dim, CycInt::zero(order)) {}

  static CycMatrix identity(unsigned order, std::size_t dim);

  unsigned order() const { return order_; }
  std::size_t dim() const { return dim_; }

  CycInt& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }
  const CycInt& at(std::size_t i, std::size_t j) const {
    return e_[i * dim_ + j];
  }

  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator-() const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  CycMatrix scaled(const CycInt& s) const;
  CycMatrix pow(unsigned long e) const;
  bool is_zero() const;
  bool is_identity() const;

  // Matrix-vector product; v.size() must equal dim().
  std::vector<CycInt> apply(const std::vector<CycInt>& v) const;

  std::string str() const;

 private:
  unsigned order_;
  std::size_t dim_;
  std::vector<CycInt> e_;
};

CycMatrix kron(const CycMatrix& a, const CycMatrix& b);

// Determinant, exact. Cofactor expansion up to dim 6, fraction-free
// Bareiss elimination (exact ring division at every step) above that.
CycInt det(const CycMatrix& m);
CycInt det_cofactor(const CycMatrix& m);
CycInt det_bareiss(CycMatrix m);

struct AnticommutatorResult {
  CycMatrix sum;
  BigInt term_count;
};

// Sum of products over all distinct arrangements of a factor multiset:
// {(A,2),(B,1)} -> AAB + ABA + BAA. The classical normalized form divides
// by multiplicities' factorials; enumerating distinct arrangements realizes
// that without any division. Zero-multiplicity factors are ignored.
AnticommutatorResult gen_anticommutator(
    const std::vector<std::pair<CycMatrix, unsigned>>& factors);

}  // namespace powsum
