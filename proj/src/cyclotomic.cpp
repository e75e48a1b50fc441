#include "powsum/cyclotomic.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace powsum {

void require_prime_order(unsigned n) {
  if (n < 2)
    throw std::invalid_argument("cyclotomic order must be a prime >= 2, got " +
                                std::to_string(n));
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      throw std::invalid_argument("cyclotomic order " + std::to_string(n) +
                                  " is not prime (smallest factor " +
                                  std::to_string(d) + ")");
  }
}

static void require_same_order(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("mixed cyclotomic orders " +
                                std::to_string(a.order()) + " and " +
                                std::to_string(b.order()));
}

CycInt CycInt::make(unsigned order, std::vector<BigInt> raw) {
  require_prime_order(order);
  std::vector<BigInt> by_exp(order, BigInt(0));
  for (std::size_t i = 0; i < raw.size(); ++i) by_exp[i % order] += raw[i];
  std::vector<BigInt> out(by_exp.begin(), by_exp.end() - 1);
  if (by_exp.back() != 0)
    for (auto& c : out) c -= by_exp.back();
  return CycInt(order, std::move(out));
}

CycInt CycInt::zero(unsigned order) {
  require_prime_order(order);
  return CycInt(order, std::vector<BigInt>(order - 1, BigInt(0)));
}

CycInt CycInt::zeta(unsigned order) { return zeta_pow(order, 1); }

CycInt CycInt::zeta_pow(unsigned order, unsigned long e) {
  require_prime_order(order);
  std::vector<BigInt> raw(order, BigInt(0));
  raw[e % order] = 1;
  return make(order, std::move(raw));
}

CycInt CycInt::from_int(unsigned order, BigInt v) {
  require_prime_order(order);
  std::vector<BigInt> c(order - 1, BigInt(0));
  c[0] = std::move(v);
  return CycInt(order, std::move(c));
}

bool CycInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycInt::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycInt CycInt::operator+(const CycInt& o) const {
  require_same_order(*this, o);
  std::vector<BigInt> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
  return CycInt(order_, std::move(c));
}

CycInt CycInt::operator-(const CycInt& o) const {
  require_same_order(*this, o);
  std::vector<BigInt> c(coeffs_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
  return CycInt(order_, std::move(c));
}

CycInt CycInt::operator-() const {
  std::vector<BigInt> c(coeffs_);
  for (auto& x : c) x = -x;
  return CycInt(order_, std::move(c));
}

CycInt CycInt::operator*(const CycInt& o) const {
  require_same_order(*this, o);
  const std::size_t m = coeffs_.size();
  std::vector<BigInt> conv(2 * m - 1, BigInt(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (o.coeffs_[j] == 0) continue;
      conv[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return make(order_, std::move(conv));
}

bool CycInt::operator==(const CycInt& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

CycInt CycInt::pow(unsigned long e) const {
  CycInt acc = one(order_);
  CycInt base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

CycInt CycInt::conjugate(unsigned j) const {
  j %= order_;
  if (j == 0)
    throw std::invalid_argument("conjugate index must be nonzero mod order");
  std::vector<BigInt> raw(order_, BigInt(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    raw[(i * j) % order_] += coeffs_[i];
  return make(order_, std::move(raw));
}

std::complex<double> CycInt::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) /
                   static_cast<double>(order_);
    acc += coeffs_[i].get_d() * std::complex<double>(std::cos(angle),
                                                     std::sin(angle));
  }
  return acc;
}

std::string CycInt::str(bool with_order) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) out << mag.get_str();
    if (i > 0) {
      if (!unit) out << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  if (with_order) out << " (n=" << order_ << ")";
  return out.str();
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cannot parse cyclotomic literal \"" + s +
                                "\": " + what + " at offset " +
                                std::to_string(pos));
  }
  unsigned long read_uint() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected digits");
    return std::stoul(s.substr(start, pos - start));
  }
};

}  // namespace

CycInt CycInt::parse(const std::string& text, unsigned fallback_order) {
  std::string body = text;
  unsigned order = fallback_order;

  auto mark = body.rfind("(n=");
  if (mark != std::string::npos) {
    auto close = body.find(')', mark);
    if (close == std::string::npos)
      throw std::invalid_argument("cannot parse cyclotomic literal \"" + text +
                                  "\": unterminated (n=...) suffix");
    order = static_cast<unsigned>(std::stoul(body.substr(mark + 3, close - mark - 3)));
    body = body.substr(0, mark);
  }
  if (order == 0)
    throw std::invalid_argument("cyclotomic literal \"" + text +
                                "\" lacks an (n=...) suffix and no order was supplied");
  require_prime_order(order);

  Cursor cur{body};
  std::vector<BigInt> raw(order, BigInt(0));
  bool any = false;
  while (!cur.done()) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++cur.pos;
    } else if (any) {
      cur.fail("expected + or - between terms");
    }
    BigInt mag = 1;
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::size_t start = cur.pos;
      while (cur.pos < body.size() &&
             std::isdigit(static_cast<unsigned char>(body[cur.pos])))
        ++cur.pos;
      mag = BigInt(body.substr(start, cur.pos - start));
      saw_number = true;
    }
    unsigned long exp = 0;
    if (cur.peek() == '*') {
      ++cur.pos;
      if (cur.peek() != 'z') cur.fail("expected z after *");
    }
    if (cur.peek() == 'z') {
      ++cur.pos;
      exp = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        exp = cur.read_uint();
      }
    } else if (!saw_number) {
      cur.fail("expected a number or z");
    }
    raw[exp % order] += sign * mag;
    any = true;
  }
  if (!any)
    throw std::invalid_argument("cannot parse cyclotomic literal \"" + text +
                                "\": empty expression");
  return make(order, std::move(raw));
}

CycInt exact_div(const CycInt& a, const CycInt& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("mixed cyclotomic orders in exact_div");
  if (b.is_zero()) throw std::domain_error("exact_div by zero");
  const unsigned n = a.order();

  // b * prod(conjugates of b, j >= 2) is the integer norm of b.
  CycInt conj_prod = CycInt::one(n);
  for (unsigned j = 2; j < n; ++j) conj_prod = conj_prod * b.conjugate(j);
  CycInt denom = b * conj_prod;
  if (!denom.is_rational())
    throw std::logic_error("norm computation left a non-rational residue");
  const BigInt& norm = denom.coeffs()[0];
  CycInt num = a * conj_prod;

  std::vector<BigInt> out;
  out.reserve(num.coeffs().size());
  for (const auto& c : num.coeffs()) {
    if (!mpz_divisible_p(c.get_mpz_t(), norm.get_mpz_t()))
      throw std::domain_error("exact_div: " + b.str() + " does not divide " +
                              a.str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), norm.get_mpz_t());
    out.push_back(std::move(q));
  }
  return CycInt::make(n, std::move(out));
}

}  // namespace powsum
