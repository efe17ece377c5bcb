#include "nilcover/finite_field.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace nilcover {

namespace {

struct Modulus {
  unsigned p;
  // Monic irreducible polynomial, low coefficients only: x^n + c[n-1] x^(n-1) + ... + c[0].
  std::vector<unsigned> low;
};

const std::map<unsigned, Modulus>& prime_power_moduli() {
  static const std::map<unsigned, Modulus> table{
      {4, {2, {1, 1}}},           // x^2 + x + 1
      {8, {2, {1, 1, 0}}},        // x^3 + x + 1
      {9, {3, {1, 0}}},           // x^2 + 1
      {16, {2, {1, 1, 0, 0}}},    // x^4 + x + 1
      {25, {5, {3, 0}}},          // x^2 + 3
      {27, {3, {1, 2, 0}}},       // x^3 + 2x + 1
      {32, {2, {1, 0, 1, 0, 0}}}, // x^5 + x^2 + 1
  };
  return table;
}

bool prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
  std::vector<unsigned> low;
  if (prime(q)) {
    p_ = q;
    n_ = 1;
  } else {
    auto it = prime_power_moduli().find(q);
    if (it == prime_power_moduli().end()) {
      throw std::invalid_argument("unsupported field order " + std::to_string(q));
    }
    p_ = it->second.p;
    low = it->second.low;
    n_ = static_cast<unsigned>(low.size());
  }

  auto digits = [&](unsigned a) {
    std::vector<unsigned> d(n_);
    for (unsigned i = 0; i < n_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  };
  auto encode = [&](const std::vector<unsigned>& d) {
    unsigned a = 0;
    for (unsigned i = n_; i-- > 0;) a = a * p_ + d[i];
    return a;
  };

  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a);
    std::vector<unsigned> dn(n_);
    for (unsigned i = 0; i < n_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = encode(dn);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b);
      std::vector<unsigned> sum(n_);
      for (unsigned i = 0; i < n_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q + b] = encode(sum);

      std::vector<unsigned> prod(2 * n_, 0);
      for (unsigned i = 0; i < n_; ++i) {
        for (unsigned j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      }
      // Reduce using x^n = -(low[0] + low[1] x + ...).
      for (unsigned k = 2 * n_ - 1; k >= n_ && k > 0; --k) {
        unsigned c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (unsigned i = 0; i < n_; ++i) {
          prod[k - n_ + i] = (prod[k - n_ + i] + (p_ - low[i]) % p_ * c) % p_;
        }
      }
      prod.resize(n_);
      mul_[a * q + b] = encode(prod);
    }
  }
  for (unsigned a = 1; a < q; ++a) {
    for (unsigned b = 1; b < q; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == 0) throw std::logic_error("modulus for GF(" + std::to_string(q) + ") is reducible");
  }
}

unsigned FiniteField::inv(unsigned a) const {
  if (a == 0 || a >= q_) throw std::domain_error("zero has no inverse");
  return inv_[a];
}

std::vector<unsigned> FiniteField::basis() const {
  std::vector<unsigned> out;
  unsigned power = 1;
  for (unsigned i = 0; i < n_; ++i) {
    out.push_back(power);
    power *= p_;  // digit i set: the monomial x^i
  }
  return out;
}

}  // namespace nilcover
