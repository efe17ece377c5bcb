#pragma once

#include <cstdint>
#include <vector>

namespace nilcover {

/// GF(q) for q prime, or q a small prime power with a bundled irreducible
/// polynomial (4, 8, 9, 16, 25, 27, 32). Elements are encoded as integers
/// 0..q-1 whose base-p digits are the polynomial coefficients; 0 and 1 are
/// the additive and multiplicative identities.
class FiniteField {
 public:
  /// Throws std::invalid_argument for unsupported orders.
  explicit FiniteField(unsigned q);

  unsigned order() const noexcept { return q_; }
  unsigned characteristic() const noexcept { return p_; }
  unsigned extension_degree() const noexcept { return n_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  /// Throws std::domain_error for a = 0.
  unsigned inv(unsigned a) const;

  /// {1, α, ..., α^(n-1)}: an additive basis over the prime field.
  std::vector<unsigned> basis() const;

 private:
  unsigned q_ = 0, p_ = 0, n_ = 0;
  std::vector<unsigned> add_, mul_, neg_, inv_;
};

}  // namespace nilcover
