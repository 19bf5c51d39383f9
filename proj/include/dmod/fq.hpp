// Copyright 2026 The dmod Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DMOD_FQ_HPP
#define DMOD_FQ_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace dmod {

// The constant field F_q, q = p^e. Elements are integer codes 0..q-1 whose
// base-p digits are the coordinates over F_p in the basis 1, y, ..., y^{e-1},
// y a root of modulus(). For e == 1 the code is the residue itself.
class ConstField {
 public:
  explicit ConstField(uint32_t q);

  uint32_t p() const { return p_; }
  uint32_t e() const { return e_; }
  uint32_t q() const { return q_; }
  // Defining polynomial of F_q over F_p (low degree first, monic); {0,1} when e == 1.
  const std::vector<uint32_t>& modulus() const { return mod_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (e_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (!add_.empty()) return add_[a * q_ + b];
    return add_digits(a, b);
  }
  uint32_t neg(uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_[a];
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (e_ == 1) return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
  uint32_t pow(uint32_t a, uint64_t n) const;
  // c^{1/p}; the p-power map is a bijection of F_q.
  uint32_t pth_root(uint32_t a) const { return pow(a, q_ / p_); }
  // Image of an integer in the prime field.
  uint32_t from_int(int64_t v) const {
    int64_t m = v % static_cast<int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<uint32_t>(m);
  }
  // A fixed generator of F_q^x.
  uint32_t primitive() const { return prim_; }
  uint32_t multiplicative_order(uint32_t a) const;

 private:
  uint32_t add_digits(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0, e_ = 0, q_ = 0, prim_ = 1;
  std::vector<uint32_t> mod_;
  std::vector<uint32_t> add_, neg_, log_, exp_;
};

using ConstFieldPtr = std::shared_ptr<const ConstField>;

ConstFieldPtr make_const_field(uint32_t q);

// Factor q = p^e; returns false when q is not a prime power.
bool prime_power(uint32_t q, uint32_t& p, uint32_t& e);

}  // namespace dmod

#endif  // DMOD_FQ_HPP
