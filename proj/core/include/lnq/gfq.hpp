#pragma once

#include <cstdint>
#include <vector>

namespace lnq {

// An element of GF(p^k) in the canonical integer encoding: the value's
// base-p digits are the coefficients of the residue polynomial, digit i
// being the coefficient of x^i.
struct FieldElt {
  std::uint32_t v = 0;
  friend bool operator==(FieldElt, FieldElt) = default;
};

// Arithmetic context for GF(p^k) with a fixed monic irreducible modulus.
// The modulus is the lexicographically smallest monic irreducible degree-k
// polynomial over GF(p), coefficients compared constant-term first, so the
// context is deterministic across runs. Immutable after construction.
class FieldCtx {
 public:
  FieldCtx(long p, int k);

  long p() const { return p_; }
  int k() const { return k_; }
  long q() const { return q_; }
  // Coefficient list of the modulus, constant term first, length k+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElt zero() const { return {0}; }
  FieldElt one() const { return {1}; }
  FieldElt element(std::uint32_t value) const;

  FieldElt add(FieldElt a, FieldElt b) const;
  FieldElt sub(FieldElt a, FieldElt b) const;
  FieldElt neg(FieldElt a) const;
  FieldElt mul(FieldElt a, FieldElt b) const;
  FieldElt inv(FieldElt a) const;  // throws std::domain_error on zero

 private:
  FieldElt mul_direct(FieldElt a, FieldElt b) const;

  long p_;
  int k_;
  long q_;
  std::vector<std::uint32_t> modulus_;
  // Log/antilog tables for q <= 2^16; multiplication falls back to direct
  // polynomial reduction above that.
  bool tables_ = false;
  std::vector<std::uint32_t> exp_table_;
  std::vector<std::int32_t> log_table_;
};

bool is_prime(long n);

}  // namespace lnq
