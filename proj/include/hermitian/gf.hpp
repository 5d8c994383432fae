#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hermitian/common.hpp"

namespace hermitian {

// A field element is its integer index: the base-p, little-endian encoding of
// the coefficient vector of the residue polynomial. 0 is the zero element and
// 1 is the unit, in every field. The index encoding is the contract used by
// all file formats; everything else (log tables, add tables) is internal.
using Fel = std::uint32_t;

class Field {
 public:
  // Builds F_{p^k} with the lexicographically smallest monic irreducible
  // modulus of degree k (coefficients compared low-degree-first).
  // Requires p prime and p^k <= 2^20.
  static std::shared_ptr<const Field> build(unsigned p, unsigned k);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  Fel order() const { return order_; }
  // k+1 coefficients, constant term first, leading coefficient 1.
  const std::vector<Fel>& modulus() const { return modulus_; }

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const;   // throws on 0
  Fel div(Fel a, Fel b) const;
  // x^e with pow(x, 0) = 1 for every x, including x = 0 (the convention used
  // when evaluating monomials). Negative exponents invert, so they require
  // x != 0.
  Fel pow(Fel x, long long e) const;

  // The subfield pair (F_q, F_{q^2}) is defined when k is even; q = p^(k/2).
  bool has_subfield_pair() const { return k_ % 2 == 0; }
  Fel subfield_order() const;          // q
  Fel frobenius(Fel x) const;          // x^q
  Fel trace_to_subfield(Fel x) const;  // x^q + x
  Fel norm_to_subfield(Fel x) const;   // x^(q+1)
  bool in_subfield(Fel x) const;       // x^q == x
  // All q solutions y of y^q + y = c; requires c in the subfield.
  std::vector<Fel> solve_trace(Fel c) const;

  std::vector<unsigned> digits(Fel a) const;  // little-endian base-p, size k
  Fel from_digits(const std::vector<unsigned>& d) const;

  void check(Fel a) const;  // throws if a is not a valid element index

 private:
  Field() = default;

  unsigned p_ = 0, k_ = 0;
  Fel order_ = 0;
  Fel q_ = 0;  // subfield order when k even, else 0
  std::vector<Fel> modulus_;
  std::vector<Fel> exp_;        // exp_[i] = g^i, 0 <= i < 2*(order-1)
  std::vector<std::uint32_t> log_;
  std::vector<Fel> add_table_;  // full table for small odd-characteristic fields
  std::vector<Fel> frob_;       // x -> x^q when k even

  Fel poly_mul_mod(Fel a, Fel b) const;
  Fel add_slow(Fel a, Fel b) const;
};

// Index mapping of the inclusion sub -> sup; requires sub.p == sup.p and
// sub.k | sup.k. The image of element i is table[i]. Used to factor conics
// over the quadratic extension.
std::vector<Fel> find_embedding(const Field& sub, const Field& sup);

bool is_prime(unsigned n);

}  // namespace hermitian
