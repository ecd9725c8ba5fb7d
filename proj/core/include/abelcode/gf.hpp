#pragma once

// Finite field arithmetic.
//
// BaseField is the alphabet F_q (q = p^s <= 256) that codewords and matrices
// live in; symbols are byte codes sum(c_k p^k) of the polynomial representation.
//
// FieldContext is an extension F_{q^M} represented over the prime field, with a
// fixed generator, primitive roots of unity and F_q-coordinate maps for every
// intermediate subfield F_{q^d}, d | M.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "abelcode/integer.hpp"

namespace abelcode {

using Sym = std::uint8_t;
using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low to high

/// Monic polynomial of the given degree over F_p that is irreducible and has the
/// smallest integer encoding sum(c_i p^i) of its lower coefficients.
Poly lowest_irreducible(u64 p, unsigned degree);

/// Irreducibility over F_p via gcd(x^{p^i} - x, f) for i <= deg/2.
bool is_irreducible(const Poly& monic, u64 p);

class BaseField {
 public:
  /// q must be a prime power <= 256.
  explicit BaseField(u64 q);

  unsigned p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned q() const { return q_; }
  const Poly& modulus() const { return modulus_; }

  Sym add(Sym a, Sym b) const { return add_[index(a, b)]; }
  Sym sub(Sym a, Sym b) const { return add_[index(a, neg_[b])]; }
  Sym neg(Sym a) const { return neg_[a]; }
  Sym mul(Sym a, Sym b) const { return mul_[index(a, b)]; }
  Sym inv(Sym a) const;
  Sym div(Sym a, Sym b) const { return mul(a, inv(b)); }

  /// Polynomial coefficients of a symbol (length s).
  Poly digits(Sym a) const;
  Sym from_digits(std::span<const std::uint32_t> digits) const;

 private:
  std::size_t index(Sym a, Sym b) const { return static_cast<std::size_t>(a) * q_ + b; }

  unsigned p_ = 0;
  unsigned s_ = 0;
  unsigned q_ = 0;
  Poly modulus_;
  std::vector<Sym> add_;
  std::vector<Sym> mul_;
  std::vector<Sym> neg_;
  std::vector<Sym> inv_;
};

class FieldElem {
 public:
  FieldElem() = default;
  explicit FieldElem(Poly coeffs) : coeffs_(std::move(coeffs)) {}

  const Poly& coeffs() const { return coeffs_; }
  bool is_zero() const;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;

 private:
  Poly coeffs_;
};

class FieldContext {
 public:
  /// Deterministic F_{q^M} with q = p^s. Size policy: q <= 256 and
  /// s*M*log2(p) <= 64.
  static FieldContext build(u64 p, unsigned s, unsigned M);

  u64 p() const { return p_; }
  unsigned s() const { return s_; }
  unsigned M() const { return M_; }
  unsigned degree() const { return s_ * M_; }
  u64 q() const { return base_->q(); }
  /// |F_{q^M}^*| = p^{sM} - 1.
  u64 group_order() const { return group_order_; }

  const Poly& modulus() const { return modulus_; }
  const FieldElem& generator() const { return generator_; }
  const BaseField& base_field() const { return *base_; }
  std::shared_ptr<const BaseField> base_field_ptr() const { return base_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_integer(u64 encoding) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem scale(const FieldElem& a, std::uint32_t c) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  /// Square-and-multiply; exponents of nonzero elements are reduced mod group_order().
  FieldElem pow(const FieldElem& a, u64 e) const;
  FieldElem inverse(const FieldElem& a) const;

  /// a^q.
  FieldElem frobenius(const FieldElem& a) const;

  /// generator^{(p^{sM}-1)/r}; throws if r does not divide the group order.
  FieldElem root_of_unity(u64 r) const;

  /// Generator of F_{q^d}^*: generator^{(q^M-1)/(q^d-1)}.
  FieldElem subfield_generator(unsigned d) const;
  /// |F_{q^d}^*| = q^d - 1.
  u64 subfield_order(unsigned d) const;
  bool in_subfield(const FieldElem& a, unsigned d) const;

  /// Coordinates of a in the F_q-basis {g_d^o, ..., g_d^{o+d-1}} of F_{q^d}
  /// (g_d the subfield generator, o = basis_offset). Throws if d does not
  /// divide M or a lies outside F_{q^d}.
  std::vector<Sym> subfield_coords(const FieldElem& a, unsigned d, u64 basis_offset = 0) const;

  /// Image of a base-field symbol under the fixed embedding F_q -> F_{q^M}.
  FieldElem embed(Sym a) const;

  /// Throws std::invalid_argument unless a is a well-formed element of this field.
  void check(const FieldElem& a) const;

 private:
  struct SubfieldMap {
    unsigned d = 0;
    FieldElem generator;
    std::vector<FieldElem> basis;                // theta^k * g_d^i at index i*s + k
    std::vector<std::vector<std::uint32_t>> left_inverse;  // (s*d) x degree over F_p
  };

  FieldContext() = default;
  const SubfieldMap& subfield(unsigned d) const;

  u64 p_ = 0;
  unsigned s_ = 0;
  unsigned M_ = 0;
  u64 group_order_ = 0;
  Poly modulus_;
  FieldElem generator_;
  FieldElem theta_;
  std::shared_ptr<const BaseField> base_;
  std::vector<SubfieldMap> subfields_;
};

}  // namespace abelcode
