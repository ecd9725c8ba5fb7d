#pragma once

// Cyclic codes of length l = r_1 ... r_n (pairwise coprime r_i) seen as abelian
// codes in Z_{r_1} x ... x Z_{r_n}.

#include <vector>

#include "abelcode/orbit.hpp"

namespace abelcode {

class CrtMap {
 public:
  /// t maps to (units_1 t mod r_1, ..., units_n t mod r_n). Empty units means all ones.
  CrtMap(u64 l, std::vector<std::uint32_t> factors, std::vector<std::uint32_t> units = {});

  u64 length() const { return l_; }
  const std::vector<std::uint32_t>& factors() const { return factors_; }
  const std::vector<std::uint32_t>& units() const { return units_; }

  Index forward(u64 t) const;
  u64 inverse(const Index& a) const;

 private:
  u64 l_;
  std::vector<std::uint32_t> factors_;
  std::vector<std::uint32_t> units_;
  std::vector<u64> inverse_;  // indexed by the linear rank of the image
};

/// Image of a cyclic defining set D in Z_l. Throws NotOrbitClosed (with
/// one-coordinate indices) if D is not closed under multiplication by q mod l.
DefiningSet transport_defining_set(const CrtMap& map, u64 q, const std::vector<u64>& d);

/// Preimage of a set of product-space positions, sorted.
std::vector<u64> pullback_positions(const CrtMap& map, std::span<const Index> positions);

}  // namespace abelcode
