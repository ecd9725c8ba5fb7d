#include "abelcode/crt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace abelcode {

CrtMap::CrtMap(u64 l, std::vector<std::uint32_t> factors, std::vector<std::uint32_t> units)
    : l_(l), factors_(std::move(factors)), units_(std::move(units)) {
  if (factors_.empty()) throw std::invalid_argument("crt: need at least one factor");
  if (units_.empty()) units_.assign(factors_.size(), 1);
  if (units_.size() != factors_.size()) throw std::invalid_argument("crt: one unit per factor required");
  u64 prod = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const u64 r = factors_[i];
    if (r == 0) throw std::invalid_argument("crt: factors must be positive");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::gcd(r, static_cast<u64>(factors_[j])) != 1) throw std::invalid_argument("crt: factors must be pairwise coprime");
    }
    units_[i] %= factors_[i];
    if (r > 1 && std::gcd(static_cast<u64>(units_[i]), r) != 1) throw std::invalid_argument("crt: multiplier is not a unit");
    prod *= r;
  }
  if (prod != l_) throw std::invalid_argument("crt: factors do not multiply to l");

  inverse_.assign(l_, l_);
  for (u64 t = 0; t < l_; ++t) {
    const Index a = forward(t);
    u64 pos = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) pos = pos * factors_[i] + a[i];
    if (inverse_[pos] != l_) throw std::logic_error("crt: map is not injective");
    inverse_[pos] = t;
  }
}

Index CrtMap::forward(u64 t) const {
  if (t >= l_) throw std::invalid_argument("crt: residue " + std::to_string(t) + " out of range");
  std::vector<std::uint32_t> v(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    v[i] = static_cast<std::uint32_t>(mul_mod(t % factors_[i], units_[i], factors_[i]));
  }
  return Index(std::move(v));
}

u64 CrtMap::inverse(const Index& a) const {
  if (a.size() != factors_.size()) throw std::invalid_argument("crt: index has the wrong number of coordinates");
  u64 pos = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (a[i] >= factors_[i]) throw std::invalid_argument("crt: index " + a.str() + " out of range");
    pos = pos * factors_[i] + a[i];
  }
  return inverse_[pos];
}

DefiningSet transport_defining_set(const CrtMap& map, u64 q, const std::vector<u64>& d) {
  std::vector<u64> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (u64 t : sorted) {
    if (t >= map.length()) throw std::invalid_argument("crt: residue " + std::to_string(t) + " out of range");
    const u64 next = mul_mod(t, q, map.length());
    if (!std::binary_search(sorted.begin(), sorted.end(), next)) {
      throw NotOrbitClosed(Index{static_cast<std::uint32_t>(t)}, Index{static_cast<std::uint32_t>(next)});
    }
  }
  const Ambient amb(q, map.factors());
  std::vector<Index> members;
  for (u64 t : sorted) members.push_back(map.forward(t));
  return validate_defining_set(amb, std::move(members));
}

std::vector<u64> pullback_positions(const CrtMap& map, std::span<const Index> positions) {
  std::vector<u64> out;
  for (const auto& a : positions) out.push_back(map.inverse(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace abelcode
