#include "abelcode/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace abelcode {

std::string Index::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v_[i]);
  }
  return out + ")";
}

Index Index::parse(const std::string& text) {
  std::vector<std::uint32_t> v;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    const unsigned long value = std::stoul(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad index component '" + token + "'");
    v.push_back(static_cast<std::uint32_t>(value));
    token.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token += c;
    } else if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '\t') {
      flush();
    } else {
      throw std::invalid_argument("bad index '" + text + "'");
    }
  }
  flush();
  if (v.empty()) throw std::invalid_argument("empty index '" + text + "'");
  return Index(std::move(v));
}

Ordering identity_ordering(std::size_t n) {
  Ordering o(n);
  std::iota(o.begin(), o.end(), 0u);
  return o;
}

void check_ordering(const Ordering& ordering, std::size_t n) {
  if (ordering.size() != n) throw std::invalid_argument("ordering must list every axis exactly once");
  std::vector<bool> seen(n, false);
  for (auto a : ordering) {
    if (a >= n || seen[a]) throw std::invalid_argument("ordering is not a permutation of the axes");
    seen[a] = true;
  }
}

Index permute(const Index& a, const Ordering& ordering) {
  std::vector<std::uint32_t> v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[k] = a[ordering[k]];
  return Index(std::move(v));
}

Index unpermute(const Index& a, const Ordering& ordering) {
  std::vector<std::uint32_t> v(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) v[ordering[k]] = a[k];
  return Index(std::move(v));
}

// ---------------------------------------------------------------------------

Ambient::Ambient(u64 q, std::vector<std::uint32_t> r) : q_(q), r_(std::move(r)) {
  if (q_ < 2 || !prime_power(q_)) throw std::invalid_argument("ambient: q must be a prime power");
  if (r_.empty()) throw std::invalid_argument("ambient: need at least one modulus");
  for (auto ri : r_) {
    if (ri == 0) throw std::invalid_argument("ambient: moduli must be positive");
    if (std::gcd(static_cast<u64>(ri), q_) != 1) {
      throw std::invalid_argument("ambient: gcd(r_i, q) must be 1, got r_i = " + std::to_string(ri));
    }
    if (length_ > (u64{1} << 40) / ri) throw std::invalid_argument("ambient: length too large");
    length_ *= ri;
  }
}

bool Ambient::contains(const Index& a) const {
  if (a.size() != r_.size()) return false;
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (a[i] >= r_[i]) return false;
  }
  return true;
}

void Ambient::check(const Index& a) const {
  if (!contains(a)) throw std::invalid_argument("index " + a.str() + " is outside the ambient space");
}

u64 Ambient::linear(const Index& a) const {
  u64 pos = 0;
  for (std::size_t i = 0; i < r_.size(); ++i) pos = pos * r_[i] + a[i];
  return pos;
}

Index Ambient::unlinear(u64 pos) const {
  std::vector<std::uint32_t> v(r_.size());
  for (std::size_t i = r_.size(); i-- > 0;) {
    v[i] = static_cast<std::uint32_t>(pos % r_[i]);
    pos /= r_[i];
  }
  return Index(std::move(v));
}

std::vector<Index> Ambient::all_indices() const {
  std::vector<Index> out;
  out.reserve(length_);
  for (u64 pos = 0; pos < length_; ++pos) out.push_back(unlinear(pos));
  return out;
}

Index Ambient::times_q_power(const Index& a, u64 k) const {
  std::vector<std::uint32_t> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i] = static_cast<std::uint32_t>(mul_mod(a[i], pow_mod(q_, k, r_[i]), r_[i]));
  }
  return Index(std::move(v));
}

Ambient Ambient::permuted(const Ordering& ordering) const {
  check_ordering(ordering, n());
  std::vector<std::uint32_t> r(n());
  for (std::size_t k = 0; k < n(); ++k) r[k] = r_[ordering[k]];
  return Ambient(q_, std::move(r));
}

// ---------------------------------------------------------------------------

std::vector<std::uint32_t> coset(std::uint32_t a, std::uint32_t r, u64 q, u64 g) {
  if (r == 0 || a >= r) throw std::invalid_argument("coset: residue out of range");
  if (g == 0) throw std::invalid_argument("coset: exponent must be positive");
  if (std::gcd(static_cast<u64>(r), q) != 1) throw std::invalid_argument("coset: gcd(r, q) must be 1");
  const u64 step = pow_mod(q, g, r);
  std::vector<std::uint32_t> out;
  u64 x = a;
  do {
    out.push_back(static_cast<std::uint32_t>(x));
    x = mul_mod(x, step, r);
  } while (x != a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Index> qorbit(const Ambient& amb, const Index& a) {
  amb.check(a);
  std::vector<Index> out;
  Index x = a;
  do {
    out.push_back(x);
    x = amb.times_q_power(x, 1);
  } while (x != a);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Index>> all_orbits(const Ambient& amb) {
  std::vector<bool> seen(amb.length(), false);
  std::vector<std::vector<Index>> out;
  for (u64 pos = 0; pos < amb.length(); ++pos) {
    if (seen[pos]) continue;
    auto orbit = qorbit(amb, amb.unlinear(pos));
    for (const auto& x : orbit) seen[amb.linear(x)] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<Index> project(std::span<const Index> members, std::size_t i) {
  std::vector<Index> out;
  out.reserve(members.size());
  for (const auto& m : members) {
    if (i > m.size()) throw std::invalid_argument("project: prefix length exceeds tuple length");
    out.push_back(m.prefix(i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------

bool DefiningSet::contains(const Index& a) const { return std::binary_search(members_.begin(), members_.end(), a); }

DefiningSet validate_defining_set(const Ambient& amb, std::vector<Index> members) {
  for (const auto& m : members) amb.check(m);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members) {
    Index next = amb.times_q_power(m, 1);
    if (!std::binary_search(members.begin(), members.end(), next)) throw NotOrbitClosed(m, next);
  }
  return DefiningSet(amb, std::move(members));
}

DefiningSet defining_set_from_orbits(const Ambient& amb, std::span<const Index> reps) {
  std::vector<Index> members;
  for (const auto& rep : reps) {
    auto orbit = qorbit(amb, rep);
    members.insert(members.end(), orbit.begin(), orbit.end());
  }
  return validate_defining_set(amb, std::move(members));
}

// ---------------------------------------------------------------------------

std::vector<Index> RestrictedReps::original_reps() const {
  std::vector<Index> out;
  out.reserve(reps_.size());
  for (const auto& e : reps_) out.push_back(unpermute(e, ordering_));
  std::sort(out.begin(), out.end());
  return out;
}

RestrictedReps restricted_reps(const DefiningSet& def, const Ordering& ordering, const CosetChooser& choose) {
  const Ambient ordered = def.ambient().permuted(ordering);
  std::vector<Index> members;
  members.reserve(def.size());
  for (const auto& m : def.members()) members.push_back(permute(m, ordering));
  std::sort(members.begin(), members.end());

  struct Node {
    Index prefix;
    u64 gamma;  // |Q(prefix)|
  };
  std::vector<Node> nodes{{Index{}, 1}};
  // (level, gamma, smallest coset element) -> chosen representative
  std::map<std::tuple<std::size_t, u64, std::uint32_t>, std::uint32_t> memo;

  for (std::size_t i = 0; i < ordered.n(); ++i) {
    const std::vector<Index> proj = project(members, i + 1);
    const std::uint32_t ri = ordered.r(i);
    std::vector<Node> next;
    for (const auto& node : nodes) {
      auto lo = std::lower_bound(proj.begin(), proj.end(), node.prefix.extended(0));
      auto hi = std::lower_bound(lo, proj.end(), node.prefix.extended(ri));
      std::vector<bool> taken(ri, false);
      for (auto it = lo; it != hi; ++it) {
        const std::uint32_t a = (*it)[i];
        if (taken[a]) continue;
        const auto cos = coset(a, ri, ordered.q(), node.gamma);
        for (auto x : cos) taken[x] = true;
        std::uint32_t rep = cos.front();
        if (choose) {
          const auto key = std::make_tuple(i, node.gamma, cos.front());
          auto found = memo.find(key);
          if (found == memo.end()) {
            rep = choose(cos);
            if (!std::binary_search(cos.begin(), cos.end(), rep)) {
              throw std::invalid_argument("coset chooser returned a non-member");
            }
            memo.emplace(key, rep);
          } else {
            rep = found->second;
          }
        }
        next.push_back({node.prefix.extended(rep), node.gamma * cos.size()});
      }
    }
    nodes = std::move(next);
  }

  std::vector<Index> reps;
  reps.reserve(nodes.size());
  for (auto& node : nodes) reps.push_back(std::move(node.prefix));
  std::sort(reps.begin(), reps.end());
  return RestrictedReps(ordered, ordering, std::move(reps));
}

std::string restricted_reps_violation(const DefiningSet& def, const Ordering& ordering, std::span<const Index> ordered_reps) {
  const Ambient ordered = def.ambient().permuted(ordering);
  std::vector<Index> members;
  for (const auto& m : def.members()) members.push_back(permute(m, ordering));
  std::sort(members.begin(), members.end());

  std::vector<Index> covered;
  for (const auto& e : ordered_reps) {
    if (!ordered.contains(e)) return "representative " + e.str() + " outside the ambient";
    auto orbit = qorbit(ordered, e);
    covered.insert(covered.end(), orbit.begin(), orbit.end());
  }
  std::sort(covered.begin(), covered.end());
  if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()) return "representative orbits overlap";
  if (covered != members) return "representative orbits do not cover the defining set exactly";

  // gamma_t(e) for t = 1..n (gamma_1 = 1).
  auto gammas = [&](const Index& e) {
    std::vector<u64> g(e.size() + 1, 1);
    for (std::size_t t = 0; t < e.size(); ++t) g[t + 1] = g[t] * coset(e[t], ordered.r(t), ordered.q(), g[t]).size();
    return g;
  };
  std::vector<std::vector<u64>> g;
  for (const auto& e : ordered_reps) g.push_back(gammas(e));
  for (std::size_t x = 0; x < ordered_reps.size(); ++x) {
    for (std::size_t y = x + 1; y < ordered_reps.size(); ++y) {
      const Index& e = ordered_reps[x];
      const Index& f = ordered_reps[y];
      for (std::size_t t = 0; t < ordered.n(); ++t) {
        if (g[x][t] != g[y][t] || e[t] == f[t]) continue;
        const auto cos = coset(e[t], ordered.r(t), ordered.q(), g[x][t]);
        if (std::binary_search(cos.begin(), cos.end(), f[t])) {
          return "restriction violated by " + e.str() + " and " + f.str() + " at coordinate " + std::to_string(t + 1);
        }
      }
    }
  }
  return {};
}

}  // namespace abelcode
