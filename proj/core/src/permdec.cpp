#include "abelcode/permdec.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace abelcode {

u64 frobenius_order(const Ambient& amb) {
  u64 l = 1;
  for (auto r : amb.r()) l = std::lcm(l, static_cast<u64>(r));
  return multiplicative_order(amb.q(), l);
}

Index LambdaElem::apply(const Ambient& amb, const Index& j) const {
  std::vector<std::uint32_t> v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const u64 r = amb.r(i);
    v[i] = static_cast<std::uint32_t>(mul_mod((static_cast<u64>(j[i]) + shift[i]) % r, pow_mod(amb.q(), frob, r), r));
  }
  return Index(std::move(v));
}

std::vector<std::uint32_t> LambdaElem::permutation(const Ambient& amb) const {
  std::vector<std::uint32_t> perm(amb.length());
  for (u64 pos = 0; pos < amb.length(); ++pos) {
    perm[pos] = static_cast<std::uint32_t>(amb.linear(apply(amb, amb.unlinear(pos))));
  }
  return perm;
}

std::string LambdaElem::str() const { return "sigma^" + std::to_string(frob) + " T" + shift.str(); }

LambdaElem compose(const Ambient& amb, const LambdaElem& a, const LambdaElem& b) {
  const u64 ord = frobenius_order(amb);
  std::vector<std::uint32_t> v(amb.n());
  for (std::size_t i = 0; i < amb.n(); ++i) {
    const u64 r = amb.r(i);
    const u64 back = pow_mod(amb.q(), (ord - b.frob % ord) % ord, r);
    v[i] = static_cast<std::uint32_t>((b.shift[i] + mul_mod(a.shift[i], back, r)) % r);
  }
  return {Index(std::move(v)), (a.frob + b.frob) % ord};
}

LambdaElem inverse(const Ambient& amb, const LambdaElem& a) {
  const u64 ord = frobenius_order(amb);
  std::vector<std::uint32_t> v(amb.n());
  for (std::size_t i = 0; i < amb.n(); ++i) {
    const u64 r = amb.r(i);
    const u64 x = mul_mod(a.shift[i] % r, pow_mod(amb.q(), a.frob, r), r);
    v[i] = static_cast<std::uint32_t>((r - x) % r);
  }
  return {Index(std::move(v)), (ord - a.frob % ord) % ord};
}

std::vector<LambdaElem> enumerate_lambda(const Ambient& amb) {
  const u64 ord = frobenius_order(amb);
  const auto shifts = amb.all_indices();
  std::vector<LambdaElem> out;
  out.reserve(ord * shifts.size());
  for (u64 f = 0; f < ord; ++f) {
    for (const auto& v : shifts) out.push_back({v, f});
  }
  return out;
}

std::vector<LambdaElem> enumerate_translations(const Ambient& amb) {
  std::vector<LambdaElem> out;
  for (const auto& v : amb.all_indices()) out.push_back({v, 0});
  return out;
}

std::vector<Sym> permute_word(std::span<const std::uint32_t> perm, std::span<const Sym> word) {
  std::vector<Sym> out(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) out[perm[j]] = word[j];
  return out;
}

std::vector<Sym> unpermute_word(std::span<const std::uint32_t> perm, std::span<const Sym> word) {
  std::vector<Sym> out(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) out[j] = word[perm[j]];
  return out;
}

namespace {

using Words = std::vector<u64>;

bool test_bit(const Words& w, std::size_t j) { return (w[j / 64] >> (j % 64)) & 1; }

struct PdWalk {
  const std::vector<Words>& good;  // good[t] has bit j iff tau_t(j) is a check position
  std::size_t s;
  std::size_t l;
  std::vector<std::size_t> chosen;
  PdResult res;

  bool run(std::size_t start, const std::vector<std::uint32_t>& cands) {
    for (std::size_t j = start; j + (s - chosen.size()) <= l; ++j) {
      std::vector<std::uint32_t> next;
      for (auto t : cands) {
        if (test_bit(good[t], j)) next.push_back(t);
      }
      chosen.push_back(j);
      if (next.empty()) {
        ++res.subsets_checked;
        for (std::size_t extra = 0; chosen.size() < s; ++extra) {
          if (std::find(chosen.begin(), chosen.end(), extra) == chosen.end()) chosen.push_back(extra);
        }
        return false;
      }
      if (chosen.size() == s) {
        ++res.subsets_checked;
      } else if (!run(j + 1, next)) {
        return false;
      }
      chosen.pop_back();
    }
    return true;
  }
};

}  // namespace

PdResult is_pd_set(const Ambient& amb, std::span<const LambdaElem> p, std::span<const Index> info_set, std::size_t s,
                   u64 subset_budget) {
  if (s == 0) throw std::invalid_argument("pd: s must be positive");
  const std::size_t l = amb.length();
  if (binomial(l, s) > subset_budget) throw std::invalid_argument("pd: too many subsets to check exhaustively");
  std::vector<bool> info(l, false);
  for (const auto& a : info_set) {
    amb.check(a);
    info[amb.linear(a)] = true;
  }
  std::vector<Words> good;
  for (const auto& tau : p) {
    Words w((l + 63) / 64, 0);
    const auto perm = tau.permutation(amb);
    for (std::size_t j = 0; j < l; ++j) {
      if (!info[perm[j]]) w[j / 64] |= u64{1} << (j % 64);
    }
    good.push_back(std::move(w));
  }
  std::vector<std::uint32_t> all(good.size());
  std::iota(all.begin(), all.end(), 0u);
  PdWalk walk{good, s, l, {}, {}};
  if (s <= l && !walk.run(0, all)) {
    walk.res.ok = false;
    std::sort(walk.chosen.begin(), walk.chosen.end());
    for (auto j : walk.chosen) walk.res.failing.push_back(amb.unlinear(j));
  }
  return walk.res;
}

bool meets_all_orbits(const Ambient& amb, std::span<const Index> positions) {
  std::vector<bool> in(amb.length(), false);
  for (const auto& a : positions) in[amb.linear(a)] = true;
  for (const auto& orbit : all_orbits(amb)) {
    if (std::none_of(orbit.begin(), orbit.end(), [&](const Index& a) { return in[amb.linear(a)]; })) return false;
  }
  return true;
}

LemmaCheck two_error_lemma_check(const CheckSet& cs, u64 t) {
  if (cs.ambient().n() != 2) throw std::invalid_argument("lemma check needs two variables");
  LemmaCheck c;
  c.orbits_hit = meets_all_orbits(cs.ambient(), cs.positions());
  c.capacity = t >= 2;
  return c;
}

LemmaCheck three_error_lemma_check(const CheckSet& cs, u64 t) {
  if (cs.ambient().n() != 2) throw std::invalid_argument("lemma check needs two variables");
  const Ambient ordered = cs.ambient().permuted(cs.ordering());
  const FgNode& root = cs.tree();
  LemmaCheck c;
  c.orbits_hit = meets_all_orbits(cs.ambient(), cs.positions());
  c.thresholds = !root.children.empty() && root.f.front() == ordered.r(1) && root.children.back().g == ordered.r(0);
  c.capacity = t >= 3;
  return c;
}

namespace {

Index negate(const Ambient& amb, const Index& a) {
  std::vector<std::uint32_t> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = (amb.r(i) - a[i]) % amb.r(i);
  return Index(std::move(v));
}

std::optional<LambdaElem> frobenius_finish(const CheckSet& cs, const Index& shift, std::span<const Index> points) {
  const u64 ord = frobenius_order(cs.ambient());
  for (u64 i = 0; i < ord; ++i) {
    const LambdaElem tau{shift, i};
    if (std::all_of(points.begin(), points.end(), [&](const Index& p) { return cs.contains(tau.apply(cs.ambient(), p)); })) {
      return tau;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<LambdaElem> two_error_lemma_move(const CheckSet& cs, const Index& p1, const Index& p2) {
  const std::array<Index, 2> pts{p1, p2};
  return frobenius_finish(cs, negate(cs.ambient(), p1), pts);
}

std::optional<LambdaElem> three_error_lemma_move(const CheckSet& cs, const Index& p1, const Index& p2, const Index& p3) {
  const Ordering& ord = cs.ordering();
  const Ambient ordered = cs.ambient().permuted(ord);
  std::array<Index, 3> pts{p1, p2, p3};
  std::array<int, 3> roles{0, 1, 2};
  do {
    const Index a = permute(pts[roles[0]], ord);
    const Index b = permute(pts[roles[1]], ord);
    // a goes to (*, 0) and b to (0, *) in ordered coordinates.
    const Index v{(ordered.r(0) - b[0]) % ordered.r(0), (ordered.r(1) - a[1]) % ordered.r(1)};
    if (auto tau = frobenius_finish(cs, unpermute(v, ord), pts)) return tau;
  } while (std::next_permutation(roles.begin(), roles.end()));
  return std::nullopt;
}

PdResult lemma_fast_path(const CheckSet& cs, std::size_t s) {
  if (s != 2 && s != 3) throw std::invalid_argument("lemma fast path handles s = 2 or 3");
  const Ambient& amb = cs.ambient();
  const auto pos = amb.all_indices();
  PdResult res;
  auto fail = [&](std::initializer_list<Index> subset) {
    res.ok = false;
    res.failing.assign(subset);
    return res;
  };
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      if (s == 2) {
        ++res.subsets_checked;
        if (!two_error_lemma_move(cs, pos[a], pos[b])) return fail({pos[a], pos[b]});
        continue;
      }
      for (std::size_t c = b + 1; c < pos.size(); ++c) {
        ++res.subsets_checked;
        if (!three_error_lemma_move(cs, pos[a], pos[b], pos[c])) return fail({pos[a], pos[b], pos[c]});
      }
    }
  }
  return res;
}

PermutationDecoder::PermutationDecoder(const Ambient& amb, StandardForm sf, std::vector<LambdaElem> p, std::size_t t)
    : sf_(std::move(sf)), p_(std::move(p)), t_(t) {
  if (sf_.h.cols() != amb.length()) throw std::invalid_argument("decoder: parity matrix width differs from the length");
  for (const auto& tau : p_) perms_.push_back(tau.permutation(amb));
}

DecodeResult PermutationDecoder::decode(std::span<const Sym> received) const {
  if (received.size() != sf_.h.cols()) throw std::invalid_argument("decoder: received word has the wrong length");
  const BaseField& f = sf_.h.field();
  DecodeResult res;
  for (std::size_t idx = 0; idx < perms_.size(); ++idx) {
    ++res.probes;
    std::vector<Sym> y = permute_word(perms_[idx], received);
    const auto syn = sf_.syndrome(y);
    const auto w = static_cast<std::size_t>(std::count_if(syn.begin(), syn.end(), [](Sym x) { return x != 0; }));
    if (w > t_) continue;
    for (std::size_t i = 0; i < sf_.check_columns.size(); ++i) {
      y[sf_.check_columns[i]] = f.sub(y[sf_.check_columns[i]], syn[i]);
    }
    res.codeword = unpermute_word(perms_[idx], y);
    res.element = idx;
    return res;
  }
  return res;
}

SearchReport design_search(const Ambient& amb, const SearchConstraints& c) {
  const auto orbits = all_orbits(amb);
  if (orbits.size() > kMaxSearchOrbits) {
    throw std::invalid_argument("search: " + std::to_string(orbits.size()) + " orbits exceed the enumeration budget");
  }
  const Ordering ordering = c.ordering ? *c.ordering : identity_ordering(amb.n());
  std::vector<LambdaElem> group;
  if (c.pd && c.pd->method == PdMethod::Exhaustive) {
    group = c.pd->subgroup == PdSubgroup::Lambda ? enumerate_lambda(amb) : enumerate_translations(amb);
  }
  if (c.pd && c.pd->method == PdMethod::Lemma) {
    if (c.pd->subgroup != PdSubgroup::Lambda) throw std::invalid_argument("search: lemma method applies to the full group only");
    if (c.pd->s != 2 && c.pd->s != 3) throw std::invalid_argument("search: lemma method handles s = 2 or 3");
    if (amb.n() != 2) throw std::invalid_argument("search: lemma method needs two variables");
  }

  SearchReport report;
  for (u64 mask = 0; mask < (u64{1} << orbits.size()); ++mask) {
    std::vector<Index> members;
    std::vector<Index> reps;
    for (std::size_t o = 0; o < orbits.size(); ++o) {
      if (!((mask >> o) & 1)) continue;
      reps.push_back(orbits[o].front());
      members.insert(members.end(), orbits[o].begin(), orbits[o].end());
    }
    const u64 k = amb.length() - members.size();
    if (c.dim_exact && k != *c.dim_exact) continue;
    if (c.dim_min && k < *c.dim_min) continue;
    ++report.candidates;

    const DefiningSet def = validate_defining_set(amb, std::move(members));
    SearchHit hit;
    hit.orbit_reps = std::move(reps);
    hit.dimension = k;

    if (c.pd) {
      const CheckSet cs = build_gamma(def, ordering);
      bool ok = false;
      if (c.pd->method == PdMethod::Lemma) {
        ok = c.pd->s == 2 ? two_error_lemma_check(cs, 2).holds() : three_error_lemma_check(cs, 3).holds();
      } else {
        ok = is_pd_set(amb, group, information_set(cs), c.pd->s).ok;
      }
      hit.pd = ok;
      if (!ok) continue;
    }
    ++report.after_pd;

    if (c.d_min || c.light_weight) {
      const AbelianCode code(def);
      if (c.d_min) {
        if (k == 0) continue;
        DistanceOptions opt = c.distance;
        opt.target = *c.d_min;
        hit.distance = min_distance(generator_matrix(code), opt);
        if (hit.distance->lower < *c.d_min) continue;
      }
      if (c.light_weight) hit.light_word = low_weight_codeword(parity_matrix(code), *c.light_weight);
    }
    report.hits.push_back(std::move(hit));
  }
  std::sort(report.hits.begin(), report.hits.end(), [](const SearchHit& a, const SearchHit& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.orbit_reps < b.orbit_reps;
  });
  return report;
}

}  // namespace abelcode
