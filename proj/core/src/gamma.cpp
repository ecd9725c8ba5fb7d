#include "abelcode/gamma.hpp"

#include <algorithm>
#include <stdexcept>

namespace abelcode {

u64 GammaTables::m(const Index& prefix) const {
  auto it = m_.find(prefix);
  if (it == m_.end()) throw std::out_of_range("no m parameter for prefix " + prefix.str());
  return it->second;
}

u64 GammaTables::gamma(const Index& prefix) const {
  u64 g = 1;
  for (std::size_t t = 1; t <= prefix.size(); ++t) g *= m(prefix.prefix(t));
  return g;
}

std::vector<std::vector<u64>> GammaTables::parameter_vectors() const {
  std::vector<std::vector<u64>> out;
  for (const auto& e : reps_) {
    std::vector<u64> v;
    for (std::size_t t = 1; t <= e.size(); ++t) v.push_back(m(e.prefix(t)));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GammaTables compute_tables_raw(const Ambient& ordered, std::span<const Index> reps) {
  GammaTables tables;
  for (const auto& e : reps) {
    ordered.check(e);
    u64 gamma = 1;
    for (std::size_t t = 0; t < e.size(); ++t) {
      const u64 m = coset(e[t], ordered.r(t), ordered.q(), gamma).size();
      tables.m_[e.prefix(t + 1)] = m;
      gamma *= m;
    }
    tables.reps_.push_back(e);
  }
  std::sort(tables.reps_.begin(), tables.reps_.end());
  return tables;
}

GammaTables compute_tables(const RestrictedReps& reps) { return compute_tables_raw(reps.ordered_ambient(), reps.reps()); }

namespace {

std::vector<u64> thresholds(const std::map<Index, u64>& values) {
  std::vector<u64> f;
  for (const auto& [key, v] : values) {
    if (v > 0) f.push_back(v);
  }
  std::sort(f.begin(), f.end(), std::greater<>());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  f.push_back(0);
  return f;
}

FgNode build_node(const Ambient& ordered, const GammaTables& tables, std::size_t level, std::map<Index, u64> values,
                  const std::vector<Index>& parents, bool check_ranges) {
  FgNode node;
  node.level = level;
  node.f = thresholds(values);
  if (check_ranges && node.f.front() > ordered.r(level)) {
    throw std::logic_error("threshold " + std::to_string(node.f.front()) + " exceeds r_" + std::to_string(level + 1));
  }
  std::vector<Index> grandparents;
  if (level > 1) grandparents = project(parents, level - 1);

  for (std::size_t u = 0; u + 1 < node.f.size(); ++u) {
    std::map<Index, u64> next;
    for (const auto& p : parents) next[p.prefix(level - 1)] += 0;
    for (const auto& [p, v] : values) {
      if (v >= node.f[u]) next[p.prefix(level - 1)] += tables.m(p);
    }
    if (level == 1) {
      FgNode leaf;
      leaf.level = 0;
      leaf.g = next[Index{}];
      leaf.values = std::move(next);
      if (check_ranges && leaf.g > ordered.r(0)) {
        throw std::logic_error("threshold " + std::to_string(leaf.g) + " exceeds r_1");
      }
      node.children.push_back(std::move(leaf));
    } else {
      node.children.push_back(build_node(ordered, tables, level - 1, std::move(next), grandparents, check_ranges));
    }
  }
  node.values = std::move(values);
  return node;
}

void collect_boxes(const FgNode& node, Box& box, std::vector<Box>& out) {
  if (node.leaf()) {
    if (node.g == 0) return;
    box.lo[0] = 0;
    box.hi[0] = static_cast<std::uint32_t>(node.g);
    out.push_back(box);
    return;
  }
  for (std::size_t u = 0; u < node.children.size(); ++u) {
    box.lo[node.level] = static_cast<std::uint32_t>(node.f[u + 1]);
    box.hi[node.level] = static_cast<std::uint32_t>(node.f[u]);
    collect_boxes(node.children[u], box, out);
  }
}

}  // namespace

FgNode compute_fg(const Ambient& ordered, std::span<const Index> reps, const GammaTables& tables, bool check_ranges) {
  const std::size_t n = ordered.n();
  if (n == 1) {
    FgNode leaf;
    for (const auto& e : reps) leaf.g += tables.m(e);
    leaf.values[Index{}] = leaf.g;
    if (check_ranges && leaf.g > ordered.r(0)) {
      throw std::logic_error("threshold " + std::to_string(leaf.g) + " exceeds r_1");
    }
    return leaf;
  }
  std::vector<Index> parents = project(reps, n - 1);
  std::map<Index, u64> values;
  for (const auto& e : reps) values[e.prefix(n - 1)] += tables.m(e);
  return build_node(ordered, tables, n - 1, std::move(values), parents, check_ranges);
}

std::vector<Box> gamma_boxes(const FgNode& root, std::size_t n) {
  Box box{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(n, 0)};
  std::vector<Box> out;
  collect_boxes(root, box, out);
  return out;
}

bool CheckSet::contains(const Index& a) const { return std::binary_search(positions_.begin(), positions_.end(), a); }

CheckSet build_gamma(const DefiningSet& def, const RestrictedReps& reps) {
  const std::string violation = restricted_reps_violation(def, reps.ordering(), reps.reps());
  if (!violation.empty()) throw std::invalid_argument("invalid representatives: " + violation);
  const Ambient& ordered = reps.ordered_ambient();
  GammaTables tables = compute_tables(reps);
  FgNode tree = compute_fg(ordered, reps.reps(), tables);

  std::vector<Index> positions;
  for (const auto& box : gamma_boxes(tree, ordered.n())) {
    std::vector<std::uint32_t> cur = box.lo;
    bool more = true;
    while (more) {
      positions.push_back(unpermute(Index(cur), reps.ordering()));
      more = false;
      for (std::size_t i = cur.size(); i-- > 0;) {
        if (++cur[i] < box.hi[i]) {
          more = true;
          break;
        }
        cur[i] = box.lo[i];
      }
    }
  }
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  return CheckSet(def.ambient(), reps.ordering(), std::move(positions), reps.reps(), std::move(tables), std::move(tree));
}

CheckSet build_gamma(const DefiningSet& def, const Ordering& ordering) {
  return build_gamma(def, restricted_reps(def, ordering));
}

CheckSet build_gamma(const DefiningSet& def) { return build_gamma(def, identity_ordering(def.ambient().n())); }

std::vector<Index> information_set(const CheckSet& cs) {
  std::vector<Index> out;
  for (const auto& a : cs.ambient().all_indices()) {
    if (!cs.contains(a)) out.push_back(a);
  }
  return out;
}

}  // namespace abelcode
