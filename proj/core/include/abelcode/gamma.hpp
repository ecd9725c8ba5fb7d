#pragma once

// Check positions of an abelian code from its defining set: the m/gamma
// parameter tables, the nested threshold sequences f and g, and the set
// Gamma(C) together with its complementary information set.

#include <map>
#include <memory>
#include <vector>

#include "abelcode/orbit.hpp"

namespace abelcode {

/// m and gamma parameters for every prefix of every representative, in ordered
/// coordinates.
class GammaTables {
 public:
  /// m(pi_t(e)) for a prefix of length t >= 1.
  u64 m(const Index& prefix) const;
  /// gamma_{t+1}(e) = m(pi_1(e)) * ... * m(pi_t(e)); gamma of the empty prefix is 1.
  u64 gamma(const Index& prefix) const;

  const std::map<Index, u64>& m_table() const { return m_; }
  /// Per representative, the vector (m(pi_1(e)), ..., m(pi_n(e))), sorted.
  std::vector<std::vector<u64>> parameter_vectors() const;

  friend GammaTables compute_tables_raw(const Ambient& ordered, std::span<const Index> reps);

 private:
  std::map<Index, u64> m_;
  std::vector<Index> reps_;
};

GammaTables compute_tables(const RestrictedReps& reps);

/// Same formulas applied to an arbitrary representative list without checking
/// the restriction property.
GammaTables compute_tables_raw(const Ambient& ordered, std::span<const Index> reps);

/// A node of the threshold tree. A node at level L >= 1 holds values indexed by
/// prefixes of length L and the decreasing list f of their distinct positive
/// values followed by 0; child u collects, for each prefix of length L-1, the
/// m-weighted count of extensions whose value is at least f[u]. A node at
/// level 0 is a leaf and holds g.
struct FgNode {
  std::size_t level = 0;
  std::map<Index, u64> values;
  std::vector<u64> f;
  std::vector<FgNode> children;  // children[u] pairs with the interval [f[u+1], f[u])
  u64 g = 0;

  bool leaf() const { return level == 0; }
};

/// Threshold tree of depth n-1. With check_ranges, throws std::logic_error if
/// any threshold exceeds the modulus of its axis.
FgNode compute_fg(const Ambient& ordered, std::span<const Index> reps, const GammaTables& tables,
                  bool check_ranges = true);

/// Axis-aligned box of positions: coordinate i ranges over [lo[i], hi[i]).
struct Box {
  std::vector<std::uint32_t> lo;
  std::vector<std::uint32_t> hi;
};

/// Boxes whose union is Gamma, in ordered coordinates.
std::vector<Box> gamma_boxes(const FgNode& root, std::size_t n);

class CheckSet {
 public:
  CheckSet(Ambient amb, Ordering ordering, std::vector<Index> positions, std::vector<Index> ordered_reps,
           GammaTables tables, FgNode tree)
      : amb_(std::move(amb)),
        ordering_(std::move(ordering)),
        positions_(std::move(positions)),
        reps_(std::move(ordered_reps)),
        tables_(std::move(tables)),
        tree_(std::move(tree)) {}

  const Ambient& ambient() const { return amb_; }
  const Ordering& ordering() const { return ordering_; }
  /// Gamma(C) in original coordinates, sorted.
  const std::vector<Index>& positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool contains(const Index& a) const;
  /// Representatives in ordered coordinates.
  const std::vector<Index>& ordered_reps() const { return reps_; }
  const GammaTables& tables() const { return tables_; }
  const FgNode& tree() const { return tree_; }

 private:
  Ambient amb_;
  Ordering ordering_;
  std::vector<Index> positions_;
  std::vector<Index> reps_;
  GammaTables tables_;
  FgNode tree_;
};

CheckSet build_gamma(const DefiningSet& def, const Ordering& ordering);
CheckSet build_gamma(const DefiningSet& def);
/// Uses a caller-supplied valid representative set.
CheckSet build_gamma(const DefiningSet& def, const RestrictedReps& reps);

/// Complement of Gamma(C) in the ambient, sorted.
std::vector<Index> information_set(const CheckSet& cs);

}  // namespace abelcode
