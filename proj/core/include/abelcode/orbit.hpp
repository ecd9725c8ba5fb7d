#pragma once

// Index spaces Z_{r_1} x ... x Z_{r_n}, cyclotomic cosets, q-orbits, defining
// sets and restricted representative selection.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelcode/integer.hpp"

namespace abelcode {

/// A tuple (a_1, ..., a_n); also used for prefixes pi_t(e) of such tuples.
class Index {
 public:
  Index() = default;
  Index(std::initializer_list<std::uint32_t> v) : v_(v) {}
  explicit Index(std::vector<std::uint32_t> v) : v_(std::move(v)) {}

  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return v_[i]; }
  std::uint32_t& operator[](std::size_t i) { return v_[i]; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }
  const std::vector<std::uint32_t>& values() const { return v_; }

  Index prefix(std::size_t len) const { return Index(std::vector<std::uint32_t>(v_.begin(), v_.begin() + len)); }
  Index extended(std::uint32_t a) const {
    auto v = v_;
    v.push_back(a);
    return Index(std::move(v));
  }

  /// "(a_1,...,a_n)"
  std::string str() const;
  /// Accepts "(1,2)", "1,2" or "1 2".
  static Index parse(const std::string& text);

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<std::uint32_t> v_;
};

/// Axis permutation: ordered axis k is original axis ordering[k].
using Ordering = std::vector<std::uint32_t>;

Ordering identity_ordering(std::size_t n);
void check_ordering(const Ordering& ordering, std::size_t n);
Index permute(const Index& a, const Ordering& ordering);
Index unpermute(const Index& a, const Ordering& ordering);

class Ambient {
 public:
  /// Requires n >= 1, every r_i >= 1, q >= 2 and gcd(r_i, q) = 1.
  Ambient(u64 q, std::vector<std::uint32_t> r);

  u64 q() const { return q_; }
  const std::vector<std::uint32_t>& r() const { return r_; }
  std::uint32_t r(std::size_t i) const { return r_[i]; }
  std::size_t n() const { return r_.size(); }
  /// l = prod r_i.
  u64 length() const { return length_; }

  bool contains(const Index& a) const;
  void check(const Index& a) const;

  /// Lexicographic rank of a position (first coordinate most significant).
  u64 linear(const Index& a) const;
  Index unlinear(u64 pos) const;
  std::vector<Index> all_indices() const;

  /// (a_1 q^k, ..., a_n q^k).
  Index times_q_power(const Index& a, u64 k) const;

  Ambient permuted(const Ordering& ordering) const;

  friend bool operator==(const Ambient&, const Ambient&) = default;

 private:
  u64 q_;
  std::vector<std::uint32_t> r_;
  u64 length_ = 1;
};

/// C_{(q^g, r)}(a), sorted.
std::vector<std::uint32_t> coset(std::uint32_t a, std::uint32_t r, u64 q, u64 g);

/// Q(a), sorted lexicographically.
std::vector<Index> qorbit(const Ambient& amb, const Index& a);

/// All q-orbits of the ambient, each sorted, ordered by their smallest element.
std::vector<std::vector<Index>> all_orbits(const Ambient& amb);

/// Distinct length-i prefixes of the given tuples, sorted.
std::vector<Index> project(std::span<const Index> members, std::size_t i);

class NotOrbitClosed : public std::invalid_argument {
 public:
  NotOrbitClosed(const Index& member, const Index& missing)
      : std::invalid_argument("defining set is not closed under multiplication by q: " + member.str() +
                              " is present but " + missing.str() + " is missing"),
        member_(member),
        missing_(missing) {}

  const Index& member() const { return member_; }
  const Index& missing() const { return missing_; }

 private:
  Index member_;
  Index missing_;
};

class DefiningSet {
 public:
  const Ambient& ambient() const { return ambient_; }
  const std::vector<Index>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Index& a) const;

  friend DefiningSet validate_defining_set(const Ambient& amb, std::vector<Index> members);

 private:
  DefiningSet(Ambient amb, std::vector<Index> members) : ambient_(std::move(amb)), members_(std::move(members)) {}

  Ambient ambient_;
  std::vector<Index> members_;
};

/// Accepts iff members is a union of q-orbits; throws NotOrbitClosed otherwise.
DefiningSet validate_defining_set(const Ambient& amb, std::vector<Index> members);

/// Union of the q-orbits of the given representatives.
DefiningSet defining_set_from_orbits(const Ambient& amb, std::span<const Index> reps);

/// Representatives D(C)-bar, stored in ordered coordinates.
class RestrictedReps {
 public:
  RestrictedReps(Ambient ordered_ambient, Ordering ordering, std::vector<Index> reps)
      : ordered_(std::move(ordered_ambient)), ordering_(std::move(ordering)), reps_(std::move(reps)) {}

  /// The ambient with axes permuted by ordering().
  const Ambient& ordered_ambient() const { return ordered_; }
  const Ordering& ordering() const { return ordering_; }
  /// Representatives in ordered coordinates.
  const std::vector<Index>& reps() const { return reps_; }
  /// Representatives mapped back to the original axes.
  std::vector<Index> original_reps() const;

 private:
  Ambient ordered_;
  Ordering ordering_;
  std::vector<Index> reps_;
};

/// Picks one element of a coset (given sorted). Must return a member.
using CosetChooser = std::function<std::uint32_t(std::span<const std::uint32_t> coset)>;

/// Level-by-level representative selection. The default picks the smallest
/// element of each coset; a custom chooser is consulted once per
/// (level, gamma, coset) so the shared-representative rule holds.
RestrictedReps restricted_reps(const DefiningSet& def, const Ordering& ordering, const CosetChooser& choose = {});

/// Checks the RestrictedReps invariants against a defining set: orbits of the
/// representatives are disjoint, cover it exactly, and the restriction property
/// holds. Returns an empty string on success, else a description of the
/// first violation.
std::string restricted_reps_violation(const DefiningSet& def, const Ordering& ordering, std::span<const Index> ordered_reps);

}  // namespace abelcode
