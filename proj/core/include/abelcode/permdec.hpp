#pragma once

// Permutation decoding with the group generated by the coordinate shifts and
// the Frobenius position map j -> q j.

#include <optional>
#include <vector>

#include "abelcode/code.hpp"
#include "abelcode/gamma.hpp"
#include "abelcode/mindist.hpp"

namespace abelcode {

/// j -> q^frob (j + shift), componentwise.
struct LambdaElem {
  Index shift;
  u64 frob = 0;

  Index apply(const Ambient& amb, const Index& j) const;
  /// Image of every position, as linear ranks: perm[linear(j)] = linear(apply(j)).
  std::vector<std::uint32_t> permutation(const Ambient& amb) const;
  std::string str() const;

  friend bool operator==(const LambdaElem&, const LambdaElem&) = default;
};

/// (a o b)(j) = a(b(j)).
LambdaElem compose(const Ambient& amb, const LambdaElem& a, const LambdaElem& b);
LambdaElem inverse(const Ambient& amb, const LambdaElem& a);

/// ord_{lcm(r)}(q).
u64 frobenius_order(const Ambient& amb);

/// Every element of the group, identity first, then by (frob, shift).
std::vector<LambdaElem> enumerate_lambda(const Ambient& amb);
/// The translations only, identity first.
std::vector<LambdaElem> enumerate_translations(const Ambient& amb);

/// Word action: (tau r)_{tau(j)} = r_j.
std::vector<Sym> permute_word(std::span<const std::uint32_t> perm, std::span<const Sym> word);
std::vector<Sym> unpermute_word(std::span<const std::uint32_t> perm, std::span<const Sym> word);

struct PdResult {
  bool ok = true;
  /// An s-subset of positions that no element moves into the check positions.
  std::vector<Index> failing;
  u64 subsets_checked = 0;
};

inline constexpr u64 kPdSubsetBudget = u64{1} << 32;

/// Exhaustive: every s-subset S has some tau in P with tau(S) disjoint from the
/// information set. info_set is given as positions.
PdResult is_pd_set(const Ambient& amb, std::span<const LambdaElem> p, std::span<const Index> info_set, std::size_t s,
                   u64 subset_budget = kPdSubsetBudget);

/// True iff every q-orbit of the ambient meets the positions.
bool meets_all_orbits(const Ambient& amb, std::span<const Index> positions);

struct LemmaCheck {
  bool orbits_hit = false;
  bool thresholds = true;  // f[1] = r_2 and g[s_n] = r_1 (always true for the two-error lemma)
  bool capacity = false;   // t large enough
  bool holds() const { return orbits_hit && thresholds && capacity; }
};

/// Two-error orbit lemma hypotheses (n = 2); t is the error capacity.
LemmaCheck two_error_lemma_check(const CheckSet& cs, u64 t);
/// Three-error lemma hypotheses (n = 2), thresholds read in ordered coordinates.
LemmaCheck three_error_lemma_check(const CheckSet& cs, u64 t);

/// Element moving {p1, p2} into Gamma by a translation then a Frobenius power,
/// or nullopt if none of that shape exists.
std::optional<LambdaElem> two_error_lemma_move(const CheckSet& cs, const Index& p1, const Index& p2);
/// Same for three points {p1, p2, p3}.
std::optional<LambdaElem> three_error_lemma_move(const CheckSet& cs, const Index& p1, const Index& p2, const Index& p3);

/// Runs the constructive move over every s-subset (s = 2 or 3) and checks that
/// each produced element lands in Gamma.
PdResult lemma_fast_path(const CheckSet& cs, std::size_t s);

struct DecodeResult {
  std::optional<Codeword> codeword;
  std::size_t element = 0;  // index in P of the successful element
  std::size_t probes = 0;
};

class PermutationDecoder {
 public:
  PermutationDecoder(const Ambient& amb, StandardForm sf, std::vector<LambdaElem> p, std::size_t t);

  DecodeResult decode(std::span<const Sym> received) const;
  const StandardForm& standard_form() const { return sf_; }
  std::size_t capacity() const { return t_; }

 private:
  StandardForm sf_;
  std::vector<LambdaElem> p_;
  std::vector<std::vector<std::uint32_t>> perms_;
  std::size_t t_;
};

enum class PdSubgroup { Lambda, Translations };
enum class PdMethod { Exhaustive, Lemma };

struct PdRequirement {
  std::size_t s = 2;
  PdSubgroup subgroup = PdSubgroup::Lambda;
  PdMethod method = PdMethod::Exhaustive;
};

struct SearchConstraints {
  std::optional<u64> dim_exact;
  std::optional<u64> dim_min;
  std::optional<u64> d_min;
  std::optional<PdRequirement> pd;
  /// Look for a codeword of weight at most this many in every hit.
  std::optional<std::size_t> light_weight;
  DistanceOptions distance;
  std::optional<Ordering> ordering;
};

struct SearchHit {
  std::vector<Index> orbit_reps;  // smallest element of each chosen orbit
  u64 dimension = 0;
  std::optional<DistanceResult> distance;
  std::optional<bool> pd;
  std::optional<Codeword> light_word;
};

struct SearchReport {
  std::size_t candidates = 0;     // unions passing the dimension filter
  std::size_t after_pd = 0;        // of those, passing the PD condition
  std::vector<SearchHit> hits;    // dimension descending, then orbit_reps
};

inline constexpr std::size_t kMaxSearchOrbits = 20;

/// Unions of q-orbits filtered by dimension, then PD condition, then distance.
SearchReport design_search(const Ambient& amb, const SearchConstraints& c);

}  // namespace abelcode
