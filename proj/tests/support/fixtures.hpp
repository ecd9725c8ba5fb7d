#pragma once

// Worked-example codes used across unit and acceptance tests.

#include <string>
#include <vector>

#include "abelcode/code.hpp"
#include "abelcode/orbit.hpp"

namespace fixtures {

using abelcode::Ambient;
using abelcode::DefiningSet;
using abelcode::Index;

inline std::vector<Index> parse_all(const std::vector<std::string>& items) {
  std::vector<Index> out;
  for (const auto& s : items) out.push_back(Index::parse(s));
  return out;
}

inline std::vector<Index> sorted(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  return v;
}

inline DefiningSet from_orbits(const Ambient& amb, const std::vector<std::string>& reps) {
  const auto r = parse_all(reps);
  return abelcode::defining_set_from_orbits(amb, r);
}

// 3 x 7, binary.
inline Ambient two_variable_ambient() { return Ambient(2, {3, 7}); }
inline std::vector<Index> two_variable_members() {
  return parse_all({"1,1", "2,2", "1,4", "2,1", "1,2", "2,4", "0,3", "0,5", "0,6", "1,3", "2,6", "1,5", "2,3", "1,6",
                    "2,5"});
}
inline std::vector<Index> two_variable_gamma() {
  return sorted(parse_all({"0,0", "1,0", "2,0", "0,1", "0,2", "0,3", "0,4", "0,5", "1,1", "2,1", "1,2", "2,2", "1,3",
                           "1,4", "1,5"}));
}

// 3 x 3 x 3, binary.
inline Ambient three_variable_ambient() { return Ambient(2, {3, 3, 3}); }
inline std::vector<Index> three_variable_members() {
  return parse_all({"0,0,0", "1,1,0", "2,2,0", "0,1,1", "0,2,2", "2,2,1", "1,1,2"});
}
inline std::vector<Index> three_variable_gamma() {
  return sorted(parse_all({"0,0,0", "1,0,0", "2,0,0", "0,1,0", "0,2,0", "0,0,1", "1,0,1"}));
}

// 3 x 5, binary, two orderings.
inline Ambient ordering_ambient() { return Ambient(2, {3, 5}); }
inline std::vector<Index> ordering_members() { return parse_all({"0,0", "1,0", "2,0", "1,2", "2,4", "1,3", "2,1"}); }
inline std::vector<Index> ordering_gamma_default() {
  return sorted(parse_all({"0,0", "1,0", "2,0", "0,1", "0,2", "1,1", "1,2"}));
}
inline std::vector<Index> ordering_gamma_swapped() {
  return sorted(parse_all({"0,0", "1,0", "2,0", "0,1", "0,2", "0,3", "0,4"}));
}

// 3 x 3 x 3, binary, representative guard.
inline Ambient guard_ambient() { return Ambient(2, {3, 3, 3}); }
inline std::vector<Index> guard_members() { return parse_all({"0,0,0", "0,1,1", "0,2,2", "0,2,1", "0,1,2"}); }
inline std::vector<Index> guard_forbidden() { return parse_all({"0,0,0", "0,1,1", "0,2,1"}); }

// Binary cyclic code of length 15 split as 3 x 5.
inline std::vector<abelcode::u64> cyclic15_defining() { return {0, 1, 2, 3, 4, 6, 8, 9, 12}; }
inline std::vector<Index> cyclic15_transported() {
  return sorted(parse_all({"0,0", "0,1", "0,2", "0,3", "0,4", "1,1", "2,2", "1,4", "2,3"}));
}
inline std::vector<Index> cyclic15_gamma() {
  return sorted(parse_all({"0,0", "0,1", "0,2", "0,3", "0,4", "1,0", "2,0", "1,1", "2,1"}));
}
inline std::vector<abelcode::u64> cyclic15_pullback() { return {0, 1, 3, 5, 6, 9, 10, 11, 12}; }

// Length 45 as 5 x 9: six cyclic double-error-correcting codes.
inline Ambient len45_cyclic_ambient() { return Ambient(2, {5, 9}); }
inline std::vector<std::vector<std::string>> len45_cyclic_codes() {
  return {{"1,2", "1,6"}, {"1,1", "1,6"}, {"1,2", "1,3"}, {"1,1", "1,3"}, {"1,0", "1,2"}, {"1,0", "1,1"}};
}
inline std::vector<Index> len45_orbit_hitters() {
  return sorted(parse_all({"0,0", "0,1", "0,3", "1,0", "1,1", "1,2", "1,3", "2,3"}));
}
inline std::vector<std::string> len45_cyclic_orbit_list() {
  return {"0,0", "0,1", "0,3", "1,0", "1,1", "1,2", "1,3", "1,6"};
}

// Length 45 as 3 x 15: two non-cyclic codes.
inline Ambient len45_abelian_ambient() { return Ambient(2, {3, 15}); }
inline std::vector<std::string> len45_abelian_orbit_list() {
  return {"0,0", "0,1", "0,3", "0,5", "0,7", "1,0", "1,1", "1,2", "1,3", "1,5", "1,6", "1,7", "1,10", "1,11"};
}
inline std::vector<std::string> translation_code_reps() { return {"0,3", "0,7", "1,0", "1,11"}; }
inline std::vector<Index> translation_code_listed_gamma() {
  return sorted(parse_all({"0,0", "0,1", "0,2", "0,3", "0,4", "0,5", "0,6", "0,7", "1,0", "2,0"}));
}
inline std::vector<std::string> frobenius_code_reps() { return {"0,0", "1,3", "1,7", "1,11"}; }

// Length 65 as 5 x 13: four cyclic triple-error-correcting codes.
inline Ambient len65_ambient() { return Ambient(2, {5, 13}); }
inline std::vector<std::vector<std::string>> len65_codes() {
  return {{"0,0", "0,1", "1,1"}, {"0,0", "0,1", "1,2"}, {"0,0", "0,1", "1,4"}, {"0,0", "0,1", "1,7"}};
}
inline std::vector<Index> len65_listed_subset() {
  return sorted(parse_all({"0,0", "0,1", "1,0", "1,1", "1,2", "3,2", "2,1"}));
}
inline std::vector<std::string> len65_orbit_list() { return {"0,0", "0,1", "1,0", "1,1", "1,2", "1,4", "1,7"}; }

}  // namespace fixtures
