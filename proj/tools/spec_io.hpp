#pragma once

// Code specification files for the command-line tool.
//
// A spec is a JSON object:
//   q             field size
//   r             moduli, e.g. [3, 7]
//   defining_set  explicit members, each "a,b" or [a, b]
//   orbit_reps    or: one representative per q-orbit of the defining set
//   ordering      optional axis permutation
// Cyclic input replaces r by l and gives the defining set as residues mod l,
// together with a crt block {factors, units} that splits Z_l into a product.

#include <optional>
#include <string>
#include <vector>

#include "abelcode/crt.hpp"
#include "abelcode/orbit.hpp"
#include "json.hpp"

namespace abelcode::cli {

using json = nlohmann::ordered_json;

struct CrtSpec {
  u64 l = 0;
  std::vector<std::uint32_t> factors;
  std::vector<std::uint32_t> units;
  std::vector<u64> residues;

  friend bool operator==(const CrtSpec&, const CrtSpec&) = default;
};

struct CodeSpec {
  u64 q = 2;
  std::vector<std::uint32_t> r;
  std::vector<Index> members;  // sorted, orbit-closed
  std::optional<Ordering> ordering;
  std::optional<CrtSpec> crt;

  Ambient ambient() const { return Ambient(q, r); }
  DefiningSet defining_set() const { return validate_defining_set(ambient(), members); }
  CrtMap crt_map() const;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

/// "a,b,c" without parentheses.
std::string tuple_text(const Index& a);
Index parse_index(const json& v);
std::vector<std::uint32_t> parse_list(const std::string& text);

/// Validates against the orbit module; throws std::invalid_argument or
/// NotOrbitClosed. order and crt override the file ("1,0" and "3,5" or "3,5/2,1").
CodeSpec parse_spec(const json& doc, const std::string& order = {}, const std::string& crt = {});
CodeSpec load_spec(const std::string& path, const std::string& order = {}, const std::string& crt = {});

/// Normalized form: orbit representatives (smallest members) instead of the
/// full set; cyclic specs keep their residues.
json to_json(const CodeSpec& spec);

}  // namespace abelcode::cli
