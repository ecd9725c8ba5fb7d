#include "spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace abelcode::cli {

std::string tuple_text(const Index& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s;
}

Index parse_index(const json& v) {
  if (v.is_string()) return Index::parse(v.get<std::string>());
  if (v.is_number_unsigned()) return Index{v.get<std::uint32_t>()};
  if (v.is_array()) {
    std::vector<std::uint32_t> c;
    for (const auto& x : v) {
      if (!x.is_number_unsigned()) throw std::invalid_argument("index components must be non-negative integers");
      c.push_back(x.get<std::uint32_t>());
    }
    if (c.empty()) throw std::invalid_argument("empty index");
    return Index(std::move(c));
  }
  throw std::invalid_argument("index must be a string, integer or array: " + v.dump());
}

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  for (auto c : Index::parse(text)) out.push_back(c);
  return out;
}

namespace {

template <class T>
std::vector<T> numbers(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_array()) throw std::invalid_argument(std::string(key) + " must be a list");
  std::vector<T> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) throw std::invalid_argument(std::string(key) + " entries must be non-negative integers");
    out.push_back(x.get<T>());
  }
  return out;
}

void apply_crt_flag(CrtSpec& c, const std::string& text) {
  const auto slash = text.find('/');
  c.factors = parse_list(text.substr(0, slash));
  c.units = slash == std::string::npos ? std::vector<std::uint32_t>{} : parse_list(text.substr(slash + 1));
}

}  // namespace

CrtMap CodeSpec::crt_map() const {
  if (!crt) throw std::invalid_argument("spec has no crt block");
  return CrtMap(crt->l, crt->factors, crt->units);
}

CodeSpec parse_spec(const json& doc, const std::string& order, const std::string& crt) {
  if (!doc.is_object()) throw std::invalid_argument("spec must be a JSON object");
  static const std::set<std::string> known{"q", "r", "l", "defining_set", "orbit_reps", "ordering", "crt"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw std::invalid_argument("unknown spec key '" + key + "'");
  }
  CodeSpec spec;
  if (!doc.contains("q") || !doc.at("q").is_number_unsigned()) throw std::invalid_argument("spec needs an integer q");
  spec.q = doc.at("q").get<u64>();
  if (doc.contains("defining_set") && doc.contains("orbit_reps"))
    throw std::invalid_argument("give either defining_set or orbit_reps, not both");

  if (doc.contains("l")) {
    if (doc.contains("r")) throw std::invalid_argument("give either r or l, not both");
    if (doc.contains("orbit_reps")) throw std::invalid_argument("cyclic specs list the defining set as residues");
    CrtSpec c;
    c.l = doc.at("l").get<u64>();
    if (doc.contains("defining_set")) c.residues = numbers<u64>(doc, "defining_set");
    if (doc.contains("crt")) {
      const auto& block = doc.at("crt");
      c.factors = numbers<std::uint32_t>(block, "factors");
      if (block.contains("units")) c.units = numbers<std::uint32_t>(block, "units");
    }
    if (!crt.empty()) apply_crt_flag(c, crt);
    if (c.factors.empty()) throw std::invalid_argument("cyclic spec needs a factorization (crt block or --crt)");
    if (c.units.empty()) c.units.assign(c.factors.size(), 1);
    std::sort(c.residues.begin(), c.residues.end());
    c.residues.erase(std::unique(c.residues.begin(), c.residues.end()), c.residues.end());
    spec.r = c.factors;
    const CrtMap map(c.l, c.factors, c.units);
    spec.members = transport_defining_set(map, spec.q, c.residues).members();
    spec.crt = std::move(c);
  } else {
    if (!crt.empty()) throw std::invalid_argument("--crt applies to cyclic specs (with l)");
    if (doc.contains("crt")) throw std::invalid_argument("a crt block needs l");
    spec.r = numbers<std::uint32_t>(doc, "r");
    const Ambient amb = spec.ambient();
    if (doc.contains("orbit_reps")) {
      std::vector<Index> reps;
      for (const auto& v : doc.at("orbit_reps")) reps.push_back(parse_index(v));
      spec.members = defining_set_from_orbits(amb, reps).members();
    } else if (doc.contains("defining_set")) {
      std::vector<Index> m;
      for (const auto& v : doc.at("defining_set")) m.push_back(parse_index(v));
      spec.members = validate_defining_set(amb, std::move(m)).members();
    }
  }

  if (!order.empty()) {
    spec.ordering = Ordering();
    for (auto a : parse_list(order)) spec.ordering->push_back(a);
  } else if (doc.contains("ordering")) {
    spec.ordering = numbers<Ordering::value_type>(doc, "ordering");
  }
  if (spec.ordering) check_ordering(*spec.ordering, spec.r.size());
  return spec;
}

CodeSpec load_spec(const std::string& path, const std::string& order, const std::string& crt) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read spec file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_spec(doc, order, crt);
}

json to_json(const CodeSpec& spec) {
  json out;
  out["q"] = spec.q;
  if (spec.crt) {
    out["l"] = spec.crt->l;
    out["defining_set"] = spec.crt->residues;
    out["crt"] = {{"factors", spec.crt->factors}, {"units", spec.crt->units}};
  } else {
    out["r"] = spec.r;
    json reps = json::array();
    const Ambient amb = spec.ambient();
    std::set<Index> seen;
    for (const auto& a : spec.members) {
      if (seen.count(a)) continue;
      const auto orbit = qorbit(amb, a);
      seen.insert(orbit.begin(), orbit.end());
      reps.push_back(tuple_text(orbit.front()));
    }
    out["orbit_reps"] = reps;
  }
  if (spec.ordering) out["ordering"] = *spec.ordering;
  return out;
}

}  // namespace abelcode::cli
