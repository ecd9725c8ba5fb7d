// abelcode: check positions, distances, PD-sets and permutation decoding for
// abelian codes. Exit status 0 on success, 1 when the property checked does
// not hold, 2 on invalid input.

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "abelcode/code.hpp"
#include "abelcode/crt.hpp"
#include "abelcode/gamma.hpp"
#include "abelcode/mindist.hpp"
#include "abelcode/orbit.hpp"
#include "abelcode/permdec.hpp"
#include "spec_io.hpp"

using namespace abelcode;
using abelcode::cli::json;
using abelcode::cli::tuple_text;

namespace {

constexpr u64 kDefaultSeed = 1;

struct Common {
  std::string spec_path;
  std::string order;
  std::string crt;
  u64 budget = 0;
  u64 seed = kDefaultSeed;
  bool machine = false;
};

struct Report {
  json data;
  std::ostringstream text;
  int status = 0;
};

json index_list(std::span<const Index> v) {
  json out = json::array();
  for (const auto& a : v) out.push_back(tuple_text(a));
  return out;
}

std::string brace(const std::vector<Index>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

template <class T>
std::string brace(const std::vector<T>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<Index> parse_positions(const std::string& text) {
  std::vector<Index> out;
  const char sep = text.find('(') != std::string::npos ? ')' : ';';
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (sep == ')') item.erase(0, std::min(item.size(), item.find('(') == std::string::npos ? item.size() : item.find('(')));
    if (item.find_first_of("0123456789") != std::string::npos) out.push_back(Index::parse(item));
  }
  return out;
}

CheckSet check_set(const cli::CodeSpec& spec, const DefiningSet& def) {
  return spec.ordering ? build_gamma(def, *spec.ordering) : build_gamma(def);
}

json tree_json(const FgNode& node) {
  json out;
  out["level"] = node.level;
  if (node.leaf()) {
    out["g"] = node.g;
    return out;
  }
  out["f"] = node.f;
  json kids = json::array();
  for (const auto& c : node.children) kids.push_back(tree_json(c));
  out["children"] = kids;
  return out;
}

void tree_text(const FgNode& node, const std::string& path, std::ostream& os) {
  if (node.leaf()) return;
  bool leaves = !node.children.empty() && node.children.front().leaf();
  os << "  f" << path << " = " << brace(node.f);
  if (leaves) {
    std::vector<u64> g;
    for (const auto& c : node.children) g.push_back(c.g);
    os << "   g" << path << " = " << brace(g);
  }
  os << '\n';
  for (std::size_t u = 0; u < node.children.size(); ++u) tree_text(node.children[u], path + "[" + std::to_string(u + 1) + "]", os);
}

std::vector<u64> to_residues(const CrtMap& map, std::span<const Index> positions) { return pullback_positions(map, positions); }

// --- subcommands --------------------------------------------------------

void cmd_orbits(const cli::CodeSpec& spec, Report& rep) {
  const Ambient amb = spec.ambient();
  const DefiningSet def = spec.defining_set();
  json list = json::array();
  rep.text << "q = " << amb.q() << ", length " << amb.length() << '\n';
  for (const auto& orbit : all_orbits(amb)) {
    const bool in = def.contains(orbit.front());
    list.push_back({{"rep", tuple_text(orbit.front())}, {"size", orbit.size()}, {"in_defining_set", in},
                    {"members", index_list(orbit)}});
    rep.text << (in ? "  * " : "    ") << "Q" << orbit.front().str() << "  size " << orbit.size() << "  "
             << brace(orbit) << '\n';
  }
  rep.text << all_orbits(amb).size() << " orbits; * marks the defining set\n";
  rep.data["orbits"] = list;
}

void cmd_infoset(const cli::CodeSpec& spec, Report& rep) {
  const DefiningSet def = spec.defining_set();
  const CheckSet cs = check_set(spec, def);
  const auto info = information_set(cs);
  const RestrictedReps reps = restricted_reps(def, cs.ordering());

  json m = json::object();
  for (const auto& [prefix, v] : cs.tables().m_table()) m[tuple_text(prefix)] = v;
  rep.data["ordering"] = cs.ordering();
  rep.data["restricted_reps"] = index_list(reps.original_reps());
  rep.data["m"] = m;
  rep.data["parameter_vectors"] = cs.tables().parameter_vectors();
  rep.data["thresholds"] = tree_json(cs.tree());
  rep.data["dimension"] = def.ambient().length() - def.size();
  rep.data["check_positions"] = index_list(cs.positions());
  rep.data["information_set"] = index_list(info);

  rep.text << "ordering " << brace(cs.ordering()) << " (ordered axis k is original axis ordering[k])\n";
  rep.text << "restricted representatives " << brace(reps.original_reps()) << '\n';
  rep.text << "m (ordered prefixes):";
  for (const auto& [prefix, v] : cs.tables().m_table()) rep.text << ' ' << prefix.str() << '=' << v;
  rep.text << '\n';
  tree_text(cs.tree(), "", rep.text);
  rep.text << "dimension " << def.ambient().length() - def.size() << '\n';
  rep.text << "check positions (" << cs.size() << ") " << brace(cs.positions()) << '\n';
  rep.text << "information set (" << info.size() << ") " << brace(info) << '\n';

  if (spec.crt) {
    const CrtMap map = spec.crt_map();
    const auto back = to_residues(map, cs.positions());
    const auto back_info = to_residues(map, info);
    rep.data["cyclic_check_positions"] = back;
    rep.data["cyclic_information_set"] = back_info;
    rep.text << "cyclic check positions " << brace(back) << '\n';
    rep.text << "cyclic information set " << brace(back_info) << '\n';
  }
}

void cmd_verify(const cli::CodeSpec& spec, const std::string& positions, Report& rep) {
  const DefiningSet def = spec.defining_set();
  const AbelianCode code(def);
  std::vector<Index> pos = positions.empty() ? check_set(spec, def).positions() : parse_positions(positions);
  std::sort(pos.begin(), pos.end());
  const VerifyResult res = verify_check_positions(code, pos);
  const VerifyResult alt = verify_check_positions(code, pos, 1);
  rep.data["positions"] = index_list(pos);
  rep.data["status"] = status_name(res.status);
  rep.data["expected"] = res.expected;
  rep.data["given"] = res.given;
  rep.data["alternative_basis_status"] = status_name(alt.status);
  rep.text << (res.ok() ? "PASS" : "FAIL") << ": " << status_name(res.status) << " (" << res.given << " positions, "
           << res.expected << " needed)\n";
  rep.text << "alternative subfield basis: " << status_name(alt.status) << '\n';
  if (!res.witness.empty()) {
    json w = json::array();
    rep.text << "dependency:";
    for (const auto& [p, c] : res.witness) {
      w.push_back({{"position", tuple_text(p)}, {"coefficient", c}});
      rep.text << ' ' << static_cast<unsigned>(c) << '*' << p.str();
    }
    rep.text << '\n';
    rep.data["witness"] = w;
  }
  rep.status = res.ok() && alt.ok() ? 0 : 1;
}

DistanceMethod method_from(const std::string& name) {
  if (name == "auto") return DistanceMethod::Auto;
  if (name == "gray") return DistanceMethod::Gray;
  if (name == "exhaustive") return DistanceMethod::Exhaustive;
  if (name == "bz" || name == "brouwer-zimmermann") return DistanceMethod::BrouwerZimmermann;
  throw std::invalid_argument("unknown distance method '" + name + "'");
}

json distance_json(const DistanceResult& d) {
  json out{{"lower", d.lower}, {"upper", d.upper}, {"exact", d.exact()}, {"method", method_name(d.method)},
           {"codewords_visited", d.work}};
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < d.witness.size(); ++j)
    if (d.witness[j]) support.push_back(j);
  out["witness_support"] = support;
  return out;
}

void cmd_mindist(const cli::CodeSpec& spec, const Common& common, const std::string& method, std::optional<u64> target,
                 unsigned threads, Report& rep) {
  const AbelianCode code(spec.defining_set());
  if (code.dimension() == 0) throw std::invalid_argument("the code is zero; minimum distance is undefined");
  DistanceOptions opt;
  opt.method = method_from(method);
  opt.budget = common.budget;
  opt.target = target;
  opt.threads = threads;
  const DistanceResult d = min_distance(generator_matrix(code), opt);
  rep.data["length"] = code.length();
  rep.data["dimension"] = code.dimension();
  rep.data["distance"] = distance_json(d);
  rep.text << "[" << code.length() << ", " << code.dimension() << "] code, ";
  if (d.exact()) {
    rep.text << "d = " << d.upper;
  } else {
    rep.text << d.lower << " <= d <= " << d.upper;
  }
  rep.text << " (" << method_name(d.method) << ", " << d.work << " codewords)\n";
  if (target) {
    const bool at_least = d.lower >= *target;
    const bool below = d.upper < *target;
    rep.data["target"] = *target;
    rep.text << "d >= " << *target << ": " << (at_least ? "yes" : below ? "no" : "undecided") << '\n';
    rep.status = at_least ? 0 : 1;
  }
}

std::vector<LambdaElem> group_from(const Ambient& amb, const std::string& name) {
  if (name == "lambda") return enumerate_lambda(amb);
  if (name == "translations") return enumerate_translations(amb);
  throw std::invalid_argument("unknown group '" + name + "' (lambda or translations)");
}

void cmd_pdset(const cli::CodeSpec& spec, const Common& common, std::size_t s, const std::string& group,
               const std::string& method, Report& rep) {
  const DefiningSet def = spec.defining_set();
  const CheckSet cs = check_set(spec, def);
  const Ambient& amb = def.ambient();
  rep.data["s"] = s;
  rep.data["group"] = group;
  rep.data["method"] = method;
  PdResult res;
  if (method == "exhaustive") {
    const auto p = group_from(amb, group);
    res = common.budget ? is_pd_set(amb, p, information_set(cs), s, common.budget)
                        : is_pd_set(amb, p, information_set(cs), s);
    rep.data["group_size"] = p.size();
  } else if (method == "lemma") {
    if (group != "lambda") throw std::invalid_argument("the lemma method applies to the full group");
    const LemmaCheck lc = s == 2 ? two_error_lemma_check(cs, s) : three_error_lemma_check(cs, s);
    rep.data["hypotheses"] = {{"orbits_hit", lc.orbits_hit}, {"thresholds", lc.thresholds}, {"capacity", lc.capacity}};
    rep.text << "lemma hypotheses: orbits " << (lc.orbits_hit ? "hit" : "missed") << ", thresholds "
             << (lc.thresholds ? "ok" : "fail") << '\n';
    res = lemma_fast_path(cs, s);
  } else {
    throw std::invalid_argument("unknown PD method '" + method + "' (exhaustive or lemma)");
  }
  rep.data["pd_set"] = res.ok;
  rep.data["subsets_checked"] = res.subsets_checked;
  rep.text << (res.ok ? "PASS" : "FAIL") << ": " << group << " is " << (res.ok ? "" : "not ") << "a PD-set for " << s
           << " errors (" << res.subsets_checked << " subsets)\n";
  if (!res.ok) {
    rep.data["failing_subset"] = index_list(res.failing);
    rep.text << "no element moves " << brace(res.failing) << " into the check positions\n";
  }
  rep.status = res.ok ? 0 : 1;
}

Codeword parse_word(const std::string& text, std::size_t length, unsigned q) {
  Codeword w;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c < '0' || c > '9') throw std::invalid_argument("received word must be digits");
    w.push_back(static_cast<Sym>(c - '0'));
  }
  if (w.size() != length) throw std::invalid_argument("received word must have " + std::to_string(length) + " symbols");
  for (auto x : w)
    if (x >= q) throw std::invalid_argument("received symbol out of range");
  return w;
}

std::string word_text(const Codeword& w) {
  std::string s;
  for (auto x : w) s += static_cast<char>('0' + x);
  return s;
}

void cmd_decode(const cli::CodeSpec& spec, const Common& common, const std::string& group, std::optional<std::size_t> t_opt,
                std::optional<std::size_t> weight_opt, std::size_t trials, const std::string& word, Report& rep) {
  const DefiningSet def = spec.defining_set();
  const AbelianCode code(def);
  const CheckSet cs = check_set(spec, def);
  const Ambient& amb = def.ambient();
  const unsigned q = code.base_field().q();
  if (!word.empty() && q > 10) throw std::invalid_argument("--word needs q <= 10");
  std::size_t t = 0;
  if (t_opt) {
    t = *t_opt;
  } else {
    if (code.dimension() == 0) throw std::invalid_argument("the code is zero");
    const DistanceResult d = min_distance(generator_matrix(code));
    t = static_cast<std::size_t>((d.lower - 1) / 2);
    rep.data["distance"] = d.lower;
  }
  const PermutationDecoder dec(amb, standard_form_parity(code, cs), group_from(amb, group), t);
  rep.data["capacity"] = t;
  rep.data["group"] = group;
  rep.text << "capacity t = " << t << ", group " << group << '\n';

  if (!word.empty()) {
    const Codeword r = parse_word(word, code.length(), q);
    const DecodeResult res = dec.decode(r);
    rep.data["received"] = word_text(r);
    if (res.codeword) {
      rep.data["decoded"] = word_text(*res.codeword);
      rep.data["element"] = res.element;
      rep.text << "decoded " << word_text(*res.codeword) << " (group element " << res.element << ")\n";
    } else {
      rep.data["decoded"] = nullptr;
      rep.text << "FAIL: no group element moves the errors off the information set\n";
      rep.status = 1;
    }
    return;
  }

  const std::size_t weight = weight_opt.value_or(t);
  if (weight > code.length()) throw std::invalid_argument("error weight exceeds the length");
  std::mt19937_64 rng(common.seed);
  const auto& sf = dec.standard_form();
  std::size_t corrected = 0, wrong = 0, failed = 0;
  json runs = json::array();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Sym> info(sf.info_columns.size());
    for (auto& x : info) x = static_cast<Sym>(rng() % q);
    const Codeword c = encode(sf, info);
    std::vector<std::size_t> pos(code.length());
    std::iota(pos.begin(), pos.end(), 0);
    for (std::size_t i = 0; i < weight; ++i) std::swap(pos[i], pos[i + rng() % (pos.size() - i)]);
    Codeword r = c;
    const BaseField& f = code.base_field();
    for (std::size_t i = 0; i < weight; ++i) r[pos[i]] = f.add(r[pos[i]], static_cast<Sym>(1 + rng() % (q - 1)));
    const DecodeResult res = dec.decode(r);
    const char* outcome = !res.codeword ? "failure" : (*res.codeword == c ? "corrected" : "miscorrected");
    corrected += res.codeword && *res.codeword == c;
    wrong += res.codeword && *res.codeword != c;
    failed += !res.codeword;
    runs.push_back({{"codeword", word_text(c)}, {"received", word_text(r)}, {"outcome", outcome}, {"probes", res.probes}});
  }
  rep.data["seed"] = common.seed;
  rep.data["error_weight"] = weight;
  rep.data["trials"] = runs;
  rep.data["corrected"] = corrected;
  rep.data["miscorrected"] = wrong;
  rep.data["failures"] = failed;
  rep.text << trials << " trials with " << weight << " errors (seed " << common.seed << "): " << corrected
           << " corrected, " << wrong << " miscorrected, " << failed << " failures\n";
  rep.status = corrected == trials ? 0 : 1;
}

struct SearchFlags {
  std::optional<u64> dim, dim_min, d_min;
  std::optional<std::size_t> pd_s, light;
  std::string pd_group = "lambda";
  std::string pd_method = "exhaustive";
  std::string method = "auto";
};

void cmd_search(const cli::CodeSpec& spec, const Common& common, const SearchFlags& sf, Report& rep) {
  const Ambient amb = spec.ambient();
  SearchConstraints c;
  c.dim_exact = sf.dim;
  c.dim_min = sf.dim_min;
  c.d_min = sf.d_min;
  c.light_weight = sf.light;
  c.ordering = spec.ordering;
  c.distance.method = method_from(sf.method);
  c.distance.budget = common.budget;
  if (sf.pd_s) {
    PdRequirement pd;
    pd.s = *sf.pd_s;
    if (sf.pd_group == "lambda") {
      pd.subgroup = PdSubgroup::Lambda;
    } else if (sf.pd_group == "translations") {
      pd.subgroup = PdSubgroup::Translations;
    } else {
      throw std::invalid_argument("unknown group '" + sf.pd_group + "'");
    }
    if (sf.pd_method == "exhaustive") {
      pd.method = PdMethod::Exhaustive;
    } else if (sf.pd_method == "lemma") {
      pd.method = PdMethod::Lemma;
    } else {
      throw std::invalid_argument("unknown PD method '" + sf.pd_method + "'");
    }
    c.pd = pd;
  }
  const SearchReport res = design_search(amb, c);
  json hits = json::array();
  rep.text << res.candidates << " orbit unions pass the dimension filter, " << res.after_pd
           << " pass the PD condition, " << res.hits.size() << " hits\n";
  for (const auto& h : res.hits) {
    json j{{"orbit_reps", index_list(h.orbit_reps)}, {"dimension", h.dimension}};
    rep.text << "  k = " << h.dimension << "  " << brace(h.orbit_reps);
    if (h.distance) {
      j["distance"] = distance_json(*h.distance);
      rep.text << "  d " << (h.distance->exact() ? "= " : ">= ") << h.distance->lower;
    }
    if (h.pd) j["pd_set"] = *h.pd;
    if (sf.light) {
      if (h.light_word) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < h.light_word->size(); ++i)
          if ((*h.light_word)[i]) support.push_back(i);
        j["light_word_support"] = support;
        rep.text << "  weight-" << support.size() << " word " << brace(support);
      } else {
        j["light_word_support"] = nullptr;
        rep.text << "  no word of weight <= " << *sf.light;
      }
    }
    rep.text << '\n';
    hits.push_back(j);
  }
  rep.data["candidates"] = res.candidates;
  rep.data["after_pd"] = res.after_pd;
  rep.data["hits"] = hits;
  rep.status = res.hits.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check positions, minimum distance, PD-sets and permutation decoding for abelian codes"};
  app.require_subcommand(1);
  Common common;
  Report rep;
  std::function<void(const cli::CodeSpec&)> run;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", common.spec_path, "Code specification (JSON)")->required();
    sub->add_option("--order", common.order, "Axis ordering, e.g. 1,0");
    sub->add_option("--crt", common.crt, "Factorization of a cyclic length, e.g. 3,5 or 3,5/2,1 with unit multipliers");
    sub->add_option("--budget", common.budget, "Work budget (codewords for distances, subsets for PD checks)");
    sub->add_option("--seed", common.seed, "Random seed (default 1)");
    sub->add_flag("--machine-output", common.machine, "Print a JSON report instead of text");
  };

  auto* orbits = app.add_subcommand("orbits", "List the q-orbits and mark the defining set");
  add_common(orbits);
  orbits->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_orbits(s, rep); }; });

  auto* infoset = app.add_subcommand("infoset", "Check positions, information set and parameter tables");
  add_common(infoset);
  infoset->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_infoset(s, rep); }; });

  std::string positions;
  auto* verify = app.add_subcommand("verify", "Verify a set of check positions against the parity matrix");
  add_common(verify);
  verify->add_option("--positions", positions, "Positions to test, e.g. \"0,0;1,2\" or \"(0,0),(1,2)\" (default: the computed set)");
  verify->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_verify(s, positions, rep); }; });

  std::string method = "auto";
  std::optional<u64> target;
  unsigned threads = 0;
  auto* mindist = app.add_subcommand("mindist", "Minimum distance");
  add_common(mindist);
  mindist->add_option("--method", method, "auto, gray, exhaustive or bz");
  mindist->add_option("--target", target, "Only decide whether d >= target");
  mindist->add_option("--threads", threads, "Worker threads for the Gray walk (0 = all cores)");
  mindist->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_mindist(s, common, method, target, threads, rep); }; });

  std::size_t s_value = 2;
  std::string group = "lambda";
  std::string pd_method = "exhaustive";
  auto* pdset = app.add_subcommand("pdset", "Check that a permutation group is an s-PD-set");
  add_common(pdset);
  pdset->add_option("-s", s_value, "Number of errors (default 2)");
  pdset->add_option("--group", group, "lambda or translations");
  pdset->add_option("--method", pd_method, "exhaustive or lemma");
  pdset->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_pdset(s, common, s_value, group, pd_method, rep); }; });

  std::optional<std::size_t> t_opt, weight;
  std::size_t trials = 10;
  std::string word;
  auto* decode = app.add_subcommand("decode", "Permutation decoding of random or given words");
  add_common(decode);
  decode->add_option("--group", group, "lambda or translations");
  decode->add_option("-t", t_opt, "Error capacity (default from the minimum distance)");
  decode->add_option("--weight", weight, "Injected error weight (default t)");
  decode->add_option("--trials", trials, "Random codewords to try (default 10)");
  decode->add_option("--word", word, "Decode this received word instead (digits)");
  decode->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_decode(s, common, group, t_opt, weight, trials, word, rep); }; });

  SearchFlags sflags;
  auto* search = app.add_subcommand("search", "Orbit-union codes filtered by dimension, PD condition and distance");
  add_common(search);
  search->add_option("--dim", sflags.dim, "Exact dimension");
  search->add_option("--dim-min", sflags.dim_min, "Minimum dimension");
  search->add_option("--d-min", sflags.d_min, "Minimum distance");
  search->add_option("--pd-s", sflags.pd_s, "Require an s-PD-set");
  search->add_option("--pd-group", sflags.pd_group, "lambda or translations");
  search->add_option("--pd-method", sflags.pd_method, "exhaustive or lemma");
  search->add_option("--light-weight", sflags.light, "Find a codeword of at most this weight in every hit");
  search->add_option("--method", sflags.method, "Distance method");
  search->callback([&] { run = [&](const cli::CodeSpec& s) { cmd_search(s, common, sflags, rep); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const cli::CodeSpec spec = cli::load_spec(common.spec_path, common.order, common.crt);
    rep.data["command"] = app.get_subcommands().front()->get_name();
    rep.data["spec"] = cli::to_json(spec);
    run(spec);
  } catch (const NotOrbitClosed& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  rep.data["exit_status"] = rep.status;
  if (common.machine) {
    std::cout << rep.data.dump(2) << '\n';
  } else {
    std::cout << rep.text.str();
  }
  return rep.status;
}
