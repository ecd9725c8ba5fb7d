// Acceptance driver: one PASS/FAIL line per criterion.
//
//   acceptance                 run everything
//   acceptance --criterion 8   run one criterion (repeatable)
//   acceptance --list          list criteria

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abelcode/code.hpp"
#include "abelcode/crt.hpp"
#include "abelcode/gamma.hpp"
#include "abelcode/matrix.hpp"
#include "abelcode/mindist.hpp"
#include "abelcode/orbit.hpp"
#include "abelcode/permdec.hpp"
#include "fixtures.hpp"
#include "random_suite.hpp"

using namespace abelcode;

namespace {

// Pinned tolerances and budgets.
constexpr double kQuickSeconds = 1.0;
constexpr double kSuiteSeconds = 900.0;
constexpr double kLength45Seconds = 1800.0;
constexpr double kLength65Seconds = 3600.0;
constexpr double kDecodeSeconds = 120.0;
constexpr std::size_t kSuiteSize = 500;
constexpr u64 kSuiteSeed = 20240611;
constexpr u64 kDecodeSeed = 7;
constexpr std::size_t kDecodeCodewords = 10;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool cond, const std::string& what) {
    if (!cond) pass = false;
    notes.push_back(std::string(cond ? "ok    " : "FAIL  ") + what);
  }
  void note(const std::string& what) { notes.push_back("      " + what); }
};

std::string join(const std::vector<Index>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "}";
}

std::string join(const std::vector<u64>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::vector<u64> leaf_gs(const FgNode& root) {
  std::vector<u64> g;
  for (const auto& c : root.children) g.push_back(c.g);
  return g;
}

// --- 1 -------------------------------------------------------------------

Outcome worked_two_variable() {
  Outcome o;
  const auto def = validate_defining_set(fixtures::two_variable_ambient(), fixtures::two_variable_members());
  o.check(def.size() == 15, "defining set has 15 elements");
  const CheckSet cs = build_gamma(def);
  o.check(cs.ordered_reps() == fixtures::parse_all({"0,3", "1,1", "1,3"}), "representatives " + join(cs.ordered_reps()));
  const auto& t = cs.tables();
  o.check(t.m(Index{0}) == 1 && t.m(Index{1}) == 2, "m(0) = 1, m(1) = 2");
  o.check(t.m(Index{0, 3}) == 3 && t.m(Index{1, 1}) == 3 && t.m(Index{1, 3}) == 3, "m(0,3) = m(1,1) = m(1,3) = 3");
  o.check(cs.tree().f == std::vector<u64>{6, 3, 0}, "f = (6, 3)");
  o.check(leaf_gs(cs.tree()) == std::vector<u64>{2, 3}, "g = (2, 3)");
  o.check(cs.positions() == fixtures::two_variable_gamma(), "check positions " + join(cs.positions()));
  return o;
}

// --- 2 -------------------------------------------------------------------

Outcome worked_three_variable() {
  Outcome o;
  const auto def = validate_defining_set(fixtures::three_variable_ambient(), fixtures::three_variable_members());
  const CheckSet cs = build_gamma(def);
  const FgNode& root = cs.tree();
  o.check(root.f == std::vector<u64>{2, 1, 0}, "f = (2, 1)");
  const bool shape = root.children.size() == 2;
  o.check(shape, "two threshold branches");
  if (shape) {
    const FgNode& a = root.children[0];
    const FgNode& b = root.children[1];
    o.check(a.f == std::vector<u64>{1, 0}, "f[1,.] = (1)");
    o.check(b.f == std::vector<u64>{3, 1, 0}, "f[2,.] = (3, 1)");
    o.check(leaf_gs(a) == std::vector<u64>{2}, "g[1,1] = 2");
    o.check(leaf_gs(b) == std::vector<u64>{1, 3}, "g[2,1] = 1, g[2,2] = 3");
  }
  o.check(cs.positions() == fixtures::three_variable_gamma(), "check positions " + join(cs.positions()));
  return o;
}

// --- 3 -------------------------------------------------------------------

Outcome ordering_sensitivity() {
  Outcome o;
  const auto def = validate_defining_set(fixtures::ordering_ambient(), fixtures::ordering_members());
  const CheckSet a = build_gamma(def, Ordering{0, 1});
  const CheckSet b = build_gamma(def, Ordering{1, 0});
  o.check(a.positions() == fixtures::ordering_gamma_default(), "default order " + join(a.positions()));
  o.check(b.positions() == fixtures::ordering_gamma_swapped(), "swapped order " + join(b.positions()));
  o.check(a.positions() != b.positions(), "the two sets differ");
  return o;
}

// --- 4 -------------------------------------------------------------------

Outcome representative_guard() {
  Outcome o;
  const Ambient amb = fixtures::guard_ambient();
  const auto def = validate_defining_set(amb, fixtures::guard_members());
  const auto forbidden = fixtures::guard_forbidden();
  const Ordering id = identity_ordering(3);

  const auto canonical = restricted_reps(def, id);
  o.check(canonical.reps() != forbidden, "canonical choice " + join(canonical.reps()));
  o.check(restricted_reps_violation(def, id, canonical.reps()).empty(), "canonical choice satisfies the restriction");

  std::mt19937_64 rng(1);
  bool never = true;
  bool all_valid = true;
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = restricted_reps(def, id, suite::random_chooser(rng));
    never = never && r.reps() != forbidden;
    all_valid = all_valid && restricted_reps_violation(def, id, r.reps()).empty();
  }
  o.check(never && all_valid, "200 randomized choices are valid and never the forbidden set");
  const std::string why = restricted_reps_violation(def, id, forbidden);
  o.check(!why.empty(), "forbidden set rejected: " + why);

  const GammaTables raw = compute_tables_raw(amb, forbidden);
  const FgNode tree = compute_fg(amb, forbidden, raw, false);
  u64 mu = 0;
  if (!tree.children.empty()) {
    auto it = tree.children[0].values.find(Index{0});
    if (it != tree.children[0].values.end()) mu = it->second;
  }
  o.check(mu == 5 && mu > amb.r(1), "raw formulas on the forbidden set give mu_1(0) = " + std::to_string(mu) + " > r_2 = 3");
  bool threw = false;
  try {
    compute_fg(amb, forbidden, raw, true);
  } catch (const std::logic_error&) {
    threw = true;
  }
  o.check(threw, "range-checked evaluation rejects the forbidden set");
  return o;
}

// --- 5 -------------------------------------------------------------------

Outcome cyclic_transport() {
  Outcome o;
  const CrtMap phi(15, {3, 5});
  const CrtMap phi2(15, {3, 5}, {2, 1});
  const auto d = fixtures::cyclic15_defining();
  const auto def = transport_defining_set(phi, 2, d);
  const auto def2 = transport_defining_set(phi2, 2, d);
  o.check(def.members() == fixtures::cyclic15_transported(), "transported defining set " + join(def.members()));
  const CheckSet cs = build_gamma(def);
  const CheckSet cs2 = build_gamma(def2);
  o.check(cs.positions() == fixtures::cyclic15_gamma(), "product-space check positions " + join(cs.positions()));
  o.check(cs2.positions() == cs.positions(), "second isomorphism gives the same product-space set");
  const auto back = pullback_positions(phi, cs.positions());
  const auto back2 = pullback_positions(phi2, cs2.positions());
  o.check(back == fixtures::cyclic15_pullback(), "pullback " + join(back));
  o.check(back2 != back, "second isomorphism pulls back to " + join(back2));
  if (back2 == back) {
    std::vector<Index> negated;
    for (const auto& p : cs.positions()) negated.push_back(Index{(3 - p[0]) % 3, p[1]});
    std::sort(negated.begin(), negated.end());
    o.note("the second map is t -> (-t mod 3, t mod 5); the pullback is the preimage of Gamma under (a, b) -> (-a, b)");
    o.note(std::string("Gamma is ") + (negated == cs.positions() ? "" : "not ") +
           "closed under negating the first coordinate, so both maps pull back to the same set");
    const CrtMap phi3(15, {3, 5}, {1, 2});
    const auto back3 = pullback_positions(phi3, build_gamma(transport_defining_set(phi3, 2, d)).positions());
    o.note("for contrast, the unit 2 on the second axis pulls back to " + join(back3));
  }

  const Ambient line(2, {15});
  std::vector<Index> dl;
  for (auto t : d) dl.push_back(Index{static_cast<std::uint32_t>(t)});
  const AbelianCode cyclic(validate_defining_set(line, dl));
  for (const auto* set : {&back, &back2}) {
    std::vector<Index> pos;
    for (auto t : *set) pos.push_back(Index{static_cast<std::uint32_t>(t)});
    o.check(verify_check_positions(cyclic, pos).ok(), "pulled-back set " + join(*set) + " are check positions of the cyclic code");
  }
  return o;
}

// --- 6, 7 ----------------------------------------------------------------

struct SuiteStats {
  std::size_t codes = 0;
  std::size_t verified = 0;
  std::size_t count_ok = 0;
  std::size_t invariant_ok = 0;
  std::size_t basis_ok = 0;
  std::size_t dim_ok = 0;
  std::size_t span_ok = 0;
  std::map<u64, std::size_t> by_q;
  std::map<std::size_t, std::size_t> by_n;
  std::vector<std::string> failures;
};

const SuiteStats& random_suite() {
  static std::optional<SuiteStats> cached;
  if (cached) return *cached;
  SuiteStats s;
  std::mt19937_64 rng(kSuiteSeed);
  for (std::size_t i = 0; i < kSuiteSize; ++i) {
    const auto rc = suite::random_code(rng);
    const Ambient& amb = rc.def.ambient();
    ++s.codes;
    ++s.by_q[amb.q()];
    ++s.by_n[amb.n()];
    const AbelianCode code(rc.def);
    const CheckSet cs = build_gamma(rc.def, rc.ordering);
    const bool counted = cs.size() == rc.def.size();
    const bool ok = verify_check_positions(code, cs).ok();
    const bool ok_alt = verify_check_positions(code, cs, 1).ok();
    bool invariant = true;
    for (int trial = 0; trial < 3; ++trial) {
      const auto reps = restricted_reps(rc.def, rc.ordering, suite::random_chooser(rng));
      const CheckSet other = build_gamma(rc.def, reps);
      invariant = invariant && other.positions() == cs.positions() &&
                  other.tables().parameter_vectors() == cs.tables().parameter_vectors();
    }
    const MatrixGF h = parity_matrix(code);
    const MatrixGF g = generator_matrix(code);
    const bool dim = rank(g) == code.dimension() && g.rows() == code.dimension();
    const bool span = rank(h) == rc.def.size();
    s.count_ok += counted;
    s.verified += ok;
    s.basis_ok += ok == ok_alt;
    s.invariant_ok += invariant;
    s.dim_ok += dim;
    s.span_ok += span;
    if (!(counted && ok && invariant && dim && span && ok == ok_alt)) {
      std::ostringstream os;
      os << "q=" << amb.q() << " r=";
      for (auto r : amb.r()) os << r << ' ';
      os << "|D|=" << rc.def.size();
      s.failures.push_back(os.str());
    }
  }
  cached = std::move(s);
  return *cached;
}

std::string mix(const SuiteStats& s) {
  std::ostringstream os;
  os << "q:";
  for (auto [q, c] : s.by_q) os << ' ' << q << "x" << c;
  os << "  n:";
  for (auto [n, c] : s.by_n) os << ' ' << n << "x" << c;
  return os.str();
}

Outcome check_positions_suite() {
  Outcome o;
  const SuiteStats& s = random_suite();
  o.note(std::to_string(s.codes) + " codes, " + mix(s));
  o.check(s.codes >= kSuiteSize, "at least 500 codes");
  o.check(s.verified == s.codes, std::to_string(s.verified) + "/" + std::to_string(s.codes) + " check-position sets verified");
  o.check(s.count_ok == s.codes, std::to_string(s.count_ok) + " with |Gamma| = |D|");
  o.check(s.invariant_ok == s.codes, std::to_string(s.invariant_ok) + " invariant under randomized representatives");
  o.check(s.basis_ok == s.codes, std::to_string(s.basis_ok) + " with the same verdict under an alternative subfield basis");
  for (const auto& f : s.failures) o.note("failure: " + f);
  return o;
}

Outcome dimension_suite() {
  Outcome o;
  const SuiteStats& s = random_suite();
  o.check(s.dim_ok == s.codes, std::to_string(s.dim_ok) + "/" + std::to_string(s.codes) + " with l - |D| = rank of the generator matrix");
  o.check(s.span_ok == s.codes, std::to_string(s.span_ok) + " with parity matrix rank |D|");
  return o;
}

// --- 8 -------------------------------------------------------------------

std::vector<std::string> orbit_mins(const Ambient& amb) {
  std::vector<std::string> out;
  for (const auto& orbit : all_orbits(amb)) {
    const auto s = orbit.front().str();
    out.push_back(s.substr(1, s.size() - 2));
  }
  return out;
}

u64 exact_distance(Outcome& o, const AbelianCode& code, DistanceMethod method, const std::string& label) {
  DistanceOptions opt;
  opt.method = method;
  const auto res = min_distance(generator_matrix(code), opt);
  o.note(label + ": d = " + std::to_string(res.upper) + " by " + method_name(res.method) + " (" + std::to_string(res.work) +
         " codewords)");
  return res.exact() ? res.upper : 0;
}

Outcome length45() {
  Outcome o;
  const Ambient cyc = fixtures::len45_cyclic_ambient();
  const Ambient ab = fixtures::len45_abelian_ambient();
  o.check(orbit_mins(cyc) == fixtures::len45_cyclic_orbit_list(), "8 orbits of Z5 x Z9");
  o.check(orbit_mins(ab) == fixtures::len45_abelian_orbit_list(), "14 orbits of Z3 x Z15");
  const auto lambda_cyc = enumerate_lambda(cyc);
  const auto lambda_ab = enumerate_lambda(ab);
  const auto shifts_ab = enumerate_translations(ab);

  int idx = 0;
  for (const auto& reps : fixtures::len45_cyclic_codes()) {
    ++idx;
    const std::string name = "cyclic code " + std::to_string(idx);
    const auto def = fixtures::from_orbits(cyc, reps);
    const AbelianCode code(def);
    const CheckSet cs = build_gamma(def);
    o.check(code.dimension() == 29, name + ": k = 29");
    o.check(exact_distance(o, code, DistanceMethod::Gray, name) == 5, name + ": d = 5 (Gray walk)");
    const auto hitters = fixtures::len45_orbit_hitters();
    o.check(std::includes(cs.positions().begin(), cs.positions().end(), hitters.begin(), hitters.end()),
            name + ": Gamma contains the orbit-hitting set");
    o.check(is_pd_set(cyc, lambda_cyc, information_set(cs), 2).ok, name + ": full group is a 2-PD-set (exhaustive)");
  }

  {
    const auto def = fixtures::from_orbits(ab, fixtures::translation_code_reps());
    const AbelianCode code(def);
    const CheckSet cs = build_gamma(def);
    o.check(code.dimension() == 31, "translation code: k = 31");
    o.check(exact_distance(o, code, DistanceMethod::Auto, "translation code") == 6, "translation code: d = 6");
    o.check(cs.tree().f == std::vector<u64>{8, 3, 0} && leaf_gs(cs.tree()) == std::vector<u64>{1, 3},
            "translation code: f = (8, 3), g = (1, 3)");
    o.check(verify_check_positions(code, cs).ok(), "translation code: computed Gamma verified, |Gamma| = " + std::to_string(cs.size()));
    const auto listed = fixtures::translation_code_listed_gamma();
    const bool equal = cs.positions() == listed;
    o.check(equal, "translation code: Gamma equals the 10 listed positions");
    if (!equal) {
      o.note("listed:   " + join(listed) + " (" + std::to_string(listed.size()) + " positions)");
      o.note("computed: " + join(cs.positions()) + " (" + std::to_string(cs.size()) + " positions)");
      o.note("the quoted thresholds f = (8, 3), g = (1, 3) give 1*5 + 3*3 = 14 positions, and |D| = 45 - 31 = 14;");
      o.note("a 10-position set cannot be a set of check positions for a 31-dimensional code of length 45");
      const auto v = verify_check_positions(code, listed);
      o.note(std::string("independent oracle on the listed set: ") + status_name(v.status) + " (" + std::to_string(v.given) +
             " given, " + std::to_string(v.expected) + " needed)");
    }
    o.check(is_pd_set(ab, shifts_ab, information_set(cs), 2).ok, "translation code: translations form a 2-PD-set (exhaustive)");
  }

  {
    const auto def = fixtures::from_orbits(ab, fixtures::frobenius_code_reps());
    const AbelianCode code(def);
    const CheckSet cs = build_gamma(def);
    o.check(code.dimension() == 32, "frobenius code: k = 32");
    o.check(exact_distance(o, code, DistanceMethod::Auto, "frobenius code") == 6, "frobenius code: d = 6");
    o.check(is_pd_set(ab, lambda_ab, information_set(cs), 2).ok, "frobenius code: full group is a 2-PD-set (exhaustive)");
  }
  return o;
}

// --- 9 -------------------------------------------------------------------

Outcome length45_bound() {
  Outcome o;
  for (const Ambient& amb : {fixtures::len45_cyclic_ambient(), fixtures::len45_abelian_ambient()}) {
    SearchConstraints c;
    c.dim_min = 33;
    c.light_weight = 4;
    const SearchReport rep = design_search(amb, c);
    std::size_t light = 0;
    for (const auto& hit : rep.hits) {
      if (!hit.light_word) continue;
      const auto def = defining_set_from_orbits(amb, hit.orbit_reps);
      const AbelianCode code(def);
      const auto w = std::count_if(hit.light_word->begin(), hit.light_word->end(), [](Sym x) { return x != 0; });
      if (w >= 1 && w <= 4 && is_codeword(code, *hit.light_word)) ++light;
    }
    const std::string tag = "Z" + std::to_string(amb.r(0)) + " x Z" + std::to_string(amb.r(1));
    o.check(light == rep.hits.size() && !rep.hits.empty(),
            tag + ": " + std::to_string(light) + "/" + std::to_string(rep.hits.size()) +
                " orbit-union codes with k >= 33 contain a codeword of weight <= 4");
  }
  return o;
}

// --- 10 ------------------------------------------------------------------

Outcome length65() {
  Outcome o;
  const Ambient amb = fixtures::len65_ambient();
  o.check(orbit_mins(amb) == fixtures::len65_orbit_list(), "7 orbits of Z5 x Z13");
  const auto lambda = enumerate_lambda(amb);
  o.check(lambda.size() == 780, "group has 780 elements");
  int idx = 0;
  for (const auto& reps : fixtures::len65_codes()) {
    ++idx;
    const std::string name = "code " + std::to_string(idx);
    const auto def = fixtures::from_orbits(amb, reps);
    const AbelianCode code(def);
    const CheckSet cs = build_gamma(def);
    o.check(code.dimension() == 40, name + ": k = 40");
    o.check(exact_distance(o, code, DistanceMethod::BrouwerZimmermann, name) == 8, name + ": d = 8 (Brouwer-Zimmermann)");
    const auto listed = fixtures::len65_listed_subset();
    o.check(std::includes(cs.positions().begin(), cs.positions().end(), listed.begin(), listed.end()),
            name + ": Gamma contains the 7 listed positions");
    o.check(three_error_lemma_check(cs, 3).holds(), name + ": three-error lemma hypotheses hold");
    const auto pd = is_pd_set(amb, lambda, information_set(cs), 3);
    o.check(pd.ok, name + ": full group is a 3-PD-set over all " + std::to_string(binomial(65, 3)) + " triples (exhaustive)");
  }
  return o;
}

// --- 11 ------------------------------------------------------------------

Outcome decoder() {
  Outcome o;
  const Ambient amb = fixtures::len45_abelian_ambient();
  const auto def = fixtures::from_orbits(amb, fixtures::translation_code_reps());
  const AbelianCode code(def);
  const CheckSet cs = build_gamma(def);
  const PermutationDecoder dec(amb, standard_form_parity(code, cs), enumerate_translations(amb), 2);
  const auto& sf = dec.standard_form();
  std::mt19937_64 rng(kDecodeSeed);
  const std::size_t l = code.length();
  std::size_t patterns = 0;
  std::size_t corrected = 0;
  std::size_t wrong = 0;
  std::size_t failed = 0;
  for (std::size_t w = 0; w < kDecodeCodewords; ++w) {
    std::vector<Sym> info(sf.info_columns.size());
    for (auto& x : info) x = static_cast<Sym>(rng() % 2);
    const Codeword c = encode(sf, info);
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = a; b < l; ++b) {
        Codeword r = c;
        r[a] ^= 1;
        if (b != a) r[b] ^= 1;
        ++patterns;
        const auto res = dec.decode(r);
        if (!res.codeword) {
          ++failed;
        } else if (*res.codeword == c) {
          ++corrected;
        } else {
          ++wrong;
        }
      }
    }
  }
  o.check(patterns == kDecodeCodewords * 1035, std::to_string(patterns) + " error patterns (1035 per codeword)");
  o.check(corrected == patterns, std::to_string(corrected) + " corrected");
  o.check(wrong == 0, std::to_string(wrong) + " miscorrections");
  o.check(failed == 0, std::to_string(failed) + " decoding failures");
  return o;
}

// --- 12 ------------------------------------------------------------------

Outcome lemma_agreement() {
  Outcome o;
  struct Case {
    Ambient amb;
    std::vector<std::string> reps;
    std::string name;
  };
  std::vector<Case> cases;
  int i = 0;
  for (const auto& reps : fixtures::len45_cyclic_codes()) cases.push_back({fixtures::len45_cyclic_ambient(), reps, "cyclic code " + std::to_string(++i)});
  cases.push_back({fixtures::len45_abelian_ambient(), fixtures::translation_code_reps(), "translation code"});
  cases.push_back({fixtures::len45_abelian_ambient(), fixtures::frobenius_code_reps(), "frobenius code"});
  i = 0;
  for (const auto& reps : fixtures::len65_codes()) cases.push_back({fixtures::len65_ambient(), reps, "length-65 code " + std::to_string(++i)});

  std::size_t applicable = 0;
  for (const auto& c : cases) {
    const auto def = fixtures::from_orbits(c.amb, c.reps);
    const CheckSet cs = build_gamma(def);
    const auto lambda = enumerate_lambda(c.amb);
    const auto info = information_set(cs);
    const bool three = c.amb.length() == 65;
    const std::size_t s = three ? 3 : 2;
    const bool holds = three ? three_error_lemma_check(cs, 3).holds() : two_error_lemma_check(cs, 2).holds();
    if (!holds) {
      o.note(c.name + ": lemma hypotheses do not hold, not applicable");
      continue;
    }
    ++applicable;
    const PdResult fast = lemma_fast_path(cs, s);
    const PdResult full = is_pd_set(c.amb, lambda, info, s);
    o.check(fast.ok && full.ok, c.name + ": constructive moves and exhaustive check agree (s = " + std::to_string(s) + ")");
  }
  o.check(applicable == 10, std::to_string(applicable) + " codes where the lemma hypotheses hold");
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "two-variable worked example: parameters and check positions", kQuickSeconds, worked_two_variable},
      {2, "three-variable worked example: nested thresholds and check positions", kQuickSeconds, worked_three_variable},
      {3, "ordering sensitivity of the check positions", kQuickSeconds, ordering_sensitivity},
      {4, "restricted-representative guard", kQuickSeconds, representative_guard},
      {5, "cyclic code through the CRT map", kQuickSeconds, cyclic_transport},
      {6, "randomized check-position suite", kSuiteSeconds, check_positions_suite},
      {7, "dimension equals generator rank over the suite", kSuiteSeconds, dimension_suite},
      {8, "length-45 codes: dimension, distance, check positions, PD-sets", kLength45Seconds, length45},
      {9, "length-45 bound: k >= 33 forces weight <= 4", kLength45Seconds, length45_bound},
      {10, "length-65 codes: distance 8 and 3-PD-sets", kLength65Seconds, length65},
      {11, "permutation decoder on all weight <= 2 errors", kDecodeSeconds, decoder},
      {12, "lemma fast paths agree with exhaustive PD checks", kLength65Seconds, lemma_agreement},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto& c : criteria()) std::printf("%2d  %s\n", c.id, c.title);
      return 0;
    }
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      wanted.insert(std::atoi(argv[++i]));
      continue;
    }
    std::fprintf(stderr, "usage: %s [--list] [--criterion N]...\n", argv[0]);
    return 2;
  }
  int failures = 0;
  for (const auto& c : criteria()) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(secs <= c.budget_seconds, "runtime " + std::to_string(secs) + " s within " + std::to_string(c.budget_seconds) + " s");
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
