#include "abelcode/code.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace abelcode {

namespace {

std::shared_ptr<const FieldContext> make_field(const Ambient& amb) {
  const auto pp = prime_power(amb.q());
  if (!pp) throw std::invalid_argument("q = " + std::to_string(amb.q()) + " is not a prime power");
  u64 M = 1;
  for (auto r : amb.r()) M = std::lcm(M, multiplicative_order(amb.q(), r));
  if (M > 64) throw std::invalid_argument("extension degree " + std::to_string(M) + " exceeds the size policy");
  return std::make_shared<const FieldContext>(FieldContext::build(pp->first, pp->second, static_cast<unsigned>(M)));
}

}  // namespace

AbelianCode::AbelianCode(DefiningSet def) : def_(std::move(def)), ctx_(make_field(def_.ambient())) {
  for (auto r : ambient().r()) lcm_r_ = std::lcm(lcm_r_, static_cast<u64>(r));
  const FieldElem zeta = ctx_->root_of_unity(lcm_r_);
  zeta_powers_.reserve(lcm_r_);
  FieldElem x = ctx_->one();
  for (u64 k = 0; k < lcm_r_; ++k) {
    zeta_powers_.push_back(x);
    x = ctx_->mul(x, zeta);
  }
}

u64 AbelianCode::exponent(const Index& e, const Index& j) const {
  u64 k = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const u64 scale = lcm_r_ / ambient().r(i);
    k = (k + mul_mod(static_cast<u64>(e[i]) * j[i] % ambient().r(i), scale, lcm_r_)) % lcm_r_;
  }
  return k;
}

FieldElem AbelianCode::alpha_power(const Index& e, const Index& j) const {
  ambient().check(e);
  ambient().check(j);
  return zeta_powers_[exponent(e, j)];
}

FieldElem AbelianCode::root(std::size_t i) const {
  if (i >= ambient().n()) throw std::out_of_range("root: axis out of range");
  return zeta_powers_[lcm_r_ / ambient().r(i) % lcm_r_];
}

FieldElem AbelianCode::evaluate(std::span<const Sym> word, const Index& e) const {
  if (word.size() != length()) throw std::invalid_argument("evaluate: word length mismatch");
  FieldElem acc = ctx_->zero();
  for (u64 pos = 0; pos < length(); ++pos) {
    if (!word[pos]) continue;
    acc = ctx_->add(acc, ctx_->mul(ctx_->embed(word[pos]), alpha_power(e, ambient().unlinear(pos))));
  }
  return acc;
}

std::size_t CheckTensor::height() const { return std::accumulate(block_lengths.begin(), block_lengths.end(), std::size_t{0}); }

CheckTensor check_tensor(const AbelianCode& code, std::span<const Index> reps, u64 basis_offset) {
  const Ambient& amb = code.ambient();
  const FieldContext& ctx = code.field();
  CheckTensor t;
  t.reps.assign(reps.begin(), reps.end());
  t.columns.assign(amb.length(), {});
  const auto positions = amb.all_indices();
  for (const auto& e : reps) {
    const auto d = static_cast<unsigned>(qorbit(amb, e).size());
    t.block_lengths.push_back(d);
    std::map<FieldElem, std::vector<Sym>> cache;
    for (u64 pos = 0; pos < amb.length(); ++pos) {
      const FieldElem a = code.alpha_power(e, positions[pos]);
      auto it = cache.find(a);
      if (it == cache.end()) it = cache.emplace(a, ctx.subfield_coords(a, d, basis_offset)).first;
      t.columns[pos].insert(t.columns[pos].end(), it->second.begin(), it->second.end());
    }
  }
  return t;
}

MatrixGF parity_matrix(const AbelianCode& code, const CheckTensor& tensor) {
  const std::size_t rows = tensor.height();
  MatrixGF h(code.base_field_ptr(), rows, code.length(), MatrixRole::Parity);
  for (std::size_t j = 0; j < tensor.columns.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) h.at(i, j) = tensor.columns[j][i];
  }
  return h;
}

MatrixGF parity_matrix(const AbelianCode& code, u64 basis_offset) {
  const auto reps = restricted_reps(code.defining_set(), identity_ordering(code.ambient().n())).original_reps();
  return parity_matrix(code, check_tensor(code, reps, basis_offset));
}

MatrixGF generator_matrix(const AbelianCode& code) {
  MatrixGF g = null_space(parity_matrix(code));
  g.set_role(MatrixRole::Generator);
  return g;
}

bool is_codeword(const AbelianCode& code, std::span<const Sym> word) {
  const auto s = parity_matrix(code).apply(word);
  return std::all_of(s.begin(), s.end(), [](Sym x) { return x == 0; });
}

const char* status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::Verified:
      return "verified";
    case VerifyStatus::CardinalityMismatch:
      return "cardinality-mismatch";
    case VerifyStatus::Dependent:
      return "dependent";
  }
  return "unknown";
}

VerifyResult verify_check_positions(const AbelianCode& code, std::span<const Index> positions, u64 basis_offset) {
  VerifyResult res;
  res.expected = code.defining_set().size();
  res.given = positions.size();
  if (res.given != res.expected) {
    res.status = VerifyStatus::CardinalityMismatch;
    return res;
  }
  std::vector<std::size_t> cols;
  for (const auto& a : positions) {
    code.ambient().check(a);
    cols.push_back(code.ambient().linear(a));
  }
  const MatrixGF sub = parity_matrix(code, basis_offset).select_columns(cols);
  const RowReduction rr = row_reduce(sub);
  for (auto c : rr.pivots) res.pivots.push_back(positions[c]);
  if (rr.pivots.size() == cols.size()) return res;

  res.status = VerifyStatus::Dependent;
  const MatrixGF kernel = null_space(sub);
  for (std::size_t c = 0; c < kernel.cols(); ++c) {
    if (kernel.at(0, c)) res.witness.emplace_back(positions[c], kernel.at(0, c));
  }
  return res;
}

VerifyResult verify_check_positions(const AbelianCode& code, const CheckSet& cs, u64 basis_offset) {
  return verify_check_positions(code, cs.positions(), basis_offset);
}

StandardForm standard_form_parity(const AbelianCode& code, std::span<const Index> check_positions) {
  std::vector<std::size_t> check;
  for (const auto& a : check_positions) {
    code.ambient().check(a);
    check.push_back(code.ambient().linear(a));
  }
  RowReduction rr = row_reduce(parity_matrix(code), check);
  if (rr.pivots != check) throw std::logic_error("standard form: positions are not a set of check positions");
  StandardForm sf{std::move(rr.reduced), std::move(check), {}};
  sf.h.set_role(MatrixRole::StandardParity);
  std::vector<bool> is_check(code.length(), false);
  for (auto c : sf.check_columns) is_check[c] = true;
  for (std::size_t c = 0; c < code.length(); ++c) {
    if (!is_check[c]) sf.info_columns.push_back(c);
  }
  return sf;
}

StandardForm standard_form_parity(const AbelianCode& code, const CheckSet& cs) {
  return standard_form_parity(code, cs.positions());
}

Codeword encode(const StandardForm& sf, std::span<const Sym> info_values) {
  if (info_values.size() != sf.info_columns.size()) throw std::invalid_argument("encode: expected one value per information position");
  const BaseField& f = sf.h.field();
  Codeword c(sf.h.cols(), 0);
  for (std::size_t t = 0; t < info_values.size(); ++t) {
    if (info_values[t] >= f.q()) throw std::invalid_argument("encode: symbol out of range");
    c[sf.info_columns[t]] = info_values[t];
  }
  for (std::size_t i = 0; i < sf.check_columns.size(); ++i) {
    Sym acc = 0;
    for (auto j : sf.info_columns) {
      if (c[j]) acc = f.add(acc, f.mul(sf.h.at(i, j), c[j]));
    }
    c[sf.check_columns[i]] = f.neg(acc);
  }
  return c;
}

}  // namespace abelcode
