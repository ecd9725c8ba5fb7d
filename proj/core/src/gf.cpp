#include "abelcode/gf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace abelcode {

namespace {

using u32 = std::uint32_t;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // trimmed input

u32 inv_mod(u32 a, u64 p) { return static_cast<u32>(pow_mod(a, p - 2, p)); }

// a mod f over F_p; f trimmed, nonzero.
Poly poly_mod(Poly a, const Poly& f, u64 p) {
  trim(a);
  const int df = deg(f);
  const u32 lead_inv = inv_mod(f.back(), p);
  while (deg(a) >= df) {
    const u64 c = static_cast<u64>(a.back()) * lead_inv % p;
    const int shift = deg(a) - df;
    for (int i = 0; i <= df; ++i) {
      const u64 sub = c * f[i] % p;
      a[shift + i] = static_cast<u32>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + static_cast<u64>(a[i]) * b[j]) % p;
  }
  Poly out(prod.begin(), prod.end());
  return poly_mod(std::move(out), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly digits_of(u64 value, u64 p, unsigned count) {
  Poly out(count, 0);
  for (unsigned i = 0; i < count; ++i) {
    out[i] = static_cast<u32>(value % p);
    value /= p;
  }
  return out;
}

}  // namespace

bool is_irreducible(const Poly& monic, u64 p) {
  Poly f = monic;
  trim(f);
  const int d = deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<u32>((diff[1] + p - 1) % p);
    trim(diff);
    if (diff.empty()) return false;  // x^{p^i} = x mod f: f has a factor of degree | i
    if (deg(poly_gcd(diff, f, p)) > 0) return false;
  }
  return true;
}

Poly lowest_irreducible(u64 p, unsigned degree) {
  if (!is_prime(p)) throw std::invalid_argument("lowest_irreducible: p must be prime");
  if (degree == 0) throw std::invalid_argument("lowest_irreducible: degree must be positive");
  for (u64 enc = 0;; ++enc) {
    Poly f = digits_of(enc, p, degree);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
}

// ---------------------------------------------------------------------------

BaseField::BaseField(u64 q) {
  const auto pp = prime_power(q);
  if (!pp) throw std::invalid_argument("BaseField: q = " + std::to_string(q) + " is not a prime power");
  if (q > 256) throw std::invalid_argument("BaseField: q must be at most 256");
  p_ = static_cast<unsigned>(pp->first);
  s_ = pp->second;
  q_ = static_cast<unsigned>(q);
  modulus_ = lowest_irreducible(p_, s_);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (unsigned a = 0; a < q_; ++a) {
    const Poly da = digits(static_cast<Sym>(a));
    Poly na(s_);
    for (unsigned k = 0; k < s_; ++k) na[k] = (p_ - da[k]) % p_;
    neg_[a] = from_digits(na);
    for (unsigned b = 0; b < q_; ++b) {
      const Poly db = digits(static_cast<Sym>(b));
      Poly sum(s_);
      for (unsigned k = 0; k < s_; ++k) sum[k] = (da[k] + db[k]) % p_;
      add_[a * q_ + b] = from_digits(sum);
      Poly prod = poly_mulmod(da, db, modulus_, p_);
      prod.resize(s_, 0);
      mul_[a * q_ + b] = from_digits(prod);
    }
  }
  for (unsigned a = 1; a < q_; ++a) {
    for (unsigned b = 1; b < q_; ++b) {
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<Sym>(b);
        break;
      }
    }
  }
}

Sym BaseField::inv(Sym a) const {
  if (a == 0) throw std::domain_error("BaseField: inverse of zero");
  return inv_[a];
}

Poly BaseField::digits(Sym a) const { return digits_of(a, p_, s_); }

Sym BaseField::from_digits(std::span<const std::uint32_t> digits) const {
  unsigned code = 0;
  for (std::size_t k = digits.size(); k-- > 0;) code = code * p_ + digits[k];
  return static_cast<Sym>(code);
}

// ---------------------------------------------------------------------------

bool FieldElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c == 0; });
}

FieldContext FieldContext::build(u64 p, unsigned s, unsigned M) {
  if (!is_prime(p)) throw std::invalid_argument("build_context: p = " + std::to_string(p) + " is not prime");
  if (s == 0 || M == 0) throw std::invalid_argument("build_context: s and M must be positive");
  const auto q = checked_pow(p, s);
  if (!q || *q > 256) throw std::invalid_argument("build_context: base field size q = p^s must be at most 256");
  u128 size = 1;
  for (unsigned i = 0; i < s * M; ++i) {
    size *= p;
    if (size > (static_cast<u128>(1) << 64)) {
      throw std::invalid_argument("build_context: field exceeds the 2^64 element size policy");
    }
  }

  FieldContext ctx;
  ctx.p_ = p;
  ctx.s_ = s;
  ctx.M_ = M;
  ctx.group_order_ = static_cast<u64>(size - 1);
  ctx.modulus_ = lowest_irreducible(p, s * M);
  ctx.base_ = std::make_shared<const BaseField>(*q);

  const u64 n = ctx.group_order_;
  const auto factors = prime_factors(n);
  for (u64 enc = 1;; ++enc) {
    FieldElem cand = ctx.from_integer(enc);
    const bool full = std::all_of(factors.begin(), factors.end(), [&](u64 l) { return ctx.pow(cand, n / l) != ctx.one(); });
    if (full) {
      ctx.generator_ = std::move(cand);
      break;
    }
  }

  // theta: the smallest root (0 first, then by discrete log) of the base-field
  // modulus inside F_q, so that x -> theta embeds F_q.
  const FieldElem beta = ctx.pow(ctx.generator_, n / (*q - 1));
  auto eval_base_modulus = [&](const FieldElem& x) {
    FieldElem acc = ctx.zero();
    const Poly& f = ctx.base_->modulus();
    for (std::size_t i = f.size(); i-- > 0;) acc = ctx.add(ctx.mul(acc, x), ctx.scale(ctx.one(), f[i]));
    return acc;
  };
  if (eval_base_modulus(ctx.zero()).is_zero()) {
    ctx.theta_ = ctx.zero();
  } else {
    FieldElem cand = ctx.one();
    for (u64 k = 0; k + 1 < *q; ++k, cand = ctx.mul(cand, beta)) {
      if (eval_base_modulus(cand).is_zero()) {
        ctx.theta_ = cand;
        break;
      }
    }
    if (ctx.theta_.coeffs().empty()) throw std::logic_error("build_context: base modulus has no root in F_q");
  }

  const unsigned D = s * M;
  for (unsigned d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    SubfieldMap map;
    map.d = d;
    map.generator = ctx.subfield_generator(d);
    FieldElem gi = ctx.one();
    for (unsigned i = 0; i < d; ++i, gi = ctx.mul(gi, map.generator)) {
      FieldElem tk = ctx.one();
      for (unsigned k = 0; k < s; ++k, tk = ctx.mul(tk, ctx.theta_)) map.basis.push_back(ctx.mul(tk, gi));
    }
    // Row-reduce [B | I] where column c of B is basis[c]; rows of the identity
    // part at pivot rows give a left inverse of B.
    const unsigned cols = s * d;
    std::vector<std::vector<u32>> rows(D, std::vector<u32>(cols + D, 0));
    for (unsigned r = 0; r < D; ++r) {
      for (unsigned c = 0; c < cols; ++c) rows[r][c] = map.basis[c].coeffs()[r];
      rows[r][cols + r] = 1;
    }
    std::vector<unsigned> pivot_row(cols);
    unsigned next = 0;
    for (unsigned c = 0; c < cols; ++c) {
      unsigned piv = next;
      while (piv < D && rows[piv][c] == 0) ++piv;
      if (piv == D) throw std::logic_error("build_context: subfield basis is not independent");
      std::swap(rows[piv], rows[next]);
      const u64 inv = inv_mod(rows[next][c], p);
      for (auto& v : rows[next]) v = static_cast<u32>(v * inv % p);
      for (unsigned r = 0; r < D; ++r) {
        if (r == next || rows[r][c] == 0) continue;
        const u64 factor = rows[r][c];
        for (unsigned t = 0; t < cols + D; ++t) {
          rows[r][t] = static_cast<u32>((rows[r][t] + (p - factor) * rows[next][t]) % p);
        }
      }
      pivot_row[c] = next++;
    }
    map.left_inverse.resize(cols);
    for (unsigned c = 0; c < cols; ++c) {
      map.left_inverse[c].assign(rows[pivot_row[c]].begin() + cols, rows[pivot_row[c]].end());
    }
    ctx.subfields_.push_back(std::move(map));
  }
  return ctx;
}

FieldElem FieldContext::zero() const { return FieldElem(Poly(degree(), 0)); }

FieldElem FieldContext::one() const {
  Poly c(degree(), 0);
  c[0] = 1;
  return FieldElem(std::move(c));
}

FieldElem FieldContext::from_integer(u64 encoding) const {
  Poly c = digits_of(encoding, p_, degree());
  u64 rest = encoding;
  for (unsigned i = 0; i < degree(); ++i) rest /= p_;
  if (rest != 0) throw std::invalid_argument("FieldContext::from_integer: encoding out of range");
  return FieldElem(std::move(c));
}

void FieldContext::check(const FieldElem& a) const {
  if (a.coeffs().size() != degree()) throw std::invalid_argument("field element does not belong to this context");
  for (auto c : a.coeffs()) {
    if (c >= p_) throw std::invalid_argument("field element coefficient out of range");
  }
}

FieldElem FieldContext::add(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  Poly c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = static_cast<u32>((a.coeffs()[i] + b.coeffs()[i]) % p_);
  return FieldElem(std::move(c));
}

FieldElem FieldContext::neg(const FieldElem& a) const {
  check(a);
  Poly c(degree());
  for (unsigned i = 0; i < degree(); ++i) c[i] = static_cast<u32>((p_ - a.coeffs()[i]) % p_);
  return FieldElem(std::move(c));
}

FieldElem FieldContext::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FieldContext::scale(const FieldElem& a, std::uint32_t c) const {
  check(a);
  Poly out(degree());
  for (unsigned i = 0; i < degree(); ++i) out[i] = static_cast<u32>(static_cast<u64>(a.coeffs()[i]) * c % p_);
  return FieldElem(std::move(out));
}

FieldElem FieldContext::mul(const FieldElem& a, const FieldElem& b) const {
  check(a);
  check(b);
  const unsigned D = degree();
  std::array<u64, 128> prod{};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  for (unsigned i = 0; i < D; ++i) {
    if (ac[i] == 0) continue;
    for (unsigned j = 0; j < D; ++j) prod[i + j] += static_cast<u64>(ac[i]) * bc[j];
  }
  // Reduce by the monic modulus from the top down.
  for (unsigned k = 2 * D - 1; k-- > D;) {
    const u64 c = prod[k] % p_;
    prod[k] = 0;
    if (c == 0) continue;
    for (unsigned t = 0; t < D; ++t) prod[k - D + t] += c * ((p_ - modulus_[t]) % p_);
  }
  Poly out(D);
  for (unsigned i = 0; i < D; ++i) out[i] = static_cast<u32>(prod[i] % p_);
  return FieldElem(std::move(out));
}

FieldElem FieldContext::pow(const FieldElem& a, u64 e) const {
  check(a);
  if (a.is_zero()) return e == 0 ? one() : zero();
  e %= group_order_;
  FieldElem result = one();
  FieldElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem FieldContext::inverse(const FieldElem& a) const {
  if (a.is_zero()) throw std::domain_error("FieldContext: inverse of zero");
  return pow(a, group_order_ - 1);
}

FieldElem FieldContext::frobenius(const FieldElem& a) const { return pow(a, q()); }

FieldElem FieldContext::root_of_unity(u64 r) const {
  if (r == 0 || group_order_ % r != 0) {
    throw std::invalid_argument("root_of_unity: " + std::to_string(r) + " does not divide " + std::to_string(group_order_));
  }
  return pow(generator_, group_order_ / r);
}

u64 FieldContext::subfield_order(unsigned d) const {
  if (d == 0 || M_ % d != 0) throw std::invalid_argument("subfield degree must divide M");
  return d == M_ ? group_order_ : *checked_pow(q(), d) - 1;
}

FieldElem FieldContext::subfield_generator(unsigned d) const {
  if (d == 0 || M_ % d != 0) throw std::invalid_argument("subfield degree must divide M");
  return pow(generator_, group_order_ / subfield_order(d));
}

bool FieldContext::in_subfield(const FieldElem& a, unsigned d) const {
  if (d == 0 || M_ % d != 0) throw std::invalid_argument("subfield degree must divide M");
  check(a);
  if (d == M_ || a.is_zero()) return true;
  return pow(a, pow_mod(q(), d, group_order_)) == a;
}

const FieldContext::SubfieldMap& FieldContext::subfield(unsigned d) const {
  for (const auto& m : subfields_) {
    if (m.d == d) return m;
  }
  throw std::invalid_argument("subfield degree " + std::to_string(d) + " does not divide M = " + std::to_string(M_));
}

std::vector<Sym> FieldContext::subfield_coords(const FieldElem& a, unsigned d, u64 basis_offset) const {
  check(a);
  const SubfieldMap& map = subfield(d);
  FieldElem x = a;
  if (basis_offset != 0) {
    const u64 sub_order = subfield_order(d);
    x = mul(x, pow(map.generator, sub_order - basis_offset % sub_order));
  }
  const unsigned cols = s_ * d;
  Poly c(cols, 0);
  for (unsigned i = 0; i < cols; ++i) {
    u64 acc = 0;
    for (unsigned r = 0; r < degree(); ++r) acc += static_cast<u64>(map.left_inverse[i][r]) * x.coeffs()[r];
    c[i] = static_cast<std::uint32_t>(acc % p_);
  }
  FieldElem back = zero();
  for (unsigned i = 0; i < cols; ++i) {
    if (c[i] != 0) back = add(back, scale(map.basis[i], c[i]));
  }
  if (back != x) throw std::invalid_argument("subfield_coords: element does not lie in F_{q^" + std::to_string(d) + "}");
  std::vector<Sym> out(d);
  for (unsigned i = 0; i < d; ++i) {
    out[i] = base_->from_digits(std::span<const std::uint32_t>(c.data() + i * s_, s_));
  }
  return out;
}

FieldElem FieldContext::embed(Sym a) const {
  const Poly dg = base_->digits(a);
  FieldElem acc = zero();
  FieldElem tk = one();
  for (unsigned k = 0; k < s_; ++k, tk = mul(tk, theta_)) {
    if (dg[k] != 0) acc = add(acc, scale(tk, dg[k]));
  }
  return acc;
}

}  // namespace abelcode
