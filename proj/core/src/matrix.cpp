#include "abelcode/matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace abelcode {

const char* role_name(MatrixRole role) {
  switch (role) {
    case MatrixRole::Parity:
      return "parity";
    case MatrixRole::Generator:
      return "generator";
    case MatrixRole::StandardParity:
      return "standard-parity";
    case MatrixRole::Plain:
      break;
  }
  return "plain";
}

MatrixGF::MatrixGF(std::shared_ptr<const BaseField> field, std::size_t rows, std::size_t cols, MatrixRole role)
    : field_(std::move(field)), rows_(rows), cols_(cols), role_(role), data_(rows * cols, 0) {
  if (!field_) throw std::invalid_argument("matrix: null field");
}

void MatrixGF::append_row(std::span<const Sym> values) {
  if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

MatrixGF MatrixGF::select_columns(std::span<const std::size_t> cols) const {
  MatrixGF out(field_, rows_, cols.size(), role_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(i, c) = at(i, cols[c]);
  }
  return out;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

std::vector<Sym> MatrixGF::apply(std::span<const Sym> v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
  const BaseField& f = *field_;
  std::vector<Sym> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Sym acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (v[j]) acc = f.add(acc, f.mul(at(i, j), v[j]));
    }
    out[i] = acc;
  }
  return out;
}

std::vector<Sym> MatrixGF::combine_rows(std::span<const Sym> u) const {
  if (u.size() != rows_) throw std::invalid_argument("combine_rows: length mismatch");
  const BaseField& f = *field_;
  std::vector<Sym> out(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!u[i]) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] = f.add(out[j], f.mul(u[i], at(i, j)));
  }
  return out;
}

std::string MatrixGF::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << static_cast<unsigned>(at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

RowReduction row_reduce(const MatrixGF& m, std::span<const std::size_t> column_order) {
  const BaseField& f = m.field();
  MatrixGF a = m;
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  std::vector<bool> listed(m.cols(), false);
  for (auto c : order) {
    if (c >= m.cols() || listed[c]) throw std::invalid_argument("row_reduce: bad column order");
    listed[c] = true;
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!listed[c]) order.push_back(c);
  }

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == a.rows()) break;
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    const Sym inv = f.inv(a.at(r, c));
    if (inv != 1) {
      for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Sym factor = a.at(i, c);
      if (!factor) continue;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.at(r, j)) a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }

  MatrixGF reduced(m.field_ptr(), 0, m.cols(), m.role());
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(a.row(i));
  return {std::move(reduced), std::move(pivots)};
}

namespace {

std::size_t rank_gf2(const MatrixGF& m) {
  const std::size_t words = (m.cols() + 63) / 64;
  std::vector<std::vector<u64>> rows(m.rows(), std::vector<u64>(words, 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(i, j)) rows[i][j / 64] |= u64{1} << (j % 64);
    }
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    const std::size_t w = c / 64;
    const u64 bit = u64{1} << (c % 64);
    std::size_t piv = r;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][w] & bit) {
        for (std::size_t k = w; k < words; ++k) rows[i][k] ^= rows[r][k];
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const MatrixGF& m) {
  if (m.field().q() == 2) return rank_gf2(m);
  return row_reduce(m).pivots.size();
}

MatrixGF null_space(const MatrixGF& m) {
  const BaseField& f = m.field();
  const RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  MatrixGF out(m.field_ptr(), 0, m.cols());
  std::vector<Sym> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = f.neg(rr.reduced.at(i, free));
    out.append_row(v);
  }
  return out;
}

}  // namespace abelcode
