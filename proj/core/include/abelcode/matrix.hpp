#pragma once

// Dense matrices over a base field F_q with Gauss-Jordan elimination.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "abelcode/gf.hpp"

namespace abelcode {

enum class MatrixRole { Plain, Parity, Generator, StandardParity };

const char* role_name(MatrixRole role);

class MatrixGF {
 public:
  MatrixGF(std::shared_ptr<const BaseField> field, std::size_t rows, std::size_t cols,
           MatrixRole role = MatrixRole::Plain);

  const BaseField& field() const { return *field_; }
  std::shared_ptr<const BaseField> field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MatrixRole role() const { return role_; }
  void set_role(MatrixRole role) { role_ = role; }

  Sym at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Sym& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::span<const Sym> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<Sym> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Sym> values);
  MatrixGF select_columns(std::span<const std::size_t> cols) const;
  MatrixGF transpose() const;

  /// M v for a column vector v of length cols().
  std::vector<Sym> apply(std::span<const Sym> v) const;
  /// u M for a row vector u of length rows().
  std::vector<Sym> combine_rows(std::span<const Sym> u) const;

  /// One row per line, entries as integers 0..q-1 separated by spaces.
  std::string to_text() const;

  friend bool operator==(const MatrixGF& a, const MatrixGF& b) {
    return a.field_->q() == b.field_->q() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::shared_ptr<const BaseField> field_;
  std::size_t rows_;
  std::size_t cols_;
  MatrixRole role_;
  std::vector<Sym> data_;
};

struct RowReduction {
  /// Reduced row echelon form with zero rows removed; row i has a 1 at pivots[i].
  MatrixGF reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination. Columns are considered in column_order first (if
/// given) and then in natural order.
RowReduction row_reduce(const MatrixGF& m, std::span<const std::size_t> column_order = {});

/// Rank; uses bit-packed rows when q = 2.
std::size_t rank(const MatrixGF& m);

/// Basis of {x : M x = 0}, one vector per row.
MatrixGF null_space(const MatrixGF& m);

}  // namespace abelcode
