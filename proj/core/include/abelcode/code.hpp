#pragma once

// Abelian codes in F_q[X_1..X_n]/(X_i^{r_i} - 1) given by a defining set:
// check tensor, parity and generator matrices, check-position verification and
// systematic encoding.
//
// Positions are vectorized in lexicographic order (Ambient::linear).

#include <memory>
#include <optional>
#include <vector>

#include "abelcode/gamma.hpp"
#include "abelcode/gf.hpp"
#include "abelcode/matrix.hpp"
#include "abelcode/orbit.hpp"

namespace abelcode {

using Codeword = std::vector<Sym>;

class AbelianCode {
 public:
  /// Builds F_{q^M} with M = lcm of ord_{r_i}(q). Throws if q is not a prime
  /// power <= 256 or the field exceeds the size policy.
  explicit AbelianCode(DefiningSet def);

  const Ambient& ambient() const { return def_.ambient(); }
  const DefiningSet& defining_set() const { return def_; }
  const FieldContext& field() const { return *ctx_; }
  const BaseField& base_field() const { return ctx_->base_field(); }
  std::shared_ptr<const BaseField> base_field_ptr() const { return ctx_->base_field_ptr(); }

  u64 length() const { return ambient().length(); }
  /// l - |D(C)|.
  u64 dimension() const { return length() - def_.size(); }

  /// alpha^{e.j} = alpha_1^{e_1 j_1} ... alpha_n^{e_n j_n}.
  FieldElem alpha_power(const Index& e, const Index& j) const;
  /// The fixed primitive r_i-th root of unity alpha_i.
  FieldElem root(std::size_t i) const;

  /// sum_j c_j alpha^{e.j} in F_{q^M}.
  FieldElem evaluate(std::span<const Sym> word, const Index& e) const;

 private:
  u64 exponent(const Index& e, const Index& j) const;

  DefiningSet def_;
  std::shared_ptr<const FieldContext> ctx_;
  u64 lcm_r_ = 1;
  std::vector<FieldElem> zeta_powers_;  // zeta^k for a primitive lcm(r)-th root zeta
};

/// Concatenated F_q coordinate vectors h_j, one per position.
struct CheckTensor {
  std::vector<Index> reps;                 // original coordinates
  std::vector<std::size_t> block_lengths;  // |Q(e)| per representative
  std::vector<std::vector<Sym>> columns;   // h_j indexed by linear position

  std::size_t height() const;
};

/// With basis_offset != 0, each block uses the alternative basis
/// {g^o, ..., g^{o+d-1}} of the subfield.
CheckTensor check_tensor(const AbelianCode& code, std::span<const Index> reps, u64 basis_offset = 0);

/// |D(C)| x l matrix whose columns are the h_j for the canonical representatives.
MatrixGF parity_matrix(const AbelianCode& code, u64 basis_offset = 0);
MatrixGF parity_matrix(const AbelianCode& code, const CheckTensor& tensor);

/// k x l basis of the null space of the parity matrix.
MatrixGF generator_matrix(const AbelianCode& code);

bool is_codeword(const AbelianCode& code, std::span<const Sym> word);

enum class VerifyStatus { Verified, CardinalityMismatch, Dependent };

struct VerifyResult {
  VerifyStatus status = VerifyStatus::Verified;
  std::size_t expected = 0;  // |D(C)|
  std::size_t given = 0;     // number of candidate positions
  /// Candidate positions whose columns were pivots.
  std::vector<Index> pivots;
  /// For Dependent: positions and nonzero coefficients of a vanishing combination of their h_j.
  std::vector<std::pair<Index, Sym>> witness;

  bool ok() const { return status == VerifyStatus::Verified; }
};

const char* status_name(VerifyStatus status);

/// Independence of {h_j : j in positions} together with |positions| = |D(C)|.
VerifyResult verify_check_positions(const AbelianCode& code, std::span<const Index> positions, u64 basis_offset = 0);
VerifyResult verify_check_positions(const AbelianCode& code, const CheckSet& cs, u64 basis_offset = 0);

/// Parity matrix whose columns at the check positions form an identity block:
/// row i has its 1 at check_columns[i].
struct StandardForm {
  MatrixGF h;
  std::vector<std::size_t> check_columns;  // linear positions, in row order
  std::vector<std::size_t> info_columns;   // linear positions, increasing

  std::vector<Sym> syndrome(std::span<const Sym> word) const { return h.apply(word); }
};

/// Throws std::logic_error if the positions are not check positions.
StandardForm standard_form_parity(const AbelianCode& code, std::span<const Index> check_positions);
StandardForm standard_form_parity(const AbelianCode& code, const CheckSet& cs);

/// Unique codeword taking the given values on info_columns (in that order).
Codeword encode(const StandardForm& sf, std::span<const Sym> info_values);

}  // namespace abelcode
