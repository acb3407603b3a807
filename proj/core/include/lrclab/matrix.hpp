#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrclab/field.hpp"

namespace lrclab {

/// Dense row-major matrix over GF(q).
class GFMatrix {
 public:
  GFMatrix(FieldSpec field, std::size_t rows, std::size_t cols);
  GFMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);
  /// Convenience for tests and fixtures; values are validated against the field.
  static GFMatrix from_values(FieldSpec field, std::size_t rows, std::size_t cols,
                              const std::vector<std::uint32_t>& values);
  static GFMatrix identity(FieldSpec field, std::size_t size);

  [[nodiscard]] const FieldSpec& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  [[nodiscard]] FieldElement at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, FieldElement v) noexcept { data_[r * cols_ + c] = v; }
  [[nodiscard]] std::span<const FieldElement> row(std::size_t r) const noexcept {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<FieldElement> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] const std::vector<FieldElement>& entries() const noexcept { return data_; }
  [[nodiscard]] std::vector<FieldElement> column(std::size_t c) const;

  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] GFMatrix transpose() const;
  [[nodiscard]] GFMatrix operator*(const GFMatrix& rhs) const;
  /// this * rhs^T, the natural product for checking G * H^T = 0.
  [[nodiscard]] GFMatrix mul_transpose(const GFMatrix& rhs) const;

  [[nodiscard]] GFMatrix select_columns(std::span<const std::size_t> cols) const;
  [[nodiscard]] GFMatrix select_rows(std::span<const std::size_t> rows) const;
  [[nodiscard]] GFMatrix stack(const GFMatrix& below) const;
  void append_row(std::span<const FieldElement> r);

  friend bool operator==(const GFMatrix& a, const GFMatrix& b) noexcept;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

struct EchelonForm {
  GFMatrix matrix;                  // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per row
  [[nodiscard]] std::size_t rank() const noexcept { return pivots.size(); }
};

/// Canonical reduced row echelon form (leading ones, zero rows removed).
[[nodiscard]] EchelonForm rref(const GFMatrix& m);
[[nodiscard]] std::size_t rank(const GFMatrix& m);
/// Basis (as rows) of { x : m x^T = 0 }, derived from the RREF; rows = cols - rank.
[[nodiscard]] GFMatrix kernel_basis(const GFMatrix& m);
/// Whether the row space of `m` contains vector `v`.
[[nodiscard]] bool in_row_space(const EchelonForm& ef, std::span<const FieldElement> v);

/// Dot product over the field.
[[nodiscard]] FieldElement dot(const FieldSpec& f, std::span<const FieldElement> a, std::span<const FieldElement> b);
/// dst += c * src
void axpy(const FieldSpec& f, std::span<FieldElement> dst, FieldElement c, std::span<const FieldElement> src);
[[nodiscard]] std::size_t weight(std::span<const FieldElement> v) noexcept;

}  // namespace lrclab
