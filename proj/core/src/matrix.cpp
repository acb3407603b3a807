#include "lrclab/matrix.hpp"

#include <algorithm>
#include <string>

#include "lrclab/error.hpp"

namespace lrclab {

GFMatrix::GFMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

GFMatrix::GFMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) fail(Errc::DimensionMismatch, "entry count does not match rows*cols");
  for (auto e : data_)
    if (!field_.contains(e)) fail(Errc::RangeError, "matrix entry outside field");
}

GFMatrix GFMatrix::from_values(FieldSpec field, std::size_t rows, std::size_t cols,
                               const std::vector<std::uint32_t>& values) {
  if (values.size() != rows * cols) fail(Errc::DimensionMismatch, "value count does not match rows*cols");
  std::vector<FieldElement> e;
  e.reserve(values.size());
  for (auto v : values) e.push_back(field.element(v));
  return GFMatrix(std::move(field), rows, cols, std::move(e));
}

GFMatrix GFMatrix::identity(FieldSpec field, std::size_t size) {
  GFMatrix m(std::move(field), size, size);
  for (std::size_t i = 0; i < size; ++i) m.set(i, i, FieldElement{1});
  return m;
}

std::vector<FieldElement> GFMatrix::column(std::size_t c) const {
  std::vector<FieldElement> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

bool GFMatrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

GFMatrix GFMatrix::transpose() const {
  GFMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

GFMatrix GFMatrix::operator*(const GFMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::DimensionMismatch, "matrix product shape mismatch");
  GFMatrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement a = at(r, k);
      if (!a.is_zero()) axpy(field_, out.row(r), a, rhs.row(k));
    }
  return out;
}

GFMatrix GFMatrix::mul_transpose(const GFMatrix& rhs) const {
  if (cols_ != rhs.cols_) fail(Errc::DimensionMismatch, "A * B^T requires equal column counts");
  GFMatrix out(field_, rows_, rhs.rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < rhs.rows_; ++j) out.set(i, j, dot(field_, row(i), rhs.row(j)));
  return out;
}

GFMatrix GFMatrix::select_columns(std::span<const std::size_t> cols) const {
  GFMatrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(r, j, at(r, cols[j]));
  return out;
}

GFMatrix GFMatrix::select_rows(std::span<const std::size_t> rows) const {
  GFMatrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) std::copy_n(row(rows[i]).begin(), cols_, out.row(i).begin());
  return out;
}

GFMatrix GFMatrix::stack(const GFMatrix& below) const {
  if (below.rows_ > 0 && rows_ > 0 && below.cols_ != cols_) fail(Errc::DimensionMismatch, "stack needs equal widths");
  const std::size_t width = rows_ > 0 ? cols_ : below.cols_;
  GFMatrix out(field_, rows_ + below.rows_, width);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

void GFMatrix::append_row(std::span<const FieldElement> r) {
  if (r.size() != cols_) fail(Errc::DimensionMismatch, "row width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool operator==(const GFMatrix& a, const GFMatrix& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

FieldElement dot(const FieldSpec& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  FieldElement acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

void axpy(const FieldSpec& f, std::span<FieldElement> dst, FieldElement c, std::span<const FieldElement> src) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (!src[i].is_zero()) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

std::size_t weight(std::span<const FieldElement> v) noexcept {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElement e) { return !e.is_zero(); }));
}

EchelonForm rref(const GFMatrix& input) {
  const FieldSpec& f = input.field();
  GFMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != lead) std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(lead).begin());
    const FieldElement inv = f.inv(m.at(lead, c));
    for (auto& e : m.row(lead)) e = f.mul(e, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const FieldElement factor = m.at(r, c);
      if (!factor.is_zero()) axpy(f, m.row(r), f.neg(factor), m.row(lead));
    }
    pivots.push_back(c);
    ++lead;
  }
  std::vector<std::size_t> keep(pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return EchelonForm{m.select_rows(keep), std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) { return rref(m).rank(); }

GFMatrix kernel_basis(const GFMatrix& m) {
  const FieldSpec& f = m.field();
  const EchelonForm ef = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ef.pivots) is_pivot[p] = true;
  GFMatrix basis(f, 0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(n);
    v[free] = FieldElement{1};
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = f.neg(ef.matrix.at(i, free));
    basis.append_row(v);
  }
  return basis;
}

bool in_row_space(const EchelonForm& ef, std::span<const FieldElement> v) {
  const FieldSpec& f = ef.matrix.field();
  std::vector<FieldElement> rem(v.begin(), v.end());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i) {
    const FieldElement c = rem[ef.pivots[i]];
    if (!c.is_zero()) axpy(f, rem, f.neg(c), ef.matrix.row(i));
  }
  return weight(rem) == 0;
}

}  // namespace lrclab
