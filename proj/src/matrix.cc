// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vonstaudt/matrix.h"

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vonstaudt/error.h"

namespace vonstaudt {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, Scalar::Zero(field_)) {}

Matrix Matrix::Identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  Scalar one = Scalar::One(field);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = one;
  return m;
}

Matrix Matrix::FromIntegers(const FieldSpec& field,
                            const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size(), nc = nr == 0 ? 0 : rows[0].size();
  Matrix m(field, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    if (rows[r].size() != nc) throw InvalidArgument("ragged integer matrix");
    for (std::size_t c = 0; c < nc; ++c) {
      m.entries_[r * nc + c] = Scalar::FromInteger(field, rows[r][c]);
    }
  }
  return m;
}

Matrix Matrix::FromEntries(const FieldSpec& field, std::size_t rows,
                           std::size_t cols, std::vector<Scalar> entries) {
  if (entries.size() != rows * cols) {
    throw InvalidArgument("matrix entry count does not match its shape");
  }
  for (const auto& e : entries) {
    if (!e.BelongsTo(field)) {
      throw InvalidArgument("matrix entry outside field " + field.ToString());
    }
  }
  Matrix m(field, 0, 0);
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_ = std::move(entries);
  return m;
}

void Matrix::Set(std::size_t r, std::size_t c, Scalar v) {
  if (!v.BelongsTo(field_)) {
    throw InvalidArgument("matrix entry outside field " + field_.ToString());
  }
  entries_.at(r * cols_ + c) = std::move(v);
}

void Matrix::CheckSameShape(const Matrix& o, const char* op) const {
  if (field_ != o.field_) {
    throw InvalidArgument(std::string(op) + ": matrices over different fields");
  }
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw InvalidArgument(std::string(op) + ": matrix size mismatch");
  }
}

Matrix Matrix::operator+(const Matrix& o) const {
  CheckSameShape(o, "add");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] += o.entries_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  CheckSameShape(o, "subtract");
  Matrix r = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] -= o.entries_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) {
    throw InvalidArgument("multiply: matrices over different fields");
  }
  if (cols_ != o.rows_) throw InvalidArgument("multiply: matrix size mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = entries_[i * cols_ + k];
      if (a.IsZero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.entries_[k * o.cols_ + j];
        if (b.IsZero()) continue;
        r.entries_[i * o.cols_ + j] += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::Scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& e : r.entries_) e = e * s;
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         entries_ == o.entries_;
}

bool Matrix::IsZero() const {
  for (const auto& e : entries_) {
    if (!e.IsZero()) return false;
  }
  return true;
}

bool Matrix::IsIdentity() const {
  if (!IsSquare()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (r == c ? !e.IsOne() : !e.IsZero()) return false;
    }
  }
  return true;
}

Scalar Matrix::Trace() const {
  if (!IsSquare()) throw InvalidArgument("trace of a non-square matrix");
  Scalar t = Scalar::Zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::Transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      r.entries_[j * rows_ + i] = entries_[i * cols_ + j];
    }
  }
  return r;
}

Matrix Matrix::Sub(std::size_t row, std::size_t col, std::size_t nrows,
                   std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) {
    throw InvalidArgument("submatrix out of range");
  }
  Matrix r(field_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) {
      r.entries_[i * ncols + j] = entries_[(row + i) * cols_ + col + j];
    }
  }
  return r;
}

void Matrix::SetSub(std::size_t row, std::size_t col, const Matrix& m) {
  if (m.field_ != field_) throw InvalidArgument("SetSub: field mismatch");
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_) {
    throw InvalidArgument("SetSub: block out of range");
  }
  for (std::size_t i = 0; i < m.rows_; ++i) {
    for (std::size_t j = 0; j < m.cols_; ++j) {
      entries_[(row + i) * cols_ + col + j] = m.entries_[i * m.cols_ + j];
    }
  }
}

Matrix Matrix::SelectColumns(const std::vector<std::size_t>& cols) const {
  Matrix r(field_, rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw InvalidArgument("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) {
      r.entries_[i * cols.size() + j] = entries_[i * cols_ + cols[j]];
    }
  }
  return r;
}

Matrix Matrix::SelectRows(const std::vector<std::size_t>& rows) const {
  Matrix r(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= rows_) throw InvalidArgument("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) {
      r.entries_[i * cols_ + j] = entries_[rows[i] * cols_ + j];
    }
  }
  return r;
}

Matrix Matrix::HStack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw InvalidArgument("HStack of nothing");
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows_ != parts[0].rows_) throw InvalidArgument("HStack: row mismatch");
    total += p.cols_;
  }
  Matrix r(parts[0].field_, parts[0].rows_, total);
  std::size_t at = 0;
  for (const auto& p : parts) {
    r.SetSub(0, at, p);
    at += p.cols_;
  }
  return r;
}

Matrix Matrix::VStack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw InvalidArgument("VStack of nothing");
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.cols_ != parts[0].cols_) throw InvalidArgument("VStack: column mismatch");
    total += p.rows_;
  }
  Matrix r(parts[0].field_, total, parts[0].cols_);
  std::size_t at = 0;
  for (const auto& p : parts) {
    r.SetSub(at, 0, p);
    at += p.rows_;
  }
  return r;
}

std::string Matrix::ToString() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).ToString(field_);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- rank

namespace {

std::size_t RankModP(const Matrix& m) {
  const std::uint32_t p = m.field().characteristic();
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::uint32_t> a(nr * nc);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.entries()[i].mod_p().v;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && a[piv * nc + c] == 0) ++piv;
    if (piv == nr) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(a[piv * nc + j], a[rank * nc + j]);
    }
    std::uint32_t inv = ModInv(a[rank * nc + c], p);
    for (std::size_t i = rank + 1; i < nr; ++i) {
      std::uint32_t f = ModMul(a[i * nc + c], inv, p);
      if (f == 0) continue;
      for (std::size_t j = c; j < nc; ++j) {
        a[i * nc + j] = ModSub(a[i * nc + j], ModMul(f, a[rank * nc + j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t RankByElimination(const Matrix& m) {
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<Scalar> a = m.entries();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && a[piv * nc + c].IsZero()) ++piv;
    if (piv == nr) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(a[piv * nc + j], a[rank * nc + j]);
    }
    Scalar inv = a[rank * nc + c].Inverse();
    for (std::size_t i = rank + 1; i < nr; ++i) {
      if (a[i * nc + c].IsZero()) continue;
      Scalar f = a[i * nc + c] * inv;
      for (std::size_t j = c; j < nc; ++j) {
        a[i * nc + j] -= f * a[rank * nc + j];
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t RankFractionFree(const Matrix& m) {
  if (m.field().kind() != FieldKind::kRationalFunctions) {
    throw InvalidArgument("fraction-free rank needs a rational-function field");
  }
  const std::uint32_t p = m.field().characteristic();
  std::size_t nr = m.rows(), nc = m.cols();
  std::vector<BiPoly> a;
  a.reserve(nr * nc);
  // Scale each row by the lcm of its denominators; rank is unchanged.
  for (std::size_t i = 0; i < nr; ++i) {
    BiPoly lcm = BiPoly::Constant(p, 1);
    for (std::size_t j = 0; j < nc; ++j) {
      const RatFunc& f = m(i, j).ratfunc();
      if (f.IsPolynomial()) continue;
      BiPoly g = BiPoly::Gcd(lcm, f.den());
      lcm = lcm * f.den().DivideExact(g);
    }
    for (std::size_t j = 0; j < nc; ++j) {
      const RatFunc& f = m(i, j).ratfunc();
      a.push_back(f.IsPolynomial() ? f.num() * lcm
                                   : f.num() * lcm.DivideExact(f.den()));
    }
  }
  BiPoly prev = BiPoly::Constant(p, 1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t piv = rank;
    while (piv < nr && a[piv * nc + c].IsZero()) ++piv;
    if (piv == nr) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(a[piv * nc + j], a[rank * nc + j]);
    }
    const BiPoly pivot = a[rank * nc + c];
    for (std::size_t i = rank + 1; i < nr; ++i) {
      const BiPoly lead = a[i * nc + c];
      for (std::size_t j = c + 1; j < nc; ++j) {
        BiPoly v = pivot * a[i * nc + j] - lead * a[rank * nc + j];
        a[i * nc + j] = prev.IsOne() ? std::move(v) : v.DivideExact(prev);
      }
      a[i * nc + c] = BiPoly(p);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::size_t Rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  switch (m.field().kind()) {
    case FieldKind::kPrimeField:
      return RankModP(m);
    case FieldKind::kRationalFunctions:
      return RankFractionFree(m);
    case FieldKind::kRationals:
      break;
  }
  return RankByElimination(m);
}

// ---------------------------------------------------------------- inverse

std::optional<Matrix> Inverse(const Matrix& m) {
  if (!m.IsSquare()) throw InvalidArgument("inverse of a non-square matrix");
  std::size_t n = m.rows();
  std::vector<Scalar> a = m.entries();
  Matrix inv = Matrix::Identity(m.field(), n);
  std::vector<Scalar> b = inv.entries();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv * n + c].IsZero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[c * n + j]);
        std::swap(b[piv * n + j], b[c * n + j]);
      }
    }
    Scalar s = a[c * n + c].Inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] *= s;
      b[c * n + j] *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i * n + c].IsZero()) continue;
      Scalar f = a[i * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[c * n + j];
        b[i * n + j] -= f * b[c * n + j];
      }
    }
  }
  return Matrix::FromEntries(m.field(), n, n, std::move(b));
}

Matrix InverseOrThrow(const Matrix& m) {
  auto inv = Inverse(m);
  if (!inv) throw DivisionByZero("matrix is singular");
  return *std::move(inv);
}

bool IsInvertible(const Matrix& m) {
  return m.IsSquare() && Rank(m) == m.rows();
}

std::optional<Matrix> SolveFullColumnRank(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidArgument("solve: row count mismatch");
  if (a.field() != b.field()) throw InvalidArgument("solve: field mismatch");
  std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  Matrix aug = Matrix::HStack({a, b});
  std::vector<Scalar> e = aug.entries();
  std::size_t w = k + m;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = row;
    while (piv < n && e[piv * w + c].IsZero()) ++piv;
    if (piv == n) throw InvalidArgument("solve: coefficient matrix is rank deficient");
    if (piv != row) {
      for (std::size_t j = 0; j < w; ++j) std::swap(e[piv * w + j], e[row * w + j]);
    }
    Scalar s = e[row * w + c].Inverse();
    for (std::size_t j = 0; j < w; ++j) e[row * w + j] *= s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || e[i * w + c].IsZero()) continue;
      Scalar f = e[i * w + c];
      for (std::size_t j = 0; j < w; ++j) e[i * w + j] -= f * e[row * w + j];
    }
    ++row;
  }
  // Rows below k must be zero on the right-hand side for consistency.
  for (std::size_t i = k; i < n; ++i) {
    for (std::size_t j = k; j < w; ++j) {
      if (!e[i * w + j].IsZero()) return std::nullopt;
    }
  }
  Matrix x(a.field(), k, m);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m; ++j) x.Set(i, j, e[i * w + k + j]);
  }
  return x;
}

// ---------------------------------------------------------------- blocks

BlockMatrix::BlockMatrix(Matrix base, std::size_t block_size)
    : base_(std::move(base)), c_(block_size) {
  if (c_ == 0) {
    if (base_.rows() != 0 || base_.cols() != 0) {
      throw InvalidArgument("block size 0 requires an empty matrix");
    }
    return;
  }
  if (base_.rows() % c_ != 0 || base_.cols() % c_ != 0) {
    throw InvalidArgument("matrix dimensions are not multiples of the block size");
  }
}

Matrix BlockMatrix::Block(std::size_t br, std::size_t bc) const {
  return base_.Sub(br * c_, bc * c_, c_, c_);
}

void BlockMatrix::SetBlock(std::size_t br, std::size_t bc, const Matrix& m) {
  if (m.rows() != c_ || m.cols() != c_) throw InvalidArgument("block size mismatch");
  base_.SetSub(br * c_, bc * c_, m);
}

Matrix BlockMatrix::BlockColumn(std::size_t bc) const {
  if (bc >= block_cols()) throw InvalidArgument("block column out of range");
  return base_.Sub(0, bc * c_, base_.rows(), c_);
}

void BlockMatrix::SetBlockColumn(std::size_t bc, const Matrix& column) {
  if (column.rows() != base_.rows() || column.cols() != c_) {
    throw InvalidArgument("block column size mismatch");
  }
  base_.SetSub(0, bc * c_, column);
}

Matrix BlockColumnMinor(const BlockMatrix& w, const std::vector<std::size_t>& columns) {
  std::vector<std::size_t> cols;
  cols.reserve(columns.size() * w.block_size());
  for (std::size_t bc : columns) {
    if (bc >= w.block_cols()) {
      throw InvalidArgument("block column " + std::to_string(bc) + " out of range");
    }
    for (std::size_t k = 0; k < w.block_size(); ++k) cols.push_back(bc * w.block_size() + k);
  }
  return w.base().SelectColumns(cols);
}


namespace {

void CheckLemmaBlocks(BlockShape shape, const Matrix& m1, const Matrix& m2,
                      const Matrix& m3) {
  std::vector<const Matrix*> used = {&m1, &m2};
  if (shape != BlockShape::kI) used.push_back(&m3);
  for (const Matrix* m : used) {
    if (!m->IsSquare() || m->rows() != m1.rows()) {
      throw InvalidArgument("blocks must be square of a common size");
    }
    if (m->field() != m1.field()) throw InvalidArgument("blocks over different fields");
    if (!IsInvertible(*m)) throw DivisionByZero("block is not invertible");
  }
}

}  // namespace

std::size_t LemmaBlockRank(BlockShape shape, const Matrix& m1, const Matrix& m2,
                           const Matrix& m3) {
  CheckLemmaBlocks(shape, m1, m2, m3);
  const std::size_t k = m1.rows();
  switch (shape) {
    case BlockShape::kI:
      return k + Rank(m1 - m2);
    case BlockShape::kII:
      return 2 * k + Rank(m3 * m2 - m1);
    case BlockShape::kIII:
      return 2 * k + Rank(m1 + m3 * m2 - m1 * m2);
  }
  return 0;
}

Matrix AssembleLemmaBlock(BlockShape shape, const Matrix& m1, const Matrix& m2,
                          const Matrix& m3) {
  CheckLemmaBlocks(shape, m1, m2, m3);
  const FieldSpec& f = m1.field();
  const std::size_t k = m1.rows();
  Matrix id = Matrix::Identity(f, k), zero(f, k, k);
  auto row = [](std::vector<Matrix> parts) { return Matrix::HStack(parts); };
  switch (shape) {
    case BlockShape::kI:
      return Matrix::VStack({row({id, id}), row({m1, m2})});
    case BlockShape::kII:
      return Matrix::VStack({row({id, id, zero}), row({m1, zero, m3}), row({zero, m2, -id})});
    case BlockShape::kIII:
      return Matrix::VStack({row({id, id, id}), row({m1, zero, m3}), row({zero, m2, id})});
  }
  return zero;
}

}  // namespace vonstaudt
