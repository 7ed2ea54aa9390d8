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

// Dense matrices over the exact fields, exact rank, and block structure.

#ifndef VONSTAUDT_MATRIX_H_
#define VONSTAUDT_MATRIX_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vonstaudt/field.h"

namespace vonstaudt {

class Matrix {
 public:
  // Zero matrix. Either dimension may be 0.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);
  static Matrix Identity(const FieldSpec& field, std::size_t n);
  static Matrix FromIntegers(const FieldSpec& field,
                             const std::vector<std::vector<long>>& rows);
  // Throws InvalidArgument if sizes disagree or an entry is outside `field`.
  static Matrix FromEntries(const FieldSpec& field, std::size_t rows,
                            std::size_t cols, std::vector<Scalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool IsSquare() const { return rows_ == cols_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  // Throws InvalidArgument if `v` is not an element of field().
  void Set(std::size_t r, std::size_t c, Scalar v);

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix Scaled(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool IsZero() const;
  bool IsIdentity() const;
  Scalar Trace() const;
  Matrix Transpose() const;

  Matrix Sub(std::size_t row, std::size_t col, std::size_t nrows,
             std::size_t ncols) const;
  void SetSub(std::size_t row, std::size_t col, const Matrix& m);
  Matrix SelectColumns(const std::vector<std::size_t>& cols) const;
  Matrix SelectRows(const std::vector<std::size_t>& rows) const;
  static Matrix HStack(const std::vector<Matrix>& parts);
  static Matrix VStack(const std::vector<Matrix>& parts);

  std::string ToString() const;

 private:
  void CheckSameShape(const Matrix& o, const char* op) const;
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

// Exact rank. Uses Gaussian elimination over Q and F_p and fraction-free
// elimination over F_p[l, m] (after clearing row denominators) for F_p(l, m).
std::size_t Rank(const Matrix& m);
// Gaussian elimination with field division; valid for every field.
std::size_t RankByElimination(const Matrix& m);
// Bareiss elimination on denominator-cleared rows. Rational-function fields
// only.
std::size_t RankFractionFree(const Matrix& m);

std::optional<Matrix> Inverse(const Matrix& m);
// Throws DivisionByZero when `m` is singular and InvalidArgument when it is
// not square.
Matrix InverseOrThrow(const Matrix& m);
bool IsInvertible(const Matrix& m);

// Unique X with a * X == b, where `a` has full column rank. Returns nullopt
// if the system is inconsistent; throws InvalidArgument if `a` is column-rank
// deficient.
std::optional<Matrix> SolveFullColumnRank(const Matrix& a, const Matrix& b);

// A matrix viewed as a grid of c x c blocks.
class BlockMatrix {
 public:
  // Throws InvalidArgument unless both dimensions are multiples of block_size.
  BlockMatrix(Matrix base, std::size_t block_size);

  const Matrix& base() const { return base_; }
  std::size_t block_size() const { return c_; }
  std::size_t block_rows() const { return c_ == 0 ? 0 : base_.rows() / c_; }
  std::size_t block_cols() const { return c_ == 0 ? 0 : base_.cols() / c_; }
  const FieldSpec& field() const { return base_.field(); }

  Matrix Block(std::size_t br, std::size_t bc) const;
  void SetBlock(std::size_t br, std::size_t bc, const Matrix& m);
  Matrix BlockColumn(std::size_t bc) const;
  void SetBlockColumn(std::size_t bc, const Matrix& column);

 private:
  Matrix base_;
  std::size_t c_;
};

// All rows and the selected block columns, in the given order. Throws
// InvalidArgument on an out-of-range index.
Matrix BlockColumnMinor(const BlockMatrix& w, const std::vector<std::size_t>& columns);

// Three block matrix shapes with closed-form ranks, for invertible k x k
// blocks M1, M2, M3:
//   kI   [I I; M1 M2]                     rank k + rk(M1 - M2)
//   kII  [I I 0; M1 0 M3; 0 M2 -I]        rank 2k + rk(M3 M2 - M1)
//   kIII [I I I; M1 0 M3; 0 M2 I]         rank 2k + rk(M1 + M3 M2 - M1 M2)
// kI ignores M3. Both functions throw InvalidArgument on a size or field
// mismatch and DivisionByZero if a used block is singular.
enum class BlockShape { kI, kII, kIII };

std::size_t LemmaBlockRank(BlockShape shape, const Matrix& m1, const Matrix& m2,
                           const Matrix& m3);
Matrix AssembleLemmaBlock(BlockShape shape, const Matrix& m1, const Matrix& m2,
                          const Matrix& m3);

}  // namespace vonstaudt

#endif  // VONSTAUDT_MATRIX_H_
