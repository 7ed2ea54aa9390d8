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

// Block-matrix representations of the circuit families in staudt.h: building
// them from solutions, checking the subspace-arrangement conditions, reading
// off the induced matroid, moving to the standard projective frame and
// recovering solutions.

#ifndef VONSTAUDT_REPRESENT_H_
#define VONSTAUDT_REPRESENT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vonstaudt/atomic.h"
#include "vonstaudt/matrix.h"
#include "vonstaudt/staudt.h"

namespace vonstaudt {

// Three block rows; block column t is the image of labels()[t].
class Representation {
 public:
  // Throws FormatError if the matrix does not have 3 block rows, the labels
  // do not match the block columns, or a label repeats.
  Representation(BlockMatrix matrix, std::vector<GroundElement> labels);

  const BlockMatrix& matrix() const { return matrix_; }
  const std::vector<GroundElement>& labels() const { return labels_; }
  const FieldSpec& field() const { return matrix_.field(); }
  std::size_t block_size() const { return matrix_.block_size(); }
  std::size_t size() const { return labels_.size(); }

  std::optional<std::size_t> Position(const GroundElement& e) const;
  // Throws InvalidArgument if absent.
  Matrix Column(const GroundElement& e) const;

  bool operator==(const Representation& o) const {
    return matrix_.base() == o.matrix_.base() &&
           matrix_.block_size() == o.matrix_.block_size() && labels_ == o.labels_;
  }

 private:
  BlockMatrix matrix_;
  std::vector<GroundElement> labels_;
};

// Columns in the same order as the representation's labels.
struct FrameTransform {
  Matrix left;
  std::vector<Matrix> right_scalars;
};

// left * W * diag(right_scalars). Throws InvalidArgument on size mismatch.
Representation ApplyTransform(const Representation& r, const FrameTransform& t);

// O -> (I,0,0), x_i -> (I,a_i,0), y_i -> (I,0,a_i), xinf -> (0,I,0),
// yinf -> (0,0,I), z_i -> (0,a_i,-I), r_k -> (I,a_k,I), in the order of
// StaudtGround(p). `solution` assigns slots 0..N. Throws VerificationError if
// it does not solve `p` or some a_i is neither invertible nor zero.
Representation BuildRepresentation(const AtomicSystem& p, const Assignment& solution);
// The same block matrix without any check on `solution`.
Representation AssembleRepresentation(const AtomicSystem& p, const Assignment& solution);

struct SubsetRank {
  std::vector<std::uint32_t> subset;  // sorted block-column positions
  std::size_t rank;
};

enum class SweepDepth { kPairs, kTriples, kAll };

struct ArrangementReport {
  std::size_t block_size = 0;
  std::vector<std::size_t> singleton_ranks;
  // Lexicographic order of subsets.
  std::vector<SubsetRank> pairs;
  std::vector<SubsetRank> triples;
  // Subsets of size >= 4, only for SweepDepth::kAll.
  std::vector<SubsetRank> larger;
  // Singletons of rank != c and larger subsets whose rank is not a multiple
  // of c.
  std::vector<SubsetRank> violations;

  bool ok() const { return violations.empty(); }
  // Rank -> count over `pairs` or `triples`.
  static std::map<std::size_t, std::size_t> Histogram(const std::vector<SubsetRank>& xs);
};

// kAll sweeps every subset and requires at most 12 block columns (throws
// InvalidArgument otherwise). Ranks of distinct subsets are computed on up to
// `jobs` threads.
ArrangementReport VerifyArrangement(const Representation& r,
                                    SweepDepth depth = SweepDepth::kTriples,
                                    unsigned jobs = 1);

// Dependent sets are those of rank < c * size; circuits of size <= 3 are
// listed and the rank-3 closure supplies the rest. Throws VerificationError
// unless `report` (at least triple depth) is free of violations.
Matroid InducedMatroid(const Representation& r, const ArrangementReport& report);
Matroid InducedMatroid(const Representation& r, unsigned jobs = 1);

// Moves O, x1, y1, xinf, yinf to (I,0,0), (I,I,0), (I,0,I), (0,I,0),
// (0,0,I). Throws VerificationError if these five columns are not two lines
// through O with distinct points, or a coefficient block is singular.
std::pair<Representation, FrameTransform> NormalizeFrame(const Representation& r);

// Normalizes the frame, reads a_i from the x_i, y_i and z_i columns, checks
// that the three readings and the r_k columns agree, that every a_i is
// invertible or zero and that the result solves `p`. Returns slots 0..N.
// Throws VerificationError on any failure.
Assignment ExtractSolution(const Representation& r, const AtomicSystem& p);

}  // namespace vonstaudt

#endif  // VONSTAUDT_REPRESENT_H_
