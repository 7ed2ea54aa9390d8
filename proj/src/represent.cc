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

#include "vonstaudt/represent.h"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "vonstaudt/error.h"
#include "vonstaudt/parallel.h"

namespace vonstaudt {

Representation::Representation(BlockMatrix matrix, std::vector<GroundElement> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (matrix_.block_rows() != 3) throw FormatError("block rows != 3");
  if (labels_.size() != matrix_.block_cols()) {
    throw FormatError("representation has " + std::to_string(matrix_.block_cols()) +
                      " block columns but " + std::to_string(labels_.size()) + " labels");
  }
  std::set<GroundElement> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw FormatError("repeated label");
}

std::optional<std::size_t> Representation::Position(const GroundElement& e) const {
  auto it = std::find(labels_.begin(), labels_.end(), e);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Matrix Representation::Column(const GroundElement& e) const {
  auto pos = Position(e);
  if (!pos) throw InvalidArgument("no block column labelled " + e.Name());
  return matrix_.BlockColumn(*pos);
}

Representation ApplyTransform(const Representation& r, const FrameTransform& t) {
  std::size_t c = r.block_size();
  if (t.right_scalars.size() != r.size()) {
    throw InvalidArgument("transform has the wrong number of column scalars");
  }
  if (t.left.rows() != 3 * c || t.left.cols() != 3 * c) {
    throw InvalidArgument("left transform has the wrong size");
  }
  Matrix left = t.left * r.matrix().base();
  BlockMatrix out(left, c);
  for (std::size_t col = 0; col < r.size(); ++col) {
    out.SetBlockColumn(col, out.BlockColumn(col) * t.right_scalars[col]);
  }
  return Representation(std::move(out), r.labels());
}

namespace {

bool InvertibleOrZero(const Matrix& m) { return m.IsZero() || IsInvertible(m); }

}  // namespace

Representation AssembleRepresentation(const AtomicSystem& p, const Assignment& solution) {
  const FieldSpec& f = solution.field();
  const std::size_t c = solution.block_size();
  std::vector<GroundElement> labels = StaudtGround(p);
  Matrix zero(f, c, c), id = Matrix::Identity(f, c);
  BlockMatrix w(Matrix(f, 3 * c, c * labels.size()), c);
  auto put = [&](std::size_t col, const Matrix& a, const Matrix& b, const Matrix& d) {
    w.SetBlock(0, col, a);
    w.SetBlock(1, col, b);
    w.SetBlock(2, col, d);
  };
  auto value = [&](std::uint32_t i) { return i == 0 ? zero : solution.Get(i); };
  for (std::size_t col = 0; col < labels.size(); ++col) {
    const GroundElement& e = labels[col];
    switch (e.kind) {
      case GroundElement::Kind::kO:
        put(col, id, zero, zero);
        break;
      case GroundElement::Kind::kXInf:
        put(col, zero, id, zero);
        break;
      case GroundElement::Kind::kYInf:
        put(col, zero, zero, id);
        break;
      case GroundElement::Kind::kX:
        put(col, id, value(e.index), zero);
        break;
      case GroundElement::Kind::kY:
        put(col, id, zero, value(e.index));
        break;
      case GroundElement::Kind::kZ:
        put(col, zero, value(e.index), -id);
        break;
      case GroundElement::Kind::kR:
        put(col, id, value(e.index), id);
        break;
    }
  }
  return Representation(std::move(w), std::move(labels));
}

Representation BuildRepresentation(const AtomicSystem& p, const Assignment& solution) {
  if (!IsSolution(p, solution)) {
    throw VerificationError("assignment does not solve the atomic system");
  }
  for (std::uint32_t i = 1; i <= p.N(); ++i) {
    if (!InvertibleOrZero(solution.Get(i))) {
      throw VerificationError("X" + std::to_string(i) + " is neither invertible nor zero");
    }
  }
  return AssembleRepresentation(p, solution);
}

std::map<std::size_t, std::size_t> ArrangementReport::Histogram(
    const std::vector<SubsetRank>& xs) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& x : xs) ++h[x.rank];
  return h;
}

ArrangementReport VerifyArrangement(const Representation& r, SweepDepth depth,
                                    unsigned jobs) {
  const std::size_t n = r.size(), c = r.block_size();
  if (depth == SweepDepth::kAll && n > 12) {
    throw InvalidArgument("exhaustive sweep needs at most 12 block columns");
  }
  std::vector<std::vector<std::uint32_t>> subsets;
  for (std::uint32_t a = 0; a < n; ++a) subsets.push_back({a});
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) subsets.push_back({a, b});
  }
  if (depth != SweepDepth::kPairs) {
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        for (std::uint32_t d = b + 1; d < n; ++d) subsets.push_back({a, b, d});
      }
    }
  }
  if (depth == SweepDepth::kAll) {
    std::vector<std::vector<std::uint32_t>> big;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) < 4) continue;
      std::vector<std::uint32_t> s;
      for (std::uint32_t t = 0; t < n; ++t) {
        if (mask >> t & 1) s.push_back(t);
      }
      big.push_back(std::move(s));
    }
    std::sort(big.begin(), big.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    subsets.insert(subsets.end(), big.begin(), big.end());
  }

  std::vector<std::size_t> ranks(subsets.size());
  ParallelFor(subsets.size(), jobs, [&](std::size_t t) {
    std::vector<std::size_t> cols(subsets[t].begin(), subsets[t].end());
    ranks[t] = Rank(BlockColumnMinor(r.matrix(), cols));
  });

  ArrangementReport out;
  out.block_size = c;
  for (std::size_t t = 0; t < subsets.size(); ++t) {
    SubsetRank sr{subsets[t], ranks[t]};
    bool bad = subsets[t].size() == 1 ? ranks[t] != c : (c == 0 ? false : ranks[t] % c != 0);
    if (bad) out.violations.push_back(sr);
    switch (subsets[t].size()) {
      case 1:
        out.singleton_ranks.push_back(ranks[t]);
        break;
      case 2:
        out.pairs.push_back(std::move(sr));
        break;
      case 3:
        out.triples.push_back(std::move(sr));
        break;
      default:
        out.larger.push_back(std::move(sr));
    }
  }
  return out;
}

Matroid InducedMatroid(const Representation& r, const ArrangementReport& report) {
  if (!report.ok()) {
    throw VerificationError("representation is not a " + std::to_string(r.block_size()) +
                            "-arrangement");
  }
  if (report.singleton_ranks.size() != r.size() ||
      report.triples.size() * 6 != r.size() * (r.size() - 1) * (r.size() - 2)) {
    throw InvalidArgument("arrangement report does not cover all triples");
  }
  const std::size_t c = r.block_size();
  std::vector<Circuit> circuits;
  std::set<std::pair<std::uint32_t, std::uint32_t>> parallel;
  for (const auto& sr : report.pairs) {
    if (sr.rank < 2 * c) {
      circuits.push_back(sr.subset);
      parallel.emplace(sr.subset[0], sr.subset[1]);
    }
  }
  for (const auto& sr : report.triples) {
    if (sr.rank >= 3 * c) continue;
    const auto& s = sr.subset;
    if (parallel.count({s[0], s[1]}) || parallel.count({s[0], s[2]}) ||
        parallel.count({s[1], s[2]})) {
      continue;
    }
    circuits.push_back(s);
  }
  return Matroid(r.labels(), std::move(circuits), true);
}

Matroid InducedMatroid(const Representation& r, unsigned jobs) {
  return InducedMatroid(r, VerifyArrangement(r, SweepDepth::kTriples, jobs));
}

std::pair<Representation, FrameTransform> NormalizeFrame(const Representation& r) {
  const FieldSpec& f = r.field();
  const std::size_t c = r.block_size();
  Matrix o = r.Column(GroundElement::O());
  Matrix a = r.Column(GroundElement::X(1));
  Matrix cy = r.Column(GroundElement::Y(1));
  Matrix b = r.Column(GroundElement::XInf());
  Matrix d = r.Column(GroundElement::YInf());

  auto coefficients = [&](const Matrix& base, const Matrix& target, const char* what) {
    Matrix basis = Matrix::HStack({o, base});
    if (Rank(basis) != 2 * c) {
      throw VerificationError(std::string("degenerate frame: O and ") + what +
                              " span less than 2c dimensions");
    }
    auto sol = SolveFullColumnRank(basis, target);
    if (!sol) {
      throw VerificationError(std::string("degenerate frame: ") + what +
                              " line does not contain the unit point");
    }
    Matrix lambda = sol->Sub(0, 0, c, c), mu = sol->Sub(c, 0, c, c);
    auto li = Inverse(lambda);
    if (!li || !IsInvertible(mu)) {
      throw VerificationError(std::string("degenerate frame: singular coefficient on ") +
                              what + " line");
    }
    return std::make_pair(*li, mu);
  };
  auto [lambda_inv, mu] = coefficients(b, a, "xinf");
  auto [lambda2_inv, mu2] = coefficients(d, cy, "yinf");
  Matrix b2 = b * mu * lambda_inv;
  Matrix d2 = d * mu2 * lambda2_inv;
  auto left = Inverse(Matrix::HStack({o, b2, d2}));
  if (!left) throw VerificationError("degenerate frame: O, xinf, yinf are dependent");

  FrameTransform t{*left, std::vector<Matrix>(r.size(), Matrix::Identity(f, c))};
  t.right_scalars[*r.Position(GroundElement::X(1))] = lambda_inv;
  t.right_scalars[*r.Position(GroundElement::Y(1))] = lambda2_inv;
  t.right_scalars[*r.Position(GroundElement::XInf())] = mu * lambda_inv;
  t.right_scalars[*r.Position(GroundElement::YInf())] = mu2 * lambda2_inv;
  Representation out = ApplyTransform(r, t);

  Matrix zero(f, c, c), id = Matrix::Identity(f, c);
  auto expect = [&](const GroundElement& e, const Matrix& p, const Matrix& q,
                    const Matrix& s) {
    if (out.Column(e) != Matrix::VStack({p, q, s})) {
      throw VerificationError("frame normalization failed at " + e.Name());
    }
  };
  expect(GroundElement::O(), id, zero, zero);
  expect(GroundElement::X(1), id, id, zero);
  expect(GroundElement::Y(1), id, zero, id);
  expect(GroundElement::XInf(), zero, id, zero);
  expect(GroundElement::YInf(), zero, zero, id);
  return {std::move(out), std::move(t)};
}

Assignment ExtractSolution(const Representation& r, const AtomicSystem& p) {
  for (const auto& e : StaudtGround(p)) {
    if (!r.Position(e)) {
      throw VerificationError("representation has no block column for " + e.Name());
    }
  }
  Representation w = NormalizeFrame(r).first;
  const FieldSpec& f = w.field();
  const std::size_t c = w.block_size();
  Matrix zero(f, c, c), id = Matrix::Identity(f, c);
  auto blocks = [&](const GroundElement& e) {
    Matrix col = w.Column(e);
    return std::array<Matrix, 3>{col.Sub(0, 0, c, c), col.Sub(c, 0, c, c),
                                 col.Sub(2 * c, 0, c, c)};
  };
  auto inverse_of = [&](const Matrix& m, const GroundElement& e) {
    auto inv = Inverse(m);
    if (!inv) {
      throw VerificationError("block column " + e.Name() +
                              " has a singular scaling block");
    }
    return *inv;
  };

  Assignment out(f, c);
  out.Set(0, zero);
  for (std::uint32_t i = 1; i <= p.N(); ++i) {
    auto x = blocks(GroundElement::X(i));
    Matrix sx = inverse_of(x[0], GroundElement::X(i));
    Matrix ai = x[1] * sx;
    if (!(x[2] * sx).IsZero()) {
      throw VerificationError("x" + std::to_string(i) + " is off the line through O and xinf");
    }
    auto y = blocks(GroundElement::Y(i));
    Matrix sy = inverse_of(y[0], GroundElement::Y(i));
    Matrix ai_y = y[2] * sy;
    if (!(y[1] * sy).IsZero()) {
      throw VerificationError("y" + std::to_string(i) + " is off the line through O and yinf");
    }
    auto z = blocks(GroundElement::Z(i));
    if (!z[0].IsZero()) {
      throw VerificationError("z" + std::to_string(i) + " is off the line at infinity");
    }
    Matrix ai_z = -(z[1] * inverse_of(z[2], GroundElement::Z(i)));
    if (ai != ai_y || ai != ai_z) {
      throw VerificationError("inconsistent readings for a" + std::to_string(i) +
                              " from x, y and z columns");
    }
    if (!InvertibleOrZero(ai)) {
      throw VerificationError("a" + std::to_string(i) + " is neither invertible nor zero");
    }
    out.Set(i, ai);
  }
  if (!out.Get(1).IsIdentity()) throw VerificationError("a1 is not the identity");
  for (std::uint32_t k : p.AddThirdSlots()) {
    auto rk = blocks(GroundElement::R(k));
    Matrix s = inverse_of(rk[0], GroundElement::R(k));
    if (rk[1] * s != out.Get(k) || rk[2] * s != id) {
      throw VerificationError("r" + std::to_string(k) + " disagrees with a" +
                              std::to_string(k));
    }
  }
  for (const auto& e : p.equations()) {
    Matrix rhs = e.op == AtomicEquation::Op::kAdd ? out.Get(e.j) + out.Get(e.k)
                                                  : out.Get(e.j) * out.Get(e.k);
    if (out.Get(e.i) != rhs) {
      throw VerificationError("extracted assignment fails " + e.ToString());
    }
  }
  return out;
}

}  // namespace vonstaudt
