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

#include "vonstaudt/casebook.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <random>
#include <set>

#include "vonstaudt/error.h"
#include "vonstaudt/parallel.h"

namespace vonstaudt {

// ---------------------------------------------------------------- Weyl

AtomicSystem WeylSystem() {
  return AtomicSystem(5,
                      {AtomicEquation::Mul(4, 2, 3), AtomicEquation::Mul(5, 3, 2),
                       AtomicEquation::Add(4, 1, 5)},
                      {{"X", 2}, {"Y", 3}});
}

WeylPair WeylMatrices(std::uint32_t p) {
  if (!IsPrime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  FieldSpec f = FieldSpec::RationalFunctions(p);
  Scalar l = Scalar::Parse(f, "l"), m = Scalar::Parse(f, "m");
  Matrix a(f, p, p), b(f, p, p);
  for (std::uint32_t i = 0; i < p; ++i) {
    a.Set(i, i, l);
    if (i + 1 < p) {
      a.Set(i, i + 1, Scalar::FromInteger(f, i + 1));
      b.Set(i + 1, i, Scalar::One(f));
    }
  }
  b.Set(0, p - 1, m);
  if (!(a * b - b * a).IsIdentity()) {
    throw VerificationError("AB - BA is not the identity");
  }
  return {p, std::move(a), std::move(b)};
}

Assignment WeylSolution(const WeylPair& w) {
  Assignment s(w.a.field(), w.p);
  s.Set(0, Matrix(w.a.field(), w.p, w.p));
  s.Set(1, Matrix::Identity(w.a.field(), w.p));
  s.Set(2, w.a);
  s.Set(3, w.b);
  s.Set(4, w.a * w.b);
  s.Set(5, w.b * w.a);
  return s;
}

Representation WeylRepresentation(std::uint32_t p) {
  return BuildRepresentation(WeylSystem(), WeylSolution(WeylMatrices(p)));
}

WeylReport WeylStudy(std::uint32_t p, unsigned jobs) {
  WeylReport out;
  out.p = p;
  WeylPair w = WeylMatrices(p);
  out.commutator_is_identity = (w.a * w.b - w.b * w.a).IsIdentity();
  AtomicSystem sys = WeylSystem();
  Representation rep = BuildRepresentation(sys, WeylSolution(w));
  out.columns = rep.size();
  ArrangementReport ar = VerifyArrangement(rep, SweepDepth::kTriples, jobs);
  out.pair_ranks = ArrangementReport::Histogram(ar.pairs);
  out.triple_ranks = ArrangementReport::Histogram(ar.triples);
  out.arrangement_ok = ar.ok();

  CircuitFamily family = BuildCircuits(sys);
  out.family_is_matroid = IsMatroid(family);
  std::set<Circuit> three;
  for (const auto& c : family.circuits()) {
    if (c.size() == 3) three.insert(c);
  }
  out.circuit_triples = three.size();
  out.circuit_triples_rank_2p = true;
  Circuit special = {static_cast<std::uint32_t>(*rep.Position(GroundElement::R(5))),
                     static_cast<std::uint32_t>(*rep.Position(GroundElement::X(4))),
                     static_cast<std::uint32_t>(*rep.Position(GroundElement::Z(1)))};
  std::sort(special.begin(), special.end());
  for (const auto& t : ar.triples) {
    bool is_circuit = three.count(t.subset) > 0;
    if (is_circuit && t.rank != 2 * p) out.circuit_triples_rank_2p = false;
    if (!is_circuit && t.rank < 3 * p) {
      std::vector<std::string> names;
      for (auto e : t.subset) names.push_back(rep.labels()[e].Name());
      out.extra_dependent_triples.push_back(std::move(names));
    }
    if (t.subset == special) out.r5_x4_z1_rank = t.rank;
  }
  if (out.arrangement_ok) {
    out.induced_in_family = InFamily(InducedMatroid(rep, ar), sys).member;
    out.roundtrip_exact = ExtractSolution(rep, sys) == WeylSolution(w);
  }
  return out;
}

bool TraceObstruction(std::size_t c, const FieldSpec& field) {
  if (c == 0) return true;
  if (field.kind() == FieldKind::kRationals) return false;
  return c % field.characteristic() == 0;
}

// ---------------------------------------------------------------- BS(2,3)

NCSystem BsSystem() {
  return ParseSystem(
      "x*x' = 1\n"
      "y*y' = 1\n"
      "y*x^2*y' = x^3\n"
      "z*(y*x*y'*x'*y*x'*y'*x - 1) = 1\n");
}

std::vector<Matrix> GeneralLinearGroup(const FieldSpec& field, std::size_t c,
                                       std::size_t limit) {
  if (field.kind() != FieldKind::kPrimeField) {
    throw InvalidArgument("matrix enumeration needs a prime field");
  }
  const std::uint64_t p = field.characteristic();
  long double order = 1, pc = std::pow(static_cast<long double>(p), c);
  for (std::size_t i = 0; i < c; ++i) {
    order *= pc - std::pow(static_cast<long double>(p), i);
  }
  if (order > static_cast<long double>(limit)) {
    throw InvalidArgument("GL_" + std::to_string(c) + "(F_" + std::to_string(p) +
                          ") exceeds the enumeration limit");
  }
  std::vector<Matrix> out;
  std::vector<std::uint32_t> digits(c * c, 0);
  for (;;) {
    std::vector<Scalar> entries;
    for (auto d : digits) entries.push_back(Scalar::FromInteger(field, d));
    Matrix m = Matrix::FromEntries(field, c, c, std::move(entries));
    if (Rank(m) == c) out.push_back(std::move(m));
    std::size_t t = digits.size();
    while (t > 0 && digits[t - 1] + 1 == p) digits[--t] = 0;
    if (t == 0) break;
    ++digits[t - 1];
  }
  return out;
}

namespace {

struct BsTally {
  std::size_t examined = 0;
  std::size_t relator = 0;
  std::size_t nontrivial = 0;
  std::size_t solutions = 0;
  std::vector<std::pair<Matrix, Matrix>> witnesses;
};

constexpr std::size_t kMaxWitnesses = 5;

void TestPair(const Matrix& a, const Matrix& a_inv, const Matrix& a2, const Matrix& a3,
              const Matrix& b, const Matrix& b_inv, BsTally& t) {
  ++t.examined;
  if (b * a2 != a3 * b) return;
  ++t.relator;
  Matrix g = b * a * b_inv * a_inv * b * a_inv * b_inv * a;
  if (!g.IsIdentity()) {
    ++t.nontrivial;
    if (t.witnesses.size() < kMaxWitnesses) t.witnesses.emplace_back(a, b);
  }
  if (IsInvertible(g - Matrix::Identity(a.field(), a.rows()))) ++t.solutions;
}

Matrix RandomInvertible(const FieldSpec& f, std::size_t c, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Scalar> e;
    for (std::size_t i = 0; i < c * c; ++i) {
      if (f.kind() == FieldKind::kRationals) {
        e.push_back(Scalar::FromInteger(f, static_cast<long>(rng() % 7) - 3));
      } else {
        e.push_back(Scalar::FromInteger(f, static_cast<long>(rng() % f.characteristic())));
      }
    }
    Matrix m = Matrix::FromEntries(f, c, c, std::move(e));
    if (Rank(m) == c) return m;
  }
}

}  // namespace

BsSearchResult BsSearch(const FieldSpec& field, std::size_t c, SearchMode mode,
                        std::size_t count, std::uint64_t seed, unsigned jobs) {
  if (c == 0) throw InvalidArgument("dimension must be positive");
  BsSearchResult out;
  out.field = field.ToString();
  out.dim = c;
  std::vector<BsTally> tallies;
  if (mode == SearchMode::kExhaustive) {
    out.mode = "exhaustive";
    std::vector<Matrix> g = GeneralLinearGroup(field, c, kBsPairGuard);
    if (g.size() * g.size() > kBsPairGuard) {
      throw InvalidArgument("exhaustive search exceeds " + std::to_string(kBsPairGuard) +
                            " pairs");
    }
    out.group_order = g.size();
    std::vector<Matrix> inv, sq, cube;
    for (const auto& m : g) {
      inv.push_back(InverseOrThrow(m));
      sq.push_back(m * m);
      cube.push_back(sq.back() * m);
    }
    tallies.resize(g.size());
    ParallelFor(g.size(), jobs, [&](std::size_t i) {
      for (std::size_t j = 0; j < g.size(); ++j) {
        TestPair(g[i], inv[i], sq[i], cube[i], g[j], inv[j], tallies[i]);
      }
    });
  } else {
    out.mode = "random";
    if (field.kind() == FieldKind::kRationalFunctions) {
      throw InvalidArgument("random search supports Q and F_p");
    }
    std::mt19937_64 rng(seed);
    tallies.resize(1);
    for (std::size_t t = 0; t < count; ++t) {
      Matrix a = RandomInvertible(field, c, rng);
      Matrix b = RandomInvertible(field, c, rng);
      Matrix a2 = a * a;
      TestPair(a, InverseOrThrow(a), a2, a2 * a, b, InverseOrThrow(b), tallies[0]);
    }
  }
  for (auto& t : tallies) {
    out.pairs_examined += t.examined;
    out.relator_pairs += t.relator;
    out.nontrivial_word_pairs += t.nontrivial;
    out.system_solutions += t.solutions;
    for (auto& w : t.witnesses) {
      if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back(std::move(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Horn

GroupWord ParseGroupWord(std::string_view text, const std::vector<std::string>& vars) {
  auto fail = [&](const std::string& what, std::size_t pos) {
    throw ParseError(what + " in group word '" + std::string(text) + "'", 1, pos + 1);
  };
  GroupWord w;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    skip();
    if (pos != text.size()) fail("unexpected text after the unit", pos);
    return w;
  }
  for (;;) {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\'')) {
      ++pos;
    }
    std::string name(text.substr(start, pos - start));
    if (!IsIdentifier(name)) fail("expected a variable", start);
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) fail("unknown variable '" + name + "'", start);
    int exponent = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      std::size_t at = pos;
      bool negative = pos < text.size() && text[pos] == '-';
      if (negative) ++pos;
      std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == digits || pos - digits > 4) fail("expected an exponent", at);
      exponent = std::stoi(std::string(text.substr(digits, pos - digits)));
      if (exponent == 0) fail("exponent must be nonzero", at);
      if (negative) exponent = -exponent;
    }
    // x^n is shorthand for n letters x; each letter has exponent +1 or -1.
    for (int t = 0; t < std::abs(exponent); ++t) {
      w.letters.emplace_back(static_cast<std::uint32_t>(it - vars.begin()), exponent > 0 ? 1 : -1);
    }
    skip();
    if (pos == text.size()) return w;
    if (text[pos] != '*') fail("expected '*'", pos);
    ++pos;
  }
}

std::string FormatGroupWord(const GroupWord& w, const std::vector<std::string>& vars) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t t = 0; t < w.letters.size(); ++t) {
    if (t) out += "*";
    out += vars.at(w.letters[t].first);
    if (w.letters[t].second < 0) out += "^-1";
  }
  return out;
}

namespace {

std::string FreshName(std::string base, const std::set<std::string>& taken) {
  while (taken.count(base)) base += "'";
  return base;
}

NCPolynomial WordPolynomial(const GroupWord& w, const std::vector<std::uint32_t>& inverse) {
  Word word;
  for (const auto& [v, e] : w.letters) word.push_back(e > 0 ? v : inverse[v]);
  return NCPolynomial::Monomial(word, 1);
}

}  // namespace

namespace {

std::string WordText(const GroupWord& w, const std::vector<std::string>& vars,
                     const std::vector<std::string>& inverse_names) {
  std::string out;
  for (const auto& [v, e] : w.letters) {
    if (!out.empty()) out += "*";
    out += e > 0 ? vars[v] : inverse_names[v];
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::vector<HornCase> HornReduce(const HornSentence& h) {
  const std::size_t n = h.vars.size();
  if (n > 20) throw InvalidArgument("too many variables for the case split");
  std::vector<HornCase> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    HornCase hc;
    std::vector<std::string> names = h.vars;
    std::set<std::string> taken(names.begin(), names.end());
    std::vector<std::uint32_t> inverse(n);
    std::vector<NCEquation> eqs;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        hc.zero_vars.push_back(i);
        inverse[i] = i;
        hc.inverse_names.push_back(h.vars[i]);
        eqs.push_back({NCPolynomial::Variable(i), NCPolynomial()});
      } else {
        std::string primed = FreshName(h.vars[i] + "'", taken);
        taken.insert(primed);
        inverse[i] = static_cast<std::uint32_t>(names.size());
        names.push_back(primed);
        hc.inverse_names.push_back(primed);
        eqs.push_back({NCPolynomial::Monomial({i, inverse[i]}),
                       NCPolynomial::Constant(1)});
      }
    }
    for (const auto& [a, b] : h.equations) {
      eqs.push_back({WordPolynomial(a, inverse), WordPolynomial(b, inverse)});
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      hc.equations.push_back(mask >> i & 1 ? h.vars[i] + " = 0"
                                            : h.vars[i] + "*" + hc.inverse_names[i] + " = 1");
    }
    for (const auto& [a, b] : h.equations) {
      hc.equations.push_back(WordText(a, h.vars, hc.inverse_names) + " = " +
                             WordText(b, h.vars, hc.inverse_names));
    }
    hc.witness_name = FreshName("y", taken);
    std::uint32_t y = static_cast<std::uint32_t>(names.size());
    names.push_back(hc.witness_name);
    NCPolynomial diff = WordPolynomial(h.implication.first, inverse) -
                        WordPolynomial(h.implication.second, inverse);
    eqs.push_back({diff * NCPolynomial::Variable(y), NCPolynomial::Constant(1)});
    hc.equations.push_back("(" + WordText(h.implication.first, h.vars, hc.inverse_names) +
                           " - " + WordText(h.implication.second, h.vars, hc.inverse_names) +
                           ")*" + hc.witness_name + " = 1");
    hc.system = NCSystem(std::move(names), std::move(eqs));
    out.push_back(std::move(hc));
  }
  return out;
}

std::optional<Assignment> HornCaseSearch(const HornSentence& h, const HornCase& hc,
                                         const FieldSpec& field, std::size_t c,
                                         std::size_t limit) {
  std::vector<Matrix> g = GeneralLinearGroup(field, c, limit);
  std::vector<Matrix> g_inv;
  for (const auto& m : g) g_inv.push_back(InverseOrThrow(m));
  const std::size_t n = h.vars.size();
  std::vector<std::uint32_t> free_vars;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!std::binary_search(hc.zero_vars.begin(), hc.zero_vars.end(), i)) {
      free_vars.push_back(i);
    }
  }
  long double total = std::pow(static_cast<long double>(g.size()), free_vars.size());
  if (total > static_cast<long double>(limit)) {
    throw InvalidArgument("Horn case search exceeds the enumeration limit");
  }
  const NCSystem& s = hc.system;
  const std::uint32_t y = *s.IndexOf(hc.witness_name);
  const NCEquation& last = s.equations().back();
  NCPolynomial diff_times_y = last.lhs;
  std::vector<std::size_t> idx(free_vars.size(), 0);
  Matrix zero(field, c, c);
  for (;;) {
    Assignment a(field, c);
    for (std::uint32_t i : hc.zero_vars) a.Set(i, zero);
    for (std::size_t t = 0; t < free_vars.size(); ++t) {
      a.Set(free_vars[t], g[idx[t]]);
      a.Set(*s.IndexOf(hc.inverse_names[free_vars[t]]), g_inv[idx[t]]);
    }
    // (A - B) is the coefficient of y: evaluate with y = I.
    a.Set(y, Matrix::Identity(field, c));
    auto inv = Inverse(Evaluate(diff_times_y, a));
    if (inv) {
      a.Set(y, *inv);
      if (IsSolution(s, a)) return a;
    }
    std::size_t t = 0;
    while (t < idx.size() && ++idx[t] == g.size()) idx[t++] = 0;
    if (t == idx.size()) break;
  }
  return std::nullopt;
}

bool HornHoldsInPrimeField(const HornSentence& h, std::uint32_t p) {
  if (!IsPrime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  const std::size_t n = h.vars.size();
  std::vector<std::uint32_t> x(n, 0);
  auto eval = [&](const GroupWord& w) {
    std::uint32_t v = 1;
    for (const auto& [i, e] : w.letters) {
      std::uint32_t f = x[i];
      if (e < 0 && f != 0) f = ModInv(f, p);
      v = ModMul(v, f, p);
    }
    return v;
  };
  for (;;) {
    bool premises = std::all_of(h.equations.begin(), h.equations.end(),
                                [&](const auto& eq) { return eval(eq.first) == eval(eq.second); });
    if (premises && eval(h.implication.first) != eval(h.implication.second)) return false;
    std::size_t t = 0;
    while (t < n && ++x[t] == p) x[t++] = 0;
    if (t == n) break;
  }
  return true;
}

}  // namespace vonstaudt
