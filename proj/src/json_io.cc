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

#include "vonstaudt/json_io.h"

#include <algorithm>
#include <set>

#include "vonstaudt/error.h"

namespace vonstaudt {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key '") + key + "'");
  return *it;
}

std::uint64_t Natural(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw FormatError(std::string("'") + key + "' must be a natural number");
  }
  return v.get<std::uint64_t>();
}

std::string String(const Json& v, const char* what) {
  if (!v.is_string()) throw FormatError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

const Json& Array(const Json& v, const char* what) {
  if (!v.is_array()) throw FormatError(std::string(what) + " must be an array");
  return v;
}

}  // namespace

Json FieldToJson(const FieldSpec& f) {
  switch (f.kind()) {
    case FieldKind::kRationals:
      return {{"kind", "Q"}};
    case FieldKind::kPrimeField:
      return {{"kind", "Fp"}, {"p", f.characteristic()}};
    case FieldKind::kRationalFunctions:
      return {{"kind", "Fpxy"}, {"p", f.characteristic()}, {"vars", f.vars()}};
  }
  return {};
}

FieldSpec FieldFromJson(const Json& j) {
  std::string kind = String(Field(j, "kind"), "field kind");
  try {
    if (kind == "Q") return FieldSpec::Rationals();
    std::uint64_t p = Natural(j, "p");
    if (p > 0xffffffffu) throw FormatError("field characteristic too large");
    if (kind == "Fp") return FieldSpec::PrimeField(static_cast<std::uint32_t>(p));
    if (kind == "Fpxy") {
      const Json& vars = Array(Field(j, "vars"), "field vars");
      if (vars.size() != 2) throw FormatError("field vars must have two names");
      return FieldSpec::RationalFunctions(static_cast<std::uint32_t>(p),
                                          String(vars[0], "variable"),
                                          String(vars[1], "variable"));
    }
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
  throw FormatError("unknown field kind '" + kind + "'");
}

Json MatrixToJson(const Matrix& m, std::size_t block_size) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).ToString(m.field()));
    rows.push_back(std::move(row));
  }
  return {{"field", FieldToJson(m.field())},
          {"block_size", block_size},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"entries", std::move(rows)}};
}

namespace {

Matrix EntriesFromJson(const Json& entries, const FieldSpec& f, std::size_t rows,
                       std::size_t cols) {
  Array(entries, "entries");
  if (entries.size() != rows) {
    throw FormatError("matrix has " + std::to_string(entries.size()) + " rows, expected " +
                      std::to_string(rows));
  }
  std::vector<Scalar> values;
  values.reserve(rows * cols);
  for (const auto& row : entries) {
    Array(row, "matrix row");
    if (row.size() != cols) {
      throw FormatError("matrix row has " + std::to_string(row.size()) +
                        " entries, expected " + std::to_string(cols));
    }
    for (const auto& e : row) {
      if (e.is_number_integer()) {
        values.push_back(Scalar::FromInteger(f, mpz_class(e.dump())));
      } else {
        values.push_back(Scalar::Parse(f, String(e, "matrix entry")));
      }
    }
  }
  return Matrix::FromEntries(f, rows, cols, std::move(values));
}

}  // namespace

Matrix MatrixFromJson(const Json& j, const FieldSpec& f) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  return EntriesFromJson(j, f, rows, cols);
}

BlockMatrix BlockMatrixFromJson(const Json& j) {
  FieldSpec f = FieldFromJson(Field(j, "field"));
  std::size_t c = Natural(j, "block_size");
  std::size_t rows = Natural(j, "rows"), cols = Natural(j, "cols");
  if (c == 0) throw FormatError("block_size must be positive");
  if (rows != 3 * c) throw FormatError("block rows != 3");
  if (cols % c != 0) throw FormatError("cols is not a multiple of block_size");
  return BlockMatrix(EntriesFromJson(Field(j, "entries"), f, rows, cols), c);
}

Json RepresentationToJson(const Representation& r, const AtomicSystem* atomic) {
  Json j = MatrixToJson(r.matrix().base(), r.block_size());
  Json labels = Json::array();
  for (const auto& e : r.labels()) labels.push_back(e.Name());
  j["labels"] = std::move(labels);
  if (atomic) j["atomic"] = AtomicToJson(*atomic);
  return j;
}

Representation RepresentationFromJson(const Json& j) {
  BlockMatrix m = BlockMatrixFromJson(j);
  std::vector<GroundElement> labels;
  for (const auto& l : Array(Field(j, "labels"), "labels")) {
    labels.push_back(GroundElement::Parse(String(l, "label")));
  }
  return Representation(std::move(m), std::move(labels));
}

Json AtomicToJson(const AtomicSystem& a) {
  Json eqs = Json::array();
  for (const auto& e : a.equations()) {
    eqs.push_back({{"op", e.op == AtomicEquation::Op::kAdd ? "add" : "mul"},
                   {"i", e.i},
                   {"j", e.j},
                   {"k", e.k}});
  }
  Json origin = Json::object();
  for (const auto& [name, idx] : a.origin()) origin[name] = idx;
  return {{"N", a.N()}, {"equations", std::move(eqs)}, {"origin_map", std::move(origin)}};
}

AtomicSystem AtomicFromJson(const Json& j) {
  std::uint64_t n = Natural(j, "N");
  if (n > 0xffffffu) throw FormatError("N too large");
  std::vector<AtomicEquation> eqs;
  for (const auto& e : Array(Field(j, "equations"), "equations")) {
    std::string op = String(Field(e, "op"), "op");
    if (op != "add" && op != "mul") throw FormatError("op must be \"add\" or \"mul\"");
    auto idx = [&](const char* key) {
      std::uint64_t v = Natural(e, key);
      if (v > 0xffffffu) throw FormatError("index too large");
      return static_cast<std::uint32_t>(v);
    };
    eqs.push_back({op == "add" ? AtomicEquation::Op::kAdd : AtomicEquation::Op::kMul,
                   idx("i"), idx("j"), idx("k")});
  }
  std::vector<std::pair<std::string, std::uint32_t>> origin;
  if (j.contains("origin_map")) {
    const Json& om = Field(j, "origin_map");
    if (!om.is_object()) throw FormatError("origin_map must be an object");
    for (auto it = om.begin(); it != om.end(); ++it) {
      if (!it->is_number_unsigned()) throw FormatError("origin_map values must be naturals");
      origin.emplace_back(it.key(), it->get<std::uint32_t>());
    }
  }
  try {
    return AtomicSystem(static_cast<std::uint32_t>(n), std::move(eqs), std::move(origin));
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

Json MatroidToJson(const Matroid& m) {
  Json ground = Json::array(), circuits = Json::array();
  for (const auto& e : m.ground()) ground.push_back(e.Name());
  for (const auto& c : m.circuits()) {
    Json names = Json::array();
    for (auto e : c) names.push_back(m.ground()[e].Name());
    circuits.push_back(std::move(names));
  }
  return {{"ground", std::move(ground)},
          {"circuits", std::move(circuits)},
          {"rank3_closure", m.rank3_closure()}};
}

Matroid MatroidFromJson(const Json& j) {
  std::vector<GroundElement> ground;
  for (const auto& g : Array(Field(j, "ground"), "ground")) {
    ground.push_back(GroundElement::Parse(String(g, "ground element")));
  }
  std::vector<Circuit> circuits;
  for (const auto& c : Array(Field(j, "circuits"), "circuits")) {
    Circuit circuit;
    for (const auto& e : Array(c, "circuit")) {
      GroundElement g = GroundElement::Parse(String(e, "circuit element"));
      auto it = std::find(ground.begin(), ground.end(), g);
      if (it == ground.end()) throw FormatError("circuit element " + g.Name() + " not in ground");
      circuit.push_back(static_cast<std::uint32_t>(it - ground.begin()));
    }
    circuits.push_back(std::move(circuit));
  }
  bool closure = false;
  if (j.contains("rank3_closure")) {
    if (!j["rank3_closure"].is_boolean()) throw FormatError("rank3_closure must be a boolean");
    closure = j["rank3_closure"].get<bool>();
  }
  try {
    return Matroid(std::move(ground), std::move(circuits), closure);
  } catch (const InvalidArgument& e) {
    throw FormatError(e.what());
  }
}

Json SolutionToJson(const Assignment& a) {
  Json values = Json::object();
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!a.Has(i)) continue;
    values[std::to_string(i)] = MatrixToJson(a.Get(i))["entries"];
  }
  return {{"field", FieldToJson(a.field())},
          {"block_size", a.block_size()},
          {"assignment", std::move(values)}};
}

Assignment SolutionFromJson(const Json& j) {
  FieldSpec f = FieldFromJson(Field(j, "field"));
  std::size_t c = Natural(j, "block_size");
  Assignment out(f, c);
  out.Set(0, Matrix(f, c, c));
  const Json& values = Field(j, "assignment");
  if (!values.is_object()) throw FormatError("assignment must be an object");
  for (auto it = values.begin(); it != values.end(); ++it) {
    const std::string& key = it.key();
    if (key.empty() || key.size() > 8 ||
        key.find_first_not_of("0123456789") != std::string::npos) {
      throw FormatError("assignment key '" + key + "' is not a variable index");
    }
    out.Set(std::stoul(key), EntriesFromJson(*it, f, c, c));
  }
  return out;
}

HornSentence HornFromJson(const Json& j) {
  HornSentence h;
  std::set<std::string> seen;
  for (const auto& v : Array(Field(j, "vars"), "vars")) {
    std::string name = String(v, "variable");
    if (!IsIdentifier(name) || !seen.insert(name).second) {
      throw FormatError("bad or duplicate variable '" + name + "'");
    }
    h.vars.push_back(name);
  }
  auto pair = [&](const Json& p) {
    Array(p, "equation");
    if (p.size() != 2) throw FormatError("an equation is a pair of words");
    return std::make_pair(ParseGroupWord(String(p[0], "word"), h.vars),
                          ParseGroupWord(String(p[1], "word"), h.vars));
  };
  if (j.contains("equations")) {
    for (const auto& e : Array(j["equations"], "equations")) h.equations.push_back(pair(e));
  }
  h.implication = pair(Field(j, "implication"));
  return h;
}

Json HornToJson(const HornSentence& h) {
  Json eqs = Json::array();
  for (const auto& [a, b] : h.equations) {
    eqs.push_back({FormatGroupWord(a, h.vars), FormatGroupWord(b, h.vars)});
  }
  return {{"vars", h.vars},
          {"equations", std::move(eqs)},
          {"implication", {FormatGroupWord(h.implication.first, h.vars),
                           FormatGroupWord(h.implication.second, h.vars)}}};
}

namespace {

Json Histogram(const std::map<std::size_t, std::size_t>& h) {
  Json j = Json::object();
  for (const auto& [rank, count] : h) j[std::to_string(rank)] = count;
  return j;
}

Json Names(const std::vector<std::uint32_t>& subset, const Representation& rep) {
  Json j = Json::array();
  for (auto e : subset) j.push_back(rep.labels()[e].Name());
  return j;
}

Json RankList(const std::vector<SubsetRank>& xs, const Representation& rep) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back({{"subset", Names(x.subset, rep)}, {"rank", x.rank}});
  return j;
}

}  // namespace

Json ArrangementReportToJson(const ArrangementReport& r, const Representation& rep) {
  Json singles = Json::object();
  for (std::size_t t = 0; t < r.singleton_ranks.size(); ++t) {
    singles[rep.labels()[t].Name()] = r.singleton_ranks[t];
  }
  Json j = {{"block_size", r.block_size},
            {"ok", r.ok()},
            {"singleton_ranks", std::move(singles)},
            {"pair_histogram", Histogram(ArrangementReport::Histogram(r.pairs))},
            {"triple_histogram", Histogram(ArrangementReport::Histogram(r.triples))},
            {"pairs", RankList(r.pairs, rep)},
            {"triples", RankList(r.triples, rep)},
            {"violations", RankList(r.violations, rep)}};
  if (!r.larger.empty()) j["larger"] = RankList(r.larger, rep);
  return j;
}

Json WeylReportToJson(const WeylReport& r) {
  return {{"p", r.p},
          {"commutator_is_identity", r.commutator_is_identity},
          {"block_columns", r.columns},
          {"pair_histogram", Histogram(r.pair_ranks)},
          {"triple_histogram", Histogram(r.triple_ranks)},
          {"arrangement_ok", r.arrangement_ok},
          {"circuit_triples", r.circuit_triples},
          {"circuit_triples_rank_2p", r.circuit_triples_rank_2p},
          {"r5_x4_z1_rank", r.r5_x4_z1_rank},
          {"extra_dependent_triples", r.extra_dependent_triples},
          {"family_is_matroid", r.family_is_matroid},
          {"induced_in_family", r.induced_in_family},
          {"roundtrip_exact", r.roundtrip_exact}};
}

Json BsSearchResultToJson(const BsSearchResult& r) {
  Json witnesses = Json::array();
  for (const auto& [a, b] : r.witnesses) {
    witnesses.push_back({{"A", MatrixToJson(a)["entries"]}, {"B", MatrixToJson(b)["entries"]}});
  }
  Json j = {{"field", r.field},
            {"dim", r.dim},
            {"mode", r.mode},
            {"pairs_examined", r.pairs_examined},
            {"relator_pairs", r.relator_pairs},
            {"nontrivial_word_pairs", r.nontrivial_word_pairs},
            {"system_solutions", r.system_solutions},
            {"system_solvable", r.system_solutions > 0},
            {"witnesses", std::move(witnesses)}};
  if (r.mode == "exhaustive") j["group_order"] = r.group_order;
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace vonstaudt
