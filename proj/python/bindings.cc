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

// Python bindings. Structured values cross the boundary as canonical JSON
// text; the package's __init__ converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "vonstaudt/atomic.h"
#include "vonstaudt/casebook.h"
#include "vonstaudt/error.h"
#include "vonstaudt/json_io.h"
#include "vonstaudt/matrix.h"
#include "vonstaudt/ncring.h"
#include "vonstaudt/represent.h"
#include "vonstaudt/staudt.h"

namespace py = pybind11;

namespace vonstaudt {
namespace {

UnitCircuits ParseUnit(const std::string& s) {
  if (s == "none") return UnitCircuits::kNone;
  if (s == "right") return UnitCircuits::kRightUnit;
  if (s == "left") return UnitCircuits::kLeftUnit;
  if (s == "both") return UnitCircuits::kBoth;
  throw InvalidArgument("unit must be none, right, left or both");
}

SweepDepth ParseSweep(const std::string& s) {
  if (s == "2") return SweepDepth::kPairs;
  if (s == "3") return SweepDepth::kTriples;
  if (s == "all") return SweepDepth::kAll;
  throw InvalidArgument("sweep must be 2, 3 or all");
}

std::string AtomicizeText(const std::string& text) {
  return AtomicToJson(Atomicize(ParseSystem(text))).dump();
}

std::string BuildMatroidJson(const std::string& atomic, const std::string& unit) {
  Matroid m = BuildCircuits(AtomicFromJson(ParseJson(atomic)), ParseUnit(unit));
  MatroidCheck check = CheckMatroid(m);
  Json j = {{"matroid", MatroidToJson(m)}, {"is_matroid", check.is_matroid}};
  auto names = [&](const Circuit& c) {
    Json out = Json::array();
    for (auto e : c) out.push_back(m.ground()[e].Name());
    return out;
  };
  if (check.first) j["first"] = names(*check.first);
  if (check.second) j["second"] = names(*check.second);
  if (!check.pivots.empty()) j["pivots"] = names(check.pivots);
  return j.dump();
}

std::string RepresentJson(const std::string& atomic, const std::string& solution) {
  AtomicSystem a = AtomicFromJson(ParseJson(atomic));
  Assignment s = SolutionFromJson(ParseJson(solution));
  return RepresentationToJson(BuildRepresentation(a, s), &a).dump();
}

std::string VerifyJson(const std::string& rep_text, const std::string& sweep,
                       unsigned jobs, const std::optional<std::string>& atomic_text) {
  Json in = ParseJson(rep_text);
  Representation r = RepresentationFromJson(in);
  ArrangementReport report = VerifyArrangement(r, ParseSweep(sweep), jobs);
  Json j = {{"arrangement", ArrangementReportToJson(report, r)}, {"ok", report.ok()}};
  if (!report.ok() || ParseSweep(sweep) == SweepDepth::kPairs) return j.dump();
  Matroid induced = InducedMatroid(r, report);
  j["induced_matroid"] = MatroidToJson(induced);
  std::optional<AtomicSystem> a;
  if (atomic_text) {
    a = AtomicFromJson(ParseJson(*atomic_text));
  } else if (in.contains("atomic")) {
    a = AtomicFromJson(in["atomic"]);
  }
  if (a) {
    FamilyCheck f = InFamily(induced, *a);
    j["in_family"] = f.member;
    j["ok"] = f.member;
  }
  return j.dump();
}

std::string ExtractJson(const std::string& rep, const std::string& atomic) {
  return SolutionToJson(ExtractSolution(RepresentationFromJson(ParseJson(rep)),
                                        AtomicFromJson(ParseJson(atomic))))
      .dump();
}

std::string BsJson(const std::string& field, std::size_t dim, const std::string& mode,
                   std::size_t count, std::uint64_t seed, unsigned jobs) {
  if (mode != "exhaustive" && mode != "random") {
    throw InvalidArgument("mode must be exhaustive or random");
  }
  SearchMode m = mode == "random" ? SearchMode::kRandom : SearchMode::kExhaustive;
  return BsSearchResultToJson(BsSearch(FieldSpec::Parse(field), dim, m, count, seed, jobs))
      .dump();
}

std::string HornJson(const std::string& horn) {
  HornSentence h = HornFromJson(ParseJson(horn));
  Json cases = Json::array();
  for (const HornCase& hc : HornReduce(h)) {
    Json zero = Json::array();
    for (auto v : hc.zero_vars) zero.push_back(h.vars[v]);
    cases.push_back({{"zero_vars", std::move(zero)},
                     {"equations", hc.equations},
                     {"system", SerializeSystem(hc.system)}});
  }
  return cases.dump();
}

Matrix EntriesMatrix(const std::vector<std::vector<std::string>>& rows, const FieldSpec& f) {
  Json j = Json::array();
  for (const auto& r : rows) j.push_back(r);
  return MatrixFromJson(j, f);
}

BlockShape ParseShape(const std::string& s) {
  if (s == "i") return BlockShape::kI;
  if (s == "ii") return BlockShape::kII;
  if (s == "iii") return BlockShape::kIII;
  throw InvalidArgument("shape must be i, ii or iii");
}

}  // namespace
}  // namespace vonstaudt

PYBIND11_MODULE(_vonstaudt, m) {
  using namespace vonstaudt;
  m.doc() = "von Staudt constructions and exact matroid representations";

  // Translators run newest first, so the base class is registered first.
  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<DivisionByZero>(m, "DivisionByZero", error.ptr());
  py::register_exception<VerificationError>(m, "VerificationError", error.ptr());

  m.def("atomicize", &AtomicizeText, py::arg("text"));
  m.def("build_matroid", &BuildMatroidJson, py::arg("atomic"), py::arg("unit") = "right");
  m.def("represent", &RepresentJson, py::arg("atomic"), py::arg("solution"));
  m.def("verify", &VerifyJson, py::arg("rep"), py::arg("sweep") = "3", py::arg("jobs") = 1,
        py::arg("atomic") = std::nullopt, py::call_guard<py::gil_scoped_release>());
  m.def("extract", &ExtractJson, py::arg("rep"), py::arg("atomic"));
  m.def(
      "weyl",
      [](std::uint32_t p, unsigned jobs) { return WeylReportToJson(WeylStudy(p, jobs)).dump(); },
      py::arg("p"), py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("bs_search", &BsJson, py::arg("field"), py::arg("dim"), py::arg("mode") = "exhaustive",
        py::arg("count") = 1000, py::arg("seed") = 0, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("horn_reduce", &HornJson, py::arg("horn"));
  m.def(
      "rank",
      [](const std::vector<std::vector<std::string>>& rows, const std::string& field) {
        return Rank(EntriesMatrix(rows, FieldSpec::Parse(field)));
      },
      py::arg("rows"), py::arg("field"));
  m.def(
      "lemma_block_rank",
      [](const std::string& shape, const std::vector<std::vector<std::string>>& m1,
         const std::vector<std::vector<std::string>>& m2,
         const std::vector<std::vector<std::string>>& m3, const std::string& field) {
        FieldSpec f = FieldSpec::Parse(field);
        Matrix a = EntriesMatrix(m1, f), b = EntriesMatrix(m2, f), c = EntriesMatrix(m3, f);
        return std::make_pair(LemmaBlockRank(ParseShape(shape), a, b, c),
                              Rank(AssembleLemmaBlock(ParseShape(shape), a, b, c)));
      },
      py::arg("shape"), py::arg("m1"), py::arg("m2"), py::arg("m3"), py::arg("field"));
  m.def(
      "trace_obstruction",
      [](std::size_t c, const std::string& field) {
        return TraceObstruction(c, FieldSpec::Parse(field));
      },
      py::arg("c"), py::arg("field"));
}
