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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "vonstaudt/atomic.h"
#include "vonstaudt/casebook.h"
#include "vonstaudt/error.h"
#include "vonstaudt/json_io.h"
#include "vonstaudt/ncring.h"
#include "vonstaudt/represent.h"
#include "vonstaudt/staudt.h"

namespace vonstaudt::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "io_error"; }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json ReadJson(const std::string& path) { return ParseJson(ReadFile(path)); }

void WriteError(std::ostream& err, const std::string& kind, const std::string& message) {
  err << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

struct Options {
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string output;
  std::string unit = "right";
  std::vector<std::string> files;
  std::string sweep = "3";
  std::uint32_t p = 2;
  std::string field = "F2";
  std::size_t dim = 2;
  std::string mode = "exhaustive";
  std::size_t count = 1000;
  std::size_t limit = 10'000'000;
  std::string search_field;
};

UnitCircuits ParseUnit(const std::string& s) {
  if (s == "none") return UnitCircuits::kNone;
  if (s == "right") return UnitCircuits::kRightUnit;
  if (s == "left") return UnitCircuits::kLeftUnit;
  return UnitCircuits::kBoth;
}

Json CircuitNames(const Matroid& m, const Circuit& c) {
  Json j = Json::array();
  for (auto e : c) j.push_back(m.ground()[e].Name());
  return j;
}

Json MatroidCheckToJson(const Matroid& m, const MatroidCheck& check) {
  Json j = {{"is_matroid", check.is_matroid}};
  if (check.first) j["first"] = CircuitNames(m, *check.first);
  if (check.second) j["second"] = CircuitNames(m, *check.second);
  if (!check.pivots.empty()) j["pivots"] = CircuitNames(m, check.pivots);
  return j;
}

Json FamilyCheckToJson(const FamilyCheck& f) {
  Json failures = Json::array();
  for (const auto& [cond, msg] : f.failures) {
    failures.push_back({{"condition", cond}, {"message", msg}});
  }
  return {{"member", f.member}, {"failures", std::move(failures)}};
}

int Atomicize(const Options& o, Json& report) {
  NCSystem s = ParseSystem(ReadFile(o.files.at(0)));
  report = AtomicToJson(vonstaudt::Atomicize(s));
  return kExitOk;
}

int BuildMatroid(const Options& o, Json& report) {
  AtomicSystem a = AtomicFromJson(ReadJson(o.files.at(0)));
  Matroid m = BuildCircuits(a, ParseUnit(o.unit));
  MatroidCheck check = CheckMatroid(m);
  report = {{"matroid", MatroidToJson(m)}, {"check", MatroidCheckToJson(m, check)},
            {"is_matroid", check.is_matroid}};
  return check.is_matroid ? kExitOk : kExitVerificationFailed;
}

int Represent(const Options& o, Json& report) {
  AtomicSystem a = AtomicFromJson(ReadJson(o.files.at(0)));
  Assignment sol = SolutionFromJson(ReadJson(o.files.at(1)));
  report = RepresentationToJson(BuildRepresentation(a, sol), &a);
  return kExitOk;
}

int Verify(const Options& o, Json& report) {
  Json in = ReadJson(o.files.at(0));
  Representation r = RepresentationFromJson(in);
  SweepDepth depth = o.sweep == "2" ? SweepDepth::kPairs
                     : o.sweep == "3" ? SweepDepth::kTriples
                                      : SweepDepth::kAll;
  ArrangementReport arrangement = VerifyArrangement(r, depth, o.jobs);
  report = {{"arrangement", ArrangementReportToJson(arrangement, r)}};
  bool ok = arrangement.ok();
  if (!ok || depth == SweepDepth::kPairs) {
    report["ok"] = ok;
    return ok ? kExitOk : kExitVerificationFailed;
  }
  Matroid induced = InducedMatroid(r, arrangement);
  report["induced_matroid"] = MatroidToJson(induced);
  std::optional<AtomicSystem> atomic;
  if (o.files.size() > 1) {
    atomic = AtomicFromJson(ReadJson(o.files[1]));
  } else if (in.contains("atomic")) {
    atomic = AtomicFromJson(in["atomic"]);
  }
  if (atomic) {
    if (StaudtGround(*atomic) != r.labels()) {
      throw FormatError("representation labels do not match the atomic system's ground set");
    }
    FamilyCheck fam = InFamily(induced, *atomic, ParseUnit(o.unit));
    report["in_family"] = FamilyCheckToJson(fam);
    ok = ok && fam.member;
  }
  report["ok"] = ok;
  return ok ? kExitOk : kExitVerificationFailed;
}

int Extract(const Options& o, Json& report) {
  Representation r = RepresentationFromJson(ReadJson(o.files.at(0)));
  AtomicSystem a = AtomicFromJson(ReadJson(o.files.at(1)));
  if (StaudtGround(a) != r.labels()) {
    throw FormatError("representation labels do not match the atomic system's ground set");
  }
  report = SolutionToJson(ExtractSolution(r, a));
  return kExitOk;
}

int Weyl(const Options& o, Json& report) {
  WeylReport w = WeylStudy(o.p, o.jobs);
  report = WeylReportToJson(w);
  bool ok = w.commutator_is_identity && w.arrangement_ok && w.circuit_triples_rank_2p &&
            w.family_is_matroid && w.induced_in_family && w.roundtrip_exact;
  return ok ? kExitOk : kExitVerificationFailed;
}

int Bs(const Options& o, Json& report) {
  FieldSpec f = FieldSpec::Parse(o.field);
  SearchMode mode = o.mode == "random" ? SearchMode::kRandom : SearchMode::kExhaustive;
  report = BsSearchResultToJson(BsSearch(f, o.dim, mode, o.count, o.seed, o.jobs));
  return kExitOk;
}

int HornReduceCmd(const Options& o, Json& report) {
  HornSentence h = HornFromJson(ReadJson(o.files.at(0)));
  std::optional<FieldSpec> field;
  if (!o.search_field.empty()) field = FieldSpec::Parse(o.search_field);
  Json cases = Json::array();
  bool any_solvable = false;
  for (const HornCase& hc : HornReduce(h)) {
    Json zero = Json::array();
    for (auto v : hc.zero_vars) zero.push_back(h.vars[v]);
    AtomicSystem a = vonstaudt::Atomicize(hc.system);
    Matroid m = BuildCircuits(a, ParseUnit(o.unit));
    Json c = {{"zero_vars", std::move(zero)},
              {"equations", hc.equations},
              {"system", SerializeSystem(hc.system)},
              {"inverse_names", hc.inverse_names},
              {"witness", hc.witness_name},
              {"atomic", AtomicToJson(a)},
              {"ground_size", m.ground().size()},
              {"circuits", m.circuits().size()},
              {"is_matroid", IsMatroid(m)}};
    if (field) {
      std::optional<Assignment> sol = HornCaseSearch(h, hc, *field, o.dim, o.limit);
      c["solvable"] = sol.has_value();
      if (sol) {
        Json values = Json::object();
        for (std::size_t i = 0; i < hc.system.names().size(); ++i) {
          values[hc.system.names()[i]] = MatrixToJson(sol->Get(i))["entries"];
        }
        c["solution"] = std::move(values);
      }
      any_solvable = any_solvable || sol.has_value();
    }
    cases.push_back(std::move(c));
  }
  report = {{"sentence", HornToJson(h)}, {"cases", std::move(cases)}};
  if (field) {
    report["search"] = {{"field", field->ToString()}, {"dim", o.dim}};
    report["sentence_false"] = any_solvable;
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"von Staudt constructions and matroid representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "parallel sweep workers")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized searches");
  app.add_option("-o,--output", o.output, "write the report here instead of stdout");

  auto unit_option = [&](CLI::App* sub) {
    sub->add_option("--unit-circuits", o.unit, "identities with X_1 added as circuits")
        ->check(CLI::IsMember({"none", "right", "left", "both"}));
  };

  std::map<CLI::App*, int (*)(const Options&, Json&)> handlers;
  auto* atomicize = app.add_subcommand("atomicize", "equation file -> atomic system JSON");
  atomicize->add_option("input", o.files, "equation file")->required()->expected(1);
  handlers[atomicize] = Atomicize;

  auto* build = app.add_subcommand("build-matroid", "atomic JSON -> circuits and matroid check");
  build->add_option("atomic", o.files, "atomic system JSON")->required()->expected(1);
  unit_option(build);
  handlers[build] = BuildMatroid;

  auto* represent = app.add_subcommand("represent", "atomic JSON + solution JSON -> representation");
  represent->add_option("files", o.files, "atomic.json solution.json")->required()->expected(2);
  handlers[represent] = Represent;

  auto* verify = app.add_subcommand("verify", "rank sweep, induced matroid, family membership");
  verify->add_option("files", o.files, "rep.json [atomic.json]")->required()->expected(1, 2);
  verify->add_option("--sweep", o.sweep, "subset depth")
      ->check(CLI::IsMember({"2", "3", "all"}));
  unit_option(verify);
  handlers[verify] = Verify;

  auto* extract = app.add_subcommand("extract", "representation + atomic JSON -> solution");
  extract->add_option("files", o.files, "rep.json atomic.json")->required()->expected(2);
  handlers[extract] = Extract;

  auto* weyl = app.add_subcommand("weyl", "Weyl matrices, rank sweep and round trip");
  weyl->add_option("--p", o.p, "prime")->required()->check(CLI::PositiveNumber);
  handlers[weyl] = Weyl;

  auto* bs = app.add_subcommand("bs", "search matrix pairs satisfying B A^2 B^-1 = A^3");
  bs->add_option("--field", o.field, "Q or F<p>")->required();
  bs->add_option("--dim", o.dim, "matrix size")->required()->check(CLI::PositiveNumber);
  bs->add_option("--mode", o.mode)->check(CLI::IsMember({"exhaustive", "random"}));
  bs->add_option("--count", o.count, "pairs drawn in random mode")->check(CLI::PositiveNumber);
  handlers[bs] = Bs;

  auto* horn = app.add_subcommand("horn-reduce", "Horn sentence JSON -> case systems");
  horn->add_option("horn", o.files, "Horn sentence JSON")->required()->expected(1);
  horn->add_option("--field", o.search_field, "search each case over this prime field");
  horn->add_option("--dim", o.dim, "matrix size for --field")->check(CLI::PositiveNumber);
  horn->add_option("--limit", o.limit, "search guard")->check(CLI::PositiveNumber);
  unit_option(horn);
  handlers[horn] = HornReduceCmd;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    WriteError(err, "usage_error", e.what());
    return kExitMalformedInput;
  }

  try {
    Json report;
    int code = kExitMalformedInput;
    for (auto& [sub, fn] : handlers) {
      if (sub->parsed()) code = fn(o, report);
    }
    std::string text = Dump(report);
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output, std::ios::binary);
      if (!file) throw IoError("cannot write '" + o.output + "'");
      file << text;
    }
    return code;
  } catch (const VerificationError& e) {
    WriteError(err, e.code(), e.what());
    return kExitVerificationFailed;
  } catch (const Error& e) {
    WriteError(err, e.code(), e.what());
    return kExitMalformedInput;
  } catch (const Json::exception& e) {
    WriteError(err, "malformed_input", e.what());
    return kExitMalformedInput;
  }
}

}  // namespace vonstaudt::cli
