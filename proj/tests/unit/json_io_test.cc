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

#include <gtest/gtest.h>

#include <random>

#include "random_instances.h"
#include "vonstaudt/error.h"

namespace vonstaudt {
namespace {

TEST(FieldJsonTest, RoundTrip) {
  for (const FieldSpec& f : {FieldSpec::Rationals(), FieldSpec::PrimeField(7),
                             FieldSpec::RationalFunctions(3, "a", "b")}) {
    EXPECT_EQ(FieldFromJson(FieldToJson(f)), f);
  }
  EXPECT_THROW(FieldFromJson(Json{{"kind", "Fp"}, {"p", 4}}), FormatError);
  EXPECT_THROW(FieldFromJson(Json{{"kind", "R"}}), FormatError);
  EXPECT_THROW(FieldFromJson(Json{{"kind", "Fp"}}), FormatError);
}

TEST(MatrixJsonTest, EntriesAreStrings) {
  FieldSpec q = FieldSpec::Rationals();
  Matrix m = Matrix::FromEntries(q, 1, 2, {Scalar::Parse(q, "-3/4"), Scalar::Parse(q, "2")});
  Json j = MatrixToJson(m);
  EXPECT_EQ(j["entries"], Json::parse(R"([["-3/4","2"]])"));
  EXPECT_EQ(MatrixFromJson(j["entries"], q), m);
  EXPECT_EQ(MatrixFromJson(Json::parse("[[1, -2]]"), q),
            Matrix::FromIntegers(q, {{1, -2}}));
}

TEST(MatrixJsonTest, TruncatedBlockMatrix) {
  Json j = RepresentationToJson(WeylRepresentation(2));
  j["entries"].erase(j["entries"].size() - 1);
  EXPECT_THROW(RepresentationFromJson(j), FormatError);
  j["rows"] = 5;
  try {
    RepresentationFromJson(j);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_STREQ(e.what(), "block rows != 3");
  }
}

TEST(MatrixJsonTest, BadEntries) {
  Json j = RepresentationToJson(WeylRepresentation(2));
  j["entries"][0][0] = "l+";
  EXPECT_THROW(RepresentationFromJson(j), ParseError);
  j["entries"][0][0] = true;
  EXPECT_THROW(RepresentationFromJson(j), FormatError);
  j = RepresentationToJson(WeylRepresentation(2));
  j["labels"][0] = "w1";
  EXPECT_THROW(RepresentationFromJson(j), FormatError);
}

TEST(RepresentationJsonTest, RoundTripIsCanonical) {
  Representation r = WeylRepresentation(3);
  std::string text = Dump(RepresentationToJson(r));
  Representation back = RepresentationFromJson(ParseJson(text));
  EXPECT_EQ(back, r);
  EXPECT_EQ(Dump(RepresentationToJson(back)), text);
}

TEST(AtomicJsonTest, RoundTrip) {
  AtomicSystem a = WeylSystem();
  Json j = AtomicToJson(a);
  EXPECT_EQ(j["equations"][0], Json::parse(R"({"i":4,"j":2,"k":3,"op":"mul"})"));
  EXPECT_EQ(j["origin_map"], Json::parse(R"({"X":2,"Y":3})"));
  EXPECT_EQ(AtomicFromJson(j), a);
  j["equations"][0]["i"] = 9;
  EXPECT_THROW(AtomicFromJson(j), FormatError);
  j["equations"][0]["i"] = -1;
  EXPECT_THROW(AtomicFromJson(j), FormatError);
  j["equations"][0]["i"] = 4;
  j["equations"][0]["op"] = "sub";
  EXPECT_THROW(AtomicFromJson(j), FormatError);
}

TEST(MatroidJsonTest, RoundTrip) {
  Matroid m = BuildCircuits(WeylSystem());
  Json j = MatroidToJson(m);
  EXPECT_EQ(j["rank3_closure"], true);
  EXPECT_EQ(j["ground"].size(), 19u);
  EXPECT_EQ(MatroidFromJson(j), m);
  j["circuits"][0][0] = "x9";
  EXPECT_THROW(MatroidFromJson(j), FormatError);
}

TEST(SolutionJsonTest, RoundTrip) {
  std::mt19937_64 rng(71);
  for (const FieldSpec& f : {FieldSpec::Rationals(), FieldSpec::PrimeField(5)}) {
    auto s = testing::RandomSolvedSystem(rng, f, 2, 2, 3);
    Json j = SolutionToJson(s.solution);
    EXPECT_FALSE(j["assignment"].contains("0"));
    EXPECT_EQ(SolutionFromJson(j), s.solution);
  }
  Json bad = SolutionToJson(WeylSolution(WeylMatrices(2)));
  bad["assignment"]["x"] = bad["assignment"]["1"];
  EXPECT_THROW(SolutionFromJson(bad), FormatError);
}

TEST(HornJsonTest, RoundTrip) {
  Json j = Json::parse(R"({"vars":["x","y"],"equations":[["x*y","y*x"]],
                           "implication":["x*x^-1","1"]})");
  HornSentence h = HornFromJson(j);
  EXPECT_EQ(HornToJson(h), j);
  j["vars"] = {"x", "x"};
  EXPECT_THROW(HornFromJson(j), FormatError);
}

TEST(ReportJsonTest, NoFloatingPoint) {
  Json j = WeylReportToJson(WeylStudy(2));
  std::function<void(const Json&)> walk = [&](const Json& v) {
    EXPECT_FALSE(v.is_number_float());
    if (v.is_structured()) {
      for (const auto& c : v) walk(c);
    }
  };
  walk(j);
  EXPECT_EQ(j["pair_histogram"], Json::parse(R"({"4":171})"));
}

TEST(ParseJsonTest, WrapsSyntaxErrors) {
  EXPECT_THROW(ParseJson("{"), FormatError);
  EXPECT_EQ(Dump(ParseJson(R"({"b":1,"a":[]})")), "{\n  \"a\": [],\n  \"b\": 1\n}\n");
}

}  // namespace
}  // namespace vonstaudt
