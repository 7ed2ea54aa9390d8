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

// JSON encodings of the library's values. Objects use sorted keys and field
// elements are strings, so dumps are canonical.

#ifndef VONSTAUDT_JSON_IO_H_
#define VONSTAUDT_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "vonstaudt/atomic.h"
#include "vonstaudt/casebook.h"
#include "vonstaudt/matrix.h"
#include "vonstaudt/represent.h"
#include "vonstaudt/staudt.h"

namespace vonstaudt {

using Json = nlohmann::json;

// Readers throw FormatError on shape errors and ParseError on bad entries.

Json FieldToJson(const FieldSpec& f);
FieldSpec FieldFromJson(const Json& j);

// {"field", "block_size", "rows", "cols", "entries": [[string]]}
Json MatrixToJson(const Matrix& m, std::size_t block_size = 1);
BlockMatrix BlockMatrixFromJson(const Json& j);
Matrix MatrixFromJson(const Json& j, const FieldSpec& f);

// Matrix object plus "labels"; "atomic" when given.
Json RepresentationToJson(const Representation& r, const AtomicSystem* atomic = nullptr);
Representation RepresentationFromJson(const Json& j);

// {"N", "equations": [{"op", "i", "j", "k"}], "origin_map": {name: index}}
Json AtomicToJson(const AtomicSystem& a);
AtomicSystem AtomicFromJson(const Json& j);

// {"ground": [name], "circuits": [[name]], "rank3_closure": bool}
Json MatroidToJson(const Matroid& m);
Matroid MatroidFromJson(const Json& j);

// {"field", "block_size", "assignment": {"<index>": [[string]]}} covering
// slots 1..size-1; slot 0 is implicitly zero.
Json SolutionToJson(const Assignment& a);
Assignment SolutionFromJson(const Json& j);

// {"vars": [name], "equations": [[word, word]], "implication": [word, word]}
HornSentence HornFromJson(const Json& j);
Json HornToJson(const HornSentence& h);

Json ArrangementReportToJson(const ArrangementReport& r, const Representation& rep);
Json WeylReportToJson(const WeylReport& r);
Json BsSearchResultToJson(const BsSearchResult& r);

// Two-space indentation and a trailing newline.
std::string Dump(const Json& j);
// Wraps nlohmann parse errors as FormatError.
Json ParseJson(const std::string& text);

}  // namespace vonstaudt

#endif  // VONSTAUDT_JSON_IO_H_
