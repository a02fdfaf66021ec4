// Copyright 2026 The ftcons Authors
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

#ifndef FTCONS_IO_HPP_
#define FTCONS_IO_HPP_

#include <filesystem>
#include <string>

#include "json.hpp"

#include "ftcons/analysis.hpp"
#include "ftcons/constructor.hpp"
#include "ftcons/graph.hpp"
#include "ftcons/rational.hpp"
#include "ftcons/ratlinalg.hpp"
#include "ftcons/simulate.hpp"

namespace ftcons::io {

// Insertion-ordered so that serialized reports are byte-stable.
using Json = nlohmann::ordered_json;

// Readers take `source` (usually the file name) for diagnostics and throw
// FormatError naming source, JSON location, and the expected schema.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where);

// Row-major array of arrays of rational strings.
Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j, const std::string& where);

// {"n": int, "arcs": [[from, to], ...]}; optional "undirected": true adds
// both directions of every listed pair.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j, const std::string& source);

// {"n": int, "matrices": [matrix, ...]}
Json sequence_to_json(const MatrixSequence& seq);
MatrixSequence sequence_from_json(const Json& j, const std::string& source);

// {"x": [rational, ...]}
Json vector_to_json(const RationalVector& x);
RationalVector vector_from_json(const Json& j, const std::string& source);

// {"weights": [rational, ...]}
Json weights_to_json(const WeightVector& w);
WeightVector weights_from_json(const Json& j, const std::string& source);

Json verdict_to_json(const FeasibilityVerdict& v);
Json verification_to_json(const VerificationReport& r);
Json certificate_to_json(const SignWalk& walk);
Json evidence_to_json(const CycleEvidenceReport& r);
Json trajectory_to_json(const Trajectory<Rational>& t);
Json trajectory_to_json(const Trajectory<double>& t);
Json demo_to_json(const DemoReport& r);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace ftcons::io

#endif  // FTCONS_IO_HPP_
