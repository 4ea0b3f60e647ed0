// Copyright 2026 The quditcluster authors
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

#ifndef QDC_IO_HPP
#define QDC_IO_HPP

#include <iosfwd>
#include <string>

#include "qdc/cluster.hpp"
#include "qdc/teleport.hpp"

namespace qdc {

// Graph file format:
//   line 1:  d=<int> n=<int>
//   then one edge per line: <u> <v>  (0-indexed)
// Lines starting with '#' and blank lines are skipped. Duplicate edges and
// self-loops are parse errors (ParseError with the 1-based line number).
ClusterGraph parse_cluster_graph(std::istream& in);
ClusterGraph parse_cluster_graph_string(const std::string& text);
ClusterGraph load_cluster_graph(const std::string& path);
std::string format_cluster_graph(const ClusterGraph& g);

// Pattern file format, one step per line:
//   measure <qudit> a=<comma-separated radians> [fc=<unit>]
//   interact <q1> <q2>
// Lines starting with '#' and blank lines are skipped.
MeasurementPattern parse_pattern(std::istream& in);
MeasurementPattern parse_pattern_string(const std::string& text);
MeasurementPattern load_pattern(const std::string& path);
std::string format_pattern(const MeasurementPattern& p);

}  // namespace qdc

#endif  // QDC_IO_HPP
