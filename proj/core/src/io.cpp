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

#include "qdc/io.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qdc {

namespace {

bool is_skippable(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;  // blank
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected integer ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line_no, std::string("trailing characters in ") + what + " '" + tok + "'");
  return value;
}

double parse_double(const std::string& tok, int line_no, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected number ") + what + ", got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(line_no, std::string("trailing characters in ") + what + " '" + tok + "'");
  return value;
}

// "key=value" -> value, or nullopt when the prefix does not match.
std::optional<std::string> strip_key(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0) return std::nullopt;
  return tok.substr(key.size() + 1);
}

}  // namespace

ClusterGraph parse_cluster_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<ClusterGraph> graph;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = tokenize(line);
    if (!graph) {
      if (tokens.size() != 2)
        throw ParseError(line_no, "header must be 'd=<int> n=<int>'");
      const auto dtok = strip_key(tokens[0], "d");
      const auto ntok = strip_key(tokens[1], "n");
      if (!dtok || !ntok)
        throw ParseError(line_no, "header must be 'd=<int> n=<int>'");
      const int d = parse_int(*dtok, line_no, "d");
      const int n = parse_int(*ntok, line_no, "n");
      if (d < 2) throw ParseError(line_no, "dimension must be >= 2");
      if (n < 1) throw ParseError(line_no, "vertex count must be >= 1");
      graph.emplace(d, n);
      continue;
    }
    if (tokens.size() != 2)
      throw ParseError(line_no, "edge line must be '<u> <v>'");
    const int u = parse_int(tokens[0], line_no, "vertex");
    const int v = parse_int(tokens[1], line_no, "vertex");
    try {
      graph->add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!graph) throw ParseError(line_no == 0 ? 1 : line_no, "missing graph header");
  return *graph;
}

ClusterGraph parse_cluster_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_cluster_graph(in);
}

ClusterGraph load_cluster_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return parse_cluster_graph(in);
}

std::string format_cluster_graph(const ClusterGraph& g) {
  std::ostringstream out;
  out << "d=" << g.dim() << " n=" << g.num_vertices() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

MeasurementPattern parse_pattern(std::istream& in) {
  MeasurementPattern pattern;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto tokens = tokenize(line);
    if (tokens[0] == "measure") {
      if (tokens.size() < 3 || tokens.size() > 4)
        throw ParseError(line_no, "measure line must be 'measure <qudit> a=<angles> [fc=<unit>]'");
      const int qudit = parse_int(tokens[1], line_no, "qudit");
      const auto atok = strip_key(tokens[2], "a");
      if (!atok) throw ParseError(line_no, "expected a=<comma-separated radians>");
      std::vector<double> angles;
      std::stringstream parts(*atok);
      std::string part;
      while (std::getline(parts, part, ','))
        angles.push_back(parse_double(part, line_no, "angle"));
      if (angles.empty()) throw ParseError(line_no, "empty phase vector");
      int fc = 1;
      if (tokens.size() == 4) {
        const auto fctok = strip_key(tokens[3], "fc");
        if (!fctok) throw ParseError(line_no, "expected fc=<unit>");
        fc = parse_int(*fctok, line_no, "fc");
      }
      pattern.add_measure(qudit, PhaseVector(std::move(angles)), fc);
    } else if (tokens[0] == "interact") {
      if (tokens.size() != 3)
        throw ParseError(line_no, "interact line must be 'interact <q1> <q2>'");
      pattern.add_interact(parse_int(tokens[1], line_no, "qudit"),
                           parse_int(tokens[2], line_no, "qudit"));
    } else {
      throw ParseError(line_no, "unknown step '" + tokens[0] + "'");
    }
  }
  return pattern;
}

MeasurementPattern parse_pattern_string(const std::string& text) {
  std::istringstream in(text);
  return parse_pattern(in);
}

MeasurementPattern load_pattern(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open pattern file: " + path);
  return parse_pattern(in);
}

std::string format_pattern(const MeasurementPattern& p) {
  std::ostringstream out;
  char buf[32];
  for (const PatternStep& step : p.steps) {
    if (std::holds_alternative<MeasureStep>(step)) {
      const auto& m = std::get<MeasureStep>(step);
      out << "measure " << m.vertex << " a=";
      for (int k = 0; k < m.base.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g", m.base[k]);
        out << (k ? "," : "") << buf;
      }
      if (m.fc != 1) out << " fc=" << m.fc;
      out << "\n";
    } else {
      const auto& it = std::get<InteractStep>(step);
      out << "interact " << it.v1 << " " << it.v2 << "\n";
    }
  }
  return out.str();
}

}  // namespace qdc
