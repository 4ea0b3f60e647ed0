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

#include "qdc/teleport.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace qdc {

namespace {

std::pair<int, int> norm_edge(int u, int v) {
  return {std::min(u, v), std::max(u, v)};
}

// CZ^power between wires (w1, w2) of a W-wire logical register.
CMatrix embed_cz_power(int d, int num_wires, int w1, int w2, int power) {
  Eigen::Index total = 1;
  for (int i = 0; i < num_wires; ++i) total *= d;
  CMatrix out = CMatrix::Zero(total, total);
  for (Eigen::Index idx = 0; idx < total; ++idx) {
    Eigen::Index rest = idx;
    int k1 = 0, k2 = 0;
    for (int q = num_wires - 1; q >= 0; --q) {
      const int dig = static_cast<int>(rest % d);
      rest /= d;
      if (q == w1) k1 = dig;
      if (q == w2) k2 = dig;
    }
    out(idx, idx) = omega_pow(d, static_cast<long long>(power) * k1 * k2);
  }
  return out;
}

struct EngineContext {
  const ClusterGraph* graph;
  const MeasurementPattern* pattern;
  WirePlan plan;
  std::vector<int> wire_of_vertex;
  std::vector<int> pos_in_wire;
  CMatrix fourier;
  CMatrix intended;  // branch-independent
};

// Mutable per-branch state.
struct BranchState {
  StateVector state;
  std::vector<int> reg_of_vertex;  // -1 once measured
  std::vector<int> carrier;        // per wire: current carrier vertex
  std::vector<bool> cross_fired;
  ErrorFrame frame;                // per wire
  std::vector<MeasurementRecord> transcript;
  double probability = 1.0;
};

EngineContext make_context(const ClusterGraph& g, const MeasurementPattern& p) {
  EngineContext ctx;
  ctx.graph = &g;
  ctx.pattern = &p;
  ctx.plan = plan_wires(g, p);
  ctx.fourier = fourier_gate(g.dim());

  const int n = g.num_vertices();
  ctx.wire_of_vertex.assign(n, -1);
  ctx.pos_in_wire.assign(n, -1);
  for (std::size_t w = 0; w < ctx.plan.rows.size(); ++w)
    for (std::size_t i = 0; i < ctx.plan.rows[w].size(); ++i) {
      ctx.wire_of_vertex[ctx.plan.rows[w][i]] = static_cast<int>(w);
      ctx.pos_in_wire[ctx.plan.rows[w][i]] = static_cast<int>(i);
    }

  // The intended gate does not depend on outcomes: the S_c exponents of
  // the frame evolve deterministically, so the residual CZ powers are
  // fixed by the pattern alone.
  const int d = g.dim();
  const int num_wires = static_cast<int>(ctx.plan.rows.size());
  Eigen::Index total = 1;
  for (int i = 0; i < num_wires; ++i) total *= d;
  CMatrix intended = CMatrix::Identity(total, total);
  std::vector<int> c(num_wires, 1);
  for (const PatternStep& step : p.steps) {
    if (std::holds_alternative<MeasureStep>(step)) {
      const auto& m = std::get<MeasureStep>(step);
      const int w = ctx.wire_of_vertex[m.vertex];
      const CMatrix gate = perm_gate_sc(unit_inverse(m.fc, d), d) * ctx.fourier *
                           phase_gate(m.base);
      intended = embed_single(gate, w, num_wires, d) * intended;
      c[w] = mod_reduce(static_cast<long long>(unit_inverse(c[w], d)) * m.fc, d);
    } else {
      const auto& it = std::get<InteractStep>(step);
      const int w1 = ctx.wire_of_vertex[it.v1];
      const int w2 = ctx.wire_of_vertex[it.v2];
      const int power = mod_reduce(static_cast<long long>(c[w1]) * c[w2], d);
      intended = embed_cz_power(d, num_wires, w1, w2, power) * intended;
    }
  }
  ctx.intended = std::move(intended);
  return ctx;
}

BranchState make_initial_branch(const EngineContext& ctx, const StateVector& input) {
  const ClusterGraph& g = *ctx.graph;
  const int num_wires = static_cast<int>(ctx.plan.rows.size());
  if (input.dim() != g.dim())
    throw std::invalid_argument("run_pattern: input dimension mismatch");
  if (input.num_qudits() != num_wires)
    throw std::invalid_argument("run_pattern: input must carry one qudit per wire (" +
                                std::to_string(num_wires) + ")");
  std::vector<int> starts(num_wires);
  for (int w = 0; w < num_wires; ++w) starts[w] = ctx.plan.rows[w].front();

  BranchState b{build_cluster_state(g, input, starts),
                std::vector<int>(g.num_vertices()),
                starts,
                std::vector<bool>(ctx.plan.cross_edges.size(), false),
                ErrorFrame(g.dim(), num_wires),
                {},
                1.0};
  for (int v = 0; v < g.num_vertices(); ++v) b.reg_of_vertex[v] = v;
  return b;
}

int find_cross_edge(const EngineContext& ctx, int u, int v) {
  const auto e = norm_edge(u, v);
  for (std::size_t i = 0; i < ctx.plan.cross_edges.size(); ++i)
    if (ctx.plan.cross_edges[i] == e) return static_cast<int>(i);
  return -1;
}

void apply_interact(const EngineContext& ctx, BranchState& b, const InteractStep& it) {
  const int w1 = ctx.wire_of_vertex[it.v1];
  const int w2 = ctx.wire_of_vertex[it.v2];
  if (b.carrier[w1] != it.v1 || b.carrier[w2] != it.v2)
    throw TopologyError("interact " + std::to_string(it.v1) + " " +
                        std::to_string(it.v2) +
                        ": both qudits must be current wire carriers");
  const int idx = find_cross_edge(ctx, it.v1, it.v2);
  if (b.cross_fired[idx])
    throw TopologyError("interaction edge fired twice");
  b.cross_fired[idx] = true;
  b.frame.commute_through_cz(w1, w2);
}

// Everything about one measurement except choosing the branch.
struct PreparedMeasurement {
  int wire;
  int reg_index;
  CMatrix basis;
};

PreparedMeasurement prepare_measurement(const EngineContext& ctx, const BranchState& b,
                                        const MeasureStep& m) {
  const int v = m.vertex;
  const int w = ctx.wire_of_vertex[v];
  if (b.carrier[w] != v)
    throw TopologyError("measurement of qudit " + std::to_string(v) +
                        " out of wire order");
  if (ctx.pos_in_wire[v] + 1 >= static_cast<int>(ctx.plan.rows[w].size()))
    throw TopologyError("qudit " + std::to_string(v) +
                        " is a wire output; it has no onward entanglement to "
                        "teleport through");
  for (const auto& [a, c] : ctx.plan.cross_edges) {
    const int idx = find_cross_edge(ctx, a, c);
    if (!b.cross_fired[idx] && (a == v || c == v))
      throw TopologyError("qudit " + std::to_string(v) +
                          " still has a pending interaction");
  }
  const PhaseVector adapted = b.frame.adapted_phase_vector(w, m.base);
  const CMatrix basis = (ctx.fourier * phase_gate(adapted)).adjoint();
  return {w, b.reg_of_vertex[v], basis};
}

void absorb_measurement(const EngineContext& ctx, BranchState& b, const MeasureStep& m,
                        const MeasurementBranch& picked) {
  const int v = m.vertex;
  const int w = ctx.wire_of_vertex[v];
  b.state = picked.state;
  b.probability *= picked.record.probability;
  MeasurementRecord rec = picked.record;
  rec.qudit = v;
  b.transcript.push_back(std::move(rec));

  const int removed = b.reg_of_vertex[v];
  b.reg_of_vertex[v] = -1;
  for (int u = 0; u < static_cast<int>(b.reg_of_vertex.size()); ++u)
    if (b.reg_of_vertex[u] > removed) --b.reg_of_vertex[u];

  b.frame.absorb_teleport(w, picked.record.outcome);
  if (m.fc != 1)
    b.frame.absorb_adaptive_fc(w, ModUnit(m.fc, ctx.graph->dim()));
  b.carrier[w] = ctx.plan.rows[w][ctx.pos_in_wire[v] + 1];
}

PatternResult finalize_branch(const EngineContext& ctx, BranchState&& b) {
  const int num_wires = static_cast<int>(ctx.plan.rows.size());
  for (int w = 0; w < num_wires; ++w)
    if (b.carrier[w] != ctx.plan.rows[w].back())
      throw TopologyError("pattern leaves wire " + std::to_string(w) +
                          " only partially measured");
  // Reorder the remaining register so wire w's output is qudit w.
  std::vector<int> perm(num_wires);
  for (int w = 0; w < num_wires; ++w) perm[w] = b.reg_of_vertex[ctx.plan.rows[w].back()];
  b.state.permute_qudits(perm);
  return PatternResult{std::move(b.state), std::move(b.frame), std::move(b.transcript),
                       ctx.intended, b.probability};
}

void run_branches(const EngineContext& ctx, BranchState b, std::size_t step_index,
                  std::vector<PatternResult>& out) {
  const auto& steps = ctx.pattern->steps;
  for (std::size_t i = step_index; i < steps.size(); ++i) {
    if (std::holds_alternative<InteractStep>(steps[i])) {
      apply_interact(ctx, b, std::get<InteractStep>(steps[i]));
      continue;
    }
    const auto& m = std::get<MeasureStep>(steps[i]);
    const PreparedMeasurement prep = prepare_measurement(ctx, b, m);
    auto branches = measure_in_basis(b.state, prep.reg_index, prep.basis);
    for (auto& picked : branches) {
      BranchState child = b;
      absorb_measurement(ctx, child, m, picked);
      run_branches(ctx, std::move(child), i + 1, out);
    }
    return;
  }
  out.push_back(finalize_branch(ctx, std::move(b)));
}

}  // namespace

WirePlan plan_wires(const ClusterGraph& g, const MeasurementPattern& p) {
  const int n = g.num_vertices();

  std::set<std::pair<int, int>> cross;
  std::set<int> measured;
  for (const PatternStep& step : p.steps) {
    if (std::holds_alternative<InteractStep>(step)) {
      const auto& it = std::get<InteractStep>(step);
      if (!g.has_edge(it.v1, it.v2))
        throw TopologyError("interact " + std::to_string(it.v1) + " " +
                            std::to_string(it.v2) + ": no such edge");
      if (!cross.insert(norm_edge(it.v1, it.v2)).second)
        throw TopologyError("edge " + std::to_string(it.v1) + "-" +
                            std::to_string(it.v2) +
                            " named by more than one interact step");
    } else {
      const auto& m = std::get<MeasureStep>(step);
      if (m.vertex < 0 || m.vertex >= n)
        throw std::invalid_argument("pattern measures vertex out of range");
      if (m.base.size() != g.dim())
        throw std::invalid_argument("pattern phase vector length != d");
      if (!is_unit(m.fc, g.dim()))
        throw NotAUnitError("pattern fc value is not a unit mod d");
      if (!measured.insert(m.vertex).second)
        throw TopologyError("qudit " + std::to_string(m.vertex) + " measured twice");
    }
  }

  // Wire links are the edges not consumed by interact steps; they must
  // chain each row as a simple open path (the obstruction of clusters
  // with branching vertices, which one-dit teleportation cannot handle).
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    if (cross.count(norm_edge(u, v))) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (int v = 0; v < n; ++v)
    if (adj[v].size() > 2)
      throw TopologyError("qudit " + std::to_string(v) + " has " +
                          std::to_string(adj[v].size()) +
                          " wire links; rows must be simple chains");

  WirePlan plan;
  plan.cross_edges.assign(cross.begin(), cross.end());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> rows;
  for (int v = 0; v < n; ++v) {
    if (seen[v] || adj[v].size() == 2) continue;  // start rows at chain ends
    std::vector<int> row{v};
    seen[v] = true;
    int prev = -1, cur = v;
    while (true) {
      int next = -1;
      for (int u : adj[cur])
        if (u != prev) next = u;
      if (next == -1) break;
      if (seen[next]) throw TopologyError("wire links form a cycle");
      row.push_back(next);
      seen[next] = true;
      prev = cur;
      cur = next;
    }
    rows.push_back(std::move(row));
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw TopologyError("wire links form a cycle");

  // Orient each row so its measured prefix starts at the left end.
  for (auto& row : rows) {
    if (row.size() == 1) {
      if (measured.count(row[0]))
        throw TopologyError("qudit " + std::to_string(row[0]) +
                            " is an isolated wire; it has no onward "
                            "entanglement to teleport through");
      continue;
    }
    const bool front_measured = measured.count(row.front()) > 0;
    const bool back_measured = measured.count(row.back()) > 0;
    if (front_measured && back_measured)
      throw TopologyError("both ends of a wire are measured; one qudit must "
                          "remain as output");
    if (!front_measured && !back_measured) {
      throw TopologyError("wire starting at qudit " + std::to_string(row.front()) +
                          " is never measured from an end");
    }
    if (back_measured) std::reverse(row.begin(), row.end());
    // All but the terminal qudit must be measured.
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      if (!measured.count(row[i]))
        throw TopologyError("wire qudit " + std::to_string(row[i]) +
                            " is skipped by the pattern");
    if (measured.count(row.back()))
      throw TopologyError("wire output qudit " + std::to_string(row.back()) +
                          " must stay unmeasured");
  }

  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  plan.rows = std::move(rows);

  // Cross edges must join distinct rows.
  std::vector<int> wire_of(n, -1);
  for (std::size_t w = 0; w < plan.rows.size(); ++w)
    for (int v : plan.rows[w]) wire_of[v] = static_cast<int>(w);
  for (const auto& [u, v] : plan.cross_edges)
    if (wire_of[u] == wire_of[v])
      throw TopologyError("interaction edge " + std::to_string(u) + "-" +
                          std::to_string(v) + " joins a wire to itself");
  return plan;
}

std::vector<PatternResult> run_pattern(const StateVector& input, const ClusterGraph& g,
                                       const MeasurementPattern& p) {
  const EngineContext ctx = make_context(g, p);
  std::vector<PatternResult> out;
  run_branches(ctx, make_initial_branch(ctx, input), 0, out);
  return out;
}

std::vector<PatternResult> run_pattern(const ClusterGraph& g,
                                       const MeasurementPattern& p) {
  const EngineContext ctx = make_context(g, p);
  const StateVector input =
      StateVector::all_plus(g.dim(), static_cast<int>(ctx.plan.rows.size()));
  std::vector<PatternResult> out;
  run_branches(ctx, make_initial_branch(ctx, input), 0, out);
  return out;
}

PatternResult run_pattern_sampled(const StateVector& input, const ClusterGraph& g,
                                  const MeasurementPattern& p, std::uint64_t seed) {
  const EngineContext ctx = make_context(g, p);
  BranchState b = make_initial_branch(ctx, input);
  Rng rng(seed);
  for (const PatternStep& step : p.steps) {
    if (std::holds_alternative<InteractStep>(step)) {
      apply_interact(ctx, b, std::get<InteractStep>(step));
      continue;
    }
    const auto& m = std::get<MeasureStep>(step);
    const PreparedMeasurement prep = prepare_measurement(ctx, b, m);
    const MeasurementBranch picked =
        measure_sampled(b.state, prep.reg_index, prep.basis, rng);
    absorb_measurement(ctx, b, m, picked);
  }
  return finalize_branch(ctx, std::move(b));
}

PhaseComparison check_frame_soundness(const PatternResult& r, const StateVector& input,
                                      double tol) {
  const CVector corrected = r.frame.realize().adjoint() * r.state.amplitudes();
  const CVector target = r.intended * input.amplitudes();
  return equal_up_to_phase(corrected, target, tol);
}

std::vector<MeasurementBranch> one_dit_teleport_branches(const StateVector& psi,
                                                         const PhaseVector& a) {
  if (psi.num_qudits() != 1)
    throw std::invalid_argument("one_dit_teleport: psi must be a single qudit");
  const int d = psi.dim();
  StateVector pair = psi.tensor(StateVector::single(d, plus_state(d)));
  pair.apply_cz(0, 1);
  const CMatrix basis = (fourier_gate(d) * phase_gate(a)).adjoint();
  return measure_in_basis(pair, 0, basis);
}

StateVector one_dit_teleport(const StateVector& psi, const PhaseVector& a,
                             int outcome) {
  for (auto& b : one_dit_teleport_branches(psi, a))
    if (b.record.outcome == outcome) return std::move(b.state);
  throw std::invalid_argument("one_dit_teleport: outcome out of range");
}

}  // namespace qdc
