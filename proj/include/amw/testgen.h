// Copyright 2026 The AMW Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test derivation from statecharts.
//
// Exploration runs the interpreter breadth-first over concrete
// configurations (the whole object store, subject state included) starting
// from a seed configuration, firing every trigger with every argument tuple
// of a finite parameter domain. Tests for state, transition or bounded-path
// goals replay the shortest stimulus sequence found for their goal.

#ifndef AMW_TESTGEN_H_
#define AMW_TESTGEN_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "amw/diagnostic.h"
#include "amw/model.h"
#include "amw/value.h"

namespace amw {

enum class CoverageKind { kState, kTransition, kPath };

std::string_view CoverageKindName(CoverageKind kind);
std::optional<CoverageKind> ParseCoverageKind(std::string_view text);

struct TestgenOptions {
  CoverageKind kind = CoverageKind::kTransition;
  int k = 3;                 // path length bound; exploration depth is k * |transitions|
  std::int64_t int_bound = 8;  // Int parameters range over [-int_bound, int_bound]
  std::size_t node_cap = 10000;
  // Configuration holding exactly one object of the chart's class. When
  // absent, a single `subject` object with default slots is used.
  std::optional<std::string> seed_config;
};

// Candidate arguments for one parameter type: Bool {false, true}; Int
// [-B, B]; String "" plus every string literal in the chart's guards and in
// the seed configuration; class types the compatible seed objects. Sets have
// no candidates.
std::vector<ObjectValue> ParamDomain(const Model& model, const Statechart& chart,
                                     const ObjectConfiguration& seed, const TypeRef& type,
                                     std::int64_t int_bound);

struct Stimulus {
  std::string method;
  std::vector<ObjectValue> args;
};

struct GraphNode {
  ObjectStore store;
  std::string state;  // the subject's
  int depth = 0;
  std::optional<std::size_t> parent_edge;  // edge that discovered the node
};

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Stimulus stimulus;
  std::size_t transition = 0;     // fired by the stimulus itself
  std::set<std::size_t> fired;   // every transition of the chart fired on the way
};

struct ReachabilityGraph {
  std::string chart;
  ObjectConfiguration seed;
  std::string subject;  // seed object name
  std::vector<GraphNode> nodes;  // breadth-first order; nodes[0] is the seed
  std::vector<GraphEdge> edges;  // in discovery order
  bool exploded = false;         // node cap hit; the graph is partial
  int max_depth = 0;

  // Shortest known stimulus sequence from the seed to `node`.
  std::vector<Stimulus> PathTo(std::size_t node) const;
  std::set<std::size_t> DiscoveredTransitions() const;
};

// Errors: E_UNKNOWN_CHART, E_UNKNOWN_CONFIG, E_BAD_SEED,
// E_ABSTRACT_INSTANTIATION.
Expected<ReachabilityGraph> Explore(const Model& model, const std::string& chart,
                                    const TestgenOptions& options);

struct GeneratedTest {
  std::string name;
  std::string goal;  // e.g. "state LoggedIn", "transition Off -> Low on up"
  std::vector<std::size_t> transitions;  // goal transitions (one for transition goals)
  std::vector<Stimulus> stimuli;
  std::string expected_state;
  bool coverable = true;
  std::string reason;  // why not coverable
};

struct TestgenResult {
  ReachabilityGraph graph;
  std::vector<GeneratedTest> tests;
  // The `// GEN-BEGIN` ... `// GEN-END` region holding one objects,
  // sequence and test block per coverable test and one comment line per
  // uncoverable goal.
  std::string region;
  DiagnosticList warnings;  // W_EXPLOSION when the graph is partial
};

Expected<TestgenResult> Derive(const Model& model, const std::string& chart,
                               const TestgenOptions& options);

// `<chart>_gen.amw`
std::string GeneratedFileName(const std::string& chart);

// Replaces the generated region of `existing` (or appends one) and keeps
// everything outside the markers.
std::string MergeGeneratedRegion(const std::string& existing, const std::string& region,
                                 const std::string& chart);

}  // namespace amw

#endif  // AMW_TESTGEN_H_
