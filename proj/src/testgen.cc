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

#include "amw/testgen.h"

#include <algorithm>
#include <deque>
#include <map>

#include "amw/runtime.h"
#include "amw/text_format.h"

namespace amw {

std::string_view CoverageKindName(CoverageKind kind) {
  switch (kind) {
    case CoverageKind::kState:
      return "state";
    case CoverageKind::kTransition:
      return "transition";
    case CoverageKind::kPath:
      return "path";
  }
  return "?";
}

std::optional<CoverageKind> ParseCoverageKind(std::string_view text) {
  if (text == "state") return CoverageKind::kState;
  if (text == "transition") return CoverageKind::kTransition;
  if (text == "path") return CoverageKind::kPath;
  return std::nullopt;
}

namespace {

void CollectStrings(const Expr& e, std::set<std::string>& out) {
  if (e.kind == Expr::Kind::kLiteral && e.literal.kind == Literal::Kind::kString) {
    out.insert(e.literal.string_value);
  }
  for (const auto& a : e.args) CollectStrings(a, out);
}

Value ToValue(const ObjectValue& v, const ObjectStore& store) {
  if (v.kind == ObjectValue::Kind::kObject) return Value::Ref(*store.Lookup(v.object));
  return Value::FromLiteral(v.literal);
}

// Every combination of candidates, first parameter varying slowest.
std::vector<std::vector<ObjectValue>> ArgumentTuples(const std::vector<std::vector<ObjectValue>>& domains) {
  std::vector<std::vector<ObjectValue>> tuples = {{}};
  for (const auto& domain : domains) {
    std::vector<std::vector<ObjectValue>> next;
    for (const auto& prefix : tuples) {
      for (const auto& candidate : domain) {
        next.push_back(prefix);
        next.back().push_back(candidate);
      }
    }
    tuples = std::move(next);
  }
  return tuples;
}

}  // namespace

std::vector<ObjectValue> ParamDomain(const Model& model, const Statechart& chart,
                                     const ObjectConfiguration& seed, const TypeRef& type,
                                     std::int64_t int_bound) {
  std::vector<ObjectValue> out;
  switch (type.kind) {
    case TypeRef::Kind::kBool:
      out = {ObjectValue::Lit(Literal::Bool(false)), ObjectValue::Lit(Literal::Bool(true))};
      break;
    case TypeRef::Kind::kInt:
      for (std::int64_t i = -int_bound; i <= int_bound; ++i) out.push_back(ObjectValue::Lit(Literal::Int(i)));
      break;
    case TypeRef::Kind::kString: {
      std::set<std::string> strings = {""};
      for (const auto& t : chart.transitions) {
        if (t.guard) CollectStrings(*t.guard, strings);
      }
      for (const auto& o : seed.objects) {
        for (const auto& a : o.assignments) {
          if (a.value.kind == ObjectValue::Kind::kLiteral && a.value.literal.kind == Literal::Kind::kString) {
            strings.insert(a.value.literal.string_value);
          }
        }
      }
      for (const auto& s : strings) out.push_back(ObjectValue::Lit(Literal::String(s)));
      break;
    }
    case TypeRef::Kind::kClass:
      for (const auto& o : seed.objects) {
        if (model.IsSubclassOf(o.class_name, type.class_name)) out.push_back(ObjectValue::Object(o.name));
      }
      break;
    case TypeRef::Kind::kSet:
      break;
  }
  return out;
}

std::vector<Stimulus> ReachabilityGraph::PathTo(std::size_t node) const {
  std::vector<Stimulus> path;
  while (nodes[node].parent_edge) {
    const GraphEdge& e = edges[*nodes[node].parent_edge];
    path.push_back(e.stimulus);
    node = e.from;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::set<std::size_t> ReachabilityGraph::DiscoveredTransitions() const {
  std::set<std::size_t> out;
  for (const auto& e : edges) out.insert(e.transition);
  return out;
}

Expected<ReachabilityGraph> Explore(const Model& model, const std::string& chart_name,
                                    const TestgenOptions& options) {
  const Statechart* chart = model.FindStatechart(chart_name);
  if (chart == nullptr) return Error("E_UNKNOWN_CHART", "no statechart for '" + chart_name + "'");
  ReachabilityGraph graph;
  graph.chart = chart->owner;
  if (options.seed_config) {
    const ObjectConfiguration* seed = model.FindConfig(*options.seed_config);
    if (seed == nullptr) return Error("E_UNKNOWN_CONFIG", "unknown configuration '" + *options.seed_config + "'");
    graph.seed = *seed;
    int subjects = 0;
    for (const auto& o : seed->objects) {
      if (model.IsSubclassOf(o.class_name, chart->owner)) {
        ++subjects;
        graph.subject = o.name;
      }
    }
    if (subjects != 1) {
      return Error("E_BAD_SEED", "configuration '" + *options.seed_config + "' holds " +
                                     std::to_string(subjects) + " objects of class '" + chart->owner +
                                     "', expected exactly one");
    }
  } else {
    graph.seed.name = "seed";
    graph.seed.objects.push_back(ObjectDecl{"subject", chart->owner, false, {}, {}});
    graph.subject = "subject";
  }

  ObjectStore initial;
  try {
    initial = Instantiate(model, graph.seed);
  } catch (const Error& error) {
    return error;
  }
  const ObjectId subject = *initial.Lookup(graph.subject);
  const std::string subject_class = initial.Find(subject)->class_name;

  // Stimuli per trigger, triggers in order of first use.
  std::vector<Stimulus> stimuli;
  std::set<std::string> seen;
  for (const auto& t : chart->transitions) {
    if (!seen.insert(t.trigger).second) continue;
    const MethodDef* m = FindMethodInHierarchy(model, subject_class, t.trigger);
    if (m == nullptr) continue;
    std::vector<std::vector<ObjectValue>> domains;
    for (const auto& p : m->params) {
      domains.push_back(ParamDomain(model, *chart, graph.seed, p.type, options.int_bound));
    }
    for (auto& args : ArgumentTuples(domains)) stimuli.push_back({t.trigger, std::move(args)});
  }

  graph.max_depth = options.k * static_cast<int>(chart->transitions.size());
  std::map<std::string, std::size_t> index;
  index[initial.Render()] = 0;
  graph.nodes.push_back({initial, initial.Find(subject)->state.value_or(""), 0, std::nullopt});
  for (std::size_t n = 0; n < graph.nodes.size() && !graph.exploded; ++n) {
    if (graph.nodes[n].depth >= graph.max_depth) continue;
    const std::string source_state = graph.nodes[n].state;
    for (const auto& stimulus : stimuli) {
      ObjectStore store = graph.nodes[n].store;
      std::vector<Value> args;
      for (const auto& a : stimulus.args) args.push_back(ToValue(a, store));
      Interpreter interpreter(model, store);
      if (!interpreter.Invoke(kDriver, subject, stimulus.method, std::move(args)).ok()) continue;
      std::set<std::size_t> fired;
      if (auto it = interpreter.coverage().transitions.find(chart->owner);
          it != interpreter.coverage().transitions.end()) {
        fired = it->second;
      }
      std::optional<std::size_t> own;
      for (std::size_t t : fired) {
        const TransitionDef& def = chart->transitions[t];
        if (def.trigger == stimulus.method && def.source == source_state) {
          own = t;
          break;
        }
      }
      if (!own) continue;
      std::string key = store.Render();
      auto it = index.find(key);
      std::size_t target;
      if (it != index.end()) {
        target = it->second;
      } else {
        if (graph.nodes.size() >= options.node_cap) {
          graph.exploded = true;
          break;
        }
        target = graph.nodes.size();
        index.emplace(std::move(key), target);
        std::string state = store.Find(subject)->state.value_or("");
        graph.nodes.push_back({std::move(store), std::move(state), graph.nodes[n].depth + 1, graph.edges.size()});
      }
      graph.edges.push_back({n, target, stimulus, *own, std::move(fired)});
    }
  }
  return graph;
}

namespace {

std::string Describe(const TransitionDef& t) {
  return t.source + " -> " + t.target + " on " + t.trigger;
}

// Breadth-first search for a run whose stimuli fire `path` in order.
std::optional<std::pair<std::vector<Stimulus>, std::size_t>> Realize(const ReachabilityGraph& graph,
                                                                      const std::vector<std::size_t>& path) {
  std::vector<std::vector<std::size_t>> out_edges(graph.nodes.size());
  for (std::size_t e = 0; e < graph.edges.size(); ++e) out_edges[graph.edges[e].from].push_back(e);
  using Key = std::pair<std::size_t, std::size_t>;  // (node, transitions matched)
  std::map<Key, std::pair<Key, std::size_t>> parent;
  std::set<Key> visited = {{0, 0}};
  std::deque<Key> queue = {{0, 0}};
  while (!queue.empty()) {
    Key current = queue.front();
    queue.pop_front();
    if (current.second == path.size()) {
      std::vector<Stimulus> stimuli;
      Key k = current;
      while (k != Key{0, 0}) {
        auto [prev, edge] = parent.at(k);
        stimuli.push_back(graph.edges[edge].stimulus);
        k = prev;
      }
      std::reverse(stimuli.begin(), stimuli.end());
      return std::make_pair(stimuli, current.first);
    }
    for (std::size_t e : out_edges[current.first]) {
      if (graph.edges[e].transition != path[current.second]) continue;
      Key next{graph.edges[e].to, current.second + 1};
      if (!visited.insert(next).second) continue;
      parent[next] = {current, e};
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

// Transition sequences from the initial state of at most k transitions,
// each transition used at most twice, in depth-first order.
void EnumeratePaths(const Statechart& chart, int k, const std::string& state, std::vector<std::size_t>& prefix,
                    std::map<std::size_t, int>& uses, std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(prefix.size()) == k) return;
  for (std::size_t t = 0; t < chart.transitions.size(); ++t) {
    if (chart.transitions[t].source != state || uses[t] >= 2) continue;
    prefix.push_back(t);
    ++uses[t];
    out.push_back(prefix);
    EnumeratePaths(chart, k, chart.transitions[t].target, prefix, uses, out);
    --uses[t];
    prefix.pop_back();
  }
}

std::string RenderTestBlock(const ReachabilityGraph& graph, const GeneratedTest& test) {
  ObjectConfiguration fixture = graph.seed;
  fixture.name = test.name + "__fix";
  SequenceDefinition sequence;
  sequence.name = test.name + "__seq";
  for (const auto& s : test.stimuli) {
    Step step;
    step.kind = Step::Kind::kStimulus;
    step.target = graph.subject;
    step.method = s.method;
    step.args = s.args;
    sequence.steps.push_back(std::move(step));
  }
  TestCase t;
  t.name = test.name;
  t.category = TestCategory::kUnit;
  t.fixture = fixture.name;
  t.driver = sequence.name;
  t.oracle = Oracle{std::nullopt, {Expr::Binary(BinaryOp::kEq, Expr::State(Expr::Name(graph.subject)),
                                                Expr::Lit(Literal::String(test.expected_state)))}};
  return PrintObjects(fixture, false) + "\n" + PrintSequence(sequence) + "\n" + PrintTest(t);
}

}  // namespace

Expected<TestgenResult> Derive(const Model& model, const std::string& chart_name,
                               const TestgenOptions& options) {
  if (options.k < 1) return Error("E_USAGE", "path bound k must be at least 1");
  auto explored = Explore(model, chart_name, options);
  if (!explored) return explored.error();
  TestgenResult result;
  result.graph = std::move(explored).value();
  const ReachabilityGraph& graph = result.graph;
  const Statechart& chart = *model.FindStatechart(chart_name);
  const std::string prefix = "gen__" + chart.owner + "__";
  const std::string truncated = graph.exploded ? " (exploration truncated)" : "";

  switch (options.kind) {
    case CoverageKind::kState:
      for (const auto& state : chart.states) {
        GeneratedTest test;
        test.name = prefix + "state__" + state;
        test.goal = "state " + state;
        test.expected_state = state;
        auto node = std::find_if(graph.nodes.begin(), graph.nodes.end(),
                                 [&](const GraphNode& n) { return n.state == state; });
        if (node == graph.nodes.end()) {
          test.coverable = false;
          test.reason = "state unreachable" + truncated;
        } else {
          test.stimuli = graph.PathTo(static_cast<std::size_t>(node - graph.nodes.begin()));
        }
        result.tests.push_back(std::move(test));
      }
      break;
    case CoverageKind::kTransition: {
      std::map<std::string, int> name_uses;
      for (std::size_t t = 0; t < chart.transitions.size(); ++t) {
        const TransitionDef& def = chart.transitions[t];
        GeneratedTest test;
        std::string base = prefix + "trans__" + def.source + "__" + def.target + "__" + def.trigger;
        int n = ++name_uses[base];
        test.name = n == 1 ? base : base + "__" + std::to_string(n);
        test.goal = "transition " + Describe(def);
        test.transitions = {t};
        auto edge = std::find_if(graph.edges.begin(), graph.edges.end(),
                                 [&](const GraphEdge& e) { return e.transition == t; });
        if (edge == graph.edges.end()) {
          bool source_reached = std::any_of(graph.nodes.begin(), graph.nodes.end(),
                                            [&](const GraphNode& n) { return n.state == def.source; });
          test.coverable = false;
          test.reason = (source_reached ? "guard never satisfied within parameter domain"
                                        : "source state unreachable") +
                        truncated;
        } else {
          test.stimuli = graph.PathTo(edge->from);
          test.stimuli.push_back(edge->stimulus);
          test.expected_state = graph.nodes[edge->to].state;
        }
        result.tests.push_back(std::move(test));
      }
      break;
    }
    case CoverageKind::kPath: {
      std::vector<std::vector<std::size_t>> paths;
      std::vector<std::size_t> current;
      std::map<std::size_t, int> uses;
      EnumeratePaths(chart, options.k, chart.initial, current, uses, paths);
      for (std::size_t i = 0; i < paths.size(); ++i) {
        GeneratedTest test;
        test.name = prefix + "path__" + std::to_string(i + 1);
        test.transitions = paths[i];
        test.goal = "path";
        for (std::size_t j = 0; j < paths[i].size(); ++j) {
          test.goal += (j == 0 ? " " : ", ") + Describe(chart.transitions[paths[i][j]]);
        }
        if (auto realized = Realize(graph, paths[i])) {
          test.stimuli = realized->first;
          test.expected_state = graph.nodes[realized->second].state;
        } else {
          test.coverable = false;
          test.reason = "path not realizable within parameter domain" + truncated;
        }
        result.tests.push_back(std::move(test));
      }
      break;
    }
  }

  if (graph.exploded) {
    result.warnings.push_back({"W_EXPLOSION", Severity::kWarning, chart.loc,
                               "exploration of '" + chart.owner + "' stopped at " +
                                   std::to_string(options.node_cap) + " configurations"});
  }

  std::string region = "// GEN-BEGIN\n// amw testgen: chart " + chart.owner + ", coverage " +
                       std::string(CoverageKindName(options.kind)) + ", k " + std::to_string(options.k) +
                       ", int bound " + std::to_string(options.int_bound) + ", seed " + graph.seed.name + "\n";
  bool first = true;
  for (const auto& test : result.tests) {
    if (!test.coverable) continue;
    region += (first ? "" : "\n") + RenderTestBlock(graph, test);
    first = false;
  }
  for (const auto& test : result.tests) {
    if (test.coverable) continue;
    region += "// uncoverable " + test.name + " (" + test.goal + "): " + test.reason + "\n";
  }
  region += "// GEN-END\n";
  result.region = std::move(region);
  return result;
}

std::string GeneratedFileName(const std::string& chart) { return chart + "_gen.amw"; }

std::string MergeGeneratedRegion(const std::string& existing, const std::string& region,
                                 const std::string& chart) {
  std::size_t begin = existing.find("// GEN-BEGIN");
  std::size_t end = existing.find("// GEN-END", begin == std::string::npos ? 0 : begin);
  if (begin != std::string::npos && end != std::string::npos) {
    std::size_t after = existing.find('\n', end);
    after = after == std::string::npos ? existing.size() : after + 1;
    return existing.substr(0, begin) + region + existing.substr(after);
  }
  if (existing.empty()) {
    return "// Tests derived from the " + chart + " statechart. Only the generated region below\n"
           "// is rewritten when tests are derived again.\n\n" +
           region;
  }
  return existing + (existing.back() == '\n' ? "\n" : "\n\n") + region;
}

}  // namespace amw
