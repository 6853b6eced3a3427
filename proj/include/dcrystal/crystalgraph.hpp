#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dcrystal/json_io.hpp"
#include "dcrystal/render.hpp"

namespace dcrystal {

struct GraphNode {
  std::string key;
  json element;
  WeightVector wt;
  int depth = 0;
  std::string label;
};

struct GraphEdge {
  std::string src;
  int i = 0;
  std::string dst;
};

struct CrystalGraph {
  std::string realization;
  int n = 0;
  int depth = 0;
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
};

struct GenLimits {
  std::size_t max_nodes = 1'000'000;
};

struct TableauModel {
  Rank rank;
  Reading reading = Reading::Middle;
  static constexpr const char* name = "tableaux";
  using Element = Tableau;
  Element start() const { return highest_weight_tableau(rank); }
  Element lower(const Element& t, int i) const { return f(t, i, reading); }
  std::optional<Element> raise(const Element& t, int i) const { return e(t, i, reading); }
  WeightVector wt(const Element& t) const { return weight(t); }
  json to_json(const Element& t) const { return tableau_to_json(t); }
  std::string label(const Element& t) const { return tableau_label(t); }
};

struct PartitionModel {
  Rank rank;
  static constexpr const char* name = "kostant";
  using Element = KostantPartition;
  Element start() const { return empty_partition(rank); }
  Element lower(const Element& a, int i) const { return f(a, i); }
  std::optional<Element> raise(const Element& a, int i) const { return e(a, i); }
  WeightVector wt(const Element& a) const { return weight(a); }
  json to_json(const Element& a) const { return partition_to_json(a); }
  std::string label(const Element& a) const { return partition_label(a); }
};

/* BFS ball of radius depth around the highest-weight element; nodes sorted by
   (depth, key), edges by (src, i); every f_i image of an interior node is kept */
template <class Model>
CrystalGraph generate(const Model& model, int depth, GenLimits limits = {}) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  CrystalGraph g;
  g.realization = Model::name;
  g.n = model.rank.n;
  g.depth = depth;

  std::map<std::string, typename Model::Element> layer;
  std::set<std::string> seen;
  const auto start = model.start();
  layer.emplace(element_key(canonical_dump(start)), start);

  for (int d = 0; d <= depth; ++d) {
    std::map<std::string, typename Model::Element> next;
    for (const auto& [key, elem] : layer) {
      seen.insert(key);
      g.nodes.push_back({key, model.to_json(elem), model.wt(elem), d, model.label(elem)});
      if (g.nodes.size() > limits.max_nodes) throw std::runtime_error("node limit exceeded");
      if (d == depth) continue;
      for (int i = 1; i <= model.rank.n; ++i) {
        auto image = model.lower(elem, i);
        std::string ikey = element_key(canonical_dump(image));
        g.edges.push_back({key, i, ikey});
        if (!seen.count(ikey)) next.emplace(std::move(ikey), std::move(image));
      }
    }
    layer = std::move(next);
  }

  std::sort(g.nodes.begin(), g.nodes.end(), [](const GraphNode& a, const GraphNode& b) {
    return std::tie(a.depth, a.key) < std::tie(b.depth, b.key);
  });
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.src, a.i, a.dst) < std::tie(b.src, b.i, b.dst);
  });
  return g;
}

inline json graph_to_json(const CrystalGraph& g) {
  json nodes = json::array();
  for (const GraphNode& v : g.nodes)
    nodes.push_back(json{{"key", v.key}, {"element", v.element}, {"wt", v.wt}});
  json edges = json::array();
  for (const GraphEdge& e : g.edges) edges.push_back(json{{"src", e.src}, {"i", e.i}, {"dst", e.dst}});
  return json{{"realization", g.realization},
              {"n", g.n},
              {"depth", g.depth},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

inline std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n  rankdir=TB;\n  node [shape=box fontname=\"monospace\"];\n";
  for (const GraphNode& v : g.nodes) {
    std::string label;
    for (char c : v.label) {
      if (c == '"' || c == '\\') label += '\\';
      label += c;
    }
    out << "  \"" << v.key << "\" [label=\"" << label << "\"];\n";
  }
  for (const GraphEdge& e : g.edges)
    out << "  \"" << e.src << "\" -> \"" << e.dst << "\" [label=\"" << e.i << "\"];\n";
  out << "}\n";
  return out.str();
}

/* nodes bucketed by the simple-root coordinates of -wt */
inline std::map<std::vector<int>, std::size_t> weight_multiplicities(const CrystalGraph& g) {
  Rank rank(g.n);
  std::map<std::vector<int>, std::size_t> counts;
  for (const GraphNode& v : g.nodes) {
    WeightVector neg(v.wt.size());
    for (std::size_t t = 0; t < v.wt.size(); ++t) neg[t] = -v.wt[t];
    auto mu = simple_decomposition(neg, rank);
    if (!mu) throw std::logic_error("node weight is not in the root lattice");
    counts[*mu] += 1;
  }
  return counts;
}

struct IsoFailure {
  std::string invariant;
  std::string key;
  int i = 0;
};

struct VerificationReport {
  std::size_t nodes_checked = 0;
  std::size_t ops_checked = 0;
  std::vector<IsoFailure> failures;
  bool ok() const { return failures.empty(); }
};

struct IsoHooks {
  std::function<KostantPartition(const Tableau&)> map = [](const Tableau& t) {
    return tableau_to_partition(t);
  };
  std::function<Tableau(const KostantPartition&)> inverse = [](const KostantPartition& a) {
    return partition_to_tableau(a);
  };
};

/* generates both realizations to the given depth and checks that the map is a
   weight-preserving bijection commuting with every operator */
inline VerificationReport check_isomorphism(Rank rank, int depth, const IsoHooks& hooks = {},
                                            GenLimits limits = {}) {
  VerificationReport report;
  TableauModel tm{rank};
  PartitionModel pm{rank};
  const CrystalGraph tg = generate(tm, depth, limits);
  const CrystalGraph pg = generate(pm, depth, limits);

  std::set<std::string> partition_keys;
  for (const GraphNode& v : pg.nodes) partition_keys.insert(v.key);
  std::set<std::string> mapped_keys;

  for (const GraphNode& v : tg.nodes) {
    report.nodes_checked += 1;
    const Tableau t = tableau_from_json(v.element);
    KostantPartition a = empty_partition(rank);
    try {
      a = hooks.map(t);
    } catch (const std::exception&) {
      report.failures.push_back({"map-throws", v.key, 0});
      continue;
    }
    const std::string akey = element_key(canonical_dump(a));
    mapped_keys.insert(akey);
    if (!partition_keys.count(akey)) report.failures.push_back({"image-outside-ball", v.key, 0});
    if (weight(a) != weight(t)) report.failures.push_back({"weight-mismatch", v.key, 0});
    try {
      if (!(hooks.inverse(a) == t)) report.failures.push_back({"inverse-roundtrip", v.key, 0});
    } catch (const std::exception&) {
      report.failures.push_back({"inverse-throws", v.key, 0});
    }
    for (int i = 1; i <= rank.n; ++i) {
      report.ops_checked += 2;
      if (epsilon(t, i) != epsilon(a, i)) report.failures.push_back({"epsilon-mismatch", v.key, i});
      if (phi(t, i) != phi(a, i)) report.failures.push_back({"phi-mismatch", v.key, i});
      if (!(hooks.map(f(t, i)) == f(a, i))) report.failures.push_back({"lower-intertwine", v.key, i});
      const auto up_t = e(t, i);
      const auto up_a = e(a, i);
      if (up_t.has_value() != up_a.has_value())
        report.failures.push_back({"raise-defined-mismatch", v.key, i});
      else if (up_t && !(hooks.map(*up_t) == *up_a))
        report.failures.push_back({"raise-intertwine", v.key, i});
    }
  }

  if (mapped_keys.size() != tg.nodes.size())
    report.failures.push_back({"map-not-injective", "", 0});
  if (mapped_keys != partition_keys) report.failures.push_back({"image-not-onto", "", 0});

  for (const GraphNode& v : pg.nodes) {
    const KostantPartition a = partition_from_json(v.element);
    try {
      const std::string back = element_key(canonical_dump(hooks.map(hooks.inverse(a))));
      if (back != v.key) report.failures.push_back({"forward-roundtrip", v.key, 0});
    } catch (const std::exception&) {
      report.failures.push_back({"forward-roundtrip-throws", v.key, 0});
    }
  }
  return report;
}

}  // namespace dcrystal
