#include "gog/graph_of_groups.hpp"

#include "gog/errors.hpp"
#include "gog/words.hpp"

namespace gog {

const GroupRef& GraphOfGroups::vertex_group(const std::string& v) const {
  auto it = vertex_groups.find(v);
  require(it != vertex_groups.end(), "no vertex group for '" + v + "'");
  return it->second;
}

const EdgeGroup& GraphOfGroups::edge_group(const std::string& dart) const {
  auto it = edge_groups.find(graph.pair_name(dart));
  require(it != edge_groups.end(), "no edge group for dart '" + dart + "'");
  return it->second;
}

const GroupElement& GraphOfGroups::edge_image(const std::string& dart) const {
  const EdgeGroup& eg = edge_group(dart);
  require(eg.rank == 1, "dart '" + dart + "' has trivial edge group, no generator image");
  auto it = eg.images.find(dart);
  require(it != eg.images.end(), "missing edge map image for dart '" + dart + "'");
  return it->second;
}

GogReport gog_validate(const GraphOfGroups& g) {
  GogReport rep;
  GraphReport graph_rep = graph_validate(g.graph);
  rep.violations = graph_rep.violations;
  if (!rep.valid()) return rep;

  for (const std::string& v : g.graph.vertices()) {
    auto it = g.vertex_groups.find(v);
    if (it == g.vertex_groups.end()) {
      rep.violations.push_back("vertex '" + v + "' has no group");
      continue;
    }
    const GroupRef& gr = it->second;
    if (gr.is_free()) {
      if (gr.free_rank < 0) rep.violations.push_back("vertex '" + v + "' has negative rank");
    } else {
      GogReport sub = gog_validate(*gr.sub);
      for (const std::string& viol : sub.violations)
        rep.violations.push_back("nested gog at '" + v + "': " + viol);
      if (!gr.sub->graph.has_vertex(gr.base))
        rep.violations.push_back("nested gog at '" + v + "': base vertex '" + gr.base + "' missing");
    }
  }

  for (const auto& [name, dart] : g.graph.darts()) {
    std::string pair = g.graph.pair_name(name);
    auto it = g.edge_groups.find(pair);
    if (it == g.edge_groups.end()) {
      rep.violations.push_back("dart pair '" + pair + "' has no edge group");
      continue;
    }
    const EdgeGroup& eg = it->second;
    if (eg.rank != 0 && eg.rank != 1) {
      rep.violations.push_back("edge group '" + pair + "' has unsupported rank");
      continue;
    }
    if (eg.rank == 1) {
      auto im = eg.images.find(name);
      if (im == eg.images.end()) {
        rep.violations.push_back("rank-1 dart '" + name + "' has no edge map image");
        continue;
      }
      try {
        elt_check(g, dart.terminal, im->second);
        if (elt_is_identity(g, dart.terminal, im->second))
          rep.violations.push_back("edge map of dart '" + name + "' is not injective (image = 1)");
      } catch (const Error& err) {
        rep.violations.push_back("edge map image of dart '" + name + "': " + err.what());
      }
    }
  }
  return rep;
}

GogPtr make_gog(GraphOfGroups g) { return std::make_shared<const GraphOfGroups>(std::move(g)); }

}  // namespace gog
