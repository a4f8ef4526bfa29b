#include "gog/morphism.hpp"

#include "gog/errors.hpp"

namespace gog {

const std::string& PathMorphism::map_vertex(const std::string& v) const {
  auto it = vertex_map.find(v);
  return it == vertex_map.end() ? v : it->second;
}

PathWord PathMorphism::apply_vertex(const std::string& v, const GroupElement& g) const {
  auto it = vertex_rules.find(v);
  VertexRule::Kind kind = it == vertex_rules.end() ? VertexRule::Kind::Identity : it->second.kind;
  switch (kind) {
    case VertexRule::Kind::Identity:
      return PathWord::at_vertex(map_vertex(v), g);
    case VertexRule::Kind::Unbox: {
      // The element is a boxed path word of a sub-graph-of-groups whose
      // vertices and darts are (by construction) vertices and darts of cod.
      GroupElement n = elt_normalize(*dom, v, g);
      if (n.is_free()) {
        require(n.fw().is_identity(), "cannot unbox a free element");
        return PathWord::identity(map_vertex(v));
      }
      return pw_reduce(*cod, n.pw());
    }
    case VertexRule::Kind::Iso: {
      const GroupIso& h = it->second.iso;
      if (h.cod().is_pi1) return h.apply_word(g);
      return PathWord::at_vertex(h.cod().vertex, h.apply(g));
    }
  }
  fail("unreachable vertex rule");
}

PathWord PathMorphism::apply_dart(const std::string& e) const {
  auto it = dart_images.find(e);
  if (it != dart_images.end()) return it->second;
  PathWord w;
  w.start = cod->graph.initial(e);
  w.elts = {elt_identity(*cod, w.start), elt_identity(*cod, cod->graph.terminal(e))};
  w.darts = {e};
  return w;
}

PathWord PathMorphism::apply(const PathWord& w) const {
  pw_require_connected(*dom, w);
  std::string at = w.start;
  PathWord acc = apply_vertex(at, w.elts[0]);
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    acc = pw_multiply(*cod, acc, apply_dart(w.darts[i]));
    at = dom->graph.terminal(w.darts[i]);
    acc = pw_multiply(*cod, acc, apply_vertex(at, w.elts[i + 1]));
  }
  return acc;
}

}  // namespace gog
