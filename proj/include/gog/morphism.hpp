#ifndef GOG_MORPHISM_HPP
#define GOG_MORPHISM_HPP

#include <map>
#include <string>

#include "gog/iso.hpp"

namespace gog {

// Word morphism Pi(dom) -> Pi(cod): vertex-group elements are translated by a
// per-vertex rule, stable letters by substitution of path words. This is the
// carrier for subdivision maps, quotient identifications and blow-up
// identifications; it need not be invertible.
struct PathMorphism {
  struct VertexRule {
    enum class Kind { Identity, Unbox, Iso };
    Kind kind = Kind::Identity;
    GroupIso iso;  // Kind::Iso only
  };

  GogPtr dom, cod;
  std::map<std::string, std::string> vertex_map;     // default: same name
  std::map<std::string, VertexRule> vertex_rules;    // default: Identity
  std::map<std::string, PathWord> dart_images;       // default: t_{dart}, same name

  const std::string& map_vertex(const std::string& v) const;

  // Image of a vertex-group element of dom at v, as a path word of cod.
  PathWord apply_vertex(const std::string& v, const GroupElement& g) const;
  PathWord apply_dart(const std::string& e) const;
  PathWord apply(const PathWord& w) const;
};

}  // namespace gog

#endif
