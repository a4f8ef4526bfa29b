#ifndef GOG_GRAPH_OF_GROUPS_HPP
#define GOG_GRAPH_OF_GROUPS_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gog/path_word.hpp"
#include "gog/serre_graph.hpp"

namespace gog {

struct GraphOfGroups;
using GogPtr = std::shared_ptr<const GraphOfGroups>;

// Vertex group: an explicit free group of the given rank, or the fundamental
// group of a nested graph-of-groups at a base vertex.
struct GroupRef {
  int free_rank = 0;
  GogPtr sub;        // non-null for pi1 vertex groups
  std::string base;  // base vertex of `sub`
  // One character per generator of an explicit free group; defaults to
  // "abc..." when empty. Serialization-facing only.
  std::string gen_names;

  bool is_free() const { return sub == nullptr; }
  char gen_name(int i) const {
    return i < static_cast<int>(gen_names.size()) ? gen_names[i] : static_cast<char>('a' + i);
  }
  static GroupRef free(int rank, std::string names = "") {
    return GroupRef{rank, nullptr, "", std::move(names)};
  }
  static GroupRef pi1(GogPtr g, std::string base) { return GroupRef{0, std::move(g), std::move(base), ""}; }
};

// Edge group of rank 0 or 1, attached to the unordered dart pair. A rank-1
// edge group stores, per dart e, the image f_e(x) of its generator x.
struct EdgeGroup {
  int rank = 0;
  std::map<std::string, GroupElement> images;  // keyed by dart, rank 1 only
};

struct GraphOfGroups {
  SerreGraph graph;
  std::map<std::string, GroupRef> vertex_groups;  // keyed by vertex
  std::map<std::string, EdgeGroup> edge_groups;   // keyed by pair_name

  const GroupRef& vertex_group(const std::string& v) const;
  const EdgeGroup& edge_group(const std::string& dart) const;
  int edge_rank(const std::string& dart) const { return edge_group(dart).rank; }
  // Image of the edge-group generator under f_e; rank-1 darts only.
  const GroupElement& edge_image(const std::string& dart) const;

  // Tag for FreeWords of the vertex group, "v:<vertex>"; nested pi1 groups
  // manage their own tags.
  static std::string vertex_group_tag(const std::string& v) { return "v:" + v; }
  static std::string edge_group_tag(const std::string& pair) { return "e:" + pair; }
};

struct GogReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Validates the underlying graph, the pairing of edge groups, injectivity of
// rank-1 edge maps (image != 1), and that images live in the right groups.
GogReport gog_validate(const GraphOfGroups& g);

GogPtr make_gog(GraphOfGroups g);

}  // namespace gog

#endif
