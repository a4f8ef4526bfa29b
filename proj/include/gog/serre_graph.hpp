#ifndef GOG_SERRE_GRAPH_HPP
#define GOG_SERRE_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

namespace gog {

// Finite connected graph in the sense of Serre: darts with a fixed-point-free
// involution `bar` and a terminal-vertex map. The inverse of dart "e" is
// conventionally named "~e" in serialized form, but any pairing is accepted.
class SerreGraph {
public:
  struct Dart {
    std::string inverse;
    std::string terminal;
    friend bool operator==(const Dart&, const Dart&) = default;
  };

  void add_vertex(const std::string& v);
  // Adds the dart pair e / ~e with terminal(e) = head, terminal(~e) = tail.
  void add_edge(const std::string& e, const std::string& tail, const std::string& head);
  void add_dart(const std::string& name, const std::string& inverse, const std::string& terminal);

  const std::set<std::string>& vertices() const { return vertices_; }
  const std::map<std::string, Dart>& darts() const { return darts_; }

  bool has_vertex(const std::string& v) const { return vertices_.count(v) != 0; }
  bool has_dart(const std::string& e) const { return darts_.count(e) != 0; }
  const std::string& bar(const std::string& e) const;
  const std::string& terminal(const std::string& e) const;
  const std::string& initial(const std::string& e) const { return terminal(bar(e)); }

  // Canonical name for the unordered dart pair: the smaller of {e, bar(e)}.
  std::string pair_name(const std::string& e) const;

  // Darts e with terminal(e) == v, sorted; loops contribute both darts.
  std::vector<std::string> darts_into(const std::string& v) const;

  friend bool operator==(const SerreGraph&, const SerreGraph&) = default;

private:
  std::set<std::string> vertices_;
  std::map<std::string, Dart> darts_;
};

struct GraphReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Checks the involution, fixed-point-freeness, terminal vertices, and
// connectedness of a non-empty graph.
GraphReport graph_validate(const SerreGraph& g);

// Deterministic BFS spanning tree (sorted dart identifiers): returns, for each
// non-root vertex, the dart pointing from its parent to it.
std::set<std::string> spanning_tree(const SerreGraph& g, const std::string& root);

// Canonical orientation: the lexicographically smaller dart of each pair.
std::set<std::string> canonical_orientation(const SerreGraph& g);

}  // namespace gog

#endif
