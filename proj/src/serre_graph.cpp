#include "gog/serre_graph.hpp"

#include <algorithm>
#include <deque>

#include "gog/errors.hpp"

namespace gog {

void SerreGraph::add_vertex(const std::string& v) {
  require(!v.empty(), "empty vertex name");
  vertices_.insert(v);
}

void SerreGraph::add_edge(const std::string& e, const std::string& tail, const std::string& head) {
  add_dart(e, "~" + e, head);
  add_dart("~" + e, e, tail);
}

void SerreGraph::add_dart(const std::string& name, const std::string& inverse,
                          const std::string& terminal) {
  require(!name.empty(), "empty dart name");
  darts_[name] = Dart{inverse, terminal};  // fixed points are graph_validate's business
}

const std::string& SerreGraph::bar(const std::string& e) const {
  auto it = darts_.find(e);
  require(it != darts_.end(), "unknown dart '" + e + "'");
  return it->second.inverse;
}

const std::string& SerreGraph::terminal(const std::string& e) const {
  auto it = darts_.find(e);
  require(it != darts_.end(), "unknown dart '" + e + "'");
  return it->second.terminal;
}

std::string SerreGraph::pair_name(const std::string& e) const {
  return std::min(e, bar(e));
}

std::vector<std::string> SerreGraph::darts_into(const std::string& v) const {
  std::vector<std::string> out;
  for (const auto& [name, d] : darts_)
    if (d.terminal == v) out.push_back(name);
  return out;
}

GraphReport graph_validate(const SerreGraph& g) {
  GraphReport rep;
  if (g.vertices().empty()) rep.violations.push_back("graph has no vertices");
  for (const auto& [name, d] : g.darts()) {
    if (d.inverse == name) rep.violations.push_back("involution has fixed point at dart '" + name + "'");
    auto it = g.darts().find(d.inverse);
    if (it == g.darts().end())
      rep.violations.push_back("dart '" + name + "' names missing inverse '" + d.inverse + "'");
    else if (it->second.inverse != name)
      rep.violations.push_back("bar(bar('" + name + "')) != '" + name + "'");
    if (!g.has_vertex(d.terminal))
      rep.violations.push_back("dart '" + name + "' has unknown terminal vertex '" + d.terminal + "'");
  }
  if (!rep.violations.empty()) return rep;
  if (!g.vertices().empty()) {
    std::set<std::string> seen;
    std::deque<std::string> queue{*g.vertices().begin()};
    seen.insert(queue.front());
    while (!queue.empty()) {
      std::string v = queue.front();
      queue.pop_front();
      for (const auto& [name, d] : g.darts()) {
        if (g.terminal(g.bar(name)) == v && !seen.count(d.terminal)) {
          seen.insert(d.terminal);
          queue.push_back(d.terminal);
        }
      }
    }
    for (const std::string& v : g.vertices())
      if (!seen.count(v)) rep.violations.push_back("vertex '" + v + "' unreachable: graph disconnected");
  }
  return rep;
}

std::set<std::string> spanning_tree(const SerreGraph& g, const std::string& root) {
  require(g.has_vertex(root), "spanning tree root '" + root + "' not in graph");
  std::set<std::string> tree;
  std::set<std::string> seen{root};
  std::deque<std::string> queue{root};
  while (!queue.empty()) {
    std::string v = queue.front();
    queue.pop_front();
    for (const auto& [name, d] : g.darts()) {  // map order: sorted identifiers
      if (g.initial(name) != v) continue;
      if (seen.count(d.terminal)) continue;
      seen.insert(d.terminal);
      tree.insert(name);
      queue.push_back(d.terminal);
    }
  }
  return tree;
}

std::set<std::string> canonical_orientation(const SerreGraph& g) {
  std::set<std::string> pos;
  for (const auto& [name, d] : g.darts())
    if (name < d.inverse) pos.insert(name);
  return pos;
}

}  // namespace gog
