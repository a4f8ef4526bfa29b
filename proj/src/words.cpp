#include "gog/words.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gog/errors.hpp"

namespace gog {

// ---- element arithmetic -----------------------------------------------------

GroupElement elt_identity(const GraphOfGroups& G, const std::string& v) {
  const GroupRef& gr = G.vertex_group(v);
  if (gr.is_free()) return GroupElement::free(FreeWord(GraphOfGroups::vertex_group_tag(v)));
  return GroupElement::pi1(PathWord::at_vertex(gr.base, elt_identity(*gr.sub, gr.base)));
}

void elt_check(const GraphOfGroups& G, const std::string& v, const GroupElement& g) {
  const GroupRef& gr = G.vertex_group(v);
  if (g.is_free() && g.fw().is_identity() && g.fw().group().empty()) return;  // untagged identity
  if (gr.is_free()) {
    require(g.is_free(), "pi1 element supplied for free vertex group at '" + v + "'");
    require(g.fw().group() == GraphOfGroups::vertex_group_tag(v),
            "element of group '" + g.fw().group() + "' used in vertex group of '" + v + "'");
    for (const Letter& l : g.fw().letters())
      require(l.gen >= 0 && l.gen < gr.free_rank,
              "generator index out of range for vertex '" + v + "'");
  } else {
    require(!g.is_free(), "free word supplied for pi1 vertex group at '" + v + "'");
    require(pw_is_pi1(*gr.sub, g.pw(), gr.base),
            "element of pi1 vertex group at '" + v + "' is not closed at base '" + gr.base + "'");
  }
}

GroupElement elt_normalize(const GraphOfGroups& G, const std::string& v, const GroupElement& g) {
  const GroupRef& gr = G.vertex_group(v);
  if (g.is_free() && g.fw().is_identity()) return elt_identity(G, v);
  elt_check(G, v, g);
  if (gr.is_free()) return g;
  return GroupElement::pi1(pw_reduce(*gr.sub, g.pw()));
}

bool elt_is_identity(const GraphOfGroups& G, const std::string& v, const GroupElement& g) {
  if (g.is_free()) return g.fw().is_identity();
  const GroupRef& gr = G.vertex_group(v);
  require(!gr.is_free(), "pi1 element in free vertex group at '" + v + "'");
  return pw_is_identity(*gr.sub, g.pw());
}

GroupElement elt_multiply(const GraphOfGroups& G, const std::string& v, const GroupElement& a,
                          const GroupElement& b) {
  GroupElement an = elt_normalize(G, v, a);
  GroupElement bn = elt_normalize(G, v, b);
  const GroupRef& gr = G.vertex_group(v);
  if (gr.is_free()) return GroupElement::free(fw_multiply(an.fw(), bn.fw()));
  return GroupElement::pi1(pw_multiply(*gr.sub, an.pw(), bn.pw()));
}

GroupElement elt_inverse(const GraphOfGroups& G, const std::string& v, const GroupElement& a) {
  GroupElement an = elt_normalize(G, v, a);
  const GroupRef& gr = G.vertex_group(v);
  if (gr.is_free()) return GroupElement::free(an.fw().inverse());
  return GroupElement::pi1(pw_inverse(*gr.sub, an.pw()));
}

GroupElement elt_power(const GraphOfGroups& G, const std::string& v, const GroupElement& a,
                       std::int64_t k) {
  GroupElement base = k < 0 ? elt_inverse(G, v, a) : elt_normalize(G, v, a);
  std::int64_t n = k < 0 ? -k : k;
  GroupElement acc = elt_identity(G, v);
  for (std::int64_t i = 0; i < n; ++i) acc = elt_multiply(G, v, acc, base);
  return acc;
}

bool elt_equal(const GraphOfGroups& G, const std::string& v, const GroupElement& a,
               const GroupElement& b) {
  return elt_is_identity(G, v, elt_multiply(G, v, a, elt_inverse(G, v, b)));
}

std::optional<std::int64_t> elt_power_of(const GraphOfGroups& G, const std::string& v,
                                         const GroupElement& r, const GroupElement& u) {
  require(!elt_is_identity(G, v, u), "power test against the identity in vertex group '" + v + "'");
  GroupElement rn = elt_normalize(G, v, r);
  GroupElement un = elt_normalize(G, v, u);
  const GroupRef& gr = G.vertex_group(v);
  if (gr.is_free()) return fw_power_of(rn.fw(), un.fw());
  return subgroup_power_membership(*gr.sub, rn.pw(), un.pw());
}

std::vector<GroupElement> group_generators(const GraphOfGroups& G, const std::string& v) {
  const GroupRef& gr = G.vertex_group(v);
  std::vector<GroupElement> out;
  if (gr.is_free()) {
    for (int i = 0; i < gr.free_rank; ++i)
      out.push_back(GroupElement::free(
          FreeWord::from_letters(GraphOfGroups::vertex_group_tag(v), {{i, 1}})));
  } else {
    for (PathWord& w : pi1_generators(*gr.sub, gr.base)) out.push_back(GroupElement::pi1(std::move(w)));
  }
  return out;
}

std::optional<std::int64_t> edge_image_membership(const GraphOfGroups& G, const std::string& dart,
                                                  const GroupElement& r) {
  const std::string& v = G.graph.terminal(dart);
  if (G.edge_rank(dart) == 0)
    return elt_is_identity(G, v, r) ? std::optional<std::int64_t>(0) : std::nullopt;
  return elt_power_of(G, v, r, G.edge_image(dart));
}

// ---- path words -------------------------------------------------------------

std::string pw_end(const GraphOfGroups& G, const PathWord& w) {
  if (w.darts.empty()) return w.start;
  return G.graph.terminal(w.darts.back());
}

bool pw_connected(const GraphOfGroups& G, const PathWord& w) {
  if (w.elts.size() != w.darts.size() + 1) return false;
  if (!G.graph.has_vertex(w.start)) return false;
  std::string at = w.start;
  for (std::size_t i = 0; i <= w.darts.size(); ++i) {
    try {
      elt_check(G, at, w.elts[i]);
    } catch (const Error&) {
      return false;
    }
    if (i == w.darts.size()) break;
    if (!G.graph.has_dart(w.darts[i])) return false;
    if (G.graph.initial(w.darts[i]) != at) return false;
    at = G.graph.terminal(w.darts[i]);
  }
  return true;
}

void pw_require_connected(const GraphOfGroups& G, const PathWord& w) {
  require(pw_connected(G, w), "path word is not connected");
}

PathWord pw_reduce(const GraphOfGroups& G, const PathWord& w) {
  pw_require_connected(G, w);
  PathWord out = w;
  // normalize vertex elements first
  {
    std::string at = out.start;
    for (std::size_t i = 0; i < out.elts.size(); ++i) {
      out.elts[i] = elt_normalize(G, at, out.elts[i]);
      if (i < out.darts.size()) at = G.graph.terminal(out.darts[i]);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < out.darts.size(); ++i) {
      const std::string& e = out.darts[i];
      if (out.darts[i + 1] != G.graph.bar(e)) continue;
      std::optional<std::int64_t> k = edge_image_membership(G, e, out.elts[i + 1]);
      if (!k) continue;
      // t_e f_e(x^k) t_ebar = f_ebar(x^k)
      const std::string& back = G.graph.initial(e);
      GroupElement crossed = G.edge_rank(e) == 1
                                 ? elt_power(G, back, G.edge_image(G.graph.bar(e)), *k)
                                 : elt_identity(G, back);
      GroupElement merged =
          elt_multiply(G, back, elt_multiply(G, back, out.elts[i], crossed), out.elts[i + 2]);
      out.elts.erase(out.elts.begin() + i + 1, out.elts.begin() + i + 3);
      out.elts[i] = std::move(merged);
      out.darts.erase(out.darts.begin() + i, out.darts.begin() + i + 2);
      changed = true;
      break;
    }
  }
  return out;
}

bool pw_is_reduced(const GraphOfGroups& G, const PathWord& w) {
  if (!pw_connected(G, w)) return false;
  for (std::size_t i = 0; i + 1 < w.darts.size(); ++i) {
    if (w.darts[i + 1] != G.graph.bar(w.darts[i])) continue;
    if (edge_image_membership(G, w.darts[i], w.elts[i + 1])) return false;
  }
  return true;
}

PathWord pw_multiply(const GraphOfGroups& G, const PathWord& a, const PathWord& b) {
  require(pw_end(G, a) == b.start, "path word product: endpoint mismatch ('" + pw_end(G, a) +
                                       "' vs '" + b.start + "')");
  PathWord out;
  out.start = a.start;
  out.elts = a.elts;
  out.darts = a.darts;
  GroupElement joint = elt_multiply(G, pw_end(G, a), a.elts.back(), b.elts.front());
  out.elts.back() = std::move(joint);
  out.darts.insert(out.darts.end(), b.darts.begin(), b.darts.end());
  out.elts.insert(out.elts.end(), b.elts.begin() + 1, b.elts.end());
  return pw_reduce(G, out);
}

PathWord pw_inverse(const GraphOfGroups& G, const PathWord& w) {
  PathWord out;
  out.start = pw_end(G, w);
  std::vector<std::string> at_vertices;  // vertex of each elt
  std::string at = w.start;
  at_vertices.push_back(at);
  for (const std::string& d : w.darts) {
    at = G.graph.terminal(d);
    at_vertices.push_back(at);
  }
  for (std::size_t i = w.elts.size(); i-- > 0;) {
    out.elts.push_back(elt_inverse(G, at_vertices[i], w.elts[i]));
    if (i > 0) out.darts.push_back(G.graph.bar(w.darts[i - 1]));
  }
  return out;
}

PathWord pw_power(const GraphOfGroups& G, const PathWord& w, std::int64_t k) {
  require(pw_end(G, w) == w.start, "power of a non-closed path word");
  PathWord base = k < 0 ? pw_inverse(G, w) : w;
  std::int64_t n = k < 0 ? -k : k;
  PathWord acc = PathWord::identity(w.start);
  acc.elts[0] = elt_identity(G, w.start);
  for (std::int64_t i = 0; i < n; ++i) acc = pw_multiply(G, acc, base);
  return pw_reduce(G, acc);
}

bool pw_is_identity(const GraphOfGroups& G, const PathWord& w) {
  PathWord r = pw_reduce(G, w);
  return r.darts.empty() && elt_is_identity(G, r.start, r.elts[0]);
}

bool pw_equal(const GraphOfGroups& G, const PathWord& a, const PathWord& b) {
  require(a.start == b.start && pw_end(G, a) == pw_end(G, b),
          "path word comparison: endpoint mismatch");
  return pw_is_identity(G, pw_multiply(G, a, pw_inverse(G, b)));
}

std::vector<std::string> pw_path_type(const PathWord& w) { return w.darts; }

bool pw_is_cyclically_reduced(const GraphOfGroups& G, const PathWord& w) {
  if (!pw_is_reduced(G, w)) return false;
  std::size_t q = w.darts.size();
  if (q == 0) return true;
  if (w.darts.front() != G.graph.bar(w.darts.back())) return true;
  GroupElement wrap = elt_multiply(G, pw_end(G, w), w.elts.back(), w.elts.front());
  return !edge_image_membership(G, w.darts.back(), wrap).has_value();
}

CyclicReduction pw_cyclic_reduce(const GraphOfGroups& G, const PathWord& w) {
  require(pw_end(G, w) == w.start, "cyclic reduction of a non-closed path word");
  PathWord core = pw_reduce(G, w);
  PathWord conj = PathWord::at_vertex(w.start, elt_identity(G, w.start));
  while (!pw_is_cyclically_reduced(G, core)) {
    // rotate the prefix r0 t1 to the end
    PathWord prefix;
    prefix.start = core.start;
    prefix.elts = {core.elts[0], elt_identity(G, G.graph.terminal(core.darts[0]))};
    prefix.darts = {core.darts[0]};
    conj = pw_multiply(G, conj, prefix);
    core = pw_multiply(G, pw_multiply(G, pw_inverse(G, prefix), core), prefix);
  }
  return {core, conj};
}

bool pw_is_pi1(const GraphOfGroups& G, const PathWord& w, const std::string& v) {
  return pw_connected(G, w) && w.start == v && pw_end(G, w) == v;
}

PathWord base_change_apply(const GraphOfGroups& G, const PathWord& W, const PathWord& x) {
  pw_require_connected(G, W);
  require(pw_is_pi1(G, x, pw_end(G, W)), "base change: word not closed at the far endpoint");
  return pw_multiply(G, pw_multiply(G, W, x), pw_inverse(G, W));
}

std::map<std::string, PathWord> tree_paths(const GraphOfGroups& G, const std::string& root) {
  std::set<std::string> tree = spanning_tree(G.graph, root);
  std::map<std::string, PathWord> gamma;
  gamma[root] = PathWord::at_vertex(root, elt_identity(G, root));
  // tree darts point from parent to child, so iterate until all placed
  bool progress = true;
  while (progress) {
    progress = false;
    for (const std::string& d : tree) {
      const std::string& child = G.graph.terminal(d);
      const std::string& parent = G.graph.initial(d);
      if (gamma.count(child) || !gamma.count(parent)) continue;
      PathWord step;
      step.start = parent;
      step.elts = {elt_identity(G, parent), elt_identity(G, child)};
      step.darts = {d};
      gamma[child] = pw_multiply(G, gamma.at(parent), step);
      progress = true;
    }
  }
  return gamma;
}

std::vector<PathWord> pi1_generators(const GraphOfGroups& G, const std::string& v) {
  std::map<std::string, PathWord> gamma = tree_paths(G, v);
  std::set<std::string> tree = spanning_tree(G.graph, v);
  std::vector<PathWord> out;
  for (const std::string& w : G.graph.vertices()) {
    for (const GroupElement& g : group_generators(G, w)) {
      PathWord at = PathWord::at_vertex(w, g);
      out.push_back(base_change_apply(G, gamma.at(w), at));
    }
  }
  for (const std::string& e : canonical_orientation(G.graph)) {
    if (tree.count(e) || tree.count(G.graph.bar(e))) continue;
    PathWord step;
    step.start = G.graph.initial(e);
    step.elts = {elt_identity(G, step.start), elt_identity(G, G.graph.terminal(e))};
    step.darts = {e};
    PathWord loop =
        pw_multiply(G, pw_multiply(G, gamma.at(step.start), step), pw_inverse(G, gamma.at(G.graph.terminal(e))));
    out.push_back(loop);
  }
  return out;
}

namespace {

// Rewrites w as a product of pi1 generators by telescoping with tree paths.
PathWord generator_product(const GraphOfGroups& G, const std::string& v, const PathWord& w) {
  std::map<std::string, PathWord> gamma = tree_paths(G, v);
  PathWord acc = PathWord::at_vertex(v, elt_identity(G, v));
  std::string at = w.start;
  for (std::size_t i = 0; i < w.elts.size(); ++i) {
    PathWord piece = base_change_apply(G, gamma.at(at), PathWord::at_vertex(at, w.elts[i]));
    acc = pw_multiply(G, acc, piece);
    if (i < w.darts.size()) {
      const std::string& d = w.darts[i];
      const std::string& to = G.graph.terminal(d);
      PathWord step;
      step.start = at;
      step.elts = {elt_identity(G, at), elt_identity(G, to)};
      step.darts = {d};
      PathWord loop = pw_multiply(G, pw_multiply(G, gamma.at(at), step), pw_inverse(G, gamma.at(to)));
      acc = pw_multiply(G, acc, loop);
      at = to;
    }
  }
  return acc;
}

}  // namespace

bool pi1_generation_check(const GraphOfGroups& G, const std::string& v, const PathWord& w) {
  if (!pw_is_pi1(G, w, v)) return false;
  return pw_equal(G, generator_product(G, v, w), pw_reduce(G, w));
}

std::optional<std::int64_t> subgroup_power_membership(const GraphOfGroups& G, const PathWord& r,
                                                      const PathWord& u) {
  require(r.start == u.start, "power membership: basepoint mismatch");
  require(!pw_is_identity(G, u), "power membership against the identity");
  PathWord rr = pw_reduce(G, r);
  if (pw_is_identity(G, rr)) return 0;
  CyclicReduction cu = pw_cyclic_reduce(G, u);
  if (cu.core.path_length() >= 1) {
    std::int64_t bound =
        static_cast<std::int64_t>(rr.path_length() / cu.core.path_length()) + 1;
    for (std::int64_t k = -bound; k <= bound; ++k)
      if (pw_equal(G, rr, pw_power(G, u, k))) return k;
    return std::nullopt;
  }
  // elliptic: u = c g c^-1 with g a vertex element; r must be c g^k c^-1
  PathWord s = pw_reduce(G, pw_multiply(G, pw_multiply(G, pw_inverse(G, cu.conjugator), rr), cu.conjugator));
  if (s.path_length() != 0) return std::nullopt;
  const std::string& x = cu.core.start;
  return elt_power_of(G, x, s.elts[0], cu.core.elts[0]);
}

std::string pw_print(const GraphOfGroups& G, const PathWord& w) {
  std::ostringstream out;
  std::string at = w.start;
  out << '[' << at << "] ";
  for (std::size_t i = 0; i < w.elts.size(); ++i) {
    const GroupElement& g = w.elts[i];
    if (g.is_free())
      out << fw_print(g.fw());
    else
      out << '(' << pw_print(*G.vertex_group(at).sub, g.pw()) << ')';
    if (i < w.darts.size()) {
      out << " t_" << w.darts[i] << ' ';
      at = G.graph.terminal(w.darts[i]);
    }
  }
  return out.str();
}

}  // namespace gog
