#ifndef GOG_TEST_FIXTURES_HPP
#define GOG_TEST_FIXTURES_HPP

#include "gog/serialize.hpp"
#include "gog/surgery.hpp"

namespace fx {

using namespace gog;

// Element of an explicit free vertex group, from "a^2 b^-1" text.
inline GroupElement E(const GraphOfGroups& G, const std::string& v, const std::string& text) {
  return GroupElement::free(
      free_parse(G.vertex_group(v), GraphOfGroups::vertex_group_tag(v), text));
}

// Power of the edge-group generator of the dart's pair.
inline GroupElement X(const GraphOfGroups& G, const std::string& dart, std::int64_t k) {
  std::string tag = GraphOfGroups::edge_group_tag(G.graph.pair_name(dart));
  if (k == 0) return GroupElement::free(FreeWord(tag));
  return GroupElement::free(FreeWord::from_letters(tag, {{0, k}}));
}

// Path word r0 t1 r1 ... from alternating tokens: "@vertex" starts the word,
// "tX" pushes dart X, anything else multiplies a vertex element in text form.
inline PathWord W(const GraphOfGroups& G, const std::string& start,
                  const std::vector<std::pair<std::string, std::string>>& steps) {
  // steps: ("e", dart) or ("w", text): text applies at the current vertex.
  PathWord w = PathWord::identity(start);
  std::string at = start;
  for (const auto& [kind, val] : steps) {
    if (kind == "e") {
      w.darts.push_back(val);
      at = G.graph.terminal(val);
      w.elts.push_back(elt_identity(G, at));
    } else {
      w.elts.back() = elt_multiply(G, at, w.elts.back(), E(G, at, val));
    }
  }
  return w;
}

// fixture A: one vertex v with G_v = <a>, one loop e with trivial edge group.
inline GogPtr fix_a() {
  GraphOfGroups g;
  g.graph.add_vertex("v");
  g.graph.add_edge("e", "v", "v");
  g.vertex_groups["v"] = GroupRef::free(1);
  g.edge_groups["e"] = EdgeGroup{0, {}};
  return make_gog(std::move(g));
}

// H_A: identity except delta(e) = a.
inline GogIso fix_a_iso() {
  GogPtr G = fix_a();
  GogIso H = GogIso::identity(G);
  H.corrections["e"] = E(*G, "v", "a");
  return H;
}

// fixture B: u --e--> v, G_u = <a,b>, G_v = <c,d>, edge group <x> with
// f_e(x) = c and f_ebar(x) = a.
inline GogPtr fix_b() {
  GraphOfGroups g;
  g.graph.add_vertex("u");
  g.graph.add_vertex("v");
  g.graph.add_edge("e", "u", "v");
  g.vertex_groups["u"] = GroupRef::free(2);
  g.vertex_groups["v"] = GroupRef::free(2, "cd");
  EdgeGroup eg{1, {}};
  g.edge_groups["e"] = eg;
  GogPtr G = make_gog(std::move(g));
  GraphOfGroups g2 = *G;
  g2.edge_groups["e"].images["e"] = E(*G, "v", "c");
  g2.edge_groups["e"].images["~e"] = E(*G, "u", "a");
  return make_gog(std::move(g2));
}

// D_B: classical Dehn twist with delta(e) = c^-1, so gamma_e = x^-1, z_e = x.
inline GogIso fix_b_iso() {
  GogPtr G = fix_b();
  GogIso H = GogIso::identity(G);
  H.corrections["e"] = E(*G, "v", "c^-1");
  return H;
}

// fixture C: u --e--> v plus a loop f at v, all edge groups trivial,
// G_u = <a>, G_v = <c>.
inline GogPtr fix_c() {
  GraphOfGroups g;
  g.graph.add_vertex("u");
  g.graph.add_vertex("v");
  g.graph.add_edge("e", "u", "v");
  g.graph.add_edge("f", "v", "v");
  g.vertex_groups["u"] = GroupRef::free(1);
  g.vertex_groups["v"] = GroupRef::free(1, "c");
  g.edge_groups["e"] = EdgeGroup{0, {}};
  g.edge_groups["f"] = EdgeGroup{0, {}};
  return make_gog(std::move(g));
}

// H_C: identity except delta(e) = c, delta(f) = c.
inline GogIso fix_c_iso() {
  GogPtr G = fix_c();
  GogIso H = GogIso::identity(G);
  H.corrections["e"] = E(*G, "v", "c");
  H.corrections["f"] = E(*G, "v", "c");
  return H;
}

// fixture D quotient stage: one vertex V0 with G = <x,y>, one loop e with trivial
// edge group. Hbar: x -> x, y -> y x^-1, delta(e) = x^2 (or x y for the
// rejected variant).
inline GogPtr fix_d_gog() {
  GraphOfGroups g;
  g.graph.add_vertex("V0");
  g.graph.add_edge("e", "V0", "V0");
  g.vertex_groups["V0"] = GroupRef::free(2, "xy");
  g.edge_groups["e"] = EdgeGroup{0, {}};
  return make_gog(std::move(g));
}

inline GogIso fix_d_iso(const std::string& delta_e = "x^2") {
  GogPtr G = fix_d_gog();
  GogIso H = GogIso::identity(G);
  H.vertex_isos.emplace(
      "V0", GroupIso::free_images(GroupCtx{G, "V0"}, GroupCtx{G, "V0"},
                                  {E(*G, "V0", "x"), E(*G, "V0", "y x^-1")}));
  H.corrections["e"] = E(*G, "V0", delta_e);
  return H;
}

// fixture D local data: G0 = one vertex v with <a> and a trivial-edge loop f;
// H0 has delta(f) = a; theta0: x -> a, y -> t_f.
inline LocalTwist fix_d_local() {
  GraphOfGroups g;
  g.graph.add_vertex("v");
  g.graph.add_edge("f", "v", "v");
  g.vertex_groups["v"] = GroupRef::free(1);
  g.edge_groups["f"] = EdgeGroup{0, {}};
  GogPtr G0 = make_gog(std::move(g));

  GogIso H0 = GogIso::identity(G0);
  H0.corrections["f"] = E(*G0, "v", "a");

  GogPtr Gq = fix_d_gog();
  PathWord im_x = PathWord::at_vertex("v", E(*G0, "v", "a"));
  PathWord im_y = W(*G0, "v", {{"e", "f"}});
  GroupIso theta0 = GroupIso::theta(GroupCtx{Gq, "V0"}, GroupCtx{G0, "v", true},
                                   {im_x, im_y});
  return LocalTwist{H0, G0, theta0};
}

}  // namespace fx

#endif
