#include "gog/dehn.hpp"

#include <numeric>

#include "gog/errors.hpp"

namespace gog {

namespace {

std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

// Twistors and gammas are words in the single edge-group generator; pull the
// exponent back out.
std::int64_t cyclic_exp(const GroupElement& g) {
  const FreeWord& w = g.fw();
  if (w.is_identity()) return 0;
  require(w.letters().size() == 1 && w.letters()[0].gen == 0, "not an edge-group word");
  return w.letters()[0].exp;
}

GroupElement edge_word(const GraphOfGroups& G, const std::string& dart, std::int64_t k) {
  std::string tag = GraphOfGroups::edge_group_tag(G.graph.pair_name(dart));
  if (k == 0) return GroupElement::free(FreeWord(tag));
  return GroupElement::free(FreeWord::from_letters(tag, {{0, k}}));
}

bool same_underlying(const GogIso& H) {
  return H.dom && H.cod && (H.dom == H.cod || H.dom->graph == H.cod->graph);
}

PathWord stable_letter(const GraphOfGroups& G, const std::string& e) {
  PathWord w;
  w.start = G.graph.initial(e);
  w.elts = {elt_identity(G, w.start), elt_identity(G, G.graph.terminal(e))};
  w.darts = {e};
  return w;
}

}  // namespace

TwistClass classify_twist(const GogIso& H) {
  TwistClass out;
  if (!same_underlying(H)) {
    out.reason = "not an automorphism of a single graph-of-groups";
    return out;
  }
  if (!H.graph_identity()) {
    out.reason = "graph map is not the identity";
    return out;
  }
  const GraphOfGroups& G = *H.dom;
  for (const std::string& v : G.graph.vertices())
    if (!H.vertex_iso(v).is_identity_map()) {
      out.reason = "vertex iso at '" + v + "' is not the identity";
      return out;
    }
  for (const auto& [e, d] : G.graph.darts())
    if (G.edge_rank(e) == 1 && H.edge_exp(e) != 1) {
      out.reason = "edge iso at '" + e + "' is not the identity";
      return out;
    }

  bool classical = true;
  TwistData td;
  for (const auto& [e, d] : G.graph.darts()) {
    GroupElement delta = H.correction(e);
    if (G.edge_rank(e) == 0) {
      td.z[e] = edge_word(G, e, 0);
      if (!elt_is_identity(G, d.terminal, delta)) classical = false;
      continue;  // centralizer of the trivial image is everything
    }
    std::optional<std::int64_t> k = edge_image_membership(G, e, delta);
    if (k) {
      td.gamma[e] = edge_word(G, e, *k);
      continue;
    }
    classical = false;
    GroupElement u = G.edge_image(e);
    GroupElement du = elt_multiply(G, d.terminal, delta, u);
    GroupElement ud = elt_multiply(G, d.terminal, u, delta);
    if (!elt_equal(G, d.terminal, du, ud)) {
      out.reason = "correction at dart '" + e + "' is not in the centralizer of the edge image";
      return out;
    }
  }
  if (!classical) {
    out.kind = TwistClass::Kind::General;
    return out;
  }
  for (const auto& [e, d] : G.graph.darts()) {
    if (G.edge_rank(e) == 0) continue;
    // z_e = gamma_ebar gamma_e^-1
    td.z[e] = edge_word(G, e,
                        cyclic_exp(td.gamma.at(G.graph.bar(e))) - cyclic_exp(td.gamma.at(e)));
  }
  out.kind = TwistClass::Kind::Classical;
  out.data = std::move(td);
  return out;
}

TwistData twistors(const GogIso& D) {
  TwistClass c = classify_twist(D);
  require(c.kind == TwistClass::Kind::Classical,
          c.kind == TwistClass::Kind::General ? "not a classical Dehn twist"
                                              : "not a Dehn twist: " + c.reason);
  const GraphOfGroups& G = *D.dom;
  for (const auto& [e, d] : G.graph.darts()) {
    // D_*(t_e) = t_e f_e(z_e)
    PathWord lhs = iso_apply(D, stable_letter(G, e));
    PathWord rhs = stable_letter(G, e);
    if (G.edge_rank(e) == 1)
      rhs.elts[1] = elt_power(G, d.terminal, G.edge_image(e), cyclic_exp(c.data->z.at(e)));
    require(pw_equal(G, lhs, rhs), "twistor identity fails at dart '" + e + "'");
  }
  return *c.data;
}

GogIso from_twistors(GogPtr Gp, const Orientation& positive,
                     const std::map<std::string, GroupElement>& z) {
  require(Gp != nullptr, "missing graph-of-groups");
  const GraphOfGroups& G = *Gp;
  for (const auto& [e, d] : G.graph.darts()) {
    bool pe = positive.count(e) != 0, pb = positive.count(d.inverse) != 0;
    require(pe != pb,
            "orientation must contain exactly one dart of pair '" + G.graph.pair_name(e) + "'");
  }
  std::map<std::string, std::int64_t> zk;
  for (const auto& [e, d] : G.graph.darts()) {
    auto it = z.find(e);
    auto itb = z.find(d.inverse);
    std::int64_t k = 0;
    if (it != z.end()) {
      require(it->second.is_free(), "twistor must be an edge-group word");
      k = cyclic_exp(it->second);
      if (itb != z.end())
        require(cyclic_exp(itb->second) == -k,
                "twistor family violates z_ebar = z_e^-1 on pair '" + G.graph.pair_name(e) + "'");
    } else if (itb != z.end()) {
      k = -cyclic_exp(itb->second);
    }
    require(G.edge_rank(e) == 1 || k == 0,
            "nontrivial twistor on trivial edge group '" + G.graph.pair_name(e) + "'");
    zk[e] = k;
  }
  GogIso D = GogIso::identity(Gp);
  for (const std::string& e : positive) {
    require(G.graph.has_dart(e), "orientation dart '" + e + "' missing");
    std::int64_t k = zk.at(e);
    if (k == 0) continue;
    // gamma_e = z_e^-1 on positive darts, so delta(e) = f_e(z_e)^-1
    D.corrections[e] = elt_power(G, G.graph.terminal(e), G.edge_image(e), -k);
  }
  return D;
}

Subdivision subdivide_to_classical(const GogIso& D) {
  TwistClass c = classify_twist(D);
  require(c.kind != TwistClass::Kind::NotADehnTwist, "not a Dehn twist: " + c.reason);
  Subdivision out;
  out.theta.dom = D.dom;
  if (c.kind == TwistClass::Kind::Classical) {
    out.classical = D;
    out.theta.cod = D.dom;
    return out;
  }
  out.changed = true;
  const GraphOfGroups& G0 = *D.dom;

  std::vector<std::string> bad;
  for (const auto& [e, d] : G0.graph.darts()) {
    GroupElement delta = D.correction(e);
    if (G0.edge_rank(e) == 0) {
      if (!elt_is_identity(G0, d.terminal, delta)) bad.push_back(e);
    } else if (!edge_image_membership(G0, e, delta)) {
      bad.push_back(e);
    }
  }

  GraphOfGroups work = G0;
  std::map<std::string, GroupElement> corr;
  for (const auto& [e, d] : G0.graph.darts()) {
    GroupElement g = D.correction(e);
    if (!elt_is_identity(G0, d.terminal, g)) corr[e] = g;
  }
  std::map<std::string, std::vector<std::string>> expansion;
  for (const auto& [e, d] : G0.graph.darts()) expansion[e] = {e};

  for (const std::string& e0 : bad) {
    const std::string cdart = expansion[e0].back();
    const std::string v = work.graph.terminal(cdart);
    require(work.vertex_group(v).is_free(),
            "subdivision requires an explicit free vertex group at '" + v + "'");
    const std::string cb = work.graph.bar(cdart);
    const std::string w = work.graph.terminal(cb);
    const std::string pair = work.graph.pair_name(cdart);
    EdgeGroup old = work.edge_groups.at(pair);
    FreeWord dlt = elt_normalize(work, v, corr.at(cdart)).fw();

    // cyclic generator of <f_{e0}(G_{e0}), delta(e0)> inside G_v
    FreeWord gen;
    std::int64_t im_exp = 0;
    if (old.rank == 1) {
      FreeWord u = elt_normalize(work, v, old.images.at(cdart)).fw();
      RootPower r = fw_primitive_root(u);
      std::optional<std::int64_t> kd = fw_power_of(dlt, r.root);
      require(kd.has_value(), "correction at dart '" + e0 + "' does not commute with the edge image");
      std::int64_t g = std::gcd(r.exponent, iabs(*kd));
      gen = fw_power(r.root, g);
      im_exp = r.exponent / g;
    } else {
      gen = dlt;
    }

    std::string base = e0;
    for (char& ch : base) if (ch == '~') ch = '*';
    const std::string v0 = "v0@" + e0;
    const std::string A = base + "'";
    const std::string B = base + "''";

    SerreGraph ng;
    for (const std::string& vv : work.graph.vertices()) ng.add_vertex(vv);
    ng.add_vertex(v0);
    for (const auto& [dn, dd] : work.graph.darts())
      if (dn != cdart && dn != cb) ng.add_dart(dn, dd.inverse, dd.terminal);
    ng.add_edge(A, w, v0);
    ng.add_edge(B, v0, v);
    work.graph = std::move(ng);

    work.vertex_groups[v0] = GroupRef::free(1);
    FreeWord y = FreeWord::from_letters(GraphOfGroups::vertex_group_tag(v0), {{0, 1}});

    work.edge_groups.erase(pair);
    EdgeGroup ga;
    ga.rank = old.rank;
    if (old.rank == 1) {
      ga.images["~" + A] = old.images.at(cb);
      ga.images[A] = GroupElement::free(fw_power(y, im_exp));
    }
    work.edge_groups[work.graph.pair_name(A)] = ga;
    EdgeGroup gb;
    gb.rank = 1;
    gb.images[B] = GroupElement::free(gen);
    gb.images["~" + B] = GroupElement::free(y);
    work.edge_groups[work.graph.pair_name(B)] = gb;

    corr.erase(cdart);
    auto itcb = corr.find(cb);
    if (itcb != corr.end()) {
      corr["~" + A] = itcb->second;
      corr.erase(itcb);
    }
    corr[B] = GroupElement::free(dlt);

    for (auto& [orig, seq] : expansion) {
      std::vector<std::string> ns;
      for (const std::string& dn : seq) {
        if (dn == cdart) {
          ns.push_back(A);
          ns.push_back(B);
        } else if (dn == cb) {
          ns.push_back("~" + B);
          ns.push_back("~" + A);
        } else {
          ns.push_back(dn);
        }
      }
      seq = std::move(ns);
    }
    out.new_vertices[e0] = v0;
  }

  GogPtr Gp = make_gog(std::move(work));
  out.classical = GogIso::identity(Gp);
  out.classical.corrections = std::move(corr);
  out.theta.cod = Gp;
  for (const auto& [e, seq] : expansion) {
    if (seq.size() == 1 && seq[0] == e) continue;
    PathWord pw;
    pw.start = Gp->graph.initial(seq[0]);
    pw.elts.push_back(elt_identity(*Gp, pw.start));
    for (const std::string& s : seq) {
      pw.darts.push_back(s);
      pw.elts.push_back(elt_identity(*Gp, Gp->graph.terminal(s)));
    }
    out.theta.dart_images[e] = std::move(pw);
  }
  return out;
}

EfficiencyReport efficiency_check(const GogIso& D) {
  TwistClass c = classify_twist(D);
  require(c.kind == TwistClass::Kind::Classical, "efficiency check requires a classical Dehn twist");
  const GraphOfGroups& G = *D.dom;
  for (const std::string& v : G.graph.vertices())
    require(G.vertex_group(v).is_free(), "efficiency check requires explicit free vertex groups");

  EfficiencyReport rep;
  auto surjective = [&](const std::string& e) {
    int vr = G.vertex_group(G.graph.terminal(e)).free_rank;
    if (G.edge_rank(e) == 0) return vr == 0;
    if (vr != 1) return false;
    const FreeWord& u = G.edge_image(e).fw();
    return u.letters().size() == 1 && iabs(u.letters()[0].exp) == 1;
  };
  auto zexp = [&](const std::string& e) { return cyclic_exp(c.data->z.at(e)); };

  for (const std::string& v : G.graph.vertices()) {
    std::vector<std::string> in = G.graph.darts_into(v);
    if (in.size() == 1 && surjective(in[0])) {
      rep.minimal = false;
      rep.details.push_back("(1) valence-one vertex '" + v + "' with surjective edge map");
    }
    if (in.size() == 2 && surjective(in[0]) && surjective(in[1])) {
      rep.no_invisible_vertex = false;
      rep.details.push_back("(2) invisible vertex '" + v + "'");
    }
    for (std::size_t i = 0; i < in.size(); ++i)
      for (std::size_t j = i + 1; j < in.size(); ++j) {
        if (G.edge_rank(in[i]) != 1 || G.edge_rank(in[j]) != 1) continue;
        if (zexp(in[i]) == 0 || zexp(in[j]) == 0) continue;
        if (bondedness(D, in[i], in[j]) == Bonded::Positive) {
          rep.not_positively_bonded = false;
          rep.details.push_back("(5) darts '" + in[i] + "' and '" + in[j] +
                                "' are positively bonded at '" + v + "'");
        }
      }
  }
  for (const auto& [e, d] : G.graph.darts()) {
    if (G.edge_rank(e) != 1) continue;
    if (fw_primitive_root(G.edge_image(e).fw()).exponent != 1) {
      rep.no_proper_power = false;
      rep.details.push_back("(3) edge image at dart '" + e + "' is a proper power");
    }
  }
  for (const std::string& e : canonical_orientation(G.graph)) {
    if (zexp(e) == 0) {
      rep.no_unused_edge = false;
      rep.details.push_back("(4) twistor of edge pair '" + G.graph.pair_name(e) + "' is trivial");
    }
  }
  return rep;
}

Bonded bondedness(const GogIso& D, const std::string& e1, const std::string& e2) {
  const GraphOfGroups& G = *D.dom;
  require(G.graph.terminal(e1) == G.graph.terminal(e2), "bondedness needs a common terminal vertex");
  require(G.edge_rank(e1) == 1 && G.edge_rank(e2) == 1, "bondedness needs rank-1 edge groups");
  const std::string& v = G.graph.terminal(e1);
  require(G.vertex_group(v).is_free(), "bondedness requires an explicit free vertex group");
  TwistClass c = classify_twist(D);
  require(c.kind == TwistClass::Kind::Classical, "bondedness is defined for classical twists");
  auto sign_of = [&](const std::string& e) {
    std::int64_t k = cyclic_exp(c.data->z.at(e));
    require(k != 0, "bondedness needs nontrivial twistors");
    return k > 0 ? 1 : -1;
  };
  int s1 = sign_of(e1), s2 = sign_of(e2);
  FreeWord r1 = fw_primitive_root(G.edge_image(e1).fw()).root;
  FreeWord r2 = fw_primitive_root(G.edge_image(e2).fw()).root;
  // f_{e1}(z1^{n1}) ~ f_{e2}(z2^{n2}) is solvable with n1, n2 of the given
  // signs iff the primitive roots are conjugate with matching signs.
  if (fw_conjugacy(fw_power(r1, s1), fw_power(r2, s2))) return Bonded::Positive;
  if (fw_conjugacy(fw_power(r1, s1), fw_power(r2, -s2))) return Bonded::Negative;
  return Bonded::None;
}

OuterComparison same_outer_by_twistors(const GogIso& D, const GogIso& D2) {
  require(D.dom && D2.dom && (D.dom == D2.dom || D.dom->graph == D2.dom->graph),
          "twistor comparison needs twists on one graph-of-groups");
  TwistClass c1 = classify_twist(D);
  TwistClass c2 = classify_twist(D2);
  require(c1.kind == TwistClass::Kind::Classical && c2.kind == TwistClass::Kind::Classical,
          "twistor comparison requires classical Dehn twists");
  const GraphOfGroups& G = *D.dom;
  OuterComparison out;
  for (const auto& [e, d] : G.graph.darts()) {
    const std::string& v = d.terminal;
    if (G.edge_rank(e) == 0) {
      out.witnesses[e] = elt_identity(G, v);  // f_e(G_e) = 1 intersects trivially
      continue;
    }
    const GroupRef& gr = G.vertex_group(v);
    if (!gr.is_free() || gr.free_rank < 2) {
      out.kind = OuterComparison::Kind::HypothesisFails;
      out.detail = "no trivial-intersection witness at dart '" + e + "'";
      return out;
    }
    FreeWord root = fw_primitive_root(G.edge_image(e).fw()).root;
    bool found = false;
    for (int i = 0; i < gr.free_rank && !found; ++i) {
      FreeWord cand =
          FreeWord::from_letters(GraphOfGroups::vertex_group_tag(v), {{i, 1}});
      if (!fw_power_of(cand, root)) {
        out.witnesses[e] = GroupElement::free(cand);
        found = true;
      }
    }
    if (!found) {
      out.kind = OuterComparison::Kind::HypothesisFails;
      out.detail = "no trivial-intersection witness at dart '" + e + "'";
      return out;
    }
  }
  for (const auto& [e, d] : G.graph.darts()) {
    if (!(c1.data->z.at(e) == c2.data->z.at(e))) {
      out.kind = OuterComparison::Kind::Distinct;
      out.detail = "twistors differ at dart '" + e + "'";
      return out;
    }
  }
  out.kind = OuterComparison::Kind::Equal;
  return out;
}

TrivialEdgeResult trivial_edge_dehn(const GogIso& H) {
  TrivialEdgeResult r;
  if (!same_underlying(H)) {
    r.reason = "not an automorphism of a single graph-of-groups";
    return r;
  }
  if (!H.graph_identity()) {
    r.reason = "graph map is not the identity";
    return r;
  }
  for (const auto& [e, d] : H.dom->graph.darts())
    if (H.dom->edge_rank(e) != 0) {
      r.reason = "edge pair '" + H.dom->graph.pair_name(e) + "' has a nontrivial group";
      return r;
    }
  for (const std::string& v : H.dom->graph.vertices())
    if (!H.vertex_iso(v).is_identity_map()) {
      r.reason = "vertex iso at '" + v + "' is not the identity";
      return r;
    }
  r.is_dehn_twist = true;
  return r;
}

}  // namespace gog
