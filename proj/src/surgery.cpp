#include "gog/surgery.hpp"

#include <algorithm>

#include "gog/errors.hpp"

namespace gog {

namespace {

bool in_sub(const SubgraphSpec& s, const std::string& v) { return s.vertices.count(v) != 0; }

PathWord boxed_word(const GraphOfGroups& G, const std::string& v, const GroupElement& g) {
  return PathWord::at_vertex(v, g);
}

// gamma^-1 * theta0(fE) * gamma reduced to a vertex element of G_{v(E)},
// if condition (3) holds for this connector.
std::optional<GroupElement> conjugated_image(const GraphOfGroups& G0, const GroupIso& theta0,
                                             const PathWord& gamma, const GroupElement& fE) {
  PathWord w = theta0.apply_word(fE);
  PathWord u = pw_reduce(
      G0, pw_multiply(G0, pw_inverse(G0, gamma), pw_multiply(G0, w, gamma)));
  if (u.path_length() != 0) return std::nullopt;
  return u.elts[0];
}

}  // namespace

GogPtr subgraph_gog(const GraphOfGroups& G, const SubgraphSpec& spec) {
  require(!spec.vertices.empty(), "empty subgraph");
  GraphOfGroups sub;
  for (const std::string& v : spec.vertices) {
    require(G.graph.has_vertex(v), "subgraph vertex '" + v + "' missing");
    sub.graph.add_vertex(v);
    sub.vertex_groups[v] = G.vertex_group(v);
  }
  for (const std::string& p : spec.edges) {
    require(G.graph.has_dart(p), "subgraph edge '" + p + "' missing");
    const std::string& b = G.graph.bar(p);
    require(in_sub(spec, G.graph.terminal(p)) && in_sub(spec, G.graph.terminal(b)),
            "subgraph edge '" + p + "' leaves the subgraph");
    sub.graph.add_dart(p, b, G.graph.terminal(p));
    sub.graph.add_dart(b, p, G.graph.terminal(b));
    sub.edge_groups[p] = G.edge_group(p);
  }
  return make_gog(std::move(sub));
}

QuotientResult quotient_gog(GogPtr G, const SubgraphSpec& sub, const std::string& p0,
                            const std::map<std::string, PathWord>& gammas) {
  require(G != nullptr, "missing graph-of-groups");
  require(in_sub(sub, p0), "basepoint '" + p0 + "' not in the subgraph");
  QuotientResult out;
  out.sub = subgraph_gog(*G, sub);
  {
    GogReport r = gog_validate(*out.sub);
    require(r.valid(), "subgraph invalid: " + (r.violations.empty() ? "" : r.violations[0]));
  }
  out.p0 = p0;
  out.v0 = "V0@" + p0;
  require(!G->graph.has_vertex(out.v0), "vertex name '" + out.v0 + "' already taken");

  std::map<std::string, PathWord> tree = tree_paths(*out.sub, p0);

  GraphOfGroups q;
  q.graph.add_vertex(out.v0);
  for (const std::string& v : G->graph.vertices())
    if (!in_sub(sub, v)) q.graph.add_vertex(v);
  for (const auto& [e, d] : G->graph.darts()) {
    if (sub.edges.count(G->graph.pair_name(e))) continue;
    q.graph.add_dart(e, d.inverse, in_sub(sub, d.terminal) ? out.v0 : d.terminal);
  }
  for (const std::string& v : G->graph.vertices())
    if (!in_sub(sub, v)) q.vertex_groups[v] = G->vertex_group(v);
  q.vertex_groups[out.v0] = GroupRef::pi1(out.sub, p0);

  // connectors for every dart whose terminal got swallowed
  for (const auto& [e, d] : G->graph.darts()) {
    if (sub.edges.count(G->graph.pair_name(e)) || !in_sub(sub, d.terminal)) continue;
    auto it = gammas.find(e);
    PathWord g = it != gammas.end() ? pw_reduce(*out.sub, it->second) : tree.at(d.terminal);
    require(g.start == p0 && pw_end(*out.sub, g) == d.terminal,
            "connector for dart '" + e + "' must run from '" + p0 + "' to '" + d.terminal + "'");
    out.gammas[e] = std::move(g);
  }

  for (const auto& [pair, eg] : G->edge_groups) {
    if (sub.edges.count(pair)) continue;
    EdgeGroup neg;
    neg.rank = eg.rank;
    for (const auto& [e, img] : eg.images) {
      auto it = out.gammas.find(e);
      if (it == out.gammas.end()) {
        neg.images[e] = img;
        continue;
      }
      // f_E = ad_{gamma_e} . f_e, landing in pi1(G0, P0)
      const PathWord& gm = it->second;
      PathWord w = pw_multiply(
          *out.sub, gm,
          pw_multiply(*out.sub, boxed_word(*out.sub, G->graph.terminal(e), img),
                      pw_inverse(*out.sub, gm)));
      neg.images[e] = GroupElement::pi1(std::move(w));
    }
    q.edge_groups[pair] = std::move(neg);
  }
  out.quotient = make_gog(std::move(q));
  {
    GogReport r = gog_validate(*out.quotient);
    require(r.valid(), "quotient invalid: " + (r.violations.empty() ? "" : r.violations[0]));
  }

  out.theta.dom = out.quotient;
  out.theta.cod = G;
  out.theta.vertex_map[out.v0] = p0;
  out.theta.vertex_rules[out.v0] = {PathMorphism::VertexRule::Kind::Unbox, GroupIso()};
  for (const auto& [e, d] : out.quotient->graph.darts()) {
    auto suf = out.gammas.find(e);
    auto pre = out.gammas.find(out.quotient->graph.bar(e));
    if (suf == out.gammas.end() && pre == out.gammas.end()) continue;
    PathWord img;
    img.start = G->graph.initial(e);
    img.elts = {elt_identity(*G, img.start), elt_identity(*G, G->graph.terminal(e))};
    img.darts = {e};
    if (pre != out.gammas.end()) img = pw_multiply(*G, pre->second, img);
    if (suf != out.gammas.end()) img = pw_multiply(*G, img, pw_inverse(*G, suf->second));
    out.theta.dart_images[e] = std::move(img);
  }
  return out;
}

QuotientIso quotient_iso(const GogIso& H, const QuotientResult& Q) {
  require(H.dom && (H.dom == H.cod || H.dom->graph == H.cod->graph) && H.graph_identity(),
          "quotient iso requires a graph-identity automorphism");
  QuotientIso out;
  out.local = GogIso::identity(Q.sub);
  for (const std::string& v : Q.sub->graph.vertices()) {
    out.local.vertex_isos[v] = H.vertex_iso(v);
    // keep contexts pointing at the subgraph
  }
  for (const auto& [e, d] : Q.sub->graph.darts()) {
    GroupElement c = H.correction(e);
    if (!elt_is_identity(*Q.sub, d.terminal, c)) out.local.corrections[e] = c;
    if (Q.sub->edge_rank(e) == 1)
      out.local.edge_exps[Q.sub->graph.pair_name(e)] = H.edge_exp(e);
  }

  GogIso Hq = GogIso::identity(Q.quotient);
  for (const std::string& v : Q.quotient->graph.vertices()) {
    if (v == Q.v0) continue;
    Hq.vertex_isos[v] = H.vertex_iso(v);
  }
  GroupCtx v0ctx{Q.quotient, Q.v0, false};
  Hq.vertex_isos[Q.v0] =
      GroupIso::induced(v0ctx, v0ctx, std::make_shared<const GogIso>(out.local));
  for (const auto& [e, d] : Q.quotient->graph.darts()) {
    if (Q.quotient->edge_rank(e) == 1)
      Hq.edge_exps[Q.quotient->graph.pair_name(e)] = H.edge_exp(e);
    auto it = Q.gammas.find(e);
    if (it == Q.gammas.end()) {
      GroupElement c = H.correction(e);
      if (!elt_is_identity(*H.dom, H.dom->graph.terminal(e), c)) Hq.corrections[e] = c;
      continue;
    }
    // delta(E) = H_*(gamma_e) delta(e) gamma_e^-1, boxed into pi1(G0, P0)
    const PathWord& gm = it->second;
    const std::string& tv = H.dom->graph.terminal(e);
    PathWord w = pw_multiply(
        *Q.sub, iso_apply(out.local, gm),
        pw_multiply(*Q.sub, boxed_word(*Q.sub, tv, H.correction(e)), pw_inverse(*Q.sub, gm)));
    if (!pw_is_identity(*Q.sub, w)) Hq.corrections[e] = GroupElement::pi1(std::move(w));
  }
  out.iso = std::move(Hq);
  return out;
}

MultiQuotientResult quotient_multi(GogPtr G, const std::vector<SubgraphSpec>& subs,
                                   const std::map<std::string, std::string>& basepoints) {
  std::set<std::string> seen;
  for (const SubgraphSpec& s : subs)
    for (const std::string& v : s.vertices)
      require(seen.insert(v).second, "subgraphs overlap at vertex '" + v + "'");

  std::vector<SubgraphSpec> order = subs;
  std::sort(order.begin(), order.end(), [](const SubgraphSpec& a, const SubgraphSpec& b) {
    return *a.vertices.begin() < *b.vertices.begin();
  });
  MultiQuotientResult out;
  out.quotient = std::move(G);
  for (const SubgraphSpec& s : order) {
    auto it = basepoints.find(*s.vertices.begin());
    std::string p0 = it != basepoints.end() ? it->second : *s.vertices.begin();
    QuotientResult step = quotient_gog(out.quotient, s, p0);
    out.quotient = step.quotient;
    out.steps.push_back(std::move(step));
  }
  return out;
}

PathWord MultiQuotientResult::apply_theta(const PathWord& w) const {
  PathWord cur = w;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) cur = it->theta.apply(cur);
  return cur;
}

BlowupPlanResult blowup_plan(GogPtr Gq, const GogIso& Hq, const std::string& v0, GogPtr G0,
                             const GogIso& H0, const GroupIso& theta0) {
  require(Gq && G0, "missing graph-of-groups");
  require(Gq->graph.has_vertex(v0), "no vertex '" + v0 + "'");
  require(Hq.graph_identity(), "blow-up requires a graph-identity automorphism");
  const std::string& p0 = theta0.cod().vertex;
  require(G0->graph.has_vertex(p0), "theta0 codomain basepoint missing");

  // theta0 must intertwine H_{V0} with H0_* on the generators of G_{V0}
  GroupIso hv0 = Hq.vertex_iso(v0);
  for (const GroupElement& x : group_generators(*Gq, v0)) {
    PathWord lhs = theta0.apply_word(hv0.apply(x));
    PathWord rhs = iso_apply(H0, theta0.apply_word(x));
    require(pw_equal(*G0, lhs, rhs),
            "theta0 does not semi-conjugate the vertex iso at '" + v0 + "' to H0");
  }

  GogIso H0inv = iso_invert(H0);
  BlowupPlanResult out;
  for (const auto& [E, d] : Gq->graph.darts()) {
    if (d.terminal != v0) continue;
    PathWord w = theta0.apply_word(Hq.correction(E));
    std::optional<ZeroWitness> zw = is_h_zero(H0inv, w);
    if (!zw) {
      out.kind = BlowupPlanResult::Kind::NotLocallyZero;
      out.dart = E;
      return out;
    }
    BlowupPlan::Attach att{zw->vertex, zw->gamma, zw->g};
    if (Gq->edge_rank(E) == 1) {
      GroupElement fE = Gq->edge_image(E);
      if (!conjugated_image(*G0, theta0, att.gamma, fE)) {
        // bounded search over alternative connectors from P0
        bool found = false;
        auto slot_elts = [&](const std::string& v) {
          std::vector<GroupElement> cs = {elt_identity(*G0, v)};
          for (const GroupElement& g : group_generators(*G0, v))
            for (int k : {1, -1, 2, -2}) cs.push_back(elt_power(*G0, v, g, k));
          return cs;
        };
        std::vector<std::vector<std::string>> paths = {{}};
        for (std::size_t q = 0; q <= 3 && !found; ++q) {
          std::vector<std::vector<std::string>> next;
          for (const std::vector<std::string>& path : paths) {
            std::vector<std::string> stops = {p0};
            for (const std::string& e : path) stops.push_back(G0->graph.terminal(e));
            std::vector<std::vector<GroupElement>> cands;
            for (const std::string& v : stops) cands.push_back(slot_elts(v));
            std::vector<std::size_t> idx(stops.size(), 0);
            while (!found) {
              PathWord gm;
              gm.start = p0;
              gm.darts = path;
              for (std::size_t i = 0; i < stops.size(); ++i) gm.elts.push_back(cands[i][idx[i]]);
              // condition (4) with this connector, then condition (3)
              PathWord res = pw_reduce(
                  *G0, pw_multiply(*G0, iso_apply(H0, pw_inverse(*G0, gm)),
                                   pw_multiply(*G0, w, gm)));
              if (res.path_length() == 0 && conjugated_image(*G0, theta0, gm, fE)) {
                att = {stops.back(), gm, res.elts[0]};
                found = true;
                break;
              }
              std::size_t i = 0;
              for (; i < idx.size(); ++i) {
                if (++idx[i] < cands[i].size()) break;
                idx[i] = 0;
              }
              if (i == idx.size()) break;
            }
            if (found || q == 3) continue;
            for (const auto& [e2, d2] : G0->graph.darts())
              if (G0->graph.initial(e2) == stops.back()) {
                std::vector<std::string> np = path;
                np.push_back(e2);
                next.push_back(std::move(np));
              }
          }
          paths = std::move(next);
        }
        if (!found) {
          out.kind = BlowupPlanResult::Kind::NotCompatible;
          out.dart = E;
          return out;
        }
      }
    }
    out.plan.attach[E] = std::move(att);
  }
  return out;
}

BlowupResult blowup(GogPtr Gq, const GogIso& Hq, const std::string& v0, GogPtr G0,
                    const GogIso& H0, const GroupIso& theta0, const BlowupPlan& plan) {
  require(Gq && G0, "missing graph-of-groups");
  for (const std::string& v : G0->graph.vertices())
    require(!Gq->graph.has_vertex(v), "vertex name clash at '" + v + "'");
  for (const auto& [e, d] : G0->graph.darts())
    require(!Gq->graph.has_dart(e), "dart name clash at '" + e + "'");
  for (const auto& [E, d] : Gq->graph.darts())
    if (d.terminal == v0)
      require(plan.attach.count(E), "plan misses dart '" + E + "'");

  const std::string& p0 = theta0.cod().vertex;
  GraphOfGroups g;
  for (const std::string& v : Gq->graph.vertices())
    if (v != v0) {
      g.graph.add_vertex(v);
      g.vertex_groups[v] = Gq->vertex_group(v);
    }
  for (const std::string& v : G0->graph.vertices()) {
    g.graph.add_vertex(v);
    g.vertex_groups[v] = G0->vertex_group(v);
  }
  for (const auto& [e, d] : G0->graph.darts()) g.graph.add_dart(e, d.inverse, d.terminal);
  for (const auto& [E, d] : Gq->graph.darts()) {
    std::string t = d.terminal == v0 ? plan.attach.at(E).vertex : d.terminal;
    g.graph.add_dart(E, d.inverse, t);
  }
  for (const auto& [pair, eg] : G0->edge_groups) g.edge_groups[pair] = eg;
  for (const auto& [pair, eg] : Gq->edge_groups) {
    EdgeGroup neg;
    neg.rank = eg.rank;
    for (const auto& [E, img] : eg.images) {
      auto it = plan.attach.find(E);
      if (it == plan.attach.end()) {
        neg.images[E] = img;
        continue;
      }
      // f_e(x) = gamma_E^-1 theta0(f_E(x)) gamma_E
      std::optional<GroupElement> u = conjugated_image(*G0, theta0, it->second.gamma, img);
      require(u.has_value(), "plan violates condition (3) at dart '" + E + "'");
      neg.images[E] = *u;
    }
    g.edge_groups[pair] = std::move(neg);
  }
  BlowupResult out;
  out.gog = make_gog(std::move(g));
  {
    GogReport r = gog_validate(*out.gog);
    require(r.valid(), "blow-up invalid: " + (r.violations.empty() ? "" : r.violations[0]));
  }

  GogIso H = GogIso::identity(out.gog);
  for (const std::string& v : out.gog->graph.vertices()) {
    GroupIso h = G0->graph.has_vertex(v) ? H0.vertex_iso(v) : Hq.vertex_iso(v);
    if (h.kind() != GroupIso::Kind::Identity) H.vertex_isos[v] = std::move(h);
  }
  for (const auto& [E, d] : out.gog->graph.darts()) {
    if (G0->graph.has_dart(E)) {
      GroupElement c = H0.correction(E);
      if (!elt_is_identity(*G0, G0->graph.terminal(E), c)) H.corrections[E] = c;
      if (G0->edge_rank(E) == 1) H.edge_exps[G0->graph.pair_name(E)] = H0.edge_exp(E);
      continue;
    }
    auto it = plan.attach.find(E);
    if (it != plan.attach.end()) {
      if (!elt_is_identity(*out.gog, it->second.vertex, it->second.g))
        H.corrections[E] = it->second.g;
    } else {
      GroupElement c = Hq.correction(E);
      if (!elt_is_identity(*Gq, Gq->graph.terminal(E), c)) H.corrections[E] = c;
    }
    if (Gq->edge_rank(E) == 1) H.edge_exps[Gq->graph.pair_name(E)] = Hq.edge_exp(E);
  }
  {
    IsoReport r = iso_validate(H);
    require(r.valid(), "blow-up iso invalid: " + (r.violations.empty() ? "" : r.violations[0]));
  }
  out.iso = std::move(H);

  out.theta.dom = Gq;
  out.theta.cod = out.gog;
  out.theta.vertex_map[v0] = p0;
  out.theta.vertex_rules[v0] = {PathMorphism::VertexRule::Kind::Iso, theta0};
  for (const auto& [E, d] : Gq->graph.darts()) {
    auto suf = plan.attach.find(E);
    auto pre = plan.attach.find(Gq->graph.bar(E));
    if (suf == plan.attach.end() && pre == plan.attach.end()) continue;
    PathWord img;
    img.start = out.gog->graph.initial(E);
    img.elts = {elt_identity(*out.gog, img.start),
                elt_identity(*out.gog, out.gog->graph.terminal(E))};
    img.darts = {E};
    if (pre != plan.attach.end()) img = pw_multiply(*out.gog, pre->second.gamma, img);
    if (suf != plan.attach.end())
      img = pw_multiply(*out.gog, img, pw_inverse(*out.gog, suf->second.gamma));
    out.theta.dart_images[E] = std::move(img);
  }
  return out;
}

bool partial_dehn_detect(const GogIso& H, const std::set<std::string>& exceptional) {
  if (!H.dom || !H.cod || !(H.dom == H.cod || H.dom->graph == H.cod->graph)) return false;
  if (!H.graph_identity()) return false;
  const GraphOfGroups& G = *H.dom;
  for (const std::string& v : exceptional)
    if (!G.graph.has_vertex(v)) return false;
  for (const std::string& v : G.graph.vertices())
    if (!exceptional.count(v) && !H.vertex_iso(v).is_identity_map()) return false;
  for (const auto& [e, d] : G.graph.darts()) {
    if (G.edge_rank(e) == 1 && H.edge_exp(e) != 1) return false;
    if (exceptional.count(d.terminal) && G.edge_rank(e) != 0) return false;
    if (G.edge_rank(e) == 1) {
      GroupElement delta = H.correction(e);
      GroupElement u = G.edge_image(e);
      if (!elt_equal(G, d.terminal, elt_multiply(G, d.terminal, delta, u),
                     elt_multiply(G, d.terminal, u, delta)))
        return false;
    }
  }
  return true;
}

PartialBlowupResult partial_dehn_blowup(const GogIso& H,
                                        const std::map<std::string, LocalTwist>& locals) {
  std::set<std::string> ex;
  for (const auto& [v, lt] : locals) ex.insert(v);
  require(partial_dehn_detect(H, ex), "not a partial Dehn twist relative to the given vertices");
  PartialBlowupResult out;
  GogPtr cur = H.dom;
  GogIso curH = H;
  for (const auto& [v0, lt] : locals) {
    TwistClass c = classify_twist(lt.d0);
    require(c.kind != TwistClass::Kind::NotADehnTwist,
            "local iso at '" + v0 + "' is not a Dehn twist: " + c.reason);
    BlowupPlanResult pr = blowup_plan(cur, curH, v0, lt.g0, lt.d0, lt.theta0);
    if (pr.kind != BlowupPlanResult::Kind::Plan) {
      out.fail_vertex = v0;
      out.fail_dart = pr.dart;
      return out;
    }
    BlowupResult br = blowup(cur, curH, v0, lt.g0, lt.d0, lt.theta0, pr.plan);
    cur = br.gog;
    curH = br.iso;
    out.thetas.push_back(std::move(br.theta));
  }
  TwistClass c = classify_twist(curH);
  require(c.kind != TwistClass::Kind::NotADehnTwist,
          "blow-up did not produce a Dehn twist: " + c.reason);
  out.ok = true;
  out.gog = cur;
  out.iso = curH;
  return out;
}

}  // namespace gog
