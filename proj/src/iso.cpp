#include "gog/iso.hpp"

#include <algorithm>
#include <deque>

#include "gog/errors.hpp"

namespace gog {

namespace {

// Canonical key of a vertex-group element, for search tables.
std::string elt_key(const GraphOfGroups& G, const std::string& v, const GroupElement& g) {
  GroupElement n = elt_normalize(G, v, g);
  if (n.is_free()) return "f:" + fw_print(n.fw());
  return "p:" + pw_print(*G.vertex_group(v).sub, n.pw());
}

}  // namespace

// ---- GroupIso ---------------------------------------------------------------

GroupIso GroupIso::identity(GroupCtx ctx) {
  GroupIso h;
  h.kind_ = Kind::Identity;
  h.dom_ = ctx;
  h.cod_ = std::move(ctx);
  return h;
}

GroupIso GroupIso::free_images(GroupCtx dom, GroupCtx cod, std::vector<GroupElement> images) {
  GroupIso h;
  h.kind_ = Kind::FreeImages;
  h.dom_ = std::move(dom);
  h.cod_ = std::move(cod);
  h.images_ = std::move(images);
  return h;
}

GroupIso GroupIso::theta(GroupCtx dom, GroupCtx cod, std::vector<PathWord> images) {
  GroupIso h;
  h.kind_ = Kind::Theta;
  h.dom_ = std::move(dom);
  h.cod_ = std::move(cod);
  h.cod_.is_pi1 = true;
  h.word_images_ = std::move(images);
  return h;
}

GroupIso GroupIso::induced(GroupCtx dom, GroupCtx cod, GogIsoPtr sub) {
  GroupIso h;
  h.kind_ = Kind::Induced;
  h.dom_ = std::move(dom);
  h.cod_ = std::move(cod);
  h.sub_ = std::move(sub);
  return h;
}

GroupIso GroupIso::composite(std::vector<GroupIso> factors) {
  require(!factors.empty(), "empty composite group iso");
  if (factors.size() == 1) return factors[0];
  GroupIso h;
  h.kind_ = Kind::Composite;
  h.dom_ = factors.front().dom();
  h.cod_ = factors.back().cod();
  h.factors_ = std::move(factors);
  return h;
}

GroupElement GroupIso::apply(const GroupElement& g) const {
  switch (kind_) {
    case Kind::Identity:
      return g;
    case Kind::FreeImages: {
      require(g.is_free(), "free_images iso applied to a pi1 element");
      GroupElement acc = elt_identity(*cod_.gog, cod_.vertex);
      for (const Letter& l : g.fw().letters()) {
        require(l.gen >= 0 && l.gen < static_cast<int>(images_.size()),
                "generator index out of range for group iso");
        acc = elt_multiply(*cod_.gog, cod_.vertex, acc,
                           elt_power(*cod_.gog, cod_.vertex, images_[l.gen], l.exp));
      }
      return acc;
    }
    case Kind::Theta:
      return GroupElement::pi1(apply_word(g));
    case Kind::Induced: {
      require(!g.is_free() || g.fw().is_identity(), "induced iso applied to a free element");
      if (g.is_free()) return elt_identity(*cod_.gog, cod_.vertex);
      return GroupElement::pi1(iso_apply(*sub_, g.pw()));
    }
    case Kind::Composite: {
      GroupElement acc = g;
      for (const GroupIso& f : factors_) acc = f.apply(acc);
      return acc;
    }
  }
  fail("unreachable group iso kind");
}

PathWord GroupIso::apply_word(const GroupElement& g) const {
  if (kind_ == Kind::Theta) {
    require(g.is_free(), "theta applied to a pi1 element");
    PathWord acc = PathWord::at_vertex(cod_.vertex, elt_identity(*cod_.gog, cod_.vertex));
    for (const Letter& l : g.fw().letters()) {
      require(l.gen >= 0 && l.gen < static_cast<int>(word_images_.size()),
              "generator index out of range for theta");
      acc = pw_multiply(*cod_.gog, acc, pw_power(*cod_.gog, word_images_[l.gen], l.exp));
    }
    return acc;
  }
  GroupElement out = apply(g);
  if (!out.is_free()) return out.pw();
  return PathWord::at_vertex(cod_.vertex, out);
}

GroupIso GroupIso::inverse() const {
  switch (kind_) {
    case Kind::Identity: {
      GroupIso h = *this;
      std::swap(h.dom_, h.cod_);
      return h;
    }
    case Kind::FreeImages: {
      if (!inv_images_) {
        // Bounded search: express each codomain generator as a product of the
        // images; valid at the desk scales this artifact works at.
        const GraphOfGroups& C = *cod_.gog;
        std::vector<GroupElement> targets = group_generators(C, cod_.vertex);
        const int rank = static_cast<int>(images_.size());
        std::map<std::string, FreeWord> seen;  // codomain key -> domain word
        std::deque<std::pair<GroupElement, FreeWord>> queue;
        std::string dom_tag = GraphOfGroups::vertex_group_tag(dom_.vertex);
        GroupElement id = elt_identity(C, cod_.vertex);
        seen[elt_key(C, cod_.vertex, id)] = FreeWord(dom_tag);
        queue.push_back({id, FreeWord(dom_tag)});
        auto found = std::make_shared<std::vector<GroupElement>>();
        std::vector<std::optional<FreeWord>> expr(targets.size());
        std::size_t missing = targets.size();
        for (std::size_t t = 0; t < targets.size() && missing; ++t)
          if (elt_is_identity(C, cod_.vertex, targets[t])) { expr[t] = FreeWord(dom_tag); --missing; }
        std::size_t steps = 0;
        while (!queue.empty() && missing && steps < 200000) {
          auto [cur, word] = queue.front();
          queue.pop_front();
          for (int i = 0; i < rank && missing; ++i) {
            for (int s : {1, -1}) {
              ++steps;
              GroupElement nxt = elt_multiply(C, cod_.vertex, cur,
                                              elt_power(C, cod_.vertex, images_[i], s));
              std::string key = elt_key(C, cod_.vertex, nxt);
              if (seen.count(key)) continue;
              FreeWord nword = fw_multiply(word, FreeWord::from_letters(dom_tag, {{i, s}}));
              if (nword.length() > 8) continue;
              seen[key] = nword;
              for (std::size_t t = 0; t < targets.size(); ++t) {
                if (expr[t]) continue;
                if (elt_equal(C, cod_.vertex, nxt, targets[t])) {
                  expr[t] = nword;
                  --missing;
                }
              }
              queue.push_back({nxt, nword});
            }
          }
        }
        require(missing == 0, "could not invert free-images group iso by bounded search");
        for (auto& e : expr) found->push_back(GroupElement::free(*e));
        inv_images_ = found;
      }
      return free_images(cod_, dom_, *inv_images_);
    }
    case Kind::Theta:
      fail("theta identifications cannot be inverted");
    case Kind::Induced:
      return induced(cod_, dom_, std::make_shared<const GogIso>(iso_invert(*sub_)));
    case Kind::Composite: {
      std::vector<GroupIso> rev;
      for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) rev.push_back(it->inverse());
      return composite(std::move(rev));
    }
  }
  fail("unreachable group iso kind");
}

bool GroupIso::is_identity_map() const {
  if (kind_ == Kind::Identity) return true;
  if (!dom_.gog || !cod_.gog) return false;
  if (dom_.vertex != cod_.vertex) return false;
  if (dom_.is_pi1 || cod_.is_pi1) return false;
  for (const GroupElement& g : group_generators(*dom_.gog, dom_.vertex)) {
    GroupElement h = apply(g);
    if (!elt_equal(*cod_.gog, cod_.vertex, g, h)) return false;
  }
  return true;
}

// ---- GogIso -----------------------------------------------------------------

const std::string& GogIso::map_vertex(const std::string& v) const {
  auto it = vertex_map.find(v);
  return it == vertex_map.end() ? v : it->second;
}

const std::string& GogIso::map_dart(const std::string& e) const {
  auto it = dart_map.find(e);
  return it == dart_map.end() ? e : it->second;
}

GroupIso GogIso::vertex_iso(const std::string& v) const {
  auto it = vertex_isos.find(v);
  if (it != vertex_isos.end()) return it->second;
  return GroupIso::identity(GroupCtx{dom, v, false});
}

int GogIso::edge_exp(const std::string& dart) const {
  auto it = edge_exps.find(dom->graph.pair_name(dart));
  return it == edge_exps.end() ? 1 : it->second;
}

GroupElement GogIso::correction(const std::string& dart) const {
  auto it = corrections.find(dart);
  if (it != corrections.end()) return it->second;
  return elt_identity(*cod, cod->graph.terminal(map_dart(dart)));
}

bool GogIso::graph_identity() const {
  for (const auto& [v, w] : vertex_map)
    if (v != w) return false;
  for (const auto& [e, f] : dart_map)
    if (e != f) return false;
  return true;
}

GogIso GogIso::identity(GogPtr g) {
  GogIso h;
  h.dom = g;
  h.cod = std::move(g);
  return h;
}

IsoReport iso_validate(const GogIso& H) {
  IsoReport rep;
  require(H.dom && H.cod, "iso without domain/codomain");
  for (const GogReport& r : {gog_validate(*H.dom), gog_validate(*H.cod)})
    for (const std::string& v : r.violations) rep.violations.push_back("gog: " + v);
  if (!rep.valid()) return rep;

  // graph map: bijective, bar- and tau-equivariant
  std::set<std::string> vimg, dimg;
  for (const std::string& v : H.dom->graph.vertices()) {
    const std::string& w = H.map_vertex(v);
    if (!H.cod->graph.has_vertex(w))
      rep.violations.push_back("vertex '" + v + "' maps to unknown vertex '" + w + "'");
    else if (!vimg.insert(w).second)
      rep.violations.push_back("graph map not injective at vertex '" + w + "'");
  }
  for (const auto& [e, d] : H.dom->graph.darts()) {
    const std::string& f = H.map_dart(e);
    if (!H.cod->graph.has_dart(f)) {
      rep.violations.push_back("dart '" + e + "' maps to unknown dart '" + f + "'");
      continue;
    }
    if (!dimg.insert(f).second) rep.violations.push_back("graph map not injective at dart '" + f + "'");
    if (H.map_dart(H.dom->graph.bar(e)) != H.cod->graph.bar(f))
      rep.violations.push_back("graph map does not commute with bar at dart '" + e + "'");
    if (H.map_vertex(d.terminal) != H.cod->graph.terminal(f))
      rep.violations.push_back("graph map does not commute with tau at dart '" + e + "'");
    if (H.dom->edge_rank(e) != H.cod->edge_rank(f))
      rep.violations.push_back("edge rank changes along dart '" + e + "'");
  }
  if (vimg.size() != H.cod->graph.vertices().size())
    rep.violations.push_back("graph map not surjective on vertices");
  if (!rep.valid()) return rep;

  for (const std::string& v : H.dom->graph.vertices()) {
    IsoReport r = group_iso_validate(H.vertex_iso(v));
    for (const std::string& viol : r.violations)
      rep.violations.push_back("vertex iso at '" + v + "': " + viol);
  }

  for (const auto& [e, d] : H.dom->graph.darts()) {
    const std::string& f = H.map_dart(e);
    const std::string& tv = H.cod->graph.terminal(f);
    GroupElement delta = H.correction(e);
    try {
      elt_check(*H.cod, tv, delta);
    } catch (const Error& err) {
      rep.violations.push_back("correction at dart '" + e + "': " + err.what());
      continue;
    }
    if (H.dom->edge_rank(e) != 1) continue;  // vacuous for trivial edge groups
    int s = H.edge_exp(e);
    if (s != 1 && s != -1) {
      rep.violations.push_back("edge iso exponent at '" + e + "' must be +-1");
      continue;
    }
    // edge-iso compatibility on the edge-group generator:
    //   H_{tau(e)}(f_e(x)) = delta(e) f_{H(e)}(H_e(x)) delta(e)^-1
    GroupElement lhs = H.vertex_iso(d.terminal).apply(H.dom->edge_image(e));
    GroupElement rhs = elt_multiply(
        *H.cod, tv, delta,
        elt_multiply(*H.cod, tv, elt_power(*H.cod, tv, H.cod->edge_image(f), s),
                     elt_inverse(*H.cod, tv, delta)));
    if (!elt_equal(*H.cod, tv, lhs, rhs))
      rep.violations.push_back("correction identity fails at dart '" + e + "'");
  }
  return rep;
}

GroupElement iso_apply_vertex(const GogIso& H, const std::string& v, const GroupElement& g) {
  return H.vertex_iso(v).apply(g);
}

PathWord iso_apply(const GogIso& H, const PathWord& w) {
  pw_require_connected(*H.dom, w);
  std::string at = w.start;
  PathWord acc = PathWord::at_vertex(H.map_vertex(at), iso_apply_vertex(H, at, w.elts[0]));
  for (std::size_t i = 0; i < w.darts.size(); ++i) {
    const std::string& e = w.darts[i];
    const std::string& f = H.map_dart(e);
    const std::string& fbar = H.cod->graph.bar(f);
    // H_*(t_e) = delta(ebar) t_{H(e)} delta(e)^-1
    PathWord piece;
    piece.start = H.cod->graph.terminal(fbar);
    piece.elts = {H.correction(H.dom->graph.bar(e)),
                  elt_inverse(*H.cod, H.cod->graph.terminal(f), H.correction(e))};
    piece.darts = {f};
    acc = pw_multiply(*H.cod, acc, piece);
    at = H.dom->graph.terminal(e);
    acc = pw_multiply(*H.cod, acc,
                      PathWord::at_vertex(H.map_vertex(at), iso_apply_vertex(H, at, w.elts[i + 1])));
  }
  return acc;
}

GogIso iso_compose(const GogIso& H2, const GogIso& H1) {
  require(H1.cod && H2.dom && (H1.cod == H2.dom || H1.cod->graph == H2.dom->graph),
          "iso composition: domain mismatch");
  GogIso H;
  H.dom = H1.dom;
  H.cod = H2.cod;
  for (const std::string& v : H1.dom->graph.vertices()) {
    H.vertex_map[v] = H2.map_vertex(H1.map_vertex(v));
    GroupIso inner = H1.vertex_iso(v);
    GroupIso outer = H2.vertex_iso(H1.map_vertex(v));
    H.vertex_isos[v] = GroupIso::composite({inner, outer});
  }
  for (const auto& [e, d] : H1.dom->graph.darts()) {
    H.dart_map[e] = H2.map_dart(H1.map_dart(e));
    std::string pair = H1.dom->graph.pair_name(e);
    H.edge_exps[pair] = H1.edge_exp(e) * H2.edge_exp(H1.map_dart(e));
    // delta(e) = H2_{tau(H1(e))}(delta1(e)) delta2(H1(e))
    const std::string& mid = H1.cod->graph.terminal(H1.map_dart(e));
    const std::string& tv = H2.cod->graph.terminal(H2.map_dart(H1.map_dart(e)));
    GroupElement a = H2.vertex_iso(mid).apply(H1.correction(e));
    H.corrections[e] = elt_multiply(*H2.cod, tv, a, H2.correction(H1.map_dart(e)));
  }
  return H;
}

GogIso iso_invert(const GogIso& H) {
  GogIso R;
  R.dom = H.cod;
  R.cod = H.dom;
  std::map<std::string, std::string> inv_dart;
  for (const auto& [e, d] : H.dom->graph.darts()) inv_dart[H.map_dart(e)] = e;
  for (const std::string& v : H.dom->graph.vertices()) {
    R.vertex_map[H.map_vertex(v)] = v;
    R.vertex_isos[H.map_vertex(v)] = H.vertex_iso(v).inverse();
  }
  for (const auto& [f, e0] : inv_dart) {
    R.dart_map[f] = e0;
    R.edge_exps[H.cod->graph.pair_name(f)] = H.edge_exp(e0);  // exponents are +-1
    // delta^-1(f) = (H_{tau(e0)})^-1 (delta(e0)^-1)
    const std::string& tv = H.cod->graph.terminal(f);
    GroupElement d = elt_inverse(*H.cod, tv, H.correction(e0));
    R.corrections[f] = H.vertex_iso(H.dom->graph.terminal(e0)).inverse().apply(d);
  }
  return R;
}

ElementaryEquivalence elementary_equivalence(GogPtr G, const std::string& e0,
                                             const GroupElement& g0) {
  const std::string& tv = G->graph.terminal(e0);
  elt_check(*G, tv, g0);
  GraphOfGroups modified = *G;
  if (G->edge_rank(e0) == 1) {
    GroupElement im = G->edge_image(e0);
    GroupElement conj = elt_multiply(
        *G, tv, elt_multiply(*G, tv, elt_inverse(*G, tv, g0), im), g0);
    modified.edge_groups.at(G->graph.pair_name(e0)).images.at(e0) = conj;
  }
  ElementaryEquivalence out;
  out.modified = make_gog(std::move(modified));
  out.h0 = GogIso::identity(G);
  out.h0.cod = out.modified;
  if (!elt_is_identity(*G, tv, g0)) out.h0.corrections[e0] = g0;
  return out;
}

TwistedCorrections twist_corrections(const GogIso& H,
                                     const std::map<std::string, GroupElement>& w) {
  require(H.graph_identity(), "twisted corrections require a graph-identity automorphism");
  // G' : every edge map conjugated by w_e^-1
  GraphOfGroups modified = *H.dom;
  for (const auto& [e, we] : w) {
    const std::string& tv = H.dom->graph.terminal(e);
    elt_check(*H.dom, tv, we);
    if (H.dom->edge_rank(e) == 1) {
      GroupElement im = H.dom->edge_image(e);
      modified.edge_groups.at(H.dom->graph.pair_name(e)).images.at(e) = elt_multiply(
          *H.dom, tv, elt_multiply(*H.dom, tv, elt_inverse(*H.dom, tv, we), im), we);
    }
  }
  GogPtr Gp = make_gog(std::move(modified));

  TwistedCorrections out;
  out.h0 = GogIso::identity(H.dom);
  out.h0.cod = Gp;
  for (const auto& [e, we] : w)
    if (!elt_is_identity(*H.dom, H.dom->graph.terminal(e), we)) out.h0.corrections[e] = we;

  GogIso Hp = H;
  Hp.dom = Gp;
  Hp.cod = Gp;
  for (const auto& [name, d] : H.dom->graph.darts()) {
    auto it = w.find(name);
    if (it == w.end()) continue;
    const std::string& tv = d.terminal;
    GroupElement hw = H.vertex_iso(tv).apply(it->second);
    // delta'(e) = H_{tau(e)}(w_e)^-1 delta(e) w_e
    Hp.corrections[name] = elt_multiply(
        *H.cod, tv, elt_inverse(*H.cod, tv, hw),
        elt_multiply(*H.cod, tv, H.correction(name), it->second));
  }
  out.conjugated = std::move(Hp);
  return out;
}

bool check_semi_conjugation(const std::function<PathWord(const PathWord&)>& theta,
                            const GogIso& A, const GogIso& B, const std::string& v,
                            const std::string& v2) {
  require(B.dom->graph.has_vertex(v2), "semi-conjugation basepoint '" + v2 + "' missing");
  for (const PathWord& x : pi1_generators(*A.dom, v)) {
    PathWord lhs = theta(iso_apply(A, x));
    PathWord rhs = iso_apply(B, theta(x));
    if (!pw_equal(*B.cod, lhs, rhs)) return false;
  }
  return true;
}

IsoReport group_iso_validate(const GroupIso& h) {
  IsoReport rep;
  switch (h.kind()) {
    case GroupIso::Kind::Identity:
      return rep;
    case GroupIso::Kind::Induced: {
      IsoReport sub = iso_validate(*h.sub());
      rep.violations = sub.violations;
      return rep;
    }
    case GroupIso::Kind::Composite:
      return rep;  // factors validated where constructed
    case GroupIso::Kind::Theta:
    case GroupIso::Kind::FreeImages: {
      const GroupRef& gr = h.dom().gog->vertex_group(h.dom().vertex);
      if (!gr.is_free()) {
        rep.violations.push_back("free-images iso over a pi1 vertex group");
        return rep;
      }
      std::size_t n = h.kind() == GroupIso::Kind::Theta ? h.word_images().size() : h.images().size();
      if (static_cast<int>(n) != gr.free_rank) {
        rep.violations.push_back("image count does not match domain rank");
        return rep;
      }
      // Generation check at desk scale only; higher ranks are accepted as
      // documented (surjection between free groups of equal rank is an iso).
      if (gr.free_rank > 3 || h.kind() == GroupIso::Kind::Theta) return rep;
      try {
        h.inverse();
      } catch (const Error&) {
        rep.violations.push_back("images do not generate the codomain (bounded search)");
      }
      return rep;
    }
  }
  return rep;
}

}  // namespace gog
