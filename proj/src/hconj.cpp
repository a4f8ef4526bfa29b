#include "gog/hconj.hpp"

#include "gog/errors.hpp"

namespace gog {

namespace {

PathWord front_prefix(const GraphOfGroups& G, const PathWord& w) {
  PathWord p;
  p.start = w.start;
  p.elts = {w.elts[0], elt_identity(G, G.graph.terminal(w.darts[0]))};
  p.darts = {w.darts[0]};
  return p;
}

}  // namespace

PathWord h_elementary_op(const GogIso& H, const PathWord& w) {
  const GraphOfGroups& G = *H.dom;
  PathWord r = pw_reduce(G, w);
  require(r.path_length() >= 1, "elementary operation needs path length >= 1");
  PathWord p = front_prefix(G, r);
  PathWord out = pw_multiply(G, pw_inverse(G, p), pw_multiply(G, r, iso_apply(H, p)));
  require(out.path_length() == r.path_length() || out.path_length() + 2 == r.path_length(),
          "elementary operation changed the length unexpectedly");
  return out;
}

PathWord h_elementary_op_back(const GogIso& H, const PathWord& w) {
  const GraphOfGroups& G = *H.dom;
  PathWord r = pw_reduce(G, w);
  require(r.path_length() >= 1, "elementary operation needs path length >= 1");
  PathWord s;  // suffix tq rq
  s.start = G.graph.initial(r.darts.back());
  s.elts = {elt_identity(G, s.start), r.elts.back()};
  s.darts = {r.darts.back()};
  GogIso Hi = iso_invert(H);
  return pw_multiply(G, iso_apply(Hi, s), pw_multiply(G, r, pw_inverse(G, s)));
}

bool is_h_reduced(const GogIso& H, const PathWord& w) {
  PathWord r = pw_reduce(*H.dom, w);
  if (r.path_length() == 0) return true;
  return h_elementary_op(H, r).path_length() == r.path_length();
}

HReduction h_reduce(const GogIso& H, const PathWord& w) {
  const GraphOfGroups& G = *H.dom;
  HReduction out;
  out.input = pw_reduce(G, w);
  PathWord cur = out.input;
  PathWord u = PathWord::identity(cur.start);
  while (cur.path_length() > 0) {
    PathWord p = front_prefix(G, cur);
    PathWord next = pw_multiply(G, pw_inverse(G, p), pw_multiply(G, cur, iso_apply(H, p)));
    require(next.path_length() <= cur.path_length(), "elementary operation increased the length");
    if (next.path_length() >= cur.path_length()) break;  // cur is H-reduced
    u = pw_multiply(G, u, p);
    cur = std::move(next);
  }
  out.reduced = cur;
  out.witness = u;
  out.h_length = cur.path_length();
  // reduced = u^-1 * input * H_*(u)
  PathWord check =
      pw_multiply(G, pw_inverse(G, u), pw_multiply(G, out.input, iso_apply(H, u)));
  require(pw_equal(G, check, out.reduced), "H-reduction witness failed to verify");
  return out;
}

std::size_t h_length(const GogIso& H, const PathWord& w) { return h_reduce(H, w).h_length; }

std::optional<ZeroWitness> is_h_zero(const GogIso& H, const PathWord& w) {
  const GraphOfGroups& G = *H.dom;
  HReduction red = h_reduce(H, w);
  if (red.h_length != 0) return std::nullopt;
  ZeroWitness zw;
  zw.vertex = red.reduced.start;
  zw.g = red.reduced.elts[0];
  zw.gamma = iso_apply(H, red.witness);
  // w = (H^-1)_*(gamma) * g * gamma^-1
  GogIso Hi = iso_invert(H);
  PathWord check = pw_multiply(
      G, iso_apply(Hi, zw.gamma),
      pw_multiply(G, PathWord::at_vertex(zw.vertex, zw.g), pw_inverse(G, zw.gamma)));
  require(pw_equal(G, check, red.input), "H-zero witness failed to verify");
  return zw;
}

std::optional<PathWord> h_conjugate_bounded(const GogIso& H, const PathWord& w1,
                                            const PathWord& w2, std::size_t max_len) {
  const GraphOfGroups& G = *H.dom;
  PathWord a = pw_reduce(G, w1);
  PathWord b = pw_reduce(G, w2);

  // Vertex-slot candidates: identity plus single-generator powers.
  auto slot_elts = [&](const std::string& v) {
    std::vector<GroupElement> out = {elt_identity(G, v)};
    for (const GroupElement& g : group_generators(G, v))
      for (int k : {1, -1, 2, -2}) out.push_back(elt_power(G, v, g, k));
    return out;
  };

  auto matches = [&](const PathWord& u) {
    try {
      PathWord cand = pw_multiply(G, u, pw_multiply(G, b, pw_inverse(G, iso_apply(H, u))));
      return pw_equal(G, cand, a);
    } catch (const Error&) {
      return false;
    }
  };

  // All dart paths from the start of w1, then all slot fillings.
  std::vector<std::vector<std::string>> paths = {{}};
  for (std::size_t q = 0; q <= max_len; ++q) {
    std::vector<std::vector<std::string>> next;
    for (const std::vector<std::string>& path : paths) {
      // fill vertex slots along `path`
      std::vector<std::string> stops = {a.start};
      for (const std::string& e : path) stops.push_back(G.graph.terminal(e));
      std::vector<std::vector<GroupElement>> cands;
      for (const std::string& v : stops) cands.push_back(slot_elts(v));
      std::vector<std::size_t> idx(stops.size(), 0);
      while (true) {
        PathWord u;
        u.start = a.start;
        u.darts = path;
        for (std::size_t i = 0; i < stops.size(); ++i) u.elts.push_back(cands[i][idx[i]]);
        if (matches(u)) return u;
        std::size_t i = 0;
        for (; i < idx.size(); ++i) {
          if (++idx[i] < cands[i].size()) break;
          idx[i] = 0;
        }
        if (i == idx.size()) break;
      }
      if (q == max_len) continue;
      const std::string& at = stops.back();
      for (const auto& [e, d] : G.graph.darts())
        if (G.graph.initial(e) == at) {
          std::vector<std::string> np = path;
          np.push_back(e);
          next.push_back(std::move(np));
        }
    }
    paths = std::move(next);
  }
  return std::nullopt;
}

}  // namespace gog
