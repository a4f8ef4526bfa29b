#ifndef GOG_TEST_ORACLES_HPP
#define GOG_TEST_ORACLES_HPP

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gog/hconj.hpp"
#include "gog/words.hpp"

namespace oracle {

using namespace gog;

// ---- brute-force rewriting oracle for the word problem ----------------------
//
// States are alternating token lists; the only moves are the Bass backtrack
// removals t_e f_e(x)^k t_ebar -> f_ebar(x)^k, applied at every possible
// position (BFS). A word is trivial iff some state of path length 0 carries
// the identity. Independent of pw_reduce / pw_equal: it only leans on
// vertex-group arithmetic and raw edge-image membership.

struct OState {
  std::vector<GroupElement> elts;
  std::vector<std::string> darts;
  std::string start;
};

inline std::string ostate_key(const GraphOfGroups& G, const OState& s) {
  std::ostringstream out;
  out << s.start;
  std::string at = s.start;
  for (std::size_t i = 0; i < s.elts.size(); ++i) {
    const GroupElement& g = s.elts[i];
    out << "|";
    if (g.is_free()) {
      out << fw_print(g.fw());
    } else {
      out << "[pi1:" << pw_print(G, g.pw()) << "]";
    }
    if (i < s.darts.size()) {
      out << "|t:" << s.darts[i];
      at = G.graph.terminal(s.darts[i]);
    }
  }
  (void)at;
  return out.str();
}

// Exponent k with r = f_dart(x)^k, via raw arithmetic.
inline std::optional<std::int64_t> image_exponent(const GraphOfGroups& G, const std::string& dart,
                                                  const GroupElement& r) {
  const std::string& at = G.graph.terminal(dart);
  if (G.edge_rank(dart) == 0)
    return elt_is_identity(G, at, r) ? std::optional<std::int64_t>(0) : std::nullopt;
  const GroupElement& im = G.edge_image(dart);
  if (elt_is_identity(G, at, r)) return 0;
  return elt_power_of(G, at, r, im);
}

inline bool oracle_trivial(const GraphOfGroups& G, const OState& w0,
                           std::size_t max_states = 10000) {
  std::set<std::string> seen;
  std::queue<OState> q;
  auto push = [&](OState s) {
    std::string k = ostate_key(G, s);
    if (seen.insert(k).second) q.push(std::move(s));
  };
  push(w0);
  while (!q.empty() && seen.size() <= max_states) {
    OState s = std::move(q.front());
    q.pop();
    if (s.darts.empty()) {
      if (elt_is_identity(G, s.start, s.elts.at(0))) return true;
      continue;
    }
    for (std::size_t i = 0; i + 1 < s.darts.size(); ++i) {
      const std::string& d = s.darts[i];
      if (s.darts[i + 1] != G.graph.bar(d)) continue;
      auto k = image_exponent(G, d, s.elts[i + 1]);
      if (!k) continue;
      const std::string& back = G.graph.initial(d);
      GroupElement mid = G.edge_rank(d) == 0
                             ? elt_identity(G, back)
                             : elt_power(G, back, G.edge_image(G.graph.bar(d)), *k);
      OState t;
      t.start = s.start;
      for (std::size_t j = 0; j < i; ++j) {
        t.elts.push_back(s.elts[j]);
        t.darts.push_back(s.darts[j]);
      }
      GroupElement merged = elt_multiply(G, back, s.elts[i], mid);
      merged = elt_multiply(G, back, merged, s.elts[i + 2]);
      t.elts.push_back(merged);
      for (std::size_t j = i + 2; j < s.darts.size(); ++j) {
        t.darts.push_back(s.darts[j]);
        t.elts.push_back(s.elts[j + 1]);
      }
      push(std::move(t));
    }
  }
  return false;
}

inline OState to_ostate(const PathWord& w) { return OState{w.elts, w.darts, w.start}; }

// a == b via the rewriting oracle: concatenate a with the manual inverse of b.
inline bool oracle_equal(const GraphOfGroups& G, const PathWord& a, const PathWord& b) {
  if (a.start != b.start) return false;
  if (pw_end(G, a) != pw_end(G, b)) return false;
  OState s = to_ostate(a);
  std::string at = pw_end(G, b);
  // append b^-1 tokens
  GroupElement carry = elt_inverse(G, at, b.elts.back());
  s.elts.back() = elt_multiply(G, at, s.elts.back(), carry);
  for (std::size_t i = b.darts.size(); i-- > 0;) {
    s.darts.push_back(G.graph.bar(b.darts[i]));
    at = G.graph.initial(b.darts[i]);
    s.elts.push_back(elt_inverse(G, at, b.elts[i]));
  }
  return oracle_trivial(G, s);
}

// ---- random words -----------------------------------------------------------

inline GroupElement random_elt(const GraphOfGroups& G, const std::string& v, std::mt19937& rng,
                               int max_syllables = 2, int max_exp = 3) {
  const GroupRef& gr = G.vertex_group(v);
  if (!gr.is_free() || gr.free_rank == 0) return elt_identity(G, v);
  std::uniform_int_distribution<int> nsyl(0, max_syllables);
  std::uniform_int_distribution<int> gen(0, gr.free_rank - 1);
  std::uniform_int_distribution<int> exp(-max_exp, max_exp);
  std::vector<Letter> ls;
  int n = nsyl(rng);
  for (int i = 0; i < n; ++i) {
    int e = exp(rng);
    if (e != 0) ls.push_back({gen(rng), e});
  }
  return GroupElement::free(
      FreeWord::from_letters(GraphOfGroups::vertex_group_tag(v), ls));
}

inline PathWord random_word(const GraphOfGroups& G, std::mt19937& rng, int max_len = 6,
                            int max_exp = 3) {
  std::vector<std::string> verts(G.graph.vertices().begin(), G.graph.vertices().end());
  std::uniform_int_distribution<std::size_t> pv(0, verts.size() - 1);
  std::string at = verts[pv(rng)];
  PathWord w = PathWord::at_vertex(at, random_elt(G, at, rng, 2, max_exp));
  std::uniform_int_distribution<int> plen(0, max_len);
  int q = plen(rng);
  for (int i = 0; i < q; ++i) {
    std::vector<std::string> out;
    for (const auto& [d, data] : G.graph.darts())
      if (G.graph.initial(d) == at) out.push_back(d);
    if (out.empty()) break;
    std::uniform_int_distribution<std::size_t> pd(0, out.size() - 1);
    const std::string& d = out[pd(rng)];
    w.darts.push_back(d);
    at = G.graph.terminal(d);
    w.elts.push_back(random_elt(G, at, rng, 2, max_exp));
  }
  return w;
}

// Closed connected word (start == end); H-conjugation only makes sense there.
inline PathWord random_closed_word(const GraphOfGroups& G, std::mt19937& rng, int max_len = 4,
                                   int max_exp = 3) {
  for (int i = 0; i < 500; ++i) {
    PathWord w = random_word(G, rng, max_len, max_exp);
    if (w.start == pw_end(G, w)) return w;
  }
  std::string v = *G.graph.vertices().begin();
  return PathWord::at_vertex(v, random_elt(G, v, rng, 2, max_exp));
}

// Value-preserving anti-reduction: insert t_d x^k t_dbar f_dbar(x)^-k at a
// random slot.
inline PathWord random_expand(const GraphOfGroups& G, const PathWord& w, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> slot(0, w.elts.size() - 1);
  std::size_t i = slot(rng);
  std::string at = w.start;
  for (std::size_t j = 0; j < i; ++j) at = G.graph.terminal(w.darts[j]);
  std::vector<std::string> out;
  for (const auto& [d, data] : G.graph.darts())
    if (G.graph.initial(d) == at) out.push_back(d);
  if (out.empty()) return w;
  std::uniform_int_distribution<std::size_t> pd(0, out.size() - 1);
  const std::string& d = out[pd(rng)];
  std::int64_t k = 0;
  if (G.edge_rank(d) == 1) {
    std::uniform_int_distribution<int> pe(-2, 2);
    k = pe(rng);
  }
  const std::string& far = G.graph.terminal(d);
  GroupElement mid = k == 0 ? elt_identity(G, far) : elt_power(G, far, G.edge_image(d), k);
  GroupElement comp =
      k == 0 ? elt_identity(G, at) : elt_power(G, at, G.edge_image(G.graph.bar(d)), -k);
  PathWord r;
  r.start = w.start;
  for (std::size_t j = 0; j < i; ++j) {
    r.elts.push_back(w.elts[j]);
    r.darts.push_back(w.darts[j]);
  }
  r.elts.push_back(w.elts[i]);
  r.darts.push_back(d);
  r.elts.push_back(mid);
  r.darts.push_back(G.graph.bar(d));
  r.elts.push_back(comp);
  for (std::size_t j = i; j < w.darts.size(); ++j) {
    r.darts.push_back(w.darts[j]);
    r.elts.push_back(w.elts[j + 1]);
  }
  return r;
}

// ---- brute-force H-length ---------------------------------------------------

// Minimum reduced path length of u^-1 w H_*(u) over all dart paths u of
// length <= max_len from start(w), vertex slots from {1} u {g^k : |k| <= 2}.
inline std::size_t bf_h_length(const GogIso& H, const PathWord& w, std::size_t max_len = 3) {
  const GraphOfGroups& G = *H.dom;
  std::size_t best = pw_reduce(G, w).path_length();
  std::vector<PathWord> frontier{PathWord::identity(w.start)};
  auto slot_options = [&](const std::string& v) {
    std::vector<GroupElement> opts{elt_identity(G, v)};
    for (const GroupElement& g : group_generators(G, v))
      for (int k = -2; k <= 2; ++k)
        if (k != 0) opts.push_back(elt_power(G, v, g, k));
    return opts;
  };
  // enumerate dart paths, then decorate each slot independently
  std::vector<std::vector<std::string>> paths{{}};
  std::vector<std::vector<std::string>> cur{{}};
  for (std::size_t l = 0; l < max_len; ++l) {
    std::vector<std::vector<std::string>> next;
    for (const auto& p : cur) {
      std::string at = w.start;
      for (const auto& d : p) at = G.graph.terminal(d);
      for (const auto& [d, data] : G.graph.darts())
        if (G.graph.initial(d) == at) {
          auto q = p;
          q.push_back(d);
          next.push_back(q);
        }
    }
    for (auto& p : next) paths.push_back(p);
    cur = std::move(next);
  }
  for (const auto& p : paths) {
    // slots: one per vertex along the path
    std::vector<std::string> verts{w.start};
    for (const auto& d : p) verts.push_back(G.graph.terminal(d));
    std::vector<std::vector<GroupElement>> opts;
    for (const auto& v : verts) opts.push_back(slot_options(v));
    std::vector<std::size_t> idx(verts.size(), 0);
    while (true) {
      PathWord u;
      u.start = w.start;
      u.elts.push_back(opts[0][idx[0]]);
      for (std::size_t i = 0; i < p.size(); ++i) {
        u.darts.push_back(p[i]);
        u.elts.push_back(opts[i + 1][idx[i + 1]]);
      }
      PathWord cand = pw_multiply(G, pw_multiply(G, pw_inverse(G, u), w), iso_apply(H, u));
      std::size_t len = pw_reduce(G, cand).path_length();
      if (len < best) best = len;
      std::size_t j = 0;
      for (; j < idx.size(); ++j) {
        if (++idx[j] < opts[j].size()) break;
        idx[j] = 0;
      }
      if (j == idx.size()) break;
    }
  }
  return best;
}

}  // namespace oracle

#endif
