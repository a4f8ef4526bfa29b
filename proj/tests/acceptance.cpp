// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Everything here is deterministic (fixed seeds) and desk-scale.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gog;
using fx::E;
using fx::W;
using fx::X;

namespace {

int failures = 0;

void criterion(int n, const std::string& name, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::printf("criterion %d [%s]: %s%s\n", n, name.c_str(), ok ? "PASS" : "FAIL",
              note.c_str());
  if (!ok) ++failures;
}

std::vector<GogIso> fixture_isos() {
  return {fx::fix_a_iso(), fx::fix_b_iso(), fx::fix_c_iso(), fx::fix_d_iso()};
}

// 1. Normal-form soundness against the brute-force rewriting oracle.
bool c1() {
  std::mt19937 rng(101);
  int words = 0;
  for (GogPtr G : {fx::fix_a(), fx::fix_b(), fx::fix_c()}) {
    for (int i = 0; i < 170; ++i) {
      PathWord w = oracle::random_word(*G, rng, 6, 3);
      PathWord r = pw_reduce(*G, w);
      if (!pw_is_reduced(*G, r)) return false;
      if (!(pw_reduce(*G, r) == r)) return false;
      PathWord m = w;
      for (int j = 0; j < 3; ++j) m = oracle::random_expand(*G, m, rng);
      if (pw_path_type(pw_reduce(*G, m)) != pw_path_type(r)) return false;
      if (!pw_equal(*G, w, r)) return false;
      if (!oracle::oracle_equal(*G, w, r)) return false;
      // and a deliberately different word disagrees in both referees
      PathWord off = pw_multiply(
          *G, w, PathWord::at_vertex(pw_end(*G, w), oracle::random_elt(*G, pw_end(*G, w), rng)));
      bool lib = pw_equal(*G, w, off);
      bool orc = oracle::oracle_equal(*G, w, off);
      if (lib != orc) return false;
      ++words;
    }
  }
  return words >= 500;
}

// 2. H_* kills the Bass relations on every dart and generator.
bool c2() {
  for (const GogIso& H : fixture_isos()) {
    const GraphOfGroups& G = *H.dom;
    for (const auto& [d, data] : G.graph.darts()) {
      PathWord te = W(G, G.graph.initial(d), {{"e", d}});
      PathWord teb = W(G, G.graph.initial(data.inverse), {{"e", data.inverse}});
      if (!pw_is_identity(*H.cod, iso_apply(H, pw_multiply(G, te, teb)))) return false;
      if (G.edge_rank(d) == 1) {
        PathWord lhs = pw_multiply(
            G,
            pw_multiply(G, teb,
                        PathWord::at_vertex(G.graph.initial(d), G.edge_image(data.inverse))),
            te);
        PathWord rhs = PathWord::at_vertex(G.graph.terminal(d), G.edge_image(d));
        if (!pw_equal(*H.cod, iso_apply(H, lhs), iso_apply(H, rhs))) return false;
      }
    }
  }
  return true;
}

// 3. Composition and inverse formulas pointwise on 100 random words.
bool c3() {
  std::mt19937 rng(103);
  int done = 0;
  for (const GogIso& H : fixture_isos()) {
    GogIso HH = iso_compose(H, H);
    GogIso Hinv = iso_invert(H);
    for (int i = 0; i < 25; ++i) {
      PathWord w = oracle::random_word(*H.dom, rng, 4);
      if (!pw_equal(*H.cod, iso_apply(HH, w), iso_apply(H, iso_apply(H, w)))) return false;
      if (!pw_equal(*H.dom, iso_apply(Hinv, iso_apply(H, w)), pw_reduce(*H.dom, w)))
        return false;
      ++done;
    }
  }
  return done >= 100;
}

// 4. Dehn twist suite.
bool c4() {
  // classify D_B
  GogIso D = fx::fix_b_iso();
  TwistClass c = classify_twist(D);
  if (c.kind != TwistClass::Kind::Classical) return false;
  if (!(c.data->z.at("e") == X(*D.dom, "e", 1))) return false;

  // subdivision commuting square for H_A
  GogIso H = fx::fix_a_iso();
  Subdivision s = subdivide_to_classical(H);
  if (!s.changed || classify_twist(s.classical).kind != TwistClass::Kind::Classical)
    return false;
  for (const PathWord& g : pi1_generators(*H.dom, "v")) {
    PathWord lhs = s.theta.apply(iso_apply(H, g));
    PathWord rhs = iso_apply(s.classical, s.theta.apply(g));
    if (!pw_equal(*s.classical.dom, lhs, rhs)) return false;
  }

  // efficiency: fixture B passes; each mutant fails exactly its own condition
  if (!efficiency_check(D).efficient()) return false;
  auto gog2 = [&](int rank_u, const std::string& im_e) {
    GraphOfGroups g;
    g.graph.add_vertex("u");
    g.graph.add_vertex("v");
    g.graph.add_edge("e", "u", "v");
    g.vertex_groups["u"] = GroupRef::free(rank_u);
    g.vertex_groups["v"] = GroupRef::free(2, "cd");
    g.edge_groups["e"] = EdgeGroup{1, {}};
    GogPtr G0 = make_gog(std::move(g));
    GraphOfGroups g2 = *G0;
    g2.edge_groups["e"].images["e"] = E(*G0, "v", im_e);
    g2.edge_groups["e"].images["~e"] = E(*G0, "u", "a");
    return make_gog(std::move(g2));
  };
  auto flags = [](const EfficiencyReport& r) {
    return std::vector<bool>{r.minimal, r.no_invisible_vertex, r.no_proper_power,
                             r.no_unused_edge, r.not_positively_bonded};
  };
  auto exactly = [&](const EfficiencyReport& r, int which) {
    auto f = flags(r);
    for (int i = 0; i < 5; ++i)
      if (f[i] != (i != which)) return false;
    return true;
  };

  {  // (1) collapsible valence-1 vertex
    GogIso M = GogIso::identity(gog2(1, "c"));
    M.corrections["e"] = E(*M.dom, "v", "c^-1");
    if (!exactly(efficiency_check(M), 0)) return false;
  }
  {  // (2) invisible vertex
    GraphOfGroups g;
    g.graph.add_vertex("u");
    g.graph.add_vertex("v");
    g.graph.add_vertex("w");
    g.graph.add_edge("e", "u", "v");
    g.graph.add_edge("f", "v", "w");
    g.vertex_groups["u"] = GroupRef::free(2);
    g.vertex_groups["v"] = GroupRef::free(1, "c");
    g.vertex_groups["w"] = GroupRef::free(2, "pq");
    g.edge_groups["e"] = EdgeGroup{1, {}};
    g.edge_groups["f"] = EdgeGroup{1, {}};
    GogPtr G0 = make_gog(std::move(g));
    GraphOfGroups g2 = *G0;
    g2.edge_groups["e"].images["e"] = E(*G0, "v", "c");
    g2.edge_groups["e"].images["~e"] = E(*G0, "u", "a");
    g2.edge_groups["f"].images["f"] = E(*G0, "w", "p");
    g2.edge_groups["f"].images["~f"] = E(*G0, "v", "c^-1");
    GogPtr G = make_gog(std::move(g2));
    GogIso M = GogIso::identity(G);
    M.corrections["e"] = E(*G, "v", "c^-1");
    M.corrections["f"] = E(*G, "w", "p");
    if (!exactly(efficiency_check(M), 1)) return false;
  }
  {  // (3) proper-power edge image
    GogIso M = GogIso::identity(gog2(2, "c^2"));
    M.corrections["e"] = E(*M.dom, "v", "c^-2");
    if (!exactly(efficiency_check(M), 2)) return false;
  }
  {  // (4) unused edge: identity twist has trivial twistors
    GogIso M = GogIso::identity(fx::fix_b());
    if (!exactly(efficiency_check(M), 3)) return false;
  }
  {  // (5) positively bonded edges
    GraphOfGroups g;
    g.graph.add_vertex("u1");
    g.graph.add_vertex("u2");
    g.graph.add_vertex("v");
    g.graph.add_edge("e1", "u1", "v");
    g.graph.add_edge("e2", "u2", "v");
    g.vertex_groups["u1"] = GroupRef::free(2);
    g.vertex_groups["u2"] = GroupRef::free(2);
    g.vertex_groups["v"] = GroupRef::free(2, "cd");
    g.edge_groups["e1"] = EdgeGroup{1, {}};
    g.edge_groups["e2"] = EdgeGroup{1, {}};
    GogPtr G0 = make_gog(std::move(g));
    GraphOfGroups g2 = *G0;
    g2.edge_groups["e1"].images["e1"] = E(*G0, "v", "c");
    g2.edge_groups["e1"].images["~e1"] = E(*G0, "u1", "a");
    g2.edge_groups["e2"].images["e2"] = E(*G0, "v", "c");
    g2.edge_groups["e2"].images["~e2"] = E(*G0, "u2", "a");
    GogPtr G = make_gog(std::move(g2));
    GogIso M = GogIso::identity(G);
    M.corrections["e1"] = E(*G, "v", "c");
    M.corrections["e2"] = E(*G, "v", "c");
    if (!exactly(efficiency_check(M), 4)) return false;
  }
  return true;
}

// 5. h_length equals the brute-force minimum on small words.
bool c5() {
  std::mt19937 rng(105);
  for (const GogIso& H : {fx::fix_a_iso(), fx::fix_b_iso(), fx::fix_c_iso()}) {
    const GraphOfGroups& G = *H.dom;
    for (int i = 0; i < 10; ++i) {
      PathWord w = pw_reduce(G, oracle::random_closed_word(G, rng, 3, 2));
      if (h_length(H, w) != oracle::bf_h_length(H, w)) return false;
    }
  }
  return true;
}

// 6. Transfer of H-zero along twist_corrections / elementary_equivalence
// commuting squares.
bool c6() {
  std::mt19937 rng(106);
  int done = 0;
  GogIso H = fx::fix_c_iso();
  const GraphOfGroups& G = *H.dom;
  for (int attempt = 0; done < 100 && attempt < 2000; ++attempt) {
    // random conjugating data
    std::map<std::string, GroupElement> wmap;
    for (const std::string& d : {"e", "f", "~f"}) {
      GroupElement g = oracle::random_elt(G, "v", rng, 1, 2);
      if (!elt_is_identity(G, "v", g)) wmap[d] = g;
    }
    auto tc = twist_corrections(H, wmap);
    // transported word: theta = (H0)_*
    PathWord w = oracle::random_word(G, rng, 3, 2);
    if (w.start != pw_end(G, w)) continue;
    PathWord tw = iso_apply(tc.h0, w);
    bool z1 = is_h_zero(H, w).has_value();
    bool z2 = is_h_zero(tc.conjugated, tw).has_value();
    if (z1 != z2) return false;
    ++done;
  }
  if (done < 100) return false;
  // and across an elementary equivalence on fixture B
  GogIso D = fx::fix_b_iso();
  auto ee = elementary_equivalence(D.dom, "e", E(*D.dom, "v", "d"));
  GogIso D2 = iso_compose(iso_compose(ee.h0, D), iso_invert(ee.h0));
  std::mt19937 rng2(1061);
  for (int i = 0; i < 20; ++i) {
    PathWord w = oracle::random_word(*D.dom, rng2, 3, 2);
    if (w.start != pw_end(*D.dom, w)) continue;
    PathWord tw = iso_apply(ee.h0, w);
    if (is_h_zero(D, w).has_value() != is_h_zero(D2, tw).has_value()) return false;
  }
  return true;
}

// 7. Quotient / blow-up roundtrip on fixture C and randomized variants.
bool c7() {
  std::mt19937 rng(107);
  std::uniform_int_distribution<int> pe(-2, 2);
  for (int i = 0; i <= 10; ++i) {
    GogPtr G = fx::fix_c();
    GogIso H = GogIso::identity(G);
    if (i == 0) {
      H = fx::fix_c_iso();
    } else {
      for (const std::string& d : {"e", "f", "~f"}) {
        int k = pe(rng);
        if (k != 0) H.corrections[d] = E(*G, "v", "c^" + std::to_string(k));
      }
    }
    if (!iso_validate(H).valid()) return false;
    QuotientResult Q = quotient_gog(G, SubgraphSpec{{"v"}, {"f"}}, "v");
    QuotientIso QI = quotient_iso(H, Q);
    GroupIso theta0 = GroupIso::identity(GroupCtx{Q.sub, Q.p0, true});
    BlowupPlanResult pr = blowup_plan(Q.quotient, QI.iso, Q.v0, Q.sub, QI.local, theta0);
    if (pr.kind != BlowupPlanResult::Kind::Plan) return false;
    BlowupResult br = blowup(Q.quotient, QI.iso, Q.v0, Q.sub, QI.local, theta0, pr.plan);
    if (!(br.gog->graph == G->graph)) return false;
    auto th = [&](const PathWord& w) { return br.theta.apply(w); };
    if (!check_semi_conjugation(th, QI.iso, br.iso, Q.v0, Q.p0)) return false;
  }
  return true;
}

// 8. Partial Dehn twist criterion on fixture D.
bool c8() {
  LocalTwist lt = fx::fix_d_local();
  PartialBlowupResult ok = partial_dehn_blowup(fx::fix_d_iso("x^2"), {{"V0", lt}});
  if (!ok.ok) return false;
  if (!trivial_edge_dehn(ok.iso).is_dehn_twist) return false;
  PartialBlowupResult bad = partial_dehn_blowup(fx::fix_d_iso("x y"), {{"V0", lt}});
  return !bad.ok && bad.fail_vertex == "V0";
}

int cli(const std::string& args) {
  std::string cmd = std::string(GOG_CLI_BIN) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli_out(const std::string& args) {
  std::string cmd = std::string(GOG_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "";
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  return out;
}

std::string slurp(const std::string& path) {
  FILE* f = fopen(path.c_str(), "rb");
  if (!f) return "";
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  fclose(f);
  return out;
}

// 9. CLI byte-stability and exit-code contract.
bool c9() {
  std::string data = std::string(GOG_TEST_DATA_DIR) + "/";
  std::string gold = std::string(GOG_TEST_GOLDEN_DIR) + "/";
  // parse/serialize byte-stable golden files
  if (cli_out("hzero " + data + "fix_d.plan.json --word x^2 --inverse") !=
      slurp(gold + "hzero_x2.out"))
    return false;
  if (cli_out("partial-blowup " + data + "fix_d.plan.json") !=
      slurp(gold + "partial_blowup_d.out"))
    return false;
  // exit-code contract for the three fixture D scenarios
  if (cli("hzero " + data + "fix_d.plan.json --word x^2 --inverse") != 0) return false;
  if (cli("hzero " + data + "fix_d.plan.json --word 'x y' --inverse") != 1) return false;
  if (cli("partial-blowup " + data + "fix_d_xy.plan.json") != 1) return false;
  // and the general contract edges
  if (cli("validate " + data + "fix_a.gog.json") != 0) return false;
  if (cli("validate " + data + "malformed.json") != 2) return false;
  return true;
}

}  // namespace

int main() {
  criterion(1, "normal-form soundness vs rewriting oracle", c1);
  criterion(2, "Bass relations killed by H_*", c2);
  criterion(3, "composition and inverse formulas", c3);
  criterion(4, "Dehn twist suite", c4);
  criterion(5, "H-length equals brute-force minimum", c5);
  criterion(6, "H-zero transfer across commuting squares", c6);
  criterion(7, "quotient/blow-up roundtrip", c7);
  criterion(8, "partial Dehn twist criterion", c8);
  criterion(9, "CLI golden files and exit codes", c9);
  return failures == 0 ? 0 : 1;
}
