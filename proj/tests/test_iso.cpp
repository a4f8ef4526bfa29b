#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gog/errors.hpp"
#include "oracles.hpp"

using namespace gog;
using fx::E;
using fx::W;

namespace {

std::vector<GogIso> fixture_isos() {
  return {fx::fix_a_iso(), fx::fix_b_iso(), fx::fix_c_iso(), fx::fix_d_iso()};
}

PathWord stable(const GraphOfGroups& G, const std::string& d) {
  return fx::W(G, G.graph.initial(d), {{"e", d}});
}

}  // namespace

TEST_CASE("fixture isos validate") {
  for (const GogIso& H : fixture_isos()) CHECK(iso_validate(H).valid());
}

TEST_CASE("iso validation catches broken data") {
  // correction living at the wrong vertex
  GogIso H = fx::fix_b_iso();
  H.corrections["e"] = E(*H.dom, "u", "a");
  CHECK(!iso_validate(H).valid());

  // edge exponent flipped without fixing delta: the edge-iso square breaks
  GogIso H2 = fx::fix_b_iso();
  H2.edge_exps["e"] = -1;
  CHECK(!iso_validate(H2).valid());
}

TEST_CASE("H_* kills both Bass relation families") {
  for (const GogIso& H : fixture_isos()) {
    const GraphOfGroups& G = *H.dom;
    for (const auto& [d, data] : G.graph.darts()) {
      // t_e t_ebar = 1
      PathWord loop = pw_multiply(G, stable(G, d), stable(G, G.graph.bar(d)));
      CHECK(pw_is_identity(*H.cod, iso_apply(H, loop)));
      if (G.edge_rank(d) == 1) {
        // t_ebar f_ebar(x) t_e = f_e(x) -- same relation written from tau(d)
        PathWord lhs = pw_multiply(
            G,
            pw_multiply(G, stable(G, G.graph.bar(d)),
                        PathWord::at_vertex(G.graph.initial(d),
                                            G.edge_image(G.graph.bar(d)))),
            stable(G, d));
        PathWord rhs = PathWord::at_vertex(G.graph.terminal(d), G.edge_image(d));
        CHECK(pw_equal(*H.cod, iso_apply(H, lhs), iso_apply(H, rhs)));
      }
    }
  }
}

TEST_CASE("composition and inverse agree pointwise") {
  std::mt19937 rng(23);
  for (const GogIso& H : fixture_isos()) {
    GogIso HH = iso_compose(H, H);
    GogIso Hinv = iso_invert(H);
    CHECK(iso_validate(Hinv).valid());
    for (int i = 0; i < 25; ++i) {
      PathWord w = oracle::random_word(*H.dom, rng, 4);
      CHECK(pw_equal(*H.cod, iso_apply(HH, w), iso_apply(H, iso_apply(H, w))));
      CHECK(pw_equal(*H.dom, iso_apply(Hinv, iso_apply(H, w)), pw_reduce(*H.dom, w)));
      CHECK(pw_equal(*H.dom, iso_apply(iso_compose(Hinv, H), w), pw_reduce(*H.dom, w)));
    }
  }
}

TEST_CASE("free-images isos invert exactly") {
  GogPtr G = fx::fix_d_gog();
  GroupIso h = GroupIso::free_images(GroupCtx{G, "V0"}, GroupCtx{G, "V0"},
                                     {E(*G, "V0", "x"), E(*G, "V0", "y x^-1")});
  CHECK(group_iso_validate(h).valid());
  GroupIso hinv = h.inverse();
  // y x^-1 -> y under the inverse, so y -> y x
  CHECK(elt_equal(*G, "V0", hinv.apply(E(*G, "V0", "y")), E(*G, "V0", "y x")));
  std::mt19937 rng(29);
  for (int i = 0; i < 50; ++i) {
    GroupElement g = oracle::random_elt(*G, "V0", rng, 4, 3);
    CHECK(elt_equal(*G, "V0", hinv.apply(h.apply(g)), g));
  }
}

TEST_CASE("theta isos map into pi1 words") {
  LocalTwist lt = fx::fix_d_local();
  GogPtr Gq = fx::fix_d_gog();
  PathWord im = lt.theta0.apply_word(E(*Gq, "V0", "x^2 y"));
  CHECK(pw_is_pi1(*lt.g0, im, "v"));
  PathWord expect =
      pw_multiply(*lt.g0, PathWord::at_vertex("v", E(*lt.g0, "v", "a^2")),
                  W(*lt.g0, "v", {{"e", "f"}}));
  CHECK(pw_equal(*lt.g0, im, expect));
}

TEST_CASE("elementary equivalence produces a valid square") {
  GogPtr G = fx::fix_b();
  auto ee = elementary_equivalence(G, "e", E(*G, "v", "d"));
  CHECK(gog_validate(*ee.modified).valid());
  CHECK(iso_validate(ee.h0).valid());
  // f'_e(x) = d^-1 c d
  CHECK(elt_equal(*ee.modified, "v", ee.modified->edge_image("e"), E(*G, "v", "d^-1 c d")));
  // h0 is the identity on vertex groups
  CHECK(ee.h0.vertex_iso("u").is_identity_map());
  CHECK(ee.h0.vertex_iso("v").is_identity_map());
}

TEST_CASE("twisted corrections conjugate the iso") {
  GogIso H = fx::fix_b_iso();
  std::map<std::string, GroupElement> w{{"e", E(*H.dom, "v", "d")}};
  auto tc = twist_corrections(H, w);
  CHECK(iso_validate(tc.conjugated).valid());
  CHECK(iso_validate(tc.h0).valid());
  // H' = H0 . H . H0^-1 pointwise
  std::mt19937 rng(31);
  GogIso rhs = iso_compose(iso_compose(tc.h0, H), iso_invert(tc.h0));
  for (int i = 0; i < 20; ++i) {
    PathWord x = oracle::random_word(*tc.conjugated.dom, rng, 4);
    CHECK(pw_equal(*tc.conjugated.cod, iso_apply(tc.conjugated, x), iso_apply(rhs, x)));
  }
}

TEST_CASE("semi-conjugation checker") {
  GogIso H = fx::fix_c_iso();
  auto id = [](const PathWord& w) { return w; };
  CHECK(check_semi_conjugation(id, H, H, "u", "u"));
  CHECK(!check_semi_conjugation(id, H, GogIso::identity(H.dom), "u", "u"));
}
