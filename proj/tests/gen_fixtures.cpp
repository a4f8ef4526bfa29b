// Regenerates the frozen documents under tests/data. Run manually from the
// repository root after changing a fixture, then re-freeze the golden CLI
// outputs as well.

#include <fstream>
#include <iostream>

#include "fixtures.hpp"

using namespace gog;

static void put(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  std::cout << path << "\n";
}

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "tests/data";
  put(dir + "/fix_a.gog.json", dump_canonical(make_doc("gog", gog_to_json(*fx::fix_a()))));
  put(dir + "/fix_b.gog.json", dump_canonical(make_doc("gog", gog_to_json(*fx::fix_b()))));
  put(dir + "/fix_c.gog.json", dump_canonical(make_doc("gog", gog_to_json(*fx::fix_c()))));
  put(dir + "/fix_c.iso.json",
      dump_canonical(make_doc("iso", iso_to_json(fx::fix_c_iso()))));
  PlanDoc d{fx::fix_d_iso(), {{"V0", fx::fix_d_local()}}};
  put(dir + "/fix_d.plan.json", dump_canonical(make_doc("plan", plan_to_json(d))));
  PlanDoc dxy{fx::fix_d_iso("x y"), {{"V0", fx::fix_d_local()}}};
  put(dir + "/fix_d_xy.plan.json", dump_canonical(make_doc("plan", plan_to_json(dxy))));

  GogPtr B = fx::fix_b();
  PathWord w = fx::W(*B, "u", {{"w", "b"}, {"e", "e"}, {"w", "c^2"}, {"e", "~e"}});
  put(dir + "/word_b.json", dump_canonical(make_doc("word", word_to_json(*B, w))));

  json bad = make_doc("gog", gog_to_json(*fx::fix_a()));
  bad["darts"] = json{{"e", {{"inverse", "e"}, {"terminal", "v"}}}};
  bad["edge_groups"] = json{{"e", {{"rank", 0}}}};
  put(dir + "/bad_bar.gog.json", dump_canonical(bad));

  put(dir + "/malformed.json", "{ this is not json\n");
  return 0;
}
