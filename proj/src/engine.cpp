#include "gog/engine.hpp"

#include "gog/errors.hpp"

namespace gog {

namespace {

json ok(json j = json::object()) {
  j["exit"] = 0;
  return j;
}

json verdict(bool pass, json j = json::object()) {
  j["exit"] = pass ? 0 : 1;
  return j;
}

json error(int code, const std::string& msg) {
  return json{{"exit", code}, {"error", msg}};
}

std::string doc_kind(const json& j) {
  if (j.contains("kind")) return j.at("kind").get<std::string>();
  if (j.contains("locals")) return "plan";
  if (j.contains("dom")) return "iso";
  if (j.contains("darts")) return "gog";
  if (j.contains("tokens")) return "word";
  fail("cannot determine document kind");
}

json cmd_validate(const json& req) {
  const json& doc = req.at("doc");
  std::string kind = doc_kind(doc);
  std::vector<std::string> violations;
  if (kind == "gog") {
    violations = gog_validate(*gog_from_json(doc)).violations;
  } else if (kind == "iso") {
    violations = iso_validate(iso_from_json(doc)).violations;
  } else if (kind == "plan") {
    PlanDoc p = plan_from_json(doc);
    violations = iso_validate(p.iso).violations;
    for (const auto& [v0, lt] : p.locals)
      for (const std::string& s : iso_validate(lt.d0).violations)
        violations.push_back("local '" + v0 + "': " + s);
  } else {
    fail("validate expects a gog, iso or plan document");
  }
  json out;
  out["violations"] = violations;
  return verdict(violations.empty(), std::move(out));
}

json cmd_reduce(const json& req) {
  GogPtr G = gog_from_json(req.at("gog"));
  PathWord w = word_from_json(*G, req.at("word"));
  return ok(json{{"word", make_doc("word", word_to_json(*G, pw_reduce(*G, w)))}});
}

json cmd_eq(const json& req) {
  GogPtr G = gog_from_json(req.at("gog"));
  PathWord a = word_from_json(*G, req.at("word"));
  PathWord b = word_from_json(*G, req.at("word2"));
  bool eq = pw_equal(*G, a, b);
  return verdict(eq, json{{"equal", eq}});
}

json cmd_apply(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  PathWord w = word_from_json(*H.dom, req.at("word"));
  return ok(json{{"word", make_doc("word", word_to_json(*H.cod, iso_apply(H, w)))}});
}

json cmd_compose(const json& req) {
  GogIso A = iso_from_json(req.at("iso"));
  GogIso B = iso_from_json(req.at("iso2"));
  // A after B
  GogIso C = iso_compose(A, B);
  return ok(json{{"iso", make_doc("iso", iso_to_json(C))}});
}

json cmd_invert(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  return ok(json{{"iso", make_doc("iso", iso_to_json(iso_invert(H)))}});
}

json twist_data_json(const GogIso& D, const TwistData& td) {
  GroupRef cyclic = GroupRef::free(1, "x");
  json g = json::object(), z = json::object();
  for (const auto& [e, w] : td.gamma) g[e] = free_text(cyclic, w.fw());
  for (const auto& [e, w] : td.z) z[e] = free_text(cyclic, w.fw());
  return json{{"gamma", std::move(g)}, {"z", std::move(z)}};
}

json cmd_dehn_classify(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  TwistClass c = classify_twist(H);
  json out;
  switch (c.kind) {
    case TwistClass::Kind::Classical:
      out["class"] = "classical";
      out["twist"] = twist_data_json(H, *c.data);
      return ok(std::move(out));
    case TwistClass::Kind::General:
      out["class"] = "general";
      return ok(std::move(out));
    case TwistClass::Kind::NotADehnTwist:
      out["class"] = "not-a-dehn-twist";
      out["reason"] = c.reason;
      return verdict(false, std::move(out));
  }
  fail("unreachable");
}

json cmd_dehn_twistors(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  TwistData td = twistors(H);
  return ok(json{{"twist", twist_data_json(H, td)}});
}

json cmd_dehn_subdivide(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  Subdivision s = subdivide_to_classical(H);
  json nv = json::object();
  for (const auto& [e, v] : s.new_vertices) nv[e] = v;
  json th = json::object();
  for (const auto& [e, w] : s.theta.dart_images)
    th[e] = word_to_json(*s.theta.cod, w).at("tokens");
  return ok(json{{"changed", s.changed},
                 {"iso", make_doc("iso", iso_to_json(s.classical))},
                 {"new_vertices", std::move(nv)},
                 {"theta", std::move(th)}});
}

json cmd_dehn_efficient(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  EfficiencyReport r = efficiency_check(H);
  json out{{"minimal", r.minimal},
           {"no_invisible_vertex", r.no_invisible_vertex},
           {"no_proper_power", r.no_proper_power},
           {"no_unused_edge", r.no_unused_edge},
           {"not_positively_bonded", r.not_positively_bonded},
           {"details", r.details}};
  return verdict(r.efficient(), std::move(out));
}

json cmd_hzero(const json& req) {
  bool inverse = req.value("inverse", false);
  GogIso H;
  GogPtr W;  // gog carrying the test word
  PathWord w;
  const json& doc = req.contains("plan") ? req.at("plan") : req.at("iso");
  if (doc_kind(doc) == "plan") {
    PlanDoc p = plan_from_json(doc);
    require(!p.locals.empty(), "plan has no locals");
    const auto& [v0, lt] = *p.locals.begin();
    GroupElement g = elt_from_json(*p.iso.dom, v0, req.at("word"));
    w = lt.theta0.apply_word(g);
    H = lt.d0;
    W = lt.g0;
  } else {
    H = iso_from_json(doc);
    W = H.dom;
    w = word_from_json(*W, req.at("word"));
  }
  if (inverse) H = iso_invert(H);
  std::optional<ZeroWitness> zw = is_h_zero(H, w);
  if (!zw) return verdict(false, json{{"zero", false}});
  return ok(json{{"zero", true},
                 {"vertex", zw->vertex},
                 {"gamma", word_to_json(*W, zw->gamma).at("tokens")},
                 {"g", elt_to_json(*W, zw->vertex, zw->g)}});
}

SubgraphSpec subgraph_from_json(const json& j) {
  SubgraphSpec s;
  for (const auto& v : j.at("vertices")) s.vertices.insert(v.get<std::string>());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) s.edges.insert(e.get<std::string>());
  return s;
}

json cmd_quotient(const json& req) {
  GogPtr G;
  std::optional<GogIso> H;
  if (req.contains("iso")) {
    H = iso_from_json(req.at("iso"));
    G = H->dom;
  } else {
    G = gog_from_json(req.at("gog"));
  }
  SubgraphSpec sub = subgraph_from_json(req.at("subgraph"));
  std::string p0 = req.contains("basepoint") ? req.at("basepoint").get<std::string>()
                                             : *sub.vertices.begin();
  QuotientResult Q = quotient_gog(G, sub, p0);
  json out{{"gog", make_doc("gog", gog_to_json(*Q.quotient))}, {"v0", Q.v0}};
  json gm = json::object();
  for (const auto& [e, g] : Q.gammas) gm[e] = word_to_json(*Q.sub, g).at("tokens");
  out["gammas"] = std::move(gm);
  if (H) {
    QuotientIso QI = quotient_iso(*H, Q);
    out["iso"] = make_doc("iso", iso_to_json(QI.iso));
  }
  return ok(std::move(out));
}

json run_blowups(const json& req, bool partial) {
  PlanDoc p = plan_from_json(req.contains("plan") ? req.at("plan") : req.at("iso"));
  if (partial) {
    PartialBlowupResult r = partial_dehn_blowup(p.iso, p.locals);
    if (!r.ok)
      return verdict(false, json{{"result", "not-locally-zero"},
                                 {"vertex", r.fail_vertex},
                                 {"dart", r.fail_dart}});
    TwistClass c = classify_twist(r.iso);
    return ok(json{{"gog", make_doc("gog", gog_to_json(*r.gog))},
                   {"iso", make_doc("iso", iso_to_json(r.iso))},
                   {"class", c.kind == TwistClass::Kind::Classical ? "classical" : "general"}});
  }
  GogPtr cur = p.iso.dom;
  GogIso curH = p.iso;
  for (const auto& [v0, lt] : p.locals) {
    BlowupPlanResult pr = blowup_plan(cur, curH, v0, lt.g0, lt.d0, lt.theta0);
    if (pr.kind != BlowupPlanResult::Kind::Plan)
      return verdict(false,
                     json{{"result", pr.kind == BlowupPlanResult::Kind::NotLocallyZero
                                         ? "not-locally-zero"
                                         : "not-compatible"},
                          {"vertex", v0},
                          {"dart", pr.dart}});
    BlowupResult br = blowup(cur, curH, v0, lt.g0, lt.d0, lt.theta0, pr.plan);
    cur = br.gog;
    curH = br.iso;
  }
  return ok(json{{"gog", make_doc("gog", gog_to_json(*cur))},
                 {"iso", make_doc("iso", iso_to_json(curH))}});
}

json cmd_roundtrip(const json& req) {
  GogIso H = iso_from_json(req.at("iso"));
  SubgraphSpec sub = subgraph_from_json(req.at("subgraph"));
  std::string p0 = req.contains("basepoint") ? req.at("basepoint").get<std::string>()
                                             : *sub.vertices.begin();
  QuotientResult Q = quotient_gog(H.dom, sub, p0);
  QuotientIso QI = quotient_iso(H, Q);
  GroupIso theta0 = GroupIso::identity(GroupCtx{Q.sub, Q.p0, true});
  // give theta0 a domain context on the quotient for the record
  BlowupPlanResult pr = blowup_plan(Q.quotient, QI.iso, Q.v0, Q.sub, QI.local, theta0);
  if (pr.kind != BlowupPlanResult::Kind::Plan)
    return verdict(false, json{{"result", "no-plan"}, {"dart", pr.dart}});
  BlowupResult br = blowup(Q.quotient, QI.iso, Q.v0, Q.sub, QI.local, theta0, pr.plan);
  bool semi = check_semi_conjugation(
      [&](const PathWord& w) { return br.theta.apply(w); }, QI.iso, br.iso, Q.v0, Q.p0);
  return verdict(semi, json{{"semi_conjugation", semi},
                            {"gog", make_doc("gog", gog_to_json(*br.gog))},
                            {"iso", make_doc("iso", iso_to_json(br.iso))}});
}

}  // namespace

json engine_exec(const json& request) {
  try {
    std::string cmd = request.at("cmd").get<std::string>();
    if (cmd == "validate") return cmd_validate(request);
    if (cmd == "reduce") return cmd_reduce(request);
    if (cmd == "eq") return cmd_eq(request);
    if (cmd == "apply") return cmd_apply(request);
    if (cmd == "compose") return cmd_compose(request);
    if (cmd == "invert") return cmd_invert(request);
    if (cmd == "dehn-classify") return cmd_dehn_classify(request);
    if (cmd == "dehn-twistors") return cmd_dehn_twistors(request);
    if (cmd == "dehn-subdivide") return cmd_dehn_subdivide(request);
    if (cmd == "dehn-efficient") return cmd_dehn_efficient(request);
    if (cmd == "hzero") return cmd_hzero(request);
    if (cmd == "quotient") return cmd_quotient(request);
    if (cmd == "blowup") return run_blowups(request, false);
    if (cmd == "partial-blowup") return run_blowups(request, true);
    if (cmd == "roundtrip") return cmd_roundtrip(request);
    return error(2, "unknown command '" + cmd + "'");
  } catch (const json::exception& e) {
    return error(2, std::string("document error: ") + e.what());
  } catch (const Error& e) {
    return error(2, e.what());
  } catch (const std::exception& e) {
    return error(2, std::string("internal error: ") + e.what());
  }
}

std::string engine_exec_text(const std::string& request) {
  json req;
  try {
    req = json::parse(request);
  } catch (const json::exception& e) {
    return dump_canonical(error(2, std::string("parse error: ") + e.what()));
  }
  return dump_canonical(engine_exec(req));
}

}  // namespace gog
