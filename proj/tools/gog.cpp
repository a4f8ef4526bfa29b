#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gog/gog_c.h"

namespace {

using json = nlohmann::json;

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

std::string read_input(const std::string& path) {
  std::ostringstream out;
  if (path == "-") {
    out << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    out << in.rdbuf();
  }
  return out.str();
}

json load_doc(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// The gog carried by a document: the payload itself or the iso's domain.
json doc_gog(const json& doc) {
  if (doc.contains("darts")) return doc;
  if (doc.contains("dom")) return doc.at("dom");
  if (doc.contains("iso")) return doc_gog(doc.at("iso"));
  throw std::runtime_error("document carries no graph of groups");
}

// "--subgraph v,f": names are vertices or edge pair names of the gog.
json subgraph_json(const json& gog_doc, const std::string& spec) {
  json vertices = json::array(), edges = json::array();
  const json& vg = gog_doc.at("vertex_groups");
  const json& eg = gog_doc.at("edge_groups");
  std::istringstream in(spec);
  std::string name;
  while (std::getline(in, name, ',')) {
    if (name.empty()) continue;
    if (vg.contains(name)) vertices.push_back(name);
    else if (eg.contains(name)) edges.push_back(name);
    else throw std::runtime_error("subgraph name '" + name + "' is neither a vertex nor an edge");
  }
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

void print_text(const json& resp) {
  if (resp.contains("error")) {
    std::cout << "error: " << resp.at("error").get<std::string>() << "\n";
    return;
  }
  if (resp.contains("violations")) {
    const json& v = resp.at("violations");
    if (v.empty()) {
      std::cout << "valid\n";
    } else {
      for (const json& s : v) std::cout << "violation: " << s.get<std::string>() << "\n";
    }
    return;
  }
  if (resp.contains("equal")) {
    std::cout << (resp.at("equal").get<bool>() ? "equal" : "not equal") << "\n";
    return;
  }
  if (resp.contains("zero")) {
    std::cout << (resp.at("zero").get<bool>() ? "zero" : "not zero") << "\n";
    return;
  }
  if (resp.contains("class")) {
    std::cout << resp.at("class").get<std::string>() << "\n";
    return;
  }
  if (resp.contains("semi_conjugation")) {
    std::cout << (resp.at("semi_conjugation").get<bool>() ? "semi-conjugation holds"
                                                          : "semi-conjugation fails")
              << "\n";
    return;
  }
  if (resp.contains("result")) {
    std::cout << resp.at("result").get<std::string>() << "\n";
    return;
  }
  std::cout << dump_canonical(resp);
}

int run(const json& req, const std::string& format) {
  gog_session* s = gog_session_new();
  char* out = gog_exec(s, req.dump().c_str());
  std::string text = out ? out : "";
  gog_string_free(out);
  int exit_code = gog_last_exit(s);
  gog_session_free(s);
  if (format == "text") {
    print_text(json::parse(text));
  } else {
    std::cout << text;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-of-groups calculus: words, isomorphisms, Dehn twists, surgery"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::string file, file2, word_text, vertex, subgraph, basepoint;
  bool inverse = false;

  auto* c_validate = app.add_subcommand("validate", "validate a gog, iso or plan document");
  c_validate->add_option("file", file)->required();

  auto* c_reduce = app.add_subcommand("reduce", "reduce a path-group word");
  c_reduce->add_option("gog", file)->required();
  c_reduce->add_option("word", file2)->required();

  auto* c_eq = app.add_subcommand("eq", "compare two path-group words");
  std::string file3;
  c_eq->add_option("gog", file)->required();
  c_eq->add_option("word", file2)->required();
  c_eq->add_option("word2", file3)->required();

  auto* c_apply = app.add_subcommand("apply", "apply an iso to a word");
  c_apply->add_option("iso", file)->required();
  c_apply->add_option("word", file2)->required();

  auto* c_compose = app.add_subcommand("compose", "compose two isos (first after second)");
  c_compose->add_option("iso", file)->required();
  c_compose->add_option("iso2", file2)->required();

  auto* c_invert = app.add_subcommand("invert", "invert an iso");
  c_invert->add_option("iso", file)->required();

  auto* c_dehn = app.add_subcommand("dehn", "Dehn twist analysis");
  c_dehn->require_subcommand(1);
  std::string dehn_cmds[] = {"classify", "twistors", "subdivide", "efficient"};
  for (const std::string& name : dehn_cmds)
    c_dehn->add_subcommand(name)->add_option("iso", file)->required();

  auto* c_hzero = app.add_subcommand("hzero", "decide H-length zero");
  c_hzero->add_option("iso", file, "iso or plan document")->required();
  c_hzero->add_option("wordfile", file2, "word document");
  c_hzero->add_option("--word", word_text, "vertex-group word text");
  c_hzero->add_option("--vertex", vertex, "vertex carrying --word");
  c_hzero->add_flag("--inverse", inverse, "test against the inverse iso");

  auto* c_quotient = app.add_subcommand("quotient", "contract a subgraph");
  c_quotient->add_option("file", file, "gog or iso document")->required();
  c_quotient->add_option("--subgraph", subgraph, "comma list of vertices and edges")->required();
  c_quotient->add_option("--basepoint", basepoint);

  auto* c_blowup = app.add_subcommand("blowup", "blow up per a plan document");
  c_blowup->add_option("plan", file)->required();

  auto* c_partial = app.add_subcommand("partial-blowup", "blow up a partial Dehn twist");
  c_partial->add_option("plan", file)->required();

  auto* c_roundtrip = app.add_subcommand("roundtrip", "quotient then blow up; verify");
  c_roundtrip->add_option("gog", file, "gog document (consistency only)")->required();
  c_roundtrip->add_option("iso", file2, "iso document");
  c_roundtrip->add_option("--subgraph", subgraph, "comma list of vertices and edges")->required();
  c_roundtrip->add_option("--basepoint", basepoint);

  CLI11_PARSE(app, argc, argv);

  try {
    json req;
    if (app.got_subcommand(c_validate)) {
      req = {{"cmd", "validate"}, {"doc", load_doc(file)}};
    } else if (app.got_subcommand(c_reduce)) {
      req = {{"cmd", "reduce"}, {"gog", load_doc(file)}, {"word", load_doc(file2)}};
    } else if (app.got_subcommand(c_eq)) {
      req = {{"cmd", "eq"}, {"gog", load_doc(file)}, {"word", load_doc(file2)},
             {"word2", load_doc(file3)}};
    } else if (app.got_subcommand(c_apply)) {
      req = {{"cmd", "apply"}, {"iso", load_doc(file)}, {"word", load_doc(file2)}};
    } else if (app.got_subcommand(c_compose)) {
      req = {{"cmd", "compose"}, {"iso", load_doc(file)}, {"iso2", load_doc(file2)}};
    } else if (app.got_subcommand(c_invert)) {
      req = {{"cmd", "invert"}, {"iso", load_doc(file)}};
    } else if (app.got_subcommand(c_dehn)) {
      std::string sub = c_dehn->get_subcommands().at(0)->get_name();
      req = {{"cmd", "dehn-" + sub}, {"iso", load_doc(file)}};
    } else if (app.got_subcommand(c_hzero)) {
      json doc = load_doc(file);
      req = {{"cmd", "hzero"}, {"iso", doc}, {"inverse", inverse}};
      if (!word_text.empty()) {
        bool plan = doc.contains("locals") || doc.value("kind", "") == "plan";
        if (plan) {
          req["word"] = word_text;
        } else {
          std::string v = vertex;
          if (v.empty()) {
            const json& vg = doc_gog(doc).at("vertex_groups");
            if (vg.size() != 1)
              throw std::runtime_error("--vertex required: domain has several vertices");
            v = vg.begin().key();
          }
          req["word"] = json::array({json{{"v", v}, {"w", word_text}}});
        }
      } else if (!file2.empty()) {
        req["word"] = load_doc(file2);
      } else {
        throw std::runtime_error("hzero needs a word document or --word");
      }
    } else if (app.got_subcommand(c_quotient)) {
      json doc = load_doc(file);
      json key = doc.contains("dom") ? json{{"iso", doc}} : json{{"gog", doc}};
      req = std::move(key);
      req["cmd"] = "quotient";
      req["subgraph"] = subgraph_json(doc_gog(doc), subgraph);
      if (!basepoint.empty()) req["basepoint"] = basepoint;
    } else if (app.got_subcommand(c_blowup)) {
      req = {{"cmd", "blowup"}, {"plan", load_doc(file)}};
    } else if (app.got_subcommand(c_partial)) {
      req = {{"cmd", "partial-blowup"}, {"plan", load_doc(file)}};
    } else if (app.got_subcommand(c_roundtrip)) {
      json iso = load_doc(file2.empty() ? file : file2);
      req = {{"cmd", "roundtrip"}, {"iso", iso}};
      req["subgraph"] = subgraph_json(doc_gog(iso), subgraph);
      if (!basepoint.empty()) req["basepoint"] = basepoint;
    }
    return run(req, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
