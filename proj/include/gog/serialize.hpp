#ifndef GOG_SERIALIZE_HPP
#define GOG_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "gog/surgery.hpp"

namespace gog {

using json = nlohmann::json;  // std::map-backed: keys serialize sorted

// Free-word text in the "a^2 b^-1" convention with the group's generator names.
std::string free_text(const GroupRef& gr, const FreeWord& w);
FreeWord free_parse(const GroupRef& gr, const std::string& tag, const std::string& text);

json gog_to_json(const GraphOfGroups& G);
GogPtr gog_from_json(const json& j);

json elt_to_json(const GraphOfGroups& G, const std::string& v, const GroupElement& g);
GroupElement elt_from_json(const GraphOfGroups& G, const std::string& v, const json& j);

json word_to_json(const GraphOfGroups& G, const PathWord& w);
PathWord word_from_json(const GraphOfGroups& G, const json& j);

json iso_to_json(const GogIso& H);
GogIso iso_from_json(const json& j);

json group_iso_to_json(const GroupIso& h);
GroupIso group_iso_from_json(const json& j, GroupCtx dom, GroupCtx cod);

// Blow-up data: a gog-iso plus, per exceptional vertex, the local twist and
// the identification theta0.
struct PlanDoc {
  GogIso iso;
  std::map<std::string, LocalTwist> locals;
};
json plan_to_json(const PlanDoc& p);
PlanDoc plan_from_json(const json& j);

// Canonical byte-stable rendering (sorted keys by construction, 2-space indent,
// trailing newline).
std::string dump_canonical(const json& j);

// Wraps a payload as a top-level document.
json make_doc(const std::string& kind, json payload);

}  // namespace gog

#endif
