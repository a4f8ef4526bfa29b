#ifndef GOG_SURGERY_HPP
#define GOG_SURGERY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gog/dehn.hpp"
#include "gog/hconj.hpp"
#include "gog/morphism.hpp"

namespace gog {

// A connected subgraph: vertices plus edge pairs spanned inside them.
struct SubgraphSpec {
  std::set<std::string> vertices;
  std::set<std::string> edges;  // pair names
};

// Extracts the subgraph as a standalone graph-of-groups.
GogPtr subgraph_gog(const GraphOfGroups& G, const SubgraphSpec& spec);

// Contraction of a connected subgraph into one vertex V0 carrying
// pi1(G0, P0). Edge maps of darts into V0 become ad_{gamma_e} . f_e.
struct QuotientResult {
  GogPtr quotient;
  GogPtr sub;          // G0
  std::string v0;      // contracted vertex name
  std::string p0;
  std::map<std::string, PathWord> gammas;  // per dart into the subgraph
  PathMorphism theta;  // Pi(quotient) -> Pi(original), t_E -> t_e gamma_e^-1
};
QuotientResult quotient_gog(GogPtr G, const SubgraphSpec& sub, const std::string& p0,
                            const std::map<std::string, PathWord>& gammas = {});

// The induced iso on the quotient: delta(E) = H_*(gamma_e) delta(e) gamma_e^-1
// and H_{V0} induced by the restriction of H to G0.
struct QuotientIso {
  GogIso iso;    // on the quotient
  GogIso local;  // H restricted to G0
};
QuotientIso quotient_iso(const GogIso& H, const QuotientResult& Q);

struct MultiQuotientResult {
  GogPtr quotient;
  std::vector<QuotientResult> steps;  // applied in order
  PathWord apply_theta(const PathWord& w) const;  // composite identification
};
MultiQuotientResult quotient_multi(GogPtr G, const std::vector<SubgraphSpec>& subs,
                                   const std::map<std::string, std::string>& basepoints);

// Blow-up plan: per dart E into V0 the attachment data derived from the
// H0^-1-zero witness of theta0(delta(E)).
struct BlowupPlan {
  struct Attach {
    std::string vertex;  // v(E)
    PathWord gamma;      // P0 -> v(E) in Pi(G0)
    GroupElement g;      // residual correction in G_{v(E)}
  };
  std::map<std::string, Attach> attach;  // keyed by dart E with tau(E) = V0
};

struct BlowupPlanResult {
  enum class Kind { Plan, NotLocallyZero, NotCompatible };
  Kind kind = Kind::Plan;
  BlowupPlan plan;
  std::string dart;  // offending dart for the failure kinds
};
// theta0: G_{V0} -> pi1(G0, P0); H0 an automorphism of G0 semi-conjugated to
// H_{V0} by theta0 (verified on generators).
BlowupPlanResult blowup_plan(GogPtr Gq, const GogIso& Hq, const std::string& v0, GogPtr G0,
                             const GogIso& H0, const GroupIso& theta0);

struct BlowupResult {
  GogPtr gog;
  GogIso iso;
  PathMorphism theta;  // Pi(quotient) -> Pi(blown-up)
};
BlowupResult blowup(GogPtr Gq, const GogIso& Hq, const std::string& v0, GogPtr G0,
                    const GogIso& H0, const GroupIso& theta0, const BlowupPlan& plan);

// H_Gamma = id, identity edge isos, identity vertex isos off the exceptional
// set, corrections central for the edge images, and only trivial edge groups
// at exceptional vertices.
bool partial_dehn_detect(const GogIso& H, const std::set<std::string>& exceptional);

struct LocalTwist {
  GogIso d0;        // classical or general twist on g0
  GogPtr g0;
  GroupIso theta0;  // G_{v0} -> pi1(g0, P0)
};

struct PartialBlowupResult {
  bool ok = false;
  GogPtr gog;
  GogIso iso;
  std::vector<PathMorphism> thetas;  // one per blown-up vertex, in order
  std::string fail_vertex, fail_dart;
};
PartialBlowupResult partial_dehn_blowup(const GogIso& H,
                                        const std::map<std::string, LocalTwist>& locals);

}  // namespace gog

#endif
