#ifndef GOG_DEHN_HPP
#define GOG_DEHN_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gog/morphism.hpp"

namespace gog {

// Twist data of a classical Dehn twist: gamma_e per rank-1 dart and the
// twistors z_e = gamma_ebar gamma_e^-1 per dart, all as edge-group words.
struct TwistData {
  std::map<std::string, GroupElement> gamma;
  std::map<std::string, GroupElement> z;
};

struct TwistClass {
  enum class Kind { Classical, General, NotADehnTwist };
  Kind kind = Kind::NotADehnTwist;
  std::optional<TwistData> data;  // Classical only
  std::string reason;             // NotADehnTwist only
};

// Classical: graph identity, identity vertex/edge isos, delta(e) = f_e(gamma_e)
// with gamma_e in Z(G_e). General: delta(e) only central for f_e(G_e).
TwistClass classify_twist(const GogIso& H);

// Twistor family of a classical twist; checks D_*(t_e) = t_e f_e(z_e).
TwistData twistors(const GogIso& D);

// One dart per edge pair.
using Orientation = std::set<std::string>;

// The classical twist with gamma_e = z_e^-1 on positive darts and gamma_e = 1
// on negative darts. The family may list either dart of a pair; a missing
// partner defaults to the inverse twistor.
GogIso from_twistors(GogPtr G, const Orientation& positive,
                     const std::map<std::string, GroupElement>& z);

// Subdivides every non-classical dart e0: a new vertex v0@e0 with cyclic group
// <f_{e0}(G_{e0}), delta(e0)>, edges e0' and e0'' (leading '~' of e0 becomes
// '*' in these names), and corrections making the twist classical. theta sends
// t_{e0} to t_{e0'} t_{e0''}.
struct Subdivision {
  bool changed = false;
  GogIso classical;
  PathMorphism theta;
  std::map<std::string, std::string> new_vertices;  // subdivided dart -> vertex
};
Subdivision subdivide_to_classical(const GogIso& D);

struct EfficiencyReport {
  bool minimal = true;
  bool no_invisible_vertex = true;
  bool no_proper_power = true;
  bool no_unused_edge = true;
  bool not_positively_bonded = true;
  std::vector<std::string> details;
  bool efficient() const {
    return minimal && no_invisible_vertex && no_proper_power && no_unused_edge &&
           not_positively_bonded;
  }
};
// Classical twists over explicit free vertex groups only.
EfficiencyReport efficiency_check(const GogIso& D);

enum class Bonded { Positive, Negative, None };
// Bondedness of two rank-1 darts with a common terminal vertex and nontrivial
// twistors, decided by primitive-root conjugacy and exponent signs.
Bonded bondedness(const GogIso& D, const std::string& e1, const std::string& e2);

// Twistor criterion for outer equality of two classical twists on one gog.
// The trivial-intersection hypothesis is certified per dart by an exhibited
// element r_e outside <root(f_e(x))>.
struct OuterComparison {
  enum class Kind { Equal, Distinct, HypothesisFails };
  Kind kind = Kind::HypothesisFails;
  std::map<std::string, GroupElement> witnesses;  // dart -> exhibited r_e
  std::string detail;
};
OuterComparison same_outer_by_twistors(const GogIso& D, const GogIso& D2);

// All edge groups trivial + identity graph map and vertex isos => general
// Dehn twist automorphism.
struct TrivialEdgeResult {
  bool is_dehn_twist = false;
  std::string reason;
};
TrivialEdgeResult trivial_edge_dehn(const GogIso& H);

}  // namespace gog

#endif
