#ifndef GOG_WORDS_HPP
#define GOG_WORDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gog/graph_of_groups.hpp"

namespace gog {

// ---- vertex-group element arithmetic ----------------------------------------

GroupElement elt_identity(const GraphOfGroups& G, const std::string& v);
// Checks that g is a legal element of G_v (tag/rank for free groups, closed
// connected word at the base for pi1 groups).
void elt_check(const GraphOfGroups& G, const std::string& v, const GroupElement& g);
// Canonical representative: pi1 words reduced, identities in the group's own
// representation. Accepts an untagged free identity for any group.
GroupElement elt_normalize(const GraphOfGroups& G, const std::string& v, const GroupElement& g);
bool elt_is_identity(const GraphOfGroups& G, const std::string& v, const GroupElement& g);
GroupElement elt_multiply(const GraphOfGroups& G, const std::string& v, const GroupElement& a,
                          const GroupElement& b);
GroupElement elt_inverse(const GraphOfGroups& G, const std::string& v, const GroupElement& a);
GroupElement elt_power(const GraphOfGroups& G, const std::string& v, const GroupElement& a,
                       std::int64_t k);
bool elt_equal(const GraphOfGroups& G, const std::string& v, const GroupElement& a,
               const GroupElement& b);
// The unique k with r = u^k, if any; requires u != 1.
std::optional<std::int64_t> elt_power_of(const GraphOfGroups& G, const std::string& v,
                                         const GroupElement& r, const GroupElement& u);
// Generating set of G_v (free basis, or pi1 generators of the sub-gog).
std::vector<GroupElement> group_generators(const GraphOfGroups& G, const std::string& v);

// Exponent k with r = f_e(x)^k for the edge-group generator x of a rank-1
// dart; for rank-0 darts, 0 iff r = 1. nullopt if r is not in the image.
std::optional<std::int64_t> edge_image_membership(const GraphOfGroups& G, const std::string& dart,
                                                  const GroupElement& r);

// ---- path-group words -------------------------------------------------------

std::string pw_end(const GraphOfGroups& G, const PathWord& w);
bool pw_connected(const GraphOfGroups& G, const PathWord& w);
void pw_require_connected(const GraphOfGroups& G, const PathWord& w);

// Bass reduction: removes every backtrack t_e f_e(g) t_ebar -> f_ebar(g)
// and normalizes vertex elements. The result is reduced or trivial.
PathWord pw_reduce(const GraphOfGroups& G, const PathWord& w);
bool pw_is_reduced(const GraphOfGroups& G, const PathWord& w);

PathWord pw_multiply(const GraphOfGroups& G, const PathWord& a, const PathWord& b);
PathWord pw_inverse(const GraphOfGroups& G, const PathWord& w);
PathWord pw_power(const GraphOfGroups& G, const PathWord& w, std::int64_t k);
bool pw_is_identity(const GraphOfGroups& G, const PathWord& w);
bool pw_equal(const GraphOfGroups& G, const PathWord& a, const PathWord& b);

std::vector<std::string> pw_path_type(const PathWord& w);

struct CyclicReduction {
  PathWord core;
  PathWord conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction pw_cyclic_reduce(const GraphOfGroups& G, const PathWord& w);
bool pw_is_cyclically_reduced(const GraphOfGroups& G, const PathWord& w);

// Closed connected word issued at v?
bool pw_is_pi1(const GraphOfGroups& G, const PathWord& w, const std::string& v);

// x |-> W x W^-1 along a connected word W from v0 to w0; maps pi1(G, w0)
// into pi1(G, v0).
PathWord base_change_apply(const GraphOfGroups& G, const PathWord& W, const PathWord& x);

// Spanning-tree generating set of pi1(G, v): tree-conjugated vertex-group
// generators, then one loop per non-tree edge in canonical orientation.
std::vector<PathWord> pi1_generators(const GraphOfGroups& G, const std::string& v);

// Constructively rewrites a closed connected word at v as a product of
// pi1_generators and verifies the identity; the certificate of generation.
bool pi1_generation_check(const GraphOfGroups& G, const std::string& v, const PathWord& w);

// k with r = u^k in pi1, or nullopt. Bounded by path lengths in the
// hyperbolic case, recursing into vertex groups in the elliptic case.
std::optional<std::int64_t> subgroup_power_membership(const GraphOfGroups& G, const PathWord& r,
                                                      const PathWord& u);

// Tree path from `root` toward every vertex: stable letters only.
std::map<std::string, PathWord> tree_paths(const GraphOfGroups& G, const std::string& root);

std::string pw_print(const GraphOfGroups& G, const PathWord& w);

}  // namespace gog

#endif
