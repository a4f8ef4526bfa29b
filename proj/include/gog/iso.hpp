#ifndef GOG_ISO_HPP
#define GOG_ISO_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gog/words.hpp"

namespace gog {

struct GogIso;
using GogIsoPtr = std::shared_ptr<const GogIso>;

// Where a group iso's domain/codomain lives: a vertex group of a gog, or
// (for theta-style identifications) the fundamental group of a gog.
struct GroupCtx {
  GogPtr gog;
  std::string vertex;
  bool is_pi1 = false;  // true: pi1(gog, vertex) rather than the vertex group
};

// Group isomorphism between vertex groups / fundamental groups. Values are
// immutable; application is total on legal inputs.
class GroupIso {
public:
  enum class Kind { Identity, FreeImages, Theta, Induced, Composite };

  static GroupIso identity(GroupCtx ctx);
  // Images of the domain free basis inside the codomain vertex group.
  static GroupIso free_images(GroupCtx dom, GroupCtx cod, std::vector<GroupElement> images);
  // Images of the domain free basis as pi1 words of the codomain gog.
  static GroupIso theta(GroupCtx dom, GroupCtx cod, std::vector<PathWord> images);
  // Isomorphism of pi1 vertex groups induced by a gog iso of the sub-gog.
  static GroupIso induced(GroupCtx dom, GroupCtx cod, GogIsoPtr sub);
  static GroupIso composite(std::vector<GroupIso> factors);  // applied left to right

  Kind kind() const { return kind_; }
  const GroupCtx& dom() const { return dom_; }
  const GroupCtx& cod() const { return cod_; }
  const std::vector<GroupElement>& images() const { return images_; }
  const std::vector<PathWord>& word_images() const { return word_images_; }
  const GogIsoPtr& sub() const { return sub_; }
  const std::vector<GroupIso>& factors() const { return factors_; }

  GroupElement apply(const GroupElement& g) const;
  // For pi1-codomain isos (theta): image as a path word of the codomain gog.
  PathWord apply_word(const GroupElement& g) const;

  GroupIso inverse() const;

  // Acts as the identity on its domain generators?
  bool is_identity_map() const;

private:
  Kind kind_ = Kind::Identity;
  GroupCtx dom_, cod_;
  std::vector<GroupElement> images_;
  std::vector<PathWord> word_images_;
  GogIsoPtr sub_;
  std::vector<GroupIso> factors_;
  mutable std::shared_ptr<std::vector<GroupElement>> inv_images_;  // cached search result
};

struct IsoReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Graph-of-groups isomorphism: graph map, vertex and edge isomorphisms, and
// correction terms delta(e) in G_{tau(H(e))} of the codomain.
struct GogIso {
  GogPtr dom, cod;
  std::map<std::string, std::string> vertex_map;  // per domain vertex
  std::map<std::string, std::string> dart_map;    // per domain dart
  std::map<std::string, GroupIso> vertex_isos;    // per domain vertex
  std::map<std::string, int> edge_exps;           // per pair_name: +1 / -1 (rank-1 only)
  std::map<std::string, GroupElement> corrections; // per domain dart

  const std::string& map_vertex(const std::string& v) const;
  const std::string& map_dart(const std::string& e) const;
  GroupIso vertex_iso(const std::string& v) const;
  int edge_exp(const std::string& dart) const;
  GroupElement correction(const std::string& dart) const;
  bool graph_identity() const;

  static GogIso identity(GogPtr g);
};

IsoReport iso_validate(const GogIso& H);

// The induced map H_* on path-group words: H_*(g) = H_v(g) and
// H_*(t_e) = delta(ebar) t_{H(e)} delta(e)^-1, reduced.
PathWord iso_apply(const GogIso& H, const PathWord& w);
GroupElement iso_apply_vertex(const GogIso& H, const std::string& v, const GroupElement& g);

GogIso iso_compose(const GogIso& H2, const GogIso& H1);  // H2 after H1
GogIso iso_invert(const GogIso& H);

// G' equals G except f'_{e0} = ad_{g0^-1} . f_{e0}; H0 is the natural iso
// G -> G' with delta0(e0) = g0 and trivial corrections elsewhere.
struct ElementaryEquivalence {
  GogPtr modified;
  GogIso h0;
};
ElementaryEquivalence elementary_equivalence(GogPtr G, const std::string& e0, const GroupElement& g0);

// Conjugates every correction: delta'(e) = H_{tau(e)}(w_e)^-1 delta(e) w_e,
// over the accordingly re-mapped gog; returns H' together with the
// conjugating iso H0 with H' = H0 . H . H0^-1.
struct TwistedCorrections {
  GogIso conjugated;  // H'
  GogIso h0;          // G -> G'
};
TwistedCorrections twist_corrections(const GogIso& H, const std::map<std::string, GroupElement>& w);

// theta . A_* == B_* . theta on pi1(dom(A), v), checked on pi1 generators.
// theta maps pi1(dom(A), v) to pi1(dom(B), v2); equality tested in dom(B).
bool check_semi_conjugation(const std::function<PathWord(const PathWord&)>& theta,
                            const GogIso& A, const GogIso& B, const std::string& v,
                            const std::string& v2);

// Desk-scale isomorphism certificate for free_images: rank equality plus a
// bounded check that the images generate the codomain group.
IsoReport group_iso_validate(const GroupIso& h);

}  // namespace gog

#endif
