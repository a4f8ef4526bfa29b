#ifndef GOG_PATH_WORD_HPP
#define GOG_PATH_WORD_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gog/free_word.hpp"

namespace gog {

struct PathWord;

// Element of a vertex group: either a word in an explicit free group, or an
// element of a nested fundamental group (a closed connected path word of the
// sub-graph-of-groups, boxed).
class GroupElement {
public:
  GroupElement() : v_(FreeWord{}) {}
  static GroupElement free(FreeWord w) { return GroupElement(std::move(w)); }
  static GroupElement pi1(PathWord w);

  bool is_free() const { return std::holds_alternative<FreeWord>(v_); }
  const FreeWord& fw() const { return std::get<FreeWord>(v_); }
  const PathWord& pw() const { return *std::get<std::shared_ptr<const PathWord>>(v_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b);

private:
  explicit GroupElement(FreeWord w) : v_(std::move(w)) {}
  explicit GroupElement(std::shared_ptr<const PathWord> w) : v_(std::move(w)) {}
  std::variant<FreeWord, std::shared_ptr<const PathWord>> v_;
};

// Word of the path group: alternating r0 t1 r1 ... tq rq with vertex-group
// elements r_i and darts t_i. `start` is the vertex carrying r0 (equal to
// the initial vertex of darts[0] whenever the word is connected).
struct PathWord {
  std::string start;
  std::vector<GroupElement> elts;   // size q+1
  std::vector<std::string> darts;   // size q

  std::size_t path_length() const { return darts.size(); }

  static PathWord at_vertex(std::string v, GroupElement g) {
    PathWord w;
    w.start = std::move(v);
    w.elts.push_back(std::move(g));
    return w;
  }
  static PathWord identity(std::string v) { return at_vertex(std::move(v), GroupElement()); }

  friend bool operator==(const PathWord&, const PathWord&) = default;
};

inline GroupElement GroupElement::pi1(PathWord w) {
  return GroupElement(std::make_shared<const PathWord>(std::move(w)));
}

inline bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.is_free() != b.is_free()) return false;
  if (a.is_free()) return a.fw() == b.fw();
  return a.pw() == b.pw();
}

}  // namespace gog

#endif
