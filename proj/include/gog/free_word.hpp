#ifndef GOG_FREE_WORD_HPP
#define GOG_FREE_WORD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gog {

// A letter of a freely reduced word: generator index with a nonzero exponent.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word in a finite-rank free group, stored run-length style.
// The empty word is the identity. `group` tags the owning group; operations
// on words from different groups are rejected.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(std::string group) : group_(std::move(group)) {}

  // Builds a word from an arbitrary letter sequence, freely reducing it.
  static FreeWord from_letters(std::string group, const std::vector<Letter>& letters);

  const std::string& group() const { return group_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  // Total letter count with multiplicity, i.e. sum of |exp|.
  std::int64_t length() const;

  FreeWord inverse() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

private:
  std::string group_;
  std::vector<Letter> letters_;  // reduced: no zero exponents, no equal neighbours
};

FreeWord fw_multiply(const FreeWord& u, const FreeWord& v);
FreeWord fw_power(const FreeWord& u, std::int64_t k);

// Expansion to single letters (exponent +-1 each) and back; used by the
// cyclic-word algorithms below.
std::vector<int> fw_expand(const FreeWord& w);  // signed generators, gen+1 / -(gen+1)
FreeWord fw_from_expanded(const std::string& group, const std::vector<int>& syms);

// w = c * core * c^-1 with core cyclically reduced.
struct CyclicForm {
  FreeWord conjugator;
  FreeWord core;
};
CyclicForm fw_cyclic_reduce(const FreeWord& w);

// w = root^exponent with root not a proper power; exponent >= 1. Requires w != 1.
struct RootPower {
  FreeWord root;
  std::int64_t exponent = 0;
};
RootPower fw_primitive_root(const FreeWord& w);

// The unique k with w = u^k, if any. Requires u != 1.
std::optional<std::int64_t> fw_power_of(const FreeWord& w, const FreeWord& u);

// Witness c with u = c v c^-1, if u and v are conjugate.
std::optional<FreeWord> fw_conjugacy(const FreeWord& u, const FreeWord& v);

// Parsing/printing in the "a^2 b^-1" convention, generators a..z by index.
FreeWord fw_parse(const std::string& group, const std::string& text);
std::string fw_print(const FreeWord& w);

}  // namespace gog

#endif
