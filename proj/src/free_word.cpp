#include "gog/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "gog/errors.hpp"

namespace gog {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (l.exp == 0) return;
  if (!out.empty() && out.back().gen == l.gen) {
    out.back().exp += l.exp;
    if (out.back().exp == 0) out.pop_back();
    return;
  }
  out.push_back(l);
}

void check_same_group(const FreeWord& u, const FreeWord& v) {
  require(u.group() == v.group(),
          "free words belong to different groups: '" + u.group() + "' vs '" + v.group() + "'");
}

}  // namespace

FreeWord FreeWord::from_letters(std::string group, const std::vector<Letter>& letters) {
  FreeWord w(std::move(group));
  std::vector<Letter> out;
  for (const Letter& l : letters) push_reduced(out, l);
  w.letters_ = std::move(out);
  return w;
}

std::int64_t FreeWord::length() const {
  std::int64_t n = 0;
  for (const Letter& l : letters_) n += std::llabs(l.exp);
  return n;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(group_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord fw_multiply(const FreeWord& u, const FreeWord& v) {
  if (u.group().empty()) return v;  // untagged identity
  if (v.group().empty()) return u;
  check_same_group(u, v);
  std::vector<Letter> out = u.letters();
  for (const Letter& l : v.letters()) push_reduced(out, l);
  return FreeWord::from_letters(u.group(), out);
}

FreeWord fw_power(const FreeWord& u, std::int64_t k) {
  FreeWord base = k < 0 ? u.inverse() : u;
  std::int64_t n = k < 0 ? -k : k;
  FreeWord acc(u.group());
  for (std::int64_t i = 0; i < n; ++i) acc = fw_multiply(acc, base);
  return acc;
}

std::vector<int> fw_expand(const FreeWord& w) {
  std::vector<int> out;
  for (const Letter& l : w.letters()) {
    int sym = l.exp > 0 ? l.gen + 1 : -(l.gen + 1);
    for (std::int64_t i = 0; i < std::llabs(l.exp); ++i) out.push_back(sym);
  }
  return out;
}

FreeWord fw_from_expanded(const std::string& group, const std::vector<int>& syms) {
  std::vector<Letter> letters;
  for (int s : syms) {
    require(s != 0, "zero symbol in expanded word");
    letters.push_back({std::abs(s) - 1, s > 0 ? 1 : -1});
  }
  return FreeWord::from_letters(group, letters);
}

CyclicForm fw_cyclic_reduce(const FreeWord& w) {
  std::vector<int> syms = fw_expand(w);
  std::size_t lo = 0, hi = syms.size();
  std::vector<int> conj;
  while (hi - lo >= 2 && syms[lo] == -syms[hi - 1]) {
    conj.push_back(syms[lo]);
    ++lo;
    --hi;
  }
  return {fw_from_expanded(w.group(), conj),
          fw_from_expanded(w.group(), {syms.begin() + lo, syms.begin() + hi})};
}

RootPower fw_primitive_root(const FreeWord& w) {
  require(!w.is_identity(), "primitive root of the identity is undefined");
  CyclicForm cf = fw_cyclic_reduce(w);
  std::vector<int> core = fw_expand(cf.core);
  const std::size_t n = core.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = core[i] == core[i % d];
    if (!ok) continue;
    FreeWord root = fw_from_expanded(w.group(), {core.begin(), core.begin() + d});
    root = fw_multiply(fw_multiply(cf.conjugator, root), cf.conjugator.inverse());
    return {root, static_cast<std::int64_t>(n / d)};
  }
  fail("unreachable: no period found");
}

std::optional<std::int64_t> fw_power_of(const FreeWord& w, const FreeWord& u) {
  require(!u.is_identity(), "power test against the identity");
  if (!w.group().empty() && !u.group().empty()) check_same_group(w, u);
  if (w.is_identity()) return 0;
  RootPower rw = fw_primitive_root(w);
  RootPower ru = fw_primitive_root(u);
  if (rw.root == ru.root) {
    if (rw.exponent % ru.exponent == 0) return rw.exponent / ru.exponent;
    return std::nullopt;
  }
  if (rw.root == ru.root.inverse()) {
    if (rw.exponent % ru.exponent == 0) return -(rw.exponent / ru.exponent);
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<FreeWord> fw_conjugacy(const FreeWord& u, const FreeWord& v) {
  if (!u.group().empty() && !v.group().empty()) check_same_group(u, v);
  CyclicForm cu = fw_cyclic_reduce(u);
  CyclicForm cv = fw_cyclic_reduce(v);
  std::vector<int> au = fw_expand(cu.core);
  std::vector<int> av = fw_expand(cv.core);
  if (au.size() != av.size()) return std::nullopt;
  const std::size_t n = av.size();
  const std::string& grp = u.group().empty() ? v.group() : u.group();
  for (std::size_t i = 0; i < std::max<std::size_t>(n, 1); ++i) {
    std::vector<int> rot;
    rot.reserve(n);
    for (std::size_t j = 0; j < n; ++j) rot.push_back(av[(i + j) % n]);
    if (rot != au) continue;
    // au = p^-1 * av * p with p the length-i prefix of av.
    FreeWord p = fw_from_expanded(grp, {av.begin(), av.begin() + i});
    FreeWord c = fw_multiply(fw_multiply(cu.conjugator, p.inverse()), cv.conjugator.inverse());
    return c;
  }
  return std::nullopt;
}

FreeWord fw_parse(const std::string& group, const std::string& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    char c = tok[0];
    require(c >= 'a' && c <= 'z', "bad generator in word token '" + tok + "'");
    std::int64_t exp = 1;
    if (tok.size() > 1) {
      require(tok[1] == '^', "bad word token '" + tok + "'");
      try {
        std::size_t pos = 0;
        exp = std::stoll(tok.substr(2), &pos);
        require(pos == tok.size() - 2, "bad exponent in '" + tok + "'");
      } catch (const std::exception&) {
        fail("bad exponent in word token '" + tok + "'");
      }
    }
    letters.push_back({c - 'a', exp});
  }
  return FreeWord::from_letters(group, letters);
}

std::string fw_print(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters()) {
    require(l.gen < 26, "cannot print generator index >= 26");
    if (!first) out << ' ';
    first = false;
    out << static_cast<char>('a' + l.gen);
    if (l.exp != 1) out << '^' << l.exp;
  }
  return out.str();
}

}  // namespace gog
