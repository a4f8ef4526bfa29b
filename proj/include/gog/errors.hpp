#ifndef GOG_ERRORS_HPP
#define GOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gog {

// Thrown on contract violations (mismatched groups, disconnected words,
// invalid isomorphism data, ...). The CLI maps these to exit code 2 unless
// they represent a checked negative verdict.
class Error : public std::runtime_error {
public:
  explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

}  // namespace gog

#endif
