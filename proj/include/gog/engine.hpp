#ifndef GOG_ENGINE_HPP
#define GOG_ENGINE_HPP

#include "gog/serialize.hpp"

namespace gog {

// Executes one request {"cmd": ..., ...} and returns a response carrying an
// "exit" field: 0 success/true, 1 false/violation, 2 error. Never throws.
json engine_exec(const json& request);

// Convenience: parse request text, execute, dump canonical response.
std::string engine_exec_text(const std::string& request);

}  // namespace gog

#endif
