#include "gog/gog_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "gog/engine.hpp"

struct gog_session {
  int last_exit = -1;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

gog_session* gog_session_new(void) { return new (std::nothrow) gog_session; }

void gog_session_free(gog_session* s) { delete s; }

char* gog_exec(gog_session* s, const char* request_json) {
  if (!s) return nullptr;
  std::string out = gog::engine_exec_text(request_json ? request_json : "");
  try {
    gog::json resp = gog::json::parse(out);
    s->last_exit = resp.value("exit", 2);
    s->last_error = resp.value("error", "");
  } catch (...) {
    s->last_exit = 2;
    s->last_error = "unparseable engine response";
  }
  return dup_string(out);
}

int gog_last_exit(const gog_session* s) { return s ? s->last_exit : -1; }

const char* gog_last_error(const gog_session* s) {
  if (!s || s->last_error.empty()) return nullptr;
  return s->last_error.c_str();
}

void gog_string_free(char* s) { std::free(s); }

const char* gog_version(void) { return "1.0.0"; }

}  // extern "C"
