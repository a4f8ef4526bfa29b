#ifndef GOG_C_H
#define GOG_C_H

/* C interface to the graph-of-groups engine. All exchange is JSON text:
 * requests are {"cmd": ..., ...} objects, responses carry an "exit" field
 * (0 success/true, 1 false/violation, 2 error). Returned strings are owned
 * by the caller and must be released with gog_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gog_session gog_session;

gog_session* gog_session_new(void);
void gog_session_free(gog_session* s);

/* Executes one request; never returns NULL on a live session. The "exit"
 * field of the response is also returned by gog_last_exit. */
char* gog_exec(gog_session* s, const char* request_json);

/* Exit code of the last gog_exec call on this session; -1 before any call. */
int gog_last_exit(const gog_session* s);

/* Error message of the last gog_exec call, or NULL if it succeeded. The
 * pointer is valid until the next gog_exec or gog_session_free. */
const char* gog_last_error(const gog_session* s);

void gog_string_free(char* s);

const char* gog_version(void);

#ifdef __cplusplus
}
#endif

#endif
