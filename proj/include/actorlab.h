/* actorlab.h -- public C API for the actorlab library
 * SPDX-License-Identifier: MIT
 *
 * actorlab implements a small nominal actor calculus: programs are class
 * tables plus a main process; configurations are finite sets of actors,
 * each with a process, a private field state, and a FIFO queue of pending
 * invocations.  The library provides parsing, the concrete / decorated /
 * abstract operational semantics, two counter-machine encoders, and
 * decision procedures (termination, control-state reachability, process
 * reachability) for the decidable fragments.
 *
 * All functions returning `al_status` report failure details through
 * al_last_error(), a thread-local message valid until the next failing
 * call on the same thread.  Strings returned through `char **` out
 * parameters are heap-allocated and must be released with al_string_free.
 */
#ifndef ACTORLAB_H
#define ACTORLAB_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum al_status {
  AL_OK = 0,
  AL_ERR_PARSE = 1,        /* lexical or syntax error, with diagnostics */
  AL_ERR_CHECK = 2,        /* well-formedness violation */
  AL_ERR_INAPPLICABLE = 3, /* program outside the decidable fragment */
  AL_ERR_INVALID_ARG = 4,  /* bad argument (null handle, unknown mode, ...) */
  AL_ERR_INTERNAL = 5      /* invariant violation inside the library */
} al_status;

/* Semantics flavors. */
#define AL_MODE_CONCRETE 0
#define AL_MODE_DECORATED 1
#define AL_MODE_ABSTRACT 2

/* Counter-machine compilation targets. */
#define AL_TARGET_BA 0 /* bounded-actors encoding (faulty machines) */
#define AL_TARGET_RO 1 /* read-only encoding (exact machines) */

typedef struct al_program al_program; /* parsed program (immutable) */
typedef struct al_config al_config;   /* configuration (immutable) */
typedef struct al_cm al_cm;           /* counter machine (immutable) */

/* Library version, as a static string; do not free. */
const char *al_version(void);

/* Message for the most recent failing call on this thread; do not free. */
const char *al_last_error(void);

/* Release a string returned through a `char **` out parameter. */
void al_string_free(char *s);

/* ----- programs ----- */

/* Parse program text.  On AL_ERR_PARSE / AL_ERR_CHECK the diagnostics are
 * in al_last_error(), one per line, formatted "line:col: message". */
al_status al_program_parse(const char *text, al_program **out);
void al_program_free(al_program *p);

/* Re-run the well-formedness checks (parse already enforces them). */
al_status al_program_check(const al_program *p);

/* Fragment classification; each out flag is 0 or 1 and may be NULL. */
al_status al_program_classify(const al_program *p, int *ba, int *ro, int *sl);

/* Pretty-print the program in the canonical surface syntax. */
al_status al_program_format(const al_program *p, char **out);

/* ----- configurations ----- */

/* Initial configuration: the root actor holding the main process.
 * mode is one of AL_MODE_*. */
al_status al_initial_config(const al_program *p, int mode, al_config **out);
void al_config_free(al_config *c);

al_status al_config_to_json(const al_config *c, char **out);
al_status al_config_from_json(const char *json, al_config **out);

/* Stable 64-bit digest of the configuration, as 16 lowercase hex digits. */
al_status al_config_digest(const al_config *c, char **out);

/* Ordering test: is `a` dominated by `b` (a ≼ b)?  mode selects the
 * concrete or abstract order and must match the configs' flavor.
 * *out is set to 1 or 0. */
al_status al_config_leq(const al_config *a, const al_config *b, int mode,
                        int *out);

/* ----- execution ----- */

/* Per-step trace callback: a single JSON object, no trailing newline. */
typedef void (*al_trace_cb)(const char *json_line, void *user);

/* Run the program under a scheduling policy.
 *   mode    one of AL_MODE_*
 *   policy  "det" (first successor), "random" (seeded uniform choice), or
 *           "guided" (script selects each step; see `script`)
 *   script  for "guided": JSON array of selectors, each {"index": n} or
 *           {"actor": "C#k"} or {"actor": "C#k", "rule": "invk"}; NULL
 *           otherwise
 *   budget  maximum number of steps (<= 0 means a small default)
 *   full    nonzero embeds the full configuration in each trace line
 *   cb      optional per-step trace callback
 * On success *final_out (optional) receives the last configuration and
 * *verdict_out (optional) one of "quiescent", "budget", "error". */
al_status al_run(const al_program *p, int mode, const char *policy,
                 uint64_t seed, long budget, int full, const char *script,
                 al_trace_cb cb, void *user, al_config **final_out,
                 char **verdict_out);

/* Exhaustive reachability statistics up to a state budget.  States are
 * counted up to renaming of run-generated fresh names.  Returns a JSON
 * object {"states":n,"transitions":n,"depth":n,"quiescent":n,
 * "errors":n,"complete":bool}. */
al_status al_explore(const al_program *p, int mode, long state_budget,
                     char **stats_json);

/* ----- counter machines ----- */

/* Parse a counter machine ("k: INC r", "k: DECJ r l", "k: HALT" lines). */
al_status al_cm_parse(const char *text, al_cm **out);
void al_cm_free(al_cm *m);

/* Run from (1,0,0).  faulty != 0 uses the lossy (2FTM) step relation with
 * a seeded choice among successors.  Returns a JSON trace
 * {"steps":[[i,v1,v2],...],"halted":bool} (counter value -1 encodes a
 * faulted register). */
al_status al_cm_run(const al_cm *m, int faulty, long budget, uint64_t seed,
                    char **trace_json);

/* Compile to an actor program; target is AL_TARGET_BA or AL_TARGET_RO. */
al_status al_cm_compile(const al_cm *m, int target, al_program **out);

/* ----- decision procedures ----- */

/* Each decider returns AL_OK with a JSON verdict object
 *   {"verdict": "...", "fragment": "...", "witness": ...}
 * or AL_ERR_INAPPLICABLE when the program lies outside every decidable
 * fragment.  Termination verdicts: "TERMINATES", "DIVERGES",
 * "ERROR-STATE-REACHABLE".  Reachability verdicts: "REACHABLE",
 * "UNREACHABLE". */
al_status al_decide_termination(const al_program *p, char **verdict_json);
al_status al_decide_reach_config(const al_program *p, const al_config *target,
                                 char **verdict_json);
al_status al_decide_reach_process(const al_program *p, const char *process_src,
                                  char **verdict_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ACTORLAB_H */
