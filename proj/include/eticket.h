/* Privacy-preserving attribute-based e-ticket library: C API.
 *
 * Conventions
 *   - Every function returns an etk_status (0 == ETK_OK) unless noted.
 *   - On failure, etk_last_error() returns a thread-local description of the
 *     most recent error in the calling thread.
 *   - Byte outputs are returned through etk_buf, which the caller releases
 *     with etk_buf_free().  Handles are released with their *_free function.
 *   - All protocol messages are opaque byte strings produced and consumed by
 *     these functions; they are safe to store and ship over any transport.
 *   - `now` parameters are Unix epoch seconds (see etk_parse_time /
 *     etk_now_epoch) and gate validity-period checks.
 *   - Actor handles own a deterministic random stream: pass use_seed = 1 and
 *     a seed to make every output reproducible, or use_seed = 0 for fresh
 *     OS entropy.
 */
#ifndef ETICKET_H
#define ETICKET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum etk_status {
    ETK_OK = 0,
    ETK_ERR_INVALID_ARG = 1,
    ETK_ERR_PARSE = 2,
    ETK_ERR_IO = 3,
    ETK_ERR_STATE = 4,
    ETK_ERR_POLE_COLLISION = 5,
    ETK_ERR_RANGE_TOO_WIDE = 6,
    ETK_ERR_UNKNOWN_POLICY = 7,
    ETK_ERR_NOT_SATISFIED = 8,
    ETK_ERR_PROOF_FAILED = 9,
    ETK_ERR_TICKET_CHECK = 10,
    ETK_ERR_VP_WINDOW = 11,
    ETK_ERR_REPEAT_VERIFIER = 12,
    ETK_ERR_EXPIRED_TICKET = 13,
    ETK_ERR_DUPLICATE_NONCE = 14,
    ETK_ERR_CORRUPT_RECORD = 15,
    ETK_ERR_DEGENERATE = 16,
    ETK_ERR_INTERNAL = 100
} etk_status;

/* Group backends. */
#define ETK_BACKEND_PAIRING 1
#define ETK_BACKEND_EXPONENT 2

typedef struct etk_buf {
    uint8_t* data;
    size_t len;
} etk_buf;

typedef struct etk_params etk_params;
typedef struct etk_authority etk_authority;
typedef struct etk_seller etk_seller;
typedef struct etk_user etk_user;
typedef struct etk_verifier etk_verifier;

void etk_buf_free(etk_buf* b);
const char* etk_last_error(void);
const char* etk_status_name(int status);

/* Time helpers: ISO-8601 ("YYYY-MM-DD" or "YYYY-MM-DDTHH:MM:SS[Z]") to epoch
 * seconds, and the current time. */
int etk_parse_time(const char* iso, int64_t* epoch_out);
int64_t etk_now_epoch(void);

/* ----- authority ----------------------------------------------------------- */

/* Runs system setup.  backend selects the group (ETK_BACKEND_*); rbits/qbits
 * size the pairing curve (0 picks the defaults 160/512); test_prime_dec is
 * the exponent backend's decimal group order (NULL picks the default).
 * policy_text uses the textual policy grammar (see README). */
int etk_authority_setup(int backend, unsigned rbits, unsigned qbits,
                        const char* test_prime_dec, const char* policy_text,
                        uint64_t seed, int use_seed, etk_authority** out);
int etk_authority_save(const etk_authority* ca, etk_buf* out);
int etk_authority_load(const uint8_t* data, size_t len, uint64_t seed,
                       int use_seed, etk_authority** out);
/* Emits the public-parameter publication message (also reflects every seller
 * key registered so far). */
int etk_authority_params(const etk_authority* ca, etk_buf* out);
int etk_authority_register_seller(etk_authority* ca, const uint8_t* req,
                                  size_t req_len, etk_buf* resp_out);
int etk_authority_register_user(etk_authority* ca, const uint8_t* req,
                                size_t req_len, etk_buf* resp_out);
void etk_authority_free(etk_authority* ca);

/* ----- public parameters ---------------------------------------------------- */

int etk_params_load(const uint8_t* msg, size_t len, etk_params** out);
void etk_params_free(etk_params* pp);

/* ----- seller ---------------------------------------------------------------- */

int etk_seller_create(const etk_params* pp, const char* seller_id,
                      uint64_t seed, int use_seed, etk_seller** out);
int etk_seller_save(const etk_seller* s, etk_buf* out);
int etk_seller_load(const etk_params* pp, const uint8_t* data, size_t len,
                    uint64_t seed, int use_seed, etk_seller** out);
int etk_seller_reg_request(etk_seller* s, const char* vp, etk_buf* msg_out);
int etk_seller_finish_registration(etk_seller* s, const uint8_t* resp,
                                   size_t resp_len);
int etk_seller_configure_sale(etk_seller* s, const char* service,
                              const char* price, const char* vp_ticket,
                              const char* const* policies, size_t n_policies);
int etk_seller_make_offer(etk_seller* s, etk_buf* msg_out);
int etk_seller_issue(etk_seller* s, const uint8_t* purchase_req,
                     size_t req_len, int64_t now, etk_buf* grant_out);
void etk_seller_free(etk_seller* s);

/* ----- holder ----------------------------------------------------------------- */

int etk_user_create(const etk_params* pp, uint64_t seed, int use_seed,
                    etk_user** out);
int etk_user_save(const etk_user* u, etk_buf* out);
int etk_user_load(const etk_params* pp, const uint8_t* data, size_t len,
                  uint64_t seed, int use_seed, etk_user** out);
/* attrs_text uses the textual attribute grammar (see README). */
int etk_user_reg_request(etk_user* u, const char* attrs_text, const char* vp,
                         etk_buf* msg_out);
int etk_user_finish_registration(etk_user* u, const uint8_t* resp,
                                 size_t resp_len);
int etk_user_request_purchase(etk_user* u, const uint8_t* offer,
                              size_t offer_len, int64_t now,
                              etk_buf* purchase_out);
/* On success writes the ticket record (a local blob, not a message). */
int etk_user_finish_purchase(etk_user* u, const uint8_t* grant,
                             size_t grant_len, etk_buf* ticket_out);
int etk_user_present(etk_user* u, const uint8_t* ticket, size_t ticket_len,
                     const uint8_t* challenge, size_t challenge_len,
                     int64_t now, etk_buf* transcript_out);
/* Testing hook: simulate a cloned device that ignores the visited-verifier
 * table. */
int etk_user_set_table_bypass(etk_user* u, int on);
/* The holder's public key, in the group's canonical element encoding. */
int etk_user_public_key(const etk_user* u, etk_buf* out);
void etk_user_free(etk_user* u);

/* ----- verifier --------------------------------------------------------------- */

int etk_verifier_create(const etk_params* pp, const char* verifier_id,
                        uint64_t seed, int use_seed, etk_verifier** out);
/* Loads a previously written acceptance log.  truncated_out (optional) is
 * set to 1 when a partial trailing record was dropped. */
int etk_verifier_load_table(etk_verifier* v, const char* path,
                            int* truncated_out);
int etk_verifier_challenge(etk_verifier* v, etk_buf* msg_out);
/* Verifies a transcript against the outstanding challenge; on success logs
 * it in memory and, when append_path is non-NULL, appends it to that file. */
int etk_verifier_accept(etk_verifier* v, const uint8_t* transcript,
                        size_t transcript_len, int64_t now,
                        const char* append_path);
void etk_verifier_free(etk_verifier* v);

/* ----- double-spend detection --------------------------------------------------- */

/* Scans the given acceptance logs.  Writes a text report to report_out,
 * the number of detected double spends to n_hits_out, and (when at least one
 * hit allows it) the recovered holder public key encoding to key_out
 * (key_out->len == 0 otherwise). */
int etk_detect(const etk_params* pp, const char* const* vtable_paths,
               size_t n_paths, etk_buf* report_out, int* n_hits_out,
               etk_buf* key_out);

/* ----- demo / bench --------------------------------------------------------------- */

/* Runs the built-in lifecycle demo, printing its trace to stdout.  Returns
 * ETK_OK when every demo expectation held. */
int etk_demo(int backend, unsigned rbits, unsigned qbits,
             const char* test_prime_dec, uint64_t seed);
/* Runs the benchmark; CSV goes to csv_path (or stdout when NULL), progress
 * lines to stderr. */
int etk_bench(int backend, unsigned rbits, unsigned qbits,
              const char* test_prime_dec, uint64_t seed, unsigned iters,
              const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* ETICKET_H */
