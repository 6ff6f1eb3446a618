/* C interface to the possibilistic-network library.
 *
 * Every function that can fail returns a pnet_status; on failure the handle
 * and value outputs are left untouched and pnet_last_error() carries a
 * human-readable message for the calling thread. Handles are created by the
 * library and released with the matching *_free function; freeing NULL is a
 * no-op.
 */
#ifndef PNET_H
#define PNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pnet_status {
  PNET_OK = 0,
  PNET_ERR_INTERNAL = 1, /* bug or resource failure inside the library */
  PNET_ERR_INVALID = 2   /* rejected input: bad file, bad argument, bad state */
} pnet_status;

typedef struct pnet_network pnet_network;
typedef struct pnet_dataset pnet_dataset;

const char* pnet_version(void);

/* Message from the most recent failing call on this thread; empty string if
 * no call has failed yet. The pointer stays valid until the next failing
 * call on the same thread. */
const char* pnet_last_error(void);

/* Networks are stored as JSON documents; see README.md for the format. */
pnet_status pnet_network_load(const char* path, pnet_network** out);
pnet_status pnet_network_parse(const char* json_text, pnet_network** out);
pnet_status pnet_network_save(const pnet_network* net, const char* path);
/* Canonical JSON text; release with pnet_string_free. */
pnet_status pnet_network_to_json(const pnet_network* net, char** out);
void pnet_network_free(pnet_network* net);

int pnet_network_variable_count(const pnet_network* net);

/* Chain-rule joint possibility of one full assignment. `labels` holds one
 * state label per variable, in network declaration order. */
pnet_status pnet_network_joint(const pnet_network* net, const char* const* labels, size_t label_count,
                               double* out);

/* Forward-sample `record_count` records. theta_imp in [0,1] controls how
 * much of each sampled cut is kept (0 keeps only the most possible state);
 * precise_mode nonzero draws one state uniformly from the cut instead and
 * ignores theta_imp. Output is reproducible from the seed alone. */
pnet_status pnet_sample(const pnet_network* net, uint64_t record_count, double theta_imp, int precise_mode,
                        uint64_t seed, pnet_dataset** out);

/* Datasets are CSV files; cells hold one state label or several joined by
 * "|". The schema (variable order and domains) comes from `schema`. Loading
 * also reads the optional sidecar manifest <path>.manifest.json; saving
 * writes both files. */
pnet_status pnet_dataset_load(const char* path, const pnet_network* schema, pnet_dataset** out);
pnet_status pnet_dataset_save(const pnet_dataset* data, const char* path);
uint64_t pnet_dataset_record_count(const pnet_dataset* data);
void pnet_dataset_free(pnet_dataset* data);

/* Fit the tables of `structure` to `data`.
 *   estimator:   "pml" (maximum possibilistic likelihood), "histogram",
 *                or "rset" (random-set fit reported as counter functions).
 *   budget_spec: "default" (1 per variable), "mean-card" (mean observed
 *                cell cardinality per variable), or a path to a JSON object
 *                mapping variable names to positive budgets. Only "pml"
 *                uses the budget; the normalized result is budget-invariant.
 *   semantics:   "product", "min", or NULL for the default ("product").
 * The learned network keeps the structure's variables and edges. */
pnet_status pnet_learn(const pnet_network* structure, const pnet_dataset* data, const char* estimator,
                       const char* budget_spec, const char* semantics, pnet_network** out);

/* Random-set fit with the focal-set tables kept: writes one JSON document
 * mapping each variable to its per-parent-configuration mass functions. */
pnet_status pnet_learn_mass_tables(const pnet_network* structure, const pnet_dataset* data,
                                   const char* budget_spec, const char* path);

/* Possibilistic log-likelihood of `data` under `net`; -infinity is a legal
 * result (some observed cell has possibility zero). */
pnet_status pnet_score(const pnet_network* net, const pnet_dataset* data, double* out);

/* Full pipeline: sample from `gold`, learn on the training split with the
 * gold structure, compare learned and gold tables, score the holdout split.
 * Writes <report_base>.json and <report_base>.txt. omega_cap 0 means the
 * default joint-enumeration cap (see PNET_OMEGA_CAP). */
pnet_status pnet_evaluate(const pnet_network* gold, uint64_t record_count, double theta_imp,
                          int precise_mode, uint64_t seed, const char* estimator, const char* budget_spec,
                          double holdout_fraction, uint64_t omega_cap, const char* report_base);

void pnet_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* PNET_H */
