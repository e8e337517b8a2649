/* Structured radial basis function network over multi-hypothesis predictors.
 *
 * C interface to the srbfn shared library. Every entry point returns a
 * status code; no exception ever crosses this boundary. On any non-zero
 * status, srbfn_last_error() returns a thread-local human-readable message
 * describing what went wrong.
 *
 * Ownership rules:
 *   - Handles (srbfn_dataset, srbfn_model) are created by the library and
 *     released with their matching *_free function. Freeing NULL is a no-op.
 *   - Strings returned through char** out-parameters are heap-allocated and
 *     must be released with srbfn_string_free().
 *   - Input pointers are borrowed for the duration of the call only.
 *
 * Configuration strings are JSON objects with these keys (all optional,
 * defaults in parentheses): "M" (5), "epsilon" (0.1), "eta" (0.03),
 * "lambda_p" (0.0001), "chi" (0.01), "kappa" (20), "epochs" (50),
 * "seed" (0).
 */
#ifndef SRBFN_H
#define SRBFN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values match the library's internal error taxonomy and are
 * stable across releases. */
typedef enum srbfn_status {
  SRBFN_OK = 0,
  SRBFN_ERR_FILE_NOT_FOUND = 1,
  SRBFN_ERR_MALFORMED_CSV = 2,
  SRBFN_ERR_EMPTY_AFTER_CLEANING = 3,
  SRBFN_ERR_SHAPE_MISMATCH = 4,
  SRBFN_ERR_INSUFFICIENT_ROWS = 5,
  SRBFN_ERR_INVALID_FOLD_COUNT = 6,
  SRBFN_ERR_DEGENERATE_CONFIG = 7,
  SRBFN_ERR_INVALID_CONFIG = 8,
  SRBFN_ERR_NOT_POSITIVE_DEFINITE = 9,
  SRBFN_ERR_NUMERICAL_DIVERGENCE = 10,
  SRBFN_ERR_INSUFFICIENT_OBSERVATIONS = 11,
  SRBFN_ERR_EMPTY_RESULTS = 12,
  SRBFN_ERR_SCHEMA_MISMATCH = 13,
  SRBFN_ERR_IO = 14,
  SRBFN_ERR_INTERNAL = 15,
  SRBFN_ERR_NULL_ARGUMENT = 16
} srbfn_status;

/* Library version, e.g. "1.0.0". Static storage; do not free. */
const char* srbfn_version(void);

/* Message for the most recent failure on this thread. Static thread-local
 * storage; valid until the next failing call on the same thread. Never NULL;
 * empty string when no failure has occurred. */
const char* srbfn_last_error(void);

/* Releases a string returned through a char** out-parameter. */
void srbfn_string_free(char* s);

/* ---- Datasets ----------------------------------------------------------- */

typedef struct srbfn_dataset srbfn_dataset;

/* Hourly air-quality sensor export: semicolon-delimited, decimal commas,
 * -200 missing sentinel. Target column: AH (absolute humidity). Rows with a
 * missing target are dropped; missing feature cells are imputed with column
 * means. */
srbfn_status srbfn_dataset_load_air(const char* path, srbfn_dataset** out);

/* Appliance-energy export: comma CSV, leading timestamp column (dropped).
 * Target column: Appliances. */
srbfn_status srbfn_dataset_load_energy(const char* path, srbfn_dataset** out);

/* Generic numeric CSV with a header row; `target` names the label column. */
srbfn_status srbfn_dataset_load_csv(const char* path, const char* target,
                                    srbfn_dataset** out);

/* Builds a dataset from dense row-major features (rows x cols) and targets
 * (rows). Data is copied. */
srbfn_status srbfn_dataset_from_arrays(const double* features, size_t rows,
                                       size_t cols, const double* targets,
                                       srbfn_dataset** out);

srbfn_status srbfn_dataset_rows(const srbfn_dataset* ds, size_t* out);
srbfn_status srbfn_dataset_cols(const srbfn_dataset* ds, size_t* out);

/* JSON description: rows, cols, feature names, target name, and the
 * cleaning record (raw_rows, dropped_rows, imputed_cells). */
srbfn_status srbfn_dataset_info_json(const srbfn_dataset* ds, char** out);

void srbfn_dataset_free(srbfn_dataset* ds);

/* ---- Models ------------------------------------------------------------- */

typedef struct srbfn_model srbfn_model;

/* Trains the full pipeline on every row of the dataset: standardizes the
 * features, trains M hypotheses with winner-relaxed SGD, maps their
 * predictions through per-column Gaussian bumps, and fits the combination
 * weights in closed form with ridge strength lambda_s. */
srbfn_status srbfn_train(const srbfn_dataset* ds, const char* config_json,
                         double lambda_s, srbfn_model** out);

/* Predicts on raw (unstandardized) features, rows x cols row-major, where
 * cols must equal the training dataset's feature count. Writes `rows`
 * values to out_predictions. */
srbfn_status srbfn_predict(const srbfn_model* model, const double* features,
                           size_t rows, size_t cols, double* out_predictions);

/* Number of feature columns the model expects. */
srbfn_status srbfn_model_input_cols(const srbfn_model* model, size_t* out);

srbfn_status srbfn_model_save(const srbfn_model* model, const char* path);
srbfn_status srbfn_model_load(const char* path, srbfn_model** out);

/* JSON summary: hypothesis count, epsilon, kappa, lambda_s, input
 * dimension, basis centers/widths, combination weights. */
srbfn_status srbfn_model_info_json(const srbfn_model* model, char** out);

void srbfn_model_free(srbfn_model* model);

/* ---- Evaluation --------------------------------------------------------- */

/* k-fold cross-validation repeated n_sims times with derived per-cell
 * seeds. Returns a JSON object with one record per model ("srbfn",
 * "arithmetic", "linear"): per-cell RMSE list, mean, std, failure count.
 * Deterministic for a fixed master_seed. */
srbfn_status srbfn_cross_validate(const srbfn_dataset* ds, const char* config_json,
                                  double lambda_s, size_t k, size_t n_sims,
                                  uint64_t master_seed, char** out_json);

/* Per-fold train/test RMSE for one configuration, as JSON. Unlike
 * srbfn_cross_validate this runs a single pass (n_sims = 1) and reports the
 * structured model only, with its training-set error per fold. Timing is
 * deliberately excluded so the output is byte-stable for a fixed seed. */
srbfn_status srbfn_fold_metrics(const srbfn_dataset* ds, const char* config_json,
                                double lambda_s, size_t k, uint64_t master_seed,
                                char** out_json);

/* ---- Sweeps and reports -------------------------------------------------- */

/* Runs a hyper-parameter sweep, streaming line-delimited JSON results to
 * results_path. options_json keys:
 *   "mode": "curated" (default) | "file" | "grid"
 *       curated: the built-in 80-entry configuration list
 *       file:    entries loaded from "configs_path"
 *       grid:    full Cartesian product of the axis lists below
 *   "configs_path": path to a configuration list (mode "file")
 *   "grid": {"M": [...], "kappa": [...], "eta": [...], "chi": [...],
 *            "epsilon": [...], "lambda_p": [...], "lambda_s": [...]}
 *           any axis omitted keeps its experiment default (mode "grid")
 *   "epochs": override training epochs for every entry (0 = keep)
 *   "k" (10), "n_sims" (10), "master_seed" (0), "workers" (1),
 *   "subsample" (0 = all rows), "dataset_tag" (""), "resume" (true)
 * An existing results file from the same settings is resumed after its last
 * complete configuration; a file from different settings is refused. */
srbfn_status srbfn_sweep_run(const srbfn_dataset* ds, const char* options_json,
                             const char* results_path);

/* Writes the built-in curated configuration list as JSON to path. */
srbfn_status srbfn_default_configs_save(const char* path);

/* Summarizes a results file into CSV tables under out_dir (summary.csv,
 * diversity.csv, regularization.csv, epsilon_comparison.csv), creating the
 * directory if needed, and returns the same numbers as a JSON digest.
 * plot_only != 0 restricts output to diversity.csv and regularization.csv. */
srbfn_status srbfn_report(const char* results_path, const char* out_dir,
                          int plot_only, char** out_digest_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SRBFN_H */
