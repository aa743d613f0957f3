/* drinfilt C API: filtration reports and verification suites behind opaque
 * handles.  All functions return df_status; string outputs are heap
 * allocated and released with df_string_free. */
#ifndef DRINFILT_DRINFILT_H
#define DRINFILT_DRINFILT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum df_status {
  DF_OK = 0,
  DF_ERROR_INVALID_ARGUMENT = 1,
  DF_ERROR_PRECONDITION = 2,
  DF_ERROR_VERIFICATION = 3,
  DF_ERROR_INTERNAL = 4
} df_status;

typedef struct df_report df_report;

/* Build the filtration report for the homogeneous bundle of weight lambda
 * (length d+1, lambda_1 >= ... >= lambda_d).  pole_bound controls the
 * kernel-character summaries; 0 skips them.  1 <= d <= 12; kernel summaries
 * grow quickly with d and the bound. */
df_status df_report_create(int d, const long long* lambda, size_t lambda_len,
                           long long pole_bound, df_report** out);
df_status df_report_render_text(const df_report* report, char** out);
df_status df_report_render_json(const df_report* report, char** out);
void df_report_free(df_report* report);

/* Run a verification suite.  suite: weights | bott | pieri | filtration |
 * localcoh | building | all.  size: smoke | desk.  p/n = 0 keep the default
 * grids of the building suite.  out_log receives one line per check;
 * out_failures the number of failed checks.  Returns DF_ERROR_VERIFICATION
 * when checks failed but the run itself was fine. */
df_status df_verify(const char* suite, const char* size, long long p, int n,
                    char** out_log, int* out_failures);

void df_string_free(char* s);

/* Message for the most recent failure on this thread. */
const char* df_last_error(void);

const char* df_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DRINFILT_DRINFILT_H */
