#pragma once

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CLARABEL_CAPI_CONE_ZERO = 0,
    CLARABEL_CAPI_CONE_NONNEG = 1,
    CLARABEL_CAPI_CONE_SOC = 2,
    CLARABEL_CAPI_CONE_POW3 = 3,
};

enum {
    CLARABEL_CAPI_SOLVED = 0,
    CLARABEL_CAPI_ALMOST_SOLVED = 1,
    CLARABEL_CAPI_PRIMAL_INFEASIBLE = 2,
    CLARABEL_CAPI_DUAL_INFEASIBLE = 3,
    CLARABEL_CAPI_MAX_ITER = 4,
    CLARABEL_CAPI_MAX_TIME = 5,
    CLARABEL_CAPI_NUMERICAL = 6,
    CLARABEL_CAPI_INSUFFICIENT_PROGRESS = 7,
    CLARABEL_CAPI_BAD_INPUT = 8,
};

typedef struct {
    uint32_t max_iter;
    double time_limit;
    double tol_gap_abs;
    double tol_gap_rel;
    double tol_feas;
    int32_t verbose;
} ClarabelCSettings;

typedef struct {
    int32_t status;
    uint32_t iterations;
    double solve_time;
    double obj_val;
    double obj_val_dual;
    double r_prim;
    double r_dual;
} ClarabelCInfo;

/* min (1/2)x'Px + q'x  s.t.  Ax + s = b, s in K.
   P is n-by-n upper-triangular CSC (possibly empty), A is m-by-n CSC. */
int32_t clarabel_capi_solve(size_t n, size_t m, const size_t* p_col_ptr,
                            const size_t* p_row_idx, const double* p_values,
                            const double* q,
                            const size_t* col_ptr, const size_t* row_idx,
                            const double* values, const double* b,
                            size_t n_cones, const int32_t* cone_types,
                            const size_t* cone_dims, const double* cone_params,
                            const ClarabelCSettings* settings, double* x_out,
                            double* z_out, double* s_out, ClarabelCInfo* info);

#ifdef __cplusplus
}
#endif
