//! Minimal C ABI over the Clarabel interior-point solver.
//!
//! Exposes quadratic objectives and the cone families used by the C++ side
//! (zero, nonnegative, second-order, 3D power).

use clarabel::algebra::CscMatrix;
use clarabel::solver::{
    DefaultSettings, DefaultSolver, IPSolver, SolverStatus, SupportedConeT,
};
use std::slice;

pub const CONE_ZERO: i32 = 0;
pub const CONE_NONNEG: i32 = 1;
pub const CONE_SOC: i32 = 2;
pub const CONE_POW3: i32 = 3;

#[repr(C)]
pub struct ClarabelCSettings {
    pub max_iter: u32,
    pub time_limit: f64,
    pub tol_gap_abs: f64,
    pub tol_gap_rel: f64,
    pub tol_feas: f64,
    pub verbose: i32,
}

#[repr(C)]
pub struct ClarabelCInfo {
    pub status: i32,
    pub iterations: u32,
    pub solve_time: f64,
    pub obj_val: f64,
    pub obj_val_dual: f64,
    pub r_prim: f64,
    pub r_dual: f64,
}

pub const STATUS_SOLVED: i32 = 0;
pub const STATUS_ALMOST_SOLVED: i32 = 1;
pub const STATUS_PRIMAL_INFEASIBLE: i32 = 2;
pub const STATUS_DUAL_INFEASIBLE: i32 = 3;
pub const STATUS_MAX_ITER: i32 = 4;
pub const STATUS_MAX_TIME: i32 = 5;
pub const STATUS_NUMERICAL: i32 = 6;
pub const STATUS_INSUFFICIENT_PROGRESS: i32 = 7;
pub const STATUS_BAD_INPUT: i32 = 8;

fn map_status(s: SolverStatus) -> i32 {
    match s {
        SolverStatus::Solved => STATUS_SOLVED,
        SolverStatus::AlmostSolved => STATUS_ALMOST_SOLVED,
        SolverStatus::PrimalInfeasible | SolverStatus::AlmostPrimalInfeasible => {
            STATUS_PRIMAL_INFEASIBLE
        }
        SolverStatus::DualInfeasible | SolverStatus::AlmostDualInfeasible => {
            STATUS_DUAL_INFEASIBLE
        }
        SolverStatus::MaxIterations => STATUS_MAX_ITER,
        SolverStatus::MaxTime => STATUS_MAX_TIME,
        SolverStatus::InsufficientProgress => STATUS_INSUFFICIENT_PROGRESS,
        _ => STATUS_NUMERICAL,
    }
}

/// Solves  min (1/2)x'Px + q'x  s.t.  Ax + s = b, s in K.
///
/// `P` is n-by-n upper triangular in compressed sparse column form (may be
/// empty, nnz = p_col_ptr[n] = 0). `A` is m-by-n in compressed sparse column form (0-based, sorted row
/// indices). Cones are given as parallel arrays of type tag, dimension and
/// parameter (the power-cone exponent; ignored for other cones).
/// Output buffers must hold n (x) and m (z, s) doubles.
///
/// # Safety
/// All pointers must be valid for the stated lengths.
#[no_mangle]
pub unsafe extern "C" fn clarabel_capi_solve(
    n: usize,
    m: usize,
    p_col_ptr: *const usize,
    p_row_idx: *const usize,
    p_values: *const f64,
    q: *const f64,
    col_ptr: *const usize,
    row_idx: *const usize,
    values: *const f64,
    b: *const f64,
    n_cones: usize,
    cone_types: *const i32,
    cone_dims: *const usize,
    cone_params: *const f64,
    settings: *const ClarabelCSettings,
    x_out: *mut f64,
    z_out: *mut f64,
    s_out: *mut f64,
    info: *mut ClarabelCInfo,
) -> i32 {
    let info = &mut *info;
    let nnz = *col_ptr.add(n);
    let a = CscMatrix::new(
        m,
        n,
        slice::from_raw_parts(col_ptr, n + 1).to_vec(),
        slice::from_raw_parts(row_idx, nnz).to_vec(),
        slice::from_raw_parts(values, nnz).to_vec(),
    );
    let p_nnz = *p_col_ptr.add(n);
    let p = CscMatrix::new(
        n,
        n,
        slice::from_raw_parts(p_col_ptr, n + 1).to_vec(),
        slice::from_raw_parts(p_row_idx, p_nnz).to_vec(),
        slice::from_raw_parts(p_values, p_nnz).to_vec(),
    );
    let q = slice::from_raw_parts(q, n);
    let b = slice::from_raw_parts(b, m);

    let types = slice::from_raw_parts(cone_types, n_cones);
    let dims = slice::from_raw_parts(cone_dims, n_cones);
    let params = slice::from_raw_parts(cone_params, n_cones);
    let mut cones = Vec::with_capacity(n_cones);
    for i in 0..n_cones {
        cones.push(match types[i] {
            CONE_ZERO => SupportedConeT::ZeroConeT(dims[i]),
            CONE_NONNEG => SupportedConeT::NonnegativeConeT(dims[i]),
            CONE_SOC => SupportedConeT::SecondOrderConeT(dims[i]),
            CONE_POW3 => SupportedConeT::PowerConeT(params[i]),
            _ => {
                info.status = STATUS_BAD_INPUT;
                return STATUS_BAD_INPUT;
            }
        });
    }

    let st = &*settings;
    let mut cs = DefaultSettings::<f64>::default();
    cs.max_iter = st.max_iter;
    cs.time_limit = st.time_limit;
    cs.tol_gap_abs = st.tol_gap_abs;
    cs.tol_gap_rel = st.tol_gap_rel;
    cs.tol_feas = st.tol_feas;
    cs.verbose = st.verbose != 0;
    cs.max_threads = 1;

    let mut solver = match DefaultSolver::new(&p, q, &a, b, &cones, cs) {
        Ok(s) => s,
        Err(_) => {
            info.status = STATUS_BAD_INPUT;
            return STATUS_BAD_INPUT;
        }
    };
    solver.solve();

    let sol = &solver.solution;
    slice::from_raw_parts_mut(x_out, n).copy_from_slice(&sol.x);
    slice::from_raw_parts_mut(z_out, m).copy_from_slice(&sol.z);
    slice::from_raw_parts_mut(s_out, m).copy_from_slice(&sol.s);
    info.status = map_status(sol.status);
    info.iterations = sol.iterations;
    info.solve_time = sol.solve_time;
    info.obj_val = sol.obj_val;
    info.obj_val_dual = sol.obj_val_dual;
    info.r_prim = sol.r_prim;
    info.r_dual = sol.r_dual;
    info.status
}
