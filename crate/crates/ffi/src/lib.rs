//! C interface to the pvc4 solver.
//!
//! Graphs and results are opaque handles created and freed by this library.
//! Vertex ids are 0-based. Fallible calls return a [`Pvc4Status`]; on
//! failure [`pvc4_last_error`] describes the problem for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pvc4::io::{parse, GraphFile};
use pvc4::solver::{
    iterative_compression_with, minimize_disjoint_with, minimize_with, solve_disjoint_with, verify_cover, Quiet,
    SolveOptions, SolveStats,
};
use pvc4::{Graph, GraphError, SolveError, VertexSet};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pvc4Status {
    Ok = 0,
    NullPointer = 1,
    InvalidVertex = 2,
    SelfLoop = 3,
    ParseError = 4,
    InvalidInstance = 5,
    InvalidArgument = 6,
    NodeBudgetExceeded = 7,
    Internal = 8,
}

/// A graph with an optional forbidden set `V1`.
pub struct Pvc4Graph {
    file: GraphFile,
}

/// Outcome of a solve or minimization.
pub struct Pvc4Result {
    cover: Option<Vec<usize>>,
    stats: SolveStats,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

type Failure = (Pvc4Status, String);

/// Runs `f`, recording any failure or panic as the thread's last error.
fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> Pvc4Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Pvc4Status::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            Pvc4Status::Internal
        }
    }
}

fn null() -> Failure {
    (Pvc4Status::NullPointer, "null pointer argument".into())
}

fn solve_failure(e: SolveError) -> Failure {
    let status = match e {
        SolveError::NodeBudgetExceeded { .. } => Pvc4Status::NodeBudgetExceeded,
        SolveError::NegativeBudget(_) => Pvc4Status::InvalidArgument,
        SolveError::Invariant(_) => Pvc4Status::Internal,
    };
    (status, e.to_string())
}

fn options(node_cap: u64) -> SolveOptions {
    if node_cap == 0 {
        SolveOptions::default()
    } else {
        SolveOptions { node_cap }
    }
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn pvc4_status_message(status: Pvc4Status) -> *const c_char {
    let msg: &'static CStr = match status {
        Pvc4Status::Ok => c"ok",
        Pvc4Status::NullPointer => c"null pointer argument",
        Pvc4Status::InvalidVertex => c"vertex id out of range",
        Pvc4Status::SelfLoop => c"self-loop",
        Pvc4Status::ParseError => c"malformed graph text",
        Pvc4Status::InvalidInstance => c"V1 does not form a valid disjoint instance",
        Pvc4Status::InvalidArgument => c"invalid argument",
        Pvc4Status::NodeBudgetExceeded => c"search node budget exceeded",
        Pvc4Status::Internal => c"internal error",
    };
    msg.as_ptr()
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pvc4_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// A graph on `n` isolated vertices. Free with [`pvc4_graph_free`].
#[no_mangle]
pub extern "C" fn pvc4_graph_new(n: usize) -> *mut Pvc4Graph {
    Box::into_raw(Box::new(Pvc4Graph { file: GraphFile::from_graph(Graph::new(n)) }))
}

/// # Safety
/// `graph` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pvc4_graph_free(graph: *mut Pvc4Graph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Adds the edge `u v`. Adding an existing edge is a no-op.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_graph_add_edge(graph: *mut Pvc4Graph, u: usize, v: usize) -> Pvc4Status {
    guard(|| {
        let g = graph.as_mut().ok_or_else(null)?;
        g.file.graph.add_edge(u, v).map(drop).map_err(|e| match e {
            GraphError::SelfLoop(_) => (Pvc4Status::SelfLoop, e.to_string()),
            GraphError::UnknownVertex(_) => (Pvc4Status::InvalidVertex, e.to_string()),
        })
    })
}

/// Marks `v` as forbidden, turning later solves into disjoint solves.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_graph_add_v1(graph: *mut Pvc4Graph, v: usize) -> Pvc4Status {
    guard(|| {
        let g = graph.as_mut().ok_or_else(null)?;
        if !g.file.graph.contains(v) {
            return Err((Pvc4Status::InvalidVertex, format!("unknown vertex {v}")));
        }
        g.file.v1.insert(v);
        Ok(())
    })
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_graph_num_vertices(graph: *const Pvc4Graph) -> usize {
    graph.as_ref().map_or(0, |g| g.file.graph.num_vertices())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_graph_num_edges(graph: *const Pvc4Graph) -> usize {
    graph.as_ref().map_or(0, |g| g.file.graph.num_edges())
}

/// Parses the text format (`p pvc4 n m`, `e u v`, `v1 u`, 1-based ids) into
/// a new graph stored in `*out`.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pvc4_graph_parse(text: *const c_char, out: *mut *mut Pvc4Graph) -> Pvc4Status {
    guard(|| {
        if text.is_null() || out.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (Pvc4Status::ParseError, e.to_string()))?;
        let file = parse(text).map_err(|e| (Pvc4Status::ParseError, e.to_string()))?;
        *out = Box::into_raw(Box::new(Pvc4Graph { file }));
        Ok(())
    })
}

fn store(out: *mut *mut Pvc4Result, cover: Option<VertexSet>, stats: SolveStats) {
    let cover = cover.map(|c| c.into_iter().collect());
    // SAFETY: callers check `out` for null before solving.
    unsafe { *out = Box::into_raw(Box::new(Pvc4Result { cover, stats })) };
}

/// Decides whether a cover of size at most `k` exists; if the graph has
/// forbidden vertices the cover must avoid them. `node_cap` limits search
/// nodes per disjoint solve, 0 meaning the default.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pvc4_solve(
    graph: *const Pvc4Graph,
    k: i64,
    node_cap: u64,
    out: *mut *mut Pvc4Result,
) -> Pvc4Status {
    guard(|| {
        let g = graph.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let opts = options(node_cap);
        let res = if g.file.v1.is_empty() {
            iterative_compression_with(&g.file.graph, k, opts, &mut Quiet)
        } else {
            let inst = g
                .file
                .clone()
                .into_instance(k)
                .map_err(|e| (Pvc4Status::InvalidInstance, e.to_string()))?;
            solve_disjoint_with(&inst, opts, &mut Quiet)
        }
        .map_err(solve_failure)?;
        store(out, res.cover, res.stats);
        Ok(())
    })
}

/// Finds a minimum cover (avoiding forbidden vertices, if any).
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pvc4_minimize(graph: *const Pvc4Graph, node_cap: u64, out: *mut *mut Pvc4Result) -> Pvc4Status {
    guard(|| {
        let g = graph.as_ref().ok_or_else(null)?;
        if out.is_null() {
            return Err(null());
        }
        let opts = options(node_cap);
        let best = if g.file.v1.is_empty() {
            minimize_with(&g.file.graph, opts, &mut Quiet)
        } else {
            let inst = g
                .file
                .clone()
                .into_instance(0)
                .map_err(|e| (Pvc4Status::InvalidInstance, e.to_string()))?;
            minimize_disjoint_with(&inst, opts, &mut Quiet)
        }
        .map_err(solve_failure)?;
        store(out, Some(best.cover), best.stats);
        Ok(())
    })
}

/// Sets `*is_cover` to whether deleting `cover[0..len]` leaves no 4-path
/// and the set avoids every forbidden vertex.
///
/// # Safety
/// `graph` must be a live handle, `cover` must point to `len` readable ids
/// (or be null with `len == 0`), and `is_cover` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pvc4_verify(
    graph: *const Pvc4Graph,
    cover: *const usize,
    len: usize,
    is_cover: *mut bool,
) -> Pvc4Status {
    guard(|| {
        let g = graph.as_ref().ok_or_else(null)?;
        if is_cover.is_null() || (cover.is_null() && len > 0) {
            return Err(null());
        }
        let ids: &[usize] = if len == 0 { &[] } else { std::slice::from_raw_parts(cover, len) };
        if let Some(&v) = ids.iter().find(|&&v| !g.file.graph.contains(v)) {
            return Err((Pvc4Status::InvalidVertex, format!("unknown vertex {v}")));
        }
        let set: VertexSet = ids.iter().copied().collect();
        *is_cover = set.is_disjoint(&g.file.v1) && verify_cover(&g.file.graph, &set);
        Ok(())
    })
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_result_feasible(result: *const Pvc4Result) -> bool {
    result.as_ref().is_some_and(|r| r.cover.is_some())
}

/// Number of vertices in the cover; 0 when infeasible.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_result_cover_len(result: *const Pvc4Result) -> usize {
    result.as_ref().and_then(|r| r.cover.as_ref()).map_or(0, Vec::len)
}

/// Cover vertices in ascending order, owned by the result; null when
/// infeasible or empty.
///
/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_result_cover(result: *const Pvc4Result) -> *const usize {
    match result.as_ref().and_then(|r| r.cover.as_ref()) {
        Some(c) if !c.is_empty() => c.as_ptr(),
        _ => ptr::null(),
    }
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_result_nodes(result: *const Pvc4Result) -> u64 {
    result.as_ref().map_or(0, |r| r.stats.nodes)
}

/// # Safety
/// `result` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pvc4_result_leaves(result: *const Pvc4Result) -> u64 {
    result.as_ref().map_or(0, |r| r.stats.leaves)
}

/// # Safety
/// `result` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pvc4_result_free(result: *mut Pvc4Result) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}
