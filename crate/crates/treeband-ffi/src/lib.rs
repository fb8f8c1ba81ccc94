//! C ABI over the treeband library.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every fallible call returns a
//! [`TbStatus`]; on failure [`tb_last_error`] describes what went wrong on
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use treeband::coloring::{pcentered_from_layout, verify_pcentered_with_budget, Colouring};
use treeband::decomp::exact_treewidth;
use treeband::layout::{bandwidth_of_layout, TreeLayout};
use treeband::obstructions::{dipole_number, fan_number};
use treeband::solver::{
    approximate_treebandwidth, decide_treebandwidth_with_budget, exact_treebandwidth_with_budget,
    Approximation, Decision,
};
use treeband::{Error, Graph};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TbStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    InvalidGraph = 3,
    InvalidParameter = 4,
    Structure = 5,
    SizeLimit = 6,
    Budget = 7,
    Precondition = 8,
    Utf8 = 9,
    Panic = 10,
}

/// Opaque graph handle.
pub struct TbGraph(Graph);

/// Opaque tree-layout handle.
pub struct TbLayout(TreeLayout);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> TbStatus {
    match e {
        Error::Parse { .. } => TbStatus::Parse,
        Error::VertexOutOfRange(_)
        | Error::Loop(_)
        | Error::DuplicateEdge(..)
        | Error::MissingEdge(..) => TbStatus::InvalidGraph,
        Error::InvalidParameter(_) => TbStatus::InvalidParameter,
        Error::Structure(_) => TbStatus::Structure,
        Error::SizeLimit { .. } => TbStatus::SizeLimit,
        Error::Budget(_) => TbStatus::Budget,
        Error::Precondition(_) => TbStatus::Precondition,
    }
}

/// Runs `f`, turning library errors and panics into status codes.
fn guard<F>(f: F) -> TbStatus
where
    F: FnOnce() -> Result<(), TbStatus>,
{
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TbStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic".into());
            TbStatus::Panic
        }
    }
}

fn lib<T>(r: treeband::Result<T>) -> Result<T, TbStatus> {
    r.map_err(|e| {
        set_error(e.to_string());
        status_of(&e)
    })
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, TbStatus> {
    if p.is_null() {
        set_error("null pointer argument".into());
        return Err(TbStatus::NullPointer);
    }
    Ok(&*p)
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, TbStatus> {
    if p.is_null() {
        set_error("null output pointer".into());
        return Err(TbStatus::NullPointer);
    }
    Ok(&mut *p)
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], TbStatus> {
    if len == 0 {
        return Ok(&[]);
    }
    deref(p)?;
    Ok(std::slice::from_raw_parts(p, len))
}

fn into_layout(t: TreeLayout) -> *mut TbLayout {
    Box::into_raw(Box::new(TbLayout(t)))
}

/// Message for the last failed call on this thread, or null. Valid until the
/// next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn tb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tb_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Graph on `n` vertices from `m` edges stored as `2m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` readable values (or be null with `m == 0`)
/// and `out_graph` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tb_graph_new(
    n: usize,
    edges: *const usize,
    m: usize,
    out_graph: *mut *mut TbGraph,
) -> TbStatus {
    guard(|| {
        let out_graph = out(out_graph)?;
        let flat = slice(edges, m.checked_mul(2).ok_or(TbStatus::InvalidParameter)?)?;
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
        let g = lib(Graph::from_edges(n, &pairs))?;
        *out_graph = Box::into_raw(Box::new(TbGraph(g)));
        Ok(())
    })
}

/// Graph from the text format: `n m` then one `u v` line per edge.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out_graph` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_graph_parse(text: *const c_char, out_graph: *mut *mut TbGraph) -> TbStatus {
    guard(|| {
        let out_graph = out(out_graph)?;
        deref(text)?;
        let s = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("graph text is not UTF-8".into());
            TbStatus::Utf8
        })?;
        let g = lib(Graph::parse(s))?;
        *out_graph = Box::into_raw(Box::new(TbGraph(g)));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tb_graph_free(g: *mut TbGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn tb_graph_vertex_count(g: *const TbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live graph handle.
#[no_mangle]
pub unsafe extern "C" fn tb_graph_edge_count(g: *const TbGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.m())
}

/// # Safety
/// `t` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn tb_layout_free(t: *mut TbLayout) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Layout from parent pointers, `-1` marking the root.
///
/// # Safety
/// `parents` must point to `n` readable values and `out_layout` be writable.
#[no_mangle]
pub unsafe extern "C" fn tb_layout_new(
    parents: *const i64,
    n: usize,
    out_layout: *mut *mut TbLayout,
) -> TbStatus {
    guard(|| {
        let out_layout = out(out_layout)?;
        let raw = slice(parents, n)?;
        let mut parent = Vec::with_capacity(n);
        for &p in raw {
            parent.push(match p {
                -1 => None,
                p if p >= 0 => Some(p as usize),
                _ => {
                    set_error(format!("bad parent {p}"));
                    return Err(TbStatus::InvalidParameter);
                }
            });
        }
        *out_layout = into_layout(lib(TreeLayout::from_parents(parent))?);
        Ok(())
    })
}

/// Writes parent pointers into `buf`, `-1` for the root. `len` must be the
/// layout's vertex count.
///
/// # Safety
/// `t` must be a live layout handle and `buf` writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn tb_layout_parents(t: *const TbLayout, buf: *mut i64, len: usize) -> TbStatus {
    guard(|| {
        let t = deref(t)?;
        if len != t.0.n() {
            set_error(format!("buffer holds {len} entries, layout has {}", t.0.n()));
            return Err(TbStatus::InvalidParameter);
        }
        if len == 0 {
            return Ok(());
        }
        out(buf)?;
        let dst = std::slice::from_raw_parts_mut(buf, len);
        for (d, p) in dst.iter_mut().zip(t.0.parents()) {
            *d = p.map_or(-1, |p| p as i64);
        }
        Ok(())
    })
}

/// Bandwidth of `t` with respect to `g`, after validating it.
///
/// # Safety
/// Handles must be live and `out_bandwidth` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_layout_bandwidth(
    g: *const TbGraph,
    t: *const TbLayout,
    out_bandwidth: *mut usize,
) -> TbStatus {
    guard(|| {
        let (g, t, o) = (deref(g)?, deref(t)?, out(out_bandwidth)?);
        *o = lib(bandwidth_of_layout(&g.0, &t.0))?;
        Ok(())
    })
}

/// Exact treebandwidth and an optimal layout. `max_states` of 0 selects the
/// default budget.
///
/// # Safety
/// `g` must be live; both outputs writable.
#[no_mangle]
pub unsafe extern "C" fn tb_exact_treebandwidth(
    g: *const TbGraph,
    max_states: u64,
    out_value: *mut usize,
    out_layout: *mut *mut TbLayout,
) -> TbStatus {
    guard(|| {
        let g = deref(g)?;
        let (ov, ol) = (out(out_value)?, out(out_layout)?);
        let budget = if max_states == 0 { treeband::solver::DEFAULT_MAX_STATES } else { max_states };
        let (k, t) = lib(exact_treebandwidth_with_budget(&g.0, budget))?;
        *ov = k;
        *ol = into_layout(t);
        Ok(())
    })
}

/// Decides `tbw(G) <= k`. On yes, `*out_layout` receives a witness; on no
/// it is set to null.
///
/// # Safety
/// `g` must be live; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn tb_decide_treebandwidth(
    g: *const TbGraph,
    k: usize,
    max_states: u64,
    out_yes: *mut bool,
    out_layout: *mut *mut TbLayout,
) -> TbStatus {
    guard(|| {
        let g = deref(g)?;
        let (oy, ol) = (out(out_yes)?, out(out_layout)?);
        let budget = if max_states == 0 { treeband::solver::DEFAULT_MAX_STATES } else { max_states };
        match lib(decide_treebandwidth_with_budget(&g.0, k, budget))? {
            Decision::Yes(t) => {
                *oy = true;
                *ol = into_layout(t);
            }
            Decision::No => {
                *oy = false;
                *ol = ptr::null_mut();
            }
        }
        Ok(())
    })
}

/// Approximation pipeline. On acceptance `*out_layout` is set; on a
/// certified rejection it is null and `*out_accepted` false.
///
/// # Safety
/// `g` must be live; outputs writable.
#[no_mangle]
pub unsafe extern "C" fn tb_approximate_treebandwidth(
    g: *const TbGraph,
    k: usize,
    out_accepted: *mut bool,
    out_layout: *mut *mut TbLayout,
) -> TbStatus {
    guard(|| {
        let g = deref(g)?;
        let (oa, ol) = (out(out_accepted)?, out(out_layout)?);
        match lib(approximate_treebandwidth(&g.0, k))? {
            Approximation::Layout(l) => {
                *oa = true;
                *ol = into_layout(l.layout);
            }
            Approximation::Reject(r) => {
                set_error(format!("rejected: {r:?}"));
                *oa = false;
                *ol = ptr::null_mut();
            }
        }
        Ok(())
    })
}

/// Exact treewidth (small graphs).
///
/// # Safety
/// `g` must be live; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_treewidth(g: *const TbGraph, out_value: *mut usize) -> TbStatus {
    guard(|| {
        let (g, o) = (deref(g)?, out(out_value)?);
        *o = lib(exact_treewidth(&g.0))?;
        Ok(())
    })
}

/// Largest `k` with the fan `F_k` as a minor rooted at some vertex.
///
/// # Safety
/// `g` must be live; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_fan_number(g: *const TbGraph, out_value: *mut usize) -> TbStatus {
    guard(|| {
        let (g, o) = (deref(g)?, out(out_value)?);
        *o = lib(fan_number(&g.0))?;
        Ok(())
    })
}

/// Largest number of internally disjoint paths between two vertices.
///
/// # Safety
/// `g` must be live; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_dipole_number(g: *const TbGraph, out_value: *mut usize) -> TbStatus {
    guard(|| {
        let (g, o) = (deref(g)?, out(out_value)?);
        *o = lib(dipole_number(&g.0))?;
        Ok(())
    })
}

/// p-centered colouring from a layout: writes `n` colours into `colours`
/// and the palette size into `out_palette`.
///
/// # Safety
/// Handles live; `colours` writable for `len` values; `out_palette` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_pcentered_colouring(
    g: *const TbGraph,
    t: *const TbLayout,
    p: usize,
    colours: *mut usize,
    len: usize,
    out_palette: *mut usize,
) -> TbStatus {
    guard(|| {
        let (g, t, op) = (deref(g)?, deref(t)?, out(out_palette)?);
        if len != g.0.n() {
            set_error(format!("buffer holds {len} entries, graph has {}", g.0.n()));
            return Err(TbStatus::InvalidParameter);
        }
        let c = lib(pcentered_from_layout(&g.0, &t.0, p))?;
        if len > 0 {
            out(colours)?;
            std::slice::from_raw_parts_mut(colours, len).copy_from_slice(&c.colour);
        }
        *op = c.palette_size;
        Ok(())
    })
}

/// Exhaustively checks that `colours` is p-centered. `max_sets` of 0
/// selects the default budget.
///
/// # Safety
/// `g` live; `colours` readable for `len` values; `out_ok` writable.
#[no_mangle]
pub unsafe extern "C" fn tb_verify_pcentered(
    g: *const TbGraph,
    colours: *const usize,
    len: usize,
    p: usize,
    max_sets: u64,
    out_ok: *mut bool,
) -> TbStatus {
    guard(|| {
        let (g, o) = (deref(g)?, out(out_ok)?);
        let c = Colouring::new(slice(colours, len)?.to_vec());
        let budget = if max_sets == 0 { treeband::coloring::DEFAULT_SUBSET_BUDGET } else { max_sets };
        *o = lib(verify_pcentered_with_budget(&g.0, &c, p, budget))?.is_none();
        Ok(())
    })
}
