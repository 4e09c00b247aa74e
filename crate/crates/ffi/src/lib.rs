//! C interface to `splitfactor`.
//!
//! Objects cross the boundary as opaque handles that the caller frees with the
//! matching `*_free` function. Every fallible call returns an [`SfStatus`] and
//! writes its result through an out-pointer; on failure a message is available
//! from [`sf_last_error_message`] until the next failing call on the same thread.
//! Vertex sets are `uint64_t` bit masks, bit `v` standing for vertex `v`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use splitfactor::factor::phi;
use splitfactor::io::{parse_graph6, to_graph6};
use splitfactor::split::bipartitions;
use splitfactor::switch::{decompose, graph_degree, is_active, is_indecomposable, is_prime};
use splitfactor::{Bipartition, Error, FactorGraph, Graph, SplitGraph, VertexSet};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    TooManyVertices = 3,
    NotSplit = 4,
    InvalidBipartition = 5,
    Parse = 6,
    /// Any other library error; see the message.
    Failed = 7,
    /// A Rust panic was caught at the boundary.
    Panic = 8,
}

/// A simple graph.
pub struct SfGraph(Graph);

/// A graph with a designated clique side `K` and independent side `I`.
pub struct SfSplitGraph(SplitGraph);

/// The factor multigraph of a split graph.
pub struct SfFactorGraph(FactorGraph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn record(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SfStatus {
    match e {
        Error::TooManyVertices(_) => SfStatus::TooManyVertices,
        Error::NotSplit => SfStatus::NotSplit,
        Error::InvalidBipartition(_) => SfStatus::InvalidBipartition,
        Error::Parse { .. } | Error::Graph6(_) => SfStatus::Parse,
        Error::VertexOutOfRange { .. } | Error::Loop(_) | Error::DuplicateEdge(..) | Error::SameVertex(_) => {
            SfStatus::InvalidArgument
        }
        _ => SfStatus::Failed,
    }
}

/// Runs `f`, mapping library errors and panics to a status.
fn guard(f: impl FnOnce() -> Result<(), SfStatus>) -> SfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SfStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            record("internal panic".into());
            SfStatus::Panic
        }
    }
}

fn lib<T>(r: splitfactor::Result<T>) -> Result<T, SfStatus> {
    r.map_err(|e| {
        record(e.to_string());
        status_of(&e)
    })
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, SfStatus> {
    if p.is_null() {
        record("null handle".into());
        Err(SfStatus::NullPointer)
    } else {
        Ok(&*p)
    }
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), SfStatus> {
    if out.is_null() {
        record("null out-pointer".into());
        return Err(SfStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

/// Message for the most recent failure on this thread, or NULL.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn sf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Edgeless graph on `n` vertices.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_new(n: usize, out: *mut *mut SfGraph) -> SfStatus {
    guard(|| {
        let g = lib(Graph::new(n))?;
        put(out, boxed(SfGraph(g)))
    })
}

/// Decodes a NUL-terminated graph6 string.
///
/// # Safety
/// `code` must be NUL-terminated; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_from_graph6(code: *const c_char, out: *mut *mut SfGraph) -> SfStatus {
    guard(|| {
        let code = get(code)?;
        let text = CStr::from_ptr(code).to_str().map_err(|_| {
            record("graph6 input is not UTF-8".into());
            SfStatus::Parse
        })?;
        let g = lib(parse_graph6(text.trim()))?;
        put(out, boxed(SfGraph(g)))
    })
}

/// # Safety
/// `g` must be a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_add_edge(g: *mut SfGraph, u: usize, v: usize) -> SfStatus {
    guard(|| {
        if g.is_null() {
            return Err(SfStatus::NullPointer);
        }
        lib((*g).0.add_edge(u, v))
    })
}

/// Number of vertices, or 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_order(g: *const SfGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_has_edge(g: *const SfGraph, u: usize, v: usize, out: *mut bool) -> SfStatus {
    guard(|| {
        let g = &get(g)?.0;
        if u >= g.n() || v >= g.n() {
            record(format!("vertex out of range for a graph on {} vertices", g.n()));
            return Err(SfStatus::InvalidArgument);
        }
        put(out, u != v && g.has_edge(u, v))
    })
}

/// graph6 encoding as a new string; free it with [`sf_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_to_graph6(g: *const SfGraph, out: *mut *mut c_char) -> SfStatus {
    guard(|| {
        let code = to_graph6(&get(g)?.0);
        put(out, CString::new(code).expect("graph6 is printable ASCII").into_raw())
    })
}

/// Number of 2-switches of the graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_switch_degree(g: *const SfGraph, out: *mut usize) -> SfStatus {
    guard(|| put(out, graph_degree(&get(g)?.0)))
}

/// Property flags: bit 0 active, bit 1 indecomposable, bit 2 prime, bit 3 split.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_properties(g: *const SfGraph, out: *mut u32) -> SfStatus {
    guard(|| {
        let g = &get(g)?.0;
        let flags = is_active(g) as u32
            | (is_indecomposable(g) as u32) << 1
            | (is_prime(g) as u32) << 2
            | (splitfactor::split::is_split(g) as u32) << 3;
        put(out, flags)
    })
}

/// Number of factors in the canonical decomposition; 0 for the empty graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_factor_count(g: *const SfGraph, out: *mut usize) -> SfStatus {
    guard(|| {
        let g = &get(g)?.0;
        let count = if g.n() == 0 {
            0
        } else {
            lib(decompose(g))?.factors.len()
        };
        put(out, count)
    })
}

/// # Safety
/// `g` must be NULL or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_graph_free(g: *mut SfGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Split graph using the first bipartition in K-bitmask order.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_split_auto(g: *const SfGraph, out: *mut *mut SfSplitGraph) -> SfStatus {
    guard(|| {
        let g = &get(g)?.0;
        let b = lib(bipartitions(g))?[0];
        let s = lib(SplitGraph::new(g.clone(), b))?;
        put(out, boxed(SfSplitGraph(s)))
    })
}

/// Split graph with the given sides.
///
/// # Safety
/// `g` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_split_new(
    g: *const SfGraph,
    k_mask: u64,
    i_mask: u64,
    out: *mut *mut SfSplitGraph,
) -> SfStatus {
    guard(|| {
        let g = &get(g)?.0;
        let b = Bipartition::new(VertexSet::from_bits(k_mask), VertexSet::from_bits(i_mask));
        let s = lib(SplitGraph::new(g.clone(), b))?;
        put(out, boxed(SfSplitGraph(s)))
    })
}

/// Writes the clique and independent sides as bit masks.
///
/// # Safety
/// `s` must be a live handle; `k_mask` and `i_mask` valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn sf_split_sides(s: *const SfSplitGraph, k_mask: *mut u64, i_mask: *mut u64) -> SfStatus {
    guard(|| {
        let s = &get(s)?.0;
        put(k_mask, s.clique_side().bits())?;
        put(i_mask, s.independent_side().bits())
    })
}

/// Copy of the underlying graph as a new handle.
///
/// # Safety
/// `s` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_split_graph(s: *const SfSplitGraph, out: *mut *mut SfGraph) -> SfStatus {
    guard(|| put(out, boxed(SfGraph(get(s)?.0.graph().clone()))))
}

/// Inverse: the sides swap roles, cross edges are kept.
///
/// # Safety
/// `s` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_split_invert(s: *const SfSplitGraph, out: *mut *mut SfSplitGraph) -> SfStatus {
    guard(|| put(out, boxed(SfSplitGraph(get(s)?.0.invert()))))
}

/// Co-inverse: same sides, each independent neighbourhood complemented in `K`.
///
/// # Safety
/// `s` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_split_co_invert(s: *const SfSplitGraph, out: *mut *mut SfSplitGraph) -> SfStatus {
    guard(|| put(out, boxed(SfSplitGraph(get(s)?.0.co_invert()))))
}

/// # Safety
/// `s` must be NULL or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_split_free(s: *mut SfSplitGraph) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Factor multigraph on the independent side.
///
/// # Safety
/// `s` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_phi(s: *const SfSplitGraph, out: *mut *mut SfFactorGraph) -> SfStatus {
    guard(|| put(out, boxed(SfFactorGraph(phi(&get(s)?.0)))))
}

/// Multiplicity of the pair `{u, v}`, in original vertex numbers.
///
/// # Safety
/// `f` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_factor_sigma(f: *const SfFactorGraph, u: usize, v: usize, out: *mut u64) -> SfStatus {
    guard(|| {
        let f = &get(f)?.0;
        let on = f.vertex_set();
        if u == v || u >= 64 || v >= 64 || !on.contains(u) || !on.contains(v) {
            record(format!("{{{u}, {v}}} is not a pair of independent vertices"));
            return Err(SfStatus::InvalidArgument);
        }
        put(out, f.sigma(u, v))
    })
}

/// Total multiplicity, equal to the number of 2-switches.
///
/// # Safety
/// `f` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_factor_size(f: *const SfFactorGraph, out: *mut u64) -> SfStatus {
    guard(|| put(out, get(f)?.0.size()))
}

/// Flags: bit 0 simple, bit 1 complete, bit 2 connected.
///
/// # Safety
/// `f` must be a live handle and `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn sf_factor_properties(f: *const SfFactorGraph, out: *mut u32) -> SfStatus {
    guard(|| {
        let f = &get(f)?.0;
        put(
            out,
            f.is_simple() as u32 | (f.is_complete() as u32) << 1 | (f.is_connected() as u32) << 2,
        )
    })
}

/// # Safety
/// `f` must be NULL or a handle that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_factor_free(f: *mut SfFactorGraph) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn sf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
