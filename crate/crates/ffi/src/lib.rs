//! C ABI for `internorm`.
//!
//! Graphs and polytopes cross the boundary as opaque handles that the caller
//! releases with the matching `*_free` function. Every fallible call returns
//! an [`InternormStatus`]; on failure, [`internorm_last_error`] describes the
//! most recent error on the calling thread. Strings returned by the library
//! are released with [`internorm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use internorm::homology::build_model;
use internorm::thurston::certify_with;
use internorm::{
    norm_oracle, parse_collection, Error, IntersectionNorm, LatticePolytope, RibbonGraph,
};

/// Status codes. Library errors use the same numbers as the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InternormStatus {
    Ok = 0,
    Parse = 2,
    Validation = 3,
    Degenerate = 4,
    Resource = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    IndexOutOfRange = 8,
    Panic = 9,
}

/// Parsed ribbon graph.
pub struct InternormGraph(RibbonGraph);

/// Lattice polytope with integer vertices.
pub struct InternormPolytope(LatticePolytope);

/// Basic counts of a graph.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InternormCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: usize,
    pub components: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> InternormStatus {
    match err.exit_code() {
        2 => InternormStatus::Parse,
        3 => InternormStatus::Validation,
        4 => InternormStatus::Degenerate,
        _ => InternormStatus::Resource,
    }
}

/// Runs `f`, recording errors and converting panics.
fn guard(f: impl FnOnce() -> Result<(), InternormStatus>) -> InternormStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            InternormStatus::Ok
        }
        Ok(Err(status)) => status,
        Err(_) => {
            set_error("internal panic");
            InternormStatus::Panic
        }
    }
}

fn fail(err: Error) -> InternormStatus {
    set_error(&err.to_string());
    status_of(&err)
}

fn null(what: &str) -> InternormStatus {
    set_error(&format!("{what} is null"));
    InternormStatus::NullPointer
}

unsafe fn graph_ref<'a>(graph: *const InternormGraph) -> Result<&'a RibbonGraph, InternormStatus> {
    graph.as_ref().map(|g| &g.0).ok_or_else(|| null("graph"))
}

unsafe fn class_slice<'a>(class: *const i64, len: usize) -> Result<&'a [i64], InternormStatus> {
    if len == 0 {
        Ok(&[])
    } else if class.is_null() {
        Err(null("class"))
    } else {
        Ok(std::slice::from_raw_parts(class, len))
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn internorm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses a ribbon-graph file held in a NUL-terminated UTF-8 string.
///
/// # Safety
/// `text` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn internorm_graph_parse(
    text: *const c_char,
    out: *mut *mut InternormGraph,
) -> InternormStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| {
            set_error("text is not valid UTF-8");
            InternormStatus::InvalidUtf8
        })?;
        let graph = parse_collection(text).map_err(fail)?;
        *out = Box::into_raw(Box::new(InternormGraph(graph)));
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `graph` must come from [`internorm_graph_parse`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn internorm_graph_free(graph: *mut InternormGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn internorm_graph_counts(
    graph: *const InternormGraph,
    out: *mut InternormCounts,
) -> InternormStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = InternormCounts {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            faces: g.face_count(),
            genus: g.genus(),
            components: g.components().len(),
        };
        Ok(())
    })
}

/// Intersection norm of the class `class[0..len]`, which must have length 2·genus.
///
/// # Safety
/// `graph` and `out` must be valid; `class` must hold `len` integers.
#[no_mangle]
pub unsafe extern "C" fn internorm_norm(
    graph: *const InternormGraph,
    class: *const i64,
    len: usize,
    max_edges: usize,
    out: *mut u64,
) -> InternormStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let a = class_slice(class, len)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if g.genus() == 0 {
            return Err(fail(Error::TrivialNorm));
        }
        let model = build_model(g);
        let norm = IntersectionNorm::compute(&model, max_edges).map_err(fail)?;
        *out = norm.norm(a).map_err(fail)?;
        Ok(())
    })
}

/// Same value as [`internorm_norm`], found by the minimum-cycle search.
///
/// # Safety
/// As for [`internorm_norm`].
#[no_mangle]
pub unsafe extern "C" fn internorm_norm_oracle(
    graph: *const InternormGraph,
    class: *const i64,
    len: usize,
    bound: u32,
    out: *mut u64,
) -> InternormStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        let a = class_slice(class, len)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if g.genus() == 0 {
            return Err(fail(Error::TrivialNorm));
        }
        *out = norm_oracle(&build_model(g), a, bound).map_err(fail)?.value;
        Ok(())
    })
}

/// Dual unit ball of the norm.
///
/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn internorm_dual_ball(
    graph: *const InternormGraph,
    max_edges: usize,
    out: *mut *mut InternormPolytope,
) -> InternormStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if g.genus() == 0 {
            return Err(fail(Error::TrivialNorm));
        }
        let norm = IntersectionNorm::compute(&build_model(g), max_edges).map_err(fail)?;
        *out = Box::into_raw(Box::new(InternormPolytope(norm.ball().clone())));
        Ok(())
    })
}

/// Releases a polytope. Null is ignored.
///
/// # Safety
/// `polytope` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn internorm_polytope_free(polytope: *mut InternormPolytope) {
    if !polytope.is_null() {
        drop(Box::from_raw(polytope));
    }
}

/// Ambient dimension; 0 for null.
///
/// # Safety
/// `polytope` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn internorm_polytope_dim(polytope: *const InternormPolytope) -> usize {
    polytope.as_ref().map_or(0, |p| p.0.dim())
}

/// Number of vertices; 0 for null.
///
/// # Safety
/// `polytope` must be null or valid.
#[no_mangle]
pub unsafe extern "C" fn internorm_polytope_vertex_count(
    polytope: *const InternormPolytope,
) -> usize {
    polytope.as_ref().map_or(0, |p| p.0.vertices().len())
}

/// Copies vertex `index` (in sorted order) into `out[0..dim]`.
///
/// # Safety
/// `polytope` must be valid and `out` must have room for `dim` integers.
#[no_mangle]
pub unsafe extern "C" fn internorm_polytope_vertex(
    polytope: *const InternormPolytope,
    index: usize,
    out: *mut i64,
) -> InternormStatus {
    guard(|| {
        let p = polytope.as_ref().ok_or_else(|| null("polytope"))?;
        let v = p.0.vertices().get(index).ok_or_else(|| {
            set_error(&format!("vertex {index} out of range"));
            InternormStatus::IndexOutOfRange
        })?;
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(v.as_ptr(), out, v.len());
        Ok(())
    })
}

/// Realizability report as text. Release the string with [`internorm_string_free`].
///
/// # Safety
/// `graph` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn internorm_certify(
    graph: *const InternormGraph,
    max_edges: usize,
    out: *mut *mut c_char,
) -> InternormStatus {
    guard(|| {
        let g = graph_ref(graph)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let report = certify_with(g, max_edges).map_err(fail)?;
        *out = CString::new(report.to_text())
            .unwrap_or_default()
            .into_raw();
        Ok(())
    })
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn internorm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
