//! C ABI for knotcert.
//!
//! Graphs and diagrams are opaque handles released with their `_free`
//! function. Every fallible call returns a [`KcStatus`]; on failure the
//! message is available from [`kc_last_error`] on the same thread. Strings
//! handed out by the library are NUL-terminated UTF-8 and must be released
//! with [`kc_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use knotcert::certify::{certify, find_links, Summary};
use knotcert::diagram::{check_symmetry, Diagram};
use knotcert::graph::{complete_map, construct_g7, is_isomorphic, parse_cycles, Graph};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KcStatus {
    /// The call succeeded and the checked property holds.
    Ok = 0,
    /// The call succeeded and the checked property does not hold.
    Refuted = 1,
    /// Malformed JSON, unknown labels, invalid diagram and the like.
    InvalidInput = 2,
    /// A required pointer argument was null.
    NullPointer = 3,
    /// A bug; the message says more.
    Internal = 4,
    /// Certification hit the crossing bound on some cycle.
    Inconclusive = 5,
}

pub struct KcGraph(Graph);

pub struct KcDiagram(Diagram);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior NUL"));
}

struct Fail(KcStatus, String);

impl Fail {
    fn input(e: impl ToString) -> Fail {
        Fail(KcStatus::InvalidInput, e.to_string())
    }

    fn null(what: &str) -> Fail {
        Fail(KcStatus::NullPointer, format!("{what} is null"))
    }
}

/// Runs `f`, mapping errors and panics to a status and recording the message.
fn guard(f: impl FnOnce() -> Result<KcStatus, Fail>) -> KcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            set_error("");
            s
        }
        Ok(Err(Fail(s, msg))) => {
            set_error(msg);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal error: {msg}"));
            KcStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::input(format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail::null(what))
}

fn give_string(s: String, out: *mut *mut c_char) -> Result<(), Fail> {
    if out.is_null() {
        return Ok(());
    }
    let c = CString::new(s).map_err(|e| Fail(KcStatus::Internal, e.to_string()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

fn give<T>(value: T, out: *mut *mut T) -> Result<KcStatus, Fail> {
    if out.is_null() {
        return Err(Fail::null("out"));
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    Ok(KcStatus::Ok)
}

fn holds(b: bool) -> KcStatus {
    if b {
        KcStatus::Ok
    } else {
        KcStatus::Refuted
    }
}

/// Message of the last failed call on this thread, or "" after a success.
/// Valid until the next knotcert call on the same thread.
#[no_mangle]
pub extern "C" fn kc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, static storage.
#[no_mangle]
pub extern "C" fn kc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn kc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph file (`{"vertices": [...], "edges": [[a, b], ...]}`).
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_json(json: *const c_char, out: *mut *mut KcGraph) -> KcStatus {
    guard(|| {
        let g = Graph::from_json(text(json, "json")?).map_err(Fail::input)?;
        give(KcGraph(g), out)
    })
}

/// The graph obtained from K7 by the standard move script.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_construct_g7(out: *mut *mut KcGraph) -> KcStatus {
    guard(|| give(KcGraph(construct_g7()), out))
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_to_json(g: *const KcGraph, out: *mut *mut c_char) -> KcStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        if out.is_null() {
            return Err(Fail::null("out"));
        }
        give_string(g.0.to_json(), out)?;
        Ok(KcStatus::Ok)
    })
}

/// # Safety
/// `g` must be a live handle; the count pointers may be null.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_counts(
    g: *const KcGraph,
    vertices: *mut usize,
    edges: *mut usize,
) -> KcStatus {
    guard(|| {
        let g = handle(g, "graph")?;
        if !vertices.is_null() {
            *vertices = g.0.vertex_count();
        }
        if !edges.is_null() {
            *edges = g.0.edge_count();
        }
        Ok(KcStatus::Ok)
    })
}

/// `KC_STATUS_OK` with the vertex map as a JSON object in `witness` (if not
/// null), or `KC_STATUS_REFUTED`.
///
/// # Safety
/// `a` and `b` must be live handles; `witness` may be null.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_is_isomorphic(
    a: *const KcGraph,
    b: *const KcGraph,
    witness: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let (a, b) = (handle(a, "first graph")?, handle(b, "second graph")?);
        match is_isomorphic(&a.0, &b.0) {
            Some(m) => {
                give_string(serde_json::to_string(&m).expect("map serializes"), witness)?;
                Ok(KcStatus::Ok)
            }
            None => Ok(KcStatus::Refuted),
        }
    })
}

/// # Safety
/// `g` must be a handle from this library or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_free(g: *mut KcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Parses a diagram file. Reference errors are reported here; structural
/// checks are left to [`kc_diagram_validate`].
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_diagram_from_json(json: *const c_char, out: *mut *mut KcDiagram) -> KcStatus {
    guard(|| {
        let d = Diagram::parse(text(json, "json")?).map_err(Fail::input)?;
        give(KcDiagram(d), out)
    })
}

/// `KC_STATUS_OK` if the diagram is valid, else `KC_STATUS_REFUTED` with the
/// violations as a JSON array in `violations` (if not null).
///
/// # Safety
/// `d` must be a live handle; `violations` may be null.
#[no_mangle]
pub unsafe extern "C" fn kc_diagram_validate(d: *const KcDiagram, violations: *mut *mut c_char) -> KcStatus {
    guard(|| {
        let v = handle(d, "diagram")?.0.validate();
        give_string(
            serde_json::to_string(&v).expect("violations serialize"),
            violations,
        )?;
        Ok(holds(v.is_empty()))
    })
}

/// Certifies every cycle. `KC_STATUS_OK` when knotless, `KC_STATUS_REFUTED`
/// when a knot is found, `KC_STATUS_INCONCLUSIVE` otherwise. The JSON
/// report goes to `report` if not null.
///
/// # Safety
/// `d` must be a live handle; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn kc_diagram_certify(
    d: *const KcDiagram,
    max_crossings: usize,
    report: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let rep = certify(&handle(d, "diagram")?.0, "diagram", max_crossings).map_err(Fail::input)?;
        give_string(rep.to_json(), report)?;
        Ok(match rep.summary {
            Summary::Knotless => KcStatus::Ok,
            Summary::KnotFound => KcStatus::Refuted,
            Summary::Inconclusive => KcStatus::Inconclusive,
        })
    })
}

/// `KC_STATUS_OK` when some disjoint cycle pair has nonzero linking number.
///
/// # Safety
/// `d` must be a live handle; `report` may be null.
#[no_mangle]
pub unsafe extern "C" fn kc_diagram_links(d: *const KcDiagram, report: *mut *mut c_char) -> KcStatus {
    guard(|| {
        let rep = find_links(&handle(d, "diagram")?.0, "diagram").map_err(Fail::input)?;
        give_string(rep.to_json(), report)?;
        Ok(holds(rep.linked_pairs > 0))
    })
}

/// Checks a vertex permutation given in cycle notation, e.g. `(c h)(e i)`;
/// unmentioned vertices are fixed.
///
/// # Safety
/// `d` must be a live handle; `cycles` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn kc_diagram_check_symmetry(
    d: *const KcDiagram,
    cycles: *const c_char,
    reflect: bool,
    flip: bool,
) -> KcStatus {
    guard(|| {
        let d = &handle(d, "diagram")?.0;
        let partial = parse_cycles(text(cycles, "cycles")?).map_err(Fail::input)?;
        if let Some(v) = partial.keys().find(|v| !d.vertices.contains_key(*v)) {
            return Err(Fail::input(format!("unknown vertex `{v}`")));
        }
        let map = complete_map(d.vertices.keys().map(String::as_str), &partial);
        Ok(holds(
            check_symmetry(d, &map, reflect, flip).map_err(Fail::input)?,
        ))
    })
}

/// # Safety
/// `d` must be a handle from this library or null; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn kc_diagram_free(d: *mut KcDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}
