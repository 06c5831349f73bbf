//! C ABI for `latin3`.
//!
//! Counts cross the boundary as NUL-terminated decimal strings owned by the
//! library; release them with [`l3_string_free`]. Graphs and polynomials are
//! opaque handles released with their own `_free` function. Every fallible
//! call returns an [`L3Status`]; on failure [`l3_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use latin3::chromatic::{count_colorings_bruteforce, ChromaticEngine};
use latin3::combinatorics::gen_derangement;
use latin3::formulas::{aps_g, g_npq_closed, riordan_l3, thm3_g};
use latin3::graph::{build_gn, build_gnpq};
use latin3::oracle::{count_injections_forbidden, count_latin};
use latin3::{Error, Graph, Poly};
use num_bigint::BigInt;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum L3Status {
    Ok = 0,
    InvalidArgument = 1,
    LimitExceeded = 2,
    ParseError = 3,
    NullPointer = 4,
    Panic = 5,
}

/// Opaque graph handle.
pub struct L3Graph(Graph);

/// Opaque polynomial handle.
pub struct L3Poly(Poly);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> L3Status {
    match err {
        Error::VertexLimit { .. } | Error::BudgetExceeded { .. } => L3Status::LimitExceeded,
        Error::Parse { .. } => L3Status::ParseError,
        Error::InvalidArgument(_) | Error::MissingEdge(..) => L3Status::InvalidArgument,
    }
}

fn fail(status: L3Status, msg: String) -> L3Status {
    set_error(msg);
    status
}

/// Runs `f`, converting errors and panics into status codes.
fn guard<F>(f: F) -> L3Status
where
    F: FnOnce() -> Result<(), L3Status> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => L3Status::Ok,
        Ok(Err(status)) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            fail(L3Status::Panic, msg)
        }
    }
}

fn lift<T>(r: latin3::Result<T>) -> Result<T, L3Status> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn check_out<T>(out: *mut T) -> Result<(), L3Status> {
    if out.is_null() {
        Err(fail(L3Status::NullPointer, "output pointer is null".into()))
    } else {
        Ok(())
    }
}

unsafe fn write_string(out: *mut *mut c_char, value: &BigInt) -> Result<(), L3Status> {
    check_out(out)?;
    let s = CString::new(value.to_string()).expect("decimal digits");
    *out = s.into_raw();
    Ok(())
}

unsafe fn graph_ref<'a>(g: *const L3Graph) -> Result<&'a Graph, L3Status> {
    g.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(L3Status::NullPointer, "graph handle is null".into()))
}

unsafe fn poly_ref<'a>(p: *const L3Poly) -> Result<&'a Poly, L3Status> {
    p.as_ref()
        .map(|h| &h.0)
        .ok_or_else(|| fail(L3Status::NullPointer, "polynomial handle is null".into()))
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn l3_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Frees a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn l3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Reduced 3 x n Latin rectangles (first row fixed).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_riordan_l3(n: u64, out: *mut *mut c_char) -> L3Status {
    guard(move || write_string(out, &lift(riordan_l3(n))?))
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_aps_g(n: u64, lambda: u64, out: *mut *mut c_char) -> L3Status {
    guard(move || write_string(out, &lift(aps_g(n, lambda))?))
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_thm3_g(n: u64, lambda: u64, out: *mut *mut c_char) -> L3Status {
    guard(move || write_string(out, &lift(thm3_g(n, lambda))?))
}

/// Colorings of `G(n, k, l)` with `k + l = n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_g_npq_closed(
    n: u64,
    k: u64,
    l: u64,
    lambda: u64,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || write_string(out, &lift(g_npq_closed(n, k, l, lambda))?))
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_gen_derangement(
    lambda: u64,
    n: u64,
    t: u64,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || write_string(out, &lift(gen_derangement(lambda, n, t))?))
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_count_latin(
    n: usize,
    lambda: u64,
    fixed_first_row: bool,
    node_budget: u64,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || {
        write_string(
            out,
            &lift(count_latin(n, lambda, fixed_first_row, node_budget))?,
        )
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_count_injections_forbidden(
    lambda: u64,
    n: u64,
    t: u64,
    node_budget: u64,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || {
        write_string(
            out,
            &lift(count_injections_forbidden(lambda, n, t, node_budget))?,
        )
    })
}

unsafe fn write_graph(out: *mut *mut L3Graph, g: Graph) -> Result<(), L3Status> {
    check_out(out)?;
    *out = Box::into_raw(Box::new(L3Graph(g)));
    Ok(())
}

/// `G(n) = K3 □ Kn`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_graph_build_gn(n: usize, out: *mut *mut L3Graph) -> L3Status {
    guard(move || {
        if n == 0 {
            return Err(fail(
                L3Status::InvalidArgument,
                "n must be at least 1".into(),
            ));
        }
        write_graph(out, build_gn(n))
    })
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_graph_build_gnpq(
    n: usize,
    p: usize,
    q: usize,
    out: *mut *mut L3Graph,
) -> L3Status {
    guard(move || write_graph(out, lift(build_gnpq(n, p, q))?))
}

/// Parses the graph text format (vertex count, then `u v` per line).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_graph_parse(text: *const c_char, out: *mut *mut L3Graph) -> L3Status {
    guard(move || {
        if text.is_null() {
            return Err(fail(L3Status::NullPointer, "text is null".into()));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(L3Status::ParseError, format!("text is not UTF-8: {e}")))?;
        write_graph(out, lift(Graph::parse(text))?)
    })
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn l3_graph_vertex_count(g: *const L3Graph) -> usize {
    g.as_ref().map_or(0, |h| h.0.vertex_count())
}

/// # Safety
/// `g` must be a live handle or NULL (returns 0).
#[no_mangle]
pub unsafe extern "C" fn l3_graph_edge_count(g: *const L3Graph) -> usize {
    g.as_ref().map_or(0, |h| h.0.edge_count())
}

/// Graph in text format; free with [`l3_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_graph_to_text(g: *const L3Graph, out: *mut *mut c_char) -> L3Status {
    guard(move || {
        let g = graph_ref(g)?;
        check_out(out)?;
        *out = CString::new(g.to_text()).expect("ascii").into_raw();
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn l3_graph_free(g: *mut L3Graph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Chromatic polynomial by deletion–contraction. `vertex_limit == 0` uses the default.
///
/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_chromatic_poly(
    g: *const L3Graph,
    vertex_limit: usize,
    out: *mut *mut L3Poly,
) -> L3Status {
    guard(move || {
        let g = graph_ref(g)?;
        check_out(out)?;
        let mut engine = ChromaticEngine::default();
        if vertex_limit != 0 {
            engine = engine.with_vertex_limit(vertex_limit);
        }
        let poly = lift(engine.chromatic_poly(g))?;
        *out = Box::into_raw(Box::new(L3Poly(poly)));
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_count_colorings_bruteforce(
    g: *const L3Graph,
    lambda: u64,
    node_budget: u64,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || {
        let g = graph_ref(g)?;
        write_string(
            out,
            &lift(count_colorings_bruteforce(g, lambda, node_budget))?,
        )
    })
}

/// Degree, or -1 for the zero polynomial or a NULL handle.
///
/// # Safety
/// `p` must be a live handle or NULL.
#[no_mangle]
pub unsafe extern "C" fn l3_poly_degree(p: *const L3Poly) -> i64 {
    p.as_ref()
        .and_then(|h| h.0.degree())
        .map_or(-1, |d| d as i64)
}

/// Coefficient of `x^i` as a decimal string (zero above the degree).
///
/// # Safety
/// `p` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_poly_coeff(
    p: *const L3Poly,
    i: usize,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || write_string(out, &poly_ref(p)?.coeff(i)))
}

/// # Safety
/// `p` must be a live handle; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn l3_poly_eval(
    p: *const L3Poly,
    lambda: u64,
    out: *mut *mut c_char,
) -> L3Status {
    guard(move || write_string(out, &poly_ref(p)?.eval_u64(lambda)))
}

/// # Safety
/// `p` must come from this library and not have been freed. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn l3_poly_free(p: *mut L3Poly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}
