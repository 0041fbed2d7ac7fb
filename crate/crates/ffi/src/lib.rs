//! C ABI over the homforge library.
//!
//! Structures cross the boundary as opaque `HfStructure` handles owned by the
//! caller and released with [`hf_structure_free`]. Every fallible function
//! returns an [`HfStatus`]; on failure [`hf_last_error`] describes the cause.
//! Outputs are written through pointers only on success.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use homforge::cores::{core_of, is_core, CoreError};
use homforge::reductions::{make_grid_template, pcsp_construct, ReductionError};
use homforge::solver::{count_homs, find_hom, has_k_clique, HomSearchResult, SearchBudget};
use homforge::structures::io::{graph_from_dimacs, structure_from_json, structure_to_json};
use homforge::structures::{clique, grid, typed_grid, Structure, StructureError};
use homforge::treewidth::structure_treewidth;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    BudgetExceeded = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Outcome of a homomorphism search.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfOutcome {
    Found = 0,
    NoneExists = 1,
    BudgetExceeded = 2,
}

/// Opaque relational structure.
pub struct HfStructure {
    inner: Structure,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(HfStatus, String);

impl From<StructureError> for Failure {
    fn from(e: StructureError) -> Self {
        Failure(HfStatus::Domain, e.to_string())
    }
}

impl From<homforge::solver::SolverError> for Failure {
    fn from(e: homforge::solver::SolverError) -> Self {
        Failure(HfStatus::Domain, e.to_string())
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let status = match e {
            CoreError::BudgetExceeded => HfStatus::BudgetExceeded,
            _ => HfStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

impl From<ReductionError> for Failure {
    fn from(e: ReductionError) -> Self {
        let status = match e {
            ReductionError::BudgetExceeded => HfStatus::BudgetExceeded,
            _ => HfStatus::Domain,
        };
        Failure(status, e.to_string())
    }
}

impl From<homforge::treewidth::TreewidthError> for Failure {
    fn from(e: homforge::treewidth::TreewidthError) -> Self {
        Failure(HfStatus::Domain, e.to_string())
    }
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard<F: FnOnce() -> Result<(), Failure>>(f: F) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            HfStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            HfStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(HfStatus::NullPointer, "null pointer argument".into())
}

unsafe fn structure<'a>(s: *const HfStructure) -> Result<&'a Structure, Failure> {
    s.as_ref().map(|h| &h.inner).ok_or_else(null)
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Failure(HfStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

unsafe fn emit(out: *mut *mut HfStructure, s: Structure) -> Result<(), Failure> {
    write(out, Box::into_raw(Box::new(HfStructure { inner: s })))
}

fn budget(node_limit: u64) -> SearchBudget {
    if node_limit == 0 {
        SearchBudget::UNLIMITED
    } else {
        SearchBudget::nodes(node_limit)
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hf_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Parses a structure from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_structure_from_json(json: *const c_char, out: *mut *mut HfStructure) -> HfStatus {
    guard(|| {
        let s = structure_from_json(text(json)?).map_err(|e| Failure(HfStatus::Parse, e.to_string()))?;
        emit(out, s)
    })
}

/// Parses a graph in DIMACS `p edge` format.
///
/// # Safety
/// `dimacs` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_structure_from_dimacs(dimacs: *const c_char, out: *mut *mut HfStructure) -> HfStatus {
    guard(|| {
        let g = graph_from_dimacs(text(dimacs)?).map_err(|e| Failure(HfStatus::Parse, e.to_string()))?;
        emit(out, g.to_structure())
    })
}

/// Serializes a structure to JSON. Release the string with [`hf_string_free`].
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_structure_to_json(s: *const HfStructure, out: *mut *mut c_char) -> HfStatus {
    guard(|| {
        let json = structure_to_json(structure(s)?);
        let c = CString::new(json).map_err(|e| Failure(HfStatus::Domain, e.to_string()))?;
        write(out, c.into_raw())
    })
}

/// Number of elements in the universe, or 0 for a null handle.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_structure_len(s: *const HfStructure) -> usize {
    s.as_ref().map_or(0, |h| h.inner.len())
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `s` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_structure_free(s: *mut HfStructure) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The complete graph on `k` vertices.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_clique(k: usize, out: *mut *mut HfStructure) -> HfStatus {
    guard(|| emit(out, clique(k)?))
}

/// The `k` x `l` grid graph.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_grid(k: usize, l: usize, out: *mut *mut HfStructure) -> HfStatus {
    guard(|| emit(out, grid(k, l)?))
}

/// The `k` x `l` grid with directed horizontal `H` and vertical `V` edges.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_typed_grid(k: usize, l: usize, out: *mut *mut HfStructure) -> HfStatus {
    guard(|| emit(out, typed_grid(k, l)?))
}

/// Searches for a homomorphism `source -> target` within `node_limit` search
/// nodes (0 for no limit). When found and `map` is non-null, writes the image
/// of each source element; `map_len` must then be at least the source size.
///
/// # Safety
/// Handles must be live; `outcome` must be writable; `map` must be null or
/// point to `map_len` writable slots.
#[no_mangle]
pub unsafe extern "C" fn hf_find_hom(
    source: *const HfStructure,
    target: *const HfStructure,
    node_limit: u64,
    outcome: *mut HfOutcome,
    map: *mut usize,
    map_len: usize,
) -> HfStatus {
    guard(|| {
        let (a, b) = (structure(source)?, structure(target)?);
        if !map.is_null() && map_len < a.len() {
            return Err(Failure(
                HfStatus::BufferTooSmall,
                format!("map buffer holds {map_len}, source has {}", a.len()),
            ));
        }
        let result = find_hom(a, b, budget(node_limit))?;
        let code = match &result {
            HomSearchResult::Found(_) => HfOutcome::Found,
            HomSearchResult::NoneExists => HfOutcome::NoneExists,
            HomSearchResult::BudgetExceeded => HfOutcome::BudgetExceeded,
        };
        write(outcome, code)?;
        if let (HomSearchResult::Found(h), false) = (result, map.is_null()) {
            ptr::copy_nonoverlapping(h.map().as_ptr(), map, h.len());
        }
        Ok(())
    })
}

/// Counts all homomorphisms `source -> target`.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_count_homs(
    source: *const HfStructure,
    target: *const HfStructure,
    out: *mut u64,
) -> HfStatus {
    guard(|| write(out, count_homs(structure(source)?, structure(target)?)?))
}

/// Whether every endomorphism of `s` is a bijection.
///
/// # Safety
/// `s` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_is_core(s: *const HfStructure, node_limit: u64, out: *mut bool) -> HfStatus {
    guard(|| write(out, is_core(structure(s)?, budget(node_limit))?))
}

/// The core of `s` as a new handle.
///
/// # Safety
/// `s` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_core_of(s: *const HfStructure, node_limit: u64, out: *mut *mut HfStructure) -> HfStatus {
    guard(|| emit(out, core_of(structure(s)?, budget(node_limit))?.core))
}

/// Exact treewidth of the Gaifman graph; -1 for the empty structure.
///
/// # Safety
/// `s` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_treewidth_exact(s: *const HfStructure, out: *mut i64) -> HfStatus {
    guard(|| write(out, structure_treewidth(structure(s)?)?.0))
}

/// Whether the graph `g` contains a `k`-clique.
///
/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_has_k_clique(g: *const HfStructure, k: usize, out: *mut bool) -> HfStatus {
    guard(|| write(out, has_k_clique(&structure(g)?.to_graph()?, k)))
}

/// The promise gadget `X` for the typed-grid template `(k, f)` and graph `g`.
///
/// # Safety
/// `g` must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_reduce_pcsp_grid(
    g: *const HfStructure,
    k: usize,
    f: usize,
    out: *mut *mut HfStructure,
) -> HfStatus {
    guard(|| {
        let graph = structure(g)?.to_graph()?;
        let template = make_grid_template(k, f)?;
        let inst = pcsp_construct(&template.pair, &template.rhos, &graph)?;
        emit(out, inst.x)
    })
}
