//! C interface to `lcmlattice`.
//!
//! Lattices and ideals are passed as opaque handles created by functions
//! such as `lcm_ideal_parse` or `lcm_lattice_boolean` and released with the
//! matching `*_free` function. Every fallible call returns an
//! [`LcmStatus`]; the message of the most recent failure on the calling
//! thread is available from [`lcm_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use lcmlattice::enumerate::generate_all;
use lcmlattice::homology::betti_table;
use lcmlattice::invariants::{breadth, length, order_dimension};
use lcmlattice::sdepth::{sdepth, Mode};
use lcmlattice::verify::verify_ideal;
use lcmlattice::{Error, Lattice, MonomialIdeal};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcmStatus {
    Ok = 0,
    InvalidArgument = 1,
    NotALattice = 2,
    ParseError = 3,
    ResourceLimit = 4,
    IoError = 5,
    NullPointer = 6,
    InvalidUtf8 = 7,
    Panic = 8,
}

/// Which module [`lcm_ideal_sdepth`] measures.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcmMode {
    Ideal = 0,
    Quotient = 1,
}

/// Opaque finite lattice.
pub struct LcmLattice(Lattice);

/// Opaque monomial ideal.
pub struct LcmIdeal(MonomialIdeal);

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct LcmInvariants {
    pub length: usize,
    pub breadth: usize,
    pub order_dimension: usize,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default)]
pub struct LcmIdealReport {
    pub depth: usize,
    pub sdepth_quotient: usize,
    pub sdepth_ideal: usize,
    pub pdim_quotient: usize,
    pub spdim_quotient: usize,
    pub pdim_ideal: usize,
    pub spdim_ideal: usize,
    /// True when `depth S/I = sdepth S/I < sdepth I` holds.
    pub chain_holds: bool,
    /// True when the chain is expected to hold (at most five generators).
    pub asserted: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> LcmStatus {
    match err {
        Error::InvalidArgument(_) => LcmStatus::InvalidArgument,
        Error::NotALattice(_) => LcmStatus::NotALattice,
        Error::Parse { .. } => LcmStatus::ParseError,
        Error::Resource(_) => LcmStatus::ResourceLimit,
        Error::Io { .. } | Error::Json { .. } => LcmStatus::IoError,
    }
}

struct Fail(LcmStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LcmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LcmStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            LcmStatus::Panic
        }
    }
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(LcmStatus::NullPointer, format!("{what} is null")))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(LcmStatus::NullPointer, "output pointer is null".to_string()));
    }
    out.write(value);
    Ok(())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(Fail(LcmStatus::NullPointer, "string is null".to_string()));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fail(LcmStatus::InvalidUtf8, e.to_string()))
}

/// Message of the last failed call on this thread, or NULL. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lcm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parse an ideal such as `"x1*x2, x3^2"`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_parse(text: *const c_char, out: *mut *mut LcmIdeal) -> LcmStatus {
    guard(|| {
        let ideal = lcmlattice::parse_ideal(read_str(text)?)?;
        write(out, Box::into_raw(Box::new(LcmIdeal(ideal))))
    })
}

/// # Safety
/// `ideal` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_free(ideal: *mut LcmIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// # Safety
/// `ideal` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_num_vars(ideal: *const LcmIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.0.num_vars())
}

/// # Safety
/// `ideal` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_num_generators(ideal: *const LcmIdeal) -> usize {
    ideal.as_ref().map_or(0, |i| i.0.num_generators())
}

/// Generators as text; release with [`lcm_string_free`].
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_to_string(ideal: *const LcmIdeal, out: *mut *mut c_char) -> LcmStatus {
    guard(|| {
        let text = deref(ideal, "ideal")?.0.to_string();
        let c = CString::new(text).map_err(|e| Fail(LcmStatus::InvalidArgument, e.to_string()))?;
        write(out, c.into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Depth of `S/I`.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_depth(ideal: *const LcmIdeal, out: *mut usize) -> LcmStatus {
    guard(|| write(out, lcmlattice::homology::depth_quotient(&deref(ideal, "ideal")?.0)?))
}

/// Stanley depth of `I` or `S/I`.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_sdepth(ideal: *const LcmIdeal, mode: LcmMode, out: *mut usize) -> LcmStatus {
    guard(|| {
        let mode = match mode {
            LcmMode::Ideal => Mode::Ideal,
            LcmMode::Quotient => Mode::Quotient,
        };
        write(out, sdepth(&deref(ideal, "ideal")?.0, mode)?)
    })
}

/// Depth, Stanley depth and projective dimensions of one ideal.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_ideal_verify(ideal: *const LcmIdeal, out: *mut LcmIdealReport) -> LcmStatus {
    guard(|| {
        let v = verify_ideal(&deref(ideal, "ideal")?.0)?;
        write(
            out,
            LcmIdealReport {
                depth: v.depth,
                sdepth_quotient: v.sdepth_quotient,
                sdepth_ideal: v.sdepth_ideal,
                pdim_quotient: v.pdim_quotient,
                spdim_quotient: v.spdim_quotient,
                pdim_ideal: v.pdim_ideal,
                spdim_ideal: v.spdim_ideal,
                chain_holds: v.depth == v.sdepth_quotient && v.sdepth_quotient < v.sdepth_ideal,
                asserted: v.asserted,
            },
        )
    })
}

/// Boolean lattice on `k` atoms.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_boolean(k: usize, out: *mut *mut LcmLattice) -> LcmStatus {
    guard(|| write(out, Box::into_raw(Box::new(LcmLattice(lcmlattice::boolean_lattice(k)?)))))
}

/// Lcm-lattice of an ideal.
///
/// # Safety
/// `ideal` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_of_ideal(ideal: *const LcmIdeal, out: *mut *mut LcmLattice) -> LcmStatus {
    guard(|| {
        let l = lcmlattice::lcm_lattice(&deref(ideal, "ideal")?.0)?.lattice;
        write(out, Box::into_raw(Box::new(LcmLattice(l))))
    })
}

/// Load a lattice file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_read_file(path: *const c_char, out: *mut *mut LcmLattice) -> LcmStatus {
    guard(|| write(out, Box::into_raw(Box::new(LcmLattice(Lattice::read_file(read_str(path)?)?)))))
}

/// # Safety
/// `lattice` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_free(lattice: *mut LcmLattice) {
    if !lattice.is_null() {
        drop(Box::from_raw(lattice));
    }
}

/// # Safety
/// `lattice` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_size(lattice: *const LcmLattice) -> usize {
    lattice.as_ref().map_or(0, |l| l.0.size())
}

/// # Safety
/// `lattice` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_num_atoms(lattice: *const LcmLattice) -> usize {
    lattice.as_ref().map_or(0, |l| l.0.atoms().len())
}

/// # Safety
/// `lattice` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_is_atomistic(lattice: *const LcmLattice) -> bool {
    lattice.as_ref().is_some_and(|l| lcmlattice::is_atomistic(&l.0))
}

/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_isomorphic(a: *const LcmLattice, b: *const LcmLattice, out: *mut bool) -> LcmStatus {
    guard(|| write(out, lcmlattice::are_isomorphic(&deref(a, "lattice")?.0, &deref(b, "lattice")?.0)))
}

/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_invariants(lattice: *const LcmLattice, out: *mut LcmInvariants) -> LcmStatus {
    guard(|| {
        let l = &deref(lattice, "lattice")?.0;
        write(
            out,
            LcmInvariants {
                length: length(l),
                breadth: breadth(l),
                order_dimension: order_dimension(l),
            },
        )
    })
}

/// Projective dimension of `S/I` for any ideal with this lcm-lattice.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_pdim(lattice: *const LcmLattice, out: *mut usize) -> LcmStatus {
    guard(|| write(out, betti_table(&deref(lattice, "lattice")?.0)?.projective_dimension()))
}

/// Squarefree ideal whose lcm-lattice is `lattice`.
///
/// # Safety
/// `lattice` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_lattice_realize(lattice: *const LcmLattice, out: *mut *mut LcmIdeal) -> LcmStatus {
    guard(|| {
        let ideal = lcmlattice::realize(&deref(lattice, "lattice")?.0)?;
        write(out, Box::into_raw(Box::new(LcmIdeal(ideal))))
    })
}

/// Number of isomorphism classes of atomistic lattices on `k` atoms.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lcm_enumerate_count(k: usize, out: *mut usize) -> LcmStatus {
    guard(|| write(out, generate_all(k)?.len()))
}
