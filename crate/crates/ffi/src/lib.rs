//! C ABI over twistkit. Complexes and systems are opaque handles; results
//! come back as JSON strings owned by the caller and released with
//! [`tk_string_free`]. On failure a function returns a nonzero [`TkStatus`]
//! and [`tk_last_error`] describes it.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use twistkit::coefficients::{twist_classes, CoefficientSystem};
use twistkit::complex::{polarize, ComplexData, DeltaComplex};
use twistkit::io::{Loader, TwistData};
use twistkit::twisted::TwistedChainComplex;
use twistkit::{Error, Sign};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Input was malformed or inconsistent.
    Validation = 3,
    /// Input was well formed but a mathematical hypothesis failed.
    Math = 4,
    Panic = 5,
}

/// A finite Δ-complex.
pub struct TkComplex {
    inner: Arc<DeltaComplex>,
}

/// A local ℤ-coefficient system on a [`TkComplex`].
pub struct TkSystem {
    inner: CoefficientSystem,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> TkStatus {
    let body = serde_json::json!({"error": e.kind(), "message": e.to_string()});
    set_error(body.to_string());
    if e.is_validation() {
        TkStatus::Validation
    } else {
        TkStatus::Math
    }
}

enum Failure {
    Status(TkStatus, String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => TkStatus::Ok,
        Ok(Err(Failure::Lib(e))) => fail(e),
        Ok(Err(Failure::Status(s, msg))) => {
            set_error(serde_json::json!({"error": format!("{s:?}"), "message": msg}).to_string());
            s
        }
        Err(_) => {
            set_error(r#"{"error":"Panic","message":"internal panic"}"#.to_string());
            TkStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(TkStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(TkStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| Failure::Status(TkStatus::NullPointer, format!("{what} is null")))
}

unsafe fn out_ptr<T>(p: *mut *mut T) -> Result<(), Failure> {
    if p.is_null() {
        return Err(Failure::Status(TkStatus::NullPointer, "output pointer is null".into()));
    }
    *p = ptr::null_mut();
    Ok(())
}

fn json_string(v: &impl serde::Serialize) -> Result<*mut c_char, Failure> {
    let s = serde_json::to_string(v).map_err(|e| Failure::Lib(Error::Parse(e.to_string())))?;
    Ok(CString::new(s).expect("JSON has no nul").into_raw())
}

/// Last error of this thread as a JSON object, or null. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn tk_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Loads a complex by corpus name or JSON file path.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_complex_load(name: *const c_char, out: *mut *mut TkComplex) -> TkStatus {
    guard(|| {
        out_ptr(out)?;
        let name = text(name, "name")?;
        let inner = Loader::default().complex_named(name)?;
        *out = Box::into_raw(Box::new(TkComplex { inner }));
        Ok(())
    })
}

/// Builds a complex from its JSON description.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_complex_from_json(json: *const c_char, out: *mut *mut TkComplex) -> TkStatus {
    guard(|| {
        out_ptr(out)?;
        let data: ComplexData = serde_json::from_str(text(json, "json")?).map_err(Error::from)?;
        let inner = Arc::new(DeltaComplex::from_data(&data)?);
        *out = Box::into_raw(Box::new(TkComplex { inner }));
        Ok(())
    })
}

/// # Safety
/// `c` must come from this library and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn tk_complex_free(c: *mut TkComplex) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Dimension of the complex, or -1 for a null handle.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tk_complex_dim(c: *const TkComplex) -> i64 {
    c.as_ref().map_or(-1, |c| c.inner.dim() as i64)
}

/// Number of `n`-simplices, 0 beyond the top dimension, or -1 for a null handle.
///
/// # Safety
/// `c` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn tk_complex_count(c: *const TkComplex, n: usize) -> i64 {
    c.as_ref().map_or(-1, |c| if n <= c.inner.dim() { c.inner.count(n) as i64 } else { 0 })
}

/// All twist classes of the complex under its default polarization, as JSON.
///
/// # Safety
/// `c` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_twist_classes(c: *const TkComplex, out: *mut *mut c_char) -> TkStatus {
    guard(|| {
        out_ptr(out)?;
        let x = &handle(c, "complex")?.inner;
        let p = polarize(x, None)?;
        let classes: Vec<TwistData> = twist_classes(x, &p).iter().map(TwistData::from_class).collect();
        *out = json_string(&classes)?;
        Ok(())
    })
}

/// A system given as `trivial`, `w1` or a system file path.
///
/// # Safety
/// `c` must be a live handle, `spec` a nul-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tk_system_new(c: *const TkComplex, spec: *const c_char, out: *mut *mut TkSystem) -> TkStatus {
    guard(|| {
        out_ptr(out)?;
        let x = &handle(c, "complex")?.inner;
        let inner = Loader::default().system(x, text(spec, "spec")?)?;
        *out = Box::into_raw(Box::new(TkSystem { inner }));
        Ok(())
    })
}

/// A system from one sign (+1 or -1) per edge.
///
/// # Safety
/// `c` must be a live handle, `signs` must point to `len` integers, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tk_system_from_signs(
    c: *const TkComplex,
    signs: *const i32,
    len: usize,
    out: *mut *mut TkSystem,
) -> TkStatus {
    guard(|| {
        out_ptr(out)?;
        let x = &handle(c, "complex")?.inner;
        let raw: &[i32] = if len == 0 { &[] } else { std::slice::from_raw_parts(handle(signs, "signs")?, len) };
        let signs = raw
            .iter()
            .map(|&s| Sign::from_i64(s as i64).ok_or_else(|| Error::InvalidInput(format!("{s} is not a sign"))))
            .collect::<Result<Vec<_>, _>>()?;
        let inner = CoefficientSystem::new(x.clone(), signs)?;
        *out = Box::into_raw(Box::new(TkSystem { inner }));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not have been freed, or be null.
#[no_mangle]
pub unsafe extern "C" fn tk_system_free(s: *mut TkSystem) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Twisted homology (or cohomology when `cohomology` is nonzero) in degree
/// `n`, as `{"rank", "torsion", "basis"}`.
///
/// # Safety
/// `s` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_homology(s: *const TkSystem, n: usize, cohomology: i32, out: *mut *mut c_char) -> TkStatus {
    guard(|| {
        out_ptr(out)?;
        let chain = TwistedChainComplex::new(&handle(s, "system")?.inner);
        let h = if cohomology != 0 { chain.cohomology(n)? } else { chain.homology(n)? };
        *out = json_string(&h)?;
        Ok(())
    })
}

/// Runs one CLI command given as a JSON array of arguments (without the
/// program name). Standard output and standard error of the command are
/// returned in `out` and `err`; the return value is the CLI exit code, or -1
/// if the arguments could not be read.
///
/// # Safety
/// `args_json` must be a nul-terminated string; `out` and `err` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tk_cli_run(args_json: *const c_char, out: *mut *mut c_char, err: *mut *mut c_char) -> i32 {
    let mut code = -1;
    let status = guard(|| {
        out_ptr(out)?;
        out_ptr(err)?;
        let args: Vec<String> = serde_json::from_str(text(args_json, "args")?).map_err(Error::from)?;
        let (mut o, mut e) = (Vec::new(), Vec::new());
        code = twistkit::cli::run(std::iter::once("twistkit".to_string()).chain(args), &mut o, &mut e);
        *out = CString::new(o).map_err(|_| Error::Parse("nul in output".into()))?.into_raw();
        *err = CString::new(e).map_err(|_| Error::Parse("nul in output".into()))?.into_raw();
        Ok(())
    });
    if status == TkStatus::Ok {
        code
    } else {
        -1
    }
}
