//! C ABI over the law-suite registry and the benchmark runner.
//!
//! Callers get results as an opaque report handle: a JSON document plus a
//! single pass/fail bit. The JSON matches what the Rust APIs serialise, so
//! a C host can hand it to any JSON parser without knowing the schemas
//! here. Every function returns a status code; handles are only written on
//! `Ok` and must be released with `monoidal_report_free`.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use monoidal::bench::{self, BenchConfig, OutputFormat, SuiteSel};
use monoidal::registry::{self, ConfigError};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonoidalStatus {
    MonoidalOk = 0,
    /// A required pointer argument was null.
    MonoidalNullArgument = 1,
    /// A string argument was not valid UTF-8.
    MonoidalInvalidUtf8 = 2,
    MonoidalUnknownSuite = 3,
    MonoidalUnknownInstance = 4,
    /// The benchmark configuration failed validation.
    MonoidalInvalidConfig = 5,
}

/// Opaque result handle: owns the report JSON and the overall verdict.
pub struct MonoidalReport {
    json: CString,
    passed: bool,
}

fn boxed(json: String, passed: bool) -> *mut MonoidalReport {
    let json = CString::new(json).expect("report JSON contains no NUL bytes");
    Box::into_raw(Box::new(MonoidalReport { json, passed }))
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, MonoidalStatus> {
    if p.is_null() {
        return Err(MonoidalStatus::MonoidalNullArgument);
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| MonoidalStatus::MonoidalInvalidUtf8)
}

fn config_status(err: &ConfigError) -> MonoidalStatus {
    match err {
        ConfigError::UnknownSuite(_) => MonoidalStatus::MonoidalUnknownSuite,
        ConfigError::UnknownInstance { .. } => MonoidalStatus::MonoidalUnknownInstance,
    }
}

/// Run the named law suite against the named instance.
///
/// On success writes a fresh report handle to `out`; its JSON lists every
/// law with trial counts and up to five counterexamples, and the verdict
/// is true only if no law failed.
///
/// # Safety
///
/// `suite` and `instance` must be NUL-terminated strings valid for the
/// duration of the call, and `out` must point to writable memory for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn monoidal_check_laws(
    suite: *const c_char,
    instance: *const c_char,
    seed: u64,
    size: u32,
    trials: u64,
    out: *mut *mut MonoidalReport,
) -> MonoidalStatus {
    if out.is_null() {
        return MonoidalStatus::MonoidalNullArgument;
    }
    *out = ptr::null_mut();
    let suite = match read_str(suite) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let instance = match read_str(instance) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match registry::check_laws(suite, instance, seed, size as usize, trials) {
        Ok(report) => {
            let json = serde_json::to_string(&report).expect("report serialises");
            *out = boxed(json, report.passed());
            MonoidalStatus::MonoidalOk
        }
        Err(err) => config_status(&err),
    }
}

/// List the registered instances for a suite as a JSON array of strings.
///
/// # Safety
///
/// `suite` must be a NUL-terminated string and `out` must point to
/// writable memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn monoidal_instances(
    suite: *const c_char,
    out: *mut *mut MonoidalReport,
) -> MonoidalStatus {
    if out.is_null() {
        return MonoidalStatus::MonoidalNullArgument;
    }
    *out = ptr::null_mut();
    let suite = match read_str(suite) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match registry::instances(suite) {
        Ok(names) => {
            let json = serde_json::to_string(names).expect("names serialise");
            *out = boxed(json, true);
            MonoidalStatus::MonoidalOk
        }
        Err(err) => config_status(&err),
    }
}

fn suite_sel(name: &str) -> Option<SuiteSel> {
    Some(match name {
        "dlist" => SuiteSel::Dlist,
        "codensity" => SuiteSel::Codensity,
        "freeap" => SuiteSel::Freeap,
        "prearrow" => SuiteSel::Prearrow,
        "all" => SuiteSel::All,
        _ => return None,
    })
}

/// Run the benchmark suite and report per-cell counts and timings.
///
/// `sizes` may be null (with `sizes_len` zero) to use the suite defaults.
/// The verdict is true only if the naive and represented variants agreed
/// on every observation.
///
/// # Safety
///
/// `suite` must be a NUL-terminated string, `sizes` must be null or point
/// to `sizes_len` readable elements, and `out` must point to writable
/// memory for one pointer.
#[no_mangle]
pub unsafe extern "C" fn monoidal_run_bench(
    suite: *const c_char,
    sizes: *const u64,
    sizes_len: usize,
    repeats: u32,
    warmup: u32,
    seed: u64,
    out: *mut *mut MonoidalReport,
) -> MonoidalStatus {
    if out.is_null() {
        return MonoidalStatus::MonoidalNullArgument;
    }
    *out = ptr::null_mut();
    let suite = match read_str(suite) {
        Ok(s) => s,
        Err(status) => return status,
    };
    let Some(sel) = suite_sel(suite) else {
        return MonoidalStatus::MonoidalUnknownSuite;
    };
    let sizes = if sizes.is_null() {
        if sizes_len != 0 {
            return MonoidalStatus::MonoidalNullArgument;
        }
        None
    } else {
        Some(
            std::slice::from_raw_parts(sizes, sizes_len)
                .iter()
                .map(|&n| n as usize)
                .collect(),
        )
    };
    let config = BenchConfig {
        suite: sel,
        sizes,
        repeats,
        warmup,
        output: OutputFormat::Json,
        seed,
    };
    match bench::run(&config) {
        Ok(report) => {
            let passed = report.summaries.iter().all(|s| s.observations_match);
            let json = bench::emit(&report, OutputFormat::Json);
            *out = boxed(json, passed);
            MonoidalStatus::MonoidalOk
        }
        Err(_) => MonoidalStatus::MonoidalInvalidConfig,
    }
}

/// Borrow the report's JSON as a NUL-terminated string.
///
/// The pointer stays valid until `monoidal_report_free` releases the
/// report. Returns null if `report` is null.
///
/// # Safety
///
/// `report` must be null or a handle produced by this library that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn monoidal_report_json(report: *const MonoidalReport) -> *const c_char {
    if report.is_null() {
        return ptr::null();
    }
    (*report).json.as_ptr()
}

/// Overall verdict: 1 if everything passed, 0 otherwise (or if `report`
/// is null).
///
/// # Safety
///
/// `report` must be null or a handle produced by this library that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn monoidal_report_passed(report: *const MonoidalReport) -> i32 {
    if report.is_null() {
        return 0;
    }
    i32::from((*report).passed)
}

/// Release a report handle. Passing null is a no-op.
///
/// # Safety
///
/// `report` must be null or a handle produced by this library, and must
/// not be used after this call.
#[no_mangle]
pub unsafe extern "C" fn monoidal_report_free(report: *mut MonoidalReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}
