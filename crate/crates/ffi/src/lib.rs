//! C ABI over `qaff-core`.
//!
//! Objects are opaque handles created by `qaff_*_load`/`_build`/`_qint` and
//! released with the matching `_free`. Every fallible call returns a
//! [`QaffStatus`] and writes results through out-pointers. Strings returned
//! by the library must be released with [`qaff_string_free`].

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use qaff_core::cartan::{load_type, CartanData, Series};
use qaff_core::heisenberg::{all_pass, HeisenbergAlgebra, StructureConvention};
use qaff_core::qscalar::qint;
use qaff_core::verma::{DimVerdict, Irreducibility, PhiSignature, VermaModule};
use qaff_core::weyliso::verify_iso;
use qaff_core::{Error, Scalar};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QaffStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidType = 3,
    ZeroLevel = 4,
    ZeroK = 5,
    SingularMatrix = 6,
    TruncationExceeded = 7,
    Overflow = 8,
    Internal = 9,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QaffConvention {
    /// Denominator `[d_j]_{q_j}`.
    NodeBase = 0,
    /// Denominator `[d_j]_q`.
    Drinfeld = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QaffDimVerdict {
    Finite = 0,
    Infinite = 1,
    Unknown = 2,
}

/// Opaque affine Cartan data.
pub struct QaffCartan(CartanData);

/// Opaque element of Q(q^{1/2}).
pub struct QaffScalar(Scalar);

/// Opaque truncated imaginary Verma module.
pub struct QaffVerma(VermaModule);

impl From<Error> for QaffStatus {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidType { .. } => QaffStatus::InvalidType,
            Error::ZeroLevel => QaffStatus::ZeroLevel,
            Error::ZeroK => QaffStatus::ZeroK,
            Error::SingularMatrix => QaffStatus::SingularMatrix,
            Error::TruncationExceeded(_) => QaffStatus::TruncationExceeded,
            _ => QaffStatus::InvalidArgument,
        }
    }
}

fn guard<F: FnOnce() -> Result<(), QaffStatus>>(f: F) -> QaffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => QaffStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => QaffStatus::Internal,
    }
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, QaffStatus> {
    p.as_ref().ok_or(QaffStatus::NullPointer)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), QaffStatus> {
    if out.is_null() {
        return Err(QaffStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn qaff_status_message(status: QaffStatus) -> *const c_char {
    let s: &'static CStr = match status {
        QaffStatus::Ok => c"ok",
        QaffStatus::NullPointer => c"null pointer argument",
        QaffStatus::InvalidArgument => c"invalid argument",
        QaffStatus::InvalidType => c"unsupported Cartan type",
        QaffStatus::ZeroLevel => c"level must be nonzero",
        QaffStatus::ZeroK => c"loop degree must be nonzero",
        QaffStatus::SingularMatrix => c"singular matrix",
        QaffStatus::TruncationExceeded => c"result leaves the truncation",
        QaffStatus::Overflow => c"value does not fit the output type",
        QaffStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// Loads the untwisted affine type `series` (one of `A`..`G`) of finite rank `rank`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn qaff_cartan_load(series: c_char, rank: usize, out: *mut *mut QaffCartan) -> QaffStatus {
    guard(|| {
        let s = Series::from_letter(series as u8 as char).ok_or(QaffStatus::InvalidType)?;
        let cd = load_type(s, rank)?;
        write(out, Box::into_raw(Box::new(QaffCartan(cd))))
    })
}

/// # Safety
/// `cartan` must come from [`qaff_cartan_load`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qaff_cartan_free(cartan: *mut QaffCartan) {
    if !cartan.is_null() {
        drop(Box::from_raw(cartan));
    }
}

/// Finite rank `n`; the affine matrix is `(n+1) x (n+1)`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_cartan_rank(cartan: *const QaffCartan, out: *mut usize) -> QaffStatus {
    guard(|| write(out, deref(cartan)?.0.rank))
}

/// Affine Cartan matrix entry `a_ij`, `0 <= i, j <= n`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_cartan_entry(cartan: *const QaffCartan, i: usize, j: usize, out: *mut i64) -> QaffStatus {
    guard(|| {
        let cd = &deref(cartan)?.0;
        if i > cd.rank || j > cd.rank {
            return Err(QaffStatus::InvalidArgument);
        }
        write(out, cd.a(i, j))
    })
}

/// Symmetrizer entry `d_i`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_cartan_symmetrizer(cartan: *const QaffCartan, i: usize, out: *mut i64) -> QaffStatus {
    guard(|| {
        let cd = &deref(cartan)?.0;
        let d = *cd.d.get(i).ok_or(QaffStatus::InvalidArgument)?;
        write(out, d)
    })
}

/// `[n]_{q^d}`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_scalar_qint(n: i64, d: u32, out: *mut *mut QaffScalar) -> QaffStatus {
    guard(|| {
        if d == 0 {
            return Err(QaffStatus::InvalidArgument);
        }
        write(out, Box::into_raw(Box::new(QaffScalar(qint(n, d)))))
    })
}

/// Parses the textual form `num / den`.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_scalar_parse(text: *const c_char, out: *mut *mut QaffScalar) -> QaffStatus {
    guard(|| {
        if text.is_null() {
            return Err(QaffStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| QaffStatus::InvalidArgument)?;
        let v: Scalar = s.parse()?;
        write(out, Box::into_raw(Box::new(QaffScalar(v))))
    })
}

/// # Safety
/// `scalar` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qaff_scalar_free(scalar: *mut QaffScalar) {
    if !scalar.is_null() {
        drop(Box::from_raw(scalar));
    }
}

/// Exact equality.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_scalar_equal(a: *const QaffScalar, b: *const QaffScalar, out: *mut bool) -> QaffStatus {
    guard(|| write(out, deref(a)?.0 == deref(b)?.0))
}

/// Canonical text `num / den`; release with [`qaff_string_free`].
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_scalar_to_string(scalar: *const QaffScalar, out: *mut *mut c_char) -> QaffStatus {
    guard(|| {
        let text = CString::new(deref(scalar)?.0.to_string()).map_err(|_| QaffStatus::Internal)?;
        write(out, text.into_raw())
    })
}

/// Value at `q = 1` as a reduced fraction `num / den`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_scalar_at_q1(scalar: *const QaffScalar, num: *mut i64, den: *mut i64) -> QaffStatus {
    guard(|| {
        let r = deref(scalar)?.0.specialize_q1()?;
        let n = i64::try_from(r.numer()).map_err(|_| QaffStatus::Overflow)?;
        let d = i64::try_from(r.denom()).map_err(|_| QaffStatus::Overflow)?;
        write(num, n)?;
        write(den, d)
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qaff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

fn convention(c: QaffConvention) -> StructureConvention {
    match c {
        QaffConvention::NodeBase => StructureConvention::NodeBase,
        QaffConvention::Drinfeld => StructureConvention::Drinfeld,
    }
}

/// Checks the canonical relations for `1 <= k, l <= max_k` with formal `gamma`.
/// `out_checked` receives the number of relations examined.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_heis_verify(
    cartan: *const QaffCartan,
    conv: QaffConvention,
    max_k: i64,
    out_all_pass: *mut bool,
    out_checked: *mut usize,
) -> QaffStatus {
    guard(|| {
        if max_k < 1 {
            return Err(QaffStatus::InvalidArgument);
        }
        let h = HeisenbergAlgebra::new(deref(cartan)?.0.clone(), convention(conv));
        let report = h.verify_canonical_relations(max_k)?;
        write(out_all_pass, all_pass(&report))?;
        write(out_checked, report.len())
    })
}

/// Checks the Weyl-algebra isomorphism at `gamma = q^level`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_weyl_verify(
    cartan: *const QaffCartan,
    conv: QaffConvention,
    level: i64,
    max_k: i64,
    out_all_pass: *mut bool,
) -> QaffStatus {
    guard(|| {
        if max_k < 1 {
            return Err(QaffStatus::InvalidArgument);
        }
        let report = verify_iso(&deref(cartan)?.0, convention(conv), level, max_k)?;
        write(out_all_pass, all_pass(&report))
    })
}

/// Builds a truncated imaginary Verma module; `phi` uses the `prefix:period` grammar.
///
/// # Safety
/// `phi` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_verma_build(
    phi: *const c_char,
    level: i64,
    max_index: usize,
    max_exponent: u32,
    out: *mut *mut QaffVerma,
) -> QaffStatus {
    guard(|| {
        if phi.is_null() {
            return Err(QaffStatus::NullPointer);
        }
        let text = CStr::from_ptr(phi).to_str().map_err(|_| QaffStatus::InvalidArgument)?;
        let phi: PhiSignature = text.parse()?;
        let m = VermaModule::build(phi, level, max_index, max_exponent)?;
        write(out, Box::into_raw(Box::new(QaffVerma(m))))
    })
}

/// # Safety
/// `module` must come from [`qaff_verma_build`] and not be used afterwards. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn qaff_verma_free(module: *mut QaffVerma) {
    if !module.is_null() {
        drop(Box::from_raw(module));
    }
}

/// Truncated dimension of degree `n` and the verdict for the untruncated
/// module; `out_value` is meaningful only for a finite verdict.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_verma_graded_dim(
    module: *const QaffVerma,
    n: i64,
    out_dim: *mut u64,
    out_verdict: *mut QaffDimVerdict,
    out_value: *mut u64,
) -> QaffStatus {
    guard(|| {
        let r = deref(module)?.0.graded_dim(n);
        let dim = u64::try_from(r.dim).map_err(|_| QaffStatus::Overflow)?;
        let (verdict, value) = match r.verdict {
            DimVerdict::Finite(v) => (QaffDimVerdict::Finite, u64::try_from(v).map_err(|_| QaffStatus::Overflow)?),
            DimVerdict::Infinite => (QaffDimVerdict::Infinite, 0),
            DimVerdict::Unknown => (QaffDimVerdict::Unknown, 0),
        };
        write(out_dim, dim)?;
        write(out_verdict, verdict)?;
        write(out_value, value)
    })
}

/// Gram-determinant scan over degrees `|n| <= N`. When reducible,
/// `out_has_witness` tells whether `out_witness` holds a vanishing degree.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn qaff_verma_irreducible(
    module: *const QaffVerma,
    out_irreducible: *mut bool,
    out_has_witness: *mut bool,
    out_witness: *mut i64,
) -> QaffStatus {
    guard(|| {
        let r = deref(module)?.0.irreducible_at_truncation()?;
        write(out_irreducible, r.verdict == Irreducibility::Consistent)?;
        write(out_has_witness, r.witness_degree.is_some())?;
        write(out_witness, r.witness_degree.unwrap_or(0))
    })
}
