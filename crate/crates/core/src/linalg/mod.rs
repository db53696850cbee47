//! Exact integer linear algebra: dense and sparse matrices with checked
//! arithmetic, Smith normal form with tracked transforms, and GF(2)
//! elimination.

mod gf2;
mod matrix;
mod snf;

pub use gf2::{gf2_nullspace, gf2_rank};
pub use matrix::{IntMatrix, SparseMatrix};
pub use snf::{smith, Smith};

use crate::error::{Error, Result};

#[inline]
pub(crate) fn cadd(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn cmul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[inline]
pub(crate) fn csub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}
