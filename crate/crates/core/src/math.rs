//! Scalar math routed through `num_traits::Float` so the crate builds with
//! and without `std`.

#![allow(dead_code)]

use num_traits::Float;

#[inline(always)]
pub(crate) fn sqrt(x: f64) -> f64 {
    Float::sqrt(x)
}

#[inline(always)]
pub(crate) fn exp(x: f64) -> f64 {
    Float::exp(x)
}

#[inline(always)]
pub(crate) fn ln(x: f64) -> f64 {
    Float::ln(x)
}

#[inline(always)]
pub(crate) fn ln_1p(x: f64) -> f64 {
    Float::ln_1p(x)
}

#[inline(always)]
pub(crate) fn sin(x: f64) -> f64 {
    Float::sin(x)
}

#[inline(always)]
pub(crate) fn cos(x: f64) -> f64 {
    Float::cos(x)
}

#[inline(always)]
pub(crate) fn hypot(x: f64, y: f64) -> f64 {
    Float::hypot(x, y)
}

#[inline(always)]
pub(crate) fn floor(x: f64) -> f64 {
    Float::floor(x)
}

#[inline(always)]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    Float::powi(x, n)
}

/// Round half away from zero, matching the split arithmetic contract.
#[inline(always)]
pub(crate) fn round_half_up(x: f64) -> usize {
    floor(x + 0.5) as usize
}
