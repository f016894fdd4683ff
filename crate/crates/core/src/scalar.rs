//! Scalar traits the algebraic machinery is generic over.
//!
//! Every scalar domain carries a runtime context (`Ctx`): for [`Rat`] it is
//! the unit type, for [`Cyclo`](crate::Cyclo) it is the cyclotomic field the
//! element lives in. Zero and one are always built from a context, so
//! structures store the context once and build constants from it.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::Result;
use crate::exactnum::Rat;

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    type Ctx: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn context(&self) -> Self::Ctx;
    fn zero_in(ctx: &Self::Ctx) -> Self;
    fn one_in(ctx: &Self::Ctx) -> Self;
    fn from_rat(ctx: &Self::Ctx, r: &Rat) -> Self;
    fn is_zero(&self) -> bool;

    fn from_int(ctx: &Self::Ctx, k: i64) -> Self {
        Self::from_rat(ctx, &Rat::from(k))
    }

    fn is_one(&self) -> bool {
        *self == Self::one_in(&self.context())
    }

    fn pow_u(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.context());
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}

/// A field: a ring where every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;
}
