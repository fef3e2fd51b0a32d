use std::fmt::Debug;
use std::marker::PhantomData;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use super::{MvError, MvOps};

/// Grid denominator used when sampling `[0, 1]` for law checks.
pub const DEFAULT_GRID: u32 = 10;

/// The standard MV-algebra on exact rationals in `[0, 1]`:
/// `x ⊕ y = min(x + y, 1)`, `x∗ = 1 − x`.
///
/// The integer type is a parameter so bounded-denominator workloads can run on
/// `i64` while the default stays arbitrary precision.
#[derive(Clone, Copy, Debug, Default)]
pub struct UnitInterval<T = BigInt> {
    _int: PhantomData<T>,
}

impl<T> UnitInterval<T>
where
    T: Clone + Integer + Signed + Debug,
{
    pub fn new() -> Self {
        Self { _int: PhantomData }
    }

    /// Validates that `x` lies in `[0, 1]`.
    pub fn element(&self, x: Ratio<T>) -> Result<Ratio<T>, MvError> {
        if x < Ratio::zero() || x > Ratio::one() {
            return Err(MvError::OutsideUnitInterval(format!("{x:?}")));
        }
        Ok(x)
    }

    /// `{0, 1/q, …, 1}`: a finite under-approximation of the carrier.
    pub fn grid(&self, q: u32) -> Vec<Ratio<T>> {
        let q = q.max(1);
        let den = int_of::<T>(q as u64);
        (0..=q)
            .map(|i| Ratio::new(int_of::<T>(i as u64), den.clone()))
            .collect()
    }
}

fn int_of<T: Clone + Integer>(v: u64) -> T {
    // small values only; built by repeated doubling to stay within `Integer`
    let mut acc = T::zero();
    let mut bit = T::one();
    let mut v = v;
    while v > 0 {
        if v & 1 == 1 {
            acc = acc + bit.clone();
        }
        bit = bit.clone() + bit;
        v >>= 1;
    }
    acc
}

impl<T> MvOps for UnitInterval<T>
where
    T: Clone + Integer + Signed + Debug,
{
    type Elem = Ratio<T>;

    fn zero(&self) -> Ratio<T> {
        Ratio::zero()
    }

    fn one(&self) -> Ratio<T> {
        Ratio::one()
    }

    fn oplus(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        let s = a.clone() + b.clone();
        if s > Ratio::one() {
            Ratio::one()
        } else {
            s
        }
    }

    fn star(&self, a: &Ratio<T>) -> Ratio<T> {
        Ratio::one() - a.clone()
    }

    fn odot(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        let s = a.clone() + b.clone() - Ratio::one();
        if s < Ratio::zero() {
            Ratio::zero()
        } else {
            s
        }
    }

    fn arrow(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        let s = Ratio::one() - a.clone() + b.clone();
        if s > Ratio::one() {
            Ratio::one()
        } else {
            s
        }
    }

    fn join(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn meet(&self, a: &Ratio<T>, b: &Ratio<T>) -> Ratio<T> {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    fn leq(&self, a: &Ratio<T>, b: &Ratio<T>) -> bool {
        a <= b
    }
}
