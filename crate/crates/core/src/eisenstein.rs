//! Exact arithmetic in the ring of Eisenstein integers `ℤ[ω]`.
//!
//! `ω = -1/2 + i√3/2` is a primitive cube root of unity, so `ω² = -1 - ω`.
//! The ring is a lattice in the complex plane; [`EisensteinInt::norm`] is the
//! squared Euclidean length of a lattice point and is the binary quadratic
//! form `a² - ab + b²`.
//!
//! Coefficients are `i64`. The operator impls panic on overflow instead of
//! wrapping; the `checked_*` methods report it as [`Error::Overflow`]. All
//! magnitudes reached by the classification pipeline stay below `10⁶`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The lattice point `c1 + cw·ω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EisensteinInt {
    /// Coefficient of `1`.
    pub c1: i64,
    /// Coefficient of `ω`.
    pub cw: i64,
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);

    pub const fn new(c1: i64, cw: i64) -> Self {
        Self { c1, cw }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        match (self.c1.checked_add(rhs.c1), self.cw.checked_add(rhs.cw)) {
            (Some(c1), Some(cw)) => Ok(Self::new(c1, cw)),
            _ => Err(Error::Overflow("add")),
        }
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        match (self.c1.checked_sub(rhs.c1), self.cw.checked_sub(rhs.cw)) {
            (Some(c1), Some(cw)) => Ok(Self::new(c1, cw)),
            _ => Err(Error::Overflow("sub")),
        }
    }

    pub fn checked_neg(self) -> Result<Self> {
        match (self.c1.checked_neg(), self.cw.checked_neg()) {
            (Some(c1), Some(cw)) => Ok(Self::new(c1, cw)),
            _ => Err(Error::Overflow("neg")),
        }
    }

    /// `(a + bω)(c + dω) = (ac - bd) + (ad + bc - bd)ω`, from `ω² = -1 - ω`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b) = (self.c1 as i128, self.cw as i128);
        let (c, d) = (rhs.c1 as i128, rhs.cw as i128);
        let c1 = a * c - b * d;
        let cw = a * d + b * c - b * d;
        match (i64::try_from(c1), i64::try_from(cw)) {
            (Ok(c1), Ok(cw)) => Ok(Self::new(c1, cw)),
            _ => Err(Error::Overflow("mul")),
        }
    }

    /// `c1² - c1·cw + cw²`, or `None` if it does not fit in a `u64`.
    pub fn checked_norm(self) -> Option<u64> {
        let (a, b) = (self.c1 as i128, self.cw as i128);
        // a² - ab + b² = ((2a - b)² + 3b²) / 4, so it is never negative.
        let n = (a * a).checked_sub(a * b)?.checked_add(b * b)?;
        u64::try_from(n).ok()
    }

    /// Squared Euclidean length `c1² - c1·cw + cw²`.
    ///
    /// Panics if the result does not fit in a `u64`.
    pub fn norm(self) -> u64 {
        self.checked_norm().expect("Eisenstein norm overflowed u64")
    }

    /// Complex conjugate: `a + bω ↦ (a - b) - bω`, since `ω̄ = -1 - ω`.
    pub fn conjugate(self) -> Self {
        Self::new(self.c1 - self.cw, -self.cw)
    }

    /// Cartesian coordinates `(c1 - cw/2, cw·√3/2)`.
    pub fn to_cartesian(self) -> (f64, f64) {
        let (a, b) = (self.c1 as f64, self.cw as f64);
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }
}

/// The six units of `ℤ[ω]`, the elements of norm 1, as successive powers of
/// the primitive sixth root of unity `1 + ω`: `1, 1+ω, ω, -1, -1-ω, -ω`.
pub fn units() -> [EisensteinInt; 6] {
    [
        EisensteinInt::new(1, 0),
        EisensteinInt::new(1, 1),
        EisensteinInt::new(0, 1),
        EisensteinInt::new(-1, 0),
        EisensteinInt::new(-1, -1),
        EisensteinInt::new(0, -1),
    ]
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Eisenstein add overflowed")
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("Eisenstein sub overflowed")
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("Eisenstein neg overflowed")
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Eisenstein mul overflowed")
    }
}

impl From<i64> for EisensteinInt {
    fn from(n: i64) -> Self {
        Self::new(n, 0)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c1, self.cw) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => f.write_str("ω"),
            (0, -1) => f.write_str("-ω"),
            (0, b) => write!(f, "{b}ω"),
            (a, 1) => write!(f, "{a}+ω"),
            (a, -1) => write!(f, "{a}-ω"),
            (a, b) if b < 0 => write!(f, "{a}{b}ω"),
            (a, b) => write!(f, "{a}+{b}ω"),
        }
    }
}

/// Parses ω-coordinates written as `"c1,cw"`, e.g. `"8,4"` for `8 + 4ω`.
impl FromStr for EisensteinInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParsePoint {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (a, b) = s.split_once(',').ok_or_else(|| err("expected \"c1,cw\""))?;
        let c1 = a.trim().parse().map_err(|e| err(&format!("coefficient of 1: {e}")))?;
        let cw = b.trim().parse().map_err(|e| err(&format!("coefficient of ω: {e}")))?;
        Ok(Self::new(c1, cw))
    }
}

/// `⌊√n⌋`, computed exactly.
///
/// The floating-point square root only seeds an integer Newton iteration,
/// which then descends monotonically onto the exact floor.
pub fn integer_sqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let n = n as u128;
    // any start at or above ⌊√n⌋ converges downwards
    let mut x = (n as f64).sqrt() as u128 + 1;
    while x * x <= n {
        x += 1;
    }
    loop {
        let y = (x + n / x) / 2;
        if y >= x {
            return x as u64;
        }
        x = y;
    }
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = integer_sqrt(n);
    r * r == n
}

/// The unique squarefree `d` with `n = d·k²`.
///
/// `√n` is rational exactly when this is 1.
pub fn squarefree_part(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument("squarefree_part"));
    }
    let mut rest = n;
    let mut part = 1;
    let mut p = 2u64;
    while p * p <= rest {
        let mut odd = false;
        while rest.is_multiple_of(p) {
            rest /= p;
            odd = !odd;
        }
        if odd {
            part *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    Ok(part * rest)
}
