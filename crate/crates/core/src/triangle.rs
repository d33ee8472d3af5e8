//! Exact geometry of triangles with vertices on the Eisenstein lattice.
//!
//! For a lattice triangle every squared side length is an integer (a norm),
//! and the signed area is `(√3/4)·D` for the integer [`area_quanta`] `D`.
//! Equability (perimeter = area) is decided with integer arithmetic only:
//! a sum of square roots of integers can be rational only when each term is,
//! which forces every side to be `n√3` for a positive integer `n`.
//!
//! [`area_quanta`]: LatticeTriangle::area_quanta

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::eisenstein::{integer_sqrt, squarefree_part, EisensteinInt};
use crate::error::{Error, Result};

/// A side length `n√3` with `n ≥ 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Sqrt3Length(u64);

impl Sqrt3Length {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument("Sqrt3Length"));
        }
        Ok(Self(n))
    }

    /// The coefficient `n` of `√3`.
    pub fn get(self) -> u64 {
        self.0
    }

    /// The squared length `3n²`.
    pub fn squared(self) -> u64 {
        3 * self.0 * self.0
    }

    /// Writes `n` as `n√3` when `squared_length = 3n²`.
    pub fn from_squared(squared_length: u64) -> Option<Self> {
        if squared_length == 0 || !squared_length.is_multiple_of(3) {
            return None;
        }
        let q = squared_length / 3;
        let n = integer_sqrt(q);
        (n * n == q).then_some(Self(n))
    }
}

impl TryFrom<u64> for Sqrt3Length {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

impl From<Sqrt3Length> for u64 {
    fn from(n: Sqrt3Length) -> u64 {
        n.0
    }
}

impl fmt::Display for Sqrt3Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            1 => f.write_str("√3"),
            n => write!(f, "{n}√3"),
        }
    }
}

/// Returns `n` if `squared_length = 3n²` for an integer `n ≥ 1`.
pub fn sqrt3_side_decomposition(squared_length: u64) -> Option<Sqrt3Length> {
    Sqrt3Length::from_squared(squared_length)
}

/// Whether `Σ √mᵢ` is rational, for positive integers `mᵢ`.
///
/// A sum of square roots of positive integers is rational exactly when every
/// summand is, i.e. when each `mᵢ` is a perfect square. The empty sum is 0.
pub fn sum_sqrt_is_rational(terms: &[u64]) -> Result<bool> {
    let mut rational = true;
    for &m in terms {
        rational &= squarefree_part(m)? == 1;
    }
    Ok(rational)
}

/// Exact integer form of Heron's identity for an equable triangle whose sides
/// are `n₁√3, n₂√3, n₃√3`:
///
/// `(a+b+c)(-a+b+c)(a-b+c)(a+b-c) = 16(a+b+c)²`.
///
/// Substituting `a = n₁√3` etc. puts `(√3)⁴ = 9` on the left and `16·3 = 48`
/// on the right, so with `S = n₁+n₂+n₃` the check is
/// `9·S·(-n₁+n₂+n₃)(n₁-n₂+n₃)(n₁+n₂-n₃) = 48·S²`.
pub fn heron_equable_identity(n: [u64; 3]) -> bool {
    let [a, b, c] = n.map(i128::from);
    let s = a + b + c;
    9 * s * (-a + b + c) * (a - b + c) * (a + b - c) == 48 * s * s
}

/// SSS congruence class: the sorted squared side lengths of a triangle.
///
/// Euclidean motions, reflections included, preserve exactly the multiset of
/// side lengths, so two triangles share a key iff they are congruent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[u64; 3]", into = "[u64; 3]")]
pub struct CongruenceKey([u64; 3]);

impl CongruenceKey {
    /// Sorts the squared side lengths and checks that they bound a real,
    /// non-degenerate triangle.
    pub fn from_norms(mut norms: [u64; 3]) -> Result<Self> {
        norms.sort_unstable();
        let [n1, n2, n3] = norms.map(i128::from);
        // √n1 + √n2 > √n3  ⇔  n1 + n2 + 2√(n1·n2) > n3
        let strict = n1 > 0 && (n3 < n1 + n2 || (n3 - n1 - n2).pow(2) < 4 * n1 * n2);
        if !strict {
            return Err(Error::TriangleInequality(norms));
        }
        Ok(Self(norms))
    }

    pub fn norms(self) -> [u64; 3] {
        self.0
    }
}

impl TryFrom<[u64; 3]> for CongruenceKey {
    type Error = Error;
    fn try_from(norms: [u64; 3]) -> Result<Self> {
        Self::from_norms(norms)
    }
}

impl From<CongruenceKey> for [u64; 3] {
    fn from(k: CongruenceKey) -> [u64; 3] {
        k.0
    }
}

impl fmt::Display for CongruenceKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a}, {b}, {c})")
    }
}

/// The equable equilateral triangle `(8+4ω, 4+8ω, 0)`, side `4√3`.
pub const EQUABLE_EQUILATERAL: LatticeTriangle =
    LatticeTriangle::new(EisensteinInt::new(8, 4), EisensteinInt::new(4, 8), EisensteinInt::ZERO);

/// The equable scalene triangle `(6+3ω, 8+16ω, 0)`, sides `3√3, 8√3, 7√3`.
pub const EQUABLE_SCALENE: LatticeTriangle =
    LatticeTriangle::new(EisensteinInt::new(6, 3), EisensteinInt::new(8, 16), EisensteinInt::ZERO);

/// A triangle with ordered vertices `A`, `B`, `C` on the lattice.
///
/// Sides follow the usual labels: `a = |AC|`, `b = |BC|`, `c = |AB|`.
/// Degenerate triangles are representable; the classification methods reject
/// them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeTriangle {
    pub a: EisensteinInt,
    pub b: EisensteinInt,
    pub c: EisensteinInt,
}

impl LatticeTriangle {
    pub const fn new(a: EisensteinInt, b: EisensteinInt, c: EisensteinInt) -> Self {
        Self { a, b, c }
    }

    pub fn vertices(&self) -> [EisensteinInt; 3] {
        [self.a, self.b, self.c]
    }

    /// Applies `f` to every vertex.
    pub fn map(&self, mut f: impl FnMut(EisensteinInt) -> EisensteinInt) -> Self {
        Self::new(f(self.a), f(self.b), f(self.c))
    }

    pub fn translate(&self, by: EisensteinInt) -> Self {
        self.map(|z| z + by)
    }

    /// `[|AC|², |BC|², |AB|²]`.
    pub fn side_norms(&self) -> [u64; 3] {
        [
            (self.a - self.c).norm(),
            (self.b - self.c).norm(),
            (self.a - self.b).norm(),
        ]
    }

    /// The integer `D = u₁v₂ - u₂v₁` for `u = A - C`, `v = B - C` in
    /// ω-coordinates. The signed area is `(√3/4)·D`, positive when `A, B, C`
    /// are in counter-clockwise order.
    pub fn area_quanta(&self) -> i64 {
        let u = self.a - self.c;
        let v = self.b - self.c;
        let d = u.c1 as i128 * v.cw as i128 - u.cw as i128 * v.c1 as i128;
        i64::try_from(d).expect("area overflowed i64")
    }

    pub fn is_degenerate(&self) -> bool {
        self.area_quanta() == 0
    }

    /// Each side as `n√3`, or `None` if some side is not of that form.
    pub fn sqrt3_sides(&self) -> Option<[Sqrt3Length; 3]> {
        let [na, nb, nc] = self.side_norms().map(Sqrt3Length::from_squared);
        Some([na?, nb?, nc?])
    }

    /// Exact test of perimeter = area.
    ///
    /// If the triangle is equable then `√(3a²) + √(3b²) + √(3c²)` equals the
    /// rational `(3/4)·D`, so each `3·side²` is a perfect square and each
    /// side is `nᵢ√3`. Then the perimeter is `√3·Σnᵢ` and the area is
    /// `(√3/4)·|D|`; they agree iff `4·Σnᵢ = |D|`.
    pub fn is_equable(&self) -> bool {
        let d = self.area_quanta();
        if d == 0 {
            return false;
        }
        match self.sqrt3_sides() {
            Some(sides) => 4 * sides.iter().map(|n| n.get()).sum::<u64>() == d.unsigned_abs(),
            None => false,
        }
    }

    pub fn perimeter_f64(&self) -> f64 {
        let [p, q, r] = self.vertices().map(EisensteinInt::to_cartesian);
        let dist = |s: (f64, f64), t: (f64, f64)| (s.0 - t.0).hypot(s.1 - t.1);
        dist(p, q) + dist(q, r) + dist(r, p)
    }

    pub fn area_f64(&self) -> f64 {
        let [p, q, r] = self.vertices().map(EisensteinInt::to_cartesian);
        ((q.0 - p.0) * (r.1 - p.1) - (r.0 - p.0) * (q.1 - p.1)).abs() / 2.0
    }

    /// Floating-point equability check, independent of the exact route.
    ///
    /// Three coincident vertices (perimeter 0) do not count.
    pub fn is_equable_float(&self, tol: f64) -> bool {
        let perimeter = self.perimeter_f64();
        perimeter >= tol && (perimeter - self.area_f64()).abs() < tol
    }

    pub fn congruence_key(&self) -> Result<CongruenceKey> {
        if self.is_degenerate() {
            return Err(Error::Degenerate);
        }
        CongruenceKey::from_norms(self.side_norms())
    }
}

impl fmt::Display for LatticeTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A={}, B={}, C={}", self.a, self.b, self.c)
    }
}
