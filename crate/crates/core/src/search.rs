//! Lattice-level verification: points of a given norm, realizations of side
//! triples as lattice triangles, and an exhaustive scan for equable
//! triangles inside a window.
//!
//! The scan only certifies its window. It pins the third vertex at the
//! origin (translations are motions) and fixes an orientation (reflections
//! are motions), then tests every remaining pair with
//! [`LatticeTriangle::is_equable`].

use std::collections::BTreeSet;
use std::thread;

use serde::{Deserialize, Serialize};

use crate::eisenstein::{integer_sqrt, units, EisensteinInt};
use crate::error::{Error, Result};
use crate::triangle::{CongruenceKey, LatticeTriangle, Sqrt3Length};

/// Default bound on `norm(A - C)` and `norm(B - C)`.
///
/// Well above the largest squared side (192) of any equable triangle, so the
/// scan can disagree with the Diophantine route if that route missed one.
pub const DEFAULT_MAX_NORM: u64 = 300;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SearchWindow {
    max_norm: u64,
}

impl SearchWindow {
    pub fn new(max_norm: u64) -> Result<Self> {
        if max_norm == 0 {
            return Err(Error::EmptyWindow);
        }
        Ok(Self { max_norm })
    }

    pub fn max_norm(&self) -> u64 {
        self.max_norm
    }
}

impl Default for SearchWindow {
    fn default() -> Self {
        Self { max_norm: DEFAULT_MAX_NORM }
    }
}

/// Sign of the area that the scan keeps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `area_quanta > 0`.
    #[default]
    CounterClockwise,
    /// `area_quanta < 0`.
    Clockwise,
}

impl Orientation {
    fn admits(self, area_quanta: i64) -> bool {
        match self {
            Orientation::CounterClockwise => area_quanta > 0,
            Orientation::Clockwise => area_quanta < 0,
        }
    }
}

/// One of the 12 lattice symmetries fixing the origin: `z ↦ unit·z`, or
/// `z ↦ unit·z̄` when `reflect` is set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PointGroupElement {
    pub unit: EisensteinInt,
    pub reflect: bool,
}

impl PointGroupElement {
    pub fn apply(&self, z: EisensteinInt) -> EisensteinInt {
        let z = if self.reflect { z.conjugate() } else { z };
        self.unit * z
    }
}

pub fn point_group() -> impl Iterator<Item = PointGroupElement> {
    [false, true]
        .into_iter()
        .flat_map(|reflect| units().into_iter().map(move |unit| PointGroupElement { unit, reflect }))
}

/// All `z` with `norm(z) = n`, ordered by `(c1, cw)`.
///
/// Since `a² - ab + b² = ½(a² + b² + (a-b)²) ≥ ½(a² + b²)`, both coefficients
/// satisfy `|c| ≤ √(2n)`, so scanning that box is exhaustive.
pub fn points_of_norm(n: u64) -> Vec<EisensteinInt> {
    let r = integer_sqrt(2 * n) as i64;
    let mut out = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            let z = EisensteinInt::new(a, b);
            if z.norm() == n {
                out.push(z);
            }
        }
    }
    out
}

/// All nonzero `z` with `norm(z) ≤ max_norm`, ordered by `(norm, c1, cw)`.
pub fn points_within(max_norm: u64) -> Vec<EisensteinInt> {
    let r = integer_sqrt(2 * max_norm) as i64;
    let mut out: Vec<_> = (-r..=r)
        .flat_map(|a| (-r..=r).map(move |b| EisensteinInt::new(a, b)))
        .filter(|z| !z.is_zero() && z.norm() <= max_norm)
        .collect();
    out.sort_by_key(|z| (z.norm(), *z));
    out
}

/// Lexicographically least image of `(A, B, 0)` under the point group,
/// optionally also allowing `A ↔ B`.
pub fn canonical_form(t: &LatticeTriangle, allow_swap: bool) -> LatticeTriangle {
    let t = t.translate(-t.c);
    let swaps: &[bool] = if allow_swap { &[false, true] } else { &[false] };
    point_group()
        .flat_map(|g| {
            swaps.iter().map(move |&swap| {
                let (a, b) = if swap { (t.b, t.a) } else { (t.a, t.b) };
                LatticeTriangle::new(g.apply(a), g.apply(b), EisensteinInt::ZERO)
            })
        })
        .min()
        .expect("point group is nonempty")
}

/// Whether some point-group element (after moving `C` to the origin) maps
/// one triangle onto the other, vertex for vertex.
pub fn point_group_equivalent(s: &LatticeTriangle, t: &LatticeTriangle) -> bool {
    canonical_form(s, false) == canonical_form(t, false)
}

/// All triangles `(A, B, 0)` with `|A| = n_a√3`, `|B| = n_b√3`,
/// `|A - B| = n_c√3`, one representative per point-group orbit.
///
/// Representatives are [`canonical_form`]s; `A ↔ B` is allowed in the
/// canonicalization only when `n_a = n_b`, so every representative keeps
/// the requested side assignment. Side triples violating the strict triangle
/// inequality have no realization and give an empty list.
pub fn realize_sides(sides: [Sqrt3Length; 3]) -> Vec<LatticeTriangle> {
    let [na, nb, nc] = sides.map(Sqrt3Length::squared);
    let allow_swap = na == nb;
    let bs = points_of_norm(nb);
    let mut found = BTreeSet::new();
    for a in points_of_norm(na) {
        for &b in &bs {
            let t = LatticeTriangle::new(a, b, EisensteinInt::ZERO);
            if (a - b).norm() == nc && !t.is_degenerate() {
                found.insert(canonical_form(&t, allow_swap));
            }
        }
    }
    found.into_iter().collect()
}

/// Every equable triangle `(A, B, 0)` with `A, B` in the window and the given
/// orientation, ordered by `(A, B)`.
pub fn equable_triangles(window: SearchWindow, orientation: Orientation) -> Vec<LatticeTriangle> {
    let points = points_within(window.max_norm());
    scan_pairs(&points, &points, orientation)
}

fn scan_pairs(
    outer: &[EisensteinInt],
    inner: &[EisensteinInt],
    orientation: Orientation,
) -> Vec<LatticeTriangle> {
    let mut out = Vec::new();
    for &a in outer {
        for &b in inner {
            let t = LatticeTriangle::new(a, b, EisensteinInt::ZERO);
            let d = t.area_quanta();
            // degenerate pairs fail here before any norm work
            if orientation.admits(d) && t.is_equable() {
                out.push(t);
            }
        }
    }
    out
}

/// Congruence classes of the equable triangles found in the window.
pub fn enumerate_equable_classes(window: SearchWindow) -> BTreeSet<CongruenceKey> {
    enumerate_equable_classes_oriented(window, Orientation::default())
}

pub fn enumerate_equable_classes_oriented(
    window: SearchWindow,
    orientation: Orientation,
) -> BTreeSet<CongruenceKey> {
    classes(&equable_triangles(window, orientation))
}

/// [`enumerate_equable_classes`] with the vertex `A` partitioned across
/// `workers` threads. The result does not depend on `workers`.
pub fn enumerate_equable_classes_parallel(
    window: SearchWindow,
    workers: usize,
) -> BTreeSet<CongruenceKey> {
    let points = points_within(window.max_norm());
    let chunk = points.len().div_ceil(workers.max(1)).max(1);
    thread::scope(|s| {
        let handles: Vec<_> = points
            .chunks(chunk)
            .map(|outer| {
                let points = &points;
                s.spawn(move || classes(&scan_pairs(outer, points, Orientation::default())))
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("worker panicked"))
            .collect()
    })
}

fn classes(triangles: &[LatticeTriangle]) -> BTreeSet<CongruenceKey> {
    triangles
        .iter()
        .map(|t| t.congruence_key().expect("equable triangles are non-degenerate"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    fn sides(a: u64, b: u64, c: u64) -> [Sqrt3Length; 3] {
        [a, b, c].map(|n| Sqrt3Length::new(n).unwrap())
    }

    fn key(n: [u64; 3]) -> CongruenceKey {
        CongruenceKey::from_norms(n).unwrap()
    }

    #[test]
    fn points_of_norm_examples() {
        let mut ones = points_of_norm(1);
        let mut us = units().to_vec();
        ones.sort();
        us.sort();
        assert_eq!(ones, us);
        assert!(points_of_norm(2).is_empty());
        let p48 = points_of_norm(48);
        assert_eq!(p48.len(), 6);
        for z in [e(8, 4), e(4, 8), e(4, -4)] {
            assert!(p48.contains(&z));
        }
    }

    #[test]
    fn points_of_norm_matches_wide_box() {
        for n in 1..=200u64 {
            let wide: Vec<_> = (-40..=40)
                .flat_map(|a| (-40..=40).map(move |b| e(a, b)))
                .filter(|z| z.norm() == n)
                .collect();
            assert_eq!(points_of_norm(n), wide, "norm {n}");
        }
    }

    #[test]
    fn point_group_has_twelve_distinct_elements() {
        let z = e(3, 1);
        let images: BTreeSet<_> = point_group().map(|g| g.apply(z)).collect();
        assert_eq!(images.len(), 12);
        assert!(images.iter().all(|w| w.norm() == z.norm()));
    }

    #[test]
    fn orbit_sizes_divide_twelve() {
        for n in 1..=300u64 {
            let pts = points_of_norm(n);
            let set: BTreeSet<_> = pts.iter().copied().collect();
            for &z in &pts {
                let orbit: BTreeSet<_> = point_group().map(|g| g.apply(z)).collect();
                assert_eq!(12 % orbit.len(), 0);
                assert!(orbit.is_subset(&set));
                for u in units() {
                    assert_eq!(points_of_norm((u * z).norm()).len(), pts.len());
                }
            }
        }
    }

    #[test]
    fn realize_examples() {
        let eq = realize_sides(sides(4, 4, 4));
        let paper_a = LatticeTriangle::new(e(8, 4), e(4, 8), EisensteinInt::ZERO);
        assert!(eq.iter().any(|t| point_group_equivalent(t, &paper_a)
            || point_group_equivalent(t, &LatticeTriangle::new(paper_a.b, paper_a.a, paper_a.c))));

        let sc = realize_sides(sides(3, 8, 7));
        let paper_b = LatticeTriangle::new(e(6, 3), e(8, 16), EisensteinInt::ZERO);
        assert!(sc.iter().any(|t| point_group_equivalent(t, &paper_b)));

        let unit = realize_sides(sides(1, 1, 1));
        assert!(!unit.is_empty());
        assert!(unit.iter().all(|t| t.side_norms() == [3, 3, 3]));
    }

    #[test]
    fn realizations_of_equable_triples_are_equable() {
        for s in [sides(4, 4, 4), sides(3, 8, 7), sides(8, 7, 3)] {
            let found = realize_sides(s);
            assert!(!found.is_empty());
            let total: u64 = s.iter().map(|n| n.get()).sum();
            for t in found {
                assert_eq!(t.area_quanta().unsigned_abs(), 4 * total);
                assert!(t.is_equable());
                assert_eq!(t.side_norms(), s.map(Sqrt3Length::squared));
            }
        }
    }

    #[test]
    fn realize_rejects_flat_triples() {
        assert!(realize_sides(sides(1, 1, 2)).is_empty());
        assert!(realize_sides(sides(1, 1, 5)).is_empty());
    }

    #[test]
    fn classes_small_and_default_windows() {
        assert!(enumerate_equable_classes(SearchWindow::new(20).unwrap()).is_empty());
        let expected: BTreeSet<_> = [key([48, 48, 48]), key([27, 147, 192])].into();
        let w = SearchWindow::default();
        assert_eq!(enumerate_equable_classes(w), expected);
        assert_eq!(enumerate_equable_classes_oriented(w, Orientation::Clockwise), expected);
        for workers in [1, 3, 8] {
            assert_eq!(enumerate_equable_classes_parallel(w, workers), expected);
        }
    }

    #[test]
    fn scan_hits_pass_every_check() {
        for t in equable_triangles(SearchWindow::default(), Orientation::CounterClockwise) {
            assert!(t.is_equable());
            assert!(t.is_equable_float(1e-9));
            assert!(t.sqrt3_sides().is_some());
            assert!(t.area_quanta() > 0);
        }
    }

    #[test]
    fn window_rejects_zero() {
        assert_eq!(SearchWindow::new(0), Err(Error::EmptyWindow));
        assert_eq!(SearchWindow::default().max_norm(), 300);
    }
}
