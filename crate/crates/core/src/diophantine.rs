//! Positive integer solutions of `3uvw = 16(u + v + w)` and of its halved
//! form `3xyz = 4(x + y + z)`.
//!
//! Write the sides of an equable lattice triangle as `a√3, b√3, c√3` (after
//! absorbing the `√3`, `a, b, c` are positive integers) and put
//! `u = -a+b+c`, `v = a-b+c`, `w = a+b-c`. Heron's formula for an equable
//! triangle then reduces to `3uvw = 16(u+v+w)`. The three quantities share
//! a parity and must be even, so `u = 2x, v = 2y, w = 2z` with
//! `3xyz = 4(x+y+z)`, and the sides are `(y+z)√3, (x+z)√3, (x+y)√3`.
//!
//! [`enumerate_xyz`] searches the finite region that the analytic bounds
//! leave. [`enumerate_uvw_bruteforce`] ignores those bounds and scans a box,
//! so it can catch a mistake in their derivation.
//!
//! The equation on its own also has mixed-parity solutions such as
//! `(1, 6, 56)`. They do not come from triangles: `u - v = 2(b - a)` and its
//! cyclic variants are even, so a triangle always yields `u ≡ v ≡ w (mod 2)`.
//! [`enumerate_uvw_unrestricted`] lists them anyway.

use std::thread;

use serde::{Deserialize, Serialize};

use crate::triangle::Sqrt3Length;

/// Default box for the brute-force scan of `3uvw = 16(u+v+w)`.
pub const DEFAULT_BRUTEFORCE_BOUND: u64 = 1000;

/// A solution `x ≤ y ≤ z` of `3xyz = 4(x+y+z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct XyzSolution {
    pub x: u64,
    pub y: u64,
    pub z: u64,
}

/// A solution `u ≤ v ≤ w` of `3uvw = 16(u+v+w)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UvwSolution {
    pub u: u64,
    pub v: u64,
    pub w: u64,
}

impl XyzSolution {
    pub fn satisfies_equation(&self) -> bool {
        3 * self.x * self.y * self.z == 4 * (self.x + self.y + self.z)
    }

    /// `(2x, 2y, 2z)`.
    pub fn doubled(&self) -> UvwSolution {
        UvwSolution { u: 2 * self.x, v: 2 * self.y, w: 2 * self.z }
    }

    /// Side coefficients `(y+z, x+z, x+y)`; the sides are these times `√3`.
    pub fn sides(&self) -> [Sqrt3Length; 3] {
        xyz_to_sides(self)
    }
}

impl UvwSolution {
    pub fn satisfies_equation(&self) -> bool {
        3 * self.u * self.v * self.w == 16 * (self.u + self.v + self.w)
    }

    /// `u ≡ v ≡ w (mod 2)`, which holds for every triple built from a
    /// triangle's sides.
    pub fn same_parity(&self) -> bool {
        self.u % 2 == self.v % 2 && self.v % 2 == self.w % 2
    }

    pub fn has_odd_component(&self) -> bool {
        self.components().iter().any(|c| c % 2 == 1)
    }

    pub fn components(&self) -> [u64; 3] {
        [self.u, self.v, self.w]
    }
}

/// All solutions of `3xyz = 4(x+y+z)` with `x ≤ y ≤ z`, ascending.
///
/// With `x ≤ y ≤ z`, solving for `z` gives `z = 4(x+y)/(3xy-4)`, and
/// `y ≤ z` turns into `3xy² - 8y - 4x ≤ 0`, i.e.
/// `y ≤ (4 + √(16 + 12x²))/(3x)`. Combining with `x ≤ y` gives
/// `3x² ≤ 4 + √(16 + 12x²)`, hence `(3x² - 4)² ≤ 16 + 12x²`, which is
/// `9x⁴ - 36x² ≤ 0`, so `x ≤ 2`. The bound on `y` decreases in `x`, so
/// `y ≤ (4 + √28)/3 ≈ 3.10`, i.e. `y ≤ 3`.
pub fn enumerate_xyz() -> Vec<XyzSolution> {
    const MAX_X: u64 = 2;
    const MAX_Y: u64 = 3;
    let mut out = Vec::new();
    for x in 1..=MAX_X {
        for y in x..=MAX_Y {
            let denom = 3 * x * y;
            if denom <= 4 {
                continue;
            }
            let denom = denom - 4;
            let numer = 4 * (x + y);
            if numer % denom != 0 {
                continue;
            }
            let z = numer / denom;
            if z >= y {
                out.push(XyzSolution { x, y, z });
            }
        }
    }
    out.sort();
    out
}

/// Exhaustive scan of `u ≤ v ≤ w ≤ bound` for same-parity solutions of
/// `3uvw = 16(u+v+w)`.
///
/// Uses none of the bounds that [`enumerate_xyz`] relies on, and does not
/// assume the solutions are even. Returns an ascending list; empty when
/// `bound` is 0.
pub fn enumerate_uvw_bruteforce(bound: u64) -> Vec<UvwSolution> {
    scan_uvw(1..=bound, bound, true)
}

/// Every solution of `3uvw = 16(u+v+w)` with `u ≤ v ≤ w ≤ bound`, mixed
/// parity included.
pub fn enumerate_uvw_unrestricted(bound: u64) -> Vec<UvwSolution> {
    scan_uvw(1..=bound, bound, false)
}

/// [`enumerate_uvw_bruteforce`] with the outer loop over `u` split across
/// `workers` threads. The result does not depend on `workers`.
pub fn enumerate_uvw_bruteforce_parallel(bound: u64, workers: usize) -> Vec<UvwSolution> {
    let workers = workers.max(1) as u64;
    let mut out: Vec<UvwSolution> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|k| {
                // strided so the expensive small-u rows are spread out
                s.spawn(move || {
                    let us = (1..=bound).filter(move |u| (u - 1) % workers == k);
                    scan_uvw(us, bound, true)
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    out.sort();
    out
}

fn scan_uvw(us: impl Iterator<Item = u64>, bound: u64, same_parity: bool) -> Vec<UvwSolution> {
    let mut out = Vec::new();
    for u in us {
        for v in u..=bound {
            for w in v..=bound {
                if 3 * u * v * w == 16 * (u + v + w) {
                    let s = UvwSolution { u, v, w };
                    if !same_parity || s.same_parity() {
                        out.push(s);
                    }
                }
            }
        }
    }
    out
}

/// `(y+z, x+z, x+y)`: the sides `a, b, c` as multiples of `√3`.
pub fn xyz_to_sides(s: &XyzSolution) -> [Sqrt3Length; 3] {
    [s.y + s.z, s.x + s.z, s.x + s.y]
        .map(|n| Sqrt3Length::new(n).expect("solutions are positive"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::heron_equable_identity;

    fn xyz(x: u64, y: u64, z: u64) -> XyzSolution {
        XyzSolution { x, y, z }
    }

    fn uvw(u: u64, v: u64, w: u64) -> UvwSolution {
        UvwSolution { u, v, w }
    }

    #[test]
    fn xyz_examples() {
        let sols = enumerate_xyz();
        assert_eq!(sols, vec![xyz(1, 2, 6), xyz(2, 2, 2)]);
        assert!(sols.iter().all(XyzSolution::satisfies_equation));
    }

    #[test]
    fn uvw_examples() {
        assert_eq!(enumerate_uvw_bruteforce(100), vec![uvw(2, 4, 12), uvw(4, 4, 4)]);
        assert_eq!(3 * 2 * 4 * 12, 288);
        assert_eq!(16 * (2 + 4 + 12), 288);
        assert!(enumerate_uvw_bruteforce(3).is_empty());
        assert!(enumerate_uvw_bruteforce(0).is_empty());
    }

    #[test]
    fn unrestricted_solutions_have_mixed_parity() {
        let all = enumerate_uvw_unrestricted(100);
        assert_eq!(
            all,
            vec![uvw(1, 6, 56), uvw(1, 8, 18), uvw(2, 3, 40), uvw(2, 4, 12), uvw(2, 5, 8), uvw(4, 4, 4)]
        );
        for s in &all {
            assert!(s.satisfies_equation());
            // no all-odd solution exists
            assert!(!s.components().iter().all(|c| c % 2 == 1));
            if !s.same_parity() {
                // a = (v + w)/2 etc. would not be integral
                assert!((s.v + s.w) % 2 == 1 || (s.u + s.w) % 2 == 1 || (s.u + s.v) % 2 == 1);
            }
        }
        let paired: Vec<_> = all.into_iter().filter(UvwSolution::same_parity).collect();
        assert_eq!(paired, enumerate_uvw_bruteforce(100));
    }

    #[test]
    fn side_examples() {
        let get = |s: [Sqrt3Length; 3]| s.map(Sqrt3Length::get);
        assert_eq!(get(xyz_to_sides(&xyz(1, 2, 6))), [8, 7, 3]);
        assert_eq!(get(xyz_to_sides(&xyz(2, 2, 2))), [4, 4, 4]);
        for s in enumerate_xyz() {
            assert!(heron_equable_identity(get(s.sides())));
        }
    }

    #[test]
    fn doubling_matches_bruteforce_for_every_small_bound() {
        for bound in 1..=60 {
            let doubled: Vec<_> = enumerate_xyz()
                .iter()
                .map(XyzSolution::doubled)
                .filter(|s| s.w <= bound)
                .collect();
            assert_eq!(doubled, enumerate_uvw_bruteforce(bound), "bound {bound}");
        }
    }

    #[test]
    fn parallel_split_is_deterministic() {
        let serial = enumerate_uvw_bruteforce(150);
        for workers in [0, 1, 2, 3, 7] {
            assert_eq!(enumerate_uvw_bruteforce_parallel(150, workers), serial);
        }
    }

    #[test]
    fn side_triples_are_proper_triangles_with_even_perimeter() {
        for s in enumerate_xyz() {
            let [a, b, c] = s.sides().map(Sqrt3Length::get);
            assert_eq!((a + b + c) % 2, 0);
            assert!(a < b + c && b < a + c && c < a + b);
        }
    }
}
