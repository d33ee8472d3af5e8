//! Exact arithmetic on the Eisenstein lattice and a classification of the
//! triangles on it whose perimeter equals their area.
//!
//! Lattice points are [`EisensteinInt`]s `a + bω` with `ω = -1/2 + i√3/2`.
//! Every side length of an equable lattice triangle has the form `n√3`, which
//! turns the classification into the Diophantine problem `3xyz = 4(x+y+z)`.
//! The crate solves that problem two ways:
//!
//! * [`diophantine::enumerate_xyz`] walks the bounded region left over after
//!   the analytic reduction, and
//! * [`search::enumerate_equable_classes`] brute-forces every triangle in a
//!   window of the lattice and sorts the hits into congruence classes.
//!
//! Both routes land on the same two classes: the equilateral triangle with
//! side `4√3` and the scalene triangle with sides `3√3, 7√3, 8√3`.
//!
//! ```
//! use eisenstein_equable::{EisensteinInt, LatticeTriangle};
//!
//! let t = LatticeTriangle::new(
//!     EisensteinInt::new(6, 3),
//!     EisensteinInt::new(8, 16),
//!     EisensteinInt::ZERO,
//! );
//! assert!(t.is_equable());
//! assert_eq!(t.side_norms(), [27, 192, 147]);
//! assert_eq!(t.area_quanta(), 72); // area = 72·√3/4 = 18√3
//! ```

pub mod diophantine;
pub mod eisenstein;
mod error;
pub mod render;
pub mod report;
pub mod search;
pub mod triangle;

pub use diophantine::{UvwSolution, XyzSolution};
pub use eisenstein::EisensteinInt;
pub use error::{Error, Result};
pub use search::SearchWindow;
pub use triangle::{CongruenceKey, LatticeTriangle, Sqrt3Length, EQUABLE_EQUILATERAL, EQUABLE_SCALENE};
