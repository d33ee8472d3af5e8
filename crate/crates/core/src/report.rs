//! Serializable reports for the command-line front end, plus exact text
//! formatting of surds.
//!
//! JSON field names are part of the public interface; see the guide's
//! "Report format" chapter for the schema.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diophantine::{self, UvwSolution, XyzSolution};
use crate::eisenstein::{integer_sqrt, squarefree_part};
use crate::search::{self, SearchWindow};
use crate::triangle::{CongruenceKey, LatticeTriangle, Sqrt3Length};

/// Lattice realizations of one side triple `(n_a, n_b, n_c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub sides: [u64; 3],
    pub triangles: Vec<LatticeTriangle>,
}

/// Both classification routes side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub xyz_solutions: Vec<XyzSolution>,
    /// `(y+z, x+z, x+y)` for each solution; sides are these times `√3`.
    pub side_triples: Vec<[u64; 3]>,
    pub realizations: Vec<Realization>,
    /// Congruence keys `sorted(3n_a², 3n_b², 3n_c²)` of the side triples.
    pub diophantine_keys: BTreeSet<CongruenceKey>,
    pub oracle_keys: BTreeSet<CongruenceKey>,
    pub oracle_window: u64,
    /// `diophantine_keys == oracle_keys`.
    pub agreement: bool,
}

/// Runs the Diophantine route and the lattice scan and compares them.
pub fn classify(window: SearchWindow) -> ClassificationReport {
    let xyz_solutions = diophantine::enumerate_xyz();
    let sides: Vec<[Sqrt3Length; 3]> = xyz_solutions.iter().map(XyzSolution::sides).collect();
    let realizations = sides
        .iter()
        .map(|s| Realization {
            sides: s.map(Sqrt3Length::get),
            triangles: search::realize_sides(*s),
        })
        .collect();
    let diophantine_keys = sides
        .iter()
        .map(|s| CongruenceKey::from_norms(s.map(Sqrt3Length::squared)).expect("side triples are proper"))
        .collect::<BTreeSet<_>>();
    let oracle_keys = search::enumerate_equable_classes(window);
    ClassificationReport {
        agreement: diophantine_keys == oracle_keys,
        xyz_solutions,
        side_triples: sides.iter().map(|s| s.map(Sqrt3Length::get)).collect(),
        realizations,
        diophantine_keys,
        oracle_keys,
        oracle_window: window.max_norm(),
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Diophantine route: 3xyz = 4(x+y+z), x <= y <= z")?;
        for (s, sides) in self.xyz_solutions.iter().zip(&self.side_triples) {
            writeln!(f, "  (x, y, z) = ({}, {}, {})  sides {}", s.x, s.y, s.z, sides_text(*sides))?;
        }
        writeln!(f, "Realizations with C = 0, one per point-group orbit:")?;
        for r in &self.realizations {
            writeln!(f, "  sides {}: {} triangle(s)", sides_text(r.sides), r.triangles.len())?;
            for t in &r.triangles {
                writeln!(f, "    {t}")?;
            }
        }
        writeln!(f, "Lattice scan, norm(A-C) and norm(B-C) <= {}:", self.oracle_window)?;
        if self.oracle_keys.is_empty() {
            writeln!(f, "  no equable triangles")?;
        }
        for k in &self.oracle_keys {
            writeln!(f, "  squared sides {k}")?;
        }
        writeln!(f, "Routes agree: {}", if self.agreement { "yes" } else { "NO" })?;
        write!(
            f,
            "Note: the lattice scan certifies only its window; completeness beyond it \
             rests on the Diophantine bounds."
        )
    }
}

/// Output of the `enumerate` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub xyz_solutions: Vec<XyzSolution>,
    pub side_triples: Vec<[u64; 3]>,
    pub bound: u64,
    pub uvw_bruteforce: Vec<UvwSolution>,
    /// Doubling every `(x, y, z)` reproduces the brute-force list within the bound.
    pub doubling_matches: bool,
    /// No brute-force solution has an odd component.
    pub all_even: bool,
}

pub fn enumerate(bound: u64) -> EnumerationReport {
    let xyz_solutions = diophantine::enumerate_xyz();
    let uvw_bruteforce = diophantine::enumerate_uvw_bruteforce(bound);
    let doubled: Vec<_> = xyz_solutions
        .iter()
        .map(XyzSolution::doubled)
        .filter(|s| s.w <= bound)
        .collect();
    EnumerationReport {
        side_triples: xyz_solutions.iter().map(|s| s.sides().map(Sqrt3Length::get)).collect(),
        doubling_matches: doubled == uvw_bruteforce,
        all_even: !uvw_bruteforce.iter().any(UvwSolution::has_odd_component),
        xyz_solutions,
        bound,
        uvw_bruteforce,
    }
}

impl fmt::Display for EnumerationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "3xyz = 4(x+y+z), bounded search x <= 2, y <= 3:")?;
        for (s, sides) in self.xyz_solutions.iter().zip(&self.side_triples) {
            writeln!(f, "  ({}, {}, {})  sides {}", s.x, s.y, s.z, sides_text(*sides))?;
        }
        writeln!(f, "3uvw = 16(u+v+w), same parity, brute force u <= v <= w <= {}:", self.bound)?;
        for s in &self.uvw_bruteforce {
            writeln!(f, "  ({}, {}, {})", s.u, s.v, s.w)?;
        }
        writeln!(f, "Doubling matches brute force: {}", yes_no(self.doubling_matches))?;
        write!(f, "All components even: {}", yes_no(self.all_even))
    }
}

/// Output of the `verify` subcommand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub triangle: LatticeTriangle,
    pub side_norms: [u64; 3],
    /// `n` per side when every side is `n√3`.
    pub sqrt3_sides: Option<[u64; 3]>,
    pub area_quanta: i64,
    pub perimeter: String,
    pub area: String,
    pub equable: bool,
}

pub fn verify(triangle: LatticeTriangle) -> Verdict {
    let side_norms = triangle.side_norms();
    let area_quanta = triangle.area_quanta();
    Verdict {
        triangle,
        side_norms,
        sqrt3_sides: triangle.sqrt3_sides().map(|s| s.map(Sqrt3Length::get)),
        area_quanta,
        perimeter: sqrt_sum_text(&side_norms),
        area: quarter_sqrt3_text(area_quanta.unsigned_abs()),
        equable: triangle.is_equable(),
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Triangle: {}", self.triangle)?;
        let [na, nb, nc] = self.side_norms;
        writeln!(f, "Squared sides |AC|², |BC|², |AB|²: {na}, {nb}, {nc}")?;
        let labels = ["a = |AC|", "b = |BC|", "c = |AB|"];
        for (label, &n) in labels.iter().zip(&self.side_norms) {
            let form = match Sqrt3Length::from_squared(n) {
                Some(s) => format!("n = {}", s.get()),
                None => "not of the form n√3".to_string(),
            };
            writeln!(f, "  {label} = √{n} = {}  ({form})", surd_text(n))?;
        }
        writeln!(f, "Area quanta D: {} (area = |D|·√3/4)", self.area_quanta)?;
        writeln!(f, "Perimeter: {}", self.perimeter)?;
        writeln!(f, "Area: {}", self.area)?;
        write!(f, "Equable: {}", yes_no(self.equable))
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn coefficient_surd(k: u64, d: u64) -> String {
    match (k, d) {
        (k, 1) => k.to_string(),
        (1, d) => format!("√{d}"),
        (k, d) => format!("{k}√{d}"),
    }
}

/// `√n` in simplest form `k√d`, e.g. `√48 = 4√3`.
pub fn surd_text(n: u64) -> String {
    if n == 0 {
        return "0".to_string();
    }
    let d = squarefree_part(n).expect("n > 0");
    coefficient_surd(integer_sqrt(n / d), d)
}

/// `Σ √nᵢ` with like surds collected, e.g. `[27, 192, 147] ↦ 18√3`.
pub fn sqrt_sum_text(terms: &[u64]) -> String {
    let mut by_radicand = std::collections::BTreeMap::<u64, u64>::new();
    for &n in terms.iter().filter(|&&n| n > 0) {
        let d = squarefree_part(n).expect("n > 0");
        *by_radicand.entry(d).or_default() += integer_sqrt(n / d);
    }
    if by_radicand.is_empty() {
        return "0".to_string();
    }
    by_radicand
        .into_iter()
        .map(|(d, k)| coefficient_surd(k, d))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// `q·√3/4` reduced, e.g. `72 ↦ 18√3`, `1 ↦ (1/4)√3`.
pub fn quarter_sqrt3_text(q: u64) -> String {
    if q == 0 {
        return "0".to_string();
    }
    let g = gcd(q, 4);
    let (num, den) = (q / g, 4 / g);
    if den == 1 {
        coefficient_surd(num, 3)
    } else {
        format!("({num}/{den})√3")
    }
}

fn sides_text(sides: [u64; 3]) -> String {
    sides.map(|n| coefficient_surd(n, 3)).join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{EQUABLE_EQUILATERAL, EQUABLE_SCALENE};
    use crate::EisensteinInt;

    #[test]
    fn surd_formatting() {
        assert_eq!(surd_text(48), "4√3");
        assert_eq!(surd_text(3), "√3");
        assert_eq!(surd_text(49), "7");
        assert_eq!(surd_text(0), "0");
        assert_eq!(sqrt_sum_text(&[27, 192, 147]), "18√3");
        assert_eq!(sqrt_sum_text(&[1, 1, 3]), "2 + √3");
        assert_eq!(sqrt_sum_text(&[2, 8, 3]), "3√2 + √3");
        assert_eq!(quarter_sqrt3_text(72), "18√3");
        assert_eq!(quarter_sqrt3_text(48), "12√3");
        assert_eq!(quarter_sqrt3_text(1), "(1/4)√3");
        assert_eq!(quarter_sqrt3_text(6), "(3/2)√3");
        assert_eq!(quarter_sqrt3_text(4), "√3");
    }

    #[test]
    fn verdicts_for_known_triangles() {
        let v = verify(EQUABLE_EQUILATERAL);
        assert!(v.equable);
        assert_eq!(v.sqrt3_sides, Some([4, 4, 4]));
        assert_eq!((v.perimeter.as_str(), v.area.as_str()), ("12√3", "12√3"));

        let v = verify(EQUABLE_SCALENE);
        assert!(v.equable);
        assert_eq!(v.sqrt3_sides, Some([3, 8, 7]));
        assert_eq!((v.perimeter.as_str(), v.area.as_str()), ("18√3", "18√3"));

        let t = LatticeTriangle::new(EisensteinInt::ONE, EisensteinInt::OMEGA, EisensteinInt::ZERO);
        let v = verify(t);
        assert!(!v.equable);
        assert_eq!(v.sqrt3_sides, None);
        assert_eq!(v.perimeter, "2 + √3");
        assert!(v.to_string().contains("Equable: no"));
    }

    #[test]
    fn classification_agrees_by_default() {
        let r = classify(SearchWindow::default());
        assert!(r.agreement);
        assert_eq!(r.side_triples, vec![[8, 7, 3], [4, 4, 4]]);
        assert_eq!(r.oracle_keys.len(), 2);
        assert!(r.realizations.iter().all(|r| !r.triangles.is_empty()));
        assert!(r.to_string().contains("Routes agree: yes"));
    }

    #[test]
    fn small_window_disagrees() {
        let r = classify(SearchWindow::new(20).unwrap());
        assert!(!r.agreement);
        assert!(r.oracle_keys.is_empty());
        assert!(r.to_string().contains("no equable triangles"));
    }

    #[test]
    fn enumeration_report() {
        let r = enumerate(100);
        assert!(r.doubling_matches && r.all_even);
        assert_eq!(r.uvw_bruteforce.len(), 2);
    }
}
