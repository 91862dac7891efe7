//! M(i,j,k) torus maps for the four classified types.
//!
//! A map of type T1–T4 is a j-row, i-column vertex grid glued into a torus:
//! row r+1 sits above row r, and the seam above row j−1 attaches to row 0
//! with columns shifted by k. Between consecutive rows lies either a strip
//! of quadrangles or a strip of triangles (all diagonals up-right); the
//! per-type strip layout fixes the two vertex classes and their links.

use crate::error::DsemError;
use crate::map::CombMap;
use crate::seq::{FaceSeq, LinkLetter, LinkSeq};
use std::fmt;
use std::str::FromStr;

/// Tags for the 22 DSEM types. Only T1–T4 have torus constructions here;
/// the rest name planar catalog entries.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DsemTag(pub u8);

impl DsemTag {
    pub const T1: DsemTag = DsemTag(1);
    pub const T2: DsemTag = DsemTag(2);
    pub const T3: DsemTag = DsemTag(3);
    pub const T4: DsemTag = DsemTag(4);

    pub fn all_torus() -> [DsemTag; 4] {
        [Self::T1, Self::T2, Self::T3, Self::T4]
    }
}

impl fmt::Display for DsemTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

impl FromStr for DsemTag {
    type Err = DsemError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let n: u8 = t
            .strip_prefix(['T', 't'])
            .unwrap_or(t)
            .parse()
            .map_err(|_| DsemError::InadmissibleParams(format!("bad type tag {s:?}")))?;
        if (1..=22).contains(&n) {
            Ok(DsemTag(n))
        } else {
            Err(DsemError::InadmissibleParams(format!("bad type tag {s:?}")))
        }
    }
}

/// Kind of face strip between two consecutive rows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strip {
    Quad,
    Tri,
}

/// Static data of a torus-classified type: face-sequence pair, link
/// patterns (keyed by face-sequence, letters under the canonical F1 < F2
/// convention) and the strip layout of one vertical period.
#[derive(Clone, Debug)]
pub struct DsemType {
    pub tag: DsemTag,
    pub pair: (FaceSeq, FaceSeq),
    pub link_patterns: [(FaceSeq, LinkSeq); 2],
    pub strip_layout: Vec<Strip>,
}

impl DsemType {
    /// Type data for T1–T4 (the types with an M(i,j,k) classification).
    pub fn torus(tag: DsemTag) -> Result<DsemType, DsemError> {
        use Strip::*;
        let fs = |s: &str| FaceSeq::parse(s).unwrap();
        let ls = |s: &str| LinkSeq::parse(s).unwrap();
        let (pair, links, layout): ((&str, &str), (&str, &str), Vec<Strip>) = match tag {
            DsemTag::T1 => (
                ("3^3.4^2", "3^6"),
                ("F1^5.F2^2", "F1^2.F2.F1^2.F2"),
                vec![Quad, Tri, Tri],
            ),
            DsemTag::T2 => (
                ("3^3.4^2", "3^6"),
                ("F1^5.F2^2", "F1^2.F2^4"),
                vec![Quad, Tri, Tri, Tri],
            ),
            DsemTag::T3 => (
                ("3^3.4^2", "4^4"),
                ("F1^4.F2^3", "F1^3.F2.F1^3.F2"),
                vec![Quad, Quad, Tri],
            ),
            DsemTag::T4 => (
                ("3^3.4^2", "4^4"),
                ("F1^4.F2^3", "F1^3.F2^5"),
                vec![Quad, Quad, Quad, Tri],
            ),
            _ => {
                return Err(DsemError::InadmissibleParams(format!(
                    "{tag} has no torus construction"
                )))
            }
        };
        let (f1, f2) = (fs(pair.0), fs(pair.1));
        debug_assert!(f1 < f2);
        Ok(DsemType {
            tag,
            link_patterns: [(f1.clone(), ls(links.0)), (f2.clone(), ls(links.1))],
            pair: (f1, f2),
            strip_layout: layout,
        })
    }

    pub fn strip_period(&self) -> u32 {
        self.strip_layout.len() as u32
    }

    /// Required divisor of j.
    pub fn row_modulus(tag: DsemTag) -> u32 {
        match tag {
            DsemTag::T1 | DsemTag::T3 => 3,
            DsemTag::T2 | DsemTag::T4 => 4,
            _ => 0,
        }
    }

    pub fn link_pattern(&self, fs: &FaceSeq) -> Option<&LinkSeq> {
        self.link_patterns
            .iter()
            .find(|(f, _)| f == fs)
            .map(|(_, l)| l)
    }

    /// Total rightward drift of the diagonal path over j rows: one column
    /// per triangle strip crossed.
    pub fn diagonal_drift(&self, j: u32) -> u32 {
        let tris = self
            .strip_layout
            .iter()
            .filter(|s| matches!(s, Strip::Tri))
            .count() as u32;
        tris * (j / self.strip_period())
    }
}

/// Parameters of an M(i,j,k) representation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TorusParams {
    pub tag: DsemTag,
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl fmt::Display for TorusParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{},{})", self.i, self.j, self.k)
    }
}

impl TorusParams {
    pub fn new(tag: DsemTag, i: u32, j: u32, k: u32) -> Result<TorusParams, DsemError> {
        let p = TorusParams { tag, i, j, k };
        p.check_admissible()?;
        Ok(p)
    }

    pub fn check_admissible(&self) -> Result<(), DsemError> {
        let m = DsemType::row_modulus(self.tag);
        if m == 0 {
            return Err(DsemError::InadmissibleParams(format!(
                "{} is not a torus-classified type",
                self.tag
            )));
        }
        let ok = self.i >= 3 && self.j >= m && self.j % m == 0 && self.k < self.i;
        if ok {
            Ok(())
        } else {
            Err(DsemError::InadmissibleParams(format!(
                "{} {}",
                self.tag, self
            )))
        }
    }

    pub fn vertex_count(&self) -> u32 {
        self.i * self.j
    }
}

/// All admissible (i,j,k) with i·j = n, ordered by (j, i, k).
pub fn enumerate_admissible(tag: DsemTag, n: u32) -> Vec<TorusParams> {
    let m = DsemType::row_modulus(tag);
    let mut out = Vec::new();
    if m == 0 || n == 0 {
        return out;
    }
    let mut j = m;
    while j <= n / 3 {
        if n % j == 0 {
            let i = n / j;
            if i >= 3 {
                for k in 0..i {
                    out.push(TorusParams { tag, i, j, k });
                }
            }
        }
        j += m;
    }
    out
}

/// A built torus map together with its grid coordinates.
pub struct GridMap {
    pub params: TorusParams,
    pub dtype: DsemType,
    pub map: CombMap,
}

impl GridMap {
    pub fn vertex(&self, r: u32, c: u32) -> u32 {
        (r % self.params.j) * self.params.i + (c % self.params.i)
    }

    pub fn coords(&self, v: u32) -> (u32, u32) {
        (v / self.params.i, v % self.params.i)
    }

    /// Strip kind between row r and the row above it.
    pub fn strip_above(&self, r: u32) -> Strip {
        self.dtype.strip_layout[(r % self.dtype.strip_period()) as usize]
    }

    /// Vertex straight above (r, c), crossing the seam with the k-shift.
    pub fn above(&self, r: u32, c: u32) -> (u32, u32) {
        if r + 1 < self.params.j {
            (r + 1, c % self.params.i)
        } else {
            (0, (c + self.params.k) % self.params.i)
        }
    }

    /// Class letter of a vertex (F1 or F2 of the type's pair).
    pub fn class_of(&self, v: u32) -> LinkLetter {
        let (r, _) = self.coords(v);
        self.row_class(r)
    }

    pub fn row_class(&self, r: u32) -> LinkLetter {
        let period = self.dtype.strip_period();
        let below = self.dtype.strip_layout[((r + period - 1) % period) as usize];
        let above = self.dtype.strip_layout[(r % period) as usize];
        let fs = match (below, above) {
            (Strip::Tri, Strip::Tri) => FaceSeq::parse("3^6").unwrap(),
            (Strip::Quad, Strip::Quad) => FaceSeq::parse("4^4").unwrap(),
            _ => FaceSeq::parse("3^3.4^2").unwrap(),
        };
        if fs == self.dtype.pair.0 {
            LinkLetter::F1
        } else {
            LinkLetter::F2
        }
    }

    /// Viewing coordinates on a round torus, for OFF export.
    pub fn viewing_coords(&self) -> Vec<(f64, f64, f64)> {
        let (i, j) = (self.params.i as f64, self.params.j as f64);
        let mut out = Vec::with_capacity((self.params.i * self.params.j) as usize);
        for v in 0..self.params.i * self.params.j {
            let (r, c) = self.coords(v);
            let theta = 2.0 * std::f64::consts::PI * (c as f64) / i;
            let phi = 2.0 * std::f64::consts::PI * (r as f64) / j;
            let rad = 2.0 + phi.cos();
            out.push((rad * theta.cos(), rad * theta.sin(), phi.sin()));
        }
        out
    }
}

/// Builds the M(i,j,k) map of a torus type and verifies the construction
/// postconditions: Euler characteristic 0, the per-type vertex-class ratio,
/// and every vertex link matching the type's link pattern.
pub fn build_torus_map(p: TorusParams) -> Result<GridMap, DsemError> {
    p.check_admissible()?;
    let dtype = DsemType::torus(p.tag)?;
    let (i, j) = (p.i, p.j);
    let vid = |r: u32, c: u32| -> u32 {
        let rr = r % j;
        let cc = c % i;
        rr * i + cc
    };
    let up = |r: u32, c: u32| -> (u32, u32) {
        if r + 1 < j {
            (r + 1, c % i)
        } else {
            (0, (c + p.k) % i)
        }
    };
    let mut faces: Vec<Vec<u32>> = Vec::new();
    for r in 0..j {
        let strip = dtype.strip_layout[(r % dtype.strip_period()) as usize];
        for c in 0..i {
            let (ur, uc) = up(r, c);
            let (ur1, uc1) = up(r, c + 1);
            match strip {
                Strip::Quad => {
                    faces.push(vec![vid(r, c), vid(r, c + 1), vid(ur1, uc1), vid(ur, uc)]);
                }
                Strip::Tri => {
                    faces.push(vec![vid(r, c), vid(r, c + 1), vid(ur1, uc1)]);
                    faces.push(vec![vid(r, c), vid(ur1, uc1), vid(ur, uc)]);
                }
            }
        }
    }
    let map = CombMap::build_map(&faces)?;
    let gm = GridMap {
        params: p,
        dtype,
        map,
    };
    verify_type(&gm)?;
    Ok(gm)
}

/// Build postconditions for every constructed torus map.
fn verify_type(gm: &GridMap) -> Result<(), DsemError> {
    let fail = |msg: String| {
        Err(DsemError::TypeVerificationFailed(
            format!("{} {}", gm.params.tag, gm.params),
            msg,
        ))
    };
    if gm.map.euler_characteristic() != 0 {
        return fail(format!(
            "Euler characteristic {}",
            gm.map.euler_characteristic()
        ));
    }
    let mut counts = [0u32; 2];
    for v in 0..gm.map.vertex_count() {
        let fs = gm.map.face_sequence(v)?;
        let expected = match gm.class_of(v) {
            LinkLetter::F1 => &gm.dtype.pair.0,
            LinkLetter::F2 => &gm.dtype.pair.1,
        };
        if fs != *expected {
            return fail(format!("vertex {v} has face-sequence {fs}, expected {expected}"));
        }
        counts[(gm.class_of(v) == LinkLetter::F2) as usize] += 1;
        let link = gm.map.link_sequence(v, |u| gm.class_of(u))?;
        let want = gm.dtype.link_pattern(&fs).unwrap();
        if link != *want {
            return fail(format!("vertex {v} has link {link}, expected {want}"));
        }
    }
    // class ratios: T1: 2|V(3^6)| = |V(3^3.4^2)|, T3: |V(3^3.4^2)| = 2|V(4^4)|,
    // T2/T4: equal counts. In layout terms: F2 rows vs F1 rows.
    let ratio_ok = match gm.params.tag {
        DsemTag::T1 => counts[0] == 2 * counts[1],
        DsemTag::T2 => counts[0] == counts[1],
        DsemTag::T3 => counts[0] == 2 * counts[1],
        DsemTag::T4 => counts[0] == counts[1],
        _ => unreachable!(),
    };
    if !ratio_ok {
        return fail(format!(
            "class counts |V({})| = {}, |V({})| = {}",
            gm.dtype.pair.0, counts[0], gm.dtype.pair.1, counts[1]
        ));
    }
    Ok(())
}

/// Reflection representative of the shift: k' = (i − k − D) mod i, where D
/// is the type's total diagonal drift. Returns whichever of p and its
/// reflection is lexicographically smaller.
pub fn normalize_shift(p: TorusParams) -> Result<TorusParams, DsemError> {
    p.check_admissible()?;
    let dtype = DsemType::torus(p.tag)?;
    let k2 = reflected_shift(&dtype, p);
    Ok(TorusParams {
        k: p.k.min(k2),
        ..p
    })
}

pub(crate) fn reflected_shift(dtype: &DsemType, p: TorusParams) -> u32 {
    let d = dtype.diagonal_drift(p.j) % p.i;
    (2 * p.i - p.k - d) % p.i
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissible_enumeration_matches_examples() {
        let t1_12: Vec<_> = enumerate_admissible(DsemTag::T1, 12)
            .iter()
            .map(|p| (p.i, p.j, p.k))
            .collect();
        assert_eq!(t1_12, vec![(4, 3, 0), (4, 3, 1), (4, 3, 2), (4, 3, 3)]);
        assert!(enumerate_admissible(DsemTag::T1, 10).is_empty());
        let t2_24 = enumerate_admissible(DsemTag::T2, 24);
        assert_eq!(t2_24.len(), 9);
        assert!(t2_24.iter().any(|p| p.i == 6 && p.j == 4));
        assert!(t2_24.iter().any(|p| p.i == 3 && p.j == 8));
    }

    #[test]
    fn t1_430_counts() {
        let gm = build_torus_map(TorusParams::new(DsemTag::T1, 4, 3, 0).unwrap()).unwrap();
        assert_eq!(gm.map.vertex_count(), 12);
        assert_eq!(gm.map.edge_count(), 32);
        assert_eq!(gm.map.face_count(), 20);
        let quads = gm.map.faces().iter().filter(|f| f.len() == 4).count();
        let tris = gm.map.faces().iter().filter(|f| f.len() == 3).count();
        assert_eq!((quads, tris), (4, 16));
        assert_eq!(gm.map.euler_characteristic(), 0);
    }

    #[test]
    fn every_small_build_has_zero_euler_characteristic() {
        for tag in DsemTag::all_torus() {
            for n in 1..=24 {
                for p in enumerate_admissible(tag, n) {
                    let gm = build_torus_map(p).unwrap();
                    assert_eq!(gm.map.euler_characteristic(), 0, "{tag} {p}");
                    assert_eq!(gm.map.vertex_count(), p.vertex_count());
                }
            }
        }
    }

    #[test]
    fn class_ratios_and_row_sequences() {
        let gm = build_torus_map(TorusParams::new(DsemTag::T3, 3, 3, 0).unwrap()).unwrap();
        let f44 = FaceSeq::parse("4^4").unwrap();
        let f334 = FaceSeq::parse("3^3.4^2").unwrap();
        let n44 = (0..9)
            .filter(|&v| gm.map.face_sequence(v).unwrap() == f44)
            .count();
        let n334 = (0..9)
            .filter(|&v| gm.map.face_sequence(v).unwrap() == f334)
            .count();
        assert_eq!((n334, n44), (6, 3));
        // row r ≡ 1 (mod 3) carries the (4^4) vertices
        assert_eq!(gm.map.face_sequence(gm.vertex(1, 0)).unwrap(), f44);

        let gm2 = build_torus_map(TorusParams::new(DsemTag::T2, 3, 4, 0).unwrap()).unwrap();
        let f36 = FaceSeq::parse("3^6").unwrap();
        let n36 = (0..12)
            .filter(|&v| gm2.map.face_sequence(v).unwrap() == f36)
            .count();
        assert_eq!(n36, 6);

        // T1 grid: rows ≡ 2 (mod 3) are the (3^6) rows
        let gm1 = build_torus_map(TorusParams::new(DsemTag::T1, 4, 3, 0).unwrap()).unwrap();
        assert_eq!(gm1.map.face_sequence(gm1.vertex(2, 1)).unwrap(), f36);
    }

    #[test]
    fn link_patterns_match_the_paper() {
        // (3^6) vertex in a T1 map: (F1^2.F2.F1^2.F2) with F1 = (3^3.4^2)
        let gm = build_torus_map(TorusParams::new(DsemTag::T1, 4, 3, 1).unwrap()).unwrap();
        let v36 = gm.vertex(2, 0);
        let link = gm.map.link_sequence(v36, |u| gm.class_of(u)).unwrap();
        assert_eq!(link, LinkSeq::parse("F1^2.F2.F1^2.F2").unwrap());

        // (4^4) vertex in a T3 map: (F1^3.F2.F1^3.F2)
        let gm3 = build_torus_map(TorusParams::new(DsemTag::T3, 4, 3, 0).unwrap()).unwrap();
        let v44 = gm3.vertex(1, 2);
        let link3 = gm3.map.link_sequence(v44, |u| gm3.class_of(u)).unwrap();
        assert_eq!(link3, LinkSeq::parse("F1^3.F2.F1^3.F2").unwrap());

        // (4^4) vertex in a T4 map: (F1^3.F2^5)
        let gm4 = build_torus_map(TorusParams::new(DsemTag::T4, 3, 4, 2).unwrap()).unwrap();
        let v44b = gm4.vertex(2, 0);
        let link4 = gm4.map.link_sequence(v44b, |u| gm4.class_of(u)).unwrap();
        assert_eq!(link4, LinkSeq::parse("F1^3.F2^5").unwrap());
    }

    #[test]
    fn isomorphism_examples_from_the_tables() {
        let m = |k| build_torus_map(TorusParams::new(DsemTag::T1, 4, 3, k).unwrap()).unwrap();
        let (m0, m1, m2, m3) = (m(0), m(1), m(2), m(3));
        assert!(m0.map.is_isomorphic(&m2.map));
        assert!(!m0.map.is_isomorphic(&m1.map));
        assert!(!m0.map.is_isomorphic(&m3.map));
        assert!(!m1.map.is_isomorphic(&m3.map));
        assert!(m0.map.is_isomorphic(&m0.map));
    }

    #[test]
    fn normalize_shift_examples() {
        let norm = |tag, i, j, k| {
            normalize_shift(TorusParams::new(tag, i, j, k).unwrap())
                .unwrap()
                .k
        };
        // T1: M(4,3,0) and M(4,3,2) form one class
        assert_eq!(norm(DsemTag::T1, 4, 3, 0), 0);
        assert_eq!(norm(DsemTag::T1, 4, 3, 2), 0);
        // T3: M(3,3,0) with M(3,3,2)
        assert_eq!(norm(DsemTag::T3, 3, 3, 2), 0);
        // T1: M(3,3,2) is a singleton class (fixed point)
        assert_eq!(norm(DsemTag::T1, 3, 3, 2), 2);
    }

    #[test]
    fn normalize_shift_is_an_involution_on_k() {
        for tag in DsemTag::all_torus() {
            for n in 1..=24 {
                for p in enumerate_admissible(tag, n) {
                    let dtype = DsemType::torus(tag).unwrap();
                    let k2 = reflected_shift(&dtype, p);
                    let back = reflected_shift(&dtype, TorusParams { k: k2, ..p });
                    assert_eq!(back, p.k, "{tag} {p}");
                }
            }
        }
    }
}
