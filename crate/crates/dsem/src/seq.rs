//! Face-sequences and link words.
//!
//! A face-sequence is the cyclic word of polygon sizes around a vertex,
//! e.g. `(3^3.4^2)` = triangle, triangle, triangle, square, square. A link
//! word records, for a map with exactly two vertex classes, the cyclic
//! pattern of classes along the link of a vertex. Both are stored in a
//! canonical form: lexicographically minimal over all rotations and the
//! reflection.

use crate::error::DsemError;
use std::fmt;

/// Canonical representative of a cyclic word: the lexicographically
/// smallest sequence over all rotations of `w` and of its reversal.
pub fn canonical_cycle<T: Ord + Copy>(w: &[T]) -> Vec<T> {
    assert!(!w.is_empty());
    let n = w.len();
    let mut best: Option<Vec<T>> = None;
    let mut consider = |cand: Vec<T>| match &best {
        Some(b) if *b <= cand => {}
        _ => best = Some(cand),
    };
    for r in 0..n {
        let rot: Vec<T> = (0..n).map(|i| w[(r + i) % n]).collect();
        let mut rev = rot.clone();
        rev.reverse();
        consider(rot);
        consider(rev);
    }
    best.unwrap()
}

/// Cyclic sequence of polygon sizes at a vertex, canonicalized.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FaceSeq {
    entries: Vec<u32>,
}

impl FaceSeq {
    /// Builds a face-sequence from the sizes around a vertex (any rotation,
    /// either orientation). Every entry must be ≥ 3 and there must be at
    /// least 3 of them.
    pub fn new(sizes: &[u32]) -> Result<FaceSeq, DsemError> {
        if sizes.len() < 3 || sizes.iter().any(|&p| p < 3) {
            return Err(DsemError::InvalidFaceSeq(format!("{sizes:?}")));
        }
        Ok(FaceSeq {
            entries: canonical_cycle(sizes),
        })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Vertex degree (number of faces incident at the vertex).
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    /// Length of the link cycle of a vertex with this face-sequence:
    /// q + Σ (p_j − 3) over the q entries.
    pub fn link_len(&self) -> usize {
        self.entries.iter().map(|&p| (p as usize) - 2).sum()
    }

    /// Run-length encoding of the canonical entry cycle, read linearly.
    pub fn runs(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.entries {
            match out.last_mut() {
                Some((q, n)) if *q == p => *n += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Parses the `3^3.4^2` / `3,3,3,4,4` notations (optionally parenthesized).
    pub fn parse(s: &str) -> Result<FaceSeq, DsemError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut sizes = Vec::new();
        for part in s.split(|c| c == '.' || c == ',') {
            let part = part.trim();
            if part.is_empty() {
                return Err(DsemError::InvalidFaceSeq(s.to_string()));
            }
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (part, "1"),
            };
            let p: u32 = base
                .parse()
                .map_err(|_| DsemError::InvalidFaceSeq(s.to_string()))?;
            let n: u32 = exp
                .parse()
                .map_err(|_| DsemError::InvalidFaceSeq(s.to_string()))?;
            if n == 0 {
                return Err(DsemError::InvalidFaceSeq(s.to_string()));
            }
            sizes.extend(std::iter::repeat(p).take(n as usize));
        }
        FaceSeq::new(&sizes)
    }
}

impl fmt::Display for FaceSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs()
            .iter()
            .map(|&(p, n)| {
                if n == 1 {
                    format!("{p}")
                } else {
                    format!("{p}^{n}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for FaceSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

// Face-sequences are ordered by their run-length encoding. This is the
// order that fixes the F1/F2 letter convention for link words: for every
// pair occurring here it puts the sequence the paper's link patterns are
// anchored on first, e.g. (3^3.4^2) < (3^6) and (3^3.4^2) < (4^4).
impl Ord for FaceSeq {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.runs().cmp(&other.runs())
    }
}

impl PartialOrd for FaceSeq {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A letter of a link word. `F1` is the smaller face-sequence of the pair
/// under the canonical [`FaceSeq`] order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LinkLetter {
    F1,
    F2,
}

/// Cyclic word over {F1, F2} describing the classes along a link,
/// canonicalized over rotations and the reflection with F1 < F2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkSeq {
    word: Vec<LinkLetter>,
}

impl LinkSeq {
    pub fn new(word: &[LinkLetter]) -> LinkSeq {
        assert!(!word.is_empty(), "empty link word");
        LinkSeq {
            word: canonical_cycle(word),
        }
    }

    pub fn word(&self) -> &[LinkLetter] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Parses `F1^2.F2.F1^2.F2` style notation.
    pub fn parse(s: &str) -> Result<LinkSeq, DsemError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut word = Vec::new();
        for part in s.split('.') {
            let part = part.trim();
            let (base, exp) = match part.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (part, "1"),
            };
            let letter = match base {
                "F1" | "f1" => LinkLetter::F1,
                "F2" | "f2" => LinkLetter::F2,
                _ => return Err(DsemError::InvalidLinkSeq(s.to_string())),
            };
            let n: u32 = exp
                .parse()
                .map_err(|_| DsemError::InvalidLinkSeq(s.to_string()))?;
            if n == 0 {
                return Err(DsemError::InvalidLinkSeq(s.to_string()));
            }
            word.extend(std::iter::repeat(letter).take(n as usize));
        }
        if word.is_empty() {
            return Err(DsemError::InvalidLinkSeq(s.to_string()));
        }
        Ok(LinkSeq::new(&word))
    }
}

impl fmt::Display for LinkSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut runs: Vec<(LinkLetter, u32)> = Vec::new();
        for &l in &self.word {
            match runs.last_mut() {
                Some((q, n)) if *q == l => *n += 1,
                _ => runs.push((l, 1)),
            }
        }
        let parts: Vec<String> = runs
            .iter()
            .map(|&(l, n)| {
                let name = match l {
                    LinkLetter::F1 => "F1",
                    LinkLetter::F2 => "F2",
                };
                if n == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{n}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for LinkSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A vertex class of a doubly semi-equivelar map: its face-sequence together
/// with the link word its vertices must realize.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexClass {
    pub face_seq: FaceSeq,
    pub link_seq: LinkSeq,
}

impl VertexClass {
    pub fn new(face_seq: FaceSeq, link_seq: LinkSeq) -> Result<VertexClass, DsemError> {
        if face_seq.link_len() != link_seq.len() {
            return Err(DsemError::InvalidLinkSeq(format!(
                "link word length {} does not match link length {} of ({})",
                link_seq.len(),
                face_seq.link_len(),
                face_seq
            )));
        }
        Ok(VertexClass { face_seq, link_seq })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_cycle_minimizes_rotation_and_reflection() {
        assert_eq!(canonical_cycle(&[4, 3, 3, 3, 4]), vec![3, 3, 3, 4, 4]);
        assert_eq!(canonical_cycle(&[4, 3, 3, 4, 3]), vec![3, 3, 4, 3, 4]);
        assert_eq!(canonical_cycle(&[6, 3, 6, 3]), vec![3, 6, 3, 6]);
        assert_eq!(canonical_cycle(&[6, 6, 3, 3]), vec![3, 3, 6, 6]);
        // reflection matters: (3,4,5) backwards
        assert_eq!(canonical_cycle(&[5, 4, 3]), vec![3, 4, 5]);
    }

    #[test]
    fn parse_and_display_roundtrip() {
        for s in ["3^3.4^2", "3^6", "3^2.4.3.4", "3.4^2.6", "4.6.12", "3.7.42"] {
            let fs = FaceSeq::parse(s).unwrap();
            assert_eq!(fs.to_string(), s);
        }
        assert_eq!(
            FaceSeq::parse("3,3,3,4,4").unwrap(),
            FaceSeq::parse("3^3.4^2").unwrap()
        );
        assert_eq!(
            FaceSeq::parse("(3^2.6^2)").unwrap().entries(),
            &[3, 3, 6, 6]
        );
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(FaceSeq::new(&[3, 3]).is_err());
        assert!(FaceSeq::new(&[2, 3, 3]).is_err());
        assert!(FaceSeq::parse("3^0.4").is_err());
    }

    #[test]
    fn f1_letter_order_matches_link_convention() {
        // The pairs classified on the torus pin the convention: F1 is the
        // sequence the link patterns are anchored on.
        let f334 = FaceSeq::parse("3^3.4^2").unwrap();
        let f36 = FaceSeq::parse("3^6").unwrap();
        let f44 = FaceSeq::parse("4^4").unwrap();
        assert!(f334 < f36);
        assert!(f334 < f44);
        let f3464 = FaceSeq::parse("3.4.6.4").unwrap();
        let f3426 = FaceSeq::parse("3.4^2.6").unwrap();
        assert!(f3464 < f3426);
        let f32434 = FaceSeq::parse("3^2.4.3.4").unwrap();
        assert!(f32434 < f334);
    }

    #[test]
    fn link_lengths() {
        assert_eq!(FaceSeq::parse("3^3.4^2").unwrap().link_len(), 7);
        assert_eq!(FaceSeq::parse("4^4").unwrap().link_len(), 8);
        assert_eq!(FaceSeq::parse("3^6").unwrap().link_len(), 6);
        assert_eq!(FaceSeq::parse("3^2.4.12").unwrap().link_len(), 14);
        assert_eq!(FaceSeq::parse("3.12^2").unwrap().link_len(), 21);
    }

    #[test]
    fn link_word_canonicalization() {
        use LinkLetter::*;
        let w = LinkSeq::new(&[F2, F1, F1, F2, F1, F1]);
        assert_eq!(w.to_string(), "F1^2.F2.F1^2.F2");
        assert_eq!(LinkSeq::parse("F1^2.F2.F1^2.F2").unwrap(), w);
        let v = LinkSeq::parse("F2^2.F1^5").unwrap();
        assert_eq!(v.to_string(), "F1^5.F2^2");
    }

    #[test]
    fn vertex_class_checks_link_length() {
        let fs = FaceSeq::parse("3^3.4^2").unwrap();
        assert!(VertexClass::new(fs.clone(), LinkSeq::parse("F1^5.F2^2").unwrap()).is_ok());
        assert!(VertexClass::new(fs, LinkSeq::parse("F1^5.F2").unwrap()).is_err());
    }
}
