//! Combinatorial curvature and the zero-curvature solution set.
//!
//! The curvature of a vertex with face-sequence (p_1 … p_q) is
//! 1 − q/2 + Σ 1/p_j, computed in exact rational arithmetic. Zero curvature
//! is a Diophantine condition, so there is no tolerance anywhere in this
//! module.

use crate::seq::FaceSeq;
use num_rational::Rational64;
use num_traits::Zero;

/// Exact combinatorial curvature value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Curvature(pub Rational64);

impl Curvature {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::fmt::Display for Curvature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Curvature of a face-sequence: 1 − q/2 + Σ 1/p_j.
pub fn curvature(fs: &FaceSeq) -> Curvature {
    let q = fs.degree() as i64;
    let mut acc = Rational64::new(1, 1) - Rational64::new(q, 2);
    for &p in fs.entries() {
        acc += Rational64::new(1, p as i64);
    }
    Curvature(acc)
}

/// Largest polygon size that can occur in a zero-curvature face-sequence.
/// Each term 1/2 − 1/p is at least 1/2 − 1/3 = 1/6, so the degree is at most
/// 6; with degree 3 the two smallest terms leave at most 1/2 − 1/3 − 1/7 for
/// the third, giving p ≤ 42.
pub const MAX_POLYGON: u32 = 42;

/// All canonical cyclic sequences of integers ≥ 3 (up to rotation and
/// reflection) with curvature exactly 0. This is the set X of the
/// zero-curvature classification; it has exactly 21 elements.
pub fn zero_curvature_face_sequences() -> Vec<FaceSeq> {
    let mut out: Vec<FaceSeq> = Vec::new();
    // Degree q between 3 and 6; entries bounded by MAX_POLYGON. Enumerate
    // cyclic sequences directly via their canonical representatives.
    for q in 3..=6usize {
        let mut current = vec![0u32; q];
        enumerate(&mut current, 0, q, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

fn enumerate(current: &mut Vec<u32>, idx: usize, q: usize, out: &mut Vec<FaceSeq>) {
    if idx == q {
        let fs = FaceSeq::new(current).unwrap();
        if curvature(&fs).is_zero() {
            out.push(fs);
        }
        return;
    }
    // Σ (1/2 − 1/p_j) must equal 1 overall; prune on the partial sum.
    let partial: Rational64 = current[..idx]
        .iter()
        .map(|&p| Rational64::new(1, 2) - Rational64::new(1, p as i64))
        .sum();
    let remaining = (q - idx) as i64;
    for p in 3..=MAX_POLYGON {
        let term = Rational64::new(1, 2) - Rational64::new(1, p as i64);
        // the remaining slots each contribute at least 1/6 and at most 1/2
        let lo = partial + term + Rational64::new(remaining - 1, 6);
        let hi = partial + term + Rational64::new(remaining - 1, 2);
        if lo > Rational64::new(1, 1) || hi < Rational64::new(1, 1) {
            continue;
        }
        current[idx] = p;
        enumerate(current, idx + 1, q, out);
    }
    current[idx] = 0;
}

/// Unordered pairs {f1, f2} of distinct elements of X that survive the
/// radius-1 local compatibility check (no contradiction when one vertex of
/// each class must appear in the other's link).
pub fn candidate_pairs() -> Vec<(FaceSeq, FaceSeq)> {
    let xs = zero_curvature_face_sequences();
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            if crate::search::pair_survives_radius1(&xs[i], &xs[j]) {
                out.push((xs[i].clone(), xs[j].clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curvature_examples() {
        let z = |s: &str| curvature(&FaceSeq::parse(s).unwrap());
        assert!(z("3^6").is_zero());
        assert_eq!(z("3^3").0, Rational64::new(1, 2));
        assert!(z("5^2.10").is_zero());
        assert!(z("3.7.42").is_zero());
        assert_eq!(z("3^3.4").0, Rational64::new(1, 4));
    }

    /// Independent enumeration route: multisets with Σ(1/2 − 1/p) = 1 first,
    /// then all distinct cyclic arrangements of each multiset.
    fn zero_curvature_multiset_route() -> Vec<FaceSeq> {
        let mut multisets: Vec<Vec<u32>> = Vec::new();
        fn rec(min: u32, left: usize, sum: Rational64, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if left == 0 {
                if sum == Rational64::new(1, 1) {
                    out.push(acc.clone());
                }
                return;
            }
            let max_term = Rational64::new(1, 2) - Rational64::new(1, MAX_POLYGON as i64);
            for p in min..=MAX_POLYGON {
                let term = Rational64::new(1, 2) - Rational64::new(1, p as i64);
                if sum + term > Rational64::new(1, 1) {
                    break;
                }
                // the remaining left−1 slots contribute at most max_term each
                if sum + term + max_term * Rational64::new(left as i64 - 1, 1)
                    < Rational64::new(1, 1)
                {
                    continue;
                }
                acc.push(p);
                rec(p, left - 1, sum + term, acc, out);
                acc.pop();
            }
        }
        for q in 3..=6 {
            rec(3, q, Rational64::new(0, 1), &mut Vec::new(), &mut multisets);
        }
        // expand each multiset into distinct cyclic arrangements
        let mut out: Vec<FaceSeq> = Vec::new();
        for ms in multisets {
            let mut perm = ms.clone();
            perm.sort();
            loop {
                out.push(FaceSeq::new(&perm).unwrap());
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    fn next_permutation(v: &mut [u32]) -> bool {
        if v.len() < 2 {
            return false;
        }
        let mut i = v.len() - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = v.len() - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    #[test]
    fn zero_curvature_set_has_21_elements() {
        let xs = zero_curvature_face_sequences();
        assert_eq!(xs.len(), 21);
        let want = [
            "3^3.4^2", "3^6", "3.4^2.6", "3^2.6^2", "3^4.6", "3^2.4.3.4", "3.6.3.6", "4^4",
            "3.4.6.4", "3^2.4.12", "4.8^2", "3.12^2", "6^3", "5^2.10", "3.8.24", "3.9.18",
            "3.10.15", "4.5.20", "3.7.42", "4.6.12", "3.4.3.12",
        ];
        for w in want {
            let fs = FaceSeq::parse(w).unwrap();
            assert!(xs.contains(&fs), "missing {w}");
        }
    }

    #[test]
    fn distinct_cyclic_arrangements_are_distinct_elements() {
        let xs = zero_curvature_face_sequences();
        let a = FaceSeq::new(&[3, 3, 3, 4, 4]).unwrap();
        let b = FaceSeq::new(&[3, 3, 4, 3, 4]).unwrap();
        assert_ne!(a, b);
        assert!(xs.contains(&a) && xs.contains(&b));
        assert!(xs.contains(&FaceSeq::new(&[3, 7, 42]).unwrap()));
    }

    #[test]
    fn both_enumeration_routes_agree() {
        assert_eq!(
            zero_curvature_face_sequences(),
            zero_curvature_multiset_route()
        );
    }

    #[test]
    fn regular_zero_curvature_iff_harmonic() {
        // curvature((p^q)) = 0 iff 1/p + 1/q = 1/2
        for p in 3..=50i64 {
            for q in 3..=50usize {
                let fs = FaceSeq::new(&vec![p as u32; q]).unwrap();
                let harmonic =
                    Rational64::new(1, p) + Rational64::new(1, q as i64) == Rational64::new(1, 2);
                assert_eq!(curvature(&fs).is_zero(), harmonic, "p={p} q={q}");
            }
        }
    }

    #[test]
    fn entries_come_from_the_known_size_pool() {
        let pool = [3u32, 4, 5, 6, 7, 8, 9, 10, 12, 15, 18, 20, 24, 42];
        for fs in zero_curvature_face_sequences() {
            for &p in fs.entries() {
                assert!(pool.contains(&p), "unexpected size {p} in {fs}");
            }
        }
    }
}
