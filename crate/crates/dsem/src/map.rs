//! Dart-based combinatorial polygonal maps on closed orientable surfaces.
//!
//! Each edge contributes two darts (directed sides). `alpha` is the edge
//! involution, `sigma` the counterclockwise rotation of out-darts around
//! their origin vertex. Faces are the orbits of d ↦ sigma(alpha(d)); with
//! counterclockwise rotations this walks each face boundary
//! counterclockwise, keeping the face on the left.

use crate::error::DsemError;
use crate::seq::{FaceSeq, LinkLetter, LinkSeq};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Combinatorial map: a transitive pair of permutations on darts.
#[derive(Clone, Debug)]
pub struct CombMap {
    /// edge involution (fixed-point-free)
    alpha: Vec<u32>,
    /// counterclockwise rotation of darts around their origin vertex
    sigma: Vec<u32>,
    /// origin vertex of each dart
    origin: Vec<u32>,
    nverts: u32,
    /// face boundaries, counterclockwise vertex lists (one per face orbit)
    faces: Vec<Vec<u32>>,
    /// face orbit id of each dart (the face on the left of the dart)
    face_of: Vec<u32>,
    /// face successor: next boundary dart of the face on the left,
    /// equal to sigma^{-1}(alpha(d))
    fnext: Vec<u32>,
    /// one out-dart per vertex
    vert_dart: Vec<u32>,
}

/// Serialized form: vertex count plus counterclockwise face lists.
#[derive(Serialize, Deserialize)]
pub struct MapJson {
    pub vertices: u32,
    pub faces: Vec<Vec<u32>>,
}

impl CombMap {
    /// Builds a map from counterclockwise face boundaries. Every edge
    /// (unordered vertex pair with face-side multiplicity) must appear in
    /// exactly two face boundaries, once per direction.
    pub fn build_map(face_lists: &[Vec<u32>]) -> Result<CombMap, DsemError> {
        if face_lists.is_empty() {
            return Err(DsemError::DisconnectedMap);
        }
        let nverts = face_lists
            .iter()
            .flat_map(|f| f.iter().copied())
            .max()
            .map(|m| m + 1)
            .unwrap_or(0);
        for f in face_lists {
            if f.len() < 3 {
                return Err(DsemError::InvalidFaceSeq(format!(
                    "face with {} vertices",
                    f.len()
                )));
            }
        }

        // One dart per face side, in face order.
        let mut dart_face = Vec::new(); // (face, position)
        let mut darts_by_dir: BTreeMap<(u32, u32), Vec<u32>> = BTreeMap::new();
        let mut id = 0u32;
        for (fi, f) in face_lists.iter().enumerate() {
            for p in 0..f.len() {
                let u = f[p];
                let v = f[(p + 1) % f.len()];
                dart_face.push((fi as u32, p as u32));
                darts_by_dir.entry((u, v)).or_default().push(id);
                id += 1;
            }
        }
        let ndarts = id as usize;

        // alpha: match each directed side with its reversal.
        let mut alpha = vec![u32::MAX; ndarts];
        for ((u, v), ds) in &darts_by_dir {
            if *u == *v {
                return Err(DsemError::NonManifold((*u, *v), ds.len()));
            }
            if u > v {
                continue;
            }
            let rev = darts_by_dir.get(&(*v, *u)).map(|r| r.as_slice()).unwrap_or(&[]);
            if ds.len() != 1 || rev.len() != 1 {
                return Err(DsemError::NonManifold((*u, *v), ds.len() + rev.len()));
            }
            alpha[ds[0] as usize] = rev[0];
            alpha[rev[0] as usize] = ds[0];
        }

        // sigma(d) = alpha(previous side in d's face): the next out-dart
        // counterclockwise around the origin of d.
        let mut sigma = vec![u32::MAX; ndarts];
        let mut origin = vec![u32::MAX; ndarts];
        let mut first_dart_of_face = Vec::with_capacity(face_lists.len());
        {
            let mut base = 0u32;
            for f in face_lists {
                first_dart_of_face.push(base);
                base += f.len() as u32;
            }
        }
        for d in 0..ndarts {
            let (fi, p) = dart_face[d];
            let f = &face_lists[fi as usize];
            origin[d] = f[p as usize];
            let prev = first_dart_of_face[fi as usize] + (p + f.len() as u32 - 1) % f.len() as u32;
            sigma[d] = alpha[prev as usize];
        }

        // Each vertex's darts must form a single sigma-cycle.
        let mut seen = vec![false; ndarts];
        let mut vert_dart = vec![u32::MAX; nverts as usize];
        for d in 0..ndarts {
            if seen[d] {
                continue;
            }
            let v = origin[d];
            if vert_dart[v as usize] != u32::MAX {
                return Err(DsemError::InconsistentRotation(v));
            }
            vert_dart[v as usize] = d as u32;
            let mut cur = d as u32;
            loop {
                seen[cur as usize] = true;
                if origin[cur as usize] != v {
                    return Err(DsemError::InconsistentRotation(v));
                }
                cur = sigma[cur as usize];
                if cur == d as u32 {
                    break;
                }
            }
        }
        if vert_dart.iter().any(|&d| d == u32::MAX) {
            // an unused vertex id below the maximum referenced one
            return Err(DsemError::DisconnectedMap);
        }

        // Connectivity under <alpha, sigma>.
        let mut reach = vec![false; ndarts];
        let mut stack = vec![0u32];
        reach[0] = true;
        while let Some(d) = stack.pop() {
            for n in [alpha[d as usize], sigma[d as usize]] {
                if !reach[n as usize] {
                    reach[n as usize] = true;
                    stack.push(n);
                }
            }
        }
        if reach.iter().any(|&b| !b) {
            return Err(DsemError::DisconnectedMap);
        }

        // Faces are the input boundaries; each dart lies on the left of its
        // face. The face successor is sigma^{-1}(alpha(d)), which advances
        // counterclockwise along the boundary (checked below).
        let mut face_of = vec![u32::MAX; ndarts];
        let mut fnext = vec![u32::MAX; ndarts];
        for (d, &(fi, p)) in dart_face.iter().enumerate() {
            face_of[d] = fi;
            let flen = face_lists[fi as usize].len() as u32;
            fnext[d] = first_dart_of_face[fi as usize] + (p + 1) % flen;
        }
        let mut sigma_inv = vec![0u32; ndarts];
        for d in 0..ndarts {
            sigma_inv[sigma[d] as usize] = d as u32;
        }
        for d in 0..ndarts {
            debug_assert_eq!(fnext[d], sigma_inv[alpha[d] as usize]);
        }

        Ok(CombMap {
            alpha,
            sigma,
            origin,
            nverts,
            faces: face_lists.to_vec(),
            face_of,
            fnext,
            vert_dart,
        })
    }

    pub fn dart_count(&self) -> usize {
        self.alpha.len()
    }

    pub fn vertex_count(&self) -> u32 {
        self.nverts
    }

    pub fn edge_count(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Counterclockwise face boundaries.
    pub fn faces(&self) -> &[Vec<u32>] {
        &self.faces
    }

    pub fn alpha(&self, d: u32) -> u32 {
        self.alpha[d as usize]
    }

    pub fn sigma(&self, d: u32) -> u32 {
        self.sigma[d as usize]
    }

    pub fn origin(&self, d: u32) -> u32 {
        self.origin[d as usize]
    }

    /// V − E + F.
    pub fn euler_characteristic(&self) -> i64 {
        self.nverts as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Out-darts of `v` in counterclockwise rotation order.
    pub fn vertex_darts(&self, v: u32) -> Result<Vec<u32>, DsemError> {
        let d0 = *self
            .vert_dart
            .get(v as usize)
            .ok_or(DsemError::UnknownVertex(v))?;
        let mut out = Vec::new();
        let mut cur = d0;
        loop {
            out.push(cur);
            cur = self.sigma[cur as usize];
            if cur == d0 {
                break;
            }
        }
        Ok(out)
    }

    /// Neighbor reached along dart `d`.
    pub fn head(&self, d: u32) -> u32 {
        self.origin[self.alpha[d as usize] as usize]
    }

    /// Cyclic sequence of the sizes of the faces around `v`, canonicalized.
    pub fn face_sequence(&self, v: u32) -> Result<FaceSeq, DsemError> {
        let darts = self.vertex_darts(v)?;
        let sizes: Vec<u32> = darts
            .iter()
            .map(|&d| self.faces[self.face_of[d as usize] as usize].len() as u32)
            .collect();
        FaceSeq::new(&sizes)
    }

    /// The link of `v`: the boundary cycle of the union of faces at `v`,
    /// in counterclockwise rotation order.
    pub fn link_cycle(&self, v: u32) -> Result<Vec<u32>, DsemError> {
        let darts = self.vertex_darts(v)?;
        let mut cycle = Vec::new();
        for &d in &darts {
            // The face on the left of d contributes its boundary strictly
            // between the head of d (supplied by the previous face in the
            // rotation) and v itself.
            let mut cur = self.fnext[self.fnext[d as usize] as usize];
            while self.origin[cur as usize] != v {
                cycle.push(self.origin[cur as usize]);
                cur = self.fnext[cur as usize];
            }
        }
        Ok(cycle)
    }

    /// Link word of `v` under a two-class labeling.
    pub fn link_sequence<F>(&self, v: u32, class_of: F) -> Result<LinkSeq, DsemError>
    where
        F: Fn(u32) -> LinkLetter,
    {
        let cycle = self.link_cycle(v)?;
        let word: Vec<LinkLetter> = cycle.iter().map(|&u| class_of(u)).collect();
        Ok(LinkSeq::new(&word))
    }

    /// The two face-sequences of a doubly semi-equivelar map, ordered
    /// F1 < F2, with the class of each vertex.
    pub fn two_classes(&self) -> Result<((FaceSeq, FaceSeq), Vec<LinkLetter>), DsemError> {
        let mut seqs: Vec<FaceSeq> = Vec::new();
        let mut class = Vec::with_capacity(self.nverts as usize);
        for v in 0..self.nverts {
            let fs = self.face_sequence(v)?;
            let idx = match seqs.iter().position(|s| *s == fs) {
                Some(i) => i,
                None => {
                    seqs.push(fs);
                    seqs.len() - 1
                }
            };
            class.push(idx);
        }
        if seqs.len() != 2 {
            return Err(DsemError::NotTwoClasses);
        }
        let swap = seqs[1] < seqs[0];
        let letters: Vec<LinkLetter> = class
            .iter()
            .map(|&c| {
                if (c == 0) != swap {
                    LinkLetter::F1
                } else {
                    LinkLetter::F2
                }
            })
            .collect();
        if swap {
            seqs.swap(0, 1);
        }
        let f2 = seqs.pop().unwrap();
        let f1 = seqs.pop().unwrap();
        Ok(((f1, f2), letters))
    }

    /// Canonical form under dart relabeling, minimized over every starting
    /// dart and both orientations. Two maps are isomorphic (allowing
    /// orientation-reversing isomorphisms) iff their canonical forms agree.
    pub fn canonical_form(&self) -> Vec<u32> {
        let n = self.dart_count();
        let mut sigma_inv = vec![0u32; n];
        for d in 0..n {
            sigma_inv[self.sigma[d] as usize] = d as u32;
        }
        let mut best: Option<Vec<u32>> = None;
        for rot in [&self.sigma, &sigma_inv] {
            for start in 0..n as u32 {
                if let Some(enc) = self.canonical_from(start, rot, best.as_deref()) {
                    match &best {
                        Some(b) if *b <= enc => {}
                        _ => best = Some(enc),
                    }
                }
            }
        }
        best.unwrap()
    }

    /// BFS relabeling from `start` using `rot` as the rotation (sigma or its
    /// inverse, the orientation-reversing candidate). Returns None as soon as
    /// the encoding is provably worse than `bound`.
    fn canonical_from(&self, start: u32, rot: &[u32], bound: Option<&[u32]>) -> Option<Vec<u32>> {
        let n = self.dart_count();
        let mut number = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        number[start as usize] = 0;
        order.push(start);
        let mut head = 0usize;
        while head < order.len() {
            let d = order[head];
            head += 1;
            for nb in [rot[d as usize], self.alpha[d as usize]] {
                if number[nb as usize] == u32::MAX {
                    number[nb as usize] = order.len() as u32;
                    order.push(nb);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        let mut enc = Vec::with_capacity(2 * n);
        let mut tied = bound.is_some();
        for &d in &order {
            for x in [
                number[rot[d as usize] as usize],
                number[self.alpha[d as usize] as usize],
            ] {
                enc.push(x);
                if tied {
                    let b = bound.unwrap()[enc.len() - 1];
                    if x > b {
                        return None;
                    }
                    if x < b {
                        tied = false;
                    }
                }
            }
        }
        Some(enc)
    }

    /// Face- and incidence-preserving bijection test, via canonical forms.
    pub fn is_isomorphic(&self, other: &CombMap) -> bool {
        if self.dart_count() != other.dart_count()
            || self.nverts != other.nverts
            || self.face_count() != other.face_count()
        {
            return false;
        }
        self.canonical_form() == other.canonical_form()
    }

    /// True iff every face has pairwise-distinct vertices and any two
    /// distinct faces meet in at most a vertex or a single edge.
    pub fn is_polyhedral(&self) -> bool {
        for f in &self.faces {
            let mut vs = f.clone();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() != f.len() {
                return false;
            }
        }
        let sorted: Vec<Vec<u32>> = self
            .faces
            .iter()
            .map(|f| {
                let mut v = f.clone();
                v.sort_unstable();
                v
            })
            .collect();
        for i in 0..self.faces.len() {
            for j in (i + 1)..self.faces.len() {
                let common: Vec<u32> = sorted[i]
                    .iter()
                    .copied()
                    .filter(|v| sorted[j].binary_search(v).is_ok())
                    .collect();
                match common.len() {
                    0 | 1 => {}
                    2 => {
                        let (a, b) = (common[0], common[1]);
                        if !(face_has_edge(&self.faces[i], a, b)
                            && face_has_edge(&self.faces[j], a, b))
                        {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            vertices: self.nverts,
            faces: self.faces.clone(),
        }
    }

    pub fn from_json(j: &MapJson) -> Result<CombMap, DsemError> {
        let m = CombMap::build_map(&j.faces)?;
        if m.nverts != j.vertices {
            return Err(DsemError::BadSpec(
                "map".into(),
                format!("vertex count {} vs faces referencing {}", j.vertices, m.nverts),
            ));
        }
        Ok(m)
    }

    /// OFF export with caller-provided viewing coordinates.
    pub fn to_off(&self, coords: &[(f64, f64, f64)]) -> String {
        let mut s = String::from("OFF\n");
        s.push_str(&format!(
            "{} {} {}\n",
            self.nverts,
            self.face_count(),
            self.edge_count()
        ));
        for v in 0..self.nverts as usize {
            let (x, y, z) = coords.get(v).copied().unwrap_or((0.0, 0.0, 0.0));
            s.push_str(&format!("{x} {y} {z}\n"));
        }
        for f in &self.faces {
            s.push_str(&f.len().to_string());
            for v in f {
                s.push_str(&format!(" {v}"));
            }
            s.push('\n');
        }
        s
    }
}

fn face_has_edge(face: &[u32], a: u32, b: u32) -> bool {
    let n = face.len();
    (0..n).any(|i| {
        let (u, v) = (face[i], face[(i + 1) % n]);
        (u == a && v == b) || (u == b && v == a)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn tetrahedron() -> CombMap {
        // outward counterclockwise boundaries of a tetrahedron
        CombMap::build_map(&[
            vec![0, 1, 2],
            vec![0, 3, 1],
            vec![1, 3, 2],
            vec![2, 3, 0],
        ])
        .unwrap()
    }

    #[test]
    fn tetrahedron_counts() {
        let t = tetrahedron();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.euler_characteristic(), 2);
        for v in 0..4 {
            assert_eq!(t.face_sequence(v).unwrap(), FaceSeq::parse("3^3").unwrap());
        }
        assert!(t.is_polyhedral());
    }

    #[test]
    fn alpha_is_fixed_point_free_involution() {
        let t = tetrahedron();
        for d in 0..t.dart_count() as u32 {
            assert_ne!(t.alpha(d), d);
            assert_eq!(t.alpha(t.alpha(d)), d);
        }
        let total: usize = t.faces().iter().map(|f| f.len()).sum();
        assert_eq!(total, t.dart_count());
    }

    #[test]
    fn single_triangle_is_non_manifold() {
        match CombMap::build_map(&[vec![0, 1, 2]]) {
            Err(DsemError::NonManifold(..)) => {}
            other => panic!("expected NonManifold, got {other:?}"),
        }
    }

    #[test]
    fn two_triangles_glued_along_three_edges() {
        let m = CombMap::build_map(&[vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert_eq!(m.euler_characteristic(), 2);
        assert_eq!(m.vertex_count(), 3);
        assert!(!m.is_polyhedral());
    }

    #[test]
    fn disconnected_input_rejected() {
        let r = CombMap::build_map(&[
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![3, 4, 5],
            vec![3, 5, 4],
        ]);
        assert!(matches!(r, Err(DsemError::DisconnectedMap)));
    }

    #[test]
    fn isomorphism_is_reflexive_and_label_invariant() {
        let t = tetrahedron();
        assert!(t.is_isomorphic(&t));
        // relabel vertices by v -> 3 - v and permute/rotate the face lists
        let base = [
            vec![0u32, 1, 2],
            vec![0, 3, 1],
            vec![1, 3, 2],
            vec![2, 3, 0],
        ];
        let mut relabeled: Vec<Vec<u32>> =
            base.iter().map(|f| f.iter().map(|&v| 3 - v).collect()).collect();
        relabeled.swap(0, 2);
        relabeled[1].rotate_left(1);
        let relabeled = CombMap::build_map(&relabeled).unwrap();
        assert!(t.is_isomorphic(&relabeled));
        // and an orientation-reversed copy (all faces reversed)
        let mut mirrored: Vec<Vec<u32>> = base
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.reverse();
                g
            })
            .collect();
        mirrored.rotate_left(2);
        let mirrored = CombMap::build_map(&mirrored).unwrap();
        assert!(t.is_isomorphic(&mirrored));
    }

    #[test]
    fn canonical_form_is_deterministic_under_face_rotation() {
        let a = CombMap::build_map(&[
            vec![0, 1, 2],
            vec![0, 3, 1],
            vec![1, 3, 2],
            vec![2, 3, 0],
        ])
        .unwrap();
        let b = CombMap::build_map(&[
            vec![2, 3, 0],
            vec![1, 2, 0],
            vec![3, 1, 0],
            vec![3, 2, 1],
        ])
        .unwrap();
        assert_eq!(a.canonical_form(), b.canonical_form());
    }

    #[test]
    fn cube_and_tetrahedron_differ() {
        let cube = CombMap::build_map(&[
            vec![0, 1, 2, 3],
            vec![7, 6, 5, 4],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ])
        .unwrap();
        assert_eq!(cube.euler_characteristic(), 2);
        assert!(!cube.is_isomorphic(&tetrahedron()));
        assert_eq!(
            cube.face_sequence(0).unwrap(),
            FaceSeq::parse("4^3").unwrap()
        );
        assert!(cube.is_polyhedral());
    }

    #[test]
    fn link_cycle_of_tetrahedron_vertex() {
        let t = tetrahedron();
        let link = t.link_cycle(0).unwrap();
        assert_eq!(link.len(), 3);
        let mut sorted = link.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
    }

    #[test]
    fn json_roundtrip() {
        let t = tetrahedron();
        let j = t.to_json();
        let s = serde_json::to_string(&j).unwrap();
        let back: MapJson = serde_json::from_str(&s).unwrap();
        let m = CombMap::from_json(&back).unwrap();
        assert!(t.is_isomorphic(&m));
    }
}
