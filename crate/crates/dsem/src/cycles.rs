//! Path tracing, cycle-types and classification of M(i,j,k) maps.
//!
//! Three cycle families run through every torus map: the horizontal row
//! cycles, the climbing family that takes the diagonal through every
//! triangle strip (DiagA) and the climbing family that stays vertical
//! (DiagB). The cycle-type (l1, {l2, l3}, l4) collects the horizontal
//! length, the two climbing lengths (sorted) and the length of the shortest
//! mixed climb-and-return cycle; it is a complete isomorphism invariant for
//! types T1–T4.

use crate::error::DsemError;
use crate::map::CombMap;
use crate::torus::{
    build_torus_map, enumerate_admissible, reflected_shift, DsemTag, DsemType, GridMap, Strip,
    TorusParams,
};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// The three traced path kinds. `Horizontal` follows a row; `DiagA` ascends
/// taking the up-right diagonal through triangle strips; `DiagB` ascends
/// vertically. DiagA and DiagB are mirror images of each other.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathKind {
    Horizontal,
    DiagA,
    DiagB,
}

/// Cycle-type invariant (l1, {l2 ≤ l3}, l4).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycleType {
    pub l1: u32,
    pub l_lo: u32,
    pub l_hi: u32,
    pub l4: u32,
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{{{},{}}},{})", self.l1, self.l_lo, self.l_hi, self.l4)
    }
}

/// One step of a path kind on the grid.
fn step(gm: &GridMap, r: u32, c: u32, kind: PathKind) -> (u32, u32) {
    match kind {
        PathKind::Horizontal => (r, (c + 1) % gm.params.i),
        PathKind::DiagA => {
            let c2 = match gm.strip_above(r) {
                Strip::Tri => c + 1,
                Strip::Quad => c,
            };
            gm.above(r, c2)
        }
        PathKind::DiagB => gm.above(r, c),
    }
}

/// Rule case of the path definitions, expressed as the required position of
/// the successor relative to the predecessor in the counterclockwise link of
/// the current vertex. `below`/`above` are the strips around the vertex's
/// row.
fn expected_link_delta(kind: PathKind, below: Strip, above: Strip) -> u32 {
    use Strip::*;
    match kind {
        PathKind::Horizontal => match below {
            Quad => 4,
            Tri => 3,
        },
        PathKind::DiagA => match (below, above) {
            (Quad, Tri) => 3,
            (Tri, Tri) => 3,
            (Tri, Quad) => 4,
            (Quad, Quad) => 4,
        },
        PathKind::DiagB => match (below, above) {
            (Quad, Tri) => 4,
            (Tri, Tri) => 3,
            (Tri, Quad) => 3,
            (Quad, Quad) => 4,
        },
    }
}

/// Length of the unique maximal cycle of the given kind through `start`.
/// With `verify_rules` every step is checked against the local link-pattern
/// rule of the kind's definition, on the actual map.
pub fn trace_cycle(
    gm: &GridMap,
    start: u32,
    kind: PathKind,
    verify_rules: bool,
) -> Result<u32, DsemError> {
    if start >= gm.map.vertex_count() {
        return Err(DsemError::UnknownVertex(start));
    }
    let (mut r, mut c) = gm.coords(start);
    let mut path = vec![start];
    loop {
        let (nr, nc) = step(gm, r, c, kind);
        let v = gm.vertex(nr, nc);
        if v == start {
            break;
        }
        path.push(v);
        (r, c) = (nr, nc);
        // any grid cycle closes within i*j steps; guard against bugs
        if path.len() > (gm.params.i * gm.params.j) as usize {
            return Err(DsemError::RuleMismatch(format!("{kind:?}"), path.len()));
        }
    }
    if verify_rules {
        let n = path.len();
        for idx in 0..n {
            let prev = path[(idx + n - 1) % n];
            let cur = path[idx];
            let next = path[(idx + 1) % n];
            let link = gm.map.link_cycle(cur)?;
            let ppos = link.iter().position(|&u| u == prev);
            let npos = link.iter().position(|&u| u == next);
            let (ppos, npos) = match (ppos, npos) {
                (Some(p), Some(q)) => (p, q),
                _ => return Err(DsemError::RuleMismatch(format!("{kind:?}"), idx)),
            };
            let l = link.len();
            let delta = ((npos + l) - ppos) % l;
            let (rr, _) = gm.coords(cur);
            let period = gm.dtype.strip_period();
            let below = gm.dtype.strip_layout[((rr + period - 1) % period) as usize];
            let above = gm.strip_above(rr);
            if delta as u32 != expected_link_delta(kind, below, above) {
                return Err(DsemError::RuleMismatch(format!("{kind:?}"), idx));
            }
        }
    }
    Ok(path.len() as u32)
}

/// Traced length of the Q4 cycle: climb j rows along each climbing family,
/// then return along the base row (leftward for the vertical family,
/// rightward for the diagonal one); the cycle-type takes the minimum.
pub fn q4_length(p: TorusParams) -> Result<u32, DsemError> {
    let gm = build_torus_map(p)?;
    Ok(q4_length_on(&gm))
}

pub(crate) fn q4_length_on(gm: &GridMap) -> u32 {
    let (i, j) = (gm.params.i, gm.params.j);
    let land = |kind: PathKind| -> u32 {
        let (mut r, mut c) = (0u32, 0u32);
        for _ in 0..j {
            (r, c) = step(gm, r, c, kind);
        }
        debug_assert_eq!(r, 0);
        c
    };
    let land_vert = land(PathKind::DiagB);
    let land_diag = land(PathKind::DiagA);
    let ret_vert = land_vert % i; // leftward distance back to column 0
    let ret_diag = (i - land_diag % i) % i; // rightward distance
    let q4 = j + ret_vert.min(ret_diag);
    // Closed forms of the classified types with a single
    // diagonal-drift constant; exact by construction.
    if gm.params.tag == DsemTag::T1 || gm.params.tag == DsemTag::T3 {
        let d = gm.dtype.diagonal_drift(j);
        let closed = (p_k(gm) + j).min(((2 * i - p_k(gm) - d % i) % i) + j);
        debug_assert_eq!(q4, closed, "{} {}", gm.params.tag, gm.params);
    }
    q4
}

fn p_k(gm: &GridMap) -> u32 {
    gm.params.k
}

/// Cycle-type of an admissible parameter triple. Lengths are traced on the
/// built map; within each climbing family the length is independent of the
/// start vertex (asserted).
pub fn cycle_type(p: TorusParams) -> Result<CycleType, DsemError> {
    let gm = build_torus_map(p)?;
    cycle_type_on(&gm)
}

pub fn cycle_type_on(gm: &GridMap) -> Result<CycleType, DsemError> {
    let l1 = trace_cycle(gm, 0, PathKind::Horizontal, false)?;
    let la = trace_cycle(gm, 0, PathKind::DiagA, false)?;
    let lb = trace_cycle(gm, 0, PathKind::DiagB, false)?;
    for v in 1..gm.map.vertex_count() {
        debug_assert_eq!(trace_cycle(gm, v, PathKind::Horizontal, false)?, l1);
        debug_assert_eq!(trace_cycle(gm, v, PathKind::DiagA, false)?, la);
        debug_assert_eq!(trace_cycle(gm, v, PathKind::DiagB, false)?, lb);
    }
    let l4 = q4_length_on(gm);
    Ok(CycleType {
        l1,
        l_lo: la.min(lb),
        l_hi: la.max(lb),
        l4,
    })
}

/// An isomorphism class of M(i,j,k) representations.
pub struct ParamClass {
    pub cycle_type: CycleType,
    pub members: Vec<TorusParams>,
    pub representative: GridMap,
}

/// Partition of the admissible parameters with n vertices by cycle-type.
/// Classes appear in order of their first member (by (j, i, k)).
pub fn classify(tag: DsemTag, n: u32) -> Result<Vec<ParamClass>, DsemError> {
    let params = enumerate_admissible(tag, n);
    let maps: Vec<(TorusParams, GridMap, CycleType)> =
        crate::par::map_params(&params, |&p| -> Result<_, DsemError> {
            let gm = build_torus_map(p)?;
            let ct = cycle_type_on(&gm)?;
            Ok((p, gm, ct))
        })?;
    let mut classes: Vec<ParamClass> = Vec::new();
    for (p, gm, ct) in maps {
        match classes.iter_mut().find(|c| c.cycle_type == ct) {
            Some(c) => c.members.push(p),
            None => classes.push(ParamClass {
                cycle_type: ct,
                members: vec![p],
                representative: gm,
            }),
        }
    }
    Ok(classes)
}

/// True iff cutting the map along the cycle leaves it connected, i.e. the
/// cycle does not bound a disk. On the torus a simple closed cycle is
/// contractible exactly when cutting along it separates the map (one side is
/// then a disk).
pub fn is_noncontractible(map: &CombMap, cycle: &[u32]) -> Result<bool, DsemError> {
    let n = cycle.len();
    if n < 3 {
        return Err(DsemError::NotACycle(format!("length {n}")));
    }
    let mut distinct: Vec<u32> = cycle.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != n {
        return Err(DsemError::NotACycle("repeated vertex".into()));
    }
    let mut cycle_edges: BTreeSet<(u32, u32)> = BTreeSet::new();
    for idx in 0..n {
        let (u, v) = (cycle[idx], cycle[(idx + 1) % n]);
        if u >= map.vertex_count() || v >= map.vertex_count() {
            return Err(DsemError::UnknownVertex(u.max(v)));
        }
        cycle_edges.insert((u.min(v), u.max(v)));
    }
    // every consecutive pair must be an edge of the map
    let mut edge_faces: BTreeMap<(u32, u32), Vec<usize>> = BTreeMap::new();
    for (fi, f) in map.faces().iter().enumerate() {
        for idx in 0..f.len() {
            let (u, v) = (f[idx], f[(idx + 1) % f.len()]);
            edge_faces.entry((u.min(v), u.max(v))).or_default().push(fi);
        }
    }
    for e in &cycle_edges {
        if !edge_faces.contains_key(e) {
            return Err(DsemError::NotACycle(format!("{e:?} is not an edge")));
        }
    }
    // components of the face-adjacency graph, not crossing cycle edges
    let nf = map.face_count();
    let mut comp = vec![usize::MAX; nf];
    let mut ncomp = 0;
    for start in 0..nf {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp[start] = ncomp;
        while let Some(f) = stack.pop() {
            for idx in 0..map.faces()[f].len() {
                let (u, v) = (
                    map.faces()[f][idx],
                    map.faces()[f][(idx + 1) % map.faces()[f].len()],
                );
                let key = (u.min(v), u.max(v));
                if cycle_edges.contains(&key) {
                    continue;
                }
                for &g in &edge_faces[&key] {
                    if comp[g] == usize::MAX {
                        comp[g] = ncomp;
                        stack.push(g);
                    }
                }
            }
        }
        ncomp += 1;
    }
    Ok(ncomp == 1)
}

/// Reflection invariance of the cycle-type: p and its shift reflection are
/// the same map up to isomorphism.
pub fn mirror_check(p: TorusParams) -> Result<bool, DsemError> {
    let dtype = DsemType::torus(p.tag)?;
    let k2 = reflected_shift(&dtype, p);
    Ok(cycle_type(p)? == cycle_type(TorusParams { k: k2, ..p })?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(tag: DsemTag, i: u32, j: u32, k: u32) -> TorusParams {
        TorusParams::new(tag, i, j, k).unwrap()
    }

    #[test]
    fn trace_examples_from_the_tables() {
        let gm = build_torus_map(gp(DsemTag::T1, 4, 3, 1)).unwrap();
        assert_eq!(trace_cycle(&gm, 0, PathKind::Horizontal, true).unwrap(), 4);
        assert_eq!(trace_cycle(&gm, 0, PathKind::DiagA, true).unwrap(), 12);
        let gm2 = build_torus_map(gp(DsemTag::T1, 3, 3, 0)).unwrap();
        let la = trace_cycle(&gm2, 0, PathKind::DiagA, true).unwrap();
        let lb = trace_cycle(&gm2, 0, PathKind::DiagB, true).unwrap();
        assert_eq!(la.min(lb), 3);
        assert_eq!(la.max(lb), 9);
    }

    #[test]
    fn q4_examples() {
        assert_eq!(q4_length(gp(DsemTag::T1, 4, 3, 1)).unwrap(), 4);
        assert_eq!(q4_length(gp(DsemTag::T1, 3, 3, 2)).unwrap(), 5);
        assert_eq!(q4_length(gp(DsemTag::T4, 3, 4, 1)).unwrap(), 5);
    }

    #[test]
    fn cycle_type_examples() {
        let ct = cycle_type(gp(DsemTag::T1, 6, 3, 2)).unwrap();
        assert_eq!((ct.l1, ct.l_lo, ct.l_hi, ct.l4), (6, 9, 9, 5));
        let ct2 = cycle_type(gp(DsemTag::T2, 3, 8, 0)).unwrap();
        assert_eq!((ct2.l1, ct2.l_lo, ct2.l_hi, ct2.l4), (3, 8, 8, 8));
        let ct3 = cycle_type(gp(DsemTag::T3, 6, 3, 3)).unwrap();
        assert_eq!((ct3.l1, ct3.l_lo, ct3.l_hi, ct3.l4), (6, 6, 9, 5));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(DsemTag::T1, 18).unwrap().len(), 6);
        assert_eq!(classify(DsemTag::T1, 9).unwrap().len(), 2);
        let total9: usize = classify(DsemTag::T1, 9)
            .unwrap()
            .iter()
            .map(|c| c.members.len())
            .sum();
        assert_eq!(total9, 3);
        let t4 = classify(DsemTag::T4, 24).unwrap();
        assert_eq!(t4.len(), 5);
        let special = t4
            .iter()
            .find(|c| {
                c.members
                    .iter()
                    .any(|p| (p.i, p.j, p.k) == (3, 8, 0))
            })
            .unwrap();
        let members: Vec<_> = special.members.iter().map(|p| (p.i, p.j, p.k)).collect();
        assert_eq!(members, vec![(3, 8, 0), (3, 8, 1)]);
        let ct = special.cycle_type;
        assert_eq!((ct.l1, ct.l_lo, ct.l_hi, ct.l4), (3, 8, 24, 8));
    }

    #[test]
    fn rule_verification_accepts_all_kinds_on_small_maps() {
        for tag in DsemTag::all_torus() {
            for n in [12u32, 16, 24] {
                for p in enumerate_admissible(tag, n) {
                    let gm = build_torus_map(p).unwrap();
                    for kind in [PathKind::Horizontal, PathKind::DiagA, PathKind::DiagB] {
                        trace_cycle(&gm, 0, kind, true).unwrap();
                    }
                }
            }
        }
    }

    #[test]
    fn noncontractibility() {
        let gm = build_torus_map(gp(DsemTag::T1, 4, 3, 1)).unwrap();
        // horizontal cycle through row 0
        let row: Vec<u32> = (0..4).map(|c| gm.vertex(0, c)).collect();
        assert!(is_noncontractible(&gm.map, &row).unwrap());
        // traced DiagB cycle
        let mut cyc = vec![gm.vertex(0, 0)];
        let (mut r, mut c) = (0, 0);
        loop {
            let (nr, nc) = super::step(&gm, r, c, PathKind::DiagB);
            if gm.vertex(nr, nc) == cyc[0] {
                break;
            }
            cyc.push(gm.vertex(nr, nc));
            (r, c) = (nr, nc);
        }
        assert!(is_noncontractible(&gm.map, &cyc).unwrap());
        // a quad face boundary bounds a disk
        let quad = gm.map.faces().iter().find(|f| f.len() == 4).unwrap().clone();
        assert!(!is_noncontractible(&gm.map, &quad).unwrap());
        // not a cycle
        assert!(is_noncontractible(&gm.map, &[0, 1]).is_err());
    }

    #[test]
    fn mirror_property_small_sweep() {
        for tag in DsemTag::all_torus() {
            for n in 1..=24 {
                for p in enumerate_admissible(tag, n) {
                    assert!(mirror_check(p).unwrap(), "{tag} {p}");
                }
            }
        }
    }

    #[test]
    fn diagonal_families_have_at_most_two_lengths() {
        for tag in DsemTag::all_torus() {
            for n in [12u32, 18, 24] {
                for p in enumerate_admissible(tag, n) {
                    let gm = build_torus_map(p).unwrap();
                    let mut lens = BTreeSet::new();
                    for v in 0..gm.map.vertex_count() {
                        lens.insert(trace_cycle(&gm, v, PathKind::DiagA, false).unwrap());
                        lens.insert(trace_cycle(&gm, v, PathKind::DiagB, false).unwrap());
                    }
                    assert!(lens.len() <= 2, "{tag} {p}: {lens:?}");
                }
            }
        }
    }
}
