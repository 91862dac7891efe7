//! Bounded-radius link-completion search for face-sequence pairs.
//!
//! Starting from a seed vertex of the first face-sequence, the search grows
//! a simply-connected patch by completing vertex links in breadth order,
//! branching over class assignments and over the rotations of each class's
//! face cycle. A pair is refuted when every branch runs into a vertex whose
//! faces fit neither sequence or two same-class vertices with different
//! link words; it is locally consistent when a full patch of the requested
//! radius exists. Consistent patches are grouped by the pair of link words
//! realized by the two classes — these combinations are the DSEM types.
//!
//! For patches whose polygon sizes all lie in {3,4,6,12} the growth also
//! carries an exact unit-edge embedding, used to identify coincident
//! boundary vertices and, by the catalog generator, to cut fundamental
//! domains out of grown patches.

use crate::error::DsemError;
use crate::geom::{ccw_turn_units, embeddable_size, unit_dir, Pt};
use crate::seq::{canonical_cycle, FaceSeq, LinkLetter, LinkSeq};
use std::collections::{BTreeMap, BTreeSet};

/// Outcome of a pair search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// Every completion dies within the radius; `depth` is the largest
    /// seed-distance reached by a closed vertex across the refutation.
    Contradiction { depth: u32 },
    /// At least one full patch of the requested radius exists. `combos`
    /// lists the distinct (link word of the F1 class, link word of the F2
    /// class) pairs realized by full patches, letters in canonical order.
    Consistent { combos: Vec<(LinkSeq, LinkSeq)> },
    /// Search stopped early (node budget, or a growth step the disk model
    /// cannot represent); nothing is claimed either way.
    Undecided { explored: u64 },
}

/// Default search bounds: the published refutation chains all close well
/// within radius 4.
pub const DEFAULT_RADIUS: u32 = 4;
pub const DEFAULT_BUDGET: u64 = 10_000_000;

type VId = u32;
type FId = u32;

#[derive(Clone)]
struct PFace {
    verts: Vec<VId>, // ccw boundary
}

impl PFace {
    fn pos_of(&self, v: VId) -> usize {
        self.verts.iter().position(|&u| u == v).unwrap()
    }
    fn out_of(&self, v: VId) -> VId {
        let p = self.pos_of(v);
        self.verts[(p + 1) % self.verts.len()]
    }
    fn in_of(&self, v: VId) -> VId {
        let p = self.pos_of(v);
        self.verts[(p + self.verts.len() - 1) % self.verts.len()]
    }
}

#[derive(Clone)]
struct PVert {
    class: Option<u8>,
    /// contiguous counterclockwise arc of incident faces
    fan: Vec<FId>,
    closed: bool,
    pos: Option<Pt>,
}

#[derive(Clone)]
pub(crate) struct Patch {
    words: [Vec<u32>; 2],
    verts: Vec<PVert>,
    faces: Vec<PFace>,
    edge_faces: BTreeMap<(VId, VId), Vec<FId>>,
    pos_index: BTreeMap<(i64, i64, i64, i64), VId>,
    /// link word of each class (over class indices), pinned by the first
    /// fully-classed closed vertex of the class
    pinned: [Option<Vec<u8>>; 2],
    coords: bool,
}

/// Growth step failure. `Dead` prunes the branch (a genuine local
/// contradiction); `Inconclusive` means the disk model could not represent
/// the step, which must never count toward a refutation.
#[derive(Debug)]
enum Grow {
    Dead,
    Inconclusive,
}

fn pt_key(p: &Pt) -> (i64, i64, i64, i64) {
    // patch coordinates always have denominator 1 or 2
    let enc = |q: num_rational::Rational64| *q.numer() * (2 / *q.denom());
    (enc(p.x.a), enc(p.x.b), enc(p.y.a), enc(p.y.b))
}

fn dir_between(from: &Pt, to: &Pt) -> Option<u8> {
    let d = *to - *from;
    (0..12u8).find(|&k| unit_dir(k) == d)
}

impl Patch {
    fn new(f1: &FaceSeq, f2: &FaceSeq, coords: bool, pinned: [Option<Vec<u8>>; 2]) -> Patch {
        let mut p = Patch {
            words: [f1.entries().to_vec(), f2.entries().to_vec()],
            verts: Vec::new(),
            faces: Vec::new(),
            edge_faces: BTreeMap::new(),
            pos_index: BTreeMap::new(),
            pinned,
            coords,
        };
        let seed = p.new_vertex(coords.then(Pt::origin));
        p.verts[seed as usize].class = Some(0);
        p
    }

    fn new_vertex(&mut self, pos: Option<Pt>) -> VId {
        let id = self.verts.len() as VId;
        if let Some(pt) = pos {
            let prev = self.pos_index.insert(pt_key(&pt), id);
            debug_assert!(prev.is_none());
        }
        self.verts.push(PVert {
            class: None,
            fan: Vec::new(),
            closed: false,
            pos,
        });
        id
    }

    fn face_size(&self, f: FId) -> u32 {
        self.faces[f as usize].verts.len() as u32
    }

    fn fan_sizes(&self, v: VId) -> Vec<u32> {
        self.verts[v as usize]
            .fan
            .iter()
            .map(|&f| self.face_size(f))
            .collect()
    }

    /// Fan end neighbors: (out of the first face, in of the last face).
    fn arc_ends(&self, v: VId) -> Option<(VId, VId)> {
        let fan = &self.verts[v as usize].fan;
        let first = *fan.first()?;
        let last = *fan.last()?;
        Some((
            self.faces[first as usize].out_of(v),
            self.faces[last as usize].in_of(v),
        ))
    }

    fn edge_load(&self, u: VId, w: VId) -> usize {
        self.edge_faces
            .get(&(u.min(w), u.max(w)))
            .map_or(0, |f| f.len())
    }

    /// Inserts a face and threads it into the fans of its vertices.
    fn add_face(&mut self, verts: Vec<VId>) -> Result<FId, Grow> {
        let s = verts.len();
        debug_assert!(s >= 3);
        let mut dedup = verts.clone();
        dedup.sort_unstable();
        dedup.dedup();
        if dedup.len() != s {
            return Err(Grow::Dead); // repeated vertex in one boundary
        }
        for t in 0..s {
            if self.edge_load(verts[t], verts[(t + 1) % s]) >= 2 {
                return Err(Grow::Dead);
            }
        }
        let fid = self.faces.len() as FId;
        for t in 0..s {
            let (u, w) = (verts[t], verts[(t + 1) % s]);
            self.edge_faces
                .entry((u.min(w), u.max(w)))
                .or_default()
                .push(fid);
        }
        self.faces.push(PFace {
            verts: verts.clone(),
        });
        for &u in &verts {
            self.thread_into_fan(u, fid)?;
        }
        Ok(fid)
    }

    fn thread_into_fan(&mut self, u: VId, fid: FId) -> Result<(), Grow> {
        let (g_out, g_in) = {
            let f = &self.faces[fid as usize];
            (f.out_of(u), f.in_of(u))
        };
        if self.verts[u as usize].closed {
            return Err(Grow::Dead); // the link is already a closed cycle
        }
        if self.verts[u as usize].fan.is_empty() {
            self.verts[u as usize].fan.push(fid);
            return Ok(());
        }
        let (start_nbr, end_nbr) = self.arc_ends(u).unwrap();
        if g_out == end_nbr {
            self.verts[u as usize].fan.push(fid);
        } else if g_in == start_nbr {
            self.verts[u as usize].fan.insert(0, fid);
        } else {
            return Err(Grow::Inconclusive); // the fan would split in two arcs
        }
        let (s2, e2) = self.arc_ends(u).unwrap();
        if s2 == e2
            && self.verts[u as usize].fan.len() >= 2
            && self.edge_load(u, s2) == 2
        {
            self.verts[u as usize].closed = true;
        }
        Ok(())
    }

    /// Counterclockwise link cycle of a closed vertex.
    fn link_of(&self, v: VId) -> Vec<VId> {
        debug_assert!(self.verts[v as usize].closed);
        let mut out = Vec::new();
        for &f in &self.verts[v as usize].fan {
            let face = &self.faces[f as usize];
            let s = face.verts.len();
            let p = face.pos_of(v);
            // skip the out-neighbor (it belongs to the previous face's
            // stretch), then walk up to the in-neighbor inclusive
            for t in 2..s {
                out.push(face.verts[(p + t) % s]);
            }
        }
        out
    }

    /// Gap size sequences of class `c` compatible with the current fan.
    fn gaps_for(&self, v: VId, c: u8) -> BTreeSet<Vec<u32>> {
        let word = &self.words[c as usize];
        let fan = self.fan_sizes(v);
        let n = word.len();
        let mut out = BTreeSet::new();
        if fan.len() > n || (self.verts[v as usize].closed && fan.len() != n) {
            return out;
        }
        if fan.is_empty() {
            // a bare seed: rotation and reflection are free up to patch
            // isomorphism, one representative suffices
            out.insert(word.clone());
            return out;
        }
        for flip in [false, true] {
            for rot in 0..n {
                let w_at = |i: usize| -> u32 {
                    if flip {
                        word[(rot + n - (i % n)) % n]
                    } else {
                        word[(rot + i) % n]
                    }
                };
                if (0..fan.len()).all(|i| w_at(i) == fan[i]) {
                    out.insert((fan.len()..n).map(w_at).collect());
                }
            }
        }
        out
    }

    fn class_fits(&self, v: VId, c: u8) -> bool {
        !self.gaps_for(v, c).is_empty()
    }

    /// Completes the link of `v` as class `c` by attaching the gap faces
    /// counterclockwise after the current fan.
    fn complete_vertex(&mut self, v: VId, c: u8, gap: &[u32]) -> Result<(), Grow> {
        match self.verts[v as usize].class {
            Some(old) if old != c => return Err(Grow::Dead),
            _ => self.verts[v as usize].class = Some(c),
        }
        if gap.is_empty() {
            // the fan already covers the whole cycle; unless it has wrapped,
            // closing would need a vertex identification the disk model
            // does not perform
            return if self.verts[v as usize].closed {
                Ok(())
            } else {
                Err(Grow::Inconclusive)
            };
        }
        let mut rest = gap;
        if self.verts[v as usize].fan.is_empty() {
            let pos = self.verts[v as usize].pos.map(|p| p + unit_dir(0));
            let x = self.new_vertex(pos);
            self.attach_gap_face(v, x, rest[0], None)?;
            rest = &rest[1..];
        }
        for (t, &s) in rest.iter().enumerate() {
            let (start_nbr, end_nbr) = self.arc_ends(v).unwrap();
            let target = (t + 1 == rest.len()).then_some(start_nbr);
            self.attach_gap_face(v, end_nbr, s, target)?;
        }
        if !self.verts[v as usize].closed {
            return Err(Grow::Dead);
        }
        Ok(())
    }

    /// Builds one counterclockwise face [v, anchor, m_1, …, m_{s−2}] glued
    /// to the boundary edge (v, anchor). With `target` the face must close
    /// onto it as its final boundary vertex. New slots are identified by
    /// position when coordinates are on.
    fn attach_gap_face(
        &mut self,
        v: VId,
        anchor: VId,
        s: u32,
        target: Option<VId>,
    ) -> Result<(), Grow> {
        let slots = s as usize - 2;
        let mut verts = vec![v, anchor];
        if self.coords {
            let pv = self.verts[v as usize].pos.unwrap();
            let pa = self.verts[anchor as usize].pos.unwrap();
            let mut dir = dir_between(&pv, &pa).ok_or(Grow::Inconclusive)?;
            let turn = ccw_turn_units(s);
            let mut cur = pa;
            for t in 0..slots {
                dir = (dir + turn) % 12;
                cur = cur + unit_dir(dir);
                let found = self.pos_index.get(&pt_key(&cur)).copied();
                let id = match found {
                    Some(u) => u,
                    None => {
                        if t + 1 == slots && target.is_some() {
                            return Err(Grow::Dead); // geometry misses the target
                        }
                        self.new_vertex(Some(cur))
                    }
                };
                if t + 1 == slots {
                    if let Some(w) = target {
                        if id != w {
                            return Err(Grow::Dead);
                        }
                    }
                }
                verts.push(id);
            }
        } else {
            for t in 0..slots {
                let id = match (t + 1 == slots, target) {
                    (true, Some(w)) => w,
                    _ => self.new_vertex(None),
                };
                verts.push(id);
            }
        }
        self.add_face(verts).map(|_| ())
    }

    /// Seed distances over the current edge set.
    fn distances(&self) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.verts.len()];
        let mut adj: Vec<Vec<VId>> = vec![Vec::new(); self.verts.len()];
        for &(u, w) in self.edge_faces.keys() {
            adj[u as usize].push(w);
            adj[w as usize].push(u);
        }
        let mut queue = std::collections::VecDeque::new();
        dist[0] = 0;
        queue.push_back(0u32);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Constraint propagation. Forces classes where only one fits, pins the
    /// per-class link words from closed vertices, and checks pinned words on
    /// every closed vertex (uniformity of links within a class).
    fn propagate(&mut self, require_mixed: bool) -> Result<(), Grow> {
        loop {
            let mut changed = false;
            for v in 0..self.verts.len() as VId {
                match self.verts[v as usize].class {
                    Some(c) => {
                        if !self.class_fits(v, c) {
                            return Err(Grow::Dead);
                        }
                    }
                    None => match (self.class_fits(v, 0), self.class_fits(v, 1)) {
                        (false, false) => return Err(Grow::Dead),
                        (true, false) => {
                            self.verts[v as usize].class = Some(0);
                            changed = true;
                        }
                        (false, true) => {
                            self.verts[v as usize].class = Some(1);
                            changed = true;
                        }
                        (true, true) => {}
                    },
                }
            }
            for v in 0..self.verts.len() as VId {
                if !self.verts[v as usize].closed {
                    continue;
                }
                let c = match self.verts[v as usize].class {
                    Some(c) => c,
                    None => continue,
                };
                let link = self.link_of(v);
                let letters: Vec<Option<u8>> = link
                    .iter()
                    .map(|&u| self.verts[u as usize].class)
                    .collect();
                match self.pinned[c as usize].clone() {
                    Some(word) => {
                        if word.len() != letters.len() {
                            return Err(Grow::Dead);
                        }
                        let n = word.len();
                        let mut feasible = Vec::new();
                        for flip in [false, true] {
                            for rot in 0..n {
                                let ok = (0..n).all(|i| {
                                    let w = if flip {
                                        word[(rot + n - (i % n)) % n]
                                    } else {
                                        word[(rot + i) % n]
                                    };
                                    letters[i].map_or(true, |l| l == w)
                                });
                                if ok {
                                    feasible.push((rot, flip));
                                }
                            }
                        }
                        match feasible.len() {
                            0 => return Err(Grow::Dead),
                            1 => {
                                let (rot, flip) = feasible[0];
                                for i in 0..n {
                                    if letters[i].is_some() {
                                        continue;
                                    }
                                    let w = if flip {
                                        word[(rot + n - (i % n)) % n]
                                    } else {
                                        word[(rot + i) % n]
                                    };
                                    let u = link[i];
                                    if !self.class_fits(u, w) {
                                        return Err(Grow::Dead);
                                    }
                                    self.verts[u as usize].class = Some(w);
                                    changed = true;
                                }
                            }
                            _ => {}
                        }
                    }
                    None => {
                        if letters.iter().all(|l| l.is_some()) {
                            let word: Vec<u8> = letters.iter().map(|l| l.unwrap()).collect();
                            self.pinned[c as usize] = Some(canonical_cycle(&word));
                            changed = true;
                        }
                    }
                }
            }
            if require_mixed && self.verts[0].closed {
                let link = self.link_of(0);
                let classes: Vec<Option<u8>> = link
                    .iter()
                    .map(|&u| self.verts[u as usize].class)
                    .collect();
                if classes.iter().all(|c| *c == Some(0)) {
                    return Err(Grow::Dead); // no second class in the seed link
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }
}

/// A fully grown patch, as handed to the catalog generator.
pub(crate) struct Grown {
    pub verts: Vec<GrownVert>,
    pub faces: Vec<Vec<u32>>,
}

pub(crate) struct GrownVert {
    pub pos: Pt,
    pub class: Option<u8>,
    pub closed: bool,
    pub dist: u32,
}

struct Ctx {
    radius: u32,
    budget: u64,
    nodes: u64,
    exhausted: bool,
    inconclusive: bool,
    require_mixed: bool,
    max_depth: u32,
    completions: BTreeSet<(Option<Vec<u8>>, Option<Vec<u8>>)>,
    found_any: bool,
    found_combo: bool,
    stop_on_first: bool,
    collect_first: bool,
    first: Option<(Patch, Vec<u32>)>,
}

fn dfs(patch: &mut Patch, ctx: &mut Ctx) {
    if ctx.exhausted
        || (ctx.collect_first && ctx.first.is_some())
        || (ctx.stop_on_first && ctx.found_any)
    {
        return;
    }
    ctx.nodes += 1;
    if ctx.nodes > ctx.budget {
        ctx.exhausted = true;
        return;
    }
    if patch.propagate(ctx.require_mixed).is_err() {
        return;
    }
    let dist = patch.distances();
    for (v, d) in dist.iter().enumerate() {
        if patch.verts[v].closed && *d != u32::MAX {
            ctx.max_depth = ctx.max_depth.max(*d);
        }
    }
    // next vertex to complete: an open link inside the requested radius.
    // With coordinates, grow the geometrically innermost vertex first so the
    // disk stays round and pockets close by fan wrap-around; otherwise use
    // breadth order.
    // a full patch of radius r has every vertex at distance ≤ r interior
    let open = (0..patch.verts.len() as VId)
        .filter(|&v| !patch.verts[v as usize].closed && dist[v as usize] <= ctx.radius);
    let pick = if patch.coords {
        open.min_by_key(|&v| (patch.verts[v as usize].pos.unwrap().norm2(), v))
    } else {
        open.min_by_key(|&v| (dist[v as usize], v))
    };
    if let Some(v) = pick {
        let mut branches: Vec<(u8, Vec<u32>)> = Vec::new();
        let classes: Vec<u8> = match patch.verts[v as usize].class {
            Some(c) => vec![c],
            None => vec![0, 1],
        };
        for c in classes {
            for gap in patch.gaps_for(v, c) {
                branches.push((c, gap));
            }
        }
        branches.sort();
        for (c, gap) in branches {
            let mut child = patch.clone();
            match child.complete_vertex(v, c, &gap) {
                Ok(()) => dfs(&mut child, ctx),
                Err(Grow::Dead) => {}
                Err(Grow::Inconclusive) => ctx.inconclusive = true,
            }
            if ctx.exhausted {
                return;
            }
        }
        return;
    }
    // all links inside the radius are closed; decide classes that appear in
    // closed links so the interior is fully determined
    let mut undecided: Option<VId> = None;
    'outer: for v in 0..patch.verts.len() as VId {
        if !patch.verts[v as usize].closed {
            continue;
        }
        for u in patch.link_of(v) {
            if patch.verts[u as usize].class.is_none() {
                undecided = Some(match undecided {
                    Some(cur) => cur.min(u),
                    None => u,
                });
                continue 'outer;
            }
        }
    }
    if let Some(u) = undecided {
        for c in [0u8, 1] {
            if !patch.class_fits(u, c) {
                continue;
            }
            let mut child = patch.clone();
            child.verts[u as usize].class = Some(c);
            dfs(&mut child, ctx);
            if ctx.exhausted {
                return;
            }
        }
        return;
    }
    // full patch of the requested radius
    ctx.found_any = true;
    if patch.pinned[0].is_some() && patch.pinned[1].is_some() {
        ctx.found_combo = true;
        ctx.completions
            .insert((patch.pinned[0].clone(), patch.pinned[1].clone()));
    }
    if ctx.collect_first && ctx.first.is_none() {
        ctx.first = Some((patch.clone(), dist));
    }
}

fn run_search(
    f1: &FaceSeq,
    f2: &FaceSeq,
    radius: u32,
    budget: u64,
    pinned: [Option<Vec<u8>>; 2],
    require_mixed: bool,
    stop_on_first: bool,
    collect_first: bool,
) -> Result<(Verdict, Option<(Patch, Vec<u32>)>), DsemError> {
    if radius < 1 {
        return Err(DsemError::InvalidRadius(radius));
    }
    if f1 == f2 {
        return Err(DsemError::InvalidFaceSeq(format!(
            "pair needs two distinct face-sequences, got ({f1}) twice"
        )));
    }
    let coords = f1.entries().iter().chain(f2.entries()).all(|&s| embeddable_size(s));
    let mut patch = Patch::new(f1, f2, coords, pinned);
    let mut ctx = Ctx {
        radius,
        budget,
        nodes: 0,
        exhausted: false,
        inconclusive: false,
        require_mixed,
        max_depth: 0,
        completions: BTreeSet::new(),
        found_any: false,
        found_combo: false,
        stop_on_first,
        collect_first,
        first: None,
    };
    dfs(&mut patch, &mut ctx);
    let verdict = if ctx.exhausted {
        Verdict::Undecided {
            explored: ctx.nodes,
        }
    } else if ctx.found_combo {
        let combos = combos_to_linkseqs(f1, f2, &ctx.completions);
        Verdict::Consistent { combos }
    } else if ctx.found_any || ctx.inconclusive {
        // full patches exist but none determines both link words (the
        // second class only ever appears on far face corners), or a growth
        // step fell outside the disk model: claim nothing
        Verdict::Undecided {
            explored: ctx.nodes,
        }
    } else {
        Verdict::Contradiction {
            depth: ctx.max_depth,
        }
    };
    Ok((verdict, ctx.first))
}

/// Maps per-class link words (over class indices) to canonical-letter link
/// words, with F1 = the smaller face-sequence of the pair.
fn combos_to_linkseqs(
    f1: &FaceSeq,
    f2: &FaceSeq,
    completions: &BTreeSet<(Option<Vec<u8>>, Option<Vec<u8>>)>,
) -> Vec<(LinkSeq, LinkSeq)> {
    let swap = f2 < f1; // class 0 is the second letter if f2 is smaller
    let to_letters = |word: &[u8]| -> LinkSeq {
        let letters: Vec<LinkLetter> = word
            .iter()
            .map(|&c| {
                if (c == 0) != swap {
                    LinkLetter::F1
                } else {
                    LinkLetter::F2
                }
            })
            .collect();
        LinkSeq::new(&letters)
    };
    let mut out = BTreeSet::new();
    for (w0, w1) in completions {
        if let (Some(w0), Some(w1)) = (w0, w1) {
            let (wf1, wf2) = if swap { (w1, w0) } else { (w0, w1) };
            out.insert((to_letters(wf1), to_letters(wf2)));
        }
    }
    out.into_iter().collect()
}

/// Depth-first local-existence search for the unordered pair {f1, f2},
/// seeded on an f1 vertex whose link must contain at least one f2 vertex.
pub fn search_pair(
    f1: &FaceSeq,
    f2: &FaceSeq,
    radius: u32,
    node_budget: u64,
) -> Result<Verdict, DsemError> {
    run_search(f1, f2, radius, node_budget, [None, None], true, false, false).map(|(v, _)| v)
}

/// Existence-only variant: stops at the first full patch, so the Consistent
/// verdict carries no combination list.
fn search_pair_exists(
    f1: &FaceSeq,
    f2: &FaceSeq,
    radius: u32,
    node_budget: u64,
) -> Result<Verdict, DsemError> {
    run_search(f1, f2, radius, node_budget, [None, None], true, true, false).map(|(v, _)| v)
}

/// Entry compatibility check for candidate_pairs: neither seeding refutes
/// the pair at the default search radius. The published candidate scan
/// closes the link of the witness vertex wherever it sits, which a fixed
/// one-level completion cannot reproduce, so the full default radius is
/// used here.
pub fn pair_survives_radius1(f1: &FaceSeq, f2: &FaceSeq) -> bool {
    let a = search_pair_exists(f1, f2, DEFAULT_RADIUS, DEFAULT_BUDGET).expect("candidate search");
    if matches!(a, Verdict::Contradiction { .. }) {
        return false;
    }
    let b = search_pair_exists(f2, f1, DEFAULT_RADIUS, DEFAULT_BUDGET).expect("candidate search");
    !matches!(b, Verdict::Contradiction { .. })
}

/// Grows one full patch with both link words pinned (catalog generation).
pub(crate) fn grow_patch(
    f1: &FaceSeq,
    f2: &FaceSeq,
    word_f1: &LinkSeq,
    word_f2: &LinkSeq,
    radius: u32,
) -> Result<Option<Grown>, DsemError> {
    assert!(
        f1 < f2,
        "grow_patch expects the pair in canonical letter order"
    );
    let to_classes = |w: &LinkSeq| -> Vec<u8> {
        w.word()
            .iter()
            .map(|l| match l {
                LinkLetter::F1 => 0u8,
                LinkLetter::F2 => 1u8,
            })
            .collect()
    };
    let pinned = [
        Some(canonical_cycle(&to_classes(word_f1))),
        Some(canonical_cycle(&to_classes(word_f2))),
    ];
    let (_, first) = run_search(f1, f2, radius, DEFAULT_BUDGET, pinned, false, false, true)?;
    Ok(first.map(|(patch, dist)| Grown {
        verts: patch
            .verts
            .iter()
            .enumerate()
            .map(|(v, pv)| GrownVert {
                pos: pv.pos.expect("catalog growth runs with coordinates"),
                class: pv.class,
                closed: pv.closed,
                dist: dist.get(v).copied().unwrap_or(u32::MAX),
            })
            .collect(),
        faces: patch.faces.iter().map(|f| f.verts.clone()).collect(),
    }))
}

fn fs(s: &str) -> FaceSeq {
    FaceSeq::parse(s).unwrap()
}

/// The 53 pairs listed as locally impossible (set A) in the published
/// classification. One of them, ((3.12^2),(3.4.3.12)), also occurs in set B;
/// the report flags it instead of picking a side.
pub fn set_a() -> Vec<(FaceSeq, FaceSeq)> {
    let raw: [(&str, &str); 53] = [
        ("3^3.4^2", "3^2.6^2"),
        ("3^3.4^2", "3.4^2.6"),
        ("3^3.4^2", "3^4.6"),
        ("3^3.4^2", "3^2.4.12"),
        ("3^3.4^2", "4.8^2"),
        ("3^3.4^2", "4.5.20"),
        ("3^3.4^2", "4.6.12"),
        ("3^3.4^2", "3.4.3.12"),
        ("3.4^2.6", "3^2.6^2"),
        ("3.4^2.6", "3^4.6"),
        ("3.4^2.6", "3^2.4.3.4"),
        ("3.4^2.6", "4^4"),
        ("3.4^2.6", "3^2.4.12"),
        ("3.4^2.6", "4.8^2"),
        ("3.4^2.6", "6^3"),
        ("3.4^2.6", "4.5.20"),
        ("3.4^2.6", "4.6.12"),
        ("3.4^2.6", "3.4.3.12"),
        ("3^2.6^2", "3^2.4.3.4"),
        ("3^2.6^2", "3^2.4.12"),
        ("3^2.6^2", "6^3"),
        ("3^4.6", "3^2.4.3.4"),
        ("3^4.6", "3^2.4.12"),
        ("3^4.6", "6^3"),
        ("3^4.6", "4.6.12"),
        ("3^2.4.3.4", "4^4"),
        ("3^2.4.3.4", "3^2.4.12"),
        ("3^2.4.3.4", "3.4.3.12"),
        ("3^2.4.3.4", "4.8^2"),
        ("3.6.3.6", "4.6.12"),
        ("3.6.3.6", "6^3"),
        ("4^4", "3.4.6.4"),
        ("4^4", "3^2.4.12"),
        ("4^4", "4.8^2"),
        ("4^4", "4.5.20"),
        ("4^4", "4.6.12"),
        ("4^4", "3.4.3.12"),
        ("3.4.6.4", "3^2.4.12"),
        ("3.4.6.4", "6^3"),
        ("3.4.6.4", "4.8^2"),
        ("3.4.6.4", "4.5.20"),
        ("3.4.6.4", "3.4.3.12"),
        ("3^2.4.12", "3.12^2"),
        ("3^2.4.12", "3.4.3.12"),
        ("3^2.4.12", "4.5.20"),
        ("3^2.4.12", "4.6.12"),
        ("3^2.4.12", "4.8^2"),
        ("4.8^2", "4.5.20"),
        ("4.8^2", "4.6.12"),
        ("4.8^2", "3.4.3.12"),
        ("3.12^2", "3.4.3.12"),
        ("6^3", "4.6.12"),
        ("5^2.10", "4.5.20"),
    ];
    raw.iter().map(|&(a, b)| (fs(a), fs(b))).collect()
}

/// The 16 pairs of set B: those realized by planar DSEMs.
pub fn set_b() -> Vec<(FaceSeq, FaceSeq)> {
    let raw: [(&str, &str); 16] = [
        ("3^3.4^2", "3^6"),
        ("3^3.4^2", "4^4"),
        ("3^3.4^2", "3^2.4.3.4"),
        ("3^3.4^2", "3.4.6.4"),
        ("3^6", "3^2.6^2"),
        ("3^6", "3^4.6"),
        ("3^6", "3^2.4.12"),
        ("3^6", "3^2.4.3.4"),
        ("3.12^2", "3.4.3.12"),
        ("3^2.6^2", "3.6.3.6"),
        ("3.4^2.6", "3.6.3.6"),
        ("3.4^2.6", "3.4.6.4"),
        ("3^2.4.3.4", "3.4.6.4"),
        ("3.4.6.4", "4.6.12"),
        ("3^2.6^2", "3^4.6"),
        ("3^4.6", "3.6.3.6"),
    ];
    raw.iter().map(|&(a, b)| (fs(a), fs(b))).collect()
}

fn norm_pair(a: &FaceSeq, b: &FaceSeq) -> (FaceSeq, FaceSeq) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// Per-pair entry of the theorem-1 report.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub pair: (FaceSeq, FaceSeq),
    pub in_a: bool,
    pub in_b: bool,
    pub verdict: Verdict,
}

/// Result of the full pair sweep.
#[derive(Clone, Debug)]
pub struct Theorem1Report {
    pub pairs: Vec<PairReport>,
    pub total_types: usize,
    pub refuted: usize,
    pub consistent: usize,
    pub undecided: usize,
    /// anomalies: pairs listed in both A and B, or seedings that disagree
    pub flags: Vec<String>,
}

/// Runs the pair search over every listed pair (sets A and B) at the given
/// radius and default budget, both seedings per pair.
pub fn reproduce_theorem1(radius: u32) -> Result<Theorem1Report, DsemError> {
    let a = set_a();
    let b = set_b();
    let mut all: Vec<(FaceSeq, FaceSeq)> = Vec::new();
    for (x, y) in a.iter().chain(b.iter()) {
        let p = norm_pair(x, y);
        if !all.contains(&p) {
            all.push(p);
        }
    }
    all.sort();
    let mut flags = Vec::new();
    for (x, y) in &all {
        let in_a = a.iter().any(|(p, q)| norm_pair(p, q) == (x.clone(), y.clone()));
        let in_b = b.iter().any(|(p, q)| norm_pair(p, q) == (x.clone(), y.clone()));
        if in_a && in_b {
            flags.push(format!("pair (({x}),({y})) is listed in both A and B"));
        }
    }
    let entries = crate::par::map_params(&all, |(x, y)| -> Result<PairReport, DsemError> {
        let v1 = search_pair(x, y, radius, DEFAULT_BUDGET)?;
        let v2 = search_pair(y, x, radius, DEFAULT_BUDGET)?;
        let verdict = merge_verdicts(&v1, &v2);
        Ok(PairReport {
            pair: (x.clone(), y.clone()),
            in_a: a.iter().any(|(p, q)| norm_pair(p, q) == (x.clone(), y.clone())),
            in_b: b.iter().any(|(p, q)| norm_pair(p, q) == (x.clone(), y.clone())),
            verdict,
        })
    })?;
    for e in &entries {
        if matches!(e.verdict, Verdict::Undecided { explored: u64::MAX }) {
            flags.push(format!(
                "pair (({}),({})) got conflicting verdicts from its two seedings",
                e.pair.0, e.pair.1
            ));
        }
    }
    let refuted = entries
        .iter()
        .filter(|e| matches!(e.verdict, Verdict::Contradiction { .. }))
        .count();
    let consistent = entries
        .iter()
        .filter(|e| matches!(e.verdict, Verdict::Consistent { .. }))
        .count();
    let undecided = entries.len() - refuted - consistent;
    let total_types = entries
        .iter()
        .filter_map(|e| match &e.verdict {
            Verdict::Consistent { combos } => Some(combos.len()),
            _ => None,
        })
        .sum();
    Ok(Theorem1Report {
        pairs: entries,
        total_types,
        refuted,
        consistent,
        undecided,
        flags,
    })
}

/// Combines the two seedings of one pair. A refutation from either side
/// refutes the pair (the classes of a connected map must meet, so a patch
/// around one class implies one around the other); a type combination
/// counts only when patches centered on both classes realize it.
/// Conflicting Contradiction/Consistent outcomes are marked with a sentinel
/// and flagged by the caller.
fn merge_verdicts(v1: &Verdict, v2: &Verdict) -> Verdict {
    use Verdict::*;
    match (v1, v2) {
        (Contradiction { depth: a }, Contradiction { depth: b }) => Contradiction {
            depth: *a.max(b),
        },
        (Contradiction { .. }, Consistent { .. }) | (Consistent { .. }, Contradiction { .. }) => {
            Undecided { explored: u64::MAX }
        }
        (Contradiction { depth }, Undecided { .. }) | (Undecided { .. }, Contradiction { depth }) => {
            Contradiction { depth: *depth }
        }
        (Consistent { combos: a }, Consistent { combos: b }) => Consistent {
            combos: a.iter().filter(|c| b.contains(c)).cloned().collect(),
        },
        (Consistent { combos }, _) => Consistent {
            combos: combos.clone(),
        },
        (_, Consistent { combos }) => Consistent {
            combos: combos.clone(),
        },
        (Undecided { explored: a }, Undecided { explored: b }) => Undecided {
            explored: *a + *b,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius1_refutes_incompatible_sizes() {
        // a (3^6) vertex can never have a (4^4) vertex in its link
        assert!(!pair_survives_radius1(&fs("3^6"), &fs("4^4")));
    }

    #[test]
    fn subcase_1_1_refutation() {
        let v = search_pair(&fs("3^3.4^2"), &fs("3^2.6^2"), 3, DEFAULT_BUDGET).unwrap();
        assert!(matches!(v, Verdict::Contradiction { .. }), "{v:?}");
    }

    #[test]
    fn t1_t2_combinations() {
        let v = search_pair(&fs("3^6"), &fs("3^3.4^2"), 3, DEFAULT_BUDGET).unwrap();
        match v {
            Verdict::Consistent { combos } => {
                assert_eq!(combos.len(), 2, "{combos:?}");
                let words: BTreeSet<String> = combos
                    .iter()
                    .map(|(w1, w2)| format!("{w1}|{w2}"))
                    .collect();
                assert!(words.contains("F1^5.F2^2|F1^2.F2.F1^2.F2"), "{words:?}");
                assert!(words.contains("F1^5.F2^2|F1^2.F2^4"), "{words:?}");
            }
            other => panic!("expected Consistent, got {other:?}"),
        }
    }

    #[test]
    fn t3_t4_combinations() {
        let v = search_pair(&fs("3^3.4^2"), &fs("4^4"), 3, DEFAULT_BUDGET).unwrap();
        match v {
            Verdict::Consistent { combos } => {
                assert_eq!(combos.len(), 2, "{combos:?}");
                let words: BTreeSet<String> = combos
                    .iter()
                    .map(|(w1, w2)| format!("{w1}|{w2}"))
                    .collect();
                assert!(words.contains("F1^4.F2^3|F1^3.F2.F1^3.F2"), "{words:?}");
                assert!(words.contains("F1^4.F2^3|F1^3.F2^5"), "{words:?}");
            }
            other => panic!("expected Consistent, got {other:?}"),
        }
    }

    #[test]
    fn candidate_pairs_bounds() {
        let cands = crate::curvature::candidate_pairs();
        let b = set_b();
        let a = set_a();
        for (x, y) in &b {
            let p = norm_pair(x, y);
            assert!(
                cands.iter().any(|(u, v)| norm_pair(u, v) == p),
                "set B pair missing: ({x}),({y})"
            );
        }
        for (x, y) in &cands {
            let p = norm_pair(x, y);
            let listed = a
                .iter()
                .chain(b.iter())
                .any(|(u, v)| norm_pair(u, v) == p);
            assert!(listed, "candidate not in A ∪ B: ({x}),({y})");
        }
    }

    #[test]
    fn contradiction_is_monotone_in_radius() {
        let p = (fs("3^3.4^2"), fs("3^2.6^2"));
        let v2 = search_pair(&p.0, &p.1, 2, DEFAULT_BUDGET).unwrap();
        let v3 = search_pair(&p.0, &p.1, 3, DEFAULT_BUDGET).unwrap();
        if matches!(v2, Verdict::Contradiction { .. }) {
            assert!(matches!(v3, Verdict::Contradiction { .. }));
        }
    }

    #[test]
    fn determinism() {
        let a = search_pair(&fs("3^6"), &fs("3^2.6^2"), 3, DEFAULT_BUDGET).unwrap();
        let b = search_pair(&fs("3^6"), &fs("3^2.6^2"), 3, DEFAULT_BUDGET).unwrap();
        assert_eq!(a, b);
    }
}
