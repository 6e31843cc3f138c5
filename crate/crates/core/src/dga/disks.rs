//! Resolved wiring diagram and admissible-disk enumeration.
//!
//! Disks are immersed polygons with convex corners, one positive corner
//! (east or west quadrant of the generator's crossing) and negative
//! corners (north or south quadrants). They are enumerated by an
//! x-monotone sweep: a generic vertical line meets a disk in disjoint
//! chords, each bounded above by a westbound boundary edge and below by
//! an eastbound one. Chords open and split at left cusp ends, merge and
//! close at right cusp ends, and shift or turn corners at crossings.
//! The sweep visits each event once, so termination is structural.
//!
//! Besides the chords, the state tracks how chord endpoints connect
//! through the already-swept region (boundary pairing) to read negative
//! corners in boundary order, and Morse-style wrap counts to verify the
//! swept surface is a disk: with b openings, d closings, s splits and m
//! merges, its Euler characteristic is (b + d - s - m) / 2.

use std::collections::HashMap;

use crate::front::diagram::{Event, FrontDiagram};
use crate::front::trace::{EventTrace, Trace};

use super::{xor_insert, NcSum, Word};

#[derive(Debug, Clone, Copy)]
pub enum ResEvent {
    /// Left cusp: two strands appear at `slot`, `slot + 1`.
    Cap { slot: usize },
    /// Closes the loop of a right cusp.
    Cup { slot: usize },
    /// Generator: a front crossing, or the loop crossing of a right cusp.
    Cross { slot: usize, front_event: usize, is_cusp: bool },
}

#[derive(Debug)]
pub struct Resolved {
    pub events: Vec<ResEvent>,
    /// Indices into `events` of the crossings, in generator order.
    pub crossings: Vec<usize>,
    /// Base point for t-exponents: the cell just east of the leftmost
    /// left cusp, on its upper strand.
    base_gap: usize,
    base_slot: usize,
    /// Knot direction on the base cell (true = eastward).
    base_east: bool,
}

impl Resolved {
    pub fn build(front: &FrontDiagram, trace: &Trace) -> Resolved {
        let mut events = Vec::new();
        let mut crossings = Vec::new();
        let base_birth = trace.leftmost_birth[0];
        let (mut base_gap, mut base_slot, mut base_east) = (0, 0, true);
        for (k, ev) in front.events.iter().enumerate() {
            match *ev {
                Event::Birth(i) => {
                    events.push(ResEvent::Cap { slot: i });
                    if k + 1 == base_birth {
                        base_gap = events.len();
                        base_slot = i;
                        if let EventTrace::Birth { upper, .. } = trace.event_trace[k] {
                            base_east = trace.arcs[upper].east;
                        }
                    }
                }
                Event::Cross(i) => {
                    crossings.push(events.len());
                    events.push(ResEvent::Cross { slot: i, front_event: k + 1, is_cusp: false });
                }
                Event::Death(i) => {
                    crossings.push(events.len());
                    events.push(ResEvent::Cross { slot: i, front_event: k + 1, is_cusp: true });
                    events.push(ResEvent::Cup { slot: i });
                }
            }
        }
        Resolved { events, crossings, base_gap, base_slot, base_east }
    }
}

/// Sentinel letter marking the positive corner inside a boundary word.
const MARK: u32 = u32::MAX;

/// Search bounds: maximum simultaneous chords in a slice and maximum
/// accumulated negative corners per candidate disk. These only trim the
/// search; the caller escalates through `CAP_LADDER` whenever the d^2 = 0
/// or grading checks reject the result, so a rung that is too tight is
/// never accepted silently.
#[derive(Debug, Clone, Copy)]
pub struct SearchCaps {
    pub chords: usize,
    pub letters: usize,
}

pub const CAP_LADDER: &[SearchCaps] = &[
    SearchCaps { chords: 4, letters: 6 },
    SearchCaps { chords: 6, letters: 10 },
    SearchCaps { chords: 8, letters: 14 },
];

#[derive(Debug, Clone, Copy)]
struct Chord {
    top: usize,
    bot: usize,
    /// Pair entering the swept region at this chord's top edge.
    top_pair: usize,
    /// Pair exiting the swept region at this chord's bottom edge.
    bot_pair: usize,
}

#[derive(Debug, Clone, Default)]
struct SweepState {
    chords: Vec<Chord>,
    /// Boundary pairing: each live pair runs from one top edge through
    /// the swept region to one bottom edge, accumulating corner letters.
    pairs: Vec<Option<Vec<u32>>>,
    texp: i64,
    /// Running value of (openings + closings - splits - merges); the
    /// swept surface is a disk exactly when this ends at 2.
    euler: i64,
    used_positive: bool,
}

impl SweepState {
    fn new_pair(&mut self, word: Vec<u32>) -> usize {
        self.pairs.push(Some(word));
        self.pairs.len() - 1
    }

    /// Connects the exit of pair `px` to the entry of pair `py` (a
    /// boundary wrap), optionally inserting the positive-corner mark.
    /// Returns the merged pair id, or None if a cycle closed.
    fn join(&mut self, px: usize, py: usize, mark: bool) -> Option<usize> {
        if px == py {
            if mark {
                self.pairs[px].as_mut().unwrap().push(MARK);
            }
            return None;
        }
        let tail = self.pairs[py].take().unwrap();
        let w = self.pairs[px].as_mut().unwrap();
        if mark {
            w.push(MARK);
        }
        w.extend(tail);
        for ch in &mut self.chords {
            if ch.top_pair == py {
                ch.top_pair = px;
            }
            if ch.bot_pair == py {
                ch.bot_pair = px;
            }
        }
        Some(px)
    }

    /// Hash key identifying the state up to chord relabeling; states
    /// reached an even number of times cancel out of the search.
    fn key(&self) -> Vec<i64> {
        let mut idx: Vec<usize> = (0..self.chords.len()).collect();
        let sig = |i: usize| {
            let ch = &self.chords[i];
            (ch.top, ch.bot, self.pairs[ch.top_pair].as_ref(), self.pairs[ch.bot_pair].as_ref())
        };
        idx.sort_by(|&a, &b| sig(a).cmp(&sig(b)));
        let mut relabel: HashMap<usize, i64> = HashMap::new();
        let mut order: Vec<usize> = Vec::new();
        let mut key = vec![self.texp, self.euler, self.used_positive as i64];
        for &i in &idx {
            let ch = &self.chords[i];
            for p in [ch.top_pair, ch.bot_pair] {
                let next = relabel.len() as i64;
                relabel.entry(p).or_insert_with(|| {
                    order.push(p);
                    next
                });
            }
            key.extend([ch.top as i64, ch.bot as i64, relabel[&ch.top_pair], relabel[&ch.bot_pair]]);
        }
        for p in order {
            key.push(-1);
            key.extend(self.pairs[p].as_ref().unwrap().iter().map(|&l| l as i64));
        }
        key
    }
}

struct Sweep<'a> {
    res: &'a Resolved,
    gen_of_event: &'a HashMap<usize, usize>,
    /// Event index of the crossing carrying the positive corner.
    x: usize,
    out: NcSum,
    /// Successor states for the gap east of the event being processed.
    next: Vec<SweepState>,
    /// Boundary words completed while processing the current parent state.
    done: Vec<Word>,
    next_gap: usize,
    caps: SearchCaps,
}

impl Sweep<'_> {
    /// A completed boundary cycle: record it if it is the whole disk.
    fn finish(&mut self, st: &SweepState, cycle: usize) {
        if !st.chords.is_empty() || st.euler != 2 {
            return;
        }
        let raw = st.pairs[cycle].as_ref().unwrap();
        let pos = match raw.iter().position(|&l| l == MARK) {
            Some(p) => p,
            None => return,
        };
        let mut letters: Vec<usize> = Vec::with_capacity(raw.len() - 1);
        letters.extend(raw[pos + 1..].iter().map(|&l| l as usize));
        letters.extend(raw[..pos].iter().map(|&l| l as usize));
        self.done.push(Word { letters, texp: st.texp });
    }

    /// Branches over all boundary behaviors at event `e`.
    fn step(&mut self, e: usize, st: &SweepState) {
        match self.res.events[e] {
            ResEvent::Cap { slot } => self.cap(st, slot),
            ResEvent::Cup { slot } => self.cup(st.clone(), slot),
            ResEvent::Cross { slot, .. } => {
                let endpoints = self.crossing_endpoints(st, slot);
                self.cross(e, st.clone(), slot, &endpoints, 0);
            }
        }
    }

    fn emit(&mut self, mut st: SweepState) {
        // every disk turns its positive corner exactly at the marked
        // crossing, so nothing east of it can still be waiting for one
        if self.next_gap > self.x && !st.used_positive {
            return;
        }
        let letters: usize =
            st.pairs.iter().flatten().map(|w| w.iter().filter(|&&l| l != MARK).count()).sum();
        if letters > self.caps.letters {
            return;
        }
        if st.chords.is_empty() {
            // the disk closed (recorded by finish) or never started; an
            // empty state is only worth keeping west of the corner
            if st.used_positive || st.euler != 0 {
                return;
            }
        }
        if self.next_gap == self.res.base_gap {
            for ch in &st.chords {
                if ch.top == self.res.base_slot {
                    // top edges travel west
                    st.texp += if self.res.base_east { 1 } else { -1 };
                }
                if ch.bot == self.res.base_slot {
                    st.texp += if self.res.base_east { -1 } else { 1 };
                }
            }
        }
        self.next.push(st);
    }

    fn cap(&mut self, st: &SweepState, c: usize) {
        let mut base = st.clone();
        for ch in &mut base.chords {
            if ch.top >= c {
                ch.top += 2;
            }
            if ch.bot >= c {
                ch.bot += 2;
            }
        }
        // chords spanning the new strands may split around the cusp end
        let spanning: Vec<usize> = (0..base.chords.len())
            .filter(|&i| base.chords[i].top < c && base.chords[i].bot > c + 1)
            .collect();
        // a spanning chord either passes over the cusp end (interior to
        // the disk) or splits: the boundary rounds the cusp end on its
        // west side, leaving the region between the new strands bare
        let mut actions = vec![false; spanning.len()];
        loop {
            for opens in 0..=2usize {
                let mut s = base.clone();
                let mut ok = true;
                for (k, &i) in spanning.iter().enumerate() {
                    if actions[k] {
                        let ch = s.chords[i];
                        let p = s.new_pair(Vec::new());
                        s.chords[i] = Chord { top: ch.top, bot: c, top_pair: ch.top_pair, bot_pair: p };
                        s.chords.push(Chord { top: c + 1, bot: ch.bot, top_pair: p, bot_pair: ch.bot_pair });
                        s.euler -= 1;
                    }
                }
                for _ in 0..opens {
                    let p = s.new_pair(Vec::new());
                    s.chords.push(Chord { top: c, bot: c + 1, top_pair: p, bot_pair: p });
                    s.euler += 1;
                }
                if s.chords.len() > self.caps.chords {
                    ok = false;
                }
                if ok {
                    self.emit(s);
                }
            }
            // next action vector
            let mut k = 0;
            while k < actions.len() && actions[k] {
                actions[k] = false;
                k += 1;
            }
            if k == actions.len() {
                break;
            }
            actions[k] = true;
        }
    }

    /// Resolves boundary wraps at a right cusp end until no chord
    /// endpoint remains on the vanishing strands, then renumbers.
    fn cup(&mut self, mut st: SweepState, c: usize) {
        // first endpoint that must wrap, in a fixed order so that each
        // wrap structure is enumerated exactly once
        let pick = st.chords.iter().enumerate().find_map(|(i, ch)| {
            if ch.top == c || ch.top == c + 1 {
                Some((i, true))
            } else if ch.bot == c || ch.bot == c + 1 {
                Some((i, false))
            } else {
                None
            }
        });
        let (i, is_top) = match pick {
            None => {
                for ch in &mut st.chords {
                    if ch.top > c + 1 {
                        ch.top -= 2;
                    }
                    if ch.bot > c + 1 {
                        ch.bot -= 2;
                    }
                }
                self.emit(st);
                return;
            }
            Some(p) => p,
        };
        let ch = st.chords[i];
        if is_top && ch.top == c && ch.bot == c + 1 {
            // lone chord spanning the cusp loop: the boundary closes
            let mut s = st.clone();
            s.euler += 1;
            let (px, py) = (ch.bot_pair, ch.top_pair);
            s.chords.swap_remove(i);
            match s.join(px, py, false) {
                None => self.finish(&s, px),
                Some(_) => self.cup(s, c),
            }
            // fall through: the same chord may instead merge with others
        }
        // besides the close, the only wrap that stays immersed joins a
        // bottom edge on the upper strand to a top edge on the lower
        // one, rounding the cusp end on its outer side; the opposite
        // pairing would fold the surface over itself at the cusp point
        if is_top && ch.top == c {
            return; // close (if any) was the only option
        }
        if !is_top && ch.bot == c + 1 {
            return;
        }
        let want_top = !is_top;
        for j in 0..st.chords.len() {
            if j == i {
                continue;
            }
            let pj = st.chords[j];
            let hit = if want_top { pj.top == c + 1 } else { pj.bot == c };
            if !hit {
                continue;
            }
            // boundary exits eastbound at the bottom edge, wraps around
            // the cusp end, re-enters westbound at the top edge
            let (bi, ti) = if is_top { (j, i) } else { (i, j) };
            let (b, t) = (st.chords[bi], st.chords[ti]);
            // merged chord keeps the bottom chord's top and the top
            // chord's bottom
            if b.top >= t.bot {
                continue;
            }
            let mut s = st.clone();
            s.euler -= 1;
            let merged = Chord { top: b.top, bot: t.bot, top_pair: b.top_pair, bot_pair: t.bot_pair };
            let (px, py) = (b.bot_pair, t.top_pair);
            let (lo, hi) = (bi.min(ti), bi.max(ti));
            s.chords.swap_remove(hi);
            s.chords.swap_remove(lo);
            s.chords.push(merged);
            if s.join(px, py, false).is_none() {
                continue; // premature boundary cycle
            }
            self.cup(s, c);
        }
    }

    fn crossing_endpoints(&self, st: &SweepState, c: usize) -> Vec<(usize, bool)> {
        let mut v = Vec::new();
        for (i, ch) in st.chords.iter().enumerate() {
            if ch.top == c || ch.top == c + 1 {
                v.push((i, true));
            }
            if ch.bot == c || ch.bot == c + 1 {
                v.push((i, false));
            }
        }
        v
    }

    /// Branches over the behavior of each chord endpoint at a crossing.
    fn cross(
        &mut self,
        e: usize,
        st: SweepState,
        c: usize,
        endpoints: &[(usize, bool)],
        k: usize,
    ) {
        if k == endpoints.len() {
            let s = st;
            if s.chords.iter().all(|ch| ch.top < ch.bot) {
                // the disk's positive corner can open eastward here
                if e == self.x && !s.used_positive && s.chords.len() < self.caps.chords {
                    let mut s2 = s.clone();
                    s2.used_positive = true;
                    s2.euler += 1;
                    let p = s2.new_pair(vec![MARK]);
                    s2.chords.push(Chord { top: c, bot: c + 1, top_pair: p, bot_pair: p });
                    self.emit(s2);
                }
                self.emit(s);
            }
            return;
        }
        let (i, is_top) = endpoints[k];
        let g = self.gen_of_event[&e] as u32;
        let ch = st.chords[i];
        if is_top {
            if ch.top == c {
                // westbound on the over strand: straight only
                let mut s = st.clone();
                s.chords[i].top = c + 1;
                self.cross(e, s, c, endpoints, k + 1);
                // at the marked crossing, a chord hugging the vertex may
                // close into the positive corner (west quadrant)
                if e == self.x && !st.used_positive && ch.bot == c + 1 {
                    let mut s = st.clone();
                    s.used_positive = true;
                    s.euler += 1;
                    let (px, py) = (ch.bot_pair, ch.top_pair);
                    s.chords.swap_remove(i);
                    let rest: Vec<(usize, bool)> = endpoints[k + 1..]
                        .iter()
                        .filter(|&&(j, _)| j != i)
                        .map(|&(j, t)| {
                            (if j == st.chords.len() - 1 { i } else { j }, t)
                        })
                        .collect();
                    match s.join(px, py, true) {
                        None => {
                            if rest.is_empty() {
                                self.finish(&s, px);
                            }
                        }
                        Some(_) => self.cross(e, s, c, &rest, 0),
                    }
                }
            } else {
                // westbound edge west of the crossing on the under
                // strand: came straight, or turned a south corner
                let mut s = st.clone();
                s.chords[i].top = c;
                self.cross(e, s, c, endpoints, k + 1);
                let mut s = st.clone();
                let p = s.chords[i].top_pair;
                s.pairs[p].as_mut().unwrap().insert(0, g);
                self.cross(e, s, c, endpoints, k + 1);
            }
        } else if ch.bot == c {
            // eastbound on the over strand: straight, or north corner
            let mut s = st.clone();
            s.chords[i].bot = c + 1;
            self.cross(e, s, c, endpoints, k + 1);
            let mut s = st.clone();
            let p = s.chords[i].bot_pair;
            s.pairs[p].as_mut().unwrap().push(g);
            self.cross(e, s, c, endpoints, k + 1);
        } else {
            // eastbound on the under strand: straight only
            let mut s = st.clone();
            s.chords[i].bot = c;
            self.cross(e, s, c, endpoints, k + 1);
        }
    }
}

fn boundary_words(
    res: &Resolved,
    gen_of_event: &HashMap<usize, usize>,
    g: usize,
    caps: SearchCaps,
) -> NcSum {
    let x = res.crossings[g];
    let mut sweep = Sweep {
        res,
        gen_of_event,
        x,
        out: NcSum::new(),
        next: Vec::new(),
        done: Vec::new(),
        next_gap: 0,
        caps,
    };
    let mut cur = vec![SweepState::default()];
    for e in 0..res.events.len() {
        sweep.next_gap = e + 1;
        // One parent state can reach the same successor along several
        // branch paths that only differ by relabeling interchangeable
        // chords; those describe the same slice evolution, so within a
        // parent we keep a single representative. Across parents the
        // evolutions are genuinely distinct and states reached twice
        // contribute identical families of disks, which cancel over Z/2.
        let mut frontier: HashMap<Vec<i64>, SweepState> = HashMap::new();
        for st in &cur {
            sweep.step(e, st);
            let mut seen: HashMap<Vec<i64>, SweepState> = HashMap::new();
            for succ in sweep.next.drain(..) {
                seen.entry(succ.key()).or_insert(succ);
            }
            for (k, succ) in seen {
                if frontier.remove(&k).is_none() {
                    frontier.insert(k, succ);
                }
            }
            let mut words: Vec<Word> = sweep.done.drain(..).collect();
            words.sort();
            words.dedup();
            for w in words {
                xor_insert(&mut sweep.out, w);
            }
        }
        cur = frontier.into_values().collect();
    }
    sweep.out
}

pub fn differentials(res: &Resolved, caps: SearchCaps) -> Vec<NcSum> {
    let gen_of_event: HashMap<usize, usize> =
        res.crossings.iter().enumerate().map(|(g, &e)| (e, g)).collect();
    let n = res.crossings.len();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(|g| boundary_words(res, &gen_of_event, g, caps)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(|g| boundary_words(res, &gen_of_event, g, caps)).collect()
    }
}
