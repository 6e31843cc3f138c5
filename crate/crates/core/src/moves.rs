//! Word rewriting on fronts: Legendrian Reidemeister moves,
//! stabilisations, cusp-connected sum, and the transport commutations
//! used to realize ambient Legendrian surgery.
//!
//! Catalog (forward direction; `s` is taken from `Move::slot`, `p` from
//! `Move::index`, all 1-based):
//!
//!   R1a   insert [b(s+1) x(s) d(s+1)] before event p  (swallowtail)
//!   R1b   insert [b(s) x(s+1) d(s)]   before event p  (mirror swallowtail)
//!   R2a   pass a strand through a right cusp: with events[p] = d(i),
//!         slot s = i+2 gives d(i) -> x(i+1) x(i) d(i+1), slot s = i-1
//!         gives d(i) -> x(i-1) x(i) d(i-1)
//!   R2b   the left-cusp mirror: with events[p] = b(i), slot s = i+2
//!         (strand emerging below) gives b(i) -> b(i+1) x(i) x(i+1),
//!         slot s = i-1 gives b(i) -> b(i-1) x(i) x(i-1)
//!   R3    x(i) x(i+1) x(i) <-> x(i+1) x(i) x(i+1) at p..p+2
//!   Stab+/- insert a zigzag on the strand at slot s before event p,
//!         variant chosen so rot changes by +1 / -1 (tb drops by 1)
//!   CuspSum delete the adjacent facing pair d(i) b(i) at p, p+1
//!   S1    swap adjacent events p, p+1 where at least one is a crossing
//!         and supports are disjoint (slots reindexed)
//!   S2    swap adjacent cusp events p, p+1 with disjoint supports
//!
//! Inverse directions contract the corresponding right-hand sides.

use std::collections::BTreeSet;

use crate::front::diagram::{Event, FrontDiagram};
use crate::front::trace::{EventTrace, Trace};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum MoveKind {
    R1a,
    R1b,
    R2a,
    R2b,
    R3,
    StabPlus,
    StabMinus,
    CuspSum,
    S1,
    S2,
}

impl MoveKind {
    pub fn token(&self) -> &'static str {
        match self {
            MoveKind::R1a => "R1a",
            MoveKind::R1b => "R1b",
            MoveKind::R2a => "R2a",
            MoveKind::R2b => "R2b",
            MoveKind::R3 => "R3",
            MoveKind::StabPlus => "StabPlus",
            MoveKind::StabMinus => "StabMinus",
            MoveKind::CuspSum => "CuspSum",
            MoveKind::S1 => "S1",
            MoveKind::S2 => "S2",
        }
    }

    pub fn from_token(s: &str) -> Option<MoveKind> {
        Some(match s {
            "R1a" => MoveKind::R1a,
            "R1b" => MoveKind::R1b,
            "R2a" => MoveKind::R2a,
            "R2b" => MoveKind::R2b,
            "R3" => MoveKind::R3,
            "StabPlus" => MoveKind::StabPlus,
            "StabMinus" => MoveKind::StabMinus,
            "CuspSum" => MoveKind::CuspSum,
            "S1" => MoveKind::S1,
            "S2" => MoveKind::S2,
            _ => return None,
        })
    }

    /// Moves that preserve tb and rot of every component (legal inside
    /// cobordism trace steps).
    pub fn is_trace_legal(&self) -> bool {
        !matches!(self, MoveKind::StabPlus | MoveKind::StabMinus | MoveKind::CuspSum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Move {
    pub kind: MoveKind,
    /// 1-based event index; insertions use the position *before* which
    /// new events go (so index may be events.len()+1).
    pub index: usize,
    /// Slot datum; 0 when the kind does not need one.
    pub slot: usize,
    pub inverse: bool,
}

impl Move {
    pub fn new(kind: MoveKind, index: usize, slot: usize) -> Move {
        Move { kind, index, slot, inverse: false }
    }

    pub fn inv(kind: MoveKind, index: usize, slot: usize) -> Move {
        Move { kind, index, slot, inverse: true }
    }

    pub fn token(&self) -> String {
        let mut s = format!("{} @ {}", self.kind.token(), self.index);
        if self.slot != 0 {
            s.push_str(&format!(",{}", self.slot));
        }
        if self.inverse {
            s.push_str(" inv");
        }
        s
    }
}

pub type MoveScript = Vec<Move>;

pub fn script_to_text(script: &[Move]) -> String {
    script.iter().map(Move::token).map(|l| l + "\n").collect()
}

pub fn parse_script(text: &str) -> Result<MoveScript> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: ln + 1, col: 1, msg };
        let (kind_s, rest) = line
            .split_once('@')
            .ok_or_else(|| err(format!("expected '<kind> @ <index>[,<slot>] [inv]', got '{line}'")))?;
        let kind = MoveKind::from_token(kind_s.trim())
            .ok_or_else(|| err(format!("unknown move kind '{}'", kind_s.trim())))?;
        let mut rest = rest.trim();
        let inverse = if let Some(r) = rest.strip_suffix("inv") {
            rest = r.trim();
            true
        } else {
            false
        };
        let (idx_s, slot_s) = match rest.split_once(',') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (rest, None),
        };
        let index: usize = idx_s.parse().map_err(|_| err(format!("bad event index '{idx_s}'")))?;
        let slot: usize = match slot_s {
            Some(s) => s.parse().map_err(|_| err(format!("bad slot '{s}'")))?,
            None => 0,
        };
        out.push(Move { kind, index, slot, inverse });
    }
    Ok(out)
}

/// Maps 1-based event indices of the input word to indices in the
/// output word; None for deleted events.
pub type IndexMap = Vec<Option<usize>>;

fn shift_map(len: usize, at: usize, inserted: usize) -> IndexMap {
    (1..=len)
        .map(|k| Some(if k >= at { k + inserted } else { k }))
        .collect()
}

fn fail(index: usize, msg: impl Into<String>) -> Error {
    Error::MoveFailed { index, msg: msg.into() }
}

/// Apply one move; returns the rewritten front and the event index map.
pub fn apply_move(front: &FrontDiagram, mv: Move) -> Result<(FrontDiagram, IndexMap)> {
    let trace = front.trace()?;
    let events = &front.events;
    let n = events.len();
    let p = mv.index;
    let at = |k: usize| -> Result<Event> {
        events
            .get(k - 1)
            .copied()
            .ok_or_else(|| fail(k, "event index out of range"))
    };

    let (new_events, map): (Vec<Event>, IndexMap) = match (mv.kind, mv.inverse) {
        (MoveKind::R1a, false) | (MoveKind::R1b, false) => {
            let s = mv.slot;
            if p == 0 || p > n + 1 {
                return Err(fail(p, "insertion position out of range"));
            }
            let strands = trace.slices[p - 1].len();
            if s == 0 || s > strands {
                return Err(fail(p, format!("no strand at slot {s} before event {p}")));
            }
            let unit = if mv.kind == MoveKind::R1a {
                vec![Event::Birth(s + 1), Event::Cross(s), Event::Death(s + 1)]
            } else {
                vec![Event::Birth(s), Event::Cross(s + 1), Event::Death(s)]
            };
            let mut ev = events.clone();
            ev.splice(p - 1..p - 1, unit);
            (ev, shift_map(n, p, 3))
        }
        (MoveKind::R1a, true) | (MoveKind::R1b, true) => {
            let s = mv.slot;
            let expect = if mv.kind == MoveKind::R1a {
                [Event::Birth(s + 1), Event::Cross(s), Event::Death(s + 1)]
            } else {
                [Event::Birth(s), Event::Cross(s + 1), Event::Death(s)]
            };
            for (off, e) in expect.iter().enumerate() {
                if at(p + off)? != *e {
                    return Err(fail(p, "pattern absent"));
                }
            }
            let mut ev = events.clone();
            ev.drain(p - 1..p + 2);
            let map = (1..=n)
                .map(|k| {
                    if (p..p + 3).contains(&k) {
                        None
                    } else if k > p + 2 {
                        Some(k - 3)
                    } else {
                        Some(k)
                    }
                })
                .collect();
            (ev, map)
        }
        (MoveKind::R2a, false) | (MoveKind::R2b, false) => {
            let cusp = at(p)?;
            let is_death = mv.kind == MoveKind::R2a;
            let i = match (cusp, is_death) {
                (Event::Death(i), true) => i,
                (Event::Birth(i), false) => i,
                _ => return Err(fail(p, "event is not the required cusp kind")),
            };
            // slot of the passing strand in the wider slice (west of a
            // death, east of a birth)
            let s = mv.slot;
            let replacement = if s == i + 2 {
                if is_death {
                    vec![Event::Cross(i + 1), Event::Cross(i), Event::Death(i + 1)]
                } else {
                    vec![Event::Birth(i + 1), Event::Cross(i), Event::Cross(i + 1)]
                }
            } else if s + 1 == i {
                if is_death {
                    vec![Event::Cross(i - 1), Event::Cross(i), Event::Death(i - 1)]
                } else {
                    vec![Event::Birth(i - 1), Event::Cross(i), Event::Cross(i - 1)]
                }
            } else {
                return Err(fail(p, format!("passing strand must sit at slot {} or {}", i.wrapping_sub(1), i + 2)));
            };
            let wide = if is_death { &trace.slices[p - 1] } else { &trace.slices[p] };
            if s == 0 || s > wide.len() {
                return Err(fail(p, format!("no strand at slot {s}")));
            }
            let mut ev = events.clone();
            ev.splice(p - 1..p, replacement);
            let mut map = shift_map(n, p, 2);
            // a death lands after the transit crossings, a birth before
            map[p - 1] = Some(if is_death { p + 2 } else { p });
            (ev, map)
        }
        (MoveKind::R2a, true) | (MoveKind::R2b, true) => {
            // contract [x x d] -> d or [b x x] -> b
            let is_death = mv.kind == MoveKind::R2a;
            let (contracted, ok) = if is_death {
                let (a, b, c) = (at(p)?, at(p + 1)?, at(p + 2)?);
                match (a, b, c) {
                    (Event::Cross(j1), Event::Cross(j), Event::Death(jd))
                        if j1 == j + 1 && jd == j + 1 =>
                    {
                        (Event::Death(j), true)
                    }
                    (Event::Cross(j1), Event::Cross(j), Event::Death(jd))
                        if j1 + 1 == j && jd + 1 == j =>
                    {
                        (Event::Death(j), true)
                    }
                    _ => (Event::Death(0), false),
                }
            } else {
                let (a, b, c) = (at(p)?, at(p + 1)?, at(p + 2)?);
                match (a, b, c) {
                    (Event::Birth(jb), Event::Cross(j), Event::Cross(j1))
                        if jb == j + 1 && j1 == j + 1 =>
                    {
                        (Event::Birth(j), true)
                    }
                    (Event::Birth(jb), Event::Cross(j), Event::Cross(j1))
                        if jb + 1 == j && j1 + 1 == j =>
                    {
                        (Event::Birth(j), true)
                    }
                    _ => (Event::Birth(0), false),
                }
            };
            if !ok {
                return Err(fail(p, "pattern absent"));
            }
            let mut ev = events.clone();
            ev.splice(p - 1..p + 2, [contracted]);
            let map = (1..=n)
                .map(|k| {
                    if k == p || k == p + 1 {
                        // the two transit crossings disappear; keep the
                        // cusp tracked
                        if (is_death && k == p + 2) || (!is_death && k == p) {
                            Some(p)
                        } else {
                            None
                        }
                    } else if k == p + 2 {
                        if is_death {
                            Some(p)
                        } else {
                            None
                        }
                    } else if k > p + 2 {
                        Some(k - 2)
                    } else {
                        Some(k)
                    }
                })
                .collect();
            (ev, map)
        }
        (MoveKind::R3, _) => {
            let (a, b, c) = (at(p)?, at(p + 1)?, at(p + 2)?);
            let replaced = match (a, b, c) {
                (Event::Cross(i1), Event::Cross(j), Event::Cross(i2))
                    if i1 == i2 && (j == i1 + 1 || j + 1 == i1) =>
                {
                    vec![Event::Cross(j), Event::Cross(i1), Event::Cross(j)]
                }
                _ => return Err(fail(p, "pattern absent")),
            };
            let mut ev = events.clone();
            ev.splice(p - 1..p + 2, replaced);
            ((ev), (1..=n).map(Some).collect())
        }
        (MoveKind::StabPlus, false) | (MoveKind::StabMinus, false) => {
            let s = mv.slot;
            if p == 0 || p > n + 1 {
                return Err(fail(p, "insertion position out of range"));
            }
            let strands = trace.slices[p - 1].len();
            if s == 0 || s > strands {
                return Err(fail(p, format!("no strand at slot {s} before event {p}")));
            }
            let arc = trace.slices[p - 1][s - 1];
            let comp = trace.arcs[arc].component;
            let want = if mv.kind == MoveKind::StabPlus { 1 } else { -1 };
            let old = crate::front::invariants::classical_invariants(&trace, comp)?;
            let mut chosen = None;
            for unit in [
                vec![Event::Birth(s + 1), Event::Death(s)],
                vec![Event::Birth(s), Event::Death(s + 1)],
            ] {
                let mut ev = events.clone();
                ev.splice(p - 1..p - 1, unit);
                let cand = FrontDiagram { events: ev, flipped: front.flipped.clone(), red: front.red.clone() };
                let t = cand.trace()?;
                let newinv = crate::front::invariants::classical_invariants(&t, comp)?;
                if newinv.rot == old.rot + want {
                    debug_assert_eq!(newinv.tb, old.tb - 1);
                    chosen = Some(cand.events);
                    break;
                }
            }
            let ev = chosen.ok_or_else(|| fail(p, "no zigzag variant achieves the requested rotation"))?;
            (ev, shift_map(n, p, 2))
        }
        (MoveKind::StabPlus, true) | (MoveKind::StabMinus, true) => {
            let s = mv.slot;
            let pat_ok = matches!(
                (at(p)?, at(p + 1)?),
                (Event::Birth(b), Event::Death(d)) if (b == s + 1 && d == s) || (b == s && d == s + 1)
            );
            if !pat_ok {
                return Err(fail(p, "pattern absent"));
            }
            let mut ev = events.clone();
            ev.drain(p - 1..p + 1);
            let map = (1..=n)
                .map(|k| {
                    if k == p || k == p + 1 {
                        None
                    } else if k > p + 1 {
                        Some(k - 2)
                    } else {
                        Some(k)
                    }
                })
                .collect();
            (ev, map)
        }
        (MoveKind::CuspSum, false) => {
            let (a, b) = (at(p)?, at(p + 1)?);
            match (a, b) {
                (Event::Death(i), Event::Birth(j)) if i == j => {}
                _ => return Err(fail(p, "events are not an adjacent facing death/birth pair")),
            }
            let mut ev = events.clone();
            ev.drain(p - 1..p + 1);
            let map = (1..=n)
                .map(|k| {
                    if k == p || k == p + 1 {
                        None
                    } else if k > p + 1 {
                        Some(k - 2)
                    } else {
                        Some(k)
                    }
                })
                .collect();
            (ev, map)
        }
        (MoveKind::CuspSum, true) => {
            return Err(Error::Unsupported(
                "inverse cusp-connected sum is a saddle, not a front move".into(),
            ))
        }
        (MoveKind::S1, _) | (MoveKind::S2, _) => {
            let (e1, e2) = (at(p)?, at(p + 1)?);
            let has_cross = matches!(e1, Event::Cross(_)) || matches!(e2, Event::Cross(_));
            if (mv.kind == MoveKind::S1) != has_cross {
                return Err(fail(
                    p,
                    if has_cross { "crossing commutation is an S1 move" } else { "cusp commutation is an S2 move" },
                ));
            }
            // A death followed by a birth at the same slot commutes two
            // ways: the birth slides past above or below the dying
            // strands. The slot field picks the side (1 above, 2 below);
            // every other pair commutes in at most one way.
            let ambiguous = match (e1, e2) {
                (Event::Death(i), Event::Birth(j)) if i == j => match mv.slot {
                    1 => Some((Event::Birth(i), Event::Death(i + 2))),
                    2 => Some((Event::Birth(i + 2), Event::Death(i))),
                    _ => None,
                },
                _ => None,
            };
            let (e2p, e1p) = ambiguous
                .or_else(|| swap_pair(e1, e2))
                .ok_or_else(|| fail(p, "events do not commute"))?;
            let mut ev = events.clone();
            ev[p - 1] = e2p;
            ev[p] = e1p;
            let map = (1..=n)
                .map(|k| Some(if k == p { p + 1 } else if k == p + 1 { p } else { k }))
                .collect();
            (ev, map)
        }
    };

    let out = rebuild(front, new_events, &map, &trace)?;
    Ok((out, map))
}

/// Swap two adjacent events with disjoint slot support, reindexing.
/// Returns the events in their new order (second-first).
fn swap_pair(e1: Event, e2: Event) -> Option<(Event, Event)> {
    use Event::*;
    Some(match (e1, e2) {
        (Cross(i), Cross(j)) if j + 1 < i || j > i + 1 => (Cross(j), Cross(i)),
        (Cross(i), Birth(j)) if j <= i => (Birth(j), Cross(i + 2)),
        (Cross(i), Birth(j)) if j >= i + 2 => (Birth(j), Cross(i)),
        (Cross(i), Death(j)) if j + 2 <= i => (Death(j), Cross(i - 2)),
        (Cross(i), Death(j)) if j >= i + 2 => (Death(j), Cross(i)),
        (Birth(i), Cross(j)) if j + 2 <= i => (Cross(j), Birth(i)),
        (Birth(i), Cross(j)) if j >= i + 2 => (Cross(j - 2), Birth(i)),
        (Birth(i), Birth(j)) if j <= i => (Birth(j), Birth(i + 2)),
        (Birth(i), Birth(j)) if j >= i + 2 => (Birth(j - 2), Birth(i)),
        (Birth(i), Death(j)) if j + 1 < i => (Death(j), Birth(i - 2)),
        (Birth(i), Death(j)) if j >= i + 2 => (Death(j - 2), Birth(i)),
        (Death(i), Cross(j)) if j + 1 < i => (Cross(j), Death(i)),
        (Death(i), Cross(j)) if j >= i => (Cross(j + 2), Death(i)),
        (Death(i), Birth(j)) if j < i => (Birth(j), Death(i + 2)),
        (Death(i), Birth(j)) if j > i => (Birth(j + 2), Death(i)),
        (Death(i), Death(j)) if j + 2 <= i => (Death(j), Death(i - 2)),
        (Death(i), Death(j)) if j >= i => (Death(j + 2), Death(i)),
        _ => return None,
    })
}

/// Carry orientation flips and roles across a rewrite. Every component
/// of the new word inherits from the old component owning the preimage
/// of its leftmost Birth; flips are re-anchored so the geometric
/// direction of that Birth's upper strand is preserved.
fn rebuild(
    old: &FrontDiagram,
    events: Vec<Event>,
    map: &IndexMap,
    old_trace: &Trace,
) -> Result<FrontDiagram> {
    let bare = FrontDiagram { events, flipped: BTreeSet::new(), red: BTreeSet::new() };
    let new_trace = bare.trace()?;
    // preimage of each new event index
    let mut pre = vec![None; bare.events.len() + 1];
    for (old_idx0, m) in map.iter().enumerate() {
        if let Some(ni) = m {
            pre[*ni] = Some(old_idx0 + 1);
        }
    }
    let mut flipped = BTreeSet::new();
    let mut red = BTreeSet::new();
    for c in 1..=new_trace.component_count {
        let lb = new_trace.leftmost_birth[c - 1];
        let Some(old_idx) = pre[lb] else {
            // a freshly inserted Birth never becomes a leftmost Birth
            continue;
        };
        let (old_comp, old_upper_east) = match old_trace.event_trace[old_idx - 1] {
            EventTrace::Birth { upper, .. } => {
                (old_trace.arcs[upper].component, old_trace.arcs[upper].east)
            }
            // a rewrite may map a cusp onto a different event kind only
            // for the R2 transits, which keep births as births
            _ => continue,
        };
        if !old_upper_east {
            flipped.insert(c);
        }
        if old.red.contains(&old_comp) {
            red.insert(c);
        }
    }
    Ok(FrontDiagram { events: bare.events, flipped, red })
}

/// Complete deterministic enumeration of applicable moves. Insertion
/// kinds (R1, stabilisations) are listed at every (position, slot);
/// destabilisations are intentionally not Legendrian moves but the
/// zigzag patterns still surface through the R1/stab inverse scan only
/// when they genuinely match a swallowtail.
pub fn applicable_moves(front: &FrontDiagram) -> Result<Vec<Move>> {
    let trace = front.trace()?;
    let n = front.events.len();
    let mut out = Vec::new();
    for p in 1..=n + 1 {
        let strands = trace.slices[p - 1].len();
        for s in 1..=strands {
            out.push(Move::new(MoveKind::R1a, p, s));
            out.push(Move::new(MoveKind::R1b, p, s));
            out.push(Move::new(MoveKind::StabPlus, p, s));
            out.push(Move::new(MoveKind::StabMinus, p, s));
        }
        if p > n {
            break;
        }
        // pattern-matched kinds at p
        for kind in [
            MoveKind::R1a,
            MoveKind::R1b,
            MoveKind::R2a,
            MoveKind::R2b,
            MoveKind::R3,
            MoveKind::CuspSum,
            MoveKind::S1,
            MoveKind::S2,
        ] {
            for inverse in [false, true] {
                for s in candidate_slots(front, &trace, kind, p, inverse) {
                    let mv = Move { kind, index: p, slot: s, inverse };
                    if apply_move(front, mv).is_ok() {
                        out.push(mv);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn candidate_slots(
    front: &FrontDiagram,
    trace: &Trace,
    kind: MoveKind,
    p: usize,
    inverse: bool,
) -> Vec<usize> {
    match (kind, inverse) {
        (MoveKind::R1a | MoveKind::R1b, false) => vec![], // handled as insertions above
        (MoveKind::R1a | MoveKind::R1b, true) => match front.events.get(p - 1) {
            Some(Event::Birth(b)) => {
                if kind == MoveKind::R1a {
                    if *b >= 2 { vec![b - 1] } else { vec![] }
                } else {
                    vec![*b]
                }
            }
            _ => vec![],
        },
        (MoveKind::R2a | MoveKind::R2b, false) => match front.events.get(p - 1) {
            Some(Event::Death(i)) if kind == MoveKind::R2a => slots_near(*i, trace.slices[p - 1].len()),
            Some(Event::Birth(i)) if kind == MoveKind::R2b => slots_near(*i, trace.slices[p].len()),
            _ => vec![],
        },
        (MoveKind::R2a | MoveKind::R2b, true) => vec![0],
        (MoveKind::R3, false) => vec![0],
        (MoveKind::R3, true) => vec![], // self-dual pattern, forward covers both
        (MoveKind::CuspSum, false) => vec![0],
        (MoveKind::S1, false) => vec![0],
        (MoveKind::S2, false) => vec![0, 1, 2],
        _ => vec![],
    }
}

fn slots_near(i: usize, strands: usize) -> Vec<usize> {
    let mut v = Vec::new();
    if i >= 2 {
        v.push(i - 1);
    }
    if i + 2 <= strands {
        v.push(i + 2);
    }
    v
}

/// Join two facing cusps: the word must contain Death(i) at `at.0`
/// immediately followed by Birth(i) at `at.1`.
pub fn cusp_connect_sum(front: &FrontDiagram, at: (usize, usize)) -> Result<FrontDiagram> {
    let (dp, bp) = at;
    if bp != dp + 1 {
        return Err(fail(dp, "death and birth events are not adjacent"));
    }
    match (front.events.get(dp - 1), front.events.get(bp - 1)) {
        (Some(Event::Death(i)), Some(Event::Birth(j))) if i == j => {}
        _ => return Err(fail(dp, "events are not a facing death/birth pair at one slot")),
    }
    let (out, _) = apply_move(front, Move::new(MoveKind::CuspSum, dp, 0))?;
    Ok(out)
}

/// A surgery arc: two designated cusps of the front (∂η) plus a
/// transport script that brings them into adjacent facing position.
#[derive(Debug, Clone)]
pub struct SurgeryArc {
    pub death_event: usize,
    pub birth_event: usize,
    pub transport: MoveScript,
}

/// Ambient Legendrian surgery: run the transport, check the designated
/// cusps ended up facing, and take the cusp-connected sum there.
/// Returns the new front and the executed transport script.
pub fn ambient_surgery(front: &FrontDiagram, arc: &SurgeryArc) -> Result<(FrontDiagram, MoveScript)> {
    match front.events.get(arc.death_event - 1) {
        Some(Event::Death(_)) => {}
        _ => return Err(fail(arc.death_event, "designated event is not a right cusp")),
    }
    match front.events.get(arc.birth_event - 1) {
        Some(Event::Birth(_)) => {}
        _ => return Err(fail(arc.birth_event, "designated event is not a left cusp")),
    }
    let mut cur = front.clone();
    let mut d_idx = arc.death_event;
    let mut b_idx = arc.birth_event;
    for mv in &arc.transport {
        let (next, map) = apply_move(&cur, *mv)?;
        d_idx = map[d_idx - 1].ok_or_else(|| fail(mv.index, "transport deleted a designated cusp"))?;
        b_idx = map[b_idx - 1].ok_or_else(|| fail(mv.index, "transport deleted a designated cusp"))?;
        cur = next;
    }
    if b_idx != d_idx + 1 {
        return Err(fail(d_idx, "transport did not produce facing cusps on the designated pair"));
    }
    let out = cusp_connect_sum(&cur, (d_idx, b_idx))?;
    Ok((out, arc.transport.clone()))
}

/// Apply a script returning the final front.
pub fn apply_script(front: &FrontDiagram, script: &[Move]) -> Result<FrontDiagram> {
    let mut cur = front.clone();
    for mv in script {
        cur = apply_move(&cur, *mv)?.0;
    }
    Ok(cur)
}

/// Convenience stabilisation at the canonical location: just after the
/// component's leftmost Birth, on its upper strand.
pub fn stabilize(front: &FrontDiagram, component: usize, positive: bool) -> Result<FrontDiagram> {
    let trace = front.trace()?;
    if component == 0 || component > trace.component_count {
        return Err(fail(0, format!("component c{component} does not exist")));
    }
    let b = trace.leftmost_birth[component - 1];
    let slot = match front.events[b - 1] {
        Event::Birth(i) => i,
        _ => unreachable!(),
    };
    let kind = if positive { MoveKind::StabPlus } else { MoveKind::StabMinus };
    Ok(apply_move(front, Move::new(kind, b + 1, slot))?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::catalog;
    use crate::front::invariants::{all_components, classical_invariants};
    use crate::front::parse::parse_front;
    use crate::jones::jones_polynomial;

    #[test]
    fn stab_plus_on_unknot() {
        let u = catalog::unknot();
        let (f, _) = apply_move(&u, Move::new(MoveKind::StabPlus, 2, 1)).unwrap();
        let i = classical_invariants(&f.trace().unwrap(), 1).unwrap();
        assert_eq!((i.tb, i.rot), (-2, 1));
        let (f, _) = apply_move(&u, Move::new(MoveKind::StabMinus, 2, 1)).unwrap();
        let i = classical_invariants(&f.trace().unwrap(), 1).unwrap();
        assert_eq!((i.tb, i.rot), (-2, -1));
    }

    #[test]
    fn r_moves_preserve_invariants_and_jones() {
        let start = catalog::trefoil();
        let jones0 = jones_polynomial(&start).unwrap();
        let inv0 = all_components(&start.trace().unwrap());
        // swallowtails at several spots, a cusp passage, an R3
        let scripts: Vec<Vec<Move>> = vec![
            vec![Move::new(MoveKind::R1a, 3, 2)],
            vec![Move::new(MoveKind::R1b, 4, 1)],
            vec![Move::new(MoveKind::R2a, 6, 3)],
        ];
        for script in scripts {
            let f = apply_script(&start, &script).unwrap();
            assert_eq!(jones_polynomial(&f).unwrap(), jones0, "{script:?}");
            assert_eq!(all_components(&f.trace().unwrap()), inv0, "{script:?}");
        }
    }

    #[test]
    fn r3_preserves_invariants() {
        let f = parse_front("b1 b1 x1 x2 x1 d1 d1").unwrap();
        let jones0 = jones_polynomial(&f).unwrap();
        let inv0 = all_components(&f.trace().unwrap());
        let (g, _) = apply_move(&f, Move::new(MoveKind::R3, 3, 0)).unwrap();
        assert_eq!(g.word(), "b1 b1 x2 x1 x2 d1 d1");
        assert_eq!(jones_polynomial(&g).unwrap(), jones0);
        assert_eq!(all_components(&g.trace().unwrap()), inv0);
        let (back, _) = apply_move(&g, Move::new(MoveKind::R3, 3, 0)).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn swallowtail_round_trip() {
        let f = catalog::trefoil();
        for kind in [MoveKind::R1a, MoveKind::R1b] {
            let (g, _) = apply_move(&f, Move::new(kind, 3, 2)).unwrap();
            let (back, _) = apply_move(&g, Move::inv(kind, 3, 2)).unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn cusp_passage_round_trip() {
        let f = parse_front("b1 b2 d2 d1").unwrap();
        // death at event 3 (slot 2), strand above at slot 1
        let (g, map) = apply_move(&f, Move::new(MoveKind::R2a, 3, 1)).unwrap();
        assert_eq!(map[2], Some(5));
        let (back, _) = apply_move(&g, Move::inv(MoveKind::R2a, 3, 0)).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn stale_location_errors() {
        let f = catalog::trefoil();
        assert!(matches!(
            apply_move(&f, Move::inv(MoveKind::R1a, 2, 1)),
            Err(crate::Error::MoveFailed { .. })
        ));
    }

    #[test]
    fn cusp_sum_examples() {
        let two = catalog::two_unlinked_unknots();
        let joined = cusp_connect_sum(&two, (2, 3)).unwrap();
        assert_eq!(joined.word(), "b1 d1");
        assert_eq!(joined.trace().unwrap().component_count, 1);

        let f = parse_front("b1 b2 d2 b2 d2 d1").unwrap();
        let joined = cusp_connect_sum(&f, (3, 4)).unwrap();
        assert_eq!(joined.word(), "b1 b2 d2 d1");

        assert!(cusp_connect_sum(&two, (1, 3)).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let u = catalog::unknot();
        let moves = applicable_moves(&u).unwrap();
        let stabs: Vec<&Move> = moves
            .iter()
            .filter(|m| matches!(m.kind, MoveKind::StabPlus | MoveKind::StabMinus))
            .collect();
        // two strands between the cusps, both signs at each
        assert_eq!(stabs.len(), 4);
        assert!(moves.iter().all(|m| m.kind != MoveKind::CuspSum));

        let two = catalog::two_unlinked_unknots();
        let moves = applicable_moves(&two).unwrap();
        assert!(moves
            .iter()
            .any(|m| m.kind == MoveKind::CuspSum && m.index == 2 && !m.inverse));

        // every enumerated move actually applies
        for m in applicable_moves(&catalog::trefoil()).unwrap() {
            apply_move(&catalog::trefoil(), m).unwrap();
        }
    }

    #[test]
    fn commutations_round_trip_and_preserve_jones() {
        let f = parse_front("b1 b3 x1 d3 d1").unwrap();
        let moves = applicable_moves(&f).unwrap();
        let jones0 = jones_polynomial(&f).unwrap();
        let mut saw_swap = false;
        for m in moves.iter().filter(|m| matches!(m.kind, MoveKind::S1 | MoveKind::S2)) {
            saw_swap = true;
            let (g, _) = apply_move(&f, *m).unwrap();
            assert_eq!(jones_polynomial(&g).unwrap(), jones0);
            let (back, _) = apply_move(&g, Move::new(m.kind, m.index, 0)).unwrap();
            assert_eq!(back.events, f.events);
        }
        assert!(saw_swap);
    }

    #[test]
    fn ambient_surgery_trivial_arc() {
        let two = catalog::two_unlinked_unknots();
        let (out, script) = ambient_surgery(&two, &catalog::eta_0()).unwrap();
        assert_eq!(out.word(), "b1 d1");
        assert!(script.is_empty());

        let bad = SurgeryArc { death_event: 1, birth_event: 3, transport: vec![] };
        assert!(ambient_surgery(&two, &bad).is_err());
    }

    #[test]
    fn script_text_round_trip() {
        let script = vec![
            Move::new(MoveKind::R1a, 3, 2),
            Move::inv(MoveKind::R2a, 5, 0),
            Move::new(MoveKind::S2, 1, 0),
        ];
        let text = script_to_text(&script);
        assert_eq!(parse_script(&text).unwrap(), script);
    }
}
