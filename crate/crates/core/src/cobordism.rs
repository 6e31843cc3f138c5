//! Decomposable cobordisms over event-word fronts: birth/saddle/trace
//! steps, Euler-characteristic and tb/rot accounting, slice-disc
//! constructions for the pretzel family, and the concordance ledger.

use std::collections::BTreeMap;

use crate::dga::{invariant_signature, InvariantSignature};
use crate::front::catalog;
use crate::front::diagram::{Event, FrontDiagram};
use crate::front::invariants::classical_invariants;
use crate::front::parse::parse_front;
use crate::front::trace::EventTrace;
use crate::jones::jones_polynomial;
use crate::moves::{apply_move, parse_script, script_to_text, stabilize, IndexMap, Move, MoveKind, MoveScript};
use crate::poly::LaurentPoly;
use crate::{Error, Result};

/// One elementary piece of a decomposable cobordism, read bottom-up.
/// Caps are deliberately absent: a decomposable cobordism is built from
/// isotopy traces, disc births and saddles only.
#[derive(Debug, Clone)]
pub enum ElementaryStep {
    /// Legendrian isotopy, as a script of tb/rot-preserving moves.
    Trace(MoveScript),
    /// Birth of a standard-unknot disc: inserts `b1 d1` so that the
    /// Birth lands at the given 1-based event position.
    BirthStep { position: usize },
    /// Saddle: cusp-connected sum at a facing Death/Birth event pair.
    SaddleStep { at: (usize, usize) },
}

#[derive(Debug, Clone)]
pub struct CobordismRecord {
    pub bottom: FrontDiagram,
    pub steps: Vec<ElementaryStep>,
}

/// What a step did to the front, plus the component bookkeeping needed
/// to follow cobordism components from bottom to top.
struct StepState {
    front: FrontDiagram,
    /// cobordism-component id of each front component (1-based index 0..).
    cid: Vec<usize>,
    /// bottom components contributing to each front component
    origins: Vec<std::collections::BTreeSet<usize>>,
    next_id: usize,
    /// bottom components whose induced orientation ended up reversed
    bottom_flips: std::collections::BTreeSet<usize>,
}

fn comp_of_cusp(trace: &crate::front::trace::Trace, event: usize) -> Option<usize> {
    match trace.event_trace[event - 1] {
        EventTrace::Birth { upper, .. } | EventTrace::Death { upper, .. } => {
            Some(trace.arcs[upper].component)
        }
        EventTrace::Cross { .. } => None,
    }
}

impl StepState {
    fn start(bottom: &FrontDiagram) -> Result<StepState> {
        let n = bottom.trace()?.component_count;
        Ok(StepState {
            front: bottom.clone(),
            cid: (1..=n).collect(),
            origins: (1..=n).map(|c| [c].into()).collect(),
            next_id: n + 1,
            bottom_flips: Default::default(),
        })
    }

    /// Re-derive per-component ids after a rewrite, given the event
    /// index map. Components merged by the rewrite unify their ids via
    /// the `merge` pair (cusp sums); fresh components get new ids.
    fn advance(&mut self, next: FrontDiagram, map: &IndexMap, merge: Option<(usize, usize)>) -> Result<()> {
        let old_trace = self.front.trace()?;
        let new_trace = next.trace()?;
        if let Some((d, b)) = merge {
            let (cd, cb) = (
                comp_of_cusp(&old_trace, d).ok_or_else(|| Error::Semantic {
                    index: d,
                    msg: "saddle location is not a cusp".into(),
                })?,
                comp_of_cusp(&old_trace, b).ok_or_else(|| Error::Semantic {
                    index: b,
                    msg: "saddle location is not a cusp".into(),
                })?,
            );
            let keep = self.cid[cd - 1].min(self.cid[cb - 1]);
            let drop = self.cid[cd - 1].max(self.cid[cb - 1]);
            for id in self.cid.iter_mut() {
                if *id == drop {
                    *id = keep;
                }
            }
            let joined: std::collections::BTreeSet<usize> =
                self.origins[cd - 1].union(&self.origins[cb - 1]).copied().collect();
            self.origins[cd - 1] = joined.clone();
            self.origins[cb - 1] = joined;
        }
        // preimage of each new event
        let mut pre = vec![None; next.events.len() + 1];
        for (old0, m) in map.iter().enumerate() {
            if let Some(ni) = m {
                pre[*ni] = Some(old0 + 1);
            }
        }
        let mut new_cid = vec![0usize; new_trace.component_count];
        let mut new_origins = vec![std::collections::BTreeSet::new(); new_trace.component_count];
        for c in 1..=new_trace.component_count {
            let mut found = None;
            for (k, et) in new_trace.event_trace.iter().enumerate() {
                if matches!(et, EventTrace::Cross { .. }) {
                    continue;
                }
                if comp_of_cusp(&new_trace, k + 1) != Some(c) {
                    continue;
                }
                if let Some(old_ev) = pre[k + 1] {
                    if let Some(oc) = comp_of_cusp(&old_trace, old_ev) {
                        found = Some(oc);
                        break;
                    }
                }
            }
            match found {
                Some(oc) => {
                    new_cid[c - 1] = self.cid[oc - 1];
                    new_origins[c - 1] = self.origins[oc - 1].clone();
                }
                None => {
                    new_cid[c - 1] = self.next_id;
                    self.next_id += 1;
                }
            }
        }
        self.front = next;
        self.cid = new_cid;
        self.origins = new_origins;
        Ok(())
    }

    fn step(&mut self, step: &ElementaryStep, idx: usize) -> Result<()> {
        match step {
            ElementaryStep::Trace(script) => {
                for mv in script {
                    if !mv.kind.is_trace_legal() {
                        return Err(Error::Semantic {
                            index: idx,
                            msg: format!("{} is not a trace-legal move", mv.kind.token()),
                        });
                    }
                    let (next, map) = apply_move(&self.front, *mv)?;
                    self.advance(next, &map, None)?;
                }
                Ok(())
            }
            ElementaryStep::BirthStep { position } => {
                let p = *position;
                let n = self.front.events.len();
                if p == 0 || p > n + 1 {
                    return Err(Error::Semantic {
                        index: idx,
                        msg: format!("birth position {p} out of range 1..={}", n + 1),
                    });
                }
                let mut events = self.front.events.clone();
                events.splice(p - 1..p - 1, [Event::Birth(1), Event::Death(1)]);
                let next = rebuilt_with_marks(&self.front, events, |old| {
                    if old < p { old } else { old + 2 }
                })?;
                let map: IndexMap = (1..=n).map(|k| Some(if k < p { k } else { k + 2 })).collect();
                self.advance(next, &map, None)
            }
            ElementaryStep::SaddleStep { at } => {
                let (d, b) = *at;
                if b != d + 1 {
                    return Err(Error::Semantic {
                        index: idx,
                        msg: "saddle events are not adjacent".into(),
                    });
                }
                let (prepared, flipped_comp) = prepare_saddle(&self.front, d, b)?;
                self.front = prepared;
                if let Some(cb) = flipped_comp {
                    // the induced orientation reverses this component's
                    // whole history, down to its bottom constituents
                    for &o in &self.origins[cb - 1] {
                        if !self.bottom_flips.remove(&o) {
                            self.bottom_flips.insert(o);
                        }
                    }
                }
                let (next, map) = apply_move(&self.front, Move::new(MoveKind::CuspSum, d, 0))?;
                self.advance(next, &map, Some((d, b)))
            }
        }
    }
}

/// An oriented saddle needs the strand directions to agree across the
/// facing pair. Joining two components with mismatched directions is
/// repaired by reversing the birth-side component; a mismatched
/// same-component sum would be a non-orientable band and is rejected.
pub fn prepare_saddle(front: &FrontDiagram, d: usize, b: usize) -> Result<(FrontDiagram, Option<usize>)> {
    let trace = front.trace()?;
    let (du, bu) = match (
        trace.event_trace.get(d - 1).copied(),
        trace.event_trace.get(b - 1).copied(),
    ) {
        (Some(EventTrace::Death { upper, .. }), Some(EventTrace::Birth { upper: bu, .. })) => {
            (upper, bu)
        }
        _ => {
            return Err(Error::Semantic {
                index: d,
                msg: "saddle location is not a death/birth pair".into(),
            })
        }
    };
    if trace.arcs[du].east == trace.arcs[bu].east {
        return Ok((front.clone(), None));
    }
    let (cd, cb) = (trace.arcs[du].component, trace.arcs[bu].component);
    if cd == cb {
        return Err(Error::Semantic {
            index: d,
            msg: "saddle on one component with opposed directions is non-orientable".into(),
        });
    }
    let mut flipped = front.flipped.clone();
    if !flipped.remove(&cb) {
        flipped.insert(cb);
    }
    Ok((front.clone().with_orientation(flipped, front.red.clone())?, Some(cb)))
}

/// Re-validate an edited event list, carrying orientation flips and
/// roles along an event-index translation.
fn rebuilt_with_marks(
    old: &FrontDiagram,
    events: Vec<Event>,
    translate: impl Fn(usize) -> usize,
) -> Result<FrontDiagram> {
    let old_trace = old.trace()?;
    let bare = FrontDiagram::from_events(events)?;
    let new_trace = bare.trace()?;
    let mut flipped = std::collections::BTreeSet::new();
    let mut red = std::collections::BTreeSet::new();
    for c in 1..=old_trace.component_count {
        let lb = translate(old_trace.leftmost_birth[c - 1]);
        let nc = comp_of_cusp(&new_trace, lb).unwrap_or(0);
        if nc == 0 {
            continue;
        }
        if old.flipped.contains(&c) {
            flipped.insert(nc);
        }
        if old.red.contains(&c) {
            red.insert(nc);
        }
    }
    bare.with_orientation(flipped, red)
}

/// Run the record, returning every intermediate front (one more entry
/// than there are steps).
pub fn movie(record: &CobordismRecord) -> Result<Vec<FrontDiagram>> {
    let mut st = StepState::start(&record.bottom)?;
    let mut out = vec![st.front.clone()];
    for (i, step) in record.steps.iter().enumerate() {
        st.step(step, i + 1).map_err(|e| Error::MoveFailed {
            index: i + 1,
            msg: format!("step {} failed: {e}", i + 1),
        })?;
        out.push(st.front.clone());
    }
    Ok(out)
}

/// The top front of the record.
pub fn apply_record(record: &CobordismRecord) -> Result<FrontDiagram> {
    Ok(movie(record)?.pop().unwrap())
}

/// χ = #births − #saddles; traces contribute nothing.
pub fn euler_characteristic(record: &CobordismRecord) -> i64 {
    let mut chi = 0i64;
    for s in &record.steps {
        match s {
            ElementaryStep::BirthStep { .. } => chi += 1,
            ElementaryStep::SaddleStep { .. } => chi -= 1,
            ElementaryStep::Trace(_) => {}
        }
    }
    chi
}

/// Whole-diagram Thurston–Bennequin number: writhe minus right cusps.
fn total_tb(front: &FrontDiagram) -> Result<i64> {
    let trace = front.trace()?;
    let deaths = front.events.iter().filter(|e| matches!(e, Event::Death(_))).count() as i64;
    Ok(trace.writhe() - deaths)
}

#[derive(Debug, Clone)]
pub struct RotCheck {
    pub cobordism_component: usize,
    pub rot_bottom: i64,
    pub rot_top: i64,
}

impl RotCheck {
    pub fn pass(&self) -> bool {
        self.rot_bottom == self.rot_top
    }
}

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub chi: i64,
    pub tb_bottom: i64,
    pub tb_top: i64,
    pub rot_checks: Vec<RotCheck>,
}

impl RelationReport {
    pub fn tb_pass(&self) -> bool {
        self.tb_top - self.tb_bottom == -self.chi
    }

    pub fn pass(&self) -> bool {
        self.tb_pass() && self.rot_checks.iter().all(RotCheck::pass)
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "tb(top) - tb(bottom) = {} - {} = {}, -chi = {}: {}\n",
            self.tb_top,
            self.tb_bottom,
            self.tb_top - self.tb_bottom,
            -self.chi,
            if self.tb_pass() { "pass" } else { "FAIL" }
        );
        for rc in &self.rot_checks {
            s.push_str(&format!(
                "rot across component {}: bottom {} top {}: {}\n",
                rc.cobordism_component,
                rc.rot_bottom,
                rc.rot_top,
                if rc.pass() { "pass" } else { "FAIL" }
            ));
        }
        s
    }
}

/// Check the classical-invariant relations of the record: the total tb
/// drops by χ from bottom to top, and rot is carried across every
/// cobordism component that is a single knot at both ends.
pub fn check_relations(record: &CobordismRecord) -> Result<RelationReport> {
    let mut st = StepState::start(&record.bottom)?;
    let bottom_cid = st.cid.clone();
    for (i, step) in record.steps.iter().enumerate() {
        st.step(step, i + 1)?;
    }
    // bottom invariants are taken in the orientation induced by the
    // cobordism, which may reverse some bottom components
    let mut bottom_flipped = record.bottom.flipped.clone();
    for &c in &st.bottom_flips {
        if !bottom_flipped.remove(&c) {
            bottom_flipped.insert(c);
        }
    }
    let bottom = record.bottom.clone().with_orientation(bottom_flipped, record.bottom.red.clone())?;
    let bottom_trace = bottom.trace()?;
    let top_trace = st.front.trace()?;
    let mut rot_checks = Vec::new();
    let mut ids: Vec<usize> = bottom_cid.iter().chain(st.cid.iter()).copied().collect();
    ids.sort();
    ids.dedup();
    for id in ids {
        let bot: Vec<usize> =
            (1..=bottom_cid.len()).filter(|c| bottom_cid[c - 1] == id).collect();
        let top: Vec<usize> = (1..=st.cid.len()).filter(|c| st.cid[c - 1] == id).collect();
        if let ([cb], [ct]) = (bot.as_slice(), top.as_slice()) {
            rot_checks.push(RotCheck {
                cobordism_component: id,
                rot_bottom: classical_invariants(&bottom_trace, *cb)?.rot,
                rot_top: classical_invariants(&top_trace, *ct)?.rot,
            });
        }
    }
    Ok(RelationReport {
        chi: euler_characteristic(record),
        tb_bottom: total_tb(&bottom)?,
        tb_top: total_tb(&st.front)?,
        rot_checks,
    })
}

/// The slice-disc record for the pretzel family: two disc births, the
/// surgery-arc transport as an isotopy trace, one saddle.
pub fn pretzel_slice_disc(m: usize) -> Result<CobordismRecord> {
    if m < 3 {
        return Err(Error::Unsupported(format!("pretzel slice disc needs m >= 3, got {m}")));
    }
    let arc = catalog::eta_m(m)?;
    // replay the transport over the post-birth front to locate the
    // saddle's facing pair
    let base = catalog::two_unlinked_unknots();
    let (mut d, mut b) = (arc.death_event, arc.birth_event);
    let mut cur = base;
    for mv in &arc.transport {
        let (next, map) = apply_move(&cur, *mv)?;
        d = map[d - 1].ok_or_else(|| Error::MoveFailed {
            index: mv.index,
            msg: "transport deleted a designated cusp".into(),
        })?;
        b = map[b - 1].ok_or_else(|| Error::MoveFailed {
            index: mv.index,
            msg: "transport deleted a designated cusp".into(),
        })?;
        cur = next;
    }
    Ok(CobordismRecord {
        bottom: FrontDiagram::from_events(vec![])?,
        steps: vec![
            ElementaryStep::BirthStep { position: 1 },
            ElementaryStep::BirthStep { position: 3 },
            ElementaryStep::Trace(arc.transport),
            ElementaryStep::SaddleStep { at: (d, b) },
        ],
    })
}

/// Reversal bookkeeping: the reversed concordance exists smoothly (and
/// totally real) but no Lagrangian witness is constructed.
#[derive(Debug, Clone)]
pub struct ReversedConcordance {
    pub from: FrontDiagram,
    pub to: FrontDiagram,
    pub lagrangian_witness: bool,
    pub totally_real_claim: bool,
}

impl ReversedConcordance {
    pub fn reversed(&self) -> ReversedConcordance {
        ReversedConcordance {
            from: self.to.clone(),
            to: self.from.clone(),
            lagrangian_witness: self.lagrangian_witness,
            totally_real_claim: self.totally_real_claim,
        }
    }
}

/// Reverse a concordance between rot-0 knots, swapping the ends. Only a
/// descriptor is produced: the reversal is totally real but carries no
/// Lagrangian front-level realization.
pub fn reverse_record(record: &CobordismRecord) -> Result<ReversedConcordance> {
    let mut st = StepState::start(&record.bottom)?;
    for (i, step) in record.steps.iter().enumerate() {
        st.step(step, i + 1)?;
    }
    let bottom_trace = record.bottom.trace()?;
    let top_trace = st.front.trace()?;
    if bottom_trace.component_count != 1 || top_trace.component_count != 1 {
        return Err(Error::Semantic {
            index: 0,
            msg: "reversal needs single-knot ends".into(),
        });
    }
    if euler_characteristic(record) != 0 {
        return Err(Error::Semantic {
            index: 0,
            msg: "reversal needs a concordance (chi = 0)".into(),
        });
    }
    let rb = classical_invariants(&bottom_trace, 1)?.rot;
    let rt = classical_invariants(&top_trace, 1)?.rot;
    if rb != 0 || rt != 0 {
        return Err(Error::Semantic {
            index: 0,
            msg: format!("reversal needs rot-0 ends, got {rb} and {rt}"),
        });
    }
    Ok(ReversedConcordance {
        from: st.front.clone(),
        to: record.bottom.clone(),
        lagrangian_witness: false,
        totally_real_claim: true,
    })
}

// ---------------------------------------------------------------------
// concordance ledger

#[derive(Debug, Clone)]
pub struct EndSignature {
    pub word: String,
    pub signature: InvariantSignature,
}

pub fn end_signature(front: &FrontDiagram) -> Result<EndSignature> {
    Ok(EndSignature { word: front.word(), signature: invariant_signature(front)? })
}

#[derive(Debug, Clone)]
pub enum Witness {
    /// A checked decomposable concordance record.
    Record(CobordismRecord),
    /// Trusted rule: stabilised slice-disc concordance from the
    /// stabilised unknot into the stabilised base knot.
    TheoremSliceDiscStab { k: usize },
    /// Trusted rule: the reverse concordance exists but is not regular;
    /// a regular concordance to the unknot would force the other end to
    /// be unknotted, and this end is knotted.
    TheoremNonRegular { k: usize },
}

impl Witness {
    pub fn tag(&self) -> String {
        match self {
            Witness::Record(_) => "record".into(),
            Witness::TheoremSliceDiscStab { k } => format!("slice-disc-stab(k={k})"),
            Witness::TheoremNonRegular { k } => format!("non-regular(k={k})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegularKnown {
    Yes,
    No,
    Unknown,
}

impl RegularKnown {
    pub fn token(&self) -> &'static str {
        match self {
            RegularKnown::Yes => "yes",
            RegularKnown::No => "no",
            RegularKnown::Unknown => "unknown",
        }
    }
}

/// One relation `source ⪯ target` with its witness.
#[derive(Debug, Clone)]
pub struct LedgerEntry {
    pub source: EndSignature,
    pub target: EndSignature,
    pub witness: Witness,
    pub regular_known: RegularKnown,
}

/// Immutable-value ledger; mutation returns a new ledger.
#[derive(Debug, Clone, Default)]
pub struct ConcordanceLedger {
    pub entries: Vec<LedgerEntry>,
    /// registered disc fillings, keyed by the filled front's word
    pub fillings: BTreeMap<String, CobordismRecord>,
}

impl ConcordanceLedger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register a disc filling (a record from the empty front to the
    /// knot it fills) for later theorem-entry use.
    pub fn register_filling(mut self, record: CobordismRecord) -> Result<Self> {
        let top = apply_record(&record)?;
        if top.trace()?.component_count != 1 {
            return Err(Error::Semantic { index: 0, msg: "filling top is not a knot".into() });
        }
        let report = check_relations(&record)?;
        if !report.pass() {
            return Err(Error::Semantic {
                index: 0,
                msg: format!("filling fails invariant relations:\n{}", report.render()),
            });
        }
        self.fillings.insert(top.word(), record);
        Ok(self)
    }

    /// Add a record-witnessed concordance entry after checking it.
    pub fn add_record_entry(mut self, record: CobordismRecord) -> Result<Self> {
        let top = apply_record(&record)?;
        let bottom = record.bottom.clone();
        if euler_characteristic(&record) != 0
            || bottom.trace()?.component_count != 1
            || top.trace()?.component_count != 1
        {
            return Err(Error::Semantic {
                index: 0,
                msg: "ledger records must be concordances between knots".into(),
            });
        }
        let report = check_relations(&record)?;
        if !report.pass() {
            return Err(Error::Semantic {
                index: 0,
                msg: format!("record fails invariant relations:\n{}", report.render()),
            });
        }
        self.entries.push(LedgerEntry {
            source: end_signature(&bottom)?,
            target: end_signature(&top)?,
            witness: Witness::Record(record),
            regular_known: RegularKnown::Yes,
        });
        Ok(self)
    }

    pub fn export(&self) -> String {
        let mut s = String::new();
        for e in &self.entries {
            s.push_str(&format!(
                "{} [{}] <= {} [{}] witness={} regular_known={}\n",
                e.source.word,
                e.source.signature.render(),
                e.target.word,
                e.target.signature.render(),
                e.witness.tag(),
                e.regular_known.token()
            ));
        }
        s
    }
}

/// `k`-fold positive and negative stabilisation, alternating +,− at the
/// canonical location.
pub fn stabilize_both(front: &FrontDiagram, k: usize) -> Result<FrontDiagram> {
    let mut cur = front.clone();
    for _ in 0..k {
        cur = stabilize(&cur, 1, true)?;
        cur = stabilize(&cur, 1, false)?;
    }
    Ok(cur)
}

/// Add the two trusted-rule entries for a filled base knot: with Λ̃ and
/// Ũ the k-fold ±stabilised base and unknot, the stabilised slice disc
/// gives Ũ ⪯ Λ̃, and a non-regular concordance gives Λ̃ ⪯ Ũ back.
pub fn ledger_add_theorem_entries(
    ledger: ConcordanceLedger,
    base: &FrontDiagram,
    k: usize,
) -> Result<ConcordanceLedger> {
    if k == 0 {
        return Err(Error::Unsupported("theorem entries need k > 0".into()));
    }
    let record = ledger.fillings.get(&base.word()).ok_or_else(|| Error::Semantic {
        index: 0,
        msg: format!("no disc filling registered for {}", base.word()),
    })?;
    let report = check_relations(record)?;
    if !report.pass() {
        return Err(Error::Semantic {
            index: 0,
            msg: format!("registered filling fails relations:\n{}", report.render()),
        });
    }
    let lam = stabilize_both(base, k)?;
    let u = stabilize_both(&catalog::unknot(), k)?;
    let lam_sig = end_signature(&lam)?;
    let u_sig = end_signature(&u)?;
    let mut ledger = ledger;
    ledger.entries.push(LedgerEntry {
        source: u_sig.clone(),
        target: lam_sig.clone(),
        witness: Witness::TheoremSliceDiscStab { k },
        regular_known: RegularKnown::Yes,
    });
    ledger.entries.push(LedgerEntry {
        source: lam_sig,
        target: u_sig,
        witness: Witness::TheoremNonRegular { k },
        regular_known: RegularKnown::No,
    });
    Ok(ledger)
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub a: EndSignature,
    pub b: EndSignature,
    pub witness_ab: String,
    pub witness_ba: String,
}

/// All pairs (A, B) related in both directions whose Jones polynomials
/// genuinely differ (recomputed here from the stored words).
pub fn ledger_check_antisymmetry(ledger: &ConcordanceLedger) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let n = ledger.entries.len();
    let mut seen_pairs = std::collections::BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (e1, e2) = (&ledger.entries[i], &ledger.entries[j]);
            if e1.source.word != e2.target.word || e1.target.word != e2.source.word {
                continue;
            }
            let key = if e1.source.word <= e1.target.word {
                (e1.source.word.clone(), e1.target.word.clone())
            } else {
                (e1.target.word.clone(), e1.source.word.clone())
            };
            if !seen_pairs.insert(key) {
                continue;
            }
            let ja = jones_polynomial(&parse_front(&e1.source.word)?)?;
            let jb = jones_polynomial(&parse_front(&e1.target.word)?)?;
            if ja != jb {
                out.push(Violation {
                    a: e1.source.clone(),
                    b: e1.target.clone(),
                    witness_ab: e1.witness.tag(),
                    witness_ba: e2.witness.tag(),
                });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// record text format

/// Render a record: the bottom front block, then one line per step.
pub fn render_record(record: &CobordismRecord) -> String {
    let mut s = crate::front::parse::to_dsl(&record.bottom);
    for step in &record.steps {
        match step {
            ElementaryStep::BirthStep { position } => s.push_str(&format!("birth @{position}\n")),
            ElementaryStep::SaddleStep { at } => s.push_str(&format!("saddle @{},{}\n", at.0, at.1)),
            ElementaryStep::Trace(script) => {
                s.push_str("trace {\n");
                for line in script_to_text(script).lines() {
                    s.push_str("  ");
                    s.push_str(line);
                    s.push('\n');
                }
                s.push_str("}\n");
            }
        }
    }
    s
}

/// Parse the record text format: a front block followed by step lines
/// `birth @<pos>`, `saddle @<death>,<birth>` and `trace { ... }`.
pub fn parse_record(text: &str) -> Result<CobordismRecord> {
    let mut front_lines = Vec::new();
    let mut steps = Vec::new();
    let mut lines = text.lines().enumerate().peekable();
    let syntax = |ln: usize, msg: &str| Error::Parse {
        line: ln,
        col: 1,
        msg: msg.to_string(),
    };
    while let Some((ln0, raw)) = lines.next() {
        let ln = ln0 + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("birth") {
            let pos = rest
                .trim()
                .strip_prefix('@')
                .and_then(|s| s.trim().parse::<usize>().ok())
                .ok_or_else(|| syntax(ln, "expected: birth @<pos>"))?;
            steps.push(ElementaryStep::BirthStep { position: pos });
        } else if let Some(rest) = line.strip_prefix("saddle") {
            let nums: Vec<usize> = rest
                .trim()
                .strip_prefix('@')
                .map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect())
                .unwrap_or_default();
            if nums.len() != 2 {
                return Err(syntax(ln, "expected: saddle @<death-idx>,<birth-idx>"));
            }
            steps.push(ElementaryStep::SaddleStep { at: (nums[0], nums[1]) });
        } else if let Some(rest) = line.strip_prefix("trace") {
            let mut body = String::new();
            let rest = rest.trim();
            if !rest.starts_with('{') {
                return Err(syntax(ln, "expected: trace { ... }"));
            }
            let after = &rest[1..];
            if let Some(end) = after.find('}') {
                body.push_str(&after[..end].replace(';', "\n"));
            } else {
                body.push_str(&after.replace(';', "\n"));
                body.push('\n');
                let mut closed = false;
                for (ln20, raw2) in lines.by_ref() {
                    let l2 = raw2.split('#').next().unwrap_or("").trim();
                    if l2 == "}" {
                        closed = true;
                        break;
                    }
                    if l2.contains('}') {
                        return Err(syntax(ln20 + 1, "trace closing brace must stand alone"));
                    }
                    body.push_str(l2);
                    body.push('\n');
                }
                if !closed {
                    return Err(syntax(ln, "unterminated trace block"));
                }
            }
            steps.push(ElementaryStep::Trace(parse_script(&body)?));
        } else if steps.is_empty() {
            front_lines.push(raw.to_string());
        } else {
            return Err(syntax(ln, "front lines must precede all steps"));
        }
    }
    let bottom = if front_lines.is_empty() {
        FrontDiagram::from_events(vec![])?
    } else {
        parse_front(&front_lines.join("\n"))?
    };
    Ok(CobordismRecord { bottom, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_knot, rng};

    fn birth() -> ElementaryStep {
        ElementaryStep::BirthStep { position: 1 }
    }

    #[test]
    fn single_birth_is_unknot() {
        let rec = CobordismRecord {
            bottom: FrontDiagram::from_events(vec![]).unwrap(),
            steps: vec![birth()],
        };
        assert_eq!(apply_record(&rec).unwrap().word(), "b1 d1");
        assert_eq!(euler_characteristic(&rec), 1);
    }

    #[test]
    fn two_discs_and_saddle_is_unknot() {
        let rec = CobordismRecord {
            bottom: FrontDiagram::from_events(vec![]).unwrap(),
            steps: vec![
                birth(),
                ElementaryStep::BirthStep { position: 3 },
                ElementaryStep::SaddleStep { at: (2, 3) },
            ],
        };
        let top = apply_record(&rec).unwrap();
        assert_eq!(top.word(), "b1 d1");
        assert_eq!(euler_characteristic(&rec), 1);
        let report = check_relations(&rec).unwrap();
        assert!(report.pass(), "{}", report.render());
    }

    #[test]
    fn stab_rejected_in_trace() {
        let rec = CobordismRecord {
            bottom: catalog::unknot(),
            steps: vec![ElementaryStep::Trace(vec![Move::new(MoveKind::StabPlus, 2, 1)])],
        };
        assert!(apply_record(&rec).is_err());
    }

    #[test]
    fn record_roundtrip() {
        let rec = CobordismRecord {
            bottom: catalog::unknot(),
            steps: vec![
                ElementaryStep::Trace(vec![Move::new(MoveKind::R1a, 2, 1)]),
                ElementaryStep::BirthStep { position: 1 },
                ElementaryStep::SaddleStep { at: (2, 3) },
            ],
        };
        let text = render_record(&rec);
        let back = parse_record(&text).unwrap();
        assert_eq!(render_record(&back), text);
        // movies agree step by step
        let (m1, m2) = (movie(&rec).unwrap(), movie(&back).unwrap());
        assert_eq!(m1.len(), m2.len());
        for (a, b) in m1.iter().zip(&m2) {
            assert_eq!(a.word(), b.word());
        }
    }

    #[test]
    fn random_records_satisfy_tb_relation() {
        let mut r = rng(40);
        for trial in 0..200 {
            let bottom = random_knot(&mut r, 6);
            let rec = crate::random::random_record(&mut r, &bottom, 10);
            let report = match check_relations(&rec) {
                Ok(rep) => rep,
                Err(e) => panic!("trial {trial}: record failed to run: {e}\n{}", render_record(&rec)),
            };
            assert!(
                report.tb_pass(),
                "trial {trial}: tb relation failed\n{}\n{}",
                report.render(),
                render_record(&rec)
            );
            assert!(
                report.pass(),
                "trial {trial}: rot relation failed\n{}\n{}",
                report.render(),
                render_record(&rec)
            );
        }
    }

    #[test]
    fn reverse_trace_concordance() {
        let rec = CobordismRecord {
            bottom: catalog::unknot(),
            steps: vec![ElementaryStep::Trace(vec![Move::new(MoveKind::R1a, 2, 1)])],
        };
        let rev = reverse_record(&rec).unwrap();
        assert!(!rev.lagrangian_witness);
        assert!(rev.totally_real_claim);
        let back = rev.reversed();
        assert_eq!(back.from.word(), rec.bottom.word());
    }

    #[test]
    fn reverse_rejects_nonzero_rot() {
        let stab = stabilize(&catalog::unknot(), 1, true).unwrap();
        let rec = CobordismRecord {
            bottom: stab,
            steps: vec![],
        };
        assert!(reverse_record(&rec).is_err());
    }

    #[test]
    fn empty_ledger_has_no_violations() {
        let ledger = ConcordanceLedger::new();
        assert!(ledger_check_antisymmetry(&ledger).unwrap().is_empty());
    }

    #[test]
    fn record_entries_alone_never_violate() {
        let mut ledger = ConcordanceLedger::new();
        let rec = CobordismRecord {
            bottom: catalog::unknot(),
            steps: vec![ElementaryStep::Trace(vec![Move::new(MoveKind::R1a, 2, 1)])],
        };
        ledger = ledger.add_record_entry(rec).unwrap();
        assert!(ledger_check_antisymmetry(&ledger).unwrap().is_empty());
    }

    #[test]
    fn unknot_filling_registers() {
        let rec = CobordismRecord {
            bottom: FrontDiagram::from_events(vec![]).unwrap(),
            steps: vec![birth()],
        };
        let ledger = ConcordanceLedger::new().register_filling(rec).unwrap();
        let ledger = ledger_add_theorem_entries(ledger, &catalog::unknot(), 1).unwrap();
        assert_eq!(ledger.entries.len(), 2);
        // degenerate: both ends are the stabilised unknot, same Jones
        assert!(ledger_check_antisymmetry(&ledger).unwrap().is_empty());
        for e in &ledger.entries {
            assert_eq!(e.source.signature.tb, -3);
            assert_eq!(e.source.signature.rot, 0);
        }
    }
}
