// Temporary search tool: beam search for a transport script for the
// surgery arc catalog entries. Not part of the shipped crate.

use legfront::dga::invariant_signature;
use legfront::front::diagram::{Event, FrontDiagram};
use legfront::front::parse::parse_front;
use legfront::front::trace::EventTrace;
use legfront::jones::jones_polynomial;
use legfront::moves::{apply_move, cusp_connect_sum, script_to_text, Move, MoveKind};
use std::collections::HashSet;

#[derive(Clone)]
struct State {
    front: FrontDiagram,
    d: usize,
    b: usize,
    script: Vec<Move>,
    r1_budget: usize,
    score: i64,
}

fn inter_crossings(front: &FrontDiagram) -> i64 {
    let Ok(trace) = front.trace() else { return 0 };
    trace
        .event_trace
        .iter()
        .filter(|et| match et {
            EventTrace::Cross { over, under } => {
                trace.arcs[*over].component != trace.arcs[*under].component
            }
            _ => false,
        })
        .count() as i64
}

fn score(front: &FrontDiagram) -> i64 {
    inter_crossings(front) * 8 - front.events.len() as i64
}

fn neighbor_moves(st: &State) -> Vec<Move> {
    let front = &st.front;
    let trace = match front.trace() {
        Ok(t) => t,
        Err(_) => return vec![],
    };
    let n = front.events.len();
    let mut out = Vec::new();
    // R1 insertions near designated cusps only, budgeted
    if st.r1_budget > 0 {
        let mut sites = Vec::new();
        if let Some(Event::Death(i)) = front.events.get(st.d - 1) {
            sites.push((st.d, *i));
        }
        if let Some(Event::Birth(i)) = front.events.get(st.b - 1) {
            sites.push((st.b + 1, *i));
        }
        for (p, i) in sites {
            let strands = trace.slices[p - 1].len();
            for s in i.saturating_sub(1).max(1)..=(i + 2).min(strands) {
                out.push(Move::new(MoveKind::R1a, p, s));
                out.push(Move::new(MoveKind::R1b, p, s));
            }
        }
    }
    // transits of any cusp
    if n < 20 {
        for (p0, ev) in front.events.iter().enumerate() {
            let p = p0 + 1;
            match ev {
                Event::Death(i) => {
                    let strands = trace.slices[p - 1].len();
                    if *i >= 2 {
                        out.push(Move::new(MoveKind::R2a, p, i - 1));
                    }
                    if i + 2 <= strands {
                        out.push(Move::new(MoveKind::R2a, p, i + 2));
                    }
                }
                Event::Birth(i) => {
                    let strands = trace.slices[p].len();
                    if *i >= 2 {
                        out.push(Move::new(MoveKind::R2b, p, i - 1));
                    }
                    if i + 2 <= strands {
                        out.push(Move::new(MoveKind::R2b, p, i + 2));
                    }
                }
                _ => {}
            }
        }
    }
    // commutations, R3, simplifications anywhere
    for p in 1..=n {
        if p < n {
            out.push(Move::new(MoveKind::S1, p, 0));
            out.push(Move::new(MoveKind::S2, p, 0));
            out.push(Move::new(MoveKind::S2, p, 1));
            out.push(Move::new(MoveKind::S2, p, 2));
        }
        out.push(Move::inv(MoveKind::R2a, p, 0));
        out.push(Move::inv(MoveKind::R2b, p, 0));
        out.push(Move::new(MoveKind::R3, p, 0));
        if let Some(Event::Birth(bslot)) = front.events.get(p - 1) {
            if *bslot >= 2 {
                out.push(Move::inv(MoveKind::R1a, p, bslot - 1));
            }
            out.push(Move::inv(MoveKind::R1b, p, *bslot));
        }
    }
    out
}

fn try_step(st: &State, mv: Move) -> Option<State> {
    let (next, map) = apply_move(&st.front, mv).ok()?;
    let d = map[st.d - 1]?;
    let b = map[st.b - 1]?;
    let mut script = st.script.clone();
    script.push(mv);
    let r1_budget = if matches!(mv.kind, MoveKind::R1a | MoveKind::R1b) && !mv.inverse {
        st.r1_budget - 1
    } else {
        st.r1_budget
    };
    let score = score(&next);
    Some(State { front: next, d, b, script, r1_budget, score })
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let depth: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(14);
    let width: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(30_000);
    let r1_budget: usize = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(2);

    let start = State {
        front: parse_front("b1 d1 b1 d1").unwrap(),
        d: 2,
        b: 3,
        script: vec![],
        r1_budget,
        score: 0,
    };

    let mut seen_outputs: HashSet<String> = HashSet::new();
    let mut visited: HashSet<String> = HashSet::new();
    let mut hits = 0usize;
    let mut layer = vec![start];

    for d in 0..=depth {
        eprintln!(
            "depth {d}: layer {}, visited {}, outputs {}, hits {hits}, best score {}",
            layer.len(),
            visited.len(),
            seen_outputs.len(),
            layer.iter().map(|s| s.score).max().unwrap_or(0)
        );
        let mut next_layer: Vec<State> = Vec::new();
        for st in &layer {
            if st.b == st.d + 1 {
                if let Ok(out) = cusp_connect_sum(&st.front, (st.d, st.b)) {
                    let word = out.word();
                    let nx = out.crossing_count();
                    if nx <= 12 && seen_outputs.insert(word.clone()) {
                        if let Ok(j) = jones_polynomial(&out) {
                            if !j.is_one() {
                                hits += 1;
                                match invariant_signature(&out) {
                                    Ok(sig) => {
                                        let (tb, rot, augs, lin) = sig.legendrian_part();
                                        let lin_ok = augs == 1
                                            && lin.len() == 1
                                            && lin.iter().next().unwrap().render("x") == "x";
                                        if tb == -1 && rot == 0 && lin_ok {
                                            println!("FOUND len={} word={}", st.script.len(), word);
                                            println!("  sig: {}", sig.render());
                                            println!(
                                                "  script: {}",
                                                script_to_text(&st.script).replace('\n', " ; ")
                                            );
                                        } else {
                                            println!(
                                                "REJECT {} sig {} script: {}",
                                                word,
                                                sig.render(),
                                                script_to_text(&st.script).replace('\n', " ; ")
                                            );
                                        }
                                    }
                                    Err(e) => eprintln!("dga failed on {word}: {e}"),
                                }
                            }
                        }
                    }
                }
            }
            if d == depth {
                continue;
            }
            for mv in neighbor_moves(st) {
                if let Some(nx) = try_step(st, mv) {
                    let key = format!("{}|{}|{}|{}", nx.front.word(), nx.d, nx.b, nx.r1_budget);
                    if visited.insert(key) {
                        next_layer.push(nx);
                    }
                }
            }
        }
        if d == depth {
            break;
        }
        next_layer.sort_by_key(|s| -s.score);
        next_layer.truncate(width);
        layer = next_layer;
    }
    eprintln!("done: outputs {}, hits {hits}", seen_outputs.len());
}
