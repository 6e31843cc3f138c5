// Temporary search tool: find a transport script for the surgery arc
// catalog entries. Not part of the shipped crate.

use legfront::dga::invariant_signature;
use legfront::front::diagram::{Event, FrontDiagram};
use legfront::front::parse::parse_front;
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
}

struct Buckets {
    transit: Vec<Move>,
    commute: Vec<Move>,
    swallow: Vec<Move>,
    simplify: Vec<Move>,
}

fn neighbor_moves(st: &State) -> Buckets {
    let front = &st.front;
    let mut bk = Buckets { transit: vec![], commute: vec![], swallow: vec![], simplify: vec![] };
    let trace = match front.trace() {
        Ok(t) => t,
        Err(_) => return bk,
    };
    let n = front.events.len();
    let near_pos: Vec<usize> = {
        let mut v = vec![st.d, st.d + 1, st.b, st.b + 1];
        if st.d > 1 {
            v.push(st.d - 1);
        }
        if st.b > 1 {
            v.push(st.b - 1);
        }
        v.sort();
        v.dedup();
        v.retain(|p| *p >= 1 && *p <= n + 1);
        v
    };
    // swallowtail insertions on the band, right next to a designated cusp
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
                bk.swallow.push(Move::new(MoveKind::R1a, p, s));
                bk.swallow.push(Move::new(MoveKind::R1b, p, s));
            }
        }
    }
    // transits of the designated cusps only
    if n < 18 {
        if let Some(Event::Death(i)) = front.events.get(st.d - 1) {
            let strands = trace.slices[st.d - 1].len();
            if *i >= 2 {
                bk.transit.push(Move::new(MoveKind::R2a, st.d, i - 1));
            }
            if i + 2 <= strands {
                bk.transit.push(Move::new(MoveKind::R2a, st.d, i + 2));
            }
        }
        if let Some(Event::Birth(i)) = front.events.get(st.b - 1) {
            let strands = trace.slices[st.b].len();
            if *i >= 2 {
                bk.transit.push(Move::new(MoveKind::R2b, st.b, i - 1));
            }
            if i + 2 <= strands {
                bk.transit.push(Move::new(MoveKind::R2b, st.b, i + 2));
            }
        }
    }
    // commutations near the designated cusps
    for &p in &near_pos {
        if p < n {
            bk.commute.push(Move::new(MoveKind::S1, p, 0));
            bk.commute.push(Move::new(MoveKind::S2, p, 0));
            bk.commute.push(Move::new(MoveKind::S2, p, 1));
            bk.commute.push(Move::new(MoveKind::S2, p, 2));
        }
    }
    // simplifications anywhere
    for p in 1..=n {
        bk.simplify.push(Move::inv(MoveKind::R2a, p, 0));
        bk.simplify.push(Move::inv(MoveKind::R2b, p, 0));
        bk.simplify.push(Move::new(MoveKind::R3, p, 0));
        if let Some(Event::Birth(bslot)) = front.events.get(p - 1) {
            if *bslot >= 2 {
                bk.simplify.push(Move::inv(MoveKind::R1a, p, bslot - 1));
            }
            bk.simplify.push(Move::inv(MoveKind::R1b, p, *bslot));
        }
    }
    bk
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
    Some(State { front: next, d, b, script, r1_budget })
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let walks: usize = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(200_000);
    let depth: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(18);
    let r1_budget: usize = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(3);
    let seed: u64 = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(1);

    let start = State {
        front: parse_front("b1 d1 b1 d1").unwrap(),
        d: 2,
        b: 3,
        script: vec![],
        r1_budget,
    };

    let mut seen_outputs: HashSet<String> = HashSet::new();
    let mut hits = 0usize;
    let mut visited: HashSet<String> = HashSet::new();
    let mut layer = vec![start];
    let _ = walks;

    for d in 0..=depth {
        let mut next_layer = Vec::new();
        eprintln!("depth {d}: layer {}, visited {}, outputs {}, hits {hits}", layer.len(), visited.len(), seen_outputs.len());
        for st in &layer {
            // facing?
            if st.b == st.d + 1 {
                if let Ok(out) = cusp_connect_sum(&st.front, (st.d, st.b)) {
                    let word = out.word();
                    let nx = out.events.iter().filter(|e| matches!(e, Event::Cross(_))).count();
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
                                            println!("  script: {}", script_to_text(&st.script).replace('\n', " ; "));
                                        } else {
                                            eprintln!("knotted but rejected: {} sig {}", word, sig.render());
                                        }
                                    }
                                    Err(e) => eprintln!("knotted, dga failed on {word}: {e}"),
                                }
                            }
                        }
                    }
                }
            }
            if d == depth {
                continue;
            }
            let bk = neighbor_moves(st);
            for pool in [&bk.transit, &bk.commute, &bk.swallow, &bk.simplify] {
                for &mv in pool {
                    if let Some(nx) = try_step(st, mv) {
                        let key = format!("{}|{}|{}|{}", nx.front.word(), nx.d, nx.b, nx.r1_budget);
                        if visited.insert(key) {
                            next_layer.push(nx);
                        }
                    }
                }
            }
        }
        if next_layer.is_empty() && d == depth {
            break;
        }
        layer = next_layer;
        if visited.len() > 6_000_000 {
            eprintln!("visited cap reached");
            break;
        }
    }
    eprintln!("done: outputs {}, hits {hits}", seen_outputs.len());
}
