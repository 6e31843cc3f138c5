//! Seeded random fronts and move scripts for stress tests and the
//! verification battery.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::front::diagram::{Event, FrontDiagram};
use crate::moves::{applicable_moves, apply_move, Move, MoveKind, MoveScript};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A valid closed front with at most `max_crossings` crossings.
pub fn random_front(rng: &mut ChaCha8Rng, max_crossings: usize) -> FrontDiagram {
    loop {
        let mut events = Vec::new();
        let mut strands = 0usize;
        let mut crossings = 0usize;
        let budget = rng.gen_range(4..=40);
        while events.len() < budget {
            let roll = rng.gen_range(0..10);
            if strands < 2 || (roll < 3 && strands < 8) {
                events.push(Event::Birth(rng.gen_range(1..=strands + 1)));
                strands += 2;
            } else if roll < 7 && crossings < max_crossings {
                events.push(Event::Cross(rng.gen_range(1..strands)));
                crossings += 1;
            } else {
                events.push(Event::Death(rng.gen_range(1..strands)));
                strands -= 2;
            }
        }
        while strands > 0 {
            events.push(Event::Death(rng.gen_range(1..strands.max(2))));
            strands -= 2;
        }
        if let Ok(front) = FrontDiagram::from_events(events) {
            return front;
        }
    }
}

/// A valid front with a single component.
pub fn random_knot(rng: &mut ChaCha8Rng, max_crossings: usize) -> FrontDiagram {
    loop {
        let front = random_front(rng, max_crossings);
        if front.trace().map(|t| t.component_count).unwrap_or(0) == 1 {
            return front;
        }
    }
}

const R_KINDS: [MoveKind; 7] = [
    MoveKind::R1a,
    MoveKind::R1b,
    MoveKind::R2a,
    MoveKind::R2b,
    MoveKind::R3,
    MoveKind::S1,
    MoveKind::S2,
];

/// Applies up to `len` randomly chosen Reidemeister and commutation
/// moves; returns the script actually applied and the resulting front.
pub fn random_r_script(
    rng: &mut ChaCha8Rng,
    front: &FrontDiagram,
    len: usize,
) -> (MoveScript, FrontDiagram) {
    let mut current = front.clone();
    let mut script = MoveScript::new();
    for _ in 0..len {
        let all = applicable_moves(&current).expect("valid front");
        let candidates: Vec<Move> = all
            .into_iter()
            .filter(|m| R_KINDS.contains(&m.kind))
            .collect();
        if candidates.is_empty() {
            break;
        }
        let mv = candidates[rng.gen_range(0..candidates.len())];
        let (next, _) = apply_move(&current, mv).expect("enumerated move must apply");
        script.push(mv);
        current = next;
    }
    (script, current)
}

/// A valid cobordism record over `bottom` with at most `max_steps`
/// elementary steps, mixing traces, births and saddles.
pub fn random_record(
    rng: &mut ChaCha8Rng,
    bottom: &FrontDiagram,
    max_steps: usize,
) -> crate::cobordism::CobordismRecord {
    use crate::cobordism::ElementaryStep;
    let mut cur = bottom.clone();
    let mut steps = Vec::new();
    let budget = rng.gen_range(1..=max_steps);
    while steps.len() < budget {
        let roll = rng.gen_range(0..10);
        if roll < 4 {
            let len = rng.gen_range(1..=3);
            let (script, next) = random_r_script(rng, &cur, len);
            if script.is_empty() {
                continue;
            }
            cur = next;
            steps.push(ElementaryStep::Trace(script));
        } else if roll < 7 {
            let pos = rng.gen_range(1..=cur.events.len() + 1);
            let mut events = cur.events.clone();
            events.splice(pos - 1..pos - 1, [Event::Birth(1), Event::Death(1)]);
            // placement inside another event pair can be invalid only if
            // the word was, so this always revalidates
            cur = FrontDiagram::from_events(events).expect("birth insertion is valid");
            steps.push(ElementaryStep::BirthStep { position: pos });
        } else {
            // any facing death/birth pair at one slot
            let pairs: Vec<usize> = cur
                .events
                .windows(2)
                .enumerate()
                .filter_map(|(k, w)| match (w[0], w[1]) {
                    (Event::Death(i), Event::Birth(j)) if i == j => Some(k + 1),
                    _ => None,
                })
                .collect();
            if pairs.is_empty() {
                continue;
            }
            let d = pairs[rng.gen_range(0..pairs.len())];
            let Ok((prepared, _)) = crate::cobordism::prepare_saddle(&cur, d, d + 1) else {
                // non-orientable self-sum, pick something else
                continue;
            };
            let (next, _) = apply_move(&prepared, Move::new(MoveKind::CuspSum, d, 0))
                .expect("facing pair admits a cusp sum");
            cur = next;
            steps.push(ElementaryStep::SaddleStep { at: (d, d + 1) });
        }
    }
    crate::cobordism::CobordismRecord { bottom: bottom.clone(), steps }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_fixed_seed() {
        let mut a = rng(7);
        let mut b = rng(7);
        for _ in 0..5 {
            assert_eq!(random_front(&mut a, 8).word(), random_front(&mut b, 8).word());
        }
    }

    #[test]
    fn fronts_are_valid_and_bounded() {
        let mut r = rng(42);
        for _ in 0..50 {
            let f = random_front(&mut r, 6);
            let t = f.trace().unwrap();
            assert!(f.crossing_count() <= 6);
            assert!(t.component_count >= 1);
        }
    }
}
