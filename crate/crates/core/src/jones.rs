//! Jones polynomial via the Kauffman bracket state sum.
//!
//! Each crossing is smoothed two ways: the A-smoothing lets both strands
//! pass through (the crossing event is dropped), the B-smoothing caps
//! and re-opens them (a death immediately followed by a birth at the
//! same slot). Loops of the resulting crossingless word are counted by
//! strand tracing.

use crate::front::diagram::{Event, FrontDiagram};
use crate::poly::LaurentPoly;
use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Kauffman bracket in the variable A.
pub fn kauffman_bracket(front: &FrontDiagram) -> Result<LaurentPoly> {
    front.trace()?;
    let crossing_positions: Vec<usize> = front
        .events
        .iter()
        .enumerate()
        .filter(|(_, e)| matches!(e, Event::Cross(_)))
        .map(|(k, _)| k)
        .collect();
    let n = crossing_positions.len();
    assert!(n < 28, "state sum over 2^{n} states is out of range");

    let delta = {
        // delta = -A^2 - A^-2
        let mut d = LaurentPoly::zero();
        d.add_term(2, -1);
        d.add_term(-2, -1);
        d
    };

    let state_term = |state: u32| -> LaurentPoly {
        let mut events = Vec::with_capacity(front.events.len() + n);
        let mut a_count = 0i64;
        let mut ci = 0usize;
        for ev in &front.events {
            match *ev {
                Event::Cross(i) => {
                    if state >> ci & 1 == 0 {
                        a_count += 1; // A-smoothing: strands pass through
                    } else {
                        events.push(Event::Death(i));
                        events.push(Event::Birth(i));
                    }
                    ci += 1;
                }
                e => events.push(e),
            }
        }
        let loops = FrontDiagram::from_events(events)
            .expect("smoothed state is always a valid word")
            .trace()
            .unwrap()
            .component_count;
        let b_count = n as i64 - a_count;
        let mut term = LaurentPoly::monomial(a_count - b_count, 1);
        for _ in 1..loops {
            term = &term * &delta;
        }
        term
    };

    let states = 0u32..(1u32 << n);
    #[cfg(feature = "parallel")]
    let bracket = states
        .into_par_iter()
        .map(state_term)
        .reduce(LaurentPoly::zero, |a, b| &a + &b);
    #[cfg(not(feature = "parallel"))]
    let bracket = states.map(|s| state_term(s)).fold(LaurentPoly::zero(), |a, b| &a + &b);

    Ok(bracket)
}

/// Writhe-normalized bracket f = (-A^3)^(-w) * <D>, still in A.
pub fn normalized_bracket(front: &FrontDiagram) -> Result<LaurentPoly> {
    let trace = front.trace()?;
    let w = trace.writhe();
    let bracket = kauffman_bracket(front)?;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let norm = LaurentPoly::monomial(-3 * w, sign);
    Ok(&norm * &bracket)
}

/// The Jones polynomial. Exponents are kept in the bracket variable A
/// (t = A^-4); `render_jones` prints in t when possible.
pub fn jones_polynomial(front: &FrontDiagram) -> Result<LaurentPoly> {
    normalized_bracket(front)
}

/// Print in t when all A-exponents are multiples of 4 (knots); links
/// with half-integer t powers fall back to the A form.
pub fn render_jones(p: &LaurentPoly) -> String {
    if p.exponents_divisible_by(4) {
        let mut t = LaurentPoly::zero();
        for (&e, &c) in &p.terms {
            t.add_term(e / -4, c);
        }
        t.render("t")
    } else {
        p.render("A")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse::parse_front;

    #[test]
    fn unknot_is_one() {
        let f = parse_front("b1 d1").unwrap();
        assert!(jones_polynomial(&f).unwrap().is_one());
        assert_eq!(render_jones(&jones_polynomial(&f).unwrap()), "1");
    }

    #[test]
    fn two_component_unlink() {
        let f = parse_front("b1 d1 b1 d1").unwrap();
        // V(unlink) = -A^2 - A^-2
        let v = jones_polynomial(&f).unwrap();
        let mut expect = LaurentPoly::zero();
        expect.add_term(2, -1);
        expect.add_term(-2, -1);
        assert_eq!(v, expect);
    }

    #[test]
    fn right_handed_trefoil() {
        let f = parse_front("b1 b1 x2 x2 x2 d1 d1").unwrap();
        let v = jones_polynomial(&f).unwrap();
        // V = -t^4 + t^3 + t, i.e. A-exponents -16, -12, -4
        let mut expect = LaurentPoly::zero();
        expect.add_term(-16, -1);
        expect.add_term(-12, 1);
        expect.add_term(-4, 1);
        assert_eq!(v, expect);
        assert_eq!(render_jones(&v), "-t^4 + t^3 + t");
    }

    #[test]
    fn zigzag_unknot_still_trivial() {
        let f = parse_front("b1 b1 d2 d1").unwrap();
        assert!(jones_polynomial(&f).unwrap().is_one());
    }
}
