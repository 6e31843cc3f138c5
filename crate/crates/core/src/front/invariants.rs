use crate::front::trace::{EventTrace, Trace};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub rot: i64,
}

/// tb = self-writhe minus right cusps; rot = (down − up cusps) / 2.
/// A death cusp is traversed downward when its upper arc runs east; a
/// birth cusp when its upper arc runs west.
pub fn classical_invariants(trace: &Trace, component: usize) -> Result<ClassicalInvariants> {
    if component == 0 || component > trace.component_count {
        return Err(Error::Semantic {
            index: 0,
            msg: format!(
                "component c{component} does not exist (front has {})",
                trace.component_count
            ),
        });
    }
    let mut writhe = 0i64;
    let mut deaths = 0i64;
    let mut down = 0i64;
    let mut up = 0i64;
    for (k, et) in trace.event_trace.iter().enumerate() {
        match *et {
            EventTrace::Cross { over, under } => {
                if trace.arcs[over].component == component
                    && trace.arcs[under].component == component
                {
                    writhe += trace.crossing_sign(k + 1);
                }
            }
            EventTrace::Death { upper, .. } => {
                if trace.arcs[upper].component == component {
                    deaths += 1;
                    if trace.arcs[upper].east {
                        down += 1;
                    } else {
                        up += 1;
                    }
                }
            }
            EventTrace::Birth { upper, .. } => {
                if trace.arcs[upper].component == component {
                    if trace.arcs[upper].east {
                        up += 1;
                    } else {
                        down += 1;
                    }
                }
            }
        }
    }
    debug_assert_eq!((down + up) % 2, 0);
    Ok(ClassicalInvariants { tb: writhe - deaths, rot: (down - up) / 2 })
}

pub fn all_components(trace: &Trace) -> Vec<ClassicalInvariants> {
    (1..=trace.component_count)
        .map(|c| classical_invariants(trace, c).unwrap())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse::parse_front;

    fn inv(word: &str, comp: usize) -> ClassicalInvariants {
        classical_invariants(&parse_front(word).unwrap().trace().unwrap(), comp).unwrap()
    }

    #[test]
    fn standard_unknot() {
        assert_eq!(inv("b1 d1", 1), ClassicalInvariants { tb: -1, rot: 0 });
    }

    #[test]
    fn zigzag_unknot() {
        let i = inv("b1 b1 d2 d1", 1);
        assert_eq!(i.tb, -2);
        assert_eq!(i.rot.abs(), 1);
    }

    #[test]
    fn maximal_trefoil() {
        assert_eq!(inv("b1 b1 x2 x2 x2 d1 d1", 1), ClassicalInvariants { tb: 1, rot: 0 });
    }

    #[test]
    fn orientation_reversal_negates_rot_fixes_tb() {
        for word in ["b1 b1 d2 d1", "b1 b1 x2 x2 x2 d1 d1", "b1 b2 d2 d1"] {
            let f = parse_front(word).unwrap();
            let flipped = parse_front(&format!("events: {word}\norient: c1=-")).unwrap();
            let a = classical_invariants(&f.trace().unwrap(), 1).unwrap();
            let b = classical_invariants(&flipped.trace().unwrap(), 1).unwrap();
            assert_eq!(a.tb, b.tb);
            assert_eq!(a.rot, -b.rot);
        }
    }

    #[test]
    fn unknown_component_rejected() {
        let t = parse_front("b1 d1").unwrap().trace().unwrap();
        assert!(classical_invariants(&t, 2).is_err());
    }

    #[test]
    fn tb_plus_rot_parity_is_odd_for_knots() {
        for word in ["b1 d1", "b1 b1 d2 d1", "b1 b1 x2 x2 x2 d1 d1", "b1 b2 x2 d2 d1"] {
            let f = parse_front(word).unwrap();
            let t = f.trace().unwrap();
            if t.component_count == 1 {
                let i = classical_invariants(&t, 1).unwrap();
                assert_eq!((i.tb + i.rot.abs()).rem_euclid(2), 1, "parity failed for {word}");
            }
        }
    }
}
