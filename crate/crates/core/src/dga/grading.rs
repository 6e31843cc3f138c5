use crate::front::diagram::FrontDiagram;
use crate::front::trace::{EventTrace, Trace};
use crate::{Error, Result};

/// Maslov potential per arc: at every cusp the upper arc's potential
/// exceeds the lower arc's by one. Well defined over Z when rot = 0 and
/// over Z/2|rot| otherwise; `modulus` is 2|rot| (0 for integers).
pub fn maslov_potentials(front: &FrontDiagram, trace: &Trace, modulus: i64) -> Result<Vec<i64>> {
    let n = trace.arcs.len();
    // (partner arc, my potential minus partner's)
    let mut edges: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for et in &trace.event_trace {
        if let EventTrace::Birth { upper, lower } | EventTrace::Death { upper, lower } = *et {
            edges[upper].push((lower, 1));
            edges[lower].push((upper, -1));
        }
    }
    let mut pot = vec![None::<i64>; n];
    for c in 1..=trace.component_count {
        let b = trace.leftmost_birth[c - 1];
        let anchor = match trace.event_trace[b - 1] {
            EventTrace::Birth { upper, .. } => upper,
            _ => unreachable!(),
        };
        let mut stack = vec![(anchor, 0i64)];
        while let Some((a, v)) = stack.pop() {
            if let Some(prev) = pot[a] {
                let diff = prev - v;
                let ok = if modulus == 0 { diff == 0 } else { diff.rem_euclid(modulus) == 0 };
                if !ok {
                    return Err(Error::Unsupported(format!(
                        "internal error: Maslov potential mismatch {} vs {} mod {} on front {}",
                        prev,
                        v,
                        modulus,
                        front.word()
                    )));
                }
                continue;
            }
            pot[a] = Some(v);
            for &(p, delta) in &edges[a] {
                stack.push((p, v - delta));
            }
        }
    }
    Ok(pot.into_iter().map(|p| p.unwrap()).collect())
}
