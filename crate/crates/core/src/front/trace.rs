use crate::front::diagram::{Event, FrontDiagram};
use crate::{Error, Result};

/// A maximal strand segment between two cusps. Arcs persist through
/// crossings; they are created by a Birth and destroyed by a Death.
#[derive(Debug, Clone)]
pub struct Arc {
    pub component: usize,
    /// Direction of traversal: true = eastward (increasing x).
    pub east: bool,
    /// 1-based event indices of the cusps bounding this arc.
    pub birth_event: usize,
    pub death_event: usize,
    /// Whether this arc is the upper strand at its birth / death cusp.
    pub upper_at_birth: bool,
    pub upper_at_death: bool,
}

/// Per-event strand bookkeeping, arc ids are indices into `Trace::arcs`.
#[derive(Debug, Clone, Copy)]
pub enum EventTrace {
    Birth { upper: usize, lower: usize },
    Death { upper: usize, lower: usize },
    /// `over` descended from slot i to i+1 (the lesser-slope strand).
    Cross { over: usize, under: usize },
}

/// Full strand tracing of a valid front: slot occupancy at every slice,
/// arc/component structure, orientations.
#[derive(Debug, Clone)]
pub struct Trace {
    /// slices[k] = arc ids occupying slots 1.. after the first k events.
    pub slices: Vec<Vec<usize>>,
    pub arcs: Vec<Arc>,
    pub event_trace: Vec<EventTrace>,
    pub component_count: usize,
    /// 1-based event index of each component's leftmost Birth.
    pub leftmost_birth: Vec<usize>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[rb] = ra;
        }
    }
}

impl Trace {
    pub fn build(front: &FrontDiagram) -> Result<Self> {
        let mut slots: Vec<usize> = Vec::new();
        let mut arcs: Vec<Arc> = Vec::new();
        let mut event_trace = Vec::with_capacity(front.events.len());
        let mut slices = Vec::with_capacity(front.events.len() + 1);
        slices.push(Vec::new());

        let new_arc = |ev: usize, upper: bool, arcs: &mut Vec<Arc>| -> usize {
            arcs.push(Arc {
                component: 0,
                east: true,
                birth_event: ev,
                death_event: 0,
                upper_at_birth: upper,
                upper_at_death: false,
            });
            arcs.len() - 1
        };

        for (k, ev) in front.events.iter().enumerate() {
            let idx = k + 1;
            match *ev {
                Event::Birth(i) => {
                    if i == 0 || i > slots.len() + 1 {
                        return Err(Error::Semantic {
                            index: idx,
                            msg: format!("birth at slot {i} with {} strands", slots.len()),
                        });
                    }
                    let u = new_arc(idx, true, &mut arcs);
                    let l = new_arc(idx, false, &mut arcs);
                    slots.insert(i - 1, u);
                    slots.insert(i, l);
                    event_trace.push(EventTrace::Birth { upper: u, lower: l });
                }
                Event::Death(i) => {
                    if i == 0 || i + 1 > slots.len() {
                        return Err(Error::Semantic {
                            index: idx,
                            msg: format!("death at slot {i} with {} strands", slots.len()),
                        });
                    }
                    let u = slots[i - 1];
                    let l = slots[i];
                    arcs[u].death_event = idx;
                    arcs[u].upper_at_death = true;
                    arcs[l].death_event = idx;
                    slots.drain(i - 1..=i);
                    event_trace.push(EventTrace::Death { upper: u, lower: l });
                }
                Event::Cross(i) => {
                    if i == 0 || i + 1 > slots.len() {
                        return Err(Error::Semantic {
                            index: idx,
                            msg: format!("crossing at slot {i} with {} strands", slots.len()),
                        });
                    }
                    let over = slots[i - 1];
                    let under = slots[i];
                    slots.swap(i - 1, i);
                    event_trace.push(EventTrace::Cross { over, under });
                }
            }
            slices.push(slots.clone());
        }

        if !slots.is_empty() {
            return Err(Error::Semantic {
                index: front.events.len(),
                msg: format!("front does not close: {} strands remain", slots.len()),
            });
        }

        // components: arcs joined at cusps
        let mut dsu = Dsu((0..arcs.len()).collect());
        for et in &event_trace {
            match *et {
                EventTrace::Birth { upper, lower } | EventTrace::Death { upper, lower } => {
                    dsu.union(upper, lower)
                }
                EventTrace::Cross { .. } => {}
            }
        }
        let mut comp_of_root = std::collections::HashMap::new();
        let mut leftmost_birth = Vec::new();
        for (k, et) in event_trace.iter().enumerate() {
            if let EventTrace::Birth { upper, .. } = *et {
                let r = dsu.find(upper);
                comp_of_root.entry(r).or_insert_with(|| {
                    leftmost_birth.push(k + 1);
                    leftmost_birth.len()
                });
            }
        }
        for a in 0..arcs.len() {
            let r = dsu.find(a);
            arcs[a].component = comp_of_root[&r];
        }
        let component_count = leftmost_birth.len();

        // orientations: cusp partners travel in opposite directions.
        // Anchor each component at its leftmost Birth's upper arc.
        let mut assigned = vec![false; arcs.len()];
        // partner lists: each arc meets exactly two cusps
        let mut partners: Vec<Vec<usize>> = vec![Vec::new(); arcs.len()];
        for et in &event_trace {
            if let EventTrace::Birth { upper, lower } | EventTrace::Death { upper, lower } = *et {
                partners[upper].push(lower);
                partners[lower].push(upper);
            }
        }
        for c in 1..=component_count {
            let b = leftmost_birth[c - 1];
            let anchor = match event_trace[b - 1] {
                EventTrace::Birth { upper, .. } => upper,
                _ => unreachable!(),
            };
            let east = !front.flipped.contains(&c);
            let mut stack = vec![(anchor, east)];
            while let Some((a, dir)) = stack.pop() {
                if assigned[a] {
                    debug_assert_eq!(arcs[a].east, dir, "inconsistent cusp orientation");
                    continue;
                }
                assigned[a] = true;
                arcs[a].east = dir;
                for &p in &partners[a] {
                    stack.push((p, !dir));
                }
            }
        }

        Ok(Trace {
            slices,
            arcs,
            event_trace,
            component_count,
            leftmost_birth,
        })
    }

    /// Sign of the crossing at the given 1-based event index: +1 when the
    /// two strands are traversed in the same direction.
    pub fn crossing_sign(&self, event_index: usize) -> i64 {
        match self.event_trace[event_index - 1] {
            EventTrace::Cross { over, under } => {
                if self.arcs[over].east == self.arcs[under].east {
                    1
                } else {
                    -1
                }
            }
            _ => panic!("event {event_index} is not a crossing"),
        }
    }

    /// Total signed crossing count of the diagram (all components).
    pub fn writhe(&self) -> i64 {
        (1..=self.event_trace.len())
            .filter(|&k| matches!(self.event_trace[k - 1], EventTrace::Cross { .. }))
            .map(|k| self.crossing_sign(k))
            .sum()
    }

    pub fn max_strands(&self) -> usize {
        self.slices.iter().map(Vec::len).max().unwrap_or(0)
    }
}
