use std::collections::{BTreeMap, BTreeSet};

use crate::front::trace::Trace;
use crate::{Error, Result};

/// One event of a plat-position front, read left to right.
/// Slots are 1-based with slot 1 topmost.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum Event {
    /// Left cusp: inserts two new strands at slots i, i+1.
    Birth(usize),
    /// Right cusp: removes the strands at slots i, i+1.
    Death(usize),
    /// Crossing: transposes the strands at slots i, i+1. The strand
    /// descending from slot i to i+1 is the over-strand.
    Cross(usize),
}

impl Event {
    pub fn slot(&self) -> usize {
        match *self {
            Event::Birth(i) | Event::Death(i) | Event::Cross(i) => i,
        }
    }

    pub fn token(&self) -> String {
        match *self {
            Event::Birth(i) => format!("b{i}"),
            Event::Death(i) => format!("d{i}"),
            Event::Cross(i) => format!("x{i}"),
        }
    }
}

/// Component role inside Kirby diagrams. Plain fronts are all black.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Role {
    Black,
    Red,
}

/// A closed front in plat position. Components are numbered 1.. in
/// order of their leftmost Birth. `flipped` holds components whose
/// orientation is reversed relative to the default (upper strand of the
/// leftmost Birth directed rightward).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontDiagram {
    pub events: Vec<Event>,
    pub flipped: BTreeSet<usize>,
    pub red: BTreeSet<usize>,
}

impl FrontDiagram {
    /// Validate the event word and build a diagram with default
    /// orientations and roles.
    pub fn from_events(events: Vec<Event>) -> Result<Self> {
        let d = FrontDiagram { events, flipped: BTreeSet::new(), red: BTreeSet::new() };
        d.trace()?;
        Ok(d)
    }

    pub fn with_orientation(mut self, flipped: BTreeSet<usize>, red: BTreeSet<usize>) -> Result<Self> {
        let n = self.trace()?.component_count;
        for &c in flipped.iter().chain(red.iter()) {
            if c == 0 || c > n {
                return Err(Error::Semantic {
                    index: 0,
                    msg: format!("component c{c} does not exist (front has {n})"),
                });
            }
        }
        self.flipped = flipped;
        self.red = red;
        Ok(self)
    }

    /// The bare event word, e.g. "b1 d1".
    pub fn word(&self) -> String {
        self.events.iter().map(Event::token).collect::<Vec<_>>().join(" ")
    }

    pub fn trace(&self) -> Result<Trace> {
        Trace::build(self)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, Event::Cross(_))).count()
    }

    pub fn role(&self, component: usize) -> Role {
        if self.red.contains(&component) { Role::Red } else { Role::Black }
    }

    /// Role/orientation maps keyed by component id, defaults omitted.
    pub fn orientation_entries(&self) -> BTreeMap<usize, bool> {
        self.flipped.iter().map(|&c| (c, true)).collect()
    }
}
