use std::collections::{BTreeMap, BTreeSet};

use crate::poly::LaurentPoly;
use crate::{Error, Result};

use super::DgaPresentation;

pub const DEFAULT_DEG0_CAP: usize = 24;

/// A Z/2 algebra map sending t to 1, every positive/negative degree
/// generator to 0, and the listed degree-0 generators to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub ones: BTreeSet<usize>,
}

impl Augmentation {
    pub fn eval(&self, g: usize) -> bool {
        self.ones.contains(&g)
    }
}

pub fn augmentations(dga: &DgaPresentation) -> Result<Vec<Augmentation>> {
    augmentations_capped(dga, DEFAULT_DEG0_CAP)
}

/// Exhaustive search over assignments on degree-0 generators.
pub fn augmentations_capped(dga: &DgaPresentation, max_deg0: usize) -> Result<Vec<Augmentation>> {
    let deg0 = dga.degree_zero_generators();
    let k = deg0.len();
    if k > max_deg0 {
        return Err(Error::Unsupported(format!(
            "{k} degree-0 generators exceeds the search cap {max_deg0}"
        )));
    }
    let mut bit = vec![None::<usize>; dga.generators.len()];
    for (b, &g) in deg0.iter().enumerate() {
        bit[g] = Some(b);
    }
    // only generators of degree 1 can have degree-0 differentials
    let todo: Vec<&super::NcSum> = (0..dga.generators.len())
        .filter(|&g| dga.reduce_degree(dga.generators[g].degree - 1) == 0)
        .map(|g| &dga.differential[g])
        .collect();

    let admits = |mask: u64| -> bool {
        todo.iter().all(|sum| {
            let mut parity = false;
            'words: for w in sum.iter() {
                for &l in &w.letters {
                    match bit[l] {
                        Some(b) if mask >> b & 1 == 1 => {}
                        _ => continue 'words,
                    }
                }
                parity = !parity;
            }
            !parity
        })
    };

    let survivors: Vec<u64> = {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..1u64 << k).into_par_iter().filter(|&m| admits(m)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..1u64 << k).filter(|&m| admits(m)).collect()
        }
    };
    Ok(survivors
        .into_iter()
        .map(|mask| Augmentation {
            ones: deg0
                .iter()
                .enumerate()
                .filter(|&(b, _)| mask >> b & 1 == 1)
                .map(|(_, &g)| g)
                .collect(),
        })
        .collect())
}

/// Poincaré polynomial of the homology of the linearized differential
/// obtained by conjugating with the augmentation.
pub fn linearized_homology(dga: &DgaPresentation, aug: &Augmentation) -> Result<LaurentPoly> {
    let n = dga.generators.len();
    // d1[g] = set of generators appearing linearly in the conjugated d(g)
    let mut d1: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for g in 0..n {
        for w in &dga.differential[g] {
            for (j, &l) in w.letters.iter().enumerate() {
                let others = w
                    .letters
                    .iter()
                    .enumerate()
                    .all(|(i, &m)| i == j || aug.eval(m));
                if others && !d1[g].remove(&l) {
                    d1[g].insert(l);
                }
            }
        }
    }

    let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for g in 0..n {
        by_degree.entry(dga.generators[g].degree).or_default().push(g);
    }

    // rank of the boundary map restricted to generators of degree d
    let rank_from = |d: i64| -> usize {
        let cols = match by_degree.get(&d) {
            Some(c) => c,
            None => return 0,
        };
        let mut rows: Vec<Vec<bool>> = cols
            .iter()
            .map(|&g| (0..n).map(|h| d1[g].contains(&h)).collect())
            .collect();
        let mut rank = 0;
        for c in 0..n {
            if let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) {
                rows.swap(rank, p);
                let pivot = rows[rank].clone();
                for (r, row) in rows.iter_mut().enumerate() {
                    if r != rank && row[c] {
                        for (a, &b) in row.iter_mut().zip(&pivot) {
                            *a ^= b;
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    };

    let mut poly = LaurentPoly::zero();
    for (&d, gens) in &by_degree {
        let above = dga.reduce_degree(d + 1);
        let dim = gens.len() as i64 - rank_from(d) as i64 - rank_from(above) as i64;
        if dim < 0 {
            return Err(Error::Unsupported(
                "internal error: linearized differential does not square to zero".into(),
            ));
        }
        if dim > 0 {
            poly.add_term(d, dim);
        }
    }
    Ok(poly)
}
