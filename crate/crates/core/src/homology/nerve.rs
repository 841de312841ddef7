use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::order::OrderComplex;
use crate::error::{Error, Result};
use crate::hom::MultiHom;

/// A cell as a bitset over `(v, x)`, indexed `v * width + x`.
struct Coder {
    count: usize,
    width: usize,
}

impl Coder {
    fn encode(&self, c: &MultiHom) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(self.count * self.width);
        for (v, s) in c.sets().iter().enumerate() {
            for &x in s {
                b.insert(v * self.width + x as usize);
            }
        }
        b
    }

    /// Every coordinate is nonempty.
    fn is_cell(&self, b: &FixedBitSet) -> bool {
        let words = b.as_slice();
        (0..self.count).all(|v| {
            let (lo, hi) = (v * self.width, (v + 1) * self.width);
            let (wlo, whi) = (lo / 32, (hi - 1) / 32);
            (wlo..=whi).any(|w| {
                let mut word = words[w];
                if w == wlo {
                    word &= !0u32 << (lo % 32);
                }
                if w == whi && hi % 32 != 0 {
                    word &= !0u32 >> (32 - hi % 32);
                }
                word != 0
            })
        })
    }
}

/// A small simplicial model of a Hom complex built from its maximal cells.
///
/// The closed maximal cells cover the complex and every nonempty
/// intersection of them is a closed cell, hence contractible. The nerve of
/// the cover is therefore homotopy equivalent to the complex, and so is the
/// order complex of the poset of all such intersections, which is what gets
/// built here. It is usually far smaller than the face poset of the complex.
///
/// `cells` must be the maximal cells of one complex; `cap` bounds both the
/// poset and its chains.
pub fn meet_complex(cells: &[MultiHom], cap: usize) -> Result<OrderComplex> {
    let limit = || Error::ResourceLimit {
        what: "maximal cell meets",
        limit: cap as u64,
    };
    let coder = Coder {
        count: cells.first().map_or(0, |c| c.sets().len()),
        width: cells
            .iter()
            .flat_map(|c| c.sets().iter().flatten())
            .max()
            .map_or(1, |&x| x as usize + 1),
    };
    let base: Vec<FixedBitSet> = cells.iter().map(|c| coder.encode(c)).collect();
    let n = base.len();
    let meets = |a: &FixedBitSet, b: &FixedBitSet| {
        let mut m = a.clone();
        m.intersect_with(b);
        coder.is_cell(&m).then_some(m)
    };
    let near: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && meets(&base[i], &base[j]).is_some()).collect())
        .collect();

    // closure under intersection; an element below base cell `p` can only
    // meet the cells that meet `p`
    let mut seen: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut poset: Vec<(FixedBitSet, usize)> = Vec::new();
    for (i, b) in base.iter().enumerate() {
        if seen.insert(b.clone(), poset.len()).is_none() {
            poset.push((b.clone(), i));
        }
    }
    let mut next = 0;
    while next < poset.len() {
        let (elt, parent) = poset[next].clone();
        next += 1;
        for &j in &near[parent] {
            if let Some(m) = meets(&elt, &base[j]) {
                if !seen.contains_key(&m) {
                    if poset.len() >= cap {
                        return Err(limit());
                    }
                    seen.insert(m.clone(), poset.len());
                    poset.push((m, parent));
                }
            }
        }
    }
    drop(seen);

    // order by size so that everything below an element precedes it
    poset.sort_by(|a, b| a.0.count_ones(..).cmp(&b.0.count_ones(..)).then_with(|| a.0.as_slice().cmp(b.0.as_slice())));
    let sizes: Vec<usize> = poset.iter().map(|(b, _)| b.count_ones(..)).collect();
    let mut inside: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (k, (b, _)) in poset.iter().enumerate() {
        for (i, c) in base.iter().enumerate() {
            if b.is_subset(c) {
                inside[i].push(k as u32);
            }
        }
    }
    let faces: Vec<Vec<u32>> = poset
        .iter()
        .enumerate()
        .map(|(k, (b, parent))| {
            inside[*parent]
                .iter()
                .copied()
                .filter(|&j| sizes[j as usize] < sizes[k] && poset[j as usize].0.is_subset(b))
                .collect()
        })
        .collect();
    OrderComplex::from_strict_faces(&faces, cap)
}
