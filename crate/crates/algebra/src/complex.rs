//! Stanley-Reisner complexes of squarefree monomial ideals and reduced
//! simplicial homology of induced subcomplexes over the rationals.
//!
//! Vertex sets are `u32` bitmasks over the ground set (variable indices).

use crate::error::{check_cap, Error, Result};
use crate::initial::InitialIdeal;
use crate::linalg::{rank, SparseRow};

pub const MAX_GROUND: usize = 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: usize,
    /// Inclusion-minimal, sorted by size then mask.
    pub min_nonfaces: Vec<u32>,
}

impl SimplicialComplex {
    pub fn from_nonfaces(vertices: usize, nonfaces: impl IntoIterator<Item = u32>) -> Self {
        assert!(vertices <= MAX_GROUND);
        let mut all: Vec<u32> = nonfaces.into_iter().collect();
        all.sort_by_key(|&m| (m.count_ones(), m));
        all.dedup();
        let mut min: Vec<u32> = Vec::new();
        for m in all {
            if !min.iter().any(|&k| k & !m == 0) {
                min.push(m);
            }
        }
        SimplicialComplex {
            vertices,
            min_nonfaces: min,
        }
    }

    /// Complex whose minimal non-faces are the generator supports.
    pub fn stanley_reisner(ideal: &InitialIdeal) -> Result<Self> {
        if !ideal.squarefree {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.vars.count();
        check_cap("ground set size", n, MAX_GROUND)?;
        Ok(Self::from_nonfaces(n, ideal.generators.iter().map(|m| m.support())))
    }

    pub fn ground(&self) -> u32 {
        if self.vertices == 32 {
            u32::MAX
        } else {
            (1u32 << self.vertices) - 1
        }
    }

    pub fn is_face(&self, set: u32) -> bool {
        set & !self.ground() == 0 && !self.min_nonfaces.iter().any(|&k| k & !set == 0)
    }

    pub fn nonfaces_within(&self, w: u32) -> impl Iterator<Item = u32> + '_ {
        self.min_nonfaces.iter().copied().filter(move |&k| k & !w == 0)
    }

    /// Faces of the induced subcomplex on `w`, grouped by size `0..=max_size`, each group sorted.
    pub fn faces_within(&self, w: u32, max_size: usize) -> Vec<Vec<u32>> {
        let nonfaces: Vec<u32> = self.nonfaces_within(w).collect();
        let mut out: Vec<Vec<u32>> = vec![vec![0]];
        for s in 1..=max_size {
            let mut next = Vec::new();
            for &f in &out[s - 1] {
                let above = if f == 0 { w } else { w & !((1u32 << (31 - f.leading_zeros())) << 1).wrapping_sub(1) };
                let mut rest = above;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    let g = f | bit;
                    if !nonfaces.iter().any(|&k| k & bit != 0 && k & !g == 0) {
                        next.push(g);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            out.push(next);
        }
        out
    }
}

/// Rank of the boundary map from faces of size `s` to faces of size `s - 1`.
fn boundary_rank(faces: &[Vec<u32>], s: usize) -> usize {
    if s == 0 || s >= faces.len() {
        return 0;
    }
    let lower = &faces[s - 1];
    let rows: Vec<SparseRow> = faces[s]
        .iter()
        .map(|&f| {
            let mut row = Vec::with_capacity(s);
            let mut rest = f;
            let mut i = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let col = lower.binary_search(&(f & !bit)).expect("faces are closed under subsets");
                row.push((col as u32, if i % 2 == 0 { 1 } else { -1 }));
                i += 1;
            }
            row.sort_unstable_by_key(|e| e.0);
            row
        })
        .collect();
    rank(&rows)
}

fn face_count(faces: &[Vec<u32>], s: usize) -> usize {
    faces.get(s).map_or(0, Vec::len)
}

/// Reduced Betti number in dimension `j >= -1` of the subcomplex induced on `w`.
pub fn reduced_betti(c: &SimplicialComplex, w: u32, j: i32) -> usize {
    let s = (j + 1) as usize;
    let faces = c.faces_within(w, s + 1);
    face_count(&faces, s) - boundary_rank(&faces, s) - boundary_rank(&faces, s + 1)
}

/// Nonzero reduced Betti numbers `(dimension, rank)` of the subcomplex induced on `w`.
pub fn reduced_homology_ranks(c: &SimplicialComplex, w: u32, cap: usize) -> Result<Vec<(i32, usize)>> {
    check_cap("subset size (homology)", w.count_ones() as usize, cap)?;
    let faces = c.faces_within(w, w.count_ones() as usize);
    let ranks: Vec<usize> = (0..=faces.len()).map(|s| boundary_rank(&faces, s)).collect();
    Ok((0..faces.len())
        .map(|s| (s as i32 - 1, face_count(&faces, s) - ranks[s] - ranks[s + 1]))
        .filter(|&(_, b)| b > 0)
        .collect())
}

/// Reduced Euler characteristic `sum (-1)^d f_d` over `d >= -1`.
pub fn reduced_euler_characteristic(c: &SimplicialComplex, w: u32) -> i64 {
    c.faces_within(w, w.count_ones() as usize)
        .iter()
        .enumerate()
        .map(|(s, fs)| if s % 2 == 1 { fs.len() as i64 } else { -(fs.len() as i64) })
        .sum()
}
