//! Nilpotent representations of the cyclic quiver `0 → 1 → ⋯ → e-1 → 0`.

use crate::error::{Error, Result};
use crate::hall::linalg::{self, Field, Matrix, Rationals};
use crate::multiseg::{DimVector, Multisegment, Residue, Segment};

/// Graded spaces `V_i = F^{d_i}` with arrows `A_i : V_i → V_{i+1}`.
#[derive(Debug, Clone)]
pub struct QuiverRep<F: Field> {
    field: F,
    dims: DimVector,
    /// `arrows[i]` is a `d_{i+1} × d_i` matrix.
    arrows: Vec<Matrix<F::E>>,
}

impl<F: Field> QuiverRep<F> {
    /// Checks shapes and nilpotency.
    pub fn new(field: F, dims: DimVector, arrows: Vec<Matrix<F::E>>) -> Result<Self> {
        let e = dims.e() as usize;
        if arrows.len() != e {
            return Err(Error::InconsistentRanks(format!("expected {e} arrows, got {}", arrows.len())));
        }
        for (i, a) in arrows.iter().enumerate() {
            let (rows, cols) = (dims.0[(i + 1) % e] as usize, dims.0[i] as usize);
            if a.len() != rows || a.iter().any(|r| r.len() != cols) {
                return Err(Error::InconsistentRanks(format!("arrow {i} is not {rows} x {cols}")));
            }
        }
        let rep = QuiverRep { field, dims, arrows };
        let n = rep.total_dim();
        if (0..e).any(|i| !linalg::is_zero_matrix(&rep.field, &rep.composite(i, n))) {
            return Err(Error::InconsistentRanks("representation is not nilpotent".into()));
        }
        Ok(rep)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn e(&self) -> u32 {
        self.dims.e()
    }

    pub fn dims(&self) -> &DimVector {
        &self.dims
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims.0[i % self.e() as usize] as usize
    }

    pub fn total_dim(&self) -> u32 {
        self.dims.total()
    }

    pub fn arrow(&self, i: usize) -> &Matrix<F::E> {
        &self.arrows[i]
    }

    /// The `k`-fold composite `V_i → V_{i+k}` (`k = 0` gives the identity).
    pub fn composite(&self, i: usize, k: u32) -> Matrix<F::E> {
        let e = self.e() as usize;
        let f = &self.field;
        let mut m = linalg::identity(f, self.dim(i));
        for t in 0..k as usize {
            let src = (i + t) % e;
            m = linalg::mat_mul(f, &self.arrows[src], &m, self.dim(i));
        }
        m
    }

    /// `r(i, k) = rank(V_i → V_{i+k})` for `0 <= k <= total dimension`.
    pub fn rank_invariants(&self) -> RankTable {
        let n = self.total_dim();
        let e = self.e();
        let r = (0..e as usize)
            .map(|i| (0..=n).map(|k| linalg::rank(&self.field, &self.composite(i, k)) as u32).collect())
            .collect();
        RankTable { e, r }
    }

    pub fn classify(&self) -> Result<Multisegment> {
        self.rank_invariants().classify()
    }

    /// `g · X · g^{-1}` for invertible `g = (g_i)`.
    pub fn conjugate(&self, g: &[Matrix<F::E>]) -> Result<Self> {
        let e = self.e() as usize;
        let f = &self.field;
        let mut arrows = Vec::with_capacity(e);
        for i in 0..e {
            let gi_inv = linalg::inverse(f, &g[i])
                .ok_or_else(|| Error::Internal(format!("g_{i} is not invertible")))?;
            let a = linalg::mat_mul(f, &self.arrows[i], &gi_inv, self.dim(i));
            arrows.push(linalg::mat_mul(f, &g[(i + 1) % e], &a, self.dim(i)));
        }
        QuiverRep::new(f.clone(), self.dims.clone(), arrows)
    }

    /// Dimension of the space of graded maps commuting with the arrows.
    pub fn dim_end(&self) -> usize {
        let e = self.e() as usize;
        let f = &self.field;
        // unknowns: entries of X_i (d_i × d_i), row-major, concatenated
        let offs: Vec<usize> = (0..e)
            .scan(0, |acc, i| {
                let o = *acc;
                *acc += self.dim(i) * self.dim(i);
                Some(o)
            })
            .collect();
        let nvars: usize = (0..e).map(|i| self.dim(i) * self.dim(i)).sum();
        let mut rows: Matrix<F::E> = Vec::new();
        // A_i X_i - X_{i+1} A_i = 0, entry (r, c) with r < d_{i+1}, c < d_i
        for i in 0..e {
            let j = (i + 1) % e;
            let (di, dj) = (self.dim(i), self.dim(j));
            let a = &self.arrows[i];
            for r in 0..dj {
                for c in 0..di {
                    let mut row = vec![f.zero(); nvars];
                    for t in 0..di {
                        // (A_i X_i)[r][c] = Σ_t A[r][t] X_i[t][c]
                        let idx = offs[i] + t * di + c;
                        row[idx] = f.add(&row[idx], &a[r][t]);
                    }
                    for t in 0..dj {
                        // (X_j A_i)[r][c] = Σ_t X_j[r][t] A[t][c]
                        let idx = offs[j] + r * dj + t;
                        row[idx] = f.sub(&row[idx], &a[t][c]);
                    }
                    rows.push(row);
                }
            }
        }
        nvars - linalg::rank(f, &rows)
    }
}

/// Index of each basis vector of `M_ψ`: basis vectors of `V_i` are the
/// positions of residue `i` in the segments, listed segment by segment.
fn basis_positions(psi: &Multisegment) -> Vec<Vec<(usize, u32)>> {
    let e = psi.e();
    let mut out = vec![Vec::new(); e as usize];
    for (s, seg) in expanded(psi).iter().enumerate() {
        for (t, res) in seg.residues(e).enumerate() {
            out[res.value() as usize].push((s, t as u32));
        }
    }
    out
}

fn expanded(psi: &Multisegment) -> Vec<Segment> {
    psi.iter().flat_map(|(s, m)| std::iter::repeat_n(*s, m as usize)).collect()
}

/// `M_ψ`: the direct sum of uniserial modules, each arrow sending a position
/// of a segment to the next one and the last position to zero.
pub fn build_rep<F: Field>(psi: &Multisegment, field: F) -> QuiverRep<F> {
    let e = psi.e() as usize;
    let segs = expanded(psi);
    let pos = basis_positions(psi);
    let mut arrows = Vec::with_capacity(e);
    for i in 0..e {
        let j = (i + 1) % e;
        let mut a = linalg::zeros(&field, pos[j].len(), pos[i].len());
        for (c, &(s, t)) in pos[i].iter().enumerate() {
            if t + 1 < segs[s].len() {
                let r = pos[j].iter().position(|&x| x == (s, t + 1)).expect("next position exists");
                a[r][c] = field.one();
            }
        }
        arrows.push(a);
    }
    QuiverRep::new(field, psi.weight(), arrows).expect("uniserial sums are nilpotent")
}

/// Rank table `r(i, k)`, `0 <= k < r[i].len()`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankTable {
    pub e: u32,
    pub r: Vec<Vec<u32>>,
}

impl RankTable {
    /// The table of `M_ψ` computed from the segments, up to `k = n`.
    pub fn of_multisegment(psi: &Multisegment, n: u32) -> RankTable {
        let e = psi.e();
        let mut r = vec![vec![0u32; n as usize + 1]; e as usize];
        for (seg, m) in psi.iter() {
            for t in 0..seg.len() {
                let i = seg.head().shift(t as i64, e).value() as usize;
                // position t maps nonzero under k arrows iff t + k < len
                for k in 0..=n.min(seg.len() - 1 - t) {
                    r[i][k as usize] += m;
                }
            }
        }
        RankTable { e, r }
    }

    pub fn depth(&self) -> u32 {
        self.r.first().map_or(0, |x| x.len() as u32 - 1)
    }

    pub fn get(&self, i: usize, k: u32) -> u32 {
        self.r[i % self.e as usize].get(k as usize).copied().unwrap_or(0)
    }

    /// Pointwise `self >= a + b`.
    pub fn dominates_sum(&self, a: &RankTable, b: &RankTable) -> bool {
        (0..self.e as usize).all(|i| (0..=self.depth()).all(|k| self.get(i, k) >= a.get(i, k) + b.get(i, k)))
    }

    /// The multisegment with this rank table.
    ///
    /// With `c(j, L) = r(j, L-1) - r(j, L)` counting segments of length at
    /// least `L` whose tail is `j + L - 1`, the multiplicity of `[j; L]` is
    /// `c(j, L) - c(j-1, L+1)`.
    pub fn classify(&self) -> Result<Multisegment> {
        let e = self.e;
        let n = self.depth();
        let c = |j: i64, l: u32| -> i64 {
            let j = Residue::new(j, e).value() as usize;
            self.get(j, l - 1) as i64 - self.get(j, l) as i64
        };
        let mut psi = Multisegment::empty(e);
        for l in 1..=n {
            for j in 0..e as i64 {
                let m = c(j, l) - c(j - 1, l + 1);
                if m < 0 {
                    return Err(Error::InconsistentRanks(format!("negative multiplicity for [{j};{l}]")));
                }
                if m > 0 {
                    psi.insert(Segment::with_head(Residue::new(j, e), l), m as u32);
                }
            }
        }
        if RankTable::of_multisegment(&psi, n) != *self {
            return Err(Error::InconsistentRanks("table is not the rank table of a nilpotent representation".into()));
        }
        Ok(psi)
    }
}

/// `dim O_ψ = Σ d_i^2 - dim End(M_ψ)`, with the endomorphisms computed over `Q`.
pub fn dim_orbit(psi: &Multisegment) -> u32 {
    let rep = build_rep(psi, Rationals);
    let sq: usize = psi.weight().0.iter().map(|&d| (d * d) as usize).sum();
    (sq - rep.dim_end()) as u32
}
