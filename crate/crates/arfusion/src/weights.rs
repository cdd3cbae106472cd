//! Level-`k` integrable highest weights of `A_r` and the combinatorial maps
//! on them: enumeration, ality, the simple current `J` and conjugation `C`,
//! partition labels, fixed points, rank-level transpose and fixed-point
//! truncation.

use alloc::vec;
use alloc::vec::Vec;

use crate::{CapacityLimits, Error, Result};

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

/// The pair `(r, k)` together with the derived quantities `r̄ = r + 1` and
/// `k̄ = k + r + 1` that parameterize everything else in the crate.
///
/// Rank 0 is allowed: it is the trivial algebra produced by truncating a
/// fixed point all the way down, with a single weight per level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct AlgebraSpec {
    r: u32,
    k: u32,
}

impl AlgebraSpec {
    pub fn new(r: u32, k: u32) -> Self {
        AlgebraSpec { r, k }
    }

    pub fn rank(&self) -> u32 {
        self.r
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    /// `r̄ = r + 1`.
    pub fn rbar(&self) -> u32 {
        self.r + 1
    }

    /// `k̄ = k + r + 1`; the dual Coxeter number of `A_r` is `r + 1`.
    pub fn kbar(&self) -> u32 {
        self.k + self.r + 1
    }

    /// `r̄ · k̄`, the root-of-unity order of the fusion eigenvalues.
    pub fn rbar_kbar(&self) -> u64 {
        u64::from(self.rbar()) * u64::from(self.kbar())
    }

    /// `binomial(r + k, r)`, the number of weights in `P_+`.
    pub fn weight_count(&self) -> u128 {
        binomial(u128::from(self.r) + u128::from(self.k), u128::from(self.r))
    }

    fn check_capacity(&self, limits: &CapacityLimits) -> Result<()> {
        let needed = self.weight_count();
        if needed > u128::from(limits.max_weights) {
            return Err(Error::Capacity {
                needed,
                limit: u128::from(limits.max_weights),
            });
        }
        Ok(())
    }
}

fn binomial(n: u128, mut r: u128) -> u128 {
    if r > n {
        return 0;
    }
    if r > n - r {
        r = n - r;
    }
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A level-`k` integrable highest weight of `A_r`, stored as the full tuple
/// of `r̄` Dynkin labels `(λ_0, λ_1, …, λ_r)` including the affine label.
/// The level is the label sum; the rank is implicit in the tuple length.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Weight {
    labels: Vec<u32>,
}

impl Weight {
    /// Builds a weight from its full label tuple. The tuple must be
    /// nonempty; any nonnegative labels are a valid weight of the algebra
    /// they imply.
    pub fn new(labels: Vec<u32>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidArgument(
                "a weight needs at least one Dynkin label".into(),
            ));
        }
        Ok(Weight { labels })
    }

    /// The vacuum `k·w^0` of `A_r` at level `k`.
    pub fn vacuum(spec: AlgebraSpec) -> Self {
        let mut labels = vec![0; spec.rbar() as usize];
        labels[0] = spec.level();
        Weight { labels }
    }

    /// The fundamental weight `w^i` padded to level `k` (slot 0 absorbs the
    /// rest). `i = 0` gives the vacuum.
    pub fn fundamental(spec: AlgebraSpec, i: u32) -> Result<Self> {
        if i > spec.rank() {
            return Err(Error::InvalidArgument("fundamental index exceeds rank".into()));
        }
        if i == 0 {
            return Ok(Self::vacuum(spec));
        }
        if spec.level() == 0 {
            return Err(Error::InvalidArgument("level 0 has only the vacuum".into()));
        }
        let mut labels = vec![0u32; spec.rbar() as usize];
        labels[i as usize] = 1;
        labels[0] = spec.level() - 1;
        Ok(Weight { labels })
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn rbar(&self) -> u32 {
        self.labels.len() as u32
    }

    pub fn rank(&self) -> u32 {
        self.rbar() - 1
    }

    pub fn level(&self) -> u32 {
        self.labels.iter().sum()
    }

    pub fn spec(&self) -> AlgebraSpec {
        AlgebraSpec::new(self.rank(), self.level())
    }

    pub fn is_vacuum(&self) -> bool {
        self.labels[1..].iter().all(|&l| l == 0)
    }

    /// `t(λ) = Σ_{j=1..r} j·λ_j` as a plain integer (not reduced mod `r̄`).
    pub fn t_full(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .map(|(j, &l)| j as u64 * u64::from(l))
            .sum()
    }

    /// The `r̄`-ality `t(λ) mod r̄`.
    pub fn ality(&self) -> u32 {
        (self.t_full() % u64::from(self.rbar())) as u32
    }

    /// `t(λ + ρ) = Σ_{j=1..r} j·(λ_j + 1)`, the shifted ality entering the
    /// eigenvalue phase.
    pub fn t_rho(&self) -> u64 {
        let r = self.rank() as u64;
        self.t_full() + r * (r + 1) / 2
    }

    /// Simple current: `J` rotates the label tuple so that slot `i`
    /// receives slot `i − a (mod r̄)`; `J^{r̄}` is the identity.
    pub fn apply_j(&self, a: i64) -> Weight {
        let n = self.labels.len() as i64;
        let shift = a.rem_euclid(n);
        let mut labels = vec![0u32; self.labels.len()];
        for (i, slot) in labels.iter_mut().enumerate() {
            let src = (i as i64 - shift).rem_euclid(n) as usize;
            *slot = self.labels[src];
        }
        Weight { labels }
    }

    /// Conjugation: reverses labels `1..r`, keeping slot 0.
    pub fn apply_c(&self) -> Weight {
        let n = self.labels.len();
        let mut labels = vec![0u32; n];
        labels[0] = self.labels[0];
        for i in 1..n {
            labels[i] = self.labels[n - i];
        }
        Weight { labels }
    }

    /// The smallest `d ≥ 1` with `J^d λ = λ`, i.e. the period of the label
    /// tuple. Always divides `r̄`; the weight is a fixed point iff the
    /// period is a proper divisor.
    pub fn fixed_point_order(&self) -> u32 {
        let n = self.labels.len() as u32;
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let d = d as usize;
            if (0..self.labels.len()).all(|i| self.labels[i] == self.labels[i % d]) {
                return d as u32;
            }
        }
        n
    }

    pub fn is_fixed_point(&self) -> bool {
        self.fixed_point_order() < self.rbar()
    }

    /// Ality and fixed-point period bundled together.
    pub fn orbit_info(&self) -> OrbitInfo {
        OrbitInfo {
            ality: self.ality(),
            fixed_order: self.fixed_point_order(),
        }
    }

    /// The distinct simple-current translates `{J^a λ}`; its length equals
    /// `fixed_point_order`.
    pub fn j_orbit(&self) -> Vec<Weight> {
        (0..self.fixed_point_order() as i64)
            .map(|a| self.apply_j(a))
            .collect()
    }

    /// Partition shape of the weight: row `i` has `Σ_{j=i..r} λ_j` boxes,
    /// trailing zero rows trimmed.
    pub fn shape(&self) -> Vec<u32> {
        let mut rows = Vec::with_capacity(self.labels.len() - 1);
        let mut acc = 0u32;
        for &l in self.labels[1..].iter().rev() {
            acc += l;
            rows.push(acc);
        }
        rows.reverse();
        while rows.last() == Some(&0) {
            rows.pop();
        }
        rows
    }

    /// The strictly decreasing labels `λ(ℓ) = Σ_{j=ℓ..r} (λ_j + 1)` for
    /// `ℓ = 1..r̄` (the last entry is the empty sum 0).
    pub fn partition_labels(&self) -> PartitionLabels {
        let n = self.labels.len();
        let mut values = vec![0u32; n];
        let mut acc = 0u32;
        for ell in (1..n).rev() {
            acc += self.labels[ell] + 1;
            values[ell - 1] = acc;
        }
        PartitionLabels { values }
    }
}

/// Information attached to a weight's simple-current orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct OrbitInfo {
    /// `t(λ) mod r̄`.
    pub ality: u32,
    /// Smallest `d ≥ 1` with `J^d λ = λ`.
    pub fixed_order: u32,
}

/// The strictly decreasing tuple `λ(1) > λ(2) > … > λ(r̄) = 0` with
/// `λ(ℓ) − λ(ℓ+1) = λ_ℓ + 1` and `λ(1) ≤ k̄ − 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct PartitionLabels {
    values: Vec<u32>,
}

impl PartitionLabels {
    /// Validates strict decrease and the trailing zero.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty partition labels".into()));
        }
        if *values.last().unwrap() != 0 {
            return Err(Error::InvalidArgument(
                "partition labels must end in 0".into(),
            ));
        }
        if !values.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument(
                "partition labels must be strictly decreasing".into(),
            ));
        }
        Ok(PartitionLabels { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Reconstructs the weight at the given level: `λ_ℓ = λ(ℓ) − λ(ℓ+1) − 1`
    /// for `ℓ = 1..r`, and `λ_0 = k + r − λ(1)`. The labels alone do not
    /// determine `λ_0`, so the level is part of the input; it must satisfy
    /// `λ(1) ≤ k + r`.
    pub fn to_weight(&self, level: u32) -> Result<Weight> {
        let n = self.values.len();
        let r = n as u32 - 1;
        if self.values[0] > level + r {
            return Err(Error::InvalidArgument(
                "partition labels exceed the bound kbar - 1".into(),
            ));
        }
        let mut labels = vec![0u32; n];
        for ell in 1..n {
            labels[ell] = self.values[ell - 1] - self.values[ell] - 1;
        }
        labels[0] = level + r - self.values[0];
        Ok(Weight { labels })
    }
}

/// Enumerates `P_+^{r,k}` in lexicographic order on `(λ_1, …, λ_r)`.
/// This order is part of the external contract: indices into cached tables
/// depend on it. The vacuum is always index 0.
pub fn enumerate(spec: AlgebraSpec, limits: &CapacityLimits) -> Result<Vec<Weight>> {
    spec.check_capacity(limits)?;
    let rbar = spec.rbar() as usize;
    let k = spec.level();
    let mut out = Vec::with_capacity(spec.weight_count() as usize);
    let mut labels = vec![0u32; rbar];
    fn rec(labels: &mut Vec<u32>, slot: usize, remaining: u32, out: &mut Vec<Weight>) {
        if slot == labels.len() {
            let mut w = labels.clone();
            w[0] = remaining;
            out.push(Weight { labels: w });
            return;
        }
        for v in 0..=remaining {
            labels[slot] = v;
            rec(labels, slot + 1, remaining - v, out);
        }
        labels[slot] = 0;
    }
    if rbar == 1 {
        out.push(Weight { labels: vec![k] });
    } else {
        rec(&mut labels, 1, k, &mut out);
    }
    Ok(out)
}

/// Rank-level transpose `τ: P_+^{r,k} → P_+^{k−1, r+1}`: transpose the
/// Young diagram and delete the columns of length `k` that appear in the
/// transposed diagram before re-reading Dynkin labels.
pub fn tau_dual(lambda: &Weight) -> Result<Weight> {
    let k = lambda.level();
    if k == 0 {
        return Err(Error::InvalidArgument(
            "rank-level transpose needs level >= 1".into(),
        ));
    }
    let rows = lambda.shape();
    // Transposed diagram as k rows (some zero): T_c = #{i : rows_i >= c}.
    let mut t = vec![0u32; k as usize];
    for (c, slot) in t.iter_mut().enumerate() {
        *slot = rows.iter().filter(|&&r| r > c as u32).count() as u32;
    }
    // Full columns of the transposed diagram have length k; deleting them
    // subtracts T_k from every row.
    let full = t[k as usize - 1];
    for v in t.iter_mut() {
        *v -= full;
    }
    let mut labels = vec![0u32; k as usize];
    for j in 1..k as usize {
        labels[j] = t[j - 1] - t[j];
    }
    let new_level = lambda.rank() + 1;
    labels[0] = new_level - t[0];
    Ok(Weight { labels })
}

/// Truncates a `J^d`-fixed weight to `(φ_0, …, φ_{d−1})`, a weight of
/// `A_{d−1}` at level `k·d/r̄`.
pub fn truncate_fixed_point(phi: &Weight, d: u32) -> Result<Weight> {
    let rbar = phi.rbar();
    let k = phi.level();
    if d == 0 || rbar % d != 0 {
        return Err(Error::InvalidArgument("d must divide rbar".into()));
    }
    if k % (rbar / d) != 0 {
        return Err(Error::InvalidArgument("rbar/d must divide the level".into()));
    }
    if d % phi.fixed_point_order() != 0 {
        return Err(Error::InvalidArgument("weight is not fixed by J^d".into()));
    }
    Ok(Weight {
        labels: phi.labels[..d as usize].to_vec(),
    })
}

/// All weights of `P_+^{r,k}` fixed by `J^d` (period dividing `d`),
/// enumerated by tiling `P_+^{d−1, kd/r̄}` rather than filtering `P_+`.
/// Empty unless `d | r̄` and `r̄/d | k`.
pub fn fixed_points_of(spec: AlgebraSpec, d: u32, limits: &CapacityLimits) -> Result<Vec<Weight>> {
    let rbar = spec.rbar();
    if d == 0 || rbar % d != 0 {
        return Err(Error::InvalidArgument("d must divide rbar".into()));
    }
    if spec.level() % (rbar / d) != 0 {
        return Ok(Vec::new());
    }
    let small = AlgebraSpec::new(d - 1, spec.level() / (rbar / d));
    let reps = enumerate(small, limits)?;
    Ok(reps
        .into_iter()
        .map(|w| {
            let mut labels = Vec::with_capacity(rbar as usize);
            for i in 0..rbar as usize {
                labels.push(w.labels[i % d as usize]);
            }
            Weight { labels }
        })
        .collect())
}

/// The canonical `J^d`-fixed point `(kd/r̄)·Σ_i w^{di}` whose truncation is
/// the vacuum of the truncated algebra.
pub fn canonical_fixed_point(spec: AlgebraSpec, d: u32) -> Result<Weight> {
    let rbar = spec.rbar();
    if d == 0 || rbar % d != 0 || spec.level() % (rbar / d) != 0 {
        return Err(Error::InvalidArgument(
            "J^d-fixed points need d | rbar and rbar/d | k".into(),
        ));
    }
    let part = spec.level() / (rbar / d);
    let mut labels = vec![0u32; rbar as usize];
    for i in (0..rbar as usize).step_by(d as usize) {
        labels[i] = part;
    }
    Ok(Weight { labels })
}
