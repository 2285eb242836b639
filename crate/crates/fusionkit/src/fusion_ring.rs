//! Fusion rings: based rings with unit, duality and nonnegative integer
//! structure constants.
//!
//! A `FusionRing` is validated on construction: unit laws, duality,
//! Frobenius reciprocity and full associativity are checked exactly, and a
//! witness triple is reported when associativity fails. Frobenius-Perron
//! dimensions are found by power iteration but never trusted as floats: when
//! the ring is integral the candidate dimensions are certified by the exact
//! eigenvector identity before being reported.

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Error)]
pub enum FusionError {
    #[error("rank must be positive")]
    EmptyBasis,
    #[error("tensor length {got} does not match rank^3 = {want}")]
    TensorShape { got: usize, want: usize },
    #[error("labels must be distinct")]
    DuplicateLabels,
    #[error("unit index {0} out of range")]
    BadUnit(usize),
    #[error("dual map is not an involution")]
    DualNotInvolution,
    #[error("unit law fails at ({x}, {y})")]
    UnitLaw { x: usize, y: usize },
    #[error("duality fails at ({x}, {y}): n(x, y, unit) must be 1 exactly when y = dual(x)")]
    Duality { x: usize, y: usize },
    #[error("Frobenius reciprocity fails at ({x}, {y}, {z})")]
    Frobenius { x: usize, y: usize, z: usize },
    #[error("not associative: (x{x} x{y}) x{z} != x{x} (x{y} x{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("basis subset is not closed under products and duals")]
    NotClosed,
    #[error("Perron eigenvector iteration did not converge")]
    PerronDivergence,
    #[error("ring is not integral")]
    NotIntegral,
    #[error("decomposition check failed: {0}")]
    Decomposition(String),
}

/// Provenance of a ring that was built from a concrete finite group or group
/// datum, carried so later verdicts can cite the construction.
#[derive(Clone, Debug)]
pub struct GroupRealization {
    pub description: String,
    pub order: usize,
    /// Whether the source group is solvable; a category realized from a
    /// solvable group through any of the constructors here is solvable.
    pub is_solvable: bool,
}

/// Frobenius-Perron dimension data. `dims` are the converged floats; when
/// every dimension is an exact integer the `integral` field holds the
/// certified values. `residual` bounds how far the float vector is from
/// satisfying the ring-homomorphism property.
#[derive(Clone, Debug)]
pub struct FpData {
    pub dims: Vec<f64>,
    pub global_dim: f64,
    pub residual: f64,
    pub integral: Option<IntegralDims>,
}

impl FpData {
    pub fn is_integral(&self) -> bool {
        self.integral.is_some()
    }
}

#[derive(Clone, Debug)]
pub struct IntegralDims {
    pub dims: Vec<u64>,
    pub total: u64,
    /// Sorted set of distinct dimensions (the "degrees" of the ring).
    pub degree_set: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct FusionRing {
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    rank: usize,
    tensor: Vec<u32>,
    realization: Option<GroupRealization>,
}

impl FusionRing {
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        tensor: Vec<u32>,
    ) -> Result<Self, FusionError> {
        Self::new_with_realization(labels, unit, dual, tensor, None)
    }

    pub fn new_with_realization(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        tensor: Vec<u32>,
        realization: Option<GroupRealization>,
    ) -> Result<Self, FusionError> {
        let rank = labels.len();
        if rank == 0 {
            return Err(FusionError::EmptyBasis);
        }
        if tensor.len() != rank * rank * rank {
            return Err(FusionError::TensorShape { got: tensor.len(), want: rank * rank * rank });
        }
        if labels.iter().collect::<BTreeSet<_>>().len() != rank {
            return Err(FusionError::DuplicateLabels);
        }
        if unit >= rank {
            return Err(FusionError::BadUnit(unit));
        }
        if dual.len() != rank
            || dual.iter().any(|&d| d >= rank)
            || (0..rank).any(|x| dual[dual[x]] != x)
        {
            return Err(FusionError::DualNotInvolution);
        }
        let ring = FusionRing { labels, unit, dual, rank, tensor, realization };
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<(), FusionError> {
        let k = self.rank;
        let u = self.unit;
        for x in 0..k {
            for y in 0..k {
                let left_ok = (0..k).all(|z| self.n(u, x, z) == u32::from(z == x));
                let right_ok = (0..k).all(|z| self.n(x, u, z) == u32::from(z == x));
                if !left_ok || !right_ok {
                    return Err(FusionError::UnitLaw { x, y });
                }
                if self.n(x, y, u) != u32::from(y == self.dual[x]) {
                    return Err(FusionError::Duality { x, y });
                }
            }
        }
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    let t = self.n(x, y, z);
                    if t != self.n(self.dual[x], z, y) || t != self.n(z, self.dual[y], x) {
                        return Err(FusionError::Frobenius { x, y, z });
                    }
                }
            }
        }
        // Associativity through left-multiplication matrices, sparsely:
        // for each pair (x, y) the matrix of "multiply by x y" computed two
        // ways must agree. Row-sparse products keep group rings near-linear.
        let sparse: Vec<Vec<(usize, i64)>> = (0..k * k)
            .map(|xy| {
                (0..k)
                    .filter_map(|z| {
                        let v = self.tensor[xy * k + z];
                        (v != 0).then_some((z, v as i64))
                    })
                    .collect()
            })
            .collect();
        let mut buf = vec![0i64; k * k];
        for x in 0..k {
            for y in 0..k {
                buf.iter_mut().for_each(|v| *v = 0);
                for z in 0..k {
                    for &(v, nyzv) in &sparse[y * k + z] {
                        for &(w, nxvw) in &sparse[x * k + v] {
                            buf[z * k + w] += nyzv * nxvw;
                        }
                    }
                }
                for &(v, nxyv) in &sparse[x * k + y] {
                    for z in 0..k {
                        for &(w, nvzw) in &sparse[v * k + z] {
                            buf[z * k + w] -= nxyv * nvzw;
                        }
                    }
                }
                if let Some(bad) = buf.iter().position(|&v| v != 0) {
                    return Err(FusionError::NotAssociative { x, y, z: bad / k });
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, x: usize) -> usize {
        self.dual[x]
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Structure constant: multiplicity of z in the product x y.
    pub fn n(&self, x: usize, y: usize, z: usize) -> u32 {
        self.tensor[(x * self.rank + y) * self.rank + z]
    }

    pub fn tensor(&self) -> &[u32] {
        &self.tensor
    }

    pub fn realization(&self) -> Option<&GroupRealization> {
        self.realization.as_ref()
    }

    pub fn set_realization(&mut self, r: GroupRealization) {
        self.realization = Some(r);
    }

    /// Basis elements appearing in the product x y.
    pub fn product_support(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.rank).filter(|&z| self.n(x, y, z) != 0).collect()
    }

    /// x is invertible exactly when x x* is the unit alone.
    pub fn is_invertible(&self, x: usize) -> bool {
        let d = self.dual[x];
        (0..self.rank).all(|z| self.n(x, d, z) == u32::from(z == self.unit))
    }

    pub fn invertibles(&self) -> Vec<usize> {
        (0..self.rank).filter(|&x| self.is_invertible(x)).collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.invertibles().len() == self.rank
    }

    /// The group of invertibles with the mapping back to basis indices.
    pub fn invertibles_group(&self) -> (FiniteGroup, Vec<usize>) {
        let inv = self.invertibles();
        let pos: HashMap<usize, usize> = inv.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let n = inv.len();
        let mut table = vec![0u16; n * n];
        for (i, &g) in inv.iter().enumerate() {
            for (j, &h) in inv.iter().enumerate() {
                let support = self.product_support(g, h);
                assert_eq!(support.len(), 1, "invertible products are single basis elements");
                let z = support[0];
                let zi = *pos.get(&z).expect("invertibles are closed under products");
                table[i * n + j] = zi as u16;
            }
        }
        let group = FiniteGroup::new(n, table).expect("invertibles form a group");
        (group, inv)
    }

    /// Invertibles g with g x = x; equivalently the invertibles appearing in
    /// x x*, each with multiplicity one.
    pub fn stabilizing_invertibles(&self, x: usize) -> Vec<usize> {
        self.invertibles().into_iter().filter(|&g| self.n(g, x, x) == 1).collect()
    }

    /// Confirms on this ring that for every basis element x, the invertibles
    /// appearing in x x* are exactly the stabilizer of x, each once.
    pub fn stabilizer_decomposition_check(&self) -> bool {
        let inv = self.invertibles();
        (0..self.rank).all(|x| {
            let stab = self.stabilizing_invertibles(x);
            inv.iter().all(|&g| {
                let mult = self.n(x, self.dual[x], g);
                mult == u32::from(stab.contains(&g))
            })
        })
    }

    /// Smallest basis subset containing `seed` that is closed under duals
    /// and product supports, sorted.
    pub fn subring_closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.rank];
        seen[self.unit] = true;
        let mut queue: Vec<usize> = vec![self.unit];
        for &s in seed {
            if !seen[s] {
                seen[s] = true;
                queue.push(s);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let d = self.dual[x];
            if !seen[d] {
                seen[d] = true;
                queue.push(d);
            }
            // Multiply against everything discovered so far; any pair is
            // covered when its later member is popped.
            for i in 0..queue.len() {
                let y = queue[i];
                for z in self.product_support(x, y).into_iter().chain(self.product_support(y, x)) {
                    if !seen[z] {
                        seen[z] = true;
                        queue.push(z);
                    }
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    /// Basis of the adjoint subring: generated by all x x*.
    pub fn adjoint_support(&self) -> Vec<usize> {
        let mut seed = BTreeSet::new();
        for x in 0..self.rank {
            for z in self.product_support(x, self.dual[x]) {
                seed.insert(z);
            }
        }
        let seed: Vec<usize> = seed.into_iter().collect();
        self.subring_closure(&seed)
    }

    /// Restriction to a basis subset, which must be closed under unit, duals
    /// and product supports. Indices keep their relative order.
    pub fn restrict(&self, indices: &[usize]) -> Result<FusionRing, FusionError> {
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        if !set.contains(&self.unit) {
            return Err(FusionError::NotClosed);
        }
        for &x in &set {
            if !set.contains(&self.dual[x]) {
                return Err(FusionError::NotClosed);
            }
            for &y in &set {
                if self.product_support(x, y).iter().any(|z| !set.contains(z)) {
                    return Err(FusionError::NotClosed);
                }
            }
        }
        let idx: Vec<usize> = set.into_iter().collect();
        let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let k = idx.len();
        let mut tensor = vec![0u32; k * k * k];
        for (a, &x) in idx.iter().enumerate() {
            for (b, &y) in idx.iter().enumerate() {
                for (c, &z) in idx.iter().enumerate() {
                    tensor[(a * k + b) * k + c] = self.n(x, y, z);
                }
            }
        }
        FusionRing::new(
            idx.iter().map(|&x| self.labels[x].clone()).collect(),
            pos[&self.unit],
            idx.iter().map(|&x| pos[&self.dual[x]]).collect(),
            tensor,
        )
    }

    /// Frobenius-Perron dimensions: the unique positive common eigenvector,
    /// normalized at the unit, with exact certification when integral.
    pub fn fp_dims(&self) -> Result<FpData, FusionError> {
        let k = self.rank;
        // a[y][z] = sum_x n(x, y, z); strictly positive, so power iteration
        // on the all-ones start converges to the Perron direction.
        let mut a = vec![0f64; k * k];
        for x in 0..k {
            for y in 0..k {
                for z in 0..k {
                    a[y * k + z] += self.n(x, y, z) as f64;
                }
            }
        }
        let mut v = vec![1f64; k];
        let mut next = vec![0f64; k];
        let mut converged = false;
        for _ in 0..100_000 {
            for y in 0..k {
                next[y] = (0..k).map(|z| a[y * k + z] * v[z]).sum();
            }
            let norm = next.iter().cloned().fold(0f64, f64::max);
            next.iter_mut().for_each(|x| *x /= norm);
            let delta = v.iter().zip(&next).map(|(p, q)| (p - q).abs()).fold(0f64, f64::max);
            std::mem::swap(&mut v, &mut next);
            if delta < 1e-12 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(FusionError::PerronDivergence);
        }
        let dims: Vec<f64> = v.iter().map(|&x| x / v[self.unit]).collect();
        let global_dim: f64 = dims.iter().map(|d| d * d).sum();
        // Residual of the homomorphism property at the converged vector.
        let mut residual = 0f64;
        for x in 0..k {
            for y in 0..k {
                let lhs: f64 = (0..k).map(|z| self.n(x, y, z) as f64 * dims[z]).sum();
                residual = residual.max((lhs - dims[x] * dims[y]).abs());
            }
        }

        let candidates: Vec<u64> = dims.iter().map(|d| d.round().max(1.0) as u64).collect();
        let near = dims.iter().zip(&candidates).all(|(d, &c)| (d - c as f64).abs() < 1e-6);
        let integral = (near && self.certify_integer_dims(&candidates)).then(|| {
            let mut degree_set: Vec<u64> = candidates.clone();
            degree_set.sort_unstable();
            degree_set.dedup();
            IntegralDims {
                total: candidates.iter().map(|&d| d * d).sum(),
                dims: candidates,
                degree_set,
            }
        });
        Ok(FpData { dims, global_dim, residual, integral })
    }

    /// Sorted set of distinct dimensions. Exact integers when certified,
    /// rounded floats (deduplicated at 1e-6) otherwise.
    pub fn cd_set(&self) -> Result<Vec<f64>, FusionError> {
        let fp = self.fp_dims()?;
        // Certified integer dimensions give the degree set exactly.
        if let Some(integral) = &fp.integral {
            return Ok(integral.degree_set.iter().map(|&d| d as f64).collect());
        }
        let mut dims = fp.dims;
        dims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        dims.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
        Ok(dims)
    }

    /// The algebra type (1, n; d_1, n_1; ...): dimensions with
    /// multiplicities, ascending. Refuses non-integral rings.
    pub fn algebra_type(&self) -> Result<Vec<(u64, usize)>, FusionError> {
        let fp = self.fp_dims()?;
        let integral = fp.integral.ok_or(FusionError::NotIntegral)?;
        let mut counts: std::collections::BTreeMap<u64, usize> = Default::default();
        for &d in &integral.dims {
            *counts.entry(d).or_default() += 1;
        }
        Ok(counts.into_iter().collect())
    }

    /// Exact check that `d` is a common eigenvector: for all x, y,
    /// sum_z n(x, y, z) d[z] = d[x] d[y]. Positivity makes it the unique
    /// Frobenius-Perron character.
    fn certify_integer_dims(&self, d: &[u64]) -> bool {
        let k = self.rank;
        (0..k).all(|x| {
            (0..k).all(|y| {
                let lhs: u128 =
                    (0..k).map(|z| self.n(x, y, z) as u128 * d[z] as u128).sum();
                lhs == d[x] as u128 * d[y] as u128
            })
        })
    }

    /// When the ring is integral with degree set {1, d}, checks that d
    /// divides |G[x]| for every non-invertible x and divides the number of
    /// invertibles. Returns None when the degree set has another shape.
    pub fn one_d_divisibility(&self) -> Option<OneDReport> {
        let fp = self.fp_dims().ok()?;
        let integral = fp.integral?;
        if integral.degree_set.len() != 2 || integral.degree_set[0] != 1 {
            return None;
        }
        let d = integral.degree_set[1];
        let invertible_count = self.invertibles().len() as u64;
        let mut stabilizer_ok = true;
        for x in 0..self.rank {
            if integral.dims[x] == d {
                let stab = self.stabilizing_invertibles(x).len() as u64;
                if stab % d != 0 {
                    stabilizer_ok = false;
                }
            }
        }
        Some(OneDReport {
            d,
            invertible_count,
            divides_invertibles: invertible_count % d == 0,
            divides_stabilizers: stabilizer_ok,
        })
    }

    /// Decomposition of x x* for one basis element x, on integral rings with
    /// degree set {1, d}: every invertible constituent has multiplicity one
    /// and lies in G[x], d divides |G[x]| and d divides the number of
    /// invertibles. Vacuously fine for invertible x.
    pub fn xxstar_check(&self, x: usize) -> Result<(), FusionError> {
        let fp = self.fp_dims()?;
        let integral = fp.integral.ok_or(FusionError::NotIntegral)?;
        if integral.degree_set.len() != 2 || integral.degree_set[0] != 1 {
            return Err(FusionError::Decomposition(
                "degree set is not of the form {1, d}".into(),
            ));
        }
        if self.is_invertible(x) {
            return Ok(());
        }
        let d = integral.degree_set[1];
        let stab = self.stabilizing_invertibles(x);
        for g in self.invertibles() {
            let mult = self.n(x, self.dual[x], g);
            let expected = u32::from(stab.contains(&g));
            if mult != expected {
                return Err(FusionError::Decomposition(format!(
                    "invertible {g} appears in x{x} (x{x})* with multiplicity {mult}, expected {expected}"
                )));
            }
        }
        if stab.len() as u64 % d != 0 {
            return Err(FusionError::Decomposition(format!(
                "d = {d} does not divide |G[x{x}]| = {}",
                stab.len()
            )));
        }
        if self.invertibles().len() as u64 % d != 0 {
            return Err(FusionError::Decomposition(format!(
                "d = {d} does not divide the invertible count {}",
                self.invertibles().len()
            )));
        }
        Ok(())
    }

    /// Subring generated by a basis subset, with the embedding back into
    /// this ring's indices.
    pub fn subring_generated(&self, seed: &[usize]) -> (FusionRing, Vec<usize>) {
        let basis = self.subring_closure(seed);
        let sub = self.restrict(&basis).expect("closures are closed");
        (sub, basis)
    }

    /// Subring generated by all x x*.
    pub fn adjoint_subring(&self) -> (FusionRing, Vec<usize>) {
        let basis = self.adjoint_support();
        let sub = self.restrict(&basis).expect("the adjoint support is closed");
        (sub, basis)
    }

    /// Maximal pointed subring: the invertibles.
    pub fn pointed_subring(&self) -> (FusionRing, Vec<usize>) {
        let basis = self.invertibles();
        let sub = self.restrict(&basis).expect("invertibles are closed");
        (sub, basis)
    }
}

/// Arithmetic form of the equivariantization dimension identity:
/// dim X = deg(pi) * index * dim Y.
pub fn extension_dim_formula_check(dx: u64, deg_pi: u64, index: u64, dy: u64) -> bool {
    dx == deg_pi * index * dy
}

/// Divisibility facts for rings whose degrees are exactly {1, d}.
#[derive(Clone, Debug)]
pub struct OneDReport {
    pub d: u64,
    pub invertible_count: u64,
    pub divides_invertibles: bool,
    pub divides_stabilizers: bool,
}

/// The based ring of a finite group: basis = elements, products from the
/// multiplication table. Every dimension is 1.
pub fn pointed_fusion_ring(group: &FiniteGroup) -> FusionRing {
    let n = group.order();
    let mut tensor = vec![0u32; n * n * n];
    for x in 0..n as u16 {
        for y in 0..n as u16 {
            let z = group.mul(x, y) as usize;
            tensor[(x as usize * n + y as usize) * n + z] = 1;
        }
    }
    let series = crate::group::structural_series(group);
    let name = group.name().map(str::to_owned).unwrap_or_else(|| format!("order-{n} group"));
    FusionRing::new_with_realization(
        (0..n).map(|i| format!("g{i}")).collect(),
        group.identity() as usize,
        (0..n).map(|i| group.inv(i as u16) as usize).collect(),
        tensor,
        Some(GroupRealization {
            description: format!("pointed ring of {name}"),
            order: n,
            is_solvable: series.is_solvable,
        }),
    )
    .expect("group rings satisfy the fusion axioms")
}
