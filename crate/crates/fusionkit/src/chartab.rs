//! Exact character tables of finite groups.
//!
//! The table is found modulo a prime q = 1 (mod exp(G)) with q > |G|: the
//! class-sum matrices are simultaneously diagonalized over GF(q), degrees are
//! recovered from the orthogonality relations, and each value is lifted to an
//! exact cyclotomic integer through its eigenvalue multiplicities. Every
//! lifted table is certified before it is returned: degrees divide the group
//! order, squares sum to the order, and row orthogonality is checked in exact
//! cyclotomic arithmetic, never in floating point.
//!
//! The same machinery produces the representation fusion ring (structure
//! constants are computed mod q, then proven exact class by class) and the
//! irreducible degrees of the Drinfeld double.

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::fusion_ring::{FusionRing, GroupRealization};
use crate::group::{structural_series, Elem, FiniteGroup};

#[derive(Debug, Error)]
pub enum ChartabError {
    #[error("group order {order} exceeds cap {cap}")]
    CapExceeded { order: usize, cap: usize },
}

/// A conjugacy class: smallest member as representative, sorted elements.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Elem,
    pub elements: Vec<Elem>,
}

/// An exact character table.
pub struct CharacterTable {
    pub group: Arc<FiniteGroup>,
    pub classes: Vec<ConjugacyClass>,
    /// Irreducible degrees; trivial character first, then ascending degree.
    pub degrees: Vec<u64>,
    /// `values[i][c]`: value of character i on class c, exact.
    pub values: Vec<Vec<Cyclotomic>>,
    /// Exponent of the group: the cyclotomic order of all values.
    pub exponent: u32,
    /// The working prime.
    pub modulus: u64,
    modular: Vec<Vec<u64>>,
    class_map: Vec<usize>,
    inv_class: Vec<usize>,
}

impl CharacterTable {
    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.elements.len()).collect()
    }

    /// Index of the conjugacy class containing `g`.
    pub fn class_of(&self, g: crate::group::Elem) -> usize {
        self.class_map[g as usize]
    }

    /// Index of the trivial character (always 0 by construction).
    pub fn trivial_character(&self) -> usize {
        0
    }

    /// The character of the conjugate (dual) representation.
    pub fn dual_character(&self, i: usize) -> usize {
        let row: Vec<u64> =
            (0..self.rank()).map(|c| self.modular[i][self.inv_class[c]]).collect();
        let j = (0..self.rank())
            .find(|&j| self.modular[j] == row)
            .expect("dual character must exist");
        // Exact confirmation: conjugating every value lands on row j.
        for c in 0..self.rank() {
            assert_eq!(
                self.values[i][c].conj().coeffs(),
                self.values[j][c].coeffs(),
                "dual character values must be exact conjugates"
            );
        }
        j
    }
}

// ---------------------------------------------------------------------------
// GF(q) arithmetic
// ---------------------------------------------------------------------------

fn mod_pow(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % q;
        }
        base = base * base % q;
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, q: u64) -> u64 {
    mod_pow(a, q - 2, q)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest prime q = 1 (mod m) with q > max(order, 2*sqrt(order)), and a
/// fixed primitive m-th root of unity in GF(q).
fn choose_field(order: usize, m: u32) -> (u64, u64) {
    let mut bound = order as u64;
    let isqrt = (order as f64).sqrt().ceil() as u64;
    bound = bound.max(2 * isqrt).max(2);
    let m64 = m as u64;
    let mut q = (bound / m64 + 1) * m64 + 1;
    while !is_prime(q) {
        q += m64;
    }
    // Smallest primitive root of GF(q), then its (q-1)/m-th power.
    let factors = prime_factors(q - 1);
    let gamma = (2..q)
        .find(|&g| factors.iter().all(|&p| mod_pow(g, (q - 1) / p, q) != 1))
        .expect("GF(q) has a primitive root");
    let z = mod_pow(gamma, (q - 1) / m64, q);
    (q, z)
}

// ---------------------------------------------------------------------------
// Linear algebra over GF(q)
// ---------------------------------------------------------------------------

/// Reduced row echelon form; returns pivot columns.
fn rref(rows: &mut Vec<Vec<u64>>, q: u64) -> Vec<usize> {
    let ncols = if rows.is_empty() { 0 } else { rows[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = mod_inv(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let sub = f * rows[r][j] % q;
                    rows[i][j] = (rows[i][j] + q - sub) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Kernel basis of a square matrix (row-major) over GF(q).
fn kernel_basis(mat: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let d = mat.len();
    let mut rows: Vec<Vec<u64>> = mat.to_vec();
    let pivots = rref(&mut rows, q);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..d {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; d];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot row r: x_pc + sum coeffs * free vars = 0.
            v[pc] = (q - rows[r][free] % q) % q;
        }
        basis.push(v);
    }
    basis
}

/// Characteristic polynomial over GF(q), ascending coefficients, monic.
/// Hessenberg reduction followed by the leading-minor recurrence.
fn charpoly(mat: &[Vec<u64>], q: u64) -> Vec<u64> {
    let d = mat.len();
    let mut h: Vec<Vec<u64>> = mat.to_vec();
    for j in 0..d.saturating_sub(2) {
        let Some(pr) = (j + 1..d).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if pr != j + 1 {
            h.swap(pr, j + 1);
            for row in h.iter_mut() {
                row.swap(pr, j + 1);
            }
        }
        let inv = mod_inv(h[j + 1][j], q);
        for i in j + 2..d {
            let f = h[i][j] * inv % q;
            if f == 0 {
                continue;
            }
            for c in 0..d {
                let sub = f * h[j + 1][c] % q;
                h[i][c] = (h[i][c] + q - sub) % q;
            }
            for r in 0..d {
                h[r][j + 1] = (h[r][j + 1] + f * h[r][i]) % q;
            }
        }
    }
    // p_k(x) = (x - h[k-1][k-1]) p_{k-1}
    //          - sum_i h[k-1-i][k-1] * (prod of subdiagonals) * p_{k-1-i}.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=d {
        let mut poly = poly_shift_scale(&polys[k - 1], h[k - 1][k - 1], q);
        let mut subdiag = 1u64;
        for i in 1..k {
            subdiag = subdiag * h[k - i][k - i - 1] % q;
            if subdiag == 0 {
                break;
            }
            let coeff = h[k - 1 - i][k - 1] * subdiag % q;
            if coeff == 0 {
                continue;
            }
            for (t, &c) in polys[k - 1 - i].iter().enumerate() {
                let sub = coeff * c % q;
                poly[t] = (poly[t] + q - sub) % q;
            }
        }
        polys.push(poly);
    }
    polys.pop().unwrap()
}

/// (x - a) * p over GF(q).
fn poly_shift_scale(p: &[u64], a: u64, q: u64) -> Vec<u64> {
    let mut out = vec![0u64; p.len() + 1];
    for (i, &c) in p.iter().enumerate() {
        out[i + 1] = (out[i + 1] + c) % q;
        let sub = a * c % q;
        out[i] = (out[i] + q - sub) % q;
    }
    out
}

fn poly_roots(p: &[u64], q: u64) -> Vec<u64> {
    let mut roots = Vec::new();
    for x in 0..q {
        let mut acc = 0u64;
        for &c in p.iter().rev() {
            acc = (acc * x + c) % q;
        }
        if acc == 0 {
            roots.push(x);
        }
    }
    roots
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

// ---------------------------------------------------------------------------
// Dixon's method
// ---------------------------------------------------------------------------

/// Character table with the default order cap and seed 0.
pub fn character_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable, ChartabError> {
    character_table_with(group, crate::DEFAULT_GROUP_ORDER_CAP, 0)
}

/// Character table with explicit cap and seed. The seed only permutes the
/// order in which class-sum matrices are used for eigenspace splitting; the
/// returned table is canonical and identical for every seed.
pub fn character_table_with(
    group: &Arc<FiniteGroup>,
    cap: usize,
    seed: u64,
) -> Result<CharacterTable, ChartabError> {
    let n = group.order();
    if n > cap {
        return Err(ChartabError::CapExceeded { order: n, cap });
    }
    let raw_classes = group.conjugacy_classes();
    let k = raw_classes.len();
    let class_map = group.class_map(&raw_classes);
    let m = group.exponent() as u32;
    let (q, z) = choose_field(n, m);

    // Class multiplication constants a[i][j][t] = #{(u,v) in C_i x C_j : uv = g_t}.
    let reps: Vec<Elem> = raw_classes.iter().map(|c| c[0]).collect();
    let mut mats: Vec<Vec<Vec<u64>>> = vec![vec![vec![0u64; k]; k]; k];
    for (t, &gt) in reps.iter().enumerate() {
        for x in group.elements() {
            let i = class_map[x as usize];
            let j = class_map[group.mul(group.inv(x), gt) as usize];
            mats[i][j][t] += 1;
        }
    }

    // Simultaneous eigenvectors by repeated eigenspace splitting.
    let mut order: Vec<usize> = (1..k).collect();
    let mut state = seed.wrapping_add(0x6a09e667f3bcc909);
    for i in (1..order.len()).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    let full: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut row = vec![0u64; k];
            row[i] = 1;
            row
        })
        .collect();
    let mut subspaces: Vec<(Vec<Vec<u64>>, Vec<usize>)> = vec![(full, (0..k).collect())];
    for &mi in &order {
        if subspaces.iter().all(|(b, _)| b.len() == 1) {
            break;
        }
        let mat = &mats[mi];
        let mut next = Vec::new();
        for (basis, pivots) in subspaces {
            if basis.len() == 1 {
                next.push((basis, pivots));
                continue;
            }
            let d = basis.len();
            // Restriction: image of each basis vector expressed in the basis.
            let mut restr = vec![vec![0u64; d]; d];
            for (r, b) in basis.iter().enumerate() {
                let mut w: Vec<u64> = (0..k)
                    .map(|row| {
                        let mut acc = 0u128;
                        for t in 0..k {
                            acc += mat[row][t] as u128 * b[t] as u128;
                        }
                        (acc % q as u128) as u64
                    })
                    .collect();
                for (c, &pc) in pivots.iter().enumerate() {
                    let coeff = w[pc];
                    restr[r][c] = coeff;
                    if coeff != 0 {
                        for t in 0..k {
                            let sub = coeff * basis[c][t] % q;
                            w[t] = (w[t] + q - sub) % q;
                        }
                    }
                }
                assert!(w.iter().all(|&x| x == 0), "class-sum matrix must preserve the subspace");
            }
            // Left eigenvectors: kernels of (restr^T - lambda).
            let mut tr = vec![vec![0u64; d]; d];
            for r in 0..d {
                for c in 0..d {
                    tr[c][r] = restr[r][c];
                }
            }
            let cp = charpoly(&tr, q);
            let mut covered = 0;
            for lambda in poly_roots(&cp, q) {
                let mut shifted = tr.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = (row[i] + q - lambda) % q;
                }
                let ker = kernel_basis(&shifted, q);
                if ker.is_empty() {
                    continue;
                }
                covered += ker.len();
                let mut rows: Vec<Vec<u64>> = ker
                    .iter()
                    .map(|u| {
                        let mut v = vec![0u64; k];
                        for (r, &ur) in u.iter().enumerate() {
                            if ur == 0 {
                                continue;
                            }
                            for t in 0..k {
                                v[t] = (v[t] + ur * basis[r][t]) % q;
                            }
                        }
                        v
                    })
                    .collect();
                let piv = rref(&mut rows, q);
                next.push((rows, piv));
            }
            assert_eq!(covered, d, "class-sum restriction must be diagonalizable");
        }
        subspaces = next;
    }
    assert!(
        subspaces.iter().all(|(b, _)| b.len() == 1),
        "commuting class sums must split completely"
    );

    // Central characters, normalized at the identity class.
    let omegas: Vec<Vec<u64>> = subspaces
        .into_iter()
        .map(|(basis, _)| {
            let v = &basis[0];
            assert!(v[0] != 0, "central character cannot vanish at the identity class");
            let inv = mod_inv(v[0], q);
            v.iter().map(|&x| x * inv % q).collect()
        })
        .collect();
    assert_eq!(omegas.len(), k);

    let sizes: Vec<u64> = raw_classes.iter().map(|c| c.len() as u64).collect();
    let inv_class: Vec<usize> =
        reps.iter().map(|&g| class_map[group.inv(g) as usize]).collect();

    // Degrees from sum_j |C_j|^{-1} w_j w_{j'} = |G| / d^2.
    let mut degrees = Vec::with_capacity(k);
    let mut modular = Vec::with_capacity(k);
    for w in &omegas {
        let mut s = 0u64;
        for j in 0..k {
            s = (s + w[j] * w[inv_class[j]] % q * mod_inv(sizes[j] % q, q)) % q;
        }
        let d2 = (n as u64 % q) * mod_inv(s, q) % q;
        let isqrt = (n as f64).sqrt() as u64 + 1;
        let deg = (1..=isqrt)
            .find(|&d| d * d % q == d2)
            .expect("degree must be a small square root mod q");
        let row: Vec<u64> =
            (0..k).map(|c| deg % q * w[c] % q * mod_inv(sizes[c] % q, q) % q).collect();
        degrees.push(deg);
        modular.push(row);
    }
    assert_eq!(
        degrees.iter().map(|&d| d * d).sum::<u64>(),
        n as u64,
        "degree squares must sum to the group order"
    );
    for &d in &degrees {
        assert_eq!(n as u64 % d, 0, "every degree must divide the group order");
    }

    // Exact lift: eigenvalue multiplicities per class.
    let element_orders: Vec<u64> = reps.iter().map(|&g| group.element_order(g) as u64).collect();
    let power_class: Vec<Vec<usize>> = reps
        .iter()
        .map(|&g| {
            let o = group.element_order(g);
            (0..o).map(|t| class_map[group.power(g, t) as usize]).collect()
        })
        .collect();
    let mut values: Vec<Vec<Cyclotomic>> = Vec::with_capacity(k);
    for (i, row) in modular.iter().enumerate() {
        let mut vals = Vec::with_capacity(k);
        for c in 0..k {
            let o = element_orders[c];
            let zo = mod_pow(z, m as u64 / o, q);
            let zo_inv = mod_inv(zo, q);
            let oinv = mod_inv(o % q, q);
            let mut coeffs = vec![0i64; m as usize];
            let mut total = 0u64;
            for u in 0..o {
                let mut acc = 0u64;
                let step = mod_pow(zo_inv, u, q);
                let mut w = 1u64;
                for t in 0..o {
                    acc = (acc + row[power_class[c][t as usize]] * w) % q;
                    w = w * step % q;
                }
                let mult = acc * oinv % q;
                assert!(
                    mult <= degrees[i],
                    "eigenvalue multiplicity must not exceed the degree"
                );
                total += mult;
                coeffs[(u * (m as u64 / o)) as usize] = mult as i64;
            }
            assert_eq!(total, degrees[i], "multiplicities must sum to the degree");
            vals.push(Cyclotomic::from_coeffs(m, coeffs));
        }
        values.push(vals);
    }

    // Canonical order: trivial character first, then by (degree, values).
    let trivial = (0..k)
        .find(|&i| degrees[i] == 1 && modular[i].iter().all(|&x| x == 1))
        .expect("trivial character must appear");
    let mut idx: Vec<usize> = (0..k).collect();
    let keys: Vec<Vec<Vec<i64>>> =
        values.iter().map(|row| row.iter().map(|v| v.reduced()).collect()).collect();
    idx.sort_by(|&a, &b| {
        (a != trivial, degrees[a], &keys[a]).cmp(&(b != trivial, degrees[b], &keys[b]))
    });
    let degrees: Vec<u64> = idx.iter().map(|&i| degrees[i]).collect();
    let modular: Vec<Vec<u64>> = idx.iter().map(|&i| modular[i].clone()).collect();
    let values: Vec<Vec<Cyclotomic>> = idx.iter().map(|&i| values[i].clone()).collect();

    let classes: Vec<ConjugacyClass> = raw_classes
        .iter()
        .map(|c| ConjugacyClass { representative: c[0], elements: c.clone() })
        .collect();

    let table = CharacterTable {
        group: Arc::clone(group),
        classes,
        degrees,
        values,
        exponent: m,
        modulus: q,
        modular,
        class_map,
        inv_class,
    };
    table.check_orthogonality();
    Ok(table)
}

impl CharacterTable {
    /// Exact row orthogonality: sum_c |C_c| x_i(c) conj(x_j(c)) = delta |G|.
    fn check_orthogonality(&self) {
        let k = self.rank();
        let m = self.exponent as usize;
        let n = self.group.order() as i64;
        let sizes = self.class_sizes();
        for i in 0..k {
            for j in i..k {
                let mut acc = vec![0i128; m];
                for c in 0..k {
                    let vi = self.values[i][c].coeffs();
                    let vj = self.values[j][c].coeffs();
                    let w = sizes[c] as i128;
                    for (a, &ca) in vi.iter().enumerate() {
                        if ca == 0 {
                            continue;
                        }
                        for (b, &cb) in vj.iter().enumerate() {
                            if cb == 0 {
                                continue;
                            }
                            // conj(z^b) = z^(m-b).
                            let t = (a + m - b) % m;
                            acc[t] += w * ca as i128 * cb as i128;
                        }
                    }
                }
                let coeffs: Vec<i64> =
                    acc.into_iter().map(|c| i64::try_from(c).expect("overflow")).collect();
                let total = Cyclotomic::from_coeffs(self.exponent, coeffs);
                let expected = if i == j { n } else { 0 };
                assert_eq!(
                    total.as_integer(),
                    Some(expected),
                    "exact row orthogonality failed for characters {i},{j}"
                );
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Representation fusion ring
// ---------------------------------------------------------------------------

/// The fusion ring of representations: basis indexed like the character
/// table, structure constants from tensor product decomposition. Constants
/// are computed mod q and then certified exactly: the identity
/// `x_i(c) x_j(c) = sum_l N[i][j][l] x_l(c)` is verified in cyclotomic
/// arithmetic on every class.
pub fn rep_fusion_ring(ct: &CharacterTable) -> FusionRing {
    let k = ct.rank();
    let m = ct.exponent as usize;
    let q = ct.modulus;
    let n = ct.group.order() as u64;
    let sizes = ct.class_sizes();

    let row_index: HashMap<Vec<u64>, usize> =
        ct.modular.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
    let dual: Vec<usize> = (0..k).map(|i| ct.dual_character(i)).collect();

    let mut tensor = vec![0u32; k * k * k];
    for i in 0..k {
        for j in 0..k {
            if ct.degrees[i] == 1 || ct.degrees[j] == 1 {
                // A product with an invertible factor is a single character:
                // match the modular row, then confirm the exact values by
                // shifting eigenvalue multiplicities by the invertible root.
                let (lin, other) = if ct.degrees[i] == 1 { (i, j) } else { (j, i) };
                let prod: Vec<u64> =
                    (0..k).map(|c| ct.modular[i][c] * ct.modular[j][c] % q).collect();
                let l = *row_index.get(&prod).expect("invertible twist of a character is one");
                for c in 0..k {
                    let shift = ct.values[lin][c]
                        .coeffs()
                        .iter()
                        .position(|&x| x == 1)
                        .expect("degree-one value is a single root of unity");
                    let vo = ct.values[other][c].coeffs();
                    let vl = ct.values[l][c].coeffs();
                    for (t, &x) in vo.iter().enumerate() {
                        assert_eq!(
                            vl[(t + shift) % m],
                            x,
                            "invertible product must shift multiplicities"
                        );
                    }
                }
                tensor[(i * k + j) * k + l] = 1;
            } else {
                let mut constants = vec![0u64; k];
                for l in 0..k {
                    let mut acc = 0u64;
                    for c in 0..k {
                        acc = (acc
                            + sizes[c] as u64 % q
                                * ct.modular[i][c]
                                % q
                                * ct.modular[j][c]
                                % q
                                * ct.modular[l][ct.inv_class[c]])
                            % q;
                    }
                    let val = acc * mod_inv(n % q, q) % q;
                    assert!(
                        val * ct.degrees[l] <= ct.degrees[i] * ct.degrees[j],
                        "non-integer structure constant (engine bug)"
                    );
                    constants[l] = val;
                    tensor[(i * k + j) * k + l] = val as u32;
                }
                // Exact certificate on each class.
                for c in 0..k {
                    let vi = ct.values[i][c].coeffs();
                    let vj = ct.values[j][c].coeffs();
                    let mut acc = vec![0i128; m];
                    for (a, &ca) in vi.iter().enumerate() {
                        if ca == 0 {
                            continue;
                        }
                        for (b, &cb) in vj.iter().enumerate() {
                            if cb == 0 {
                                continue;
                            }
                            acc[(a + b) % m] += ca as i128 * cb as i128;
                        }
                    }
                    for l in 0..k {
                        if constants[l] == 0 {
                            continue;
                        }
                        for (t, &x) in ct.values[l][c].coeffs().iter().enumerate() {
                            acc[t] -= constants[l] as i128 * x as i128;
                        }
                    }
                    let coeffs: Vec<i64> =
                        acc.into_iter().map(|v| i64::try_from(v).expect("overflow")).collect();
                    assert!(
                        Cyclotomic::from_coeffs(ct.exponent, coeffs).is_zero(),
                        "non-integer structure constant (engine bug)"
                    );
                }
            }
        }
    }

    let labels: Vec<String> = (0..k).map(|i| format!("chi{i}")).collect();
    let series = structural_series(&ct.group);
    let name = match ct.group.name() {
        Some(n) => n.to_string(),
        None => format!("an order-{} group", ct.group.order()),
    };
    let realization = GroupRealization {
        description: format!("representation ring of {name}"),
        order: ct.group.order(),
        is_solvable: series.is_solvable,
    };
    FusionRing::new_with_realization(labels, 0, dual, tensor, Some(realization))
        .expect("representation rings satisfy the fusion axioms")
}

/// Irreducible degrees of the Drinfeld double: for each conjugacy class, the
/// centralizer's degrees scaled by the class size. Sorted multiset.
pub fn drinfeld_double_degrees(
    group: &Arc<FiniteGroup>,
    cap: usize,
) -> Result<Vec<u64>, ChartabError> {
    if group.order() > cap {
        return Err(ChartabError::CapExceeded { order: group.order(), cap });
    }
    let classes = group.conjugacy_classes();
    let mut degrees = Vec::new();
    for class in &classes {
        let rep = class[0];
        let cent = group.centralizer(rep);
        let (cgroup, _) = group.subgroup_as_group(&cent).expect("centralizers are subgroups");
        let ct = character_table_with(&Arc::new(cgroup), cap, 0)?;
        for &d in &ct.degrees {
            degrees.push(class.len() as u64 * d);
        }
    }
    degrees.sort_unstable();
    let total: u64 = degrees.iter().map(|&d| d * d).sum();
    assert_eq!(
        total,
        (group.order() as u64).pow(2),
        "double degrees must square-sum to |G|^2"
    );
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn table(g: FiniteGroup) -> CharacterTable {
        character_table(&Arc::new(g)).unwrap()
    }

    #[test]
    fn s3_classical_table() {
        let ct = table(fixtures::symmetric_group(3));
        assert_eq!(ct.degrees, vec![1, 1, 2]);
        // Classes: identity, transpositions, 3-cycles.
        assert_eq!(ct.class_sizes(), vec![1, 3, 2]);
        let ints: Vec<Vec<i64>> = ct
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.as_integer().unwrap()).collect())
            .collect();
        assert_eq!(ints[0], vec![1, 1, 1]);
        assert_eq!(ints[1], vec![1, -1, 1]);
        assert_eq!(ints[2], vec![2, 0, -1]);
    }

    #[test]
    fn a4_classical_table() {
        let ct = table(fixtures::alternating_group(4));
        assert_eq!(ct.degrees, vec![1, 1, 1, 3]);
        // Classes in fixture order: identity, the two 3-cycle classes, then
        // the double transpositions.
        assert_eq!(ct.class_sizes(), vec![1, 4, 4, 3]);
        // The 3-dimensional character is integral: 3 at e, 0 on 3-cycles,
        // -1 on double transpositions.
        let chi3: Vec<i64> = ct.values[3].iter().map(|v| v.as_integer().unwrap()).collect();
        assert_eq!(chi3, vec![3, 0, 0, -1]);
        // The nontrivial linear characters take primitive cube root values.
        assert_eq!(ct.values[1][2].as_integer(), None);
        let omega = &ct.values[1][2];
        let cube = omega.mul(omega).mul(omega);
        assert_eq!(cube.as_integer(), Some(1));
    }

    #[test]
    fn cyclic_and_quaternion_degrees() {
        assert_eq!(table(fixtures::cyclic_group(8)).degrees, vec![1; 8]);
        assert_eq!(table(fixtures::quaternion_group()).degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(table(fixtures::dihedral_group(4)).degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(table(fixtures::symmetric_group(4)).degrees, vec![1, 1, 2, 3, 3]);
        assert_eq!(table(fixtures::alternating_group(5)).degrees, vec![1, 3, 3, 4, 5]);
        assert_eq!(table(fixtures::heisenberg_group_27()).degrees, vec![1; 9].into_iter().chain([3, 3]).collect::<Vec<_>>());
        assert_eq!(
            table(fixtures::frobenius_group_56()).degrees,
            vec![1, 1, 1, 1, 1, 1, 1, 7]
        );
    }

    #[test]
    fn golden_values_on_a5_are_exact() {
        let ct = table(fixtures::alternating_group(5));
        // Both 3-dimensional characters take irrational values on 5-cycles,
        // and those values satisfy x^2 - x - 1 = 0 (shifted golden ratios).
        let mut golden = 0;
        for i in 0..ct.rank() {
            if ct.degrees[i] != 3 {
                continue;
            }
            for c in 0..ct.rank() {
                let v = &ct.values[i][c];
                if v.as_integer().is_some() {
                    continue;
                }
                let rel = v.mul(v).sub(v).sub(&Cyclotomic::integer(ct.exponent, 1));
                assert!(rel.is_zero());
                golden += 1;
            }
        }
        assert_eq!(golden, 4);
    }

    #[test]
    fn seed_does_not_change_the_table() {
        let g = Arc::new(fixtures::symmetric_group(4));
        let base = character_table_with(&g, 512, 0).unwrap();
        for seed in [1u64, 7, 99] {
            let other = character_table_with(&g, 512, seed).unwrap();
            assert_eq!(base.degrees, other.degrees);
            for i in 0..base.rank() {
                for c in 0..base.rank() {
                    assert_eq!(base.values[i][c], other.values[i][c]);
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = Arc::new(fixtures::cyclic_group(16));
        assert!(matches!(
            character_table_with(&g, 8, 0),
            Err(ChartabError::CapExceeded { order: 16, cap: 8 })
        ));
    }

    #[test]
    fn s3_fusion_ring_is_the_classical_one() {
        let ct = table(fixtures::symmetric_group(3));
        let ring = rep_fusion_ring(&ct);
        assert_eq!(ring.rank(), 3);
        // chi2 * chi2 = 1 + sgn + chi2.
        assert_eq!(ring.n(2, 2, 0), 1);
        assert_eq!(ring.n(2, 2, 1), 1);
        assert_eq!(ring.n(2, 2, 2), 1);
        // sgn * chi2 = chi2.
        assert_eq!(ring.n(1, 2, 2), 1);
        assert_eq!(ring.n(1, 2, 0), 0);
        assert_eq!(ring.n(1, 1, 0), 1);
    }

    #[test]
    fn a4_fusion_ring_constants() {
        let ct = table(fixtures::alternating_group(4));
        let ring = rep_fusion_ring(&ct);
        // x (x) x*: every linear once, x itself twice.
        assert_eq!(ring.n(3, 3, 0), 1);
        assert_eq!(ring.n(3, 3, 1), 1);
        assert_eq!(ring.n(3, 3, 2), 1);
        assert_eq!(ring.n(3, 3, 3), 2);
        assert_eq!(ring.dual(3), 3);
        // The linear characters rotate each other cyclically.
        assert_eq!(ring.n(1, 1, 2), 1);
        assert_eq!(ring.n(1, 2, 0), 1);
    }

    #[test]
    fn frobenius56_ring_constants() {
        let ct = table(fixtures::frobenius_group_56());
        let ring = rep_fusion_ring(&ct);
        assert_eq!(ring.rank(), 8);
        // The degree-7 character x has x (x) x* = sum of all linears + 6x.
        for l in 0..7 {
            assert_eq!(ring.n(7, 7, l), 1);
        }
        assert_eq!(ring.n(7, 7, 7), 6);
    }

    #[test]
    fn double_degree_multisets() {
        let z2 = Arc::new(fixtures::cyclic_group(2));
        assert_eq!(drinfeld_double_degrees(&z2, 512).unwrap(), vec![1, 1, 1, 1]);
        let s3 = Arc::new(fixtures::symmetric_group(3));
        assert_eq!(
            drinfeld_double_degrees(&s3, 512).unwrap(),
            vec![1, 1, 2, 2, 2, 2, 3, 3]
        );
    }
}
