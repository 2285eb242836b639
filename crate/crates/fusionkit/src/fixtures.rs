//! Built-in example groups, generated programmatically.
//!
//! Every fixture is constructed through the validating `FiniteGroup`
//! constructor, so a typo in a generator here fails loudly. `corpus()` is the
//! standard scan set: a spread of groups of order at most 60 covering
//! abelian, nilpotent, solvable-not-nilpotent, and non-solvable behavior.

use crate::group::{direct_product, semidirect_product, Elem, FiniteGroup};

/// Cyclic group of order `n` under addition.
pub fn cyclic_group(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = ((a + b) % n) as Elem;
        }
    }
    FiniteGroup::new(n, table).unwrap().with_name(format!("Z{n}"))
}

/// Elementary abelian 2-group of rank `k` (bitwise xor on `k`-bit vectors).
pub fn elementary_abelian_2(k: u32) -> FiniteGroup {
    let n = 1usize << k;
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = (a ^ b) as Elem;
        }
    }
    let name = if k == 2 { "V4".to_string() } else { format!("Z2^{k}") };
    FiniteGroup::new(n, table).unwrap().with_name(name)
}

fn permutations(n: usize) -> Vec<Vec<u8>> {
    fn rec(remaining: &mut Vec<u8>, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let x = remaining.remove(i);
            prefix.push(x);
            rec(remaining, prefix, out);
            prefix.pop();
            remaining.insert(i, x);
        }
    }
    let mut remaining: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::new();
    rec(&mut remaining, &mut Vec::new(), &mut out);
    out
}

fn is_even(p: &[u8]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutation_group(perms: Vec<Vec<u8>>, name: &str) -> FiniteGroup {
    // Lexicographic order; the identity permutation sorts first.
    let mut perms = perms;
    perms.sort();
    let n = perms.len();
    let mut table = vec![0 as Elem; n * n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let composed: Vec<u8> = (0..p.len()).map(|x| p[q[x] as usize]).collect();
            let k = perms.binary_search(&composed).expect("composition stays in the group");
            table[i * n + j] = k as Elem;
        }
    }
    FiniteGroup::new(n, table).unwrap().with_name(name)
}

/// Symmetric group on `n` letters (n <= 5), elements in lex order.
pub fn symmetric_group(n: usize) -> FiniteGroup {
    assert!((1..=5).contains(&n), "symmetric fixtures cover n <= 5");
    permutation_group(permutations(n), &format!("S{n}"))
}

/// Alternating group on `n` letters (n <= 5).
pub fn alternating_group(n: usize) -> FiniteGroup {
    assert!((3..=5).contains(&n), "alternating fixtures cover 3 <= n <= 5");
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(perms, &format!("A{n}"))
}

/// Dihedral group of the regular `n`-gon, order `2n`. Element `(a, b)` with
/// rotation `a` and flip bit `b` sits at index `2a + b`.
pub fn dihedral_group(n: usize) -> FiniteGroup {
    assert!(n >= 2);
    let order = 2 * n;
    let idx = |a: usize, b: usize| 2 * a + b;
    let mut table = vec![0 as Elem; order * order];
    for a in 0..n {
        for b in 0..2 {
            for c in 0..n {
                for d in 0..2 {
                    let rot = if b == 0 { (a + c) % n } else { (a + n - c % n) % n };
                    table[idx(a, b) * order + idx(c, d)] = idx(rot, (b + d) % 2) as Elem;
                }
            }
        }
    }
    FiniteGroup::new(order, table).unwrap().with_name(format!("D{n}"))
}

/// Quaternion group of order 8: indices 0..8 are 1, -1, i, -i, j, -j, k, -k.
pub fn quaternion_group() -> FiniteGroup {
    // Axis products: (axis, axis) -> (axis, sign flip).
    // Axes: 0 = scalar, 1 = i, 2 = j, 3 = k.
    let axis_mul = |a: usize, b: usize| -> (usize, usize) {
        match (a, b) {
            (0, x) => (x, 0),
            (x, 0) => (x, 0),
            (1, 1) | (2, 2) | (3, 3) => (0, 1),
            (1, 2) => (3, 0),
            (2, 1) => (3, 1),
            (2, 3) => (1, 0),
            (3, 2) => (1, 1),
            (3, 1) => (2, 0),
            (1, 3) => (2, 1),
            _ => unreachable!(),
        }
    };
    let mut table = vec![0 as Elem; 64];
    for a in 0..4 {
        for s in 0..2 {
            for b in 0..4 {
                for t in 0..2 {
                    let (c, u) = axis_mul(a, b);
                    let sign = (s + t + u) % 2;
                    table[(a * 2 + s) * 8 + (b * 2 + t)] = (c * 2 + sign) as Elem;
                }
            }
        }
    }
    FiniteGroup::new(8, table).unwrap().with_name("Q8")
}

/// Heisenberg group of order 27: upper unitriangular 3x3 matrices over Z_3.
/// Triple `(a, b, c)` sits at index `9a + 3b + c`; the product adds entries
/// with the correction `c'' = c + c' + a b'`.
pub fn heisenberg_group_27() -> FiniteGroup {
    let idx = |a: usize, b: usize, c: usize| 9 * a + 3 * b + c;
    let mut table = vec![0 as Elem; 27 * 27];
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for x in 0..3 {
                    for y in 0..3 {
                        for z in 0..3 {
                            let na = (a + x) % 3;
                            let nb = (b + y) % 3;
                            let nc = (c + z + a * y) % 3;
                            table[idx(a, b, c) * 27 + idx(x, y, z)] = idx(na, nb, nc) as Elem;
                        }
                    }
                }
            }
        }
    }
    FiniteGroup::new(27, table).unwrap().with_name("Heis27")
}

/// Frobenius group of order 56: the 2-elementary group of rank 3 extended by
/// Z_7 acting as multiplication by a generator of GF(8)*.
pub fn frobenius_group_56() -> FiniteGroup {
    let e8 = elementary_abelian_2(3);
    let z7 = cyclic_group(7);
    // Multiplication by t in GF(2)[t]/(t^3 + t + 1).
    let mul_t = |v: usize| -> usize {
        let s = v << 1;
        if s & 0b1000 != 0 {
            (s ^ 0b1011) & 0b111
        } else {
            s & 0b111
        }
    };
    let mut action: Vec<Vec<Elem>> = Vec::with_capacity(7);
    let mut perm: Vec<Elem> = (0..8).collect();
    for _ in 0..7 {
        action.push(perm.clone());
        perm = perm.iter().map(|&v| mul_t(v as usize) as Elem).collect();
    }
    semidirect_product(&e8, &z7, &action).unwrap().with_name("Frob56")
}

/// Frobenius group of order 21: Z_7 extended by Z_3 acting as multiplication
/// by 2 (an element of multiplicative order 3 mod 7).
pub fn frobenius_group_21() -> FiniteGroup {
    let z7 = cyclic_group(7);
    let z3 = cyclic_group(3);
    let mut action: Vec<Vec<Elem>> = Vec::with_capacity(3);
    let mut mult = 1usize;
    for _ in 0..3 {
        action.push((0..7).map(|v| ((v * mult) % 7) as Elem).collect());
        mult = mult * 2 % 7;
    }
    semidirect_product(&z7, &z3, &action).unwrap().with_name("Frob21")
}

/// Looks up a fixture by name: `Z<n>`, `D<n>`, `S3`..`S5`, `A4`, `A5`, `V4`,
/// `Q8`, `Z2^3`, `Z3^2`, `Z2xZ4`, `Heis27`, `Frob21`, `Frob56`.
pub fn group_by_name(name: &str) -> Option<FiniteGroup> {
    match name {
        "V4" => return Some(elementary_abelian_2(2)),
        "Q8" => return Some(quaternion_group()),
        "Z2^3" => return Some(elementary_abelian_2(3)),
        "Z2^4" => return Some(elementary_abelian_2(4)),
        "Z3^2" => {
            let z3 = cyclic_group(3);
            return Some(direct_product(&z3, &z3).with_name("Z3^2"));
        }
        "Z2xZ4" => {
            let g = direct_product(&cyclic_group(2), &cyclic_group(4));
            return Some(g.with_name("Z2xZ4"));
        }
        "Heis27" => return Some(heisenberg_group_27()),
        "Frob21" => return Some(frobenius_group_21()),
        "Frob56" => return Some(frobenius_group_56()),
        "S3" | "S4" | "S5" => return Some(symmetric_group(name[1..].parse().ok()?)),
        "A4" | "A5" => return Some(alternating_group(name[1..].parse().ok()?)),
        _ => {}
    }
    if let Some(n) = name.strip_prefix('Z').and_then(|s| s.parse::<usize>().ok()) {
        if (1..=512).contains(&n) {
            return Some(cyclic_group(n));
        }
    }
    if let Some(n) = name.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) {
        if (2..=256).contains(&n) {
            return Some(dihedral_group(n));
        }
    }
    None
}

///// The standard scan corpus: named groups of order at most 60.
pub fn corpus() -> Vec<FiniteGroup> {
    let mut groups = vec![
        cyclic_group(1),
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        cyclic_group(5),
        cyclic_group(6),
        cyclic_group(7),
        cyclic_group(8),
        cyclic_group(9),
        cyclic_group(10),
        cyclic_group(12),
        cyclic_group(30),
        cyclic_group(60),
        elementary_abelian_2(2),
        elementary_abelian_2(3),
        direct_product(&cyclic_group(2), &cyclic_group(4)).with_name("Z2xZ4"),
        direct_product(&cyclic_group(3), &cyclic_group(3)).with_name("Z3^2"),
        symmetric_group(3),
        dihedral_group(4),
        quaternion_group(),
        dihedral_group(5),
        dihedral_group(6),
        dihedral_group(7),
        dihedral_group(15),
        alternating_group(4),
        symmetric_group(4),
        alternating_group(5),
        frobenius_group_21(),
        heisenberg_group_27(),
        frobenius_group_56(),
    ];
    debug_assert!(groups.iter().all(|g| g.order() <= 60));
    groups.sort_by_key(|g| (g.order(), g.name().unwrap_or("").to_string()));
    groups
}
