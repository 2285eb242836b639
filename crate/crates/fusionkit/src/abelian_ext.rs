//! Matched pairs of finite groups and the Hopf algebra extensions they
//! present.
//!
//! A matched pair is a quadruple (F, Gamma, |>, <|): a left action |> of
//! Gamma on the set F and a right action <| of F on the set Gamma, compatible
//! in the sense that the bicrossed product table
//!
//! ```text
//!   (x1, s1) (x2, s2) = (x1 (s1 |> x2), (s1 <| x2) s2)
//! ```
//!
//! defines a group G = F join Gamma. Every exact factorization G = F Gamma
//! arises this way: decompose s x = f' g' with f' in F and g' in Gamma, then
//! s |> x = f' and s <| x = g'. (The F component is read off first; the
//! round-trip homomorphism check in `from_exact_factorization` certifies the
//! convention on every pair of elements.)
//!
//! The pair presents a split extension H of the function algebra on Gamma by
//! the group algebra of F, with dim H = |F| |Gamma|. All invariants of H
//! computed here (grouplikes, irreducible degrees, centrality, nilpotency,
//! solvability) are derived mechanically from the pair and cross-checked
//! against the bicrossed group.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::chartab::{character_table, ChartabError};
use crate::group::{
    fitting_subgroup, frobenius_structure, semidirect_product, structural_series, Elem,
    FiniteGroup, FrobeniusOutcome, GroupError, Subgroup,
};
use crate::report::{Clause, TheoremReport};

/// How `from_exact_factorization` reads a product: the F component first.
/// Reports that serialize a matched pair carry this tag so the action
/// matrices stay interpretable.
pub const DECOMPOSITION_CONVENTION: &str = "s*x = (s|>x)(s<|x), F component first";

#[derive(Debug, Error)]
pub enum ExtError {
    #[error("action matrix has the wrong shape: {0}")]
    Shape(String),
    #[error("action violates an identity law: {0}")]
    IdentityLaw(String),
    #[error("action slice is not a permutation: {0}")]
    NotPermutation(String),
    #[error("actions are not matched, the bicrossed table is not a group: {0}")]
    Incompatible(GroupError),
    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),
    #[error("the quotient factor must have prime order, got {order}")]
    GammaNotPrime { order: usize },
}

/// A validated matched pair with its bicrossed product group.
#[derive(Clone)]
pub struct MatchedPair {
    f: Arc<FiniteGroup>,
    gamma: Arc<FiniteGroup>,
    /// `act_on_f[s][x] = s |> x`, an element of F.
    act_on_f: Vec<Vec<Elem>>,
    /// `act_on_gamma[s][x] = s <| x`, an element of Gamma.
    act_on_gamma: Vec<Vec<Elem>>,
    bicrossed: Arc<FiniteGroup>,
}

impl MatchedPair {
    /// Validates the identity laws, that both actions permute their target,
    /// and that the two actions are matched (the bicrossed table passes the
    /// full group axioms).
    pub fn new(
        f: Arc<FiniteGroup>,
        gamma: Arc<FiniteGroup>,
        act_on_f: Vec<Vec<Elem>>,
        act_on_gamma: Vec<Vec<Elem>>,
    ) -> Result<Self, ExtError> {
        let nf = f.order();
        let ng = gamma.order();
        for (tag, m) in [("act_on_f", &act_on_f), ("act_on_gamma", &act_on_gamma)] {
            if m.len() != ng || m.iter().any(|row| row.len() != nf) {
                return Err(ExtError::Shape(format!(
                    "{tag} must be {ng} rows of {nf} entries"
                )));
            }
        }
        let ef = f.identity();
        let eg = gamma.identity();
        for x in f.elements() {
            if act_on_f[eg as usize][x as usize] != x {
                return Err(ExtError::IdentityLaw(format!("e |> {x} != {x}")));
            }
            if act_on_gamma[eg as usize][x as usize] != eg {
                return Err(ExtError::IdentityLaw(format!("e <| {x} != e")));
            }
        }
        for s in gamma.elements() {
            if act_on_f[s as usize][ef as usize] != ef {
                return Err(ExtError::IdentityLaw(format!("{s} |> e != e")));
            }
            if act_on_gamma[s as usize][ef as usize] != s {
                return Err(ExtError::IdentityLaw(format!("{s} <| e != {s}")));
            }
        }
        // s |> - permutes F for each s; - <| x permutes Gamma for each x.
        for s in 0..ng {
            let mut seen = vec![false; nf];
            for x in 0..nf {
                let y = act_on_f[s][x] as usize;
                if y >= nf || seen[y] {
                    return Err(ExtError::NotPermutation(format!("{s} |> - on F")));
                }
                seen[y] = true;
            }
        }
        for x in 0..nf {
            let mut seen = vec![false; ng];
            for s in 0..ng {
                let t = act_on_gamma[s][x] as usize;
                if t >= ng || seen[t] {
                    return Err(ExtError::NotPermutation(format!("- <| {x} on Gamma")));
                }
                seen[t] = true;
            }
        }
        let order = nf * ng;
        let idx = |x: usize, s: usize| x * ng + s;
        let mut table = vec![0 as Elem; order * order];
        for x1 in 0..nf {
            for s1 in 0..ng {
                for x2 in 0..nf {
                    for s2 in 0..ng {
                        let fx = f.mul(x1 as Elem, act_on_f[s1][x2]);
                        let gs = gamma.mul(act_on_gamma[s1][x2], s2 as Elem);
                        table[idx(x1, s1) * order + idx(x2, s2)] =
                            idx(fx as usize, gs as usize) as Elem;
                    }
                }
            }
        }
        let bicrossed = FiniteGroup::new(order, table).map_err(ExtError::Incompatible)?;
        assert_eq!(
            bicrossed.identity() as usize,
            idx(ef as usize, eg as usize),
            "bicrossed identity must sit at (e, e)"
        );
        let fname = f.name().unwrap_or("F").to_string();
        let gname = gamma.name().unwrap_or("Gamma").to_string();
        let bicrossed = Arc::new(bicrossed.with_name(format!("{fname}*{gname}")));
        Ok(MatchedPair { f, gamma, act_on_f, act_on_gamma, bicrossed })
    }

    /// Reads the matched pair off an exact factorization `G = F Gamma`
    /// (trivial intersection, |F| |Gamma| = |G|). After building the pair,
    /// the map (x, s) -> x s from the bicrossed group back to G is asserted
    /// to be a homomorphism on every pair of elements; this pins down the
    /// decomposition convention.
    pub fn from_exact_factorization(
        g: &Arc<FiniteGroup>,
        f_sub: &Subgroup,
        gamma_sub: &Subgroup,
    ) -> Result<Self, ExtError> {
        assert!(
            f_sub.parent.as_ref() == g.as_ref() && gamma_sub.parent.as_ref() == g.as_ref(),
            "both factors must live in the same group"
        );
        if f_sub.order() * gamma_sub.order() != g.order() {
            return Err(ExtError::NotExactFactorization(format!(
                "|F| |Gamma| = {} but |G| = {}",
                f_sub.order() * gamma_sub.order(),
                g.order()
            )));
        }
        let shared: Vec<Elem> = f_sub
            .elements
            .iter()
            .copied()
            .filter(|x| gamma_sub.elements.binary_search(x).is_ok())
            .collect();
        if shared.len() != 1 {
            return Err(ExtError::NotExactFactorization(format!(
                "factors share {} elements, expected only the identity",
                shared.len()
            )));
        }
        let (f_grp, f_elems) = f_sub.as_group();
        let (gamma_grp, gamma_elems) = gamma_sub.as_group();
        let nf = f_elems.len();
        let ng = gamma_elems.len();
        // Every g in G must split uniquely as x s.
        let mut split: Vec<Option<(usize, usize)>> = vec![None; g.order()];
        for (xi, &x) in f_elems.iter().enumerate() {
            for (si, &s) in gamma_elems.iter().enumerate() {
                let p = g.mul(x, s) as usize;
                if split[p].is_some() {
                    return Err(ExtError::NotExactFactorization(format!(
                        "products collide at element {p}"
                    )));
                }
                split[p] = Some((xi, si));
            }
        }
        let mut act_on_f = vec![vec![0 as Elem; nf]; ng];
        let mut act_on_gamma = vec![vec![0 as Elem; nf]; ng];
        for (si, &s) in gamma_elems.iter().enumerate() {
            for (xi, &x) in f_elems.iter().enumerate() {
                let (fi, gi) = split[g.mul(s, x) as usize].expect("splitting is onto");
                act_on_f[si][xi] = fi as Elem;
                act_on_gamma[si][xi] = gi as Elem;
            }
        }
        let pair =
            MatchedPair::new(Arc::new(f_grp), Arc::new(gamma_grp), act_on_f, act_on_gamma)?;
        // Round trip: (x, s) -> x s must carry the bicrossed table to G.
        let phi: Vec<Elem> = (0..pair.bicrossed.order())
            .map(|i| g.mul(f_elems[i / ng], gamma_elems[i % ng]))
            .collect();
        for a in pair.bicrossed.elements() {
            for b in pair.bicrossed.elements() {
                assert_eq!(
                    phi[pair.bicrossed.mul(a, b) as usize],
                    g.mul(phi[a as usize], phi[b as usize]),
                    "factorization decomposition must be a homomorphism"
                );
            }
        }
        Ok(pair)
    }

    pub fn f(&self) -> &Arc<FiniteGroup> {
        &self.f
    }

    pub fn gamma(&self) -> &Arc<FiniteGroup> {
        &self.gamma
    }

    pub fn bicrossed(&self) -> &Arc<FiniteGroup> {
        &self.bicrossed
    }

    pub fn act_f(&self, s: Elem, x: Elem) -> Elem {
        self.act_on_f[s as usize][x as usize]
    }

    pub fn act_gamma(&self, s: Elem, x: Elem) -> Elem {
        self.act_on_gamma[s as usize][x as usize]
    }

    pub fn act_on_f_rows(&self) -> &[Vec<Elem>] {
        &self.act_on_f
    }

    pub fn act_on_gamma_rows(&self) -> &[Vec<Elem>] {
        &self.act_on_gamma
    }

    /// Index of (x, s) inside the bicrossed group.
    pub fn pair_index(&self, x: Elem, s: Elem) -> Elem {
        (x as usize * self.gamma.order() + s as usize) as Elem
    }

    /// The copy of F inside the bicrossed group, as pairs (x, e).
    pub fn f_image(&self) -> Subgroup {
        let eg = self.gamma.identity();
        let elems: Vec<Elem> = self.f.elements().map(|x| self.pair_index(x, eg)).collect();
        Subgroup::new(Arc::clone(&self.bicrossed), elems).expect("F embeds in the product")
    }

    /// The copy of Gamma inside the bicrossed group, as pairs (e, s).
    pub fn gamma_image(&self) -> Subgroup {
        let ef = self.f.identity();
        let elems: Vec<Elem> = self.gamma.elements().map(|s| self.pair_index(ef, s)).collect();
        Subgroup::new(Arc::clone(&self.bicrossed), elems).expect("Gamma embeds in the product")
    }

    /// The pair for the opposite factorization G = Gamma F, read off the
    /// bicrossed group. Presents the dual Hopf algebra.
    pub fn flipped(&self) -> MatchedPair {
        MatchedPair::from_exact_factorization(&self.bicrossed, &self.gamma_image(), &self.f_image())
            .expect("the bicrossed group factors exactly by construction")
    }
}

/// Which side of the extension is (co)central.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Centrality {
    /// The function part is central: `<|` is trivial.
    pub central: bool,
    /// The group part is cocentral: `|>` is trivial.
    pub cocentral: bool,
}

#[derive(Clone, Debug)]
pub struct ExtensionNilpotency {
    pub nilpotent: bool,
    /// Fitting subgroup of the bicrossed group (indices there).
    pub fitting: Vec<Elem>,
    /// The criterion itself: the copy of F lies inside the Fitting subgroup.
    pub f_inside_fitting: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ExtensionSolvability {
    pub solvable: bool,
    pub f_nilpotent: bool,
    pub gamma_nilpotent: bool,
}

/// One irreducible module of the extension: a `<|`-orbit on Gamma together
/// with an irreducible character of the orbit stabilizer in F.
#[derive(Clone, Debug)]
pub struct ExtensionSimple {
    pub orbit_rep: Elem,
    pub orbit_size: usize,
    pub stabilizer_degree: u64,
    /// orbit_size * stabilizer_degree.
    pub degree: u64,
}

#[derive(Clone, Debug)]
pub struct ExtensionIrreps {
    pub simples: Vec<ExtensionSimple>,
    /// (degree, multiplicity), ascending by degree.
    pub type_tuple: Vec<(u64, usize)>,
    pub dimension: u64,
}

/// A split extension presented by a matched pair. The toolkit only builds
/// extensions with both cocycles identically one, so the dual extension is
/// again of the same kind (the flipped pair).
#[derive(Clone)]
pub struct AbelianExtension {
    pair: MatchedPair,
}

impl AbelianExtension {
    pub fn new(pair: MatchedPair) -> Self {
        AbelianExtension { pair }
    }

    pub fn pair(&self) -> &MatchedPair {
        &self.pair
    }

    pub fn dimension(&self) -> u64 {
        (self.pair.f.order() * self.pair.gamma.order()) as u64
    }

    /// Both cocycles are identically one for every extension this toolkit
    /// constructs; recorded so reports can say so explicitly.
    pub fn has_trivial_cocycles(&self) -> bool {
        true
    }

    pub fn dual(&self) -> AbelianExtension {
        AbelianExtension { pair: self.pair.flipped() }
    }

    /// Grouplike counts (|G(H)|, |G(H*)|).
    ///
    /// A grouplike of H is a character of Gamma paired with a `|>`-fixed
    /// point of F, so |G(H)| = |Gamma^ab| * #fix(|>). Dually |G(H*)| =
    /// |F^ab| * #fix(<|).
    pub fn grouplike_counts(&self) -> (u64, u64) {
        let p = &self.pair;
        let fixed_f = p
            .f
            .elements()
            .filter(|&x| p.gamma.elements().all(|s| p.act_f(s, x) == x))
            .count() as u64;
        let fixed_gamma = p
            .gamma
            .elements()
            .filter(|&s| p.f.elements().all(|x| p.act_gamma(s, x) == s))
            .count() as u64;
        let all_f: Vec<Elem> = p.f.elements().collect();
        let all_g: Vec<Elem> = p.gamma.elements().collect();
        let ab_f = (p.f.order() / p.f.commutator_subgroup(&all_f, &all_f).len()) as u64;
        let ab_gamma =
            (p.gamma.order() / p.gamma.commutator_subgroup(&all_g, &all_g).len()) as u64;
        (ab_gamma * fixed_f, ab_f * fixed_gamma)
    }

    /// Centrality of the two ends of the extension, with structural
    /// cross-checks on the bicrossed group: a central extension makes the
    /// bicrossed table literally a semidirect product F x| Gamma, and a
    /// cocentral one makes the copy of Gamma normal.
    pub fn centrality(&self) -> Centrality {
        let p = &self.pair;
        let central = p
            .gamma
            .elements()
            .all(|s| p.f.elements().all(|x| p.act_gamma(s, x) == s));
        let cocentral = p
            .gamma
            .elements()
            .all(|s| p.f.elements().all(|x| p.act_f(s, x) == x));
        if central {
            let action: Vec<Vec<Elem>> = p.act_on_f.clone();
            let semi = semidirect_product(&p.f, &p.gamma, &action)
                .expect("a central pair acts by automorphisms");
            assert!(
                semi == *p.bicrossed.as_ref(),
                "central pair must reproduce the semidirect product table"
            );
            assert!(
                p.bicrossed.is_normal(&p.f_image().elements),
                "central pair must normalize the copy of F"
            );
        }
        if cocentral {
            assert!(
                p.bicrossed.is_normal(&p.gamma_image().elements),
                "cocentral pair must normalize the copy of Gamma"
            );
        }
        Centrality { central, cocentral }
    }

    /// The extension is nilpotent exactly when the copy of F lies inside the
    /// Fitting subgroup of the bicrossed group. For central pairs this is
    /// cross-checked against nilpotency of F itself.
    pub fn nilpotency(&self) -> ExtensionNilpotency {
        let p = &self.pair;
        let fitting = fitting_subgroup(&p.bicrossed);
        let f_inside_fitting = p
            .f_image()
            .elements
            .iter()
            .all(|x| fitting.binary_search(x).is_ok());
        if self.centrality().central {
            let f_nilp = structural_series(&p.f).is_nilpotent;
            assert_eq!(
                f_inside_fitting, f_nilp,
                "for central pairs, nilpotency of the extension and of F must agree"
            );
        }
        ExtensionNilpotency { nilpotent: f_inside_fitting, fitting, f_inside_fitting }
    }

    /// The extension is solvable exactly when the bicrossed group is. When
    /// both factors are nilpotent the product of two nilpotent subgroups is
    /// solvable, so the verdict is cross-checked against that.
    pub fn solvability(&self) -> ExtensionSolvability {
        let p = &self.pair;
        let solvable = structural_series(&p.bicrossed).is_solvable;
        let f_nilpotent = structural_series(&p.f).is_nilpotent;
        let gamma_nilpotent = structural_series(&p.gamma).is_nilpotent;
        if f_nilpotent && gamma_nilpotent {
            assert!(
                solvable,
                "a product of two nilpotent factors must come out solvable"
            );
        }
        ExtensionSolvability { solvable, f_nilpotent, gamma_nilpotent }
    }

    /// Irreducible modules of the extension: for each `<|`-orbit on Gamma
    /// with representative s and stabilizer F_s = {x : s <| x = s}, one
    /// simple of degree [F : F_s] * d per irreducible character of F_s of
    /// degree d. Checks the sum of squared degrees against dim H, that every
    /// degree divides |F|, and that the number of degree-1 simples equals
    /// |G(H*)|.
    pub fn irreps(&self) -> Result<ExtensionIrreps, ChartabError> {
        let p = &self.pair;
        let nf = p.f.order();
        let ng = p.gamma.order();
        let mut visited = vec![false; ng];
        let mut simples = Vec::new();
        for s in 0..ng as u16 {
            if visited[s as usize] {
                continue;
            }
            let mut orbit: Vec<Elem> = p.f.elements().map(|x| p.act_gamma(s, x)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &t in &orbit {
                visited[t as usize] = true;
            }
            let stab: Vec<Elem> =
                p.f.elements().filter(|&x| p.act_gamma(s, x) == s).collect();
            assert_eq!(orbit.len() * stab.len(), nf, "orbit times stabilizer");
            let (stab_grp, _) = p.f.subgroup_as_group(&stab).expect("stabilizer is a subgroup");
            let ct = character_table(&Arc::new(stab_grp))?;
            for &d in &ct.degrees {
                simples.push(ExtensionSimple {
                    orbit_rep: s,
                    orbit_size: orbit.len(),
                    stabilizer_degree: d,
                    degree: orbit.len() as u64 * d,
                });
            }
        }
        let dimension = (nf * ng) as u64;
        let total: u128 = simples.iter().map(|s| (s.degree as u128) * (s.degree as u128)).sum();
        assert_eq!(total, dimension as u128, "squared degrees must sum to dim H");
        assert!(
            simples.iter().all(|s| nf as u64 % s.degree == 0),
            "every irreducible degree must divide |F|"
        );
        let ones = simples.iter().filter(|s| s.degree == 1).count() as u64;
        assert_eq!(
            ones,
            self.grouplike_counts().1,
            "degree-1 simples are exactly the grouplikes of the dual"
        );
        let mut by_degree: BTreeMap<u64, usize> = BTreeMap::new();
        for s in &simples {
            *by_degree.entry(s.degree).or_insert(0) += 1;
        }
        Ok(ExtensionIrreps {
            simples,
            type_tuple: by_degree.into_iter().collect(),
            dimension,
        })
    }

    /// Checks the structure statement for extensions with a prime-order
    /// quotient part and exactly p grouplikes: such an extension is central,
    /// its bicrossed group is Frobenius with kernel the copy of F, F is
    /// nilpotent, and the extension itself is nilpotent.
    pub fn verify_fnilp(&self) -> Result<TheoremReport, ExtError> {
        let statement = "an extension by a prime-order group part with exactly p grouplikes \
                         is central, Frobenius over F, and nilpotent";
        let (clauses, skip) = self.fnilp_clauses()?;
        if let Some(reason) = skip {
            return Ok(TheoremReport::skipped("fnilp", statement, reason));
        }
        Ok(TheoremReport::from_clauses("fnilp", statement, clauses))
    }

    /// The nilpotency consequence alone, under the same hypotheses.
    pub fn verify_hnilp(&self) -> Result<TheoremReport, ExtError> {
        let statement = "an extension by a prime-order group part with exactly p grouplikes \
                         is nilpotent";
        let (clauses, skip) = self.fnilp_clauses()?;
        if let Some(reason) = skip {
            return Ok(TheoremReport::skipped("hnilp", statement, reason));
        }
        let nilp: Vec<Clause> =
            clauses.into_iter().filter(|c| c.name == "extension-nilpotent").collect();
        assert_eq!(nilp.len(), 1);
        Ok(TheoremReport::from_clauses("hnilp", statement, nilp))
    }

    fn fnilp_clauses(&self) -> Result<(Vec<Clause>, Option<String>), ExtError> {
        let p = &self.pair;
        let order = p.gamma.order();
        if !is_prime(order) {
            return Err(ExtError::GammaNotPrime { order });
        }
        if p.f.order() == 1 {
            return Ok((Vec::new(), Some("the kernel factor F is trivial".to_string())));
        }
        let (gh, _) = self.grouplike_counts();
        if gh != order as u64 {
            return Ok((
                Vec::new(),
                Some(format!(
                    "the extension has {gh} grouplikes, the statement needs exactly {order}"
                )),
            ));
        }
        let centrality = self.centrality();
        let mut clauses = vec![Clause::new(
            "central",
            centrality.central,
            "the action of F on Gamma is trivial",
        )];
        let f_elems = p.f_image().elements;
        match frobenius_structure(&p.bicrossed, &p.gamma_image()) {
            FrobeniusOutcome::Frobenius(fs) => {
                let kernel_is_f = fs.kernel == f_elems;
                clauses.push(Clause::new(
                    "frobenius-kernel",
                    kernel_is_f,
                    format!(
                        "the bicrossed group is Frobenius with complement Gamma; kernel order {}",
                        fs.kernel.len()
                    ),
                ));
            }
            FrobeniusOutcome::NotFrobenius { conjugator, shared } => {
                clauses.push(Clause::new(
                    "frobenius-kernel",
                    false,
                    format!(
                        "Gamma meets its conjugate by element {conjugator} at {shared}"
                    ),
                ));
            }
        }
        let f_nilp = structural_series(&p.f).is_nilpotent;
        clauses.push(Clause::new(
            "kernel-nilpotent",
            f_nilp,
            format!("F has order {}", p.f.order()),
        ));
        let nilp = self.nilpotency();
        clauses.push(Clause::new(
            "extension-nilpotent",
            nilp.nilpotent,
            format!(
                "the copy of F {} the Fitting subgroup (order {})",
                if nilp.f_inside_fitting { "lies inside" } else { "escapes" },
                nilp.fitting.len()
            ),
        ));
        Ok((clauses, None))
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
