//! Graded Lie-closure engine.
//!
//! [`close`] saturates the linear span of a finite set of homogeneous
//! derivations under the bracket, organizing everything by degree: each degree
//! holds a reduced-row-echelon matrix of coefficient vectors, so membership
//! tests are canonical and the final result is independent of generator order
//! and scaling. Saturation alone cannot prove infinite dimensionality, so the
//! engine runs under two caps (maximum absolute weight and maximum element
//! count); a capped run is an honest "don't know", never a verdict.
//!
//! On a closed result the module computes structure constants against the
//! canonical basis, lower central and derived series, the closed form for
//! iterated ad-powers of diagonal-type derivations, the explicit basis of the
//! algebra generated by two such derivations, and a recognizer for model
//! filiform algebras (nilpotent with a single maximal-length chain).

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::criteria::find_r;
use crate::derivation::HomogeneousDerivation;
use crate::error::{Error, Result};
use crate::linalg::RrefMatrix;
use crate::vector::{Int, LatticeVector, Rat, RationalVector};

/// A degree-graded basis: each occupied degree carries a reduced row echelon
/// matrix whose rows span that degree's coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GradedBasis {
    components: BTreeMap<LatticeVector, RrefMatrix>,
    total: usize,
}

impl GradedBasis {
    pub fn new() -> Self {
        GradedBasis::default()
    }

    /// Total dimension: sum of component ranks.
    pub fn total_dim(&self) -> usize {
        self.total
    }

    pub fn degrees(&self) -> impl Iterator<Item = &LatticeVector> {
        self.components.keys()
    }

    pub fn component(&self, degree: &LatticeVector) -> Option<&RrefMatrix> {
        self.components.get(degree)
    }

    /// True iff the derivation already lies in the span.
    pub fn spans(&self, d: &HomogeneousDerivation) -> bool {
        self.components
            .get(d.degree())
            .is_some_and(|m| m.contains(d.coeffs()))
    }

    /// Adds the derivation's coefficient vector to its degree component.
    /// Returns `true` iff the total dimension grew.
    pub fn insert(&mut self, d: &HomogeneousDerivation) -> bool {
        let grew = self
            .components
            .entry(d.degree().clone())
            .or_insert_with(|| RrefMatrix::new(d.dim()))
            .insert(d.coeffs());
        if grew {
            self.total += 1;
        }
        grew
    }

    /// Insert unless the total dimension already sits at `cap` and the
    /// element is independent. Reduces once in the common case.
    fn insert_below_cap(&mut self, d: &HomogeneousDerivation, cap: usize) -> CapInsert {
        if self.total < cap {
            if self.insert(d) {
                CapInsert::Grew
            } else {
                CapInsert::Dependent
            }
        } else if self.spans(d) {
            CapInsert::Dependent
        } else {
            CapInsert::WouldExceed
        }
    }

    /// The canonical basis: component rows in lexicographic degree order.
    pub fn elements(&self) -> Vec<HomogeneousDerivation> {
        let mut out = Vec::with_capacity(self.total);
        for (degree, comp) in &self.components {
            for row in comp.rows() {
                out.push(
                    HomogeneousDerivation::new(degree.clone(), row.clone())
                        .expect("basis rows are nonzero"),
                );
            }
        }
        out
    }

    /// Degrees together with the index of their first basis element in the
    /// canonical flattening.
    pub fn degree_offsets(&self) -> Vec<(&LatticeVector, usize)> {
        let mut out = Vec::with_capacity(self.components.len());
        let mut offset = 0;
        for (degree, comp) in &self.components {
            out.push((degree, offset));
            offset += comp.rank();
        }
        out
    }

    /// Sparse coordinates of the derivation in the canonical basis, or `None`
    /// when it lies outside the span.
    pub fn global_coordinates(&self, d: &HomogeneousDerivation) -> Option<Vec<(usize, Rat)>> {
        let mut offset = 0;
        for (degree, comp) in &self.components {
            if degree == d.degree() {
                let local = comp.coordinates(d.coeffs())?;
                return Some(
                    local
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (offset + k, c))
                        .collect(),
                );
            }
            offset += comp.rank();
        }
        None
    }

    /// Grading property of polynomial vector fields: a component whose degree
    /// has a negative entry at position `i` must lie on the line through
    /// `eps_i`. Holds whenever every generator is a polynomial derivation;
    /// Laurent generators may break it.
    pub fn respects_polynomial_grading(&self) -> bool {
        for (degree, comp) in &self.components {
            let negatives: Vec<usize> = degree
                .entries()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.is_negative())
                .map(|(k, _)| k)
                .collect();
            if negatives.is_empty() {
                continue;
            }
            if negatives.len() > 1 {
                return false;
            }
            let i = negatives[0];
            for row in comp.rows() {
                let off_line = row
                    .entries()
                    .iter()
                    .enumerate()
                    .any(|(j, c)| j != i && !c.is_zero());
                if off_line {
                    return false;
                }
            }
        }
        true
    }
}

/// Which cap stopped a closure run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapKind {
    Weight,
    ElementCount,
}

enum CapInsert {
    Grew,
    Dependent,
    WouldExceed,
}

/// A saturated algebra: canonical graded basis, structure constants against
/// it, and the bracket-nesting depth the worklist reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedAlgebra {
    pub basis: GradedBasis,
    pub constants: StructureConstants,
    pub generations: usize,
}

impl ClosedAlgebra {
    /// Re-verifies saturation: the bracket of any two basis elements reduces
    /// to zero against the basis.
    pub fn verify(&self) -> Result<bool> {
        let els = self.basis.elements();
        for i in 0..els.len() {
            for j in (i + 1)..els.len() {
                if let Some(w) = els[i].bracket(&els[j])? {
                    if !self.basis.spans(&w) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// Outcome of a closure run. `CapExceeded` is a semidecision: it bounds
/// nothing and never certifies infinite dimensionality on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureResult {
    Closed(ClosedAlgebra),
    CapExceeded {
        kind: CapKind,
        last_basis: GradedBasis,
    },
}

impl ClosureResult {
    pub fn closed(&self) -> Option<&ClosedAlgebra> {
        match self {
            ClosureResult::Closed(alg) => Some(alg),
            ClosureResult::CapExceeded { .. } => None,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.closed().is_some()
    }
}

/// Saturates the span of `gens` under the bracket.
///
/// Worklist order is deterministic: generators enter in input order, every
/// element is bracketed against all elements inserted no later than itself,
/// in insertion order. A produced element whose absolute weight exceeds
/// `max_weight`, or an insertion beyond `max_elements`, stops the run with
/// [`ClosureResult::CapExceeded`].
pub fn close(
    gens: &[HomogeneousDerivation],
    max_weight: u32,
    max_elements: usize,
) -> Result<ClosureResult> {
    if let Some(first) = gens.first() {
        for g in gens {
            if g.dim() != first.dim() {
                return Err(Error::DimensionMismatch {
                    left: first.dim(),
                    right: g.dim(),
                });
            }
        }
    }
    let weight_cap = Int::from(max_weight);
    for g in gens {
        if g.weight().abs() > weight_cap {
            return Err(Error::WeightCapBelowGenerators { max_weight });
        }
    }
    if max_elements < gens.len() {
        return Err(Error::ElementCapBelowGenerators {
            max_elements,
            generators: gens.len(),
        });
    }

    let mut basis = GradedBasis::new();
    let mut elements: Vec<(HomogeneousDerivation, usize)> = Vec::new();
    for g in gens {
        if basis.insert(g) {
            elements.push((g.clone(), 0));
        }
    }

    let mut generations = 0;
    let mut ui = 0;
    while ui < elements.len() {
        for vi in 0..=ui {
            let Some(w) = elements[ui].0.bracket(&elements[vi].0)? else {
                continue;
            };
            if w.weight().abs() > weight_cap {
                return Ok(ClosureResult::CapExceeded {
                    kind: CapKind::Weight,
                    last_basis: basis,
                });
            }
            match basis.insert_below_cap(&w, max_elements) {
                CapInsert::Dependent => {}
                CapInsert::WouldExceed => {
                    return Ok(ClosureResult::CapExceeded {
                        kind: CapKind::ElementCount,
                        last_basis: basis,
                    });
                }
                CapInsert::Grew => {
                    let generation = elements[ui].1.max(elements[vi].1) + 1;
                    generations = generations.max(generation);
                    elements.push((w, generation));
                }
            }
        }
        ui += 1;
    }

    let constants = compute_constants(&basis)?;
    Ok(ClosureResult::Closed(ClosedAlgebra {
        basis,
        constants,
        generations,
    }))
}

/// Structure constants against the canonical basis: for `i < j` the sparse
/// coordinates of `[b_i, b_j]`. The table under swap is determined by
/// antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    entries: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `[b_i, b_j]` for any pair, applying antisymmetry.
    pub fn bracket_entry(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Vec::new(),
            std::cmp::Ordering::Less => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            std::cmp::Ordering::Greater => self
                .entries
                .get(&(j, i))
                .map(|coords| coords.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default(),
        }
    }

    /// The stored nonzero entries, `i < j`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vec<(usize, Rat)>)> {
        self.entries.iter()
    }

    /// Bracket of two coordinate vectors with respect to the basis.
    pub fn bracket_coords(&self, u: &RationalVector, v: &RationalVector) -> RationalVector {
        let mut out = vec![Rat::zero(); self.dim];
        for (&(i, j), coords) in &self.entries {
            let scale = u.entry(i) * v.entry(j) - u.entry(j) * v.entry(i);
            if scale.is_zero() {
                continue;
            }
            for (k, c) in coords {
                out[*k] += &scale * c;
            }
        }
        RationalVector::new(out)
    }
}

fn compute_constants(basis: &GradedBasis) -> Result<StructureConstants> {
    let els = basis.elements();
    let dim = els.len();
    let mut entries = BTreeMap::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            let Some(w) = els[i].bracket(&els[j])? else {
                continue;
            };
            let coords = basis
                .global_coordinates(&w)
                .ok_or(Error::SaturationFailed)?;
            if !coords.is_empty() {
                entries.insert((i, j), coords);
            }
        }
    }
    Ok(StructureConstants { dim, entries })
}

/// The structure constants of a closed result; a capped run has none.
pub fn structure_constants(result: &ClosureResult) -> Result<&StructureConstants> {
    result
        .closed()
        .map(|alg| &alg.constants)
        .ok_or(Error::NotClosed)
}

/// Lower central and derived series data of a closed result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// Dimensions of the lower central series, starting at the full algebra,
    /// up to the first zero or the first repetition.
    pub lower_central_dims: Vec<usize>,
    /// Dimensions of the derived series, same convention.
    pub derived_dims: Vec<usize>,
    /// Length of the lower central series before zero, when it reaches zero.
    pub nilpotency_class: Option<usize>,
    pub solvable: bool,
}

/// Computes both series from the structure constants alone, by iterated
/// span-of-brackets with exact row reduction.
pub fn series_analysis(result: &ClosureResult) -> Result<SeriesReport> {
    let alg = result.closed().ok_or(Error::NotClosed)?;
    let sc = &alg.constants;
    let dim = sc.dim();
    if dim == 0 {
        return Ok(SeriesReport {
            lower_central_dims: vec![0],
            derived_dims: vec![0],
            nilpotency_class: Some(0),
            solvable: true,
        });
    }

    let full = RrefMatrix::identity(dim);

    let mut lower_central_dims = vec![dim];
    let mut current = full.clone();
    let nilpotency_class = loop {
        let next = bracket_span(sc, &full, &current);
        lower_central_dims.push(next.rank());
        if next.rank() == 0 {
            break Some(lower_central_dims.len() - 1);
        }
        if next.rank() == current.rank() {
            break None;
        }
        current = next;
    };

    let mut derived_dims = vec![dim];
    let mut current = full;
    let solvable = loop {
        let next = bracket_span(sc, &current, &current);
        derived_dims.push(next.rank());
        if next.rank() == 0 {
            break true;
        }
        if next.rank() == current.rank() {
            break false;
        }
        current = next;
    };

    Ok(SeriesReport {
        lower_central_dims,
        derived_dims,
        nilpotency_class,
        solvable,
    })
}

fn bracket_span(sc: &StructureConstants, a: &RrefMatrix, b: &RrefMatrix) -> RrefMatrix {
    let mut out = RrefMatrix::new(sc.dim());
    for x in a.rows() {
        for y in b.rows() {
            let w = sc.bracket_coords(x, y);
            if !w.is_zero() {
                out.insert(&w);
            }
        }
    }
    out
}

/// The closed form of an iterated ad-power of diagonal-type derivations:
///
/// ```text
/// (ad D^q_gamma)^d (D^p_beta) = s_d * D^(p + d q)_(omega_d)
/// s_1 = 1,  s_d = prod_{i=0}^{d-2} <gamma, p + i q>   (d > 1)
/// omega_d = <gamma, p + (d-1) q> beta - d <beta, q> gamma
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdPower {
    pub scalar: Rat,
    pub degree: LatticeVector,
    pub coeffs: RationalVector,
}

impl AdPower {
    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero() || self.coeffs.is_zero()
    }

    /// The scalar folded into the coefficient vector; `None` for zero.
    pub fn to_derivation(&self) -> Option<HomogeneousDerivation> {
        if self.is_zero() {
            return None;
        }
        Some(
            HomogeneousDerivation::new(self.degree.clone(), self.coeffs.scaled(&self.scalar))
                .expect("nonzero by the zero check"),
        )
    }
}

/// Evaluates the ad-power closed form exactly. Requires `d >= 1`, nonzero
/// coefficient vectors, and non-negative degree vectors.
pub fn ad_power(
    q: &LatticeVector,
    gamma: &RationalVector,
    p: &LatticeVector,
    beta: &RationalVector,
    d: u32,
) -> Result<AdPower> {
    if d == 0 {
        return Err(Error::AdPowerOrder);
    }
    if gamma.is_zero() || beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !p.is_nonnegative() || !q.is_nonnegative() {
        return Err(Error::NegativeExponent);
    }

    let mut scalar = Rat::one();
    for i in 0..(d - 1) {
        let point = p.checked_add(&q.scaled(&Int::from(i)))?;
        scalar *= gamma.pairing(&point)?;
    }

    let last_point = p.checked_add(&q.scaled(&Int::from(d - 1)))?;
    let beta_factor = gamma.pairing(&last_point)?;
    let gamma_factor = -Rat::from_integer(Int::from(d)) * beta.pairing(q)?;
    let coeffs = RationalVector::linear_combination(&beta_factor, beta, &gamma_factor, gamma)?;

    let degree = p.checked_add(&q.scaled(&Int::from(d)))?;
    Ok(AdPower {
        scalar,
        degree,
        coeffs,
    })
}

/// Explicit description of the algebra generated by `D^q_gamma` and
/// `D^p_beta` when `<beta, q> = 0` and some `r >= 0` annihilates
/// `<gamma, p + r q>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGeneratorAlgebra {
    /// The smallest `r >= 0` with `<gamma, p + r q> = 0`.
    pub annihilating_exponent: usize,
    /// `r + 2`.
    pub dimension: usize,
    /// `r + 1`.
    pub nilpotency_class: usize,
    /// `D^q_gamma, D^p_beta, D^(p+q)_beta, ..., D^(p+rq)_beta`.
    pub basis: Vec<HomogeneousDerivation>,
}

/// Builds the explicit two-generator basis; errors name the failed hypothesis.
pub fn two_generator_algebra(
    q: &LatticeVector,
    gamma: &RationalVector,
    p: &LatticeVector,
    beta: &RationalVector,
) -> Result<TwoGeneratorAlgebra> {
    if gamma.is_zero() || beta.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !p.is_nonnegative() || !q.is_nonnegative() {
        return Err(Error::NegativeExponent);
    }
    if !beta.pairing(q)?.is_zero() {
        return Err(Error::SecondPairingNonzero);
    }
    if p == q && gamma.is_proportional_to(beta)? {
        return Err(Error::ProportionalGenerators);
    }
    let r = find_r(gamma, q, p)?.ok_or(Error::NoAnnihilatingExponent)?;
    let r = r.to_usize().ok_or(Error::ExponentTooLarge)?;

    let mut basis = vec![
        HomogeneousDerivation::new(q.clone(), gamma.clone())?,
        HomogeneousDerivation::new(p.clone(), beta.clone())?,
    ];
    let mut degree = p.clone();
    for _ in 0..r {
        degree = degree.checked_add(q)?;
        basis.push(HomogeneousDerivation::new(degree.clone(), beta.clone())?);
    }

    Ok(TwoGeneratorAlgebra {
        annihilating_exponent: r,
        dimension: r + 2,
        nilpotency_class: r + 1,
        basis,
    })
}

/// A chain realizing a model filiform structure: `[X_1, X_i] = X_(i+1)` for
/// `1 < i < m`, all other brackets zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiliformChain {
    pub elements: Vec<HomogeneousDerivation>,
}

/// Searches for a model filiform chain among the stored basis elements (as
/// `X_1` and `X_2` candidates; the rest of the chain is generated by
/// bracketing, so scalars come out right by construction). Sound but not
/// complete: candidates are basis elements, not arbitrary combinations.
pub fn model_filiform(result: &ClosureResult) -> Result<Option<FiliformChain>> {
    let alg = result.closed().ok_or(Error::NotClosed)?;
    let dim = alg.basis.total_dim();
    if dim < 3 {
        return Err(Error::FiliformDimension { dim });
    }
    let els = alg.basis.elements();
    for x1 in 0..dim {
        'candidate: for x2 in 0..dim {
            if x1 == x2 {
                continue;
            }
            let mut chain = vec![els[x1].clone(), els[x2].clone()];
            while chain.len() < dim {
                let last = chain.last().expect("chain is nonempty");
                match chain[0].bracket(last)? {
                    Some(next) => chain.push(next),
                    None => continue 'candidate,
                }
            }
            let last = chain.last().expect("chain is nonempty");
            if chain[0].bracket(last)?.is_some() {
                continue; // chain does not terminate within the dimension
            }
            let mut span = GradedBasis::new();
            if !chain.iter().all(|d| span.insert(d)) {
                continue; // linearly dependent chain
            }
            for i in 1..dim {
                for j in (i + 1)..dim {
                    if chain[i].bracket(&chain[j])?.is_some() {
                        continue 'candidate;
                    }
                }
            }
            return Ok(Some(FiliformChain { elements: chain }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::{LatticeVector, RationalVector};

    fn lv(entries: &[i64]) -> LatticeVector {
        LatticeVector::from_i64(entries)
    }

    fn rv(entries: &[i64]) -> RationalVector {
        RationalVector::from_i64(entries)
    }

    fn delta(p: &[i64], beta: &[i64]) -> HomogeneousDerivation {
        HomogeneousDerivation::delta(&lv(p), &rv(beta)).unwrap()
    }

    fn nabla(var: usize, a: &[i64]) -> HomogeneousDerivation {
        HomogeneousDerivation::nabla(var, &lv(a)).unwrap()
    }

    fn rat(v: i64) -> Rat {
        Rat::from_integer(Int::from(v))
    }

    /// x1^2 d1 - x1 x2 d2 and x2^2 d2: closes at dimension 3.
    fn heisenberg_pair() -> Vec<HomogeneousDerivation> {
        vec![delta(&[1, 0], &[1, -1]), delta(&[0, 1], &[0, 1])]
    }

    /// x1^2 d1 - 2 x1 x2 d2 and x2^2 d2: closes at dimension 4.
    fn dim4_pair() -> Vec<HomogeneousDerivation> {
        vec![delta(&[1, 0], &[1, -2]), delta(&[0, 1], &[0, 1])]
    }

    #[test]
    fn close_heisenberg_pair() {
        let result = close(&heisenberg_pair(), 100, 10_000).unwrap();
        let alg = result.closed().expect("closes");
        assert_eq!(alg.basis.total_dim(), 3);
        let degrees: Vec<_> = alg.basis.degrees().cloned().collect();
        assert_eq!(degrees, vec![lv(&[0, 1]), lv(&[1, 0]), lv(&[1, 1])]);
        let top = alg.basis.component(&lv(&[1, 1])).unwrap();
        assert_eq!(top.rows(), &[rv(&[0, 1])]);
        assert_eq!(alg.generations, 1);
        assert!(alg.verify().unwrap());
        assert!(alg.basis.respects_polynomial_grading());
    }

    #[test]
    fn close_dim4_pair() {
        let result = close(&dim4_pair(), 100, 10_000).unwrap();
        let alg = result.closed().expect("closes");
        assert_eq!(alg.basis.total_dim(), 4);
        let top = alg.basis.component(&lv(&[2, 1])).unwrap();
        assert_eq!(top.rows(), &[rv(&[0, 1])]);
        assert_eq!(alg.generations, 2);
    }

    #[test]
    fn close_infinite_pair_trips_cap() {
        // x2^2 d1 and x1 d2 generate an infinite-dimensional algebra.
        let gens = vec![nabla(0, &[0, 2]), nabla(1, &[1, 0])];
        let result = close(&gens, 20, 10_000).unwrap();
        assert!(matches!(result, ClosureResult::CapExceeded { .. }));
    }

    #[test]
    fn close_empty_set() {
        let result = close(&[], 100, 10_000).unwrap();
        let alg = result.closed().unwrap();
        assert_eq!(alg.basis.total_dim(), 0);
        assert_eq!(alg.generations, 0);
        let series = series_analysis(&result).unwrap();
        assert_eq!(series.nilpotency_class, Some(0));
    }

    #[test]
    fn close_cap_misconfiguration() {
        let gens = heisenberg_pair();
        assert_eq!(
            close(&gens, 0, 10_000),
            Err(Error::WeightCapBelowGenerators { max_weight: 0 })
        );
        assert_eq!(
            close(&gens, 100, 1),
            Err(Error::ElementCapBelowGenerators {
                max_elements: 1,
                generators: 2,
            })
        );
    }

    #[test]
    fn structure_constants_heisenberg() {
        // Canonical basis: b0 at (0,1), b1 at (1,0), b2 at (1,1).
        let result = close(&heisenberg_pair(), 100, 10_000).unwrap();
        let sc = structure_constants(&result).unwrap();
        assert_eq!(sc.dim(), 3);
        assert_eq!(sc.bracket_entry(0, 1), vec![(2, rat(1))]);
        assert_eq!(sc.bracket_entry(1, 0), vec![(2, rat(-1))]);
        assert_eq!(sc.bracket_entry(0, 2), vec![]);
        assert_eq!(sc.bracket_entry(1, 2), vec![]);
    }

    #[test]
    fn structure_constants_single_generator() {
        let result = close(&[delta(&[1, 0], &[1, 0])], 100, 10_000).unwrap();
        let sc = structure_constants(&result).unwrap();
        assert_eq!(sc.dim(), 1);
        assert_eq!(sc.nonzero_entries().count(), 0);
    }

    #[test]
    fn structure_constants_need_closed_result() {
        let gens = vec![nabla(0, &[0, 2]), nabla(1, &[1, 0])];
        let result = close(&gens, 20, 10_000).unwrap();
        assert_eq!(structure_constants(&result), Err(Error::NotClosed));
        assert_eq!(series_analysis(&result), Err(Error::NotClosed));
        assert_eq!(model_filiform(&result), Err(Error::NotClosed));
    }

    #[test]
    fn sl2_structure() {
        // x2 d1 and x1 d2 close to a three-dimensional simple algebra.
        let gens = vec![nabla(0, &[0, 1]), nabla(1, &[1, 0])];
        let result = close(&gens, 100, 10_000).unwrap();
        let alg = result.closed().unwrap();
        assert_eq!(alg.basis.total_dim(), 3);

        // Canonical basis: b0 = x2 d1, b1 = x1 d1 - x2 d2, b2 = x1 d2.
        let sc = &alg.constants;
        assert_eq!(sc.bracket_entry(0, 1), vec![(0, rat(2))]);
        assert_eq!(sc.bracket_entry(0, 2), vec![(1, rat(-1))]);
        assert_eq!(sc.bracket_entry(1, 2), vec![(2, rat(2))]);

        let series = series_analysis(&result).unwrap();
        assert_eq!(series.lower_central_dims, vec![3, 3]);
        assert_eq!(series.nilpotency_class, None);
        assert!(!series.solvable);

        assert_eq!(model_filiform(&result).unwrap(), None);
    }

    #[test]
    fn series_dim4_example() {
        let result = close(&dim4_pair(), 100, 10_000).unwrap();
        let series = series_analysis(&result).unwrap();
        assert_eq!(series.lower_central_dims, vec![4, 2, 1, 0]);
        assert_eq!(series.nilpotency_class, Some(3));
        assert!(series.solvable);
        assert_eq!(series.derived_dims, vec![4, 2, 0]);
    }

    #[test]
    fn series_abelian_pair() {
        let gens = vec![delta(&[0, 1], &[1, 0]), delta(&[0, 2], &[1, 0])];
        let result = close(&gens, 100, 10_000).unwrap();
        let series = series_analysis(&result).unwrap();
        assert_eq!(series.lower_central_dims, vec![2, 0]);
        assert_eq!(series.nilpotency_class, Some(1));
        assert!(series.solvable);
    }

    #[test]
    fn ad_power_order_one_is_the_bracket() {
        let (q, gamma) = (lv(&[1, 0]), rv(&[1, -1]));
        let (p, beta) = (lv(&[0, 1]), rv(&[0, 1]));
        let one = ad_power(&q, &gamma, &p, &beta, 1).unwrap();
        assert_eq!(one.scalar, Rat::one());
        let d_q = delta(&[1, 0], &[1, -1]);
        let d_p = delta(&[0, 1], &[0, 1]);
        let direct = d_q.bracket(&d_p).unwrap().unwrap();
        assert_eq!(one.to_derivation().unwrap(), direct);
    }

    #[test]
    fn ad_power_matches_dim4_example() {
        // q = (1,0), gamma = (1,-2), p = (0,1), beta = (0,1), d = 2:
        // scalar -2, omega = -beta, i.e. 2 x1^2 x2^2 d2.
        let out = ad_power(&lv(&[1, 0]), &rv(&[1, -2]), &lv(&[0, 1]), &rv(&[0, 1]), 2).unwrap();
        assert_eq!(out.scalar, rat(-2));
        assert_eq!(out.degree, lv(&[2, 1]));
        assert_eq!(out.coeffs, rv(&[0, -1]));
        assert_eq!(out.to_derivation().unwrap(), delta(&[2, 1], &[0, 2]));
    }

    #[test]
    fn ad_power_zero_scalar() {
        // <gamma, p> = 0 makes s_3 vanish.
        let out = ad_power(&lv(&[1, 0]), &rv(&[0, 1]), &lv(&[1, 0]), &rv(&[1, 0]), 3).unwrap();
        assert!(out.scalar.is_zero());
        assert!(out.is_zero());
        assert_eq!(out.to_derivation(), None);
    }

    #[test]
    fn ad_power_rejects_zero_order() {
        assert_eq!(
            ad_power(&lv(&[1]), &rv(&[1]), &lv(&[1]), &rv(&[1]), 0),
            Err(Error::AdPowerOrder)
        );
    }

    #[test]
    fn ad_power_equals_iterated_bracket() {
        let (q, gamma) = (lv(&[1, 1]), rv(&[2, -1]));
        let (p, beta) = (lv(&[1, 4]), rv(&[1, -1]));
        let d_q = HomogeneousDerivation::new(q.clone(), gamma.clone()).unwrap();
        let mut iterated = Some(HomogeneousDerivation::new(p.clone(), beta.clone()).unwrap());
        for d in 1..=6u32 {
            iterated = match &iterated {
                Some(e) => d_q.bracket(e).unwrap(),
                None => None,
            };
            let closed_form = ad_power(&q, &gamma, &p, &beta, d).unwrap();
            assert_eq!(closed_form.to_derivation(), iterated, "order {d}");
        }
    }

    #[test]
    fn two_generator_heisenberg() {
        let out =
            two_generator_algebra(&lv(&[1, 0]), &rv(&[1, -1]), &lv(&[0, 1]), &rv(&[0, 1])).unwrap();
        assert_eq!(out.annihilating_exponent, 1);
        assert_eq!(out.dimension, 3);
        assert_eq!(out.nilpotency_class, 2);
        assert_eq!(
            out.basis,
            vec![
                delta(&[1, 0], &[1, -1]),
                delta(&[0, 1], &[0, 1]),
                delta(&[1, 1], &[0, 1]),
            ]
        );
    }

    #[test]
    fn two_generator_family_case() {
        // q = (1,1), gamma = (2,-1), p = (m, 2m+l), beta = (1,-1) with
        // m = 1, l = 3: dimension 5, class 4.
        let out = two_generator_algebra(&lv(&[1, 1]), &rv(&[2, -1]), &lv(&[1, 5]), &rv(&[1, -1]))
            .unwrap();
        assert_eq!(out.annihilating_exponent, 3);
        assert_eq!(out.dimension, 5);
        assert_eq!(out.nilpotency_class, 4);
    }

    #[test]
    fn two_generator_abelian_case() {
        // <gamma, p> = 0 as well: r = 0, dimension 2, class 1.
        let out =
            two_generator_algebra(&lv(&[0, 1]), &rv(&[1, 0]), &lv(&[0, 2]), &rv(&[1, 0])).unwrap();
        assert_eq!(out.annihilating_exponent, 0);
        assert_eq!(out.dimension, 2);
        assert_eq!(out.nilpotency_class, 1);
    }

    #[test]
    fn two_generator_hypothesis_failures() {
        // <beta, q> != 0.
        assert_eq!(
            two_generator_algebra(&lv(&[1, 0]), &rv(&[1, -1]), &lv(&[0, 1]), &rv(&[1, 1])),
            Err(Error::SecondPairingNonzero)
        );
        // No annihilating exponent: <gamma, p> != 0 while <gamma, q> = 0.
        assert_eq!(
            two_generator_algebra(&lv(&[0, 1]), &rv(&[1, 0]), &lv(&[1, 0]), &rv(&[1, 0])),
            Err(Error::NoAnnihilatingExponent)
        );
        // Proportional generators.
        assert_eq!(
            two_generator_algebra(&lv(&[0, 1]), &rv(&[2, 0]), &lv(&[0, 1]), &rv(&[1, 0])),
            Err(Error::ProportionalGenerators)
        );
    }

    #[test]
    fn two_generator_agrees_with_close() {
        let out =
            two_generator_algebra(&lv(&[1, 0]), &rv(&[1, -2]), &lv(&[0, 1]), &rv(&[0, 1])).unwrap();
        let result = close(&out.basis[..2], 100, 10_000).unwrap();
        let alg = result.closed().unwrap();
        assert_eq!(alg.basis.total_dim(), out.dimension);
        let mut predicted = GradedBasis::new();
        for b in &out.basis {
            assert!(predicted.insert(b));
        }
        assert_eq!(predicted, alg.basis);
    }

    #[test]
    fn filiform_heisenberg_and_dim4() {
        let result = close(&heisenberg_pair(), 100, 10_000).unwrap();
        let chain = model_filiform(&result).unwrap().expect("filiform");
        assert_eq!(chain.elements.len(), 3);

        let result = close(&dim4_pair(), 100, 10_000).unwrap();
        let chain = model_filiform(&result).unwrap().expect("filiform");
        assert_eq!(chain.elements.len(), 4);
    }

    #[test]
    fn filiform_needs_dimension_three() {
        let result = close(&[delta(&[1, 0], &[1, 0])], 100, 10_000).unwrap();
        assert_eq!(
            model_filiform(&result),
            Err(Error::FiliformDimension { dim: 1 })
        );
    }

    #[test]
    fn close_is_permutation_and_scale_invariant() {
        let gens = dim4_pair();
        let reference = close(&gens, 100, 10_000).unwrap();
        let swapped: Vec<_> = gens.iter().rev().cloned().collect();
        let scaled: Vec<_> = gens
            .iter()
            .map(|g| g.scaled(&Rat::new(Int::from(-3), Int::from(7))).unwrap())
            .collect();
        let from_swapped = close(&swapped, 100, 10_000).unwrap();
        let from_scaled = close(&scaled, 100, 10_000).unwrap();
        let b0 = &reference.closed().unwrap().basis;
        assert_eq!(b0, &from_swapped.closed().unwrap().basis);
        assert_eq!(b0, &from_scaled.closed().unwrap().basis);
    }
}
