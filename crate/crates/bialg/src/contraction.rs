//! Diagonal contractions of Lie algebras, bialgebras, r-matrices, and
//! classical doubles.
//!
//! A contraction rescales each generator by an integer power of a
//! parameter `eps` and takes `eps -> 0`. On structure constants this is
//! pure exponent arithmetic: the component `c^k_{ij}` picks up
//! `eps^(m_i + m_j - m_k)` and survives, vanishes, or diverges according
//! to the sign. Non-negative exponent maps are generalized Inonu-Wigner
//! contractions; negative exponents give Doebner-Melsheimer maps, which
//! are what duality preservation on the double forces.
//!
//! On the double the same machinery yields the double-preserving
//! conditions (an exponent-difference constraint per index pair plus
//! convergence inequalities), their integer solution families, and the
//! fundamental (`f0`), coboundary (`c0`) and renormalization (`t0`)
//! contraction constants.

use crate::bialgebra::{cocommutator_from_rmatrix, LieBialgebra, RMatrix};
use crate::double::{build_double, DoubleAlgebra, InvalidBialgebra};
use crate::scalar::Scalar;
use crate::tensor::{CocommutatorTensor, CommutatorTensor};
use std::collections::BTreeSet;
use thiserror::Error;

/// One integer exponent per generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentMap(pub Vec<i64>);

impl ExponentMap {
    pub fn uniform(dim: usize, value: i64) -> Self {
        ExponentMap(vec![value; dim])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based accessor, matching tensor indices.
    pub fn at(&self, i: usize) -> i64 {
        self.0[i - 1]
    }

    pub fn concat(&self, other: &ExponentMap) -> ExponentMap {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ExponentMap(v)
    }

    pub fn negated(&self) -> ExponentMap {
        ExponentMap(self.0.iter().map(|x| -x).collect())
    }

    pub fn render(&self) -> String {
        let body = self
            .0
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        format!("({body})")
    }
}

#[derive(Debug, Error)]
pub enum ContractionError {
    #[error("exponent map has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exponent map is not a contraction of the algebra: divergent components {0:?}")]
    DivergentBase(Vec<(usize, usize, usize)>),
    #[error("r-matrix does not generate the declared cocommutator")]
    RMatrixMismatch,
    #[error(transparent)]
    InvalidBialgebra(#[from] InvalidBialgebra),
}

/// Fate of one canonical tensor component under the `eps -> 0` limit.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComponentStatus {
    /// Net exponent zero: the component survives unchanged.
    Kept(Scalar),
    /// Positive exponent: the component goes to zero.
    Vanished,
    /// Negative exponent on a nonzero coefficient: no limit exists.
    Divergent,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractedComponent {
    pub index: (usize, usize, usize),
    pub exponent: i64,
    pub status: ComponentStatus,
}

/// Per-component record of a contraction. Divergence is data, not
/// failure: callers inspect the statuses and decide.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractionOutcome {
    pub dim: usize,
    pub components: Vec<ContractedComponent>,
}

impl ContractionOutcome {
    pub fn is_convergent(&self) -> bool {
        !self
            .components
            .iter()
            .any(|c| c.status == ComponentStatus::Divergent)
    }

    pub fn divergent_indices(&self) -> Vec<(usize, usize, usize)> {
        self.components
            .iter()
            .filter(|c| c.status == ComponentStatus::Divergent)
            .map(|c| c.index)
            .collect()
    }

    /// The contracted bracket tensor, when no component diverges.
    pub fn commutator(&self) -> Option<CommutatorTensor> {
        if !self.is_convergent() {
            return None;
        }
        let mut t = CommutatorTensor::new(self.dim);
        for comp in &self.components {
            if let ComponentStatus::Kept(v) = &comp.status {
                let (i, j, k) = comp.index;
                t.set(i, j, k, v.clone()).expect("indices in range");
            }
        }
        Some(t)
    }

    /// The contracted cocommutator tensor (same storage layout).
    pub fn cocommutator(&self) -> Option<CocommutatorTensor> {
        if !self.is_convergent() {
            return None;
        }
        let mut t = CocommutatorTensor::new(self.dim);
        for comp in &self.components {
            if let ComponentStatus::Kept(v) = &comp.status {
                let (i, j, k) = comp.index;
                t.set(i, j, k, v.clone()).expect("indices in range");
            }
        }
        Some(t)
    }
}

fn classify(exponent: i64, value: &Scalar) -> ComponentStatus {
    match exponent.cmp(&0) {
        std::cmp::Ordering::Equal => ComponentStatus::Kept(value.clone()),
        std::cmp::Ordering::Greater => ComponentStatus::Vanished,
        std::cmp::Ordering::Less => ComponentStatus::Divergent,
    }
}

fn check_len(map: &ExponentMap, dim: usize) -> Result<(), ContractionError> {
    if map.len() != dim {
        Err(ContractionError::LengthMismatch {
            expected: dim,
            got: map.len(),
        })
    } else {
        Ok(())
    }
}

/// Contract a bracket tensor: component `c^k_{ij}` carries exponent
/// `m_i + m_j - m_k`. A convergent outcome is again a Lie algebra.
pub fn contract_structure(
    c: &CommutatorTensor,
    m: &ExponentMap,
) -> Result<ContractionOutcome, ContractionError> {
    check_len(m, c.dim())?;
    let components = c
        .iter()
        .map(|(i, j, k, v)| {
            let exponent = m.at(i) + m.at(j) - m.at(k);
            ContractedComponent {
                index: (i, j, k),
                exponent,
                status: classify(exponent, v),
            }
        })
        .collect();
    Ok(ContractionOutcome {
        dim: c.dim(),
        components,
    })
}

/// Contract a cocommutator tensor with dual exponents `n`: component
/// `f^{ij}_k` carries exponent `n_i + n_j - n_k` (plus an optional
/// renormalization shift).
pub fn contract_cocommutator(
    f: &CocommutatorTensor,
    n: &ExponentMap,
    shift: i64,
) -> Result<ContractionOutcome, ContractionError> {
    check_len(n, f.dim())?;
    let components = f
        .iter()
        .map(|(i, j, k, v)| {
            let exponent = n.at(i) + n.at(j) - n.at(k) + shift;
            ContractedComponent {
                index: (i, j, k),
                exponent,
                status: classify(exponent, v),
            }
        })
        .collect();
    Ok(ContractionOutcome {
        dim: f.dim(),
        components,
    })
}

/// Which of the four block limit formulas produced a component of a
/// contracted double.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockFormula {
    /// `[X_i, X_j]`, exponent `m_i + m_j - m_k`.
    PrimalBracket,
    /// `[x^i, x^j]`, exponent `n_i + n_j - n_k`.
    DualBracket,
    /// Coadjoint part of `[x^i, X_j]`, exponent `n_i + m_j - n_k`.
    MixedCoadjoint,
    /// Back-action part of `[x^i, X_j]`, exponent `n_i + m_j - m_k`.
    MixedBackAction,
}

impl std::fmt::Display for BlockFormula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let label = match self {
            BlockFormula::PrimalBracket => "primal bracket",
            BlockFormula::DualBracket => "dual bracket",
            BlockFormula::MixedCoadjoint => "mixed coadjoint",
            BlockFormula::MixedBackAction => "mixed back-action",
        };
        f.write_str(label)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DoubleContraction {
    pub outcome: ContractionOutcome,
    /// Formula label per canonical component, aligned with
    /// `outcome.components`.
    pub formulas: Vec<BlockFormula>,
    pub base_dim: usize,
}

fn block_formula(base_dim: usize, index: (usize, usize, usize)) -> BlockFormula {
    let (i, j, k) = index;
    let primal = |x: usize| x <= base_dim;
    match (primal(i), primal(j)) {
        (true, true) => BlockFormula::PrimalBracket,
        (false, false) => BlockFormula::DualBracket,
        // canonical storage has i < j, so a mixed component is (primal, dual)
        _ => {
            if primal(k) {
                BlockFormula::MixedBackAction
            } else {
                BlockFormula::MixedCoadjoint
            }
        }
    }
}

/// Contract the full 2N double of a bialgebra with primal exponents `m`
/// and dual exponents `n`, reporting per component which limit formula
/// applies.
pub fn contract_double_blocks(
    b: &LieBialgebra,
    m: &ExponentMap,
    n: &ExponentMap,
) -> Result<DoubleContraction, ContractionError> {
    check_len(m, b.dim())?;
    check_len(n, b.dim())?;
    let d = build_double(b)?;
    let outcome = contract_structure(&d.c, &m.concat(n))?;
    let formulas = outcome
        .components
        .iter()
        .map(|c| block_formula(b.dim(), c.index))
        .collect();
    Ok(DoubleContraction {
        outcome,
        formulas,
        base_dim: b.dim(),
    })
}

/// Unordered index pairs whose exponent sums are tied together by a
/// nonzero tensor component. Any two of the three indices of a nonzero
/// component must satisfy the difference condition: the component appears
/// in several bracket blocks of the double, and equality of all its limit
/// exponents pins `m_i + n_i` to a common value across the triple.
fn constraint_pairs(b: &LieBialgebra) -> BTreeSet<(usize, usize)> {
    let mut pairs = BTreeSet::new();
    let mut add_triple = |i: usize, j: usize, k: usize| {
        for (a, b) in [(i, j), (i, k), (j, k)] {
            if a != b {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
    };
    for (i, j, k, _) in b.c.iter() {
        add_triple(i, j, k);
    }
    for (i, j, k, _) in b.f.iter() {
        add_triple(i, j, k);
    }
    pairs
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairViolation {
    pub pair: (usize, usize),
    /// `m_i - m_j`
    pub primal_difference: i64,
    /// `-(n_i - n_j)`
    pub dual_difference: i64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriadViolation {
    pub triad: (usize, usize, usize),
    pub exponent: i64,
}

/// Result of the double-preservation test: empty iff the contracted
/// double is again a classical double.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PreservationReport {
    /// Pairs breaking the difference condition `m_i - m_j = -(n_i - n_j)`.
    pub pair_violations: Vec<PairViolation>,
    /// Bracket triads with `m_i + m_j - m_k < 0`.
    pub primal_divergences: Vec<TriadViolation>,
    /// Cocommutator triads with `n_i + n_j - n_k < 0`.
    pub dual_divergences: Vec<TriadViolation>,
}

impl PreservationReport {
    pub fn is_empty(&self) -> bool {
        self.pair_violations.is_empty()
            && self.primal_divergences.is_empty()
            && self.dual_divergences.is_empty()
    }
}

/// Check the double-preserving conditions: the exponent-difference
/// condition on every constrained index pair, convergence of `m` on the
/// bracket, and convergence of `n` on the cocommutator.
pub fn check_double_preserving(
    b: &LieBialgebra,
    m: &ExponentMap,
    n: &ExponentMap,
) -> Result<PreservationReport, ContractionError> {
    check_len(m, b.dim())?;
    check_len(n, b.dim())?;
    let mut report = PreservationReport::default();
    for (i, j) in constraint_pairs(b) {
        let primal = m.at(i) - m.at(j);
        let dual = -(n.at(i) - n.at(j));
        if primal != dual {
            report.pair_violations.push(PairViolation {
                pair: (i, j),
                primal_difference: primal,
                dual_difference: dual,
            });
        }
    }
    for (i, j, k, _) in b.c.iter() {
        let e = m.at(i) + m.at(j) - m.at(k);
        if e < 0 {
            report.primal_divergences.push(TriadViolation {
                triad: (i, j, k),
                exponent: e,
            });
        }
    }
    for (i, j, k, _) in b.f.iter() {
        let e = n.at(i) + n.at(j) - n.at(k);
        if e < 0 {
            report.dual_divergences.push(TriadViolation {
                triad: (i, j, k),
                exponent: e,
            });
        }
    }
    Ok(report)
}

/// Lower bound on a component's shift, with the triad that forces it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftBound {
    pub component: usize,
    pub min: i64,
    pub triad: (usize, usize, usize),
}

/// Parametric family of dual exponent maps compatible with a given primal
/// contraction. The difference conditions force `n_i = -m_i + s_r` with
/// one free integer shift `s_r` per connected component of the pair
/// graph; the convergence inequalities become lower bounds on the shifts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExponentFamily {
    pub m: ExponentMap,
    /// Connected components of the pair graph, each sorted; singleton
    /// components are indices untouched by any nonzero tensor entry.
    pub components: Vec<Vec<usize>>,
    /// `n = base + shift`, componentwise; `base = -m`.
    pub base: ExponentMap,
    /// Effective lower bound per component, `None` when unconstrained.
    pub bounds: Vec<Option<i64>>,
    /// Individual inequality constraints, for reporting.
    pub constraints: Vec<ShiftBound>,
    /// A feasible member minimizing the shift vector: bounded components
    /// sit at their bound, free components at zero.
    pub witness: ExponentMap,
}

impl ExponentFamily {
    pub fn component_of(&self, index: usize) -> usize {
        self.components
            .iter()
            .position(|c| c.contains(&index))
            .expect("index in some component")
    }

    /// Membership test: `n` belongs to the family iff `n_i + m_i` is
    /// constant on every component and meets the component's bound.
    pub fn contains(&self, n: &ExponentMap) -> bool {
        if n.len() != self.base.len() {
            return false;
        }
        for (r, comp) in self.components.iter().enumerate() {
            let shift = n.at(comp[0]) - self.base.at(comp[0]);
            if comp.iter().any(|&i| n.at(i) - self.base.at(i) != shift) {
                return false;
            }
            if let Some(min) = self.bounds[r] {
                if shift < min {
                    return false;
                }
            }
        }
        true
    }

    /// Human-readable description, one Greek-free symbol per component,
    /// e.g. `n = (a, 1 + a, a), a >= 0`.
    pub fn render(&self) -> String {
        let symbols = ["a", "b", "c", "d", "e", "g", "h"];
        let symbol = |r: usize| -> String {
            symbols
                .get(r)
                .map(|s| s.to_string())
                .unwrap_or_else(|| format!("s{r}"))
        };
        let dims = self.base.len();
        let mut entries = Vec::with_capacity(dims);
        for i in 1..=dims {
            let r = self.component_of(i);
            let offset = self.base.at(i) + self.bounds[r].unwrap_or(0);
            let sym = symbol(r);
            entries.push(match offset.cmp(&0) {
                std::cmp::Ordering::Equal => sym,
                std::cmp::Ordering::Greater => format!("{offset} + {sym}"),
                std::cmp::Ordering::Less => format!("{} + {sym}", offset),
            });
        }
        let mut text = format!("n = ({})", entries.join(", "));
        for (r, bound) in self.bounds.iter().enumerate() {
            if bound.is_some() {
                text.push_str(&format!(", {} >= 0", symbol(r)));
            } else {
                text.push_str(&format!(", {} in Z", symbol(r)));
            }
        }
        text
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let root = self.find(self.0[x]);
            self.0[x] = root;
        }
        self.0[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Solve the double-preserving conditions for the dual exponents, given a
/// primal contraction `m` of the bracket.
pub fn solve_dual_exponents(
    b: &LieBialgebra,
    m: &ExponentMap,
) -> Result<ExponentFamily, ContractionError> {
    check_len(m, b.dim())?;
    let base_outcome = contract_structure(&b.c, m)?;
    if !base_outcome.is_convergent() {
        return Err(ContractionError::DivergentBase(
            base_outcome.divergent_indices(),
        ));
    }

    let dims = b.dim();
    let mut uf = UnionFind::new(dims);
    for (i, j) in constraint_pairs(b) {
        uf.union(i - 1, j - 1);
    }
    let mut roots: Vec<usize> = (0..dims).map(|i| uf.find(i)).collect();
    let mut component_ids: Vec<usize> = roots.clone();
    component_ids.sort_unstable();
    component_ids.dedup();
    let components: Vec<Vec<usize>> = component_ids
        .iter()
        .map(|&root| {
            (0..dims)
                .filter(|&i| roots[i] == root)
                .map(|i| i + 1)
                .collect()
        })
        .collect();
    // normalize roots to component positions
    for r in roots.iter_mut() {
        *r = component_ids.binary_search(r).unwrap();
    }

    let base = m.negated();
    let mut bounds: Vec<Option<i64>> = vec![None; components.len()];
    let mut constraints = Vec::new();
    for (i, j, k, _) in b.f.iter() {
        // n_i + n_j - n_k >= 0 with n = -m + s on one component
        // (the triple is pairwise connected) becomes s >= m_i + m_j - m_k.
        let r = roots[i - 1];
        debug_assert_eq!(r, roots[j - 1]);
        debug_assert_eq!(r, roots[k - 1]);
        let min = m.at(i) + m.at(j) - m.at(k);
        constraints.push(ShiftBound {
            component: r,
            min,
            triad: (i, j, k),
        });
        bounds[r] = Some(bounds[r].map_or(min, |cur: i64| cur.max(min)));
    }

    let mut witness = base.clone();
    for i in 1..=dims {
        if let Some(min) = bounds[roots[i - 1]] {
            witness.0[i - 1] += min;
        }
    }

    Ok(ExponentFamily {
        m: m.clone(),
        components,
        base,
        bounds,
        constraints,
        witness,
    })
}

/// A fundamental bicontraction: the minimal cocommutator renormalization
/// exponent `f0` together with the contracted bialgebra it produces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FundamentalBicontraction {
    pub f0: i64,
    pub contracted: LieBialgebra,
}

/// Compute the fundamental contraction constant
/// `f0 = max(0, max over nonzero f^{jk}_i of (m_j + m_k - m_i))`
/// and the contracted bialgebra at that renormalization.
pub fn fundamental_constant(
    b: &LieBialgebra,
    m: &ExponentMap,
) -> Result<FundamentalBicontraction, ContractionError> {
    check_len(m, b.dim())?;
    let base_outcome = contract_structure(&b.c, m)?;
    let Some(c_contracted) = base_outcome.commutator() else {
        return Err(ContractionError::DivergentBase(
            base_outcome.divergent_indices(),
        ));
    };
    let f0 = b
        .f
        .iter()
        .map(|(j, k, i, _)| m.at(j) + m.at(k) - m.at(i))
        .max()
        .unwrap_or(0)
        .max(0);
    let mut f_contracted = CocommutatorTensor::new(b.dim());
    for (j, k, i, v) in b.f.iter() {
        if m.at(j) + m.at(k) - m.at(i) == f0 {
            f_contracted.set(j, k, i, v.clone()).expect("in range");
        }
    }
    let mut contracted = LieBialgebra::new(
        format!("{}'", b.name),
        b.names.clone(),
        b.params.clone(),
        c_contracted,
        f_contracted,
    );
    contracted.dual_names = b.dual_names.clone();
    Ok(FundamentalBicontraction { f0, contracted })
}

/// A coboundary bicontraction: the minimal r-matrix renormalization
/// exponent `c0` with the contracted r-matrix. `f0 <= c0` always holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoboundaryBicontraction {
    pub c0: i64,
    pub rho_contracted: RMatrix,
}

/// Compute `c0 = max(0, max over nonzero rho^{ij} of (m_i + m_j))` and
/// the contracted r-matrix, keeping components that achieve the maximum.
/// Errors unless `rho` generates the declared cocommutator of `b`.
pub fn coboundary_constant(
    b: &LieBialgebra,
    rho: &RMatrix,
    m: &ExponentMap,
) -> Result<CoboundaryBicontraction, ContractionError> {
    check_len(m, b.dim())?;
    match cocommutator_from_rmatrix(&b.c, rho) {
        Ok(f) if f == b.f => {}
        _ => return Err(ContractionError::RMatrixMismatch),
    }
    let base_outcome = contract_structure(&b.c, m)?;
    if !base_outcome.is_convergent() {
        return Err(ContractionError::DivergentBase(
            base_outcome.divergent_indices(),
        ));
    }
    let c0 = rho
        .iter()
        .map(|(i, j, _)| m.at(i) + m.at(j))
        .max()
        .unwrap_or(0)
        .max(0);
    let mut rho_contracted = RMatrix::new(b.dim());
    for (i, j, v) in rho.iter() {
        if m.at(i) + m.at(j) == c0 {
            rho_contracted.set(i, j, v.clone());
        }
    }
    Ok(CoboundaryBicontraction {
        c0,
        rho_contracted,
    })
}

/// Componentwise `n_i + m_i`; the all-zero list means the canonical
/// pairing of the double survives the contraction.
pub fn pairing_exponent_defect(m: &ExponentMap, n: &ExponentMap) -> Vec<i64> {
    assert_eq!(m.len(), n.len(), "exponent maps must have equal length");
    m.0.iter().zip(&n.0).map(|(a, b)| a + b).collect()
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RenormalizedDualContraction {
    /// Minimal renormalization exponent with no divergence; equals the
    /// fundamental constant `f0`.
    pub t0: i64,
    /// Outcome of contracting `f` with `n = -m` shifted by the requested
    /// renormalization exponent.
    pub outcome: ContractionOutcome,
}

/// Duality-preserving contraction of the cocommutator: the pairing forces
/// `n = -m`, which generically diverges, so the components are
/// renormalized by an extra `eps^N`:
/// `f'^{ij}_k = lim eps^(-m_i - m_j + m_k + N) f^{ij}_k`.
pub fn renormalized_dual_contraction(
    b: &LieBialgebra,
    m: &ExponentMap,
    renorm: i64,
) -> Result<RenormalizedDualContraction, ContractionError> {
    check_len(m, b.dim())?;
    let base_outcome = contract_structure(&b.c, m)?;
    if !base_outcome.is_convergent() {
        return Err(ContractionError::DivergentBase(
            base_outcome.divergent_indices(),
        ));
    }
    let t0 = b
        .f
        .iter()
        .map(|(i, j, k, _)| m.at(i) + m.at(j) - m.at(k))
        .max()
        .unwrap_or(0)
        .max(0);
    let outcome = contract_cocommutator(&b.f, &m.negated(), renorm)?;
    Ok(RenormalizedDualContraction { t0, outcome })
}

fn contract_double_along(
    d: &DoubleAlgebra,
    base: LieBialgebra,
    m_value: i64,
    n_value: i64,
) -> DoubleAlgebra {
    let n = d.base_dim();
    let exponents = ExponentMap::uniform(n, m_value).concat(&ExponentMap::uniform(n, n_value));
    let outcome = contract_structure(&d.c, &exponents).expect("length matches");
    let c = outcome
        .commutator()
        .expect("uniform 0/1 exponent blocks never diverge");
    DoubleAlgebra {
        base,
        c,
        names: d.names.clone(),
    }
}

/// Classical limit as a contraction on the double: identity on the
/// primal block, first-order scaling on the dual. The dual block
/// abelianizes and the back-action disappears, leaving the double of the
/// same algebra with trivial cocommutator.
pub fn classical_limit(d: &DoubleAlgebra) -> DoubleAlgebra {
    let n = d.base_dim();
    let mut base = LieBialgebra::new(
        format!("climit({})", d.base.name),
        d.base.names.clone(),
        d.base.params.clone(),
        d.base.c.clone(),
        CocommutatorTensor::new(n),
    );
    base.dual_names = d.base.dual_names.clone();
    contract_double_along(d, base, 0, 1)
}

/// Classical limit on the dual: annihilates the bracket tensor, leaving
/// the double of a bialgebra structure on an abelian algebra.
pub fn dual_classical_limit(d: &DoubleAlgebra) -> DoubleAlgebra {
    let n = d.base_dim();
    let mut base = LieBialgebra::new(
        format!("dual-climit({})", d.base.name),
        d.base.names.clone(),
        d.base.params.clone(),
        CommutatorTensor::new(n),
        d.base.f.clone(),
    );
    base.dual_names = d.base.dual_names.clone();
    contract_double_along(d, base, 1, 0)
}
