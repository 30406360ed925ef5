//! Nonexistence and existence bounds for totally real immersions `M^n -> C^N`
//! and independent mappings `M^n -> C^N`.
//!
//! Nonexistence comes from Chern classes:
//!
//! * A totally real immersion into `C^N` gives a complex bundle `Q` of rank
//!   `N - n` with `(C (x) TM) + Q` trivial, so `c(Q) = c(C (x) TM)^{-1}`. If the
//!   top nonzero component of that inverse sits in index `r`, then
//!   `N - n >= r`.
//! * An independent mapping to `C^N` splits `C (x) TM = K + N` trivial lines,
//!   so `c(K) = c(C (x) TM)` and `n - N >= r` for the top index `r` of
//!   `c(C (x) TM)`.
//!
//! Existence comes from a fixed list of rules; each bound records the rule
//! that produced it.

use serde::Serialize;

use crate::catalog::{complexified_tangent_chern, BlockKind, CatalogError, ManifoldProduct};
use crate::ring::{GradedClass, RingError};
use crate::transversality::{max_independent_count, min_target_tri};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Generic totally real immersion into `C^N`, `N >= floor(3n/2)`.
    ImmersionTransversality,
    /// Generic independent mapping to `C^N`, `N <= floor((n+1)/2)`.
    IndependentTransversality,
    /// Orientable closed `(4k+2)`-manifold: immersion into `C^{6k+2}`.
    OrientableImmersion4kPlus2,
    /// Orientable closed `4k`-manifold with `c_{2k}(Q) = 0`: immersion into `C^{6k-1}`.
    VanishingDualPontryagin,
    /// Orientable closed `(4k+2)`-manifold: independent mapping to `C^{2k+2}`.
    OrientableIndependent4kPlus2,
    /// Orientable closed `4k`-manifold with `c_{2k}(C (x) TM) = 0`: independent mapping to `C^{2k+1}`.
    VanishingTopPontryagin,
    /// Trivial tangent bundle: both problems are solved with `N = n`.
    Parallelizable,
    /// Closed orientable 3-manifolds are parallelizable.
    OrientableThreeManifold,
    /// Nonzero top component of `c(Q)` bounds `rank Q` from below.
    ComplementChernClass,
    /// Nonzero top component of `c(K) = c(C (x) TM)` bounds `rank K` from below.
    KernelChernClass,
}

impl Rule {
    pub fn citation(self) -> &'static str {
        match self {
            Rule::ImmersionTransversality => {
                "transversality: every n-manifold has a totally real immersion into C^N for N >= floor(3n/2)"
            }
            Rule::IndependentTransversality => {
                "transversality: every n-manifold has an independent mapping to C^N for N <= floor((n+1)/2)"
            }
            Rule::OrientableImmersion4kPlus2 => {
                "every orientable closed (4k+2)-manifold has a totally real immersion into C^(6k+2)"
            }
            Rule::VanishingDualPontryagin => {
                "an orientable closed 4k-manifold with vanishing top dual Pontryagin class has a totally real immersion into C^(6k-1)"
            }
            Rule::OrientableIndependent4kPlus2 => {
                "every orientable closed (4k+2)-manifold has an independent mapping to C^(2k+2)"
            }
            Rule::VanishingTopPontryagin => {
                "an orientable closed 4k-manifold with vanishing top Pontryagin class has an independent mapping to C^(2k+1)"
            }
            Rule::Parallelizable => {
                "a parallelizable n-manifold has a totally real immersion into C^n, which is also an independent mapping"
            }
            Rule::OrientableThreeManifold => {
                "every closed orientable 3-manifold is parallelizable"
            }
            Rule::ComplementChernClass => {
                "C(x)TM + Q trivial of rank N forces rank Q = N - n >= top nonzero Chern index of c(C(x)TM)^-1"
            }
            Rule::KernelChernClass => {
                "C(x)TM = K + N trivial lines forces rank K = n - N >= top nonzero Chern index of c(C(x)TM)"
            }
        }
    }

    /// Lower is more specific; used to break ties between existence rules.
    fn specificity(self) -> u8 {
        match self {
            Rule::Parallelizable => 0,
            Rule::OrientableThreeManifold => 1,
            Rule::OrientableImmersion4kPlus2
            | Rule::VanishingDualPontryagin
            | Rule::OrientableIndependent4kPlus2
            | Rule::VanishingTopPontryagin => 2,
            Rule::ImmersionTransversality | Rule::IndependentTransversality => 3,
            Rule::ComplementChernClass | Rule::KernelChernClass => 4,
        }
    }
}

/// A target dimension together with the rule that produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundWithCitation {
    pub value: u32,
    pub rule: Rule,
    pub citation: &'static str,
}

impl BoundWithCitation {
    fn new(value: u32, rule: Rule) -> Self {
        Self {
            value,
            rule,
            citation: rule.citation(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub expression: String,
    pub dimension: u32,
    pub orientable: bool,
    pub parallelizable: bool,
    /// `c(C (x) TM)`.
    pub chern_class: GradedClass,
    /// `c(Q) = c(C (x) TM)^{-1}`, whose even components are the dual
    /// Pontryagin classes up to sign.
    pub inverse_class: GradedClass,
    pub tri_min_n: BoundWithCitation,
    pub tri_exist_n: BoundWithCitation,
    pub tri_optimal: bool,
    pub indep_max_n: BoundWithCitation,
    pub indep_exist_n: BoundWithCitation,
    pub indep_optimal: bool,
}

fn top_index(class: &GradedClass) -> Result<u32, RingError> {
    class.top_nonzero_chern_index()
}

fn tri_min_from(n: u32, inverse: &GradedClass) -> Result<BoundWithCitation, RingError> {
    let r = top_index(inverse)?;
    // An immersion into C^N = R^{2N} also needs 2N >= n.
    let value = (n + r).max(n.div_ceil(2));
    Ok(BoundWithCitation::new(value, Rule::ComplementChernClass))
}

fn indep_max_from(n: u32, chern: &GradedClass) -> Result<BoundWithCitation, RingError> {
    let r = top_index(chern)?;
    Ok(BoundWithCitation::new(n.saturating_sub(r), Rule::KernelChernClass))
}

fn pick(candidates: Vec<BoundWithCitation>, prefer_larger: bool) -> BoundWithCitation {
    candidates
        .into_iter()
        .min_by(|a, b| {
            let by_value = if prefer_larger {
                b.value.cmp(&a.value)
            } else {
                a.value.cmp(&b.value)
            };
            by_value.then(a.rule.specificity().cmp(&b.rule.specificity()))
        })
        .expect("transversality always applies")
}

fn tri_exist_from(manifold: &ManifoldProduct, inverse: &GradedClass) -> BoundWithCitation {
    let n = manifold.dimension();
    let mut candidates = vec![BoundWithCitation::new(min_target_tri(n), Rule::ImmersionTransversality)];
    if manifold.parallelizable() {
        candidates.push(BoundWithCitation::new(n, Rule::Parallelizable));
    }
    if manifold.orientable() {
        if n == 3 {
            candidates.push(BoundWithCitation::new(3, Rule::OrientableThreeManifold));
        }
        if n % 4 == 2 {
            let k = n / 4;
            candidates.push(BoundWithCitation::new(6 * k + 2, Rule::OrientableImmersion4kPlus2));
        }
        if n.is_multiple_of(4) {
            let k = n / 4;
            if inverse.graded_component(2 * k).is_zero() {
                candidates.push(BoundWithCitation::new(6 * k - 1, Rule::VanishingDualPontryagin));
            }
        }
    }
    pick(candidates, false)
}

fn indep_exist_from(manifold: &ManifoldProduct, chern: &GradedClass) -> BoundWithCitation {
    let n = manifold.dimension();
    let mut candidates = vec![BoundWithCitation::new(
        max_independent_count(n),
        Rule::IndependentTransversality,
    )];
    if manifold.parallelizable() {
        candidates.push(BoundWithCitation::new(n, Rule::Parallelizable));
    }
    if manifold.orientable() {
        if n == 3 {
            candidates.push(BoundWithCitation::new(3, Rule::OrientableThreeManifold));
        }
        if n % 4 == 2 {
            let k = n / 4;
            candidates.push(BoundWithCitation::new(2 * k + 2, Rule::OrientableIndependent4kPlus2));
        }
        if n.is_multiple_of(4) {
            let k = n / 4;
            if chern.graded_component(2 * k).is_zero() {
                candidates.push(BoundWithCitation::new(2 * k + 1, Rule::VanishingTopPontryagin));
            }
        }
    }
    pick(candidates, true)
}

/// Smallest `N` not excluded by the complement-bundle obstruction.
pub fn tri_nonexistence_bound(manifold: &ManifoldProduct) -> Result<BoundWithCitation, RingError> {
    let inverse = complexified_tangent_chern(manifold).invert()?;
    tri_min_from(manifold.dimension(), &inverse)
}

/// Smallest `N` for which some existence rule guarantees a totally real
/// immersion into `C^N`.
pub fn tri_existence_bound(manifold: &ManifoldProduct) -> Result<BoundWithCitation, RingError> {
    let inverse = complexified_tangent_chern(manifold).invert()?;
    Ok(tri_exist_from(manifold, &inverse))
}

/// Largest `N` not excluded by the kernel-bundle obstruction.
pub fn indep_nonexistence_bound(manifold: &ManifoldProduct) -> Result<BoundWithCitation, RingError> {
    indep_max_from(manifold.dimension(), manifold.chern_class())
}

/// Largest `N` for which some existence rule guarantees an independent
/// mapping to `C^N`.
pub fn indep_existence_bound(manifold: &ManifoldProduct) -> BoundWithCitation {
    indep_exist_from(manifold, manifold.chern_class())
}

pub fn analyze(manifold: &ManifoldProduct) -> Result<ObstructionReport, RingError> {
    let n = manifold.dimension();
    let chern_class = complexified_tangent_chern(manifold);
    let inverse_class = chern_class.invert()?;
    let tri_min_n = tri_min_from(n, &inverse_class)?;
    let tri_exist_n = tri_exist_from(manifold, &inverse_class);
    let indep_max_n = indep_max_from(n, &chern_class)?;
    let indep_exist_n = indep_exist_from(manifold, &chern_class);
    Ok(ObstructionReport {
        expression: manifold.expression(),
        dimension: n,
        orientable: manifold.orientable(),
        parallelizable: manifold.parallelizable(),
        tri_optimal: tri_min_n.value == tri_exist_n.value,
        indep_optimal: indep_max_n.value == indep_exist_n.value,
        chern_class,
        inverse_class,
        tri_min_n,
        tri_exist_n,
        indep_max_n,
        indep_exist_n,
    })
}

/// The example families used to show optimality, indexed by `k >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(CP2)^k`, dimension `4k`.
    M4k,
    /// `(CP2)^k x S1`, dimension `4k+1`.
    M4k1,
    /// `(CP2)^k x RP2`, dimension `4k+2`.
    M4k2,
    /// `(CP2)^k x RP2 x S1`, dimension `4k+3`.
    M4k3,
    /// `(CP2)^k x S2`, orientable of dimension `4k+2`.
    OrientS2,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::M4k,
        Family::M4k1,
        Family::M4k2,
        Family::M4k3,
        Family::OrientS2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::M4k => "M4k",
            Family::M4k1 => "M4k1",
            Family::M4k2 => "M4k2",
            Family::M4k3 => "M4k3",
            Family::OrientS2 => "OrientS2",
        }
    }

    pub fn kinds(self, k: u32) -> Vec<BlockKind> {
        let mut kinds = vec![BlockKind::ComplexProjective(2); k as usize];
        match self {
            Family::M4k => {}
            Family::M4k1 => kinds.push(BlockKind::Circle),
            Family::M4k2 => kinds.push(BlockKind::RealProjective(2)),
            Family::M4k3 => kinds.extend([BlockKind::RealProjective(2), BlockKind::Circle]),
            Family::OrientS2 => kinds.push(BlockKind::Sphere(2)),
        }
        kinds
    }

    pub fn manifold(self, k: u32) -> Result<ManifoldProduct, CatalogError> {
        crate::catalog::product_of_kinds(&self.kinds(k))
    }
}
