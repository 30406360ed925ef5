//! Building-block manifolds and their products.
//!
//! Each block carries the total Chern class of its complexified tangent
//! bundle in its own small cohomology ring. A product renames the block
//! generators per factor instance (`a1, a2, ..., b1, ...`) and multiplies the
//! block classes together (Whitney formula for `T(M x N) = TM + TN`).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::ring::{Generator, GradedClass, RingError, RingPresentation};

/// Largest total real dimension the calculator accepts.
pub const MAX_DIMENSION: u32 = 64;

/// Largest number of cohomology generators in a product. Inversion cost grows
/// with the number of monomials, which is exponential in this count.
pub const MAX_GENERATORS: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unsupported block {0}: not in the catalog")]
    UnsupportedBlock(BlockKind),
    #[error("a product needs at least one factor")]
    EmptyProduct,
    #[error("product too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Names of catalog manifolds. `RealProjective(n)` exists only so that
/// unsupported inputs such as `RP3` can be named and rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockKind {
    ComplexProjective(u32),
    RealProjective(u32),
    Sphere(u32),
    Circle,
    Torus(u32),
}

impl fmt::Display for BlockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockKind::ComplexProjective(n) => write!(f, "CP{n}"),
            BlockKind::RealProjective(n) => write!(f, "RP{n}"),
            BlockKind::Sphere(n) => write!(f, "S{n}"),
            BlockKind::Circle => f.write_str("S1"),
            BlockKind::Torus(n) => write!(f, "T{n}"),
        }
    }
}

/// A closed connected catalog manifold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildingBlock {
    kind: BlockKind,
    dimension: u32,
    orientable: bool,
    parallelizable: bool,
    compact: bool,
    chern_class: GradedClass,
}

impl BuildingBlock {
    pub fn kind(&self) -> BlockKind {
        self.kind
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn parallelizable(&self) -> bool {
        self.parallelizable
    }

    pub fn compact(&self) -> bool {
        self.compact
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        self.chern_class.presentation()
    }

    /// Total Chern class of the complexified tangent bundle.
    pub fn chern_class(&self) -> &GradedClass {
        &self.chern_class
    }
}

/// Looks up a catalog block.
///
/// `Sphere(1)` is the circle. `CP^n` uses `c(C (x) T CP^n) = (1 + a)^{n+1} (1 - a)^{n+1}
/// = (1 - a^2)^{n+1}`, expanded in `Z[a]/(a^{n+1})`.
pub fn block(kind: BlockKind) -> Result<BuildingBlock, CatalogError> {
    let unsupported = || CatalogError::UnsupportedBlock(kind);
    let trivial = |dimension: u32, parallelizable: bool| {
        if dimension > MAX_DIMENSION {
            return Err(CatalogError::TooLarge(format!(
                "{kind} has dimension {dimension}, limit is {MAX_DIMENSION}"
            )));
        }
        let presentation = RingPresentation::empty(dimension);
        Ok(BuildingBlock {
            kind,
            dimension,
            orientable: true,
            parallelizable,
            compact: true,
            chern_class: GradedClass::one(&presentation),
        })
    };
    match kind {
        BlockKind::ComplexProjective(0) => Err(unsupported()),
        BlockKind::ComplexProjective(n) => {
            if n > MAX_DIMENSION / 2 {
                return Err(CatalogError::TooLarge(format!(
                    "{kind} has dimension {}, limit is {MAX_DIMENSION}",
                    u64::from(n) * 2
                )));
            }
            let presentation =
                RingPresentation::new(vec![Generator::integral("a", 2, n + 1)?], 2 * n)?;
            let factor = GradedClass::from_terms(
                &presentation,
                [(vec![], 1), (vec![("a", 2)], -1)],
            )?;
            let mut chern_class = GradedClass::one(&presentation);
            for _ in 0..=n {
                chern_class = chern_class.multiply(&factor)?;
            }
            Ok(BuildingBlock {
                kind,
                dimension: 2 * n,
                orientable: true,
                parallelizable: false,
                compact: true,
                chern_class,
            })
        }
        BlockKind::RealProjective(2) => {
            let presentation = RingPresentation::new(vec![Generator::torsion("b", 2, 2)?], 2)?;
            let chern_class =
                GradedClass::from_terms(&presentation, [(vec![], 1), (vec![("b", 1)], 1)])?;
            Ok(BuildingBlock {
                kind,
                dimension: 2,
                orientable: false,
                parallelizable: false,
                compact: true,
                chern_class,
            })
        }
        BlockKind::RealProjective(_) => Err(unsupported()),
        BlockKind::Sphere(0) => Err(unsupported()),
        BlockKind::Sphere(1) | BlockKind::Circle => {
            let mut circle = trivial(1, true)?;
            circle.kind = BlockKind::Circle;
            Ok(circle)
        }
        BlockKind::Sphere(n) => trivial(n, n == 3 || n == 7),
        BlockKind::Torus(0) => Err(unsupported()),
        BlockKind::Torus(n) => trivial(n, true),
    }
}

/// A finite product of catalog blocks.
#[derive(Debug, Clone)]
pub struct ManifoldProduct {
    factors: Vec<BuildingBlock>,
    dimension: u32,
    orientable: bool,
    parallelizable: bool,
    presentation: Arc<RingPresentation>,
    /// Per factor: block generator name -> product generator name.
    renaming: Vec<Vec<(String, String)>>,
    chern_class: GradedClass,
}

impl PartialEq for ManifoldProduct {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for ManifoldProduct {}

/// Builds the product, renaming each block generator `x` to `x<i>` where `i`
/// counts earlier factors that used the same letter.
pub fn product_manifold(blocks: Vec<BuildingBlock>) -> Result<ManifoldProduct, CatalogError> {
    if blocks.is_empty() {
        return Err(CatalogError::EmptyProduct);
    }
    let dimension: u64 = blocks.iter().map(|b| u64::from(b.dimension)).sum();
    if dimension > u64::from(MAX_DIMENSION) {
        return Err(CatalogError::TooLarge(format!(
            "dimension {dimension} exceeds {MAX_DIMENSION}"
        )));
    }
    let dimension = dimension as u32;

    let mut counters: Vec<(String, u32)> = Vec::new();
    let mut generators = Vec::new();
    let mut renaming = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut names = Vec::new();
        for g in b.presentation().generators() {
            let count = match counters.iter_mut().find(|(letter, _)| letter == g.name()) {
                Some((_, count)) => {
                    *count += 1;
                    *count
                }
                None => {
                    counters.push((g.name().to_owned(), 1));
                    1
                }
            };
            let renamed = format!("{}{}", g.name(), count);
            generators.push(g.renamed(renamed.clone())?);
            names.push((g.name().to_owned(), renamed));
        }
        renaming.push(names);
    }
    if generators.len() > MAX_GENERATORS {
        return Err(CatalogError::TooLarge(format!(
            "{} cohomology generators exceed {MAX_GENERATORS}",
            generators.len()
        )));
    }
    let presentation = RingPresentation::new(generators, dimension)?;

    let mut chern_class = GradedClass::one(&presentation);
    for (b, names) in blocks.iter().zip(&renaming) {
        let lifted = b.chern_class.embed(&presentation, |n| {
            names
                .iter()
                .find(|(from, _)| from == n)
                .map(|(_, to)| to.clone())
                .unwrap_or_else(|| n.to_owned())
        })?;
        chern_class = chern_class.multiply(&lifted)?;
    }

    Ok(ManifoldProduct {
        orientable: blocks.iter().all(|b| b.orientable),
        parallelizable: blocks.iter().all(|b| b.parallelizable),
        factors: blocks,
        dimension,
        presentation,
        renaming,
        chern_class,
    })
}

/// Convenience: look up every kind and form the product.
pub fn product_of_kinds(kinds: &[BlockKind]) -> Result<ManifoldProduct, CatalogError> {
    let blocks = kinds.iter().map(|&k| block(k)).collect::<Result<Vec<_>, _>>()?;
    product_manifold(blocks)
}

/// Total Chern class `c(C (x) TM)` of the product.
pub fn complexified_tangent_chern(manifold: &ManifoldProduct) -> GradedClass {
    manifold.chern_class.clone()
}

impl ManifoldProduct {
    pub fn factors(&self) -> &[BuildingBlock] {
        &self.factors
    }

    pub fn kinds(&self) -> Vec<BlockKind> {
        self.factors.iter().map(|b| b.kind).collect()
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn degree_cap(&self) -> u32 {
        self.presentation.degree_cap()
    }

    pub fn orientable(&self) -> bool {
        self.orientable
    }

    pub fn parallelizable(&self) -> bool {
        self.parallelizable
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.presentation
    }

    /// Product generator names introduced by factor `index`, as
    /// `(block name, product name)` pairs.
    pub fn generator_names(&self, index: usize) -> &[(String, String)] {
        &self.renaming[index]
    }

    pub fn chern_class(&self) -> &GradedClass {
        &self.chern_class
    }

    /// Canonical expression, e.g. `CP2 x CP2 x RP2 x S1`.
    pub fn expression(&self) -> String {
        self.factors
            .iter()
            .map(|b| b.kind.to_string())
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

impl fmt::Display for ManifoldProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.expression())
    }
}
