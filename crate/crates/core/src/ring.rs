//! Truncated graded-commutative rings on even-degree generators.
//!
//! A [`RingPresentation`] lists finitely many generators, each with a
//! cohomological degree, an additive order (infinite or 2) and a nilpotence
//! exponent, together with a global degree cap above which every class
//! vanishes. A [`GradedClass`] is an integer combination of monomials in those
//! generators, always stored in normal form:
//!
//! * no zero coefficients,
//! * no monomial that hits a nilpotence relation or exceeds the degree cap,
//! * coefficients of 2-torsion monomials reduced to the representative `1`.
//!
//! Because every generator has even degree the ring is strictly commutative,
//! so multiplication never introduces signs.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Integer coefficient type. Arithmetic is checked; overflow is reported as
/// [`RingError::Overflow`] rather than wrapping.
pub type Coefficient = i128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid generator `{name}`: {reason}")]
    InvalidGenerator { name: String, reason: &'static str },
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("operands belong to different ring presentations")]
    MixedPresentation,
    #[error("class is not invertible: constant term is {0}, expected 1")]
    NotInvertible(Coefficient),
    #[error("the zero class has no top Chern index")]
    ZeroClass,
    #[error("integer coefficient overflow")]
    Overflow,
}

/// A named even-degree ring generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    name: String,
    degree: u32,
    additive_order: u32,
    nil_exponent: u32,
}

impl Generator {
    /// `additive_order` is `0` for infinite order or `2` for a 2-torsion class.
    pub fn new(
        name: impl Into<String>,
        degree: u32,
        additive_order: u32,
        nil_exponent: u32,
    ) -> Result<Self, RingError> {
        let name = name.into();
        let reason = if name.is_empty() {
            Some("name must be nonempty")
        } else if degree < 2 || !degree.is_multiple_of(2) {
            Some("degree must be even and at least 2")
        } else if additive_order != 0 && additive_order != 2 {
            Some("additive order must be 0 (infinite) or 2")
        } else if nil_exponent == 0 {
            Some("nilpotence exponent must be at least 1")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(RingError::InvalidGenerator { name, reason }),
            None => Ok(Self {
                name,
                degree,
                additive_order,
                nil_exponent,
            }),
        }
    }

    pub fn integral(name: impl Into<String>, degree: u32, nil_exponent: u32) -> Result<Self, RingError> {
        Self::new(name, degree, 0, nil_exponent)
    }

    pub fn torsion(name: impl Into<String>, degree: u32, nil_exponent: u32) -> Result<Self, RingError> {
        Self::new(name, degree, 2, nil_exponent)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn additive_order(&self) -> u32 {
        self.additive_order
    }

    pub fn nil_exponent(&self) -> u32 {
        self.nil_exponent
    }

    pub fn is_torsion(&self) -> bool {
        self.additive_order == 2
    }

    /// Same generator under a different name.
    pub fn renamed(&self, name: impl Into<String>) -> Result<Self, RingError> {
        Self::new(name, self.degree, self.additive_order, self.nil_exponent)
    }
}

/// Orders names like `a2 < a10` by comparing the numeric suffix as a number.
pub(crate) fn natural_cmp(lhs: &str, rhs: &str) -> Ordering {
    fn split(s: &str) -> (&str, Option<u64>, &str) {
        let digits_at = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
        let (prefix, rest) = s.split_at(digits_at);
        let digits_end = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let (digits, tail) = rest.split_at(digits_end);
        (prefix, digits.parse().ok(), tail)
    }
    split(lhs).cmp(&split(rhs)).then_with(|| lhs.cmp(rhs))
}

/// Generators plus a total degree cap.
///
/// Generators are kept in natural name order, which fixes the layout of every
/// [`Monomial`] built over this presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingPresentation {
    generators: Vec<Generator>,
    degree_cap: u32,
}

impl RingPresentation {
    pub fn new(mut generators: Vec<Generator>, degree_cap: u32) -> Result<Arc<Self>, RingError> {
        generators.sort_by(|a, b| natural_cmp(&a.name, &b.name));
        if let Some(dup) = generators.windows(2).find(|w| w[0].name == w[1].name) {
            return Err(RingError::DuplicateGenerator(dup[0].name.clone()));
        }
        Ok(Arc::new(Self {
            generators,
            degree_cap,
        }))
    }

    pub fn empty(degree_cap: u32) -> Arc<Self> {
        Arc::new(Self {
            generators: Vec::new(),
            degree_cap,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name == name)
    }

    fn same(lhs: &Arc<Self>, rhs: &Arc<Self>) -> bool {
        Arc::ptr_eq(lhs, rhs) || lhs == rhs
    }
}

/// Exponent vector over the generators of one presentation.
///
/// The derived ordering is only a storage order; use
/// [`GradedClass::ordered_terms`] for display order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn unit(presentation: &RingPresentation) -> Self {
        Self(vec![0; presentation.generators.len()].into_boxed_slice())
    }

    /// Monomial from an exponent vector laid out like `presentation`.
    pub fn from_exponents(
        presentation: &RingPresentation,
        exponents: Vec<u32>,
    ) -> Result<Self, RingError> {
        if exponents.len() != presentation.generators.len() {
            return Err(RingError::MixedPresentation);
        }
        Ok(Self(exponents.into_boxed_slice()))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, presentation: &RingPresentation) -> u64 {
        self.0
            .iter()
            .zip(&presentation.generators)
            .map(|(&e, g)| u64::from(e) * u64::from(g.degree))
            .sum()
    }

    /// 2-torsion as soon as any factor is 2-torsion.
    pub fn is_torsion(&self, presentation: &RingPresentation) -> bool {
        self.0
            .iter()
            .zip(&presentation.generators)
            .any(|(&e, g)| e > 0 && g.is_torsion())
    }

    fn vanishes(&self, presentation: &RingPresentation) -> bool {
        self.0
            .iter()
            .zip(&presentation.generators)
            .any(|(&e, g)| e >= g.nil_exponent)
            || self.degree(presentation) > u64::from(presentation.degree_cap)
    }

    fn times(&self, other: &Self) -> Self {
        Self(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a.saturating_add(*b))
                .collect(),
        )
    }

    /// Canonical text form such as `a1^2*b1`; the unit renders as `1`.
    pub fn render(&self, presentation: &RingPresentation) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .zip(&presentation.generators)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, g)| {
                if e == 1 {
                    g.name.clone()
                } else {
                    format!("{}^{}", g.name, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_owned()
        } else {
            factors.join("*")
        }
    }
}

/// Sums terms into normal form.
struct Accumulator<'a> {
    presentation: &'a RingPresentation,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl<'a> Accumulator<'a> {
    fn new(presentation: &'a RingPresentation) -> Self {
        Self {
            presentation,
            terms: BTreeMap::new(),
        }
    }

    fn add(&mut self, monomial: Monomial, coefficient: Coefficient) -> Result<(), RingError> {
        if coefficient == 0 || monomial.vanishes(self.presentation) {
            return Ok(());
        }
        let torsion = monomial.is_torsion(self.presentation);
        let slot = self.terms.entry(monomial).or_insert(0);
        *slot = if torsion {
            (*slot + coefficient.rem_euclid(2)) % 2
        } else {
            slot.checked_add(coefficient).ok_or(RingError::Overflow)?
        };
        Ok(())
    }

    fn finish(mut self) -> BTreeMap<Monomial, Coefficient> {
        self.terms.retain(|_, c| *c != 0);
        self.terms
    }
}

/// A normalized element of a truncated graded ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedClass {
    presentation: Arc<RingPresentation>,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl GradedClass {
    pub fn zero(presentation: &Arc<RingPresentation>) -> Self {
        Self {
            presentation: Arc::clone(presentation),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(presentation: &Arc<RingPresentation>) -> Self {
        let mut acc = Accumulator::new(presentation);
        // The unit never vanishes and is never torsion, so this cannot fail.
        let _ = acc.add(Monomial::unit(presentation), 1);
        Self {
            presentation: Arc::clone(presentation),
            terms: acc.finish(),
        }
    }

    pub fn generator(presentation: &Arc<RingPresentation>, name: &str) -> Result<Self, RingError> {
        Self::from_terms(presentation, [([(name, 1)], 1)])
    }

    /// Normalizes raw `(monomial, coefficient)` pairs.
    ///
    /// Fails with [`RingError::MixedPresentation`] when a monomial has the
    /// wrong layout for `presentation`.
    pub fn from_monomials(
        presentation: &Arc<RingPresentation>,
        raw: impl IntoIterator<Item = (Monomial, Coefficient)>,
    ) -> Result<Self, RingError> {
        let width = presentation.generators.len();
        let mut acc = Accumulator::new(presentation);
        for (monomial, coefficient) in raw {
            if monomial.0.len() != width {
                return Err(RingError::MixedPresentation);
            }
            acc.add(monomial, coefficient)?;
        }
        Ok(Self {
            presentation: Arc::clone(presentation),
            terms: acc.finish(),
        })
    }

    /// Normalizes raw terms whose monomials are given as `(generator name,
    /// exponent)` lists. A name missing from `presentation` is a
    /// [`RingError::MixedPresentation`].
    pub fn from_terms<M, S>(
        presentation: &Arc<RingPresentation>,
        raw: impl IntoIterator<Item = (M, Coefficient)>,
    ) -> Result<Self, RingError>
    where
        M: IntoIterator<Item = (S, u32)>,
        S: AsRef<str>,
    {
        let mut monomials = Vec::new();
        for (factors, coefficient) in raw {
            let mut exponents = vec![0u32; presentation.generators.len()];
            for (name, exponent) in factors {
                let index = presentation
                    .index_of(name.as_ref())
                    .ok_or(RingError::MixedPresentation)?;
                exponents[index] = exponents[index].saturating_add(exponent);
            }
            monomials.push((Monomial(exponents.into_boxed_slice()), coefficient));
        }
        Self::from_monomials(presentation, monomials)
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.presentation
    }

    pub fn degree_cap(&self) -> u32 {
        self.presentation.degree_cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.constant_term() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Coefficient {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map_or(0, |(_, &c)| c)
    }

    /// Terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Coefficient)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Terms sorted by ascending degree, then by generator order (so `a1`
    /// precedes `a2` and `b1`).
    pub fn ordered_terms(&self) -> Vec<(&Monomial, Coefficient)> {
        let pres = &*self.presentation;
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|(m1, _), (m2, _)| {
            m1.degree(pres)
                .cmp(&m2.degree(pres))
                .then_with(|| m2.cmp(m1))
        });
        terms
    }

    /// Whether `monomial` is 2-torsion in this class's ring.
    pub fn is_torsion_monomial(&self, monomial: &Monomial) -> bool {
        monomial.is_torsion(&self.presentation)
    }

    pub fn render_monomial(&self, monomial: &Monomial) -> String {
        monomial.render(&self.presentation)
    }

    pub fn monomial_degree(&self, monomial: &Monomial) -> u64 {
        monomial.degree(&self.presentation)
    }

    fn check_same(&self, other: &Self) -> Result<(), RingError> {
        if RingPresentation::same(&self.presentation, &other.presentation) {
            Ok(())
        } else {
            Err(RingError::MixedPresentation)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let mut acc = Accumulator::new(&self.presentation);
        for (m, c) in self.terms().chain(other.terms()) {
            acc.add(m.clone(), c)?;
        }
        Ok(self.with_terms(acc.finish()))
    }

    pub fn scale(&self, factor: Coefficient) -> Result<Self, RingError> {
        let mut acc = Accumulator::new(&self.presentation);
        for (m, c) in self.terms() {
            acc.add(m.clone(), c.checked_mul(factor).ok_or(RingError::Overflow)?)?;
        }
        Ok(self.with_terms(acc.finish()))
    }

    /// Cup product.
    pub fn multiply(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let mut acc = Accumulator::new(&self.presentation);
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let product = c1.checked_mul(c2).ok_or(RingError::Overflow)?;
                acc.add(m1.times(m2), product)?;
            }
        }
        Ok(self.with_terms(acc.finish()))
    }

    /// The unique `q` with `self * q = 1`.
    ///
    /// Solved degree by degree: `q_0 = 1` and `q_k = -sum_{i=1..k} x_i q_{k-i}`,
    /// where `x_i` is the component in Chern index `i` (degree `2i`).
    pub fn invert(&self) -> Result<Self, RingError> {
        let constant = self.constant_term();
        if constant != 1 {
            return Err(RingError::NotInvertible(constant));
        }
        let top = self.presentation.degree_cap / 2;
        let components: Vec<Self> = (0..=top).map(|j| self.graded_component(j)).collect();
        let mut parts = vec![Self::one(&self.presentation)];
        for k in 1..=top as usize {
            let mut acc = Accumulator::new(&self.presentation);
            for i in 1..=k {
                for (m1, c1) in components[i].terms() {
                    for (m2, c2) in parts[k - i].terms() {
                        let product = c1.checked_mul(c2).ok_or(RingError::Overflow)?;
                        acc.add(m1.times(m2), -product)?;
                    }
                }
            }
            parts.push(self.with_terms(acc.finish()));
        }
        let mut acc = Accumulator::new(&self.presentation);
        for part in parts {
            for (m, c) in part.terms {
                acc.add(m, c)?;
            }
        }
        Ok(self.with_terms(acc.finish()))
    }

    /// The part of degree exactly `2j`, i.e. the `j`-th Chern component.
    pub fn graded_component(&self, j: u32) -> Self {
        let degree = 2 * u64::from(j);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree(&self.presentation) == degree)
            .map(|(m, &c)| (m.clone(), c))
            .collect();
        self.with_terms(terms)
    }

    /// Largest `j` whose graded component is nonzero.
    pub fn top_nonzero_chern_index(&self) -> Result<u32, RingError> {
        self.terms
            .keys()
            .map(|m| m.degree(&self.presentation) / 2)
            .max()
            .map(|j| j as u32)
            .ok_or(RingError::ZeroClass)
    }

    /// Re-expresses this class in `target`, sending each generator name
    /// through `rename`. Every renamed generator must exist in `target`.
    pub fn embed(
        &self,
        target: &Arc<RingPresentation>,
        rename: impl Fn(&str) -> String,
    ) -> Result<Self, RingError> {
        let names: Vec<String> = self
            .presentation
            .generators
            .iter()
            .map(|g| rename(&g.name))
            .collect();
        let raw = self.terms().map(|(m, c)| {
            let factors: Vec<(&str, u32)> = m
                .0
                .iter()
                .zip(&names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, name)| (name.as_str(), e))
                .collect();
            (factors, c)
        });
        Self::from_terms(target, raw)
    }

    fn with_terms(&self, terms: BTreeMap<Monomial, Coefficient>) -> Self {
        Self {
            presentation: Arc::clone(&self.presentation),
            terms,
        }
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (monomial, coefficient)) in terms.into_iter().enumerate() {
            let magnitude = coefficient.unsigned_abs();
            match (i, coefficient < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if monomial.is_unit() {
                write!(f, "{magnitude}")?;
            } else if magnitude == 1 {
                f.write_str(&monomial.render(&self.presentation))?;
            } else {
                write!(f, "{magnitude}*{}", monomial.render(&self.presentation))?;
            }
        }
        Ok(())
    }
}
