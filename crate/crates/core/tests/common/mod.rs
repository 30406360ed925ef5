//! Test-only helpers: random presentations and classes, and a brute-force
//! ring oracle that shares no code with `chern_bounds::ring`.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use chern_bounds::{Coefficient, Generator, GradedClass, RingPresentation};
use rand::Rng;

/// Generator description as the oracle sees it.
#[derive(Debug, Clone)]
pub struct OracleGen {
    pub name: String,
    pub degree: u32,
    pub torsion: bool,
    pub nil: u32,
}

pub type OracleMonomial = BTreeMap<String, u32>;
pub type OracleClass = BTreeMap<OracleMonomial, Coefficient>;

#[derive(Debug, Clone)]
pub struct Oracle {
    pub gens: Vec<OracleGen>,
    pub cap: u32,
}

impl Oracle {
    fn gen(&self, name: &str) -> &OracleGen {
        self.gens.iter().find(|g| g.name == name).expect("known generator")
    }

    fn degree(&self, m: &OracleMonomial) -> u64 {
        m.iter().map(|(n, &e)| u64::from(self.gen(n).degree) * u64::from(e)).sum()
    }

    fn dead(&self, m: &OracleMonomial) -> bool {
        m.iter().any(|(n, &e)| e >= self.gen(n).nil) || self.degree(m) > u64::from(self.cap)
    }

    fn torsion(&self, m: &OracleMonomial) -> bool {
        m.keys().any(|n| self.gen(n).torsion)
    }

    /// Sums raw terms and applies every relation.
    pub fn reduce(&self, raw: impl IntoIterator<Item = (OracleMonomial, Coefficient)>) -> OracleClass {
        let mut sums: BTreeMap<OracleMonomial, Coefficient> = BTreeMap::new();
        for (mut m, c) in raw {
            m.retain(|_, e| *e > 0);
            if self.dead(&m) {
                continue;
            }
            *sums.entry(m).or_insert(0) += c;
        }
        sums.into_iter()
            .map(|(m, c)| {
                let c = if self.torsion(&m) { c.rem_euclid(2) } else { c };
                (m, c)
            })
            .filter(|(_, c)| *c != 0)
            .collect()
    }

    /// Direct expansion of every pair of terms.
    pub fn mul(&self, x: &OracleClass, y: &OracleClass) -> OracleClass {
        let mut raw = Vec::new();
        for (m1, c1) in x {
            for (m2, c2) in y {
                let mut m = m1.clone();
                for (n, e) in m2 {
                    *m.entry(n.clone()).or_insert(0) += e;
                }
                raw.push((m, c1 * c2));
            }
        }
        self.reduce(raw)
    }

    pub fn one(&self) -> OracleClass {
        self.reduce([(OracleMonomial::new(), 1)])
    }

    /// Inverse of `1 + y` as the finite geometric series `sum_j (-y)^j`; `y`
    /// has no constant term, so `y^j = 0` once `2j > cap`.
    pub fn inverse(&self, x: &OracleClass) -> OracleClass {
        let minus_y: OracleClass = self.reduce(
            x.iter()
                .filter(|(m, _)| !m.is_empty())
                .map(|(m, c)| (m.clone(), -c)),
        );
        let mut total = self.one();
        let mut power = self.one();
        for _ in 0..=self.cap / 2 {
            power = self.mul(&power, &minus_y);
            let raw: Vec<_> = total
                .iter()
                .chain(power.iter())
                .map(|(m, c)| (m.clone(), *c))
                .collect();
            total = self.reduce(raw);
        }
        total
    }

    pub fn presentation(&self) -> Arc<RingPresentation> {
        let gens = self
            .gens
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.degree, if g.torsion { 2 } else { 0 }, g.nil).unwrap())
            .collect();
        RingPresentation::new(gens, self.cap).unwrap()
    }

    pub fn to_class(&self, pres: &Arc<RingPresentation>, x: &OracleClass) -> GradedClass {
        GradedClass::from_terms(pres, x.iter().map(|(m, c)| (m.iter().map(|(n, e)| (n.as_str(), *e)), *c))).unwrap()
    }
}

/// Reads a class back into oracle form through its public term API.
pub fn from_class(x: &GradedClass) -> OracleClass {
    let names: Vec<&str> = x.presentation().generators().iter().map(|g| g.name()).collect();
    x.terms()
        .map(|(m, c)| {
            let mono = m
                .exponents()
                .iter()
                .zip(&names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| (n.to_string(), e))
                .collect();
            (mono, c)
        })
        .collect()
}

/// Random presentation: 1 to 4 generators of degree 2 or 4, infinite or
/// order 2, nilpotence exponent 1 to 4, degree cap 0 to 16.
pub fn random_oracle(rng: &mut impl Rng) -> Oracle {
    let count = rng.gen_range(1..=4);
    let letters = ["a", "b", "c", "d"];
    let gens = (0..count)
        .map(|i| OracleGen {
            name: format!("{}{}", letters[i], rng.gen_range(1..=3)),
            degree: if rng.gen_bool(0.75) { 2 } else { 4 },
            torsion: rng.gen_bool(0.3),
            nil: rng.gen_range(1..=4),
        })
        .collect();
    Oracle {
        gens,
        cap: rng.gen_range(0..=16),
    }
}

/// Up to `max_terms` random raw terms, exponents below each nilpotence
/// exponent, coefficients in [-9, 9].
pub fn random_raw(rng: &mut impl Rng, oracle: &Oracle, max_terms: usize) -> Vec<(OracleMonomial, Coefficient)> {
    let n = rng.gen_range(0..=max_terms);
    (0..n)
        .map(|_| {
            let m = oracle
                .gens
                .iter()
                .map(|g| (g.name.clone(), rng.gen_range(0..g.nil)))
                .filter(|(_, e)| *e > 0)
                .collect();
            (m, rng.gen_range(-9..=9))
        })
        .collect()
}

/// Random class with constant term 1.
pub fn random_unit_raw(rng: &mut impl Rng, oracle: &Oracle, max_terms: usize) -> Vec<(OracleMonomial, Coefficient)> {
    let mut raw: Vec<_> = random_raw(rng, oracle, max_terms)
        .into_iter()
        .filter(|(m, _)| !m.is_empty())
        .collect();
    raw.push((OracleMonomial::new(), 1));
    raw
}
