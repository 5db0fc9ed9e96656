//! Finite groups of Dirichlet characters, read as abelian fields.

use std::collections::BTreeSet;

use arith_core::numth::{gcd, lcm, val};
use serde::{Deserialize, Serialize};

use crate::character::{CharSpec, DirichletChar};
use crate::error::{CharError, Result};
use crate::units::UnitGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharGroup {
    /// sorted, contains the trivial character
    pub elements: Vec<DirichletChar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplitData {
    pub ell: u64,
    pub e: u64,
    pub f: u64,
    pub g: u64,
}

/// Field input: either the fixed field of a subgroup of (Z/f)^x or an explicit character list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Subgroup { conductor: u64, subgroup_generators: Vec<i64> },
    Characters { characters: Vec<CharSpec> },
}

impl CharGroup {
    pub fn trivial() -> Self {
        CharGroup { elements: vec![DirichletChar::trivial()] }
    }

    /// Validate closure of an explicit set.
    pub fn from_elements(chars: Vec<DirichletChar>) -> Result<Self> {
        let set: BTreeSet<DirichletChar> = chars.into_iter().collect();
        for a in &set {
            for b in &set {
                if !set.contains(&a.mul(b)) {
                    return Err(CharError::NotClosed);
                }
            }
        }
        if set.is_empty() {
            return Err(CharError::NotClosed);
        }
        Ok(CharGroup { elements: set.into_iter().collect() })
    }

    /// Group generated by the given characters.
    pub fn generated(gens: &[DirichletChar]) -> Self {
        let mut set: BTreeSet<DirichletChar> = BTreeSet::new();
        set.insert(DirichletChar::trivial());
        let mut frontier: Vec<DirichletChar> = vec![DirichletChar::trivial()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = x.mul(g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        CharGroup { elements: set.into_iter().collect() }
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |a, c| lcm(a, c.order))
    }

    pub fn conductor(&self) -> u64 {
        self.elements.iter().fold(1, |a, c| lcm(a, c.conductor))
    }

    pub fn contains(&self, c: &DirichletChar) -> bool {
        self.elements.binary_search(c).is_ok()
    }

    pub fn is_subgroup_of(&self, o: &CharGroup) -> bool {
        self.elements.iter().all(|c| o.contains(c))
    }

    /// Characters of (Z/f)^x trivial on the subgroup generated by `h`.
    pub fn from_subgroup(f: u64, h: &[i64]) -> Result<Self> {
        let f = f.max(1);
        for &x in h {
            if f > 1 && gcd(arith_core::numth::reduce(x, f), f) != 1 {
                return Err(CharError::NotSubgroup(arith_core::numth::reduce(x, f), f));
            }
        }
        let g = UnitGroup::new(f);
        let mut out = Vec::new();
        let mut ks = vec![0u64; g.gens.len()];
        for _ in 0..g.order() {
            let chi = DirichletChar::from_exponents(&g, &ks)?;
            if h.iter().all(|&x| chi.exp(x) == Some(0)) {
                out.push(chi);
            }
            for i in 0..ks.len() {
                ks[i] += 1;
                if ks[i] < g.orders[i] {
                    break;
                }
                ks[i] = 0;
            }
        }
        // an annihilator is a group, no closure check needed
        out.sort();
        Ok(CharGroup { elements: out })
    }

    pub fn from_spec(s: &FieldSpec) -> Result<Self> {
        match s {
            FieldSpec::Subgroup { conductor, subgroup_generators } => Self::from_subgroup(*conductor, subgroup_generators),
            FieldSpec::Characters { characters } => {
                let chars = characters.iter().map(DirichletChar::from_spec).collect::<Result<Vec<_>>>()?;
                Self::from_elements(chars)
            }
        }
    }

    pub fn to_spec(&self) -> FieldSpec {
        FieldSpec::Characters { characters: self.elements.iter().map(|c| c.to_spec()).collect() }
    }

    /// Largest m such that the canonical character of Q_(m) lies in the group.
    pub fn n_k(&self, p: u64) -> u32 {
        let mut m = 0;
        while let Ok(c) = DirichletChar::canonical(p, m + 1) {
            if c.conductor > self.conductor() || !self.contains(&c) {
                break;
            }
            m += 1;
        }
        m
    }

    pub fn count_vanishing(&self, ell: u64) -> u64 {
        self.elements.iter().filter(|c| c.exp(ell as i64).is_none()).count() as u64
    }

    /// Splitting data of ell in the field cut out by the group.
    pub fn splitting(&self, ell: u64) -> SplitData {
        let unram: Vec<&DirichletChar> = self.elements.iter().filter(|c| c.exp(ell as i64).is_some()).collect();
        let e = self.order() / unram.len() as u64;
        let f = unram.iter().fold(1, |a, c| {
            let k = c.exp(ell as i64).unwrap();
            lcm(a, c.order / gcd(c.order, k))
        });
        SplitData { ell, e, f, g: self.order() / (e * f) }
    }

    /// Group of K_(n) = K Q_(n + n_K).
    pub fn layer(&self, p: u64, n: u32) -> Result<Self> {
        let top = DirichletChar::canonical(p, n + self.n_k(p))?;
        let mut gens = self.elements.clone();
        gens.push(top);
        Ok(Self::generated(&gens))
    }

    /// p-adic valuation of the degree.
    pub fn degree_p_val(&self, p: u64) -> u32 {
        val(self.order(), p)
    }
}

/// An abelian field with its prime p in view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianFieldDesc {
    pub group: CharGroup,
    pub p: u64,
    pub n_k: u32,
}

impl AbelianFieldDesc {
    pub fn new(group: CharGroup, p: u64) -> Self {
        let n_k = group.n_k(p);
        AbelianFieldDesc { group, p, n_k }
    }

    pub fn degree(&self) -> u64 {
        self.group.order()
    }

    pub fn conductor(&self) -> u64 {
        self.group.conductor()
    }

    /// Q_(m) as a field.
    pub fn q_layer(p: u64, m: u32) -> Result<Self> {
        Ok(Self::new(CharGroup::generated(&[DirichletChar::canonical(p, m)?]), p))
    }

    /// The degree-d subfield of Q(mu_ell) for prime ell with d | ell - 1.
    pub fn prime_cyclic(ell: u64, d: u64, p: u64) -> Result<Self> {
        if (ell - 1) % d != 0 {
            return Err(CharError::Invalid(format!("{d} does not divide {ell} - 1")));
        }
        let g = UnitGroup::new(ell);
        let h = arith_core::numth::pow_mod(g.gens[0], d, ell);
        Ok(Self::new(CharGroup::from_subgroup(ell, &[h as i64])?, p))
    }

    pub fn layer(&self, n: u32) -> Result<Self> {
        Ok(Self::new(self.group.layer(self.p, n)?, self.p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_field_of_conductor_7() {
        let x = CharGroup::from_subgroup(7, &[6]).unwrap();
        assert_eq!(x.order(), 3);
        assert_eq!(x.n_k(3), 0);
        assert_eq!(x.splitting(2), SplitData { ell: 2, e: 1, f: 3, g: 1 });
        assert_eq!(x.splitting(7), SplitData { ell: 7, e: 3, f: 1, g: 1 });
        assert_eq!(x.count_vanishing(7), 2);
        let l = x.layer(3, 1).unwrap();
        assert_eq!(l.order(), 9);
        assert_eq!(l.conductor(), 63);
    }

    #[test]
    fn full_subgroup_is_trivial() {
        let x = CharGroup::from_subgroup(15, &[2, 7, 11, 14]).unwrap();
        assert_eq!(x, CharGroup::trivial());
    }

    #[test]
    fn mu9() {
        let x = CharGroup::from_subgroup(9, &[]).unwrap();
        assert_eq!(x.order(), 6);
        assert_eq!(x.n_k(3), 1);
        assert!(x.contains(&DirichletChar::canonical(3, 1).unwrap()));
    }

    #[test]
    fn q_layer() {
        let k = AbelianFieldDesc::q_layer(3, 1).unwrap();
        assert_eq!(k.n_k, 1);
        assert_eq!(k.degree(), 3);
        assert_eq!(CharGroup::trivial().layer(3, 1).unwrap(), k.group);
        assert_eq!(k.group.layer(3, 0).unwrap(), k.group);
    }

    #[test]
    fn not_a_unit() {
        assert!(matches!(CharGroup::from_subgroup(9, &[3]), Err(CharError::NotSubgroup(3, 9))));
    }
}
