use crate::algebra::{FiniteGroup, Representation};
use crate::error::{Error, Result};
use crate::formula::{classify, parse, Formula, FormulaClass, ParseError};

/// A finite named stand-in for a class of representations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<(String, Representation)>,
}

impl Catalog {
    pub fn new() -> Self {
        Catalog::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (String, Representation)>) -> Result<Self> {
        let mut c = Catalog::new();
        for (name, rep) in entries {
            c.push(name, rep)?;
        }
        Ok(c)
    }

    pub fn push(&mut self, name: impl Into<String>, rep: Representation) -> Result<()> {
        let name = name.into();
        if self.get(&name).is_some() {
            return Err(Error::DuplicateName(name));
        }
        self.entries.push((name, rep));
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Representation> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, r)| r)
    }

    pub fn name(&self, i: usize) -> &str {
        &self.entries[i].0
    }

    pub fn rep(&self, i: usize) -> &Representation {
        &self.entries[i].1
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Representation)> {
        self.entries.iter().map(|(n, r)| (n.as_str(), r))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }

    /// The entries at the given positions, in catalog order.
    pub fn select(&self, indices: &std::collections::BTreeSet<usize>) -> Catalog {
        Catalog {
            entries: indices.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }

    /// The `G`-layer: entries whose acting group has exactly this Cayley table.
    pub fn layer(&self, group: &FiniteGroup) -> Catalog {
        Catalog {
            entries: self
                .entries
                .iter()
                .filter(|(_, r)| r.group() == group)
                .cloned()
                .collect(),
        }
    }
}

/// A named list of formulas kept as source text. Coefficients are reduced
/// when a formula is instantiated for a particular ring.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FormulaSet {
    entries: Vec<FormulaEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaEntry {
    pub name: String,
    pub text: String,
    pub class: FormulaClass,
}

impl FormulaSet {
    pub fn new() -> Self {
        FormulaSet::default()
    }

    /// Syntax is checked once; the shape does not depend on the ring.
    pub fn push(&mut self, name: impl Into<String>, text: impl Into<String>) -> Result<(), ParseError> {
        let text = text.into();
        let class = classify(&parse(&text, 1)?);
        self.entries.push(FormulaEntry {
            name: name.into(),
            text,
            class,
        });
        Ok(())
    }

    pub fn from_texts<'a>(texts: impl IntoIterator<Item = &'a str>) -> Result<Self, ParseError> {
        let mut set = FormulaSet::new();
        for (i, t) in texts.into_iter().enumerate() {
            set.push(format!("u{}", i + 1), t)?;
        }
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> &FormulaEntry {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[FormulaEntry] {
        &self.entries
    }

    /// Formula `i` over `Z/modulus`.
    pub fn formula(&self, i: usize, modulus: u32) -> Formula {
        parse(&self.entries[i].text, modulus).expect("checked on insertion")
    }

    pub fn is_action_type(&self) -> bool {
        self.entries.iter().all(|e| e.class.is_action_type)
    }

    pub fn select(&self, indices: &std::collections::BTreeSet<usize>) -> FormulaSet {
        FormulaSet {
            entries: indices.iter().map(|&i| self.entries[i].clone()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteModule, FiniteRing};

    #[test]
    fn names_are_unique() {
        let rep = Representation::trivial(FiniteModule::cyclic(FiniteRing::new(2).unwrap()), FiniteGroup::cyclic(2));
        let mut c = Catalog::new();
        c.push("a", rep.clone()).unwrap();
        assert_eq!(c.push("a", rep), Err(Error::DuplicateName("a".into())));
    }

    #[test]
    fn layers() {
        let z2 = FiniteModule::cyclic(FiniteRing::new(2).unwrap());
        let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
        let r1 = Representation::trivial(z2, FiniteGroup::cyclic(2));
        let r2 = Representation::new(z3, FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let c = Catalog::from_entries([("R1".to_string(), r1), ("R2".to_string(), r2)]).unwrap();
        assert_eq!(c.layer(&FiniteGroup::cyclic(2)).names(), vec!["R1", "R2"]);
        assert!(c.layer(&FiniteGroup::cyclic(3)).is_empty());
        for (_, r) in c.iter() {
            assert!(!c.layer(r.group()).is_empty());
        }
    }

    #[test]
    fn formulas_reparse_per_ring() {
        let t = FormulaSet::from_texts(["x1*(3) = 0"]).unwrap();
        assert!(!matches!(t.formula(0, 4), Formula::ActionEq(ref w) if w.is_zero()));
        assert!(matches!(t.formula(0, 3), Formula::ActionEq(ref w) if w.is_zero()));
        assert!(FormulaSet::from_texts(["x1 ="]).is_err());
    }
}
