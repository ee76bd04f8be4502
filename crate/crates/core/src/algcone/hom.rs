use std::collections::{BTreeMap, HashMap};

use crate::poly::{Polynomial, Var};

/// A ring homomorphism `ℚ[Y] → ℚ[X]` given by the images of the `Y`
/// variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingHom {
    map: BTreeMap<Var, Polynomial>,
}

impl RingHom {
    pub fn new(pairs: impl IntoIterator<Item = (Var, Polynomial)>) -> Self {
        RingHom { map: pairs.into_iter().collect() }
    }

    pub fn insert(&mut self, v: Var, image: Polynomial) {
        self.map.insert(v, image);
    }

    pub fn sources(&self) -> impl Iterator<Item = Var> + '_ {
        self.map.keys().copied()
    }

    pub fn image(&self, v: Var) -> Option<&Polynomial> {
        self.map.get(&v)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Var, &Polynomial)> {
        self.map.iter().map(|(v, p)| (*v, p))
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let m: HashMap<Var, Polynomial> = self.map.iter().map(|(v, q)| (*v, q.clone())).collect();
        p.substitute(&m)
    }

    /// Union of two homomorphisms on disjoint sources.
    pub fn extend(&self, other: &RingHom) -> RingHom {
        let mut map = self.map.clone();
        map.extend(other.map.iter().map(|(v, p)| (*v, p.clone())));
        RingHom { map }
    }
}
