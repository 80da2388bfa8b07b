use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;
use std::sync::Arc;

use num_traits::Zero;

use super::{Bideg, DgError, DgModule, KoszulAlgebra, Window};
use crate::linalg::{Matrix, Q};

/// Assembles a [`DgModule`] from a keyed basis and sparse matrix entries.
///
/// Basis keys whose internal degree falls outside the window are dropped, and
/// so are entries touching them; this is how truncated modules are built.
#[derive(Clone, Debug)]
pub struct ModuleBuilder<K> {
    algebra: Arc<KoszulAlgebra>,
    window: Window,
    index: HashMap<K, (Bideg, usize)>,
    basis: BTreeMap<Bideg, Vec<K>>,
    d: HashMap<(K, K), Q>,
    actions: Vec<HashMap<(K, K), Q>>,
}

impl<K: Clone + Eq + Hash> ModuleBuilder<K> {
    pub fn new(algebra: Arc<KoszulAlgebra>, window: Window) -> Self {
        let n = algebra.n_gens();
        Self {
            algebra,
            window,
            index: HashMap::new(),
            basis: BTreeMap::new(),
            d: HashMap::new(),
            actions: vec![HashMap::new(); n],
        }
    }

    pub fn algebra(&self) -> &Arc<KoszulAlgebra> {
        &self.algebra
    }

    /// Adds a basis vector; returns `false` if it lies outside the window or
    /// was already present.
    pub fn add_basis(&mut self, key: K, b: Bideg) -> bool {
        if !self.window.contains(b.1) || self.index.contains_key(&key) {
            return false;
        }
        let slot = self.basis.entry(b).or_default();
        self.index.insert(key.clone(), (b, slot.len()));
        slot.push(key);
        true
    }

    pub fn contains(&self, key: &K) -> bool {
        self.index.contains_key(key)
    }

    pub fn bidegree(&self, key: &K) -> Option<Bideg> {
        self.index.get(key).map(|x| x.0)
    }

    pub fn basis(&self) -> &BTreeMap<Bideg, Vec<K>> {
        &self.basis
    }

    fn add_entry(map: &mut HashMap<(K, K), Q>, src: &K, tgt: &K, c: Q) {
        if c.is_zero() {
            return;
        }
        *map.entry((src.clone(), tgt.clone())).or_insert_with(Q::zero) += c;
    }

    /// Adds `c * tgt` to `d(src)`.
    pub fn add_d(&mut self, src: &K, tgt: &K, c: Q) {
        if self.contains(src) && self.contains(tgt) {
            Self::add_entry(&mut self.d, src, tgt, c);
        }
    }

    /// Adds `c * tgt` to `g . src`.
    pub fn add_action(&mut self, g: usize, src: &K, tgt: &K, c: Q) {
        if self.contains(src) && self.contains(tgt) {
            Self::add_entry(&mut self.actions[g], src, tgt, c);
        }
    }

    fn assemble(&self, entries: &HashMap<(K, K), Q>, shift: Bideg, what: &str) -> Result<BTreeMap<Bideg, Matrix>, DgError> {
        let mut out: BTreeMap<Bideg, Matrix> = BTreeMap::new();
        for ((s, t), c) in entries {
            let (bs, is) = self.index[s];
            let (bt, it) = self.index[t];
            if bt != (bs.0 + shift.0, bs.1 + shift.1) {
                return Err(DgError::Module(format!("{what} entry from {bs:?} to {bt:?} has the wrong bidegree")));
            }
            let rows = self.basis[&bt].len();
            let cols = self.basis[&bs].len();
            out.entry(bs).or_insert_with(|| Matrix::zeros(rows, cols)).add_at(it, is, c);
        }
        Ok(out)
    }

    pub fn build(&self) -> Result<DgModule, DgError> {
        let dims = self.basis.iter().map(|(b, v)| (*b, v.len())).collect();
        let d = self.assemble(&self.d, (1, 0), "differential")?;
        let actions = (0..self.algebra.n_gens())
            .map(|g| self.assemble(&self.actions[g], self.algebra.generator(g).bidegree, "action"))
            .collect::<Result<Vec<_>, _>>()?;
        DgModule::new(self.algebra.clone(), dims, d, actions, self.window)
    }
}
