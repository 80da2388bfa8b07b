//! Finite root systems of small rank and their Weyl groups.
//!
//! Indices of simple roots are 0-based in the API. Weights are integer vectors
//! in fundamental-weight coordinates, so `<x, alpha_i^vee>` is just `x[i]`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on group size during enumeration; guards against non-finite input.
const MAX_GROUP_ORDER: usize = 5000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDataError {
    #[error("unknown root system label `{0}`")]
    UnknownLabel(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("braid order needs two distinct indices, got {0} twice")]
    SameIndex(usize),
    #[error("rank {0} is too large for exhaustive enumeration (max 3)")]
    RankTooLarge(usize),
}

/// A weight in fundamental-weight coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The `i`-th fundamental weight.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Weight(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Max-norm of the coordinate vector.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

/// A Weyl group element, stored as its lexicographically least reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeylElt {
    word: Vec<usize>,
}

impl WeylElt {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The simple reflection `s_i`; a one-letter word is always canonical.
    pub fn simple(i: usize) -> Self {
        WeylElt { word: vec![i] }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W{:?}", self.word)
    }
}

#[derive(Clone, Debug)]
struct GroupTable {
    /// Canonical word of each element; index 0 is the identity.
    words: Vec<Vec<usize>>,
    /// Image of rho under each element, which identifies it.
    index_of_image: HashMap<Vec<i64>, usize>,
    index_of_word: HashMap<Vec<usize>, usize>,
    images: Vec<Vec<i64>>,
}

/// A finite root datum of simply connected type.
#[derive(Clone, Debug)]
pub struct RootDatum {
    label: String,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    cartan: Vec<Vec<i64>>,
    table: GroupTable,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.cartan == other.cartan
    }
}

impl RootDatum {
    /// All labels understood by [`RootDatum::from_label`].
    pub const LABELS: [&'static str; 6] = ["A1", "A1xA1", "A2", "B2", "G2", "A3"];

    pub fn from_label(label: &str) -> Result<Self, RootDataError> {
        let cartan: Vec<Vec<i64>> = match label {
            "A1" => vec![vec![2]],
            "A1xA1" | "A1×A1" => vec![vec![2, 0], vec![0, 2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "B2" => vec![vec![2, -2], vec![-1, 2]],
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            _ => return Err(RootDataError::UnknownLabel(label.to_string())),
        };
        let label = if label == "A1×A1" { "A1xA1" } else { label };
        Self::from_cartan(label, cartan)
    }

    pub fn from_cartan(label: &str, cartan: Vec<Vec<i64>>) -> Result<Self, RootDataError> {
        let r = cartan.len();
        if r == 0 {
            return Err(RootDataError::InvalidCartan("rank 0".into()));
        }
        if r > 3 {
            return Err(RootDataError::RankTooLarge(r));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != r {
                return Err(RootDataError::InvalidCartan("not square".into()));
            }
            if row[i] != 2 {
                return Err(RootDataError::InvalidCartan(format!("diagonal entry {i} is not 2")));
            }
            for j in 0..r {
                if i == j {
                    continue;
                }
                let p = cartan[i][j] * cartan[j][i];
                if cartan[i][j] > 0 || !(0..=3).contains(&p) || (p == 0 && cartan[i][j] != cartan[j][i]) {
                    return Err(RootDataError::InvalidCartan(format!("bad entry ({i},{j})")));
                }
            }
        }
        let table = enumerate(&cartan)?;
        Ok(Self { label: label.to_string(), cartan, table })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    fn check_index(&self, i: usize) -> Result<(), RootDataError> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(RootDataError::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    /// The simple root `alpha_i` in fundamental-weight coordinates (column `i`).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    /// `s_i(x) = x - <x, alpha_i^vee> alpha_i`.
    pub fn reflect(&self, i: usize, x: &Weight) -> Result<Weight, RootDataError> {
        self.check_index(i)?;
        Ok(Weight(reflect_raw(&self.cartan, i, &x.0)))
    }

    /// Order of `s_i s_j`.
    pub fn braid_order(&self, i: usize, j: usize) -> Result<usize, RootDataError> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(RootDataError::SameIndex(i));
        }
        Ok(match self.cartan[i][j] * self.cartan[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            _ => 6,
        })
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        WeylElt { word: vec![i] }
    }

    /// Action of `w` on a weight.
    pub fn act(&self, w: &WeylElt, x: &Weight) -> Weight {
        let mut v = x.0.clone();
        for &i in w.word.iter().rev() {
            v = reflect_raw(&self.cartan, i, &v);
        }
        Weight(v)
    }

    fn element_from_image(&self, image: &[i64]) -> WeylElt {
        let idx = self.table.index_of_image[image];
        WeylElt { word: self.table.words[idx].clone() }
    }

    /// Canonical element represented by an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElt, RootDataError> {
        let mut v = rho(self.rank());
        for &i in word.iter().rev() {
            self.check_index(i)?;
            v = reflect_raw(&self.cartan, i, &v);
        }
        Ok(self.element_from_image(&v))
    }

    pub fn weyl_mul(&self, u: &WeylElt, w: &WeylElt) -> WeylElt {
        let wi = self.table.index_of_word[&w.word];
        let image = Weight(self.table.images[wi].clone());
        self.element_from_image(&self.act(u, &image).0)
    }

    pub fn inverse(&self, w: &WeylElt) -> WeylElt {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        self.from_word(&rev).expect("indices already validated")
    }

    /// Every element, sorted by length and then by canonical word.
    pub fn all_elements(&self) -> Result<Vec<WeylElt>, RootDataError> {
        if self.rank() > 3 {
            return Err(RootDataError::RankTooLarge(self.rank()));
        }
        let mut out: Vec<WeylElt> =
            self.table.words.iter().map(|w| WeylElt { word: w.clone() }).collect();
        out.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.word.cmp(&b.word)));
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.table.words.len()
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn is_left_descent(&self, i: usize, w: &WeylElt) -> bool {
        self.weyl_mul(&self.simple_reflection(i), w).length() < w.length()
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn is_right_descent(&self, w: &WeylElt, i: usize) -> bool {
        self.weyl_mul(w, &self.simple_reflection(i)).length() < w.length()
    }

    /// A reduced word for `w` other than the canonical one, if one exists.
    ///
    /// Built from the greatest left descent instead of the least.
    pub fn alternative_reduced_word(&self, w: &WeylElt) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = w.clone();
        while !cur.is_identity() {
            let i = (0..self.rank()).rev().find(|&i| self.is_left_descent(i, &cur)).unwrap();
            out.push(i);
            cur = self.weyl_mul(&self.simple_reflection(i), &cur);
        }
        out
    }
}

fn rho(rank: usize) -> Vec<i64> {
    vec![1; rank]
}

fn reflect_raw(cartan: &[Vec<i64>], i: usize, x: &[i64]) -> Vec<i64> {
    let n = x[i];
    x.iter().enumerate().map(|(k, c)| c - n * cartan[k][i]).collect()
}

/// Breadth-first enumeration of the group through its action on `rho`.
fn enumerate(cartan: &[Vec<i64>]) -> Result<GroupTable, RootDataError> {
    let r = cartan.len();
    let mut images = vec![rho(r)];
    let mut lengths = vec![0usize];
    let mut index_of_image = HashMap::from([(rho(r), 0usize)]);
    // left[i][k] = index of s_i * element k
    let mut left: Vec<Vec<usize>> = vec![Vec::new(); r];
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for (i, row) in left.iter_mut().enumerate() {
            let img = reflect_raw(cartan, i, &images[k]);
            let idx = match index_of_image.get(&img) {
                Some(&idx) => idx,
                None => {
                    let idx = images.len();
                    if idx >= MAX_GROUP_ORDER {
                        return Err(RootDataError::InvalidCartan("Weyl group is not finite".into()));
                    }
                    images.push(img.clone());
                    lengths.push(lengths[k] + 1);
                    index_of_image.insert(img, idx);
                    queue.push_back(idx);
                    idx
                }
            };
            if row.len() <= k {
                row.resize(k + 1, usize::MAX);
            }
            row[k] = idx;
        }
    }
    // Lexicographically least reduced word: smallest left descent first.
    let n = images.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&k| lengths[k]);
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &k in &order {
        if lengths[k] == 0 {
            continue;
        }
        let i = (0..r).find(|&i| lengths[left[i][k]] < lengths[k]).unwrap();
        let mut w = vec![i];
        w.extend_from_slice(&words[left[i][k]]);
        words[k] = w;
    }
    let index_of_word = words.iter().enumerate().map(|(k, w)| (w.clone(), k)).collect();
    Ok(GroupTable { words, index_of_image, index_of_word, images })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rd(l: &str) -> RootDatum {
        RootDatum::from_label(l).unwrap()
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(rd("A1").reflect(0, &Weight(vec![1])).unwrap(), Weight(vec![-1]));
        assert_eq!(rd("A2").reflect(0, &Weight(vec![0, 0])).unwrap(), Weight(vec![0, 0]));
        assert_eq!(rd("A2").reflect(0, &Weight(vec![1, 0])).unwrap(), Weight(vec![-1, 1]));
        assert!(rd("A2").reflect(2, &Weight(vec![1, 0])).is_err());
    }

    #[test]
    fn reflect_oracle_negates_pairing() {
        for label in RootDatum::LABELS {
            let d = rd(label);
            for i in 0..d.rank() {
                let x = Weight((0..d.rank() as i64).map(|k| 2 * k - 1).collect());
                let y = d.reflect(i, &x).unwrap();
                assert_eq!(y.0[i], -x.0[i]);
                assert_eq!(d.reflect(i, &y).unwrap(), x);
            }
        }
    }

    #[test]
    fn group_orders() {
        let expect = [("A1", 2), ("A1xA1", 4), ("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24)];
        for (l, n) in expect {
            assert_eq!(rd(l).all_elements().unwrap().len(), n, "{l}");
        }
    }

    #[test]
    fn braid_orders_match_iteration() {
        for label in RootDatum::LABELS {
            let d = rd(label);
            for i in 0..d.rank() {
                for j in 0..d.rank() {
                    if i == j {
                        assert!(d.braid_order(i, j).is_err());
                        continue;
                    }
                    let st = d.from_word(&[i, j]).unwrap();
                    let mut p = st.clone();
                    let mut k = 1;
                    while !p.is_identity() {
                        p = d.weyl_mul(&p, &st);
                        k += 1;
                    }
                    assert_eq!(d.braid_order(i, j).unwrap(), k);
                }
            }
        }
        assert_eq!(rd("A1xA1").braid_order(0, 1).unwrap(), 2);
        assert_eq!(rd("A2").braid_order(0, 1).unwrap(), 3);
        assert_eq!(rd("B2").braid_order(0, 1).unwrap(), 4);
        assert_eq!(rd("G2").braid_order(0, 1).unwrap(), 6);
    }

    #[test]
    fn braid_relation_in_a2() {
        let d = rd("A2");
        let a = d.from_word(&[0, 1, 0]).unwrap();
        let b = d.from_word(&[1, 0, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.word(), &[0, 1, 0]);
        let s = d.simple_reflection(0);
        assert!(d.weyl_mul(&s, &s).is_identity());
        assert_eq!(d.weyl_mul(&WeylElt::identity(), &a), a);
    }

    #[test]
    fn canonical_words_are_lex_least() {
        for label in ["A2", "B2", "G2", "A3"] {
            let d = rd(label);
            let all = d.all_elements().unwrap();
            // brute force: all words of each length, keep the reduced ones
            let mut best: HashMap<WeylElt, Vec<usize>> = HashMap::new();
            let max_len = all.iter().map(|w| w.length()).max().unwrap();
            let mut frontier: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..=max_len {
                for w in &frontier {
                    let e = d.from_word(w).unwrap();
                    if e.length() == w.len() {
                        let slot = best.entry(e).or_insert_with(|| w.clone());
                        if w < slot {
                            *slot = w.clone();
                        }
                    }
                }
                frontier = frontier
                    .iter()
                    .flat_map(|w| (0..d.rank()).map(move |i| [w.clone(), vec![i]].concat()))
                    .filter(|w| d.from_word(w).unwrap().length() == w.len())
                    .collect();
            }
            for w in &all {
                assert_eq!(&best[w], &w.word, "{label}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RootDatum::from_label("E8").is_err());
        assert!(RootDatum::from_cartan("x", vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(RootDatum::from_cartan("affine", vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    fn arb_case() -> impl Strategy<Value = (RootDatum, Weight, usize)> {
        (0usize..6, prop::collection::vec(-6i64..=6, 3), 0usize..3).prop_map(|(k, c, i)| {
            let d = rd(RootDatum::LABELS[k]);
            let r = d.rank();
            (d, Weight(c[..r].to_vec()), i % r)
        })
    }

    proptest! {
        #[test]
        fn reflection_is_involution((d, x, i) in arb_case()) {
            let y = d.reflect(i, &x).unwrap();
            prop_assert_eq!(d.reflect(i, &y).unwrap(), x);
        }
    }

    #[test]
    fn length_subadditive_exhaustive() {
        for label in ["A1", "A1xA1", "A2", "B2", "G2"] {
            let d = rd(label);
            let all = d.all_elements().unwrap();
            for u in &all {
                for w in &all {
                    let uw = d.weyl_mul(u, w);
                    assert!(uw.length() <= u.length() + w.length());
                    // equality iff the concatenated word is already reduced
                    let cat: Vec<usize> = u.word().iter().chain(w.word()).copied().collect();
                    let reduced = d.from_word(&cat).unwrap().length() == cat.len();
                    assert_eq!(uw.length() == u.length() + w.length(), reduced);
                }
            }
        }
    }

    #[test]
    fn action_is_a_group_action() {
        let d = rd("B2");
        let all = d.all_elements().unwrap();
        let x = Weight(vec![2, -1]);
        for u in &all {
            for w in &all {
                assert_eq!(d.act(&d.weyl_mul(u, w), &x), d.act(u, &d.act(w, &x)));
            }
            assert!(d.weyl_mul(u, &d.inverse(u)).is_identity());
        }
    }
}
