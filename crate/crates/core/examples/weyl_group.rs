//! Weyl groups of the rank-two root data: orders, reduced words, the action
//! on the weight lattice.

use koszul_hecke::rootdata::{RootDatum, Weight};

fn main() {
    for label in ["A1", "A1xA1", "A2", "B2", "G2", "A3"] {
        let d = RootDatum::from_label(label).expect("known label");
        println!("{label}: rank {}, |W| = {}, cartan {:?}", d.rank(), d.order(), d.cartan());
    }

    let g2 = RootDatum::from_label("G2").unwrap();
    println!("\nG2 braid order m(1,2) = {}", g2.braid_order(0, 1).unwrap());
    let x = Weight(vec![1, 0]);
    for w in g2.all_elements().unwrap() {
        let word: Vec<usize> = w.word().iter().map(|i| i + 1).collect();
        println!("  s{word:?} . {x} = {}", g2.act(&w, &x));
    }
    let longest = g2.all_elements().unwrap().into_iter().max_by_key(|w| w.length()).unwrap();
    let other: Vec<usize> = g2.alternative_reduced_word(&longest).iter().map(|i| i + 1).collect();
    println!("longest element has length {} and also the word s{other:?}", longest.length());
}
