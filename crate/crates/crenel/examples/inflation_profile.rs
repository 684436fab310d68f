//! Check the per-point inflation rule in both directions, and show the pair
//! of length-6 permutations that pins down the decreasing rule for interior
//! points: inflating the middle of 25314 by 21 stays in the class, by 12
//! leaves it.
//!
//! ```bash
//! cargo run --release -p crenel --example inflation_profile
//! ```

use crenel::{allowed_block_classes, Enumerator, PatternSet, Permutation};

fn main() {
    let skeleton: Permutation = "25314".parse().unwrap();
    let classes = allowed_block_classes(&skeleton).expect("simple class member");
    println!("allowed block classes of {skeleton}:");
    for (i, class) in classes.iter().enumerate() {
        println!("  point {} (entry {}): {class:?}", i + 1, skeleton.values()[i]);
    }

    let up: Permutation = "12".parse().unwrap();
    let down: Permutation = "21".parse().unwrap();
    let mut blocks = vec![Permutation::identity(1); 5];
    blocks[2] = down.clone();
    let good = skeleton.inflate(&blocks).unwrap();
    blocks[2] = up.clone();
    let bad = skeleton.inflate(&blocks).unwrap();

    let basis = PatternSet::default();
    println!("\nmiddle point inflated by 21 -> {good}: in class = {}", good.avoids_all(&basis));
    println!("middle point inflated by 12 -> {bad}: in class = {}", bad.avoids_all(&basis));

    let mut enumerator = Enumerator::new(basis);
    let report = enumerator
        .verify_inflation_profile(7)
        .expect("both inclusions hold");
    println!("\nmembers with a simple skeleton of length >= 4:");
    print!("{report}");
}
