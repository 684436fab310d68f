//! Enumerate the class level by level and print a census.
//!
//! ```bash
//! cargo run --release -p crenel --example enumerate
//! ```

use crenel::{Enumerator, PatternSet};

fn main() {
    let mut enumerator = Enumerator::new(PatternSet::default());
    println!("n\tclass\tsimple\tskew_dec\tsum_indec");
    for n in 1..=9 {
        let census = enumerator.census(n).expect("within the default limit");
        println!(
            "{}\t{}\t{}\t{}\t{}",
            census.n,
            census.class_count,
            census.simple_count,
            census.skew_dec_count,
            census.sum_indec_count
        );
    }

    println!("\nlevel 4 members:");
    let level = enumerator.level(4).expect("within the default limit");
    let row: Vec<String> = level.members.iter().map(|p| p.to_string()).collect();
    println!("{}", row.join("  "));
}
