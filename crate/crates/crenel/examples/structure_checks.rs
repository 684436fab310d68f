//! Verify the structural facts about simple members at desk scale: extreme
//! patterns, the N and S shapes, and the two equinumerous orientation
//! halves.
//!
//! ```bash
//! cargo run --release -p crenel --example structure_checks
//! ```

use crenel::{Enumerator, PatternSet};

fn main() {
    let mut enumerator = Enumerator::new(PatternSet::default());
    let report = enumerator
        .verify_structure(8)
        .expect("the structural claims hold");
    print!("{report}");

    // a closer look at one length
    println!("\nsimple members of length 5 and their shapes:");
    for p in enumerator.simple_members(5).unwrap() {
        let extreme = p.extreme_pattern();
        let shape = if p.is_n_shaped() {
            "N-shaped"
        } else if p.is_s_shaped() {
            "S-shaped"
        } else {
            "oscillation"
        };
        println!("  {p}\textreme {extreme}\t{shape}");
    }
}
