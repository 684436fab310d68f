//! Walk the whole generating-function pipeline and print the coefficient
//! tables next to brute-force counts.
//!
//! ```bash
//! cargo run --release -p crenel --example series_pipeline
//! ```

use crenel::series::{
    catalan_series, class_series, int_coeff, simple_inflation_series, skew_series,
    word_count_series,
};
use crenel::{Enumerator, PatternSet};

fn main() {
    let order = 16;
    let catalan = catalan_series(order);
    let words = word_count_series(order).expect("closed form matches the automaton");
    let inflations = simple_inflation_series(order).expect("all three routes agree");
    let skew = skew_series(order);
    let class = class_series(order).expect("compositional and closed forms agree");

    println!("n\tcatalan\twords\tsimples\tskew\tinflations\tclass");
    for n in 1..=order {
        println!(
            "{n}\t{}\t{}\t{}\t{}\t{}\t{}",
            int_coeff(&catalan, n),
            int_coeff(&words, n),
            int_coeff(&words, n) * 2,
            int_coeff(&skew, n),
            int_coeff(&inflations, n),
            int_coeff(&class, n),
        );
    }

    println!("\ncross-check against the enumerator:");
    let mut enumerator = Enumerator::new(PatternSet::default());
    for (n, count) in enumerator.counts(9).expect("within the default limit") {
        assert_eq!(int_coeff(&class, n), count.into());
        println!("  n={n}: {count} members, series agrees");
    }
}
