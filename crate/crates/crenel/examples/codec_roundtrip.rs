//! Round-trip the word codec: list the valid words of small lengths with
//! their decoded simple permutations, then encode them back.
//!
//! ```bash
//! cargo run --release -p crenel --example codec_roundtrip
//! ```

use crenel::{decode, encode, words_of_length};

fn main() {
    for n in 4..=6 {
        println!("length {n}:");
        for word in words_of_length(n) {
            let p = decode(&word).expect("valid words decode");
            let back = encode(&p).expect("decoded permutations encode");
            assert_eq!(back, word);
            println!("  {word}\t{p}");
        }
    }

    // the inverse orientation carries the other half of the simples
    let p = decode(&"ddbdd".parse().unwrap()).unwrap();
    let inverse = p.inverse();
    println!("\n{p} encodes as ddbdd; its inverse {inverse} is the mirrored member:");
    println!("  encode({inverse}) -> {:?}", encode(&inverse).unwrap_err());
}
