//! Parses a POP, lists the classical patterns it stands for, and tests a
//! few permutations against it.

use popwilf::permutation::contains_pop;
use popwilf::{LabeledPoset, Permutation};

fn main() -> popwilf::Result<()> {
    let p: LabeledPoset = "pop 4: c[3>1], i[2], i[4]".parse()?;
    let patterns = p.pattern_set();
    println!("{p} has {} linear extensions:", patterns.len());
    for sigma in &patterns {
        println!("  {sigma}");
    }

    for w in ["2413", "35142", "12345"] {
        let w: Permutation = w.parse()?;
        match contains_pop(&w, &p) {
            Some(witness) => println!("{w} contains {p} at positions {witness:?}"),
            None => println!("{w} avoids {p}"),
        }
    }
    Ok(())
}
