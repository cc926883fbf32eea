//! Counts avoiders of the distant-pattern chains through their POP forms.

use popwilf::classify::{dimitrov_check, distant_to_pop};

fn main() -> popwilf::Result<()> {
    println!("1□23 -> {}", distant_to_pop("1□23")?);
    let report = dimitrov_check(8)?;
    for chain in &report.chains {
        println!("{}", chain.patterns.join(" ~ "));
        for (pop, counts) in chain.pops.iter().zip(&chain.counts) {
            println!("  {pop:<32} {counts:?}");
        }
    }
    println!("all chains equal: {}", report.verdict);
    Ok(())
}
