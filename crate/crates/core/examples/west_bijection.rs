//! Runs the top-swap map and its reduced-pair core on every avoider up to
//! length 6.

use popwilf::bijections::{verify_theorem13, verify_west, Theorem13Pair};
use popwilf::permutation::avoiders;

fn main() -> popwilf::Result<()> {
    let pair = Theorem13Pair::new("pop 5: c[3>5>1>2], i[4]".parse()?, "pop 5: c[5>3>1>2], i[4]".parse()?)?;

    // the first avoider of length 6 that the map moves
    let w = avoiders(pair.p(), 6).find(|w| pair.forward(w).is_ok_and(|v| &v != w)).expect("a moved avoider");
    let v = pair.forward(&w)?;
    println!("{w} -> {v} -> {}", pair.inverse(&v)?);

    println!("reduced pair: {}", verify_west(pair.reduced(), 6).summary());
    println!("full map:     {}", verify_theorem13(&pair, 6).summary());
    Ok(())
}
