//! The coloring map between two chains sharing an isolated label, and the
//! prefix map between `p + q` and `p + q'`.

use popwilf::bijections::{verify_theorem12, verify_theorem14, Theorem12Pair, Theorem14Triple};
use popwilf::LabeledPoset;

fn main() -> popwilf::Result<()> {
    let p: LabeledPoset = "pop 5: c[5>1>2>3], i[4]".parse()?;
    let q: LabeledPoset = "pop 5: c[5>3>2>1], i[4]".parse()?;
    let pair = Theorem12Pair::new(p, q)?;
    println!("coloring: {}", verify_theorem12(&pair, 6)?.summary());

    let triple =
        Theorem14Triple::new("pop 2: c[1>2]".parse()?, "pop 2: c[2>1]".parse()?, "pop 2: c[1>2]".parse()?)?;
    println!("{} -> {}", triple.source(), triple.target());
    println!("prefix:   {}", verify_theorem14(&triple, 6)?.summary());
    Ok(())
}
