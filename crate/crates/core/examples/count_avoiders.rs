//! Counts avoiders of a few POPs and names the sequences that have one.

use popwilf::classify::match_sequence;
use popwilf::permutation::count_avoiders;
use popwilf::LabeledPoset;

fn main() -> popwilf::Result<()> {
    let pops = ["pop 3: c[1>2>3]", "pop 3: c[1>2], i[3]", "pop 3: c[1>3], i[2]", "pop 4: c[4>1>2], i[3]"];
    for s in pops {
        let p: LabeledPoset = s.parse()?;
        let seq = count_avoiders(&p, 8)?;
        let id = match_sequence(&seq).map_or("-", |k| k.id);
        println!("{p:<28} {:?} {id}", seq.counts);
    }
    Ok(())
}
