//! Compares two POPs board by board. The first pair agrees on every board
//! up to size 6; the second is Wilf-equivalent yet splits at size 5.

use popwilf::ferrers::shape_wilf_check;
use popwilf::LabeledPoset;

fn main() -> popwilf::Result<()> {
    let pairs = [
        ("pop 3: c[3>2], i[1]", "pop 3: c[2>3], i[1]", 6),
        ("pop 3: c[1>3], i[2]", "pop 3: c[3>1], i[2]", 5),
    ];
    for (a, b, n) in pairs {
        let (p, q): (LabeledPoset, LabeledPoset) = (a.parse()?, b.parse()?);
        let report = shape_wilf_check(&p, &q, n)?;
        println!("{p} vs {q}: {} boards", report.boards.len());
        match report.counterexample {
            None => println!("  equal on every board"),
            Some(board) => {
                let row = report.boards.iter().find(|c| c.board == board).unwrap();
                println!("  differ on {board}: {} vs {}", row.left, row.right);
            }
        }
    }
    Ok(())
}
