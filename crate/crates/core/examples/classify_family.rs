//! Splits a family into Wilf classes and prints it in table form.

use popwilf::classify::{emit_tables, generate_family, symmetry_reduce, wilf_classes, FamilyTag, Format};

fn main() -> popwilf::Result<()> {
    let tag: FamilyTag = std::env::args().nth(1).as_deref().unwrap_or("T4-III").parse()?;
    let family = generate_family(tag);
    println!("{tag}: {} POPs, {} symmetry orbits", family.members.len(), symmetry_reduce(&family).len());

    let report = wilf_classes(&family, 8)?;
    for class in &report.classes {
        println!("{:>3} members  {:?}", class.members.len(), class.sequence.counts);
    }
    if let Some(agree) = report.agrees_with_printed() {
        println!("matches the reference table: {agree}");
    }
    print!("{}", emit_tables(&[report], Format::Md));
    Ok(())
}
