//! Encodes a transversal as its insertion word and decodes the word with
//! the other variant's rule.

use popwilf::bijections::{decode, encode, suitable_positions, InsertionState, Variant};
use popwilf::ferrers::board_avoiders;
use popwilf::{FerrersBoard, Transversal};

fn main() -> popwilf::Result<()> {
    let board: FerrersBoard = "(5,5,4,4,3)".parse()?;
    let t = Transversal::new(board.clone(), vec![4, 5, 3, 1, 2])?;
    let word = encode(&t, Variant::Ascending)?;
    let image = decode(&word, &board, Variant::Descending)?;
    println!("{t} on {board} -> word {word} -> {image}");

    // the suitable cells at each stage of the insertion
    let mut state = InsertionState::new(&board);
    for r in (1..=board.num_rows()).rev() {
        let cells = suitable_positions(&state, Variant::Ascending)?;
        println!("  row {r}: suitable columns {cells:?}, place at {}", t.column_of_row(r));
        state.place(t.column_of_row(r))?;
    }

    let avoiders = board_avoiders(&board, &Variant::Ascending.pop());
    let mut images: Vec<String> = Vec::new();
    for a in &avoiders {
        images.push(decode(&encode(a, Variant::Ascending)?, &board, Variant::Descending)?.to_string());
    }
    images.sort();
    images.dedup();
    println!("{} avoiders map onto {} distinct images", avoiders.len(), images.len());
    Ok(())
}
