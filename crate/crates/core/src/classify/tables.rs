//! Published classification tables: members in tuple notation, counts for
//! `n = 1..=8` and, where printed in full, the OEIS identifier.

use super::FamilyTag;

#[derive(Clone, Copy, Debug)]
pub struct PrintedRow {
    pub number: usize,
    pub members: &'static [&'static str],
    pub counts: [u64; 8],
    pub oeis: Option<&'static str>,
}

#[derive(Clone, Copy, Debug)]
pub struct PrintedTable {
    pub family: FamilyTag,
    pub title: &'static str,
    pub rows: &'static [PrintedRow],
}

const fn row(number: usize, members: &'static [&'static str], counts: [u64; 8]) -> PrintedRow {
    PrintedRow { number, members, counts, oeis: None }
}

const fn row_id(number: usize, members: &'static [&'static str], counts: [u64; 8], oeis: &'static str) -> PrintedRow {
    PrintedRow { number, members, counts, oeis: Some(oeis) }
}

pub const SIZE_3: PrintedTable = PrintedTable {
    family: FamilyTag::Size3,
    title: "POPs of size 3",
    rows: &[
        row_id(1, &["(1,2,3)"], [1, 2, 5, 14, 42, 132, 429, 1430], "A000108"),
        row_id(2, &["(1,2;3)"], [1, 2, 3, 4, 5, 6, 7, 8], "A000027"),
        row_id(3, &["(1,3;2)"], [1, 2, 3, 5, 8, 13, 21, 34], "A000045"),
    ],
};

pub const T4_II: PrintedTable = PrintedTable {
    family: FamilyTag::T4II,
    title: "Type II POPs of size 4",
    rows: &[
        row_id(1, &["(1,2,3;4)", "(1,3,2;4)", "(3,1,2;4)"], [1, 2, 6, 20, 70, 252, 924, 3432], "A000984"),
        row_id(2, &["(4,1,2;3)", "(4,2,1;3)", "(2,4,1;3)"], [1, 2, 6, 20, 71, 264, 1015, 4002], "A049124"),
    ],
};

pub const T4_III: PrintedTable = PrintedTable {
    family: FamilyTag::T4III,
    title: "Type III POPs of size 4",
    rows: &[
        row(1, &["(1,2;4,3)", "(1,2;3,4)"], [1, 2, 6, 18, 50, 130, 322, 770]),
        row(2, &["(1,3;4,2)"], [1, 2, 6, 18, 52, 152, 444, 1296]),
        row(3, &["(1,3;2,4)"], [1, 2, 6, 18, 52, 147, 413, 1159]),
        row(4, &["(1,4;3,2)"], [1, 2, 6, 18, 50, 134, 358, 962]),
        row(5, &["(1,4;2,3)"], [1, 2, 6, 18, 53, 156, 460, 1357]),
    ],
};

pub const T5_I: PrintedTable = PrintedTable {
    family: FamilyTag::T5I,
    title: "Type I POPs of size 5",
    rows: &[
        row(
            1,
            &["(1,2,3,4;5)", "(2,1,4,3;5)", "(2,1,3,4;5)", "(3,2,1,4;5)"],
            [1, 2, 6, 24, 115, 618, 3591, 22088],
        ),
        // (3,1,2,4;5) enumerates to this row, not to row 1
        row(2, &["(2,3,1,4;5)", "(3,1,4,2;5)", "(3,1,2,4;5)"], [1, 2, 6, 24, 115, 618, 3584, 21920]),
        row(3, &["(1,3,2,4;5)"], [1, 2, 6, 24, 115, 618, 3591, 22096]),
        row(
            4,
            &["(5,3,2,1;4)", "(5,3,1,2;4)", "(5,1,2,3;4)", "(3,5,2,1;4)", "(3,5,1,2;4)"],
            [1, 2, 6, 24, 115, 619, 3612, 22386],
        ),
        row(5, &["(5,2,1,3;4)", "(5,1,3,2;4)"], [1, 2, 6, 24, 115, 618, 3592, 22102]),
        row(6, &["(5,2,3,1;4)"], [1, 2, 6, 24, 115, 619, 3613, 22412]),
        row(7, &["(2,5,3,1;4)"], [1, 2, 6, 24, 115, 619, 3607, 22257]),
        row(8, &["(2,5,1,3;4)"], [1, 2, 6, 24, 115, 618, 3587, 22000]),
        row(9, &["(1,5,3,2;4)"], [1, 2, 6, 24, 115, 619, 3608, 22293]),
        row(10, &["(1,5,2,3;4)"], [1, 2, 6, 24, 115, 619, 3606, 22232]),
        row(11, &["(4,5,1,2;3)", "(5,4,2,1;3)", "(5,4,1,2;3)"], [1, 2, 6, 24, 115, 619, 3614, 22425]),
        row(12, &["(5,2,4,1;3)"], [1, 2, 6, 24, 115, 619, 3615, 22457]),
        row(13, &["(4,2,5,1;3)"], [1, 2, 6, 24, 115, 619, 3608, 22272]),
        row(14, &["(2,5,4,1;3)"], [1, 2, 6, 24, 115, 619, 3609, 22297]),
        row(15, &["(2,5,1,4;3)"], [1, 2, 6, 24, 115, 619, 3601, 22147]),
        row(16, &["(2,4,5,1;3)"], [1, 2, 6, 24, 115, 619, 3614, 22426]),
    ],
};

pub const T5_II: PrintedTable = PrintedTable {
    family: FamilyTag::T5II,
    title: "Type II POPs of size 5",
    rows: &[
        row(1, &["(1,2,3;4;5)", "(1,3,2;4;5)", "(3,1,2;4;5)"], [1, 2, 6, 24, 100, 420, 1764, 7392]),
        row(
            2,
            &["(1,3,4;2;5)", "(1,4,3;2;5)", "(4,1,3;2;5)", "(1,2,4;3;5)", "(1,4,2;3;5)", "(4,1,2;3;5)"],
            [1, 2, 6, 24, 100, 426, 1848, 8120],
        ),
        row(3, &["(1,3,5;2;4)", "(5,3,1;2;4)"], [1, 2, 6, 24, 100, 434, 1934, 8828]),
        row(4, &["(1,5,3;2;4)", "(3,1,5;2;4)", "(5,1,3;2;4)"], [1, 2, 6, 24, 100, 430, 1889, 8494]),
        row(5, &["(1,2,5;3;4)", "(5,1,2;3;4)"], [1, 2, 6, 24, 100, 426, 1875, 8482]),
        row(6, &["(1,5,2;3;4)"], [1, 2, 6, 24, 100, 426, 1855, 8278]),
    ],
};

pub const T5_III: PrintedTable = PrintedTable {
    family: FamilyTag::T5III,
    title: "Type III POPs of size 5",
    rows: &[
        row(1, &["(3,4,5;1,2)", "(3,5,4;1,2)", "(5,3,4;1,2)"], [1, 2, 6, 24, 110, 530, 2597, 12796]),
        row(2, &["(2,4,5;1,3)"], [1, 2, 6, 24, 110, 532, 2629, 13135]),
        row(3, &["(2,5,4;1,3)"], [1, 2, 6, 24, 110, 532, 2632, 13188]),
        row(4, &["(4,2,5;1,3)"], [1, 2, 6, 24, 110, 532, 2628, 13095]),
        row(5, &["(5,4,2;1,3)"], [1, 2, 6, 24, 110, 533, 2658, 13527]),
        row(6, &["(4,5,2;1,3)"], [1, 2, 6, 24, 110, 532, 2638, 13329]),
        row(7, &["(5,2,4;1,3)"], [1, 2, 6, 24, 110, 533, 2640, 13195]),
        row(8, &["(2,3,5;1,4)"], [1, 2, 6, 24, 110, 535, 2679, 13632]),
        row(9, &["(2,5,3;1,4)"], [1, 2, 6, 24, 110, 535, 2690, 13836]),
        row(10, &["(3,2,5;1,4)"], [1, 2, 6, 24, 110, 531, 2613, 12974]),
        row(11, &["(5,3,2;1,4)"], [1, 2, 6, 24, 110, 531, 2601, 12817]),
        row(12, &["(3,5,2;1,4)"], [1, 2, 6, 24, 110, 531, 2626, 13192]),
        row(13, &["(5,2,3;1,4)"], [1, 2, 6, 24, 110, 534, 2666, 13534]),
        row(14, &["(2,3,4;1,5)"], [1, 2, 6, 24, 110, 536, 2690, 13711]),
        row(15, &["(2,4,3;1,5)"], [1, 2, 6, 24, 110, 530, 2595, 12759]),
        row(16, &["(4,3,2;1,5)"], [1, 2, 6, 24, 110, 530, 2564, 12190]),
        row(17, &["(3,4,2;1,5)"], [1, 2, 6, 24, 110, 530, 2575, 12407]),
        row(18, &["(1,4,5;2,3)"], [1, 2, 6, 24, 110, 533, 2663, 13637]),
        row(19, &["(1,5,4;2,3)"], [1, 2, 6, 24, 110, 534, 2678, 13748]),
        row(20, &["(4,1,5;2,3)"], [1, 2, 6, 24, 110, 530, 2607, 12997]),
        row(21, &["(5,4,1;2,3)"], [1, 2, 6, 24, 110, 530, 2605, 12996]),
        row(22, &["(4,5,1;2,3)"], [1, 2, 6, 24, 110, 530, 2617, 13202]),
        row(23, &["(5,1,4;2,3)"], [1, 2, 6, 24, 110, 533, 2633, 13156]),
        row(24, &["(1,3,5;2,4)"], [1, 2, 6, 24, 110, 537, 2727, 14261]),
        row(25, &["(1,5,3;2,4)"], [1, 2, 6, 24, 110, 533, 2673, 13757]),
        row(26, &["(5,3,1;2,4)"], [1, 2, 6, 24, 110, 533, 2644, 13319]),
        row(27, &["(3,5,1;2,4)"], [1, 2, 6, 24, 110, 532, 2628, 13175]),
    ],
};

pub const T5_IV: PrintedTable = PrintedTable {
    family: FamilyTag::T5IV,
    title: "Type IV POPs of size 5",
    rows: &[
        row(1, &["(1,2;3,4;5)", "(1,2;4,3;5)", "(1,2;4,5;3)"], [1, 2, 6, 24, 90, 300, 910, 2576]),
        row(2, &["(1,3;4,2;5)"], [1, 2, 6, 24, 90, 312, 1064, 3552]),
        row(3, &["(1,3;2,4;5)"], [1, 2, 6, 24, 90, 312, 1029, 3304]),
        row(4, &["(1,4;3,2;5)"], [1, 2, 6, 24, 90, 300, 938, 2864]),
        row(5, &["(1,4;2,3;5)"], [1, 2, 6, 24, 90, 318, 1092, 3680]),
        row(6, &["(1,2;3,5;4)", "(1,2;5,3;4)"], [1, 2, 6, 24, 90, 315, 1043, 3318]),
        row(7, &["(1,3;2,5;4)"], [1, 2, 6, 24, 90, 311, 1034, 3401]),
        row(8, &["(1,3;5,2;4)"], [1, 2, 6, 24, 90, 323, 1129, 3951]),
        row(9, &["(1,5;2,3;4)"], [1, 2, 6, 24, 90, 310, 1034, 3458]),
        row(10, &["(1,5;3,2;4)"], [1, 2, 6, 24, 90, 301, 914, 2768]),
        row(11, &["(1,4;2,5;3)"], [1, 2, 6, 24, 90, 329, 1192, 4302]),
        row(12, &["(1,4;5,2;3)"], [1, 2, 6, 24, 90, 310, 1088, 3888]),
        row(13, &["(1,5;2,4;3)"], [1, 2, 6, 24, 90, 334, 1235, 4567]),
        row(14, &["(1,5;4,2;3)"], [1, 2, 6, 24, 90, 316, 1009, 3210]),
    ],
};

pub const ALL_TABLES: [PrintedTable; 7] = [SIZE_3, T4_II, T4_III, T5_I, T5_II, T5_III, T5_IV];

/// The printed table for a family, if there is one.
pub fn printed_table(tag: FamilyTag) -> Option<&'static PrintedTable> {
    ALL_TABLES.iter().find(|t| t.family == tag)
}
