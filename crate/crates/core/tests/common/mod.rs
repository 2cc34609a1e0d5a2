#![allow(dead_code)]

pub mod oracle;
pub mod classical_table;

use cusplevi::pipeline::{classical_table, TableBlock};
use cusplevi::rootsys::Series;
use cusplevi::semisimple::{Characteristic, QClass};
use classical_table::{Block, Ty};

pub const CLASSICAL_TABLE: &str = include_str!("../fixtures/classical_table.txt");

pub fn engine_blocks(blocks: &[TableBlock]) -> Vec<Block> {
    let mut out: Vec<Block> = blocks
        .iter()
        .map(|b| {
            let mut pairs: Vec<(Ty, Ty)> = b.records.iter().map(|r| (Ty::of(&r.levi), Ty::of(&r.centralizer))).collect();
            pairs.sort();
            Block { class: Ty::of(&b.class), pairs }
        })
        .collect();
    out.sort();
    out
}

/// The four classical families of the table with their rank ranges.
pub fn table_groups() -> Vec<(&'static str, Series, u8, std::ops::RangeInclusive<usize>)> {
    vec![
        ("B", Series::B, 1, 2..=6),
        ("C", Series::C, 1, 2..=6),
        ("D", Series::D, 1, 4..=6),
        ("2D", Series::D, 2, 4..=6),
    ]
}

pub fn table_blocks(series: Series, twist: u8, n: usize) -> Vec<TableBlock> {
    classical_table(series, n, twist, Characteristic::Odd, QClass::MinusOne).expect("classical table")
}
