//! Diagrams bundled with the crate.

use crate::diagram::{Diagram, DiagramError};

pub const G7_FIGURE2: &str = include_str!("../fixtures/g7_figure2.json");
pub const K7_CONTROL: &str = include_str!("../fixtures/k7_control.json");
pub const TREFOIL: &str = include_str!("../fixtures/trefoil.json");
pub const FIGURE8: &str = include_str!("../fixtures/figure8.json");
pub const HOPF: &str = include_str!("../fixtures/hopf.json");

/// `(name, json)` for every bundled diagram.
pub const ALL: [(&str, &str); 5] = [
    ("g7_figure2", G7_FIGURE2),
    ("k7_control", K7_CONTROL),
    ("trefoil", TREFOIL),
    ("figure8", FIGURE8),
    ("hopf", HOPF),
];

pub fn by_name(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn load(name: &str) -> Option<Result<Diagram, DiagramError>> {
    by_name(name).map(Diagram::parse)
}
