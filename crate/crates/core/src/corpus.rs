//! Bundled example collections.

use crate::error::Result;
use crate::ribbon::{parse_collection, RibbonGraph};

#[derive(Debug, Clone, Copy)]
pub struct CorpusItem {
    pub name: &'static str,
    pub text: &'static str,
    pub genus: usize,
    pub components: usize,
    /// Hand-checked dual ball vertices, when known.
    pub ball: Option<&'static [&'static [i64]]>,
    /// Slopes and multiplicities when the item is a torus geodesic collection.
    pub geodesics: Option<&'static [(i64, i64, u64)]>,
}

impl CorpusItem {
    pub fn graph(&self) -> Result<RibbonGraph> {
        parse_collection(self.text)
    }
}

pub const CORPUS: &[CorpusItem] = &[
    CorpusItem {
        name: "torus-square",
        text: include_str!("../corpus/torus-square.rg"),
        genus: 1,
        components: 2,
        ball: Some(&[&[-1, -1], &[-1, 1], &[1, -1], &[1, 1]]),
        geodesics: Some(&[(1, 0, 1), (0, 1, 1)]),
    },
    CorpusItem {
        name: "sphere-figure-eight",
        text: include_str!("../corpus/sphere-figure-eight.rg"),
        genus: 0,
        components: 1,
        ball: None,
        geodesics: None,
    },
    CorpusItem {
        name: "torus-hexagon",
        text: include_str!("../corpus/torus-hexagon.rg"),
        genus: 1,
        components: 3,
        ball: None,
        geodesics: Some(&[(1, 0, 1), (0, 1, 1), (1, 1, 1)]),
    },
    CorpusItem {
        name: "torus-rectangle",
        text: include_str!("../corpus/torus-rectangle.rg"),
        genus: 1,
        components: 3,
        ball: None,
        geodesics: Some(&[(1, 0, 2), (0, 1, 1)]),
    },
    CorpusItem {
        name: "genus2-two-curves",
        text: include_str!("../corpus/genus2-two-curves.rg"),
        genus: 2,
        components: 2,
        ball: None,
        geodesics: None,
    },
    CorpusItem {
        name: "genus2-separating",
        text: include_str!("../corpus/genus2-separating.rg"),
        genus: 2,
        components: 1,
        ball: None,
        geodesics: None,
    },
];

pub fn find(name: &str) -> Option<&'static CorpusItem> {
    CORPUS.iter().find(|item| item.name == name)
}
