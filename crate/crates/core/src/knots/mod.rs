//! Knot diagrams in PD notation, Wirtinger presentations with peripheral
//! words, presentation files and the built-in knot table.

mod pd;
mod wirtinger;

use std::collections::BTreeMap;
use std::sync::OnceLock;

pub use pd::{from_tuples, parse_pd, parse_pd_file, Crossing, KnotDiagram};
pub use wirtinger::{wirtinger, WirtingerData};

use crate::error::{Error, Result};
use crate::freegroup::{default_names, GroupPresentation, Word};

const TABLE: &str = include_str!("../../data/knots.pd");

// Presentations stored verbatim rather than derived from a diagram.
const VERBATIM: &[(&str, &str, &[&str], &str, &str)] = &[
    (
        "3_1",
        "x",
        &["x3 x1 x3^-1 x2^-1", "x1 x2 x1^-1 x3^-1"],
        "x1",
        "x3^-1 x1^-1 x2^-1 x1 x1 x1",
    ),
    (
        "8_5",
        "y",
        &[
            "y7 y2 y7^-1 y1^-1",
            "y8 y3 y8^-1 y2^-1",
            "y6 y4 y6^-1 y3^-1",
            // negative crossing, matching the letter y1^-1 of the longitude
            "y1 y4 y1^-1 y5^-1",
            "y3 y6 y3^-1 y5^-1",
            "y4 y7 y4^-1 y6^-1",
            "y2 y8 y2^-1 y7^-1",
        ],
        "y1",
        "y7 y8 y6 y1^-1 y3 y4 y2 y5^-1 y1^-1 y1^-1 y1^-1 y1^-1",
    ),
    (
        "8_18",
        "y",
        &[
            "y4 y1 y4^-1 y2^-1",
            "y5 y3 y5^-1 y2^-1",
            "y6 y3 y6^-1 y4^-1",
            "y7 y5 y7^-1 y4^-1",
            "y8 y5 y8^-1 y6^-1",
            "y1 y7 y1^-1 y6^-1",
            // the crossing under which y7 passes into y8 has over arc y2
            "y2 y7 y2^-1 y8^-1",
        ],
        "y1",
        "y4^-1 y5 y6^-1 y7 y8^-1 y1 y2^-1 y3",
    ),
];

fn table() -> &'static BTreeMap<String, KnotDiagram> {
    static T: OnceLock<BTreeMap<String, KnotDiagram>> = OnceLock::new();
    T.get_or_init(|| {
        parse_pd_file(TABLE)
            .expect("bundled knot table parses")
            .into_iter()
            .collect()
    })
}

fn verbatim(name: &str) -> Option<WirtingerData> {
    let &(_, prefix, rels, m, l) = VERBATIM.iter().find(|v| v.0 == name)?;
    let u = rels.len() + 1;
    let presentation = GroupPresentation::parse(default_names(prefix, u), rels).ok()?;
    let meridian = presentation.word(m).ok()?;
    let longitude = presentation.word(l).ok()?;
    Some(WirtingerData { name: name.to_string(), presentation, meridian, longitude })
}

/// Names known to [`builtin`]: the unknot `0_1` and the prime knots with
/// at most ten crossings.
pub fn available() -> Vec<String> {
    let mut names: Vec<String> = vec!["0_1".to_string()];
    names.extend(table().keys().cloned());
    names.sort_by_key(|n| sort_key(n));
    names
}

fn sort_key(name: &str) -> (u32, u32, String) {
    let mut it = name.split('_');
    let a = it.next().and_then(|s| s.parse().ok()).unwrap_or(u32::MAX);
    let b = it.next().and_then(|s| s.parse().ok()).unwrap_or(u32::MAX);
    (a, b, name.to_string())
}

/// Look up a knot by name. `3_1`, `8_5` and `8_18` come with fixed
/// hand-written presentations; the others are derived from the bundled PD
/// table.
pub fn builtin(name: &str) -> Result<WirtingerData> {
    if name == "0_1" {
        let presentation = GroupPresentation::with_default_names(1, vec![])?;
        return Ok(WirtingerData {
            name: name.into(),
            presentation,
            meridian: Word::generator(0),
            longitude: Word::identity(),
        });
    }
    if let Some(w) = verbatim(name) {
        return Ok(w);
    }
    builtin_from_pd(name)
}

/// Diagram-derived presentation from the bundled table, even for knots
/// that also have a hand-written one.
pub fn builtin_from_pd(name: &str) -> Result<WirtingerData> {
    table().get(name).map(|d| wirtinger(d, name)).ok_or_else(|| Error::UnknownKnot {
        name: name.to_string(),
        available: summarize(&available()),
    })
}

/// The bundled PD diagram of a knot.
pub fn builtin_diagram(name: &str) -> Option<&'static KnotDiagram> {
    table().get(name)
}

fn summarize(names: &[String]) -> String {
    if names.len() <= 12 {
        return names.join(", ");
    }
    format!("{}, ..., {} ({} knots)", names[..6].join(", "), names[names.len() - 1], names.len())
}

/// Contents of a presentation file:
///
/// ```text
/// name: 3_1
/// gens: x1 x2 x3
/// rel: x3 x1 x3^-1 x2^-1
/// rel: x1 x2 x1^-1 x3^-1
/// meridian: x1
/// longitude: x3^-1 x1^-1 x2^-1 x1 x1 x1
/// ```
///
/// Only `gens` is required. [`PresentationFile::to_text`] and
/// [`PresentationFile::parse`] are inverse to each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationFile {
    pub name: Option<String>,
    pub presentation: GroupPresentation,
    pub meridian: Option<Word>,
    pub longitude: Option<Word>,
}

impl PresentationFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut name = None;
        let mut names: Option<Vec<String>> = None;
        let mut rels: Vec<(usize, &str)> = Vec::new();
        let mut meridian = None;
        let mut longitude = None;
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |reason: String| Error::FileFormat { line: n + 1, reason };
            let (key, value) = line.split_once(':').ok_or_else(|| bad("expected `key: value`".into()))?;
            let value = value.trim();
            let once = |taken: bool| if taken { Err(bad(format!("duplicate `{key}`"))) } else { Ok(()) };
            match key.trim() {
                "name" => {
                    once(name.is_some())?;
                    name = Some(value.to_string());
                }
                "gens" => {
                    once(names.is_some())?;
                    let list: Vec<String> = value.split_whitespace().map(String::from).collect();
                    for (i, g) in list.iter().enumerate() {
                        if g == "1" || g.contains(['^', ':']) || list[..i].contains(g) {
                            return Err(bad(format!("bad or repeated generator name {g:?}")));
                        }
                    }
                    names = Some(list);
                }
                "rel" => rels.push((n + 1, value)),
                "meridian" => {
                    once(meridian.is_some())?;
                    meridian = Some((n + 1, value));
                }
                "longitude" => {
                    once(longitude.is_some())?;
                    longitude = Some((n + 1, value));
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        let names = names.ok_or(Error::FileFormat { line: 0, reason: "missing `gens:` line".into() })?;
        let word = |(line, text): (usize, &str)| {
            Word::parse(text, &names).map_err(|e| Error::FileFormat { line, reason: e.to_string() })
        };
        let relators = rels.into_iter().map(word).collect::<Result<Vec<_>>>()?;
        let meridian = meridian.map(word).transpose()?;
        let longitude = longitude.map(word).transpose()?;
        let presentation = GroupPresentation::new(names, relators)?;
        Ok(PresentationFile { name, presentation, meridian, longitude })
    }

    pub fn to_text(&self) -> String {
        let g = &self.presentation;
        let mut s = String::new();
        if let Some(n) = &self.name {
            s += &format!("name: {n}\n");
        }
        s += &format!("gens: {}\n", g.names().join(" "));
        for r in g.relators() {
            s += &format!("rel: {}\n", g.display_word(r));
        }
        if let Some(m) = &self.meridian {
            s += &format!("meridian: {}\n", g.display_word(m));
        }
        if let Some(l) = &self.longitude {
            s += &format!("longitude: {}\n", g.display_word(l));
        }
        s
    }

    /// Knot data, requiring both peripheral words.
    pub fn into_knot(self) -> Result<WirtingerData> {
        let missing = |what: &str| Error::FileFormat { line: 0, reason: format!("missing `{what}:` line") };
        let meridian = self.meridian.ok_or_else(|| missing("meridian"))?;
        let longitude = self.longitude.ok_or_else(|| missing("longitude"))?;
        Ok(WirtingerData {
            name: self.name.unwrap_or_default(),
            presentation: self.presentation,
            meridian,
            longitude,
        })
    }
}

impl From<&WirtingerData> for PresentationFile {
    fn from(w: &WirtingerData) -> Self {
        PresentationFile {
            name: Some(w.name.clone()),
            presentation: w.presentation.clone(),
            meridian: Some(w.meridian.clone()),
            longitude: Some(w.longitude.clone()),
        }
    }
}
