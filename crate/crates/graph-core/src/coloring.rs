use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::GraphError;

/// Vertex colors (positive integers, `None` for unassigned) and an optional
/// witness map giving, per vertex, the color of its uniquely colored neighbor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub colors: Vec<Option<u32>>,
    pub witness: Option<Vec<Option<u32>>>,
}

impl Coloring {
    pub fn total(colors: Vec<u32>) -> Self {
        Coloring { colors: colors.into_iter().map(Some).collect(), witness: None }
    }

    pub fn partial(colors: Vec<Option<u32>>) -> Self {
        Coloring { colors, witness: None }
    }

    pub fn with_witness(mut self, witness: Vec<Option<u32>>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors[v]
    }

    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    /// Number of distinct assigned colors.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().flatten().collect::<BTreeSet<_>>().len()
    }

    pub fn max_color(&self) -> u32 {
        self.colors.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Renames colors to `1..=k` in order of first appearance by vertex id.
    /// The witness map follows the renaming.
    pub fn normalized(&self) -> Coloring {
        let mut map = std::collections::HashMap::new();
        let mut next = 1u32;
        for c in self.colors.iter().flatten() {
            map.entry(*c).or_insert_with(|| {
                next += 1;
                next - 1
            });
        }
        let colors = self.colors.iter().map(|c| c.map(|c| map[&c])).collect();
        let witness = self
            .witness
            .as_ref()
            .map(|w| w.iter().map(|u| u.and_then(|u| map.get(&u).copied())).collect());
        Coloring { colors, witness }
    }

    /// One line per vertex, "v c" or "v -".
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            match c {
                Some(c) => writeln!(s, "{} {}", v + 1, c),
                None => writeln!(s, "{} -", v + 1),
            }
            .unwrap();
        }
        s
    }

    /// Witness lines "v u" for vertices that have one.
    pub fn witness_text(&self) -> String {
        let mut s = String::new();
        if let Some(w) = &self.witness {
            for (v, u) in w.iter().enumerate() {
                if let Some(u) = u {
                    writeln!(s, "{} {}", v + 1, u).unwrap();
                }
            }
        }
        s
    }
}

/// Parses "v c" / "v -" lines for a graph with `n` vertices. Missing vertices
/// are unassigned.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring, GraphError> {
    let mut colors = vec![None; n];
    let mut seen = vec![false; n];
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(GraphError::parse(line_no, "expected \"v c\" or \"v -\""));
        }
        let v: usize = toks[0]
            .parse()
            .map_err(|_| GraphError::parse(line_no, format!("bad vertex {:?}", toks[0])))?;
        if v == 0 || v > n {
            return Err(GraphError::parse(line_no, format!("vertex {v} out of range 1..={n}")));
        }
        if seen[v - 1] {
            return Err(GraphError::parse(line_no, format!("vertex {v} listed twice")));
        }
        seen[v - 1] = true;
        colors[v - 1] = match toks[1] {
            "-" => None,
            t => match t.parse::<u32>() {
                Ok(c) if c > 0 => Some(c),
                _ => return Err(GraphError::parse(line_no, format!("bad color {t:?}"))),
            },
        };
    }
    Ok(Coloring::partial(colors))
}
