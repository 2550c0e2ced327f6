use crate::error::{Error, Result};

/// One crossing `X[i,j,k,l]`: the under strand runs from edge `i` to edge
/// `k`, the over strand joins `j` and `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub labels: [usize; 4],
    /// +1 for a right-handed crossing, -1 for left-handed.
    pub sign: i8,
}

/// A validated single-component knot diagram in PD notation. Edge labels
/// run `1..=2n` along the orientation of the knot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotDiagram {
    crossings: Vec<Crossing>,
}

impl KnotDiagram {
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// Edge following `e` along the knot.
    pub fn next_edge(&self, e: usize) -> usize {
        e % self.edge_count() + 1
    }

    /// The PD text `X[a,b,c,d] X[...]`.
    pub fn to_pd(&self) -> String {
        self.crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.labels;
                format!("X[{a},{b},{cc},{d}]")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Parse `X[a,b,c,d] X[...] ...`. Separating commas and an enclosing
/// `PD[...]` are tolerated.
pub fn parse_pd(text: &str) -> Result<KnotDiagram> {
    let mut body = text.trim();
    if let Some(inner) = body.strip_prefix("PD[").and_then(|b| b.strip_suffix(']')) {
        body = inner;
    }
    let mut tuples = Vec::new();
    let mut rest = body.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    while !rest.is_empty() {
        let syntax = || Error::PdSyntax(rest.chars().take(16).collect());
        let inner = rest.strip_prefix("X[").ok_or_else(syntax)?;
        let close = inner.find(']').ok_or_else(syntax)?;
        let nums: Vec<usize> = inner[..close]
            .split(',')
            .map(|s| s.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| syntax())?;
        let labels: [usize; 4] = nums.try_into().map_err(|_| syntax())?;
        if labels.contains(&0) {
            return Err(syntax());
        }
        tuples.push(labels);
        rest = inner[close + 1..].trim_start_matches(|c: char| c.is_whitespace() || c == ',');
    }
    from_tuples(&tuples)
}

/// Validate raw crossing tuples and infer crossing signs.
pub fn from_tuples(tuples: &[[usize; 4]]) -> Result<KnotDiagram> {
    if tuples.is_empty() {
        return Err(Error::EmptyPd);
    }
    let max = tuples.iter().flatten().copied().max().unwrap();
    let mut count = vec![0usize; max + 1];
    for &l in tuples.iter().flatten() {
        count[l] += 1;
    }
    if let Some((label, &c)) = count.iter().enumerate().skip(1).find(|(_, &c)| c != 2) {
        return Err(Error::PdMultiplicity { label, count: c });
    }
    let edges = 2 * tuples.len();
    if max != edges {
        return Err(Error::PdSyntax(format!("labels must be 1..{edges}, found {max}")));
    }
    if components(tuples, edges) > 1 {
        return Err(Error::PdMultiComponent);
    }
    let next = |e: usize| e % edges + 1;
    let mut crossings = Vec::with_capacity(tuples.len());
    for &[i, j, k, l] in tuples {
        if k != next(i) || !(j == next(l) || l == next(j)) {
            return Err(Error::PdSyntax(format!("X[{i},{j},{k},{l}] does not follow the orientation")));
        }
        let positive = i == j || k == l || j == next(l);
        crossings.push(Crossing { labels: [i, j, k, l], sign: if positive { 1 } else { -1 } });
    }
    Ok(KnotDiagram { crossings })
}

// Number of closed strands: every label is an edge joining two crossings,
// and each crossing continues i-k and j-l.
fn components(tuples: &[[usize; 4]], edges: usize) -> usize {
    let mut parent: Vec<usize> = (0..=edges).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &[i, j, k, l] in tuples {
        for (a, b) in [(i, k), (j, l)] {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    (1..=edges).filter(|&e| find(&mut parent, e) == e).count()
}

/// Parse a PD file: one knot per line, `name: X[...] ...`. Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_pd_file(text: &str) -> Result<Vec<(String, KnotDiagram)>> {
    let mut out = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, code) = line
            .split_once(':')
            .ok_or_else(|| Error::FileFormat { line: n + 1, reason: "expected `name: X[...]`".into() })?;
        let d = parse_pd(code).map_err(|e| Error::FileFormat { line: n + 1, reason: e.to_string() })?;
        out.push((name.trim().to_string(), d));
    }
    Ok(out)
}
