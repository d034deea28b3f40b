//! Orthogonality classification.
//!
//! Every label is evaluated independently and all labels that hold are
//! returned, together with grouping witnesses for the quasi-orthogonal
//! labels and offending pairs for each rejected label.
//!
//! Label semantics over a sign matrix `M` with `n` columns:
//!
//! * `ORTHOGONAL`: `M` square and `M * M^T = n * I` (the integer scaling;
//!   the unit-norm matrix would be `M / sqrt(n)`).
//! * `QUASI_A`: on the graph whose vertices are columns and whose edges
//!   join non-orthogonal pairs, every connected component is a clique,
//!   there are at least two components, and at least one edge. The
//!   components are the groups; singletons are permitted.
//! * `QUASI_B`: the column products take exactly the values `{0, c}` for
//!   one constant `c != 0`, and the columns split into groups with all
//!   within-group products zero. The witness is a minimum-group-count
//!   partition found by exact graph coloring.
//! * `SEMI_ROWS` / `SEMI_COLS`: rectangular, and exactly one of the two
//!   Gram matrices is diagonal.
//! * `SEMI_SPLIT`: `cols = 2 * rows`, the first half of the columns are
//!   pairwise orthogonal and the second half pairwise non-orthogonal,
//!   in the given column order. [`exhaustive_semi_split`] searches all
//!   column subsets instead.
//! * `NON_ORTHOGONAL`: no column pair has product zero.
//! * `MIXED`: none of the above.

use crate::error::{Error, Result};
use crate::matrix::{col_spectrum, gram_cols, gram_rows, IntMatrix, PairValue, SignMatrix, Spectrum};

/// Orthogonality labels, in the order they are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Orthogonal,
    QuasiA,
    QuasiB,
    SemiRows,
    SemiCols,
    SemiSplit,
    NonOrthogonal,
    Mixed,
}

impl Label {
    pub fn as_str(&self) -> &'static str {
        match self {
            Label::Orthogonal => "ORTHOGONAL",
            Label::QuasiA => "QUASI_A",
            Label::QuasiB => "QUASI_B",
            Label::SemiRows => "SEMI_ROWS",
            Label::SemiCols => "SEMI_COLS",
            Label::SemiSplit => "SEMI_SPLIT",
            Label::NonOrthogonal => "NON_ORTHOGONAL",
            Label::Mixed => "MIXED",
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Group witness for `QUASI_B`: the partition and the nonzero constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiBWitness {
    pub groups: Vec<Vec<usize>>,
    pub constant: i64,
}

/// Why a label was rejected, with the offending pairs where one exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub label: Label,
    pub reason: String,
    pub pairs: Vec<PairValue>,
}

/// Result of [`classify`]: all labels that hold, their witnesses, and the
/// rejections of the labels that do not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub labels: Vec<Label>,
    pub quasi_a_groups: Option<Vec<Vec<usize>>>,
    pub quasi_b: Option<QuasiBWitness>,
    /// Number of leading columns forming the orthogonal half.
    pub semi_split_index: Option<usize>,
    pub rejections: Vec<Rejection>,
}

impl ClassificationReport {
    pub fn has(&self, label: Label) -> bool {
        self.labels.contains(&label)
    }
}

/// Evaluates every label on the given matrix.
pub fn classify(m: &SignMatrix) -> ClassificationReport {
    let cols = col_spectrum(m);

    let mut labels = Vec::new();
    let mut rejections = Vec::new();
    let mut quasi_a_groups = None;
    let mut quasi_b = None;
    let mut semi_split_index = None;

    match check_orthogonal(m) {
        Ok(()) => labels.push(Label::Orthogonal),
        Err(rej) => rejections.push(rej),
    }
    match check_quasi_a(m, &cols) {
        Ok(groups) => {
            labels.push(Label::QuasiA);
            quasi_a_groups = Some(groups);
        }
        Err(rej) => rejections.push(rej),
    }
    match check_quasi_b(m, &cols) {
        Ok(witness) => {
            labels.push(Label::QuasiB);
            quasi_b = Some(witness);
        }
        Err(rej) => rejections.push(rej),
    }
    let (semi_rows, semi_cols) = check_semi(m);
    match semi_rows {
        Ok(()) => labels.push(Label::SemiRows),
        Err(rej) => rejections.push(rej),
    }
    match semi_cols {
        Ok(()) => labels.push(Label::SemiCols),
        Err(rej) => rejections.push(rej),
    }
    match check_semi_split(m, &cols) {
        Ok(split) => {
            labels.push(Label::SemiSplit);
            semi_split_index = Some(split);
        }
        Err(rej) => rejections.push(rej),
    }
    match check_non_orthogonal(&cols) {
        Ok(()) => labels.push(Label::NonOrthogonal),
        Err(rej) => rejections.push(rej),
    }

    if labels.is_empty() {
        labels.push(Label::Mixed);
    }

    ClassificationReport {
        labels,
        quasi_a_groups,
        quasi_b,
        semi_split_index,
        rejections,
    }
}

fn reject(label: Label, reason: impl Into<String>, pairs: Vec<PairValue>) -> Rejection {
    Rejection {
        label,
        reason: reason.into(),
        pairs,
    }
}

fn check_orthogonal(m: &SignMatrix) -> std::result::Result<(), Rejection> {
    if !m.is_square() {
        return Err(reject(Label::Orthogonal, "matrix is not square", vec![]));
    }
    let n = m.rows();
    let gram = gram_rows(m);
    if gram == IntMatrix::scaled_identity(n, n as i64) {
        return Ok(());
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let value = gram.get(a, b);
            if value != 0 {
                pairs.push(PairValue { a, b, value });
            }
        }
    }
    let reason = if pairs.is_empty() {
        "a row self-product differs from the order"
    } else {
        "some row pairs are not orthogonal"
    };
    Err(reject(Label::Orthogonal, reason, pairs))
}

/// Adjacency over columns: edge iff the pair product is nonzero.
fn column_adjacency(n: usize, spectrum: &Spectrum) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for p in spectrum.pairs() {
        if p.value != 0 {
            adj[p.a][p.b] = true;
            adj[p.b][p.a] = true;
        }
    }
    adj
}

fn connected_components(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut queue = vec![start];
        let mut component = Vec::new();
        seen[start] = true;
        while let Some(v) = queue.pop() {
            component.push(v);
            for u in 0..n {
                if adj[v][u] && !seen[u] {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

fn check_quasi_a(
    m: &SignMatrix,
    spectrum: &Spectrum,
) -> std::result::Result<Vec<Vec<usize>>, Rejection> {
    let n = m.cols();
    let adj = column_adjacency(n, spectrum);
    let edge_count = spectrum.values().filter(|&v| v != 0).count();
    if edge_count == 0 {
        return Err(reject(
            Label::QuasiA,
            "every column pair is orthogonal",
            vec![],
        ));
    }
    let components = connected_components(&adj);
    if components.len() < 2 {
        let pairs = spectrum.pairs().iter().filter(|p| p.value != 0).copied().collect();
        return Err(reject(
            Label::QuasiA,
            "the non-orthogonality graph has a single component",
            pairs,
        ));
    }
    // every component must be a clique
    let mut offenders = Vec::new();
    for component in &components {
        for (i, &a) in component.iter().enumerate() {
            for &b in &component[i + 1..] {
                if !adj[a][b] {
                    offenders.push(PairValue { a, b, value: 0 });
                }
            }
        }
    }
    if !offenders.is_empty() {
        return Err(reject(
            Label::QuasiA,
            "orthogonal column pairs occur inside a connected group",
            offenders,
        ));
    }
    Ok(components)
}

/// First proper coloring with the minimum number of colors, assigning
/// vertices in index order and trying colors in ascending order. The
/// search is canonical, so the witness is deterministic.
fn minimum_coloring(adj: &[Vec<bool>]) -> Vec<usize> {
    let n = adj.len();
    fn extend(adj: &[Vec<bool>], colors: &mut Vec<usize>, v: usize, k: usize) -> bool {
        if v == adj.len() {
            return true;
        }
        let max_used = colors[..v].iter().copied().max().map_or(0, |c| c + 1);
        for c in 0..k.min(max_used + 1) {
            if (0..v).all(|u| !(adj[v][u] && colors[u] == c)) {
                colors[v] = c;
                if extend(adj, colors, v + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    for k in 1..=n {
        let mut colors = vec![0; n];
        if extend(adj, &mut colors, 0, k) {
            return colors;
        }
    }
    unreachable!("n colors always suffice for n vertices")
}

fn groups_from_colors(colors: &[usize]) -> Vec<Vec<usize>> {
    let count = colors.iter().copied().max().map_or(0, |c| c + 1);
    let mut groups = vec![Vec::new(); count];
    for (v, &c) in colors.iter().enumerate() {
        groups[c].push(v);
    }
    groups
}

fn check_quasi_b(
    m: &SignMatrix,
    spectrum: &Spectrum,
) -> std::result::Result<QuasiBWitness, Rejection> {
    let values = spectrum.value_set();
    let nonzero: Vec<i64> = values.iter().copied().filter(|&v| v != 0).collect();
    if nonzero.is_empty() {
        return Err(reject(
            Label::QuasiB,
            "no nonzero column product to serve as the constant",
            vec![],
        ));
    }
    if nonzero.len() > 1 {
        let pairs = spectrum.pairs().iter().filter(|p| p.value != 0).copied().collect();
        return Err(reject(
            Label::QuasiB,
            "column products take more than one nonzero value",
            pairs,
        ));
    }
    if !values.contains(&0) {
        let pairs = spectrum.pairs().to_vec();
        return Err(reject(
            Label::QuasiB,
            "no orthogonal column pair, so every group would be a singleton",
            pairs,
        ));
    }
    let constant = nonzero[0];
    let adj = column_adjacency(m.cols(), spectrum);
    let colors = minimum_coloring(&adj);
    let groups = groups_from_colors(&colors);
    debug_assert!(groups.len() >= 2, "an edge forces at least two groups");
    Ok(QuasiBWitness { groups, constant })
}

fn first_nonzero_off_diagonal(gram: &IntMatrix) -> Option<PairValue> {
    for a in 0..gram.rows() {
        for b in a + 1..gram.cols() {
            let value = gram.get(a, b);
            if value != 0 {
                return Some(PairValue { a, b, value });
            }
        }
    }
    None
}

fn check_semi(
    m: &SignMatrix,
) -> (
    std::result::Result<(), Rejection>,
    std::result::Result<(), Rejection>,
) {
    if m.is_square() {
        let why = "matrix is square";
        return (
            Err(reject(Label::SemiRows, why, vec![])),
            Err(reject(Label::SemiCols, why, vec![])),
        );
    }
    let row_gram = gram_rows(m);
    let col_gram = gram_cols(m);
    let rows_diagonal = row_gram.is_diagonal();
    let cols_diagonal = col_gram.is_diagonal();

    let semi_rows = match (rows_diagonal, cols_diagonal) {
        (true, false) => Ok(()),
        (true, true) => Err(reject(
            Label::SemiRows,
            "both Gram matrices are diagonal",
            vec![],
        )),
        (false, _) => Err(reject(
            Label::SemiRows,
            "the row Gram matrix is not diagonal",
            first_nonzero_off_diagonal(&row_gram).into_iter().collect(),
        )),
    };
    let semi_cols = match (cols_diagonal, rows_diagonal) {
        (true, false) => Ok(()),
        (true, true) => Err(reject(
            Label::SemiCols,
            "both Gram matrices are diagonal",
            vec![],
        )),
        (false, _) => Err(reject(
            Label::SemiCols,
            "the column Gram matrix is not diagonal",
            first_nonzero_off_diagonal(&col_gram).into_iter().collect(),
        )),
    };
    (semi_rows, semi_cols)
}

fn check_semi_split(
    m: &SignMatrix,
    spectrum: &Spectrum,
) -> std::result::Result<usize, Rejection> {
    let n = m.rows();
    if m.cols() != 2 * n {
        return Err(reject(
            Label::SemiSplit,
            "column count is not twice the row count",
            vec![],
        ));
    }
    let mut offenders = Vec::new();
    for p in spectrum.pairs() {
        let both_first = p.a < n && p.b < n;
        let both_second = p.a >= n && p.b >= n;
        if both_first && p.value != 0 {
            offenders.push(*p);
        }
        if both_second && p.value == 0 {
            offenders.push(*p);
        }
    }
    if offenders.is_empty() {
        Ok(n)
    } else {
        Err(reject(
            Label::SemiSplit,
            "the halves violate the orthogonal / non-orthogonal split",
            offenders,
        ))
    }
}

fn check_non_orthogonal(spectrum: &Spectrum) -> std::result::Result<(), Rejection> {
    let zero_pairs: Vec<PairValue> = spectrum
        .pairs()
        .iter()
        .filter(|p| p.value == 0)
        .copied()
        .collect();
    if zero_pairs.is_empty() {
        Ok(())
    } else {
        Err(reject(
            Label::NonOrthogonal,
            "some column pairs are orthogonal",
            zero_pairs,
        ))
    }
}

/// Witness for a column split found by exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitWitness {
    /// Columns forming the pairwise-orthogonal half, ascending.
    pub orthogonal: Vec<usize>,
    /// The remaining columns, pairwise non-orthogonal, ascending.
    pub non_orthogonal: Vec<usize>,
}

/// Guard for [`exhaustive_semi_split`]; `C(20, 10)` subsets stay cheap.
pub const MAX_EXHAUSTIVE_SPLIT_COLS: usize = 20;

/// Searches all column subsets of size `rows` for a split into an
/// orthogonal half and a non-orthogonal half, regardless of column order.
/// Returns the lexicographically first witness, or `None`.
pub fn exhaustive_semi_split(m: &SignMatrix) -> Result<Option<SplitWitness>> {
    let n = m.rows();
    if m.cols() != 2 * n {
        return Ok(None);
    }
    if m.cols() > MAX_EXHAUSTIVE_SPLIT_COLS {
        return Err(Error::OrderTooLarge {
            n: m.cols(),
            max: MAX_EXHAUSTIVE_SPLIT_COLS,
        });
    }
    let spectrum = col_spectrum(m);
    let total = m.cols();
    let adj = column_adjacency(total, &spectrum);

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    fn search(
        adj: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        next: usize,
        want: usize,
        total: usize,
    ) -> bool {
        if chosen.len() == want {
            // complement must be pairwise non-orthogonal
            let complement: Vec<usize> =
                (0..total).filter(|c| !chosen.contains(c)).collect();
            for (i, &a) in complement.iter().enumerate() {
                for &b in &complement[i + 1..] {
                    if !adj[a][b] {
                        return false;
                    }
                }
            }
            return true;
        }
        for c in next..total {
            if total - c < want - chosen.len() {
                break;
            }
            // candidate must be orthogonal to everything already chosen
            if chosen.iter().all(|&p| !adj[p][c]) {
                chosen.push(c);
                if search(adj, chosen, c + 1, want, total) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    if search(&adj, &mut chosen, 0, n, total) {
        let non_orthogonal = (0..total).filter(|c| !chosen.contains(c)).collect();
        Ok(Some(SplitWitness {
            orthogonal: chosen,
            non_orthogonal,
        }))
    } else {
        Ok(None)
    }
}
