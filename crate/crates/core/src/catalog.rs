//! Fiber types with their expected jumps, and the dual graphs of those that are encoded.
//!
//! Every row of the genus 1 and genus 2 jump tables is stored in [`TABLE_ROWS`].
//! A row becomes a catalog entry when a graph can be built for it: from an
//! embedded graph file, from a parameterized family, or by joining two genus 1
//! fibers through a chain of rational curves of multiplicity one (the `-m`
//! types). Each genus 1 graph file names one reduced component `o`, which is
//! where joins attach.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::dual_graph::DualGraph;
use crate::error::{Error, Result};
use crate::graph_file::parse_graph;
use crate::jumps::{jump_spectrum, JumpSpectrum, DEFAULT_N_MIN, DEFAULT_SAMPLES};

/// One cell of a jump table: a fiber type and its jumps with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub table: u8,
    pub name: &'static str,
    pub jumps: &'static [(u64, u64)],
}

impl TableRow {
    pub fn genus(&self) -> u32 {
        if self.table == 1 {
            1
        } else {
            2
        }
    }

    pub fn key(&self) -> String {
        format!("t{}:{}", self.table, self.name)
    }

    pub fn expected_jumps(&self) -> Vec<BigRational> {
        let mut v: Vec<BigRational> = self
            .jumps
            .iter()
            .map(|&(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
            .collect();
        v.sort();
        v
    }
}

macro_rules! rows {
    ($($t:literal $name:literal [$(($a:literal, $b:literal)),*];)*) => {
        &[$(TableRow { table: $t, name: $name, jumps: &[$(($a, $b)),*] }),*]
    };
}

/// Table cells with a single genus 2 value are stored with multiplicity two.
pub const TABLE_ROWS: &[TableRow] = rows! {
    1 "I0" [(0, 1)];
    1 "I0*" [(1, 2)];
    1 "In" [(0, 1)];
    1 "In*" [(1, 2)];
    1 "II" [(1, 6)];
    1 "II*" [(5, 6)];
    1 "III" [(1, 4)];
    1 "III*" [(3, 4)];
    1 "IV" [(1, 3)];
    1 "IV*" [(2, 3)];

    2 "I0-0-0" [(0, 1), (0, 1)];
    2 "I0-0-0*" [(1, 2), (1, 2)];
    2 "II" [(0, 1), (1, 2)];
    2 "III" [(1, 3), (2, 3)];
    2 "IV" [(1, 6), (5, 6)];
    2 "V" [(1, 6), (2, 6)];
    2 "V*" [(4, 6), (5, 6)];
    2 "VI" [(1, 4), (3, 4)];
    2 "VII" [(1, 8), (3, 8)];
    2 "VII*" [(5, 8), (7, 8)];
    2 "VIII-1" [(1, 10), (3, 10)];
    2 "VIII-2" [(3, 10), (9, 10)];
    2 "VIII-3" [(1, 10), (7, 10)];
    2 "VIII-4" [(7, 10), (9, 10)];
    2 "IX-1" [(1, 5), (3, 5)];
    2 "IX-2" [(1, 5), (2, 5)];
    2 "IX-3" [(3, 5), (4, 5)];
    2 "IX-4" [(2, 5), (4, 5)];

    3 "I0-I0-m" [(0, 1), (0, 1)];
    3 "I0*-I0*-m" [(1, 2), (1, 2)];
    3 "I0-I0*-m" [(0, 1), (1, 2)];
    3 "2I0-m" [(0, 1), (1, 2)];
    3 "2I0*-m" [(1, 4), (3, 4)];
    3 "I0-II-m" [(0, 1), (1, 6)];
    3 "I0-II*-m" [(0, 1), (5, 6)];
    3 "I0-IV-m" [(0, 1), (1, 3)];
    3 "I0-IV*-m" [(0, 1), (2, 3)];
    3 "I0*-II-m" [(1, 6), (3, 6)];
    3 "I0*-II*-m" [(3, 6), (5, 6)];
    3 "I0*-II*-alpha" [(3, 6), (5, 6)];
    3 "I0*-IV-m" [(1, 2), (1, 3)];
    3 "I0*-IV*-m" [(1, 2), (2, 3)];
    3 "I0*-IV*-alpha" [(1, 2), (2, 3)];
    3 "I0-III-m" [(0, 1), (1, 4)];
    3 "I0-III*-m" [(0, 1), (3, 4)];
    3 "I0*-III-m" [(1, 4), (2, 4)];
    3 "I0*-III*-m" [(2, 4), (3, 4)];
    3 "I0*-III*-alpha" [(2, 4), (3, 4)];
    3 "2II-m" [(1, 12), (7, 12)];
    3 "2II*-m" [(5, 12), (11, 12)];
    3 "II-II-m" [(1, 6), (1, 6)];
    3 "II-II*-m" [(1, 6), (5, 6)];
    3 "II*-II*-m" [(5, 6), (5, 6)];
    3 "II*-II*-alpha" [(5, 6), (5, 6)];
    3 "II-IV-m" [(1, 6), (2, 6)];
    3 "II-IV*-m" [(1, 6), (4, 6)];
    3 "II*-IV-m" [(2, 6), (5, 6)];
    3 "II*-IV-alpha" [(2, 6), (5, 6)];
    3 "II*-IV*-m" [(4, 6), (5, 6)];
    3 "II*-IV*-alpha" [(4, 6), (5, 6)];
    3 "2IV-m" [(1, 6), (4, 6)];
    3 "2IV*-m" [(2, 6), (5, 6)];
    3 "IV-IV-m" [(1, 3), (1, 3)];
    3 "IV-IV*-m" [(1, 3), (2, 3)];
    3 "IV*-IV*-m" [(2, 3), (2, 3)];
    3 "IV*-IV*-alpha" [(2, 3), (2, 3)];
    3 "II-III-m" [(2, 12), (3, 12)];
    3 "II-III*-m" [(2, 12), (9, 12)];
    3 "II*-III-m" [(2, 12), (10, 12)];
    3 "II*-III-alpha" [(3, 12), (10, 12)];
    3 "II*-III*-m" [(9, 12), (10, 12)];
    3 "II*-III*-alpha" [(9, 12), (10, 12)];
    3 "IV-III-m" [(3, 12), (4, 12)];
    3 "IV-III*-m" [(4, 12), (9, 12)];
    3 "IV-III*-alpha" [(4, 12), (9, 12)];
    3 "IV*-III-m" [(3, 12), (8, 12)];
    3 "IV*-III*-m" [(8, 12), (9, 12)];
    3 "IV*-III*-alpha" [(8, 12), (9, 12)];
    3 "2III-m" [(1, 8), (5, 8)];
    3 "2III*-m" [(3, 8), (7, 8)];
    3 "III-III-m" [(1, 4), (1, 4)];
    3 "III-III*-m" [(1, 4), (3, 4)];
    3 "III*-III*-m" [(3, 4), (3, 4)];
    3 "III*-III*-alpha" [(3, 4), (3, 4)];

    4 "In-0-0" [(0, 1), (0, 1)];
    4 "In-I0-m" [(0, 1), (0, 1)];
    4 "I0-In*-m" [(0, 1), (1, 2)];
    4 "In-I0*-m" [(0, 1), (1, 2)];
    4 "In-0-0*" [(1, 2), (1, 2)];
    4 "I0*-In*-m" [(1, 2), (1, 2)];
    4 "IIn-0" [(0, 1), (1, 2)];
    4 "IIn-0*" [(0, 1), (1, 2)];
    4 "II-In-m" [(0, 1), (1, 6)];
    4 "II*-In-m" [(0, 1), (5, 6)];
    4 "IV-In-m" [(0, 1), (1, 3)];
    4 "IV*-In-m" [(0, 1), (2, 3)];
    4 "II-In*-m" [(1, 6), (3, 6)];
    4 "II*-In*-m" [(3, 6), (5, 6)];
    4 "II*-In*-alpha" [(3, 6), (5, 6)];
    4 "IV-In*-m" [(2, 6), (3, 6)];
    4 "IV*-In*-m" [(3, 6), (4, 6)];
    4 "IV*-In*-alpha" [(3, 6), (4, 6)];
    4 "IV-IIn" [(0, 1), (1, 3)];
    4 "IV*-IIn" [(0, 1), (2, 3)];
    4 "II-IIn*" [(1, 6), (3, 6)];
    4 "II*-IIn*" [(3, 6), (5, 6)];
    4 "III-In-m" [(0, 1), (1, 4)];
    4 "III*-In-m" [(0, 1), (3, 4)];
    4 "III-In*-m" [(1, 4), (2, 4)];
    4 "III*-In*-m" [(2, 4), (3, 4)];
    4 "III*-In*-alpha" [(2, 4), (3, 4)];
    4 "III-IIn" [(0, 1), (3, 4)];
    4 "III*-IIn" [(0, 1), (3, 4)];
    4 "III-IIn*" [(1, 4), (2, 4)];
    4 "III*-IIn*" [(2, 4), (3, 4)];

    5 "In-p-0" [(0, 1), (0, 1)];
    5 "In-Ip-m" [(0, 1), (0, 1)];
    5 "In-p-0*" [(1, 2), (1, 2)];
    5 "In*-Ip*-m" [(1, 2), (1, 2)];
    5 "In-Ip*-m" [(0, 1), (1, 2)];
    5 "2In-m" [(0, 1), (1, 2)];
    5 "2In*-m" [(1, 4), (3, 4)];
    5 "In-p" [(0, 1), (1, 2)];
    5 "IIIn" [(1, 4), (3, 4)];

    6 "In-p-q" [(0, 1), (0, 1)];
    6 "In-p-q*" [(1, 2), (1, 2)];
    6 "IIn-p" [(0, 1), (1, 2)];
    6 "IIn-p*" [(0, 1), (1, 2)];
    6 "IIIn" [(1, 3), (2, 3)];
    6 "IIIn*" [(1, 6), (5, 6)];
};

/// Rows whose table value disagrees with the union of the jumps of the two
/// joined genus 1 fibers; no graph is attached to them.
pub const UNENCODED_JOINS: &[&str] = &["II*-III-m"];

const FILES: &[(&str, &str)] = &[
    ("I0", include_str!("../catalog/i0.graph")),
    ("I0*", include_str!("../catalog/i0_star.graph")),
    ("II", include_str!("../catalog/ii.graph")),
    ("II*", include_str!("../catalog/ii_star.graph")),
    ("III", include_str!("../catalog/iii.graph")),
    ("III*", include_str!("../catalog/iii_star.graph")),
    ("IV", include_str!("../catalog/iv.graph")),
    ("IV*", include_str!("../catalog/iv_star.graph")),
];

const GENUS_TWO_FILES: &[(&str, &str)] = &[
    ("I0-0-0", include_str!("../catalog/i0-0-0.graph")),
    ("I0-0-0*", include_str!("../catalog/i0-0-0_star.graph")),
    ("VI", include_str!("../catalog/vi.graph")),
];

/// Parameters used for the family members that appear in the catalog.
pub const DEFAULT_N: u64 = 3;
pub const DEFAULT_P: u64 = 2;
pub const DEFAULT_Q: u64 = 4;
pub const DEFAULT_CHAIN: u64 = 1;

fn file_graph(text: &str) -> DualGraph {
    parse_graph(text).expect("embedded catalog file is valid")
}

fn need(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::BadInput(msg.into()))
    }
}

fn add_chain(g: &mut DualGraph, prefix: &str, from: usize, to: usize, len: u64, mult: u64) {
    let mut prev = from;
    for i in 1..=len {
        let v = g.add_vertex(format!("{prefix}{i}"), 0, mult).expect("fresh id");
        g.add_edge_between(prev, v);
        prev = v;
    }
    g.add_edge_between(prev, to);
}

/// `I_n`: a cycle of `n >= 2` reduced rational curves.
pub fn cycle_fiber(n: u64) -> Result<DualGraph> {
    need(n >= 2, "I_n needs n >= 2")?;
    let mut g = DualGraph::named(format!("I{n}"));
    let o = g.add_vertex("o", 0, 1)?;
    add_chain(&mut g, "c", o, o, n - 1, 1);
    g.validated()
}

/// `I_n^*`: a chain of `n + 1` double curves with two reduced curves at each end.
pub fn dihedral_fiber(n: u64) -> Result<DualGraph> {
    let mut g = DualGraph::named(format!("I{n}*"));
    let ends: Vec<usize> = (0..=n)
        .map(|i| g.add_vertex(format!("d{i}"), 0, 2))
        .collect::<Result<_>>()?;
    for w in ends.windows(2) {
        g.add_edge_between(w[0], w[1]);
    }
    let (first, last) = (ends[0], *ends.last().unwrap());
    for (id, at) in [("o", first), ("l2", first), ("l3", last), ("l4", last)] {
        let v = g.add_vertex(id, 0, 1)?;
        g.add_edge_between(v, at);
    }
    g.validated()
}

/// `I_{n-0-0}`: an elliptic curve closed up by a cycle through `n >= 1` rational curves.
pub fn elliptic_with_cycle(n: u64) -> Result<DualGraph> {
    need(n >= 1, "I_{n-0-0} needs n >= 1")?;
    let mut g = DualGraph::named(format!("I{n}-0-0"));
    let e = g.add_vertex("e", 1, 1)?;
    add_chain(&mut g, "c", e, e, n, 1);
    g.validated()
}

/// `I_{n-p-0}`: two cycles of lengths `n, p >= 1` through a common rational curve.
pub fn figure_eight(n: u64, p: u64) -> Result<DualGraph> {
    need(n >= 1 && p >= 1, "I_{n-p-0} needs n, p >= 1")?;
    let mut g = DualGraph::named(format!("I{n}-{p}-0"));
    let r = g.add_vertex("r", 0, 1)?;
    add_chain(&mut g, "a", r, r, n, 1);
    add_chain(&mut g, "b", r, r, p, 1);
    g.validated()
}

/// `I_{n-p-q}`: two rational curves joined by three chains with `n, p, q >= 1` curves.
pub fn theta(n: u64, p: u64, q: u64) -> Result<DualGraph> {
    need(n >= 1 && p >= 1 && q >= 1, "I_{n-p-q} needs n, p, q >= 1")?;
    let mut g = DualGraph::named(format!("I{n}-{p}-{q}"));
    let s = g.add_vertex("s", 0, 1)?;
    let t = g.add_vertex("t", 0, 1)?;
    add_chain(&mut g, "a", s, t, n - 1, 1);
    add_chain(&mut g, "b", s, t, p - 1, 1);
    add_chain(&mut g, "c", s, t, q - 1, 1);
    g.validated()
}

/// A genus 1 fiber by name, with its attachment component `o`.
pub fn genus_one_piece(name: &str) -> Result<DualGraph> {
    if let Some((_, text)) = FILES.iter().find(|(n, _)| *n == name) {
        return Ok(file_graph(text));
    }
    match name {
        "In" => cycle_fiber(DEFAULT_N),
        "Ip" => cycle_fiber(DEFAULT_P),
        "In*" => dihedral_fiber(DEFAULT_N),
        "Ip*" => dihedral_fiber(DEFAULT_P),
        _ => Err(Error::UnknownType(name.into())),
    }
}

/// Two fibers joined at their components `o` by `chain` reduced rational curves.
pub fn join(left: &DualGraph, right: &DualGraph, chain: u64) -> Result<DualGraph> {
    let mut g = DualGraph::new();
    let mut attach = Vec::new();
    for (prefix, part) in [("l.", left), ("r.", right)] {
        let base = g.vertices().len();
        for v in part.vertices() {
            g.add_vertex(format!("{prefix}{}", v.id), v.genus, v.multiplicity)?;
        }
        for e in part.edges() {
            g.add_edge_between(base + e.source, base + e.target);
        }
        let o = part
            .index_of("o")
            .ok_or_else(|| Error::BadInput("joined fiber has no component `o`".into()))?;
        need(part.multiplicity(o) == 1, "join point must be reduced")?;
        attach.push(base + o);
    }
    add_chain(&mut g, "m", attach[0], attach[1], chain, 1);
    g.validated()
}

fn join_parts(name: &str) -> Option<(&str, &str)> {
    let body = name.strip_suffix("-m")?;
    let (a, b) = body.split_once('-')?;
    (!b.contains('-')).then_some((a, b))
}

fn build(row: &TableRow) -> Option<Result<DualGraph>> {
    let files = if row.table == 1 { FILES } else { GENUS_TWO_FILES };
    if let Some((_, text)) = files.iter().find(|(n, _)| *n == row.name) {
        return Some(Ok(file_graph(text)));
    }
    let graph = match (row.table, row.name) {
        (1, "In") => cycle_fiber(DEFAULT_N),
        (1, "In*") => dihedral_fiber(DEFAULT_N),
        (4, "In-0-0") => elliptic_with_cycle(DEFAULT_N),
        (5, "In-p-0") => figure_eight(DEFAULT_N, DEFAULT_P),
        (6, "In-p-q") => theta(DEFAULT_N, DEFAULT_P, DEFAULT_Q),
        (t, name) if t > 1 && !UNENCODED_JOINS.contains(&name) => {
            let (a, b) = join_parts(name)?;
            let (left, right) = (genus_one_piece(a).ok()?, genus_one_piece(b).ok()?);
            join(&left, &right, DEFAULT_CHAIN)
        }
        _ => return None,
    };
    Some(graph)
}

/// A table row with an encoded dual graph.
#[derive(Debug, Clone)]
pub struct FiberType {
    pub name: String,
    pub table: u8,
    pub graph: DualGraph,
    pub expected_jumps: Vec<BigRational>,
}

impl FiberType {
    pub fn genus(&self) -> u32 {
        if self.table == 1 {
            1
        } else {
            2
        }
    }

    pub fn key(&self) -> String {
        format!("t{}:{}", self.table, self.name)
    }
}

/// All encoded fiber types, in table order.
pub fn entries() -> Vec<FiberType> {
    TABLE_ROWS
        .iter()
        .filter_map(|row| {
            let mut graph = build(row)?.expect("catalog graph builds");
            graph.set_name(row.name);
            Some(FiberType {
                name: row.name.to_string(),
                table: row.table,
                graph,
                expected_jumps: row.expected_jumps(),
            })
        })
        .collect()
}

/// Qualified keys `t<table>:<name>` of all encoded fiber types.
pub fn catalog_list() -> Vec<String> {
    entries().iter().map(FiberType::key).collect()
}

/// Finds an encoded fiber type.
///
/// A bare name prefers the genus 1 entry; `g1:`, `g2:` and `t<k>:` prefixes select explicitly.
pub fn lookup(query: &str) -> Result<FiberType> {
    type Filter = Box<dyn Fn(&FiberType) -> bool>;
    let (filter, name): (Filter, &str) = match query.split_once(':') {
        Some((q, rest)) => {
            let f: Filter = match q {
                "g1" => Box::new(|e| e.genus() == 1),
                "g2" => Box::new(|e| e.genus() == 2),
                t if t.len() == 2 && t.starts_with('t') => {
                    let k: u8 = t[1..].parse().map_err(|_| Error::UnknownType(query.into()))?;
                    Box::new(move |e| e.table == k)
                }
                _ => return Err(Error::UnknownType(query.into())),
            };
            (f, rest)
        }
        None => (Box::new(|_| true), query),
    };
    let mut hits: Vec<FiberType> = entries()
        .into_iter()
        .filter(|e| e.name == name && filter(e))
        .collect();
    if hits.iter().any(|e| e.genus() == 1) {
        hits.retain(|e| e.genus() == 1);
    }
    match hits.len() {
        0 => Err(Error::UnknownType(query.into())),
        1 => Ok(hits.pop().unwrap()),
        _ => Err(Error::BadInput(format!(
            "`{query}` is ambiguous: {}",
            hits.iter().map(FiberType::key).collect::<Vec<_>>().join(", ")
        ))),
    }
}

/// Comparison of computed and expected jumps for one fiber type.
#[derive(Debug, Clone)]
pub struct EntryResult {
    pub entry: FiberType,
    pub computed: Result<JumpSpectrum>,
}

impl EntryResult {
    pub fn passed(&self) -> bool {
        self.computed
            .as_ref()
            .is_ok_and(|s| s.jumps == self.entry.expected_jumps)
    }
}

pub fn format_jumps(jumps: &[BigRational]) -> String {
    let parts: Vec<String> = jumps.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

impl fmt::Display for EntryResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let expected = format_jumps(&self.entry.expected_jumps);
        match &self.computed {
            Ok(s) => write!(
                f,
                "{status} {} expected={expected} computed={}",
                self.entry.key(),
                format_jumps(&s.jumps)
            ),
            Err(e) => write!(f, "{status} {} expected={expected} error: {e}", self.entry.key()),
        }
    }
}

pub fn check_entry(entry: FiberType) -> EntryResult {
    let computed = jump_spectrum(&entry.graph, DEFAULT_SAMPLES, DEFAULT_N_MIN);
    EntryResult { entry, computed }
}

/// Computes the jumps of a catalog entry and compares them with its table row.
pub fn catalog_jumps(name: &str) -> Result<EntryResult> {
    Ok(check_entry(lookup(name)?))
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub results: Vec<EntryResult>,
}

impl TableReport {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.results.len()
    }

    pub fn summary(&self) -> String {
        format!("{}/{} PASS", self.passed(), self.results.len())
    }
}

/// Checks the given entries in parallel; the report is sorted by key.
pub fn run_entries(entries: Vec<FiberType>) -> TableReport {
    let mut results: Vec<EntryResult> = entries.into_par_iter().map(check_entry).collect();
    results.sort_by_key(|r| r.entry.key());
    TableReport { results }
}

/// Regression over every encoded fiber type of the given genus.
pub fn run_table(genus: u32) -> Result<TableReport> {
    need(genus == 1 || genus == 2, "tables exist for genus 1 and 2")?;
    Ok(run_entries(
        entries().into_iter().filter(|e| e.genus() == genus).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_well_formed() {
        for row in TABLE_ROWS {
            assert_eq!(row.jumps.len() as u32, row.genus(), "{}", row.key());
            assert!(row.jumps.iter().all(|&(a, b)| a < b), "{}", row.key());
        }
        assert_eq!(TABLE_ROWS.iter().filter(|r| r.table == 1).count(), 10);
        let mut keys: Vec<String> = TABLE_ROWS.iter().map(TableRow::key).collect();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), TABLE_ROWS.len());
    }

    #[test]
    fn graphs_have_table_genus() {
        for e in entries() {
            assert!(e.graph.validate().is_empty(), "{}", e.key());
            assert_eq!(e.graph.genus().unwrap(), e.genus() as u64, "{}", e.key());
        }
    }

    #[test]
    fn every_genus_one_type_is_encoded() {
        assert_eq!(entries().iter().filter(|e| e.genus() == 1).count(), 10);
        assert!(catalog_list().contains(&"t2:VI".to_string()));
    }

    #[test]
    fn families() {
        for n in 2..6 {
            assert_eq!(cycle_fiber(n).unwrap().genus().unwrap(), 1);
            assert_eq!(cycle_fiber(n).unwrap().vertices().len() as u64, n);
        }
        assert!(cycle_fiber(1).is_err());
        for n in 0..4 {
            let g = dihedral_fiber(n).unwrap();
            assert_eq!(g.genus().unwrap(), 1);
            assert_eq!(g.vertices().len() as u64, n + 5);
        }
        assert_eq!(elliptic_with_cycle(1).unwrap().genus().unwrap(), 2);
        assert_eq!(figure_eight(1, 3).unwrap().genus().unwrap(), 2);
        assert_eq!(theta(1, 1, 2).unwrap().genus().unwrap(), 2);
        assert!(theta(0, 1, 1).is_err());
    }

    #[test]
    fn join_shapes() {
        assert_eq!(join_parts("I0*-IV-m"), Some(("I0*", "IV")));
        assert_eq!(join_parts("2I0-m"), None);
        assert_eq!(join_parts("I0*-II*-alpha"), None);
        let g = join(&genus_one_piece("IV").unwrap(), &genus_one_piece("I0").unwrap(), 0).unwrap();
        assert_eq!(g.genus().unwrap(), 2);
        assert_eq!(g.vertices().len(), 5);
    }

    #[test]
    fn lookup_rules() {
        assert_eq!(lookup("II").unwrap().genus(), 1);
        assert_eq!(lookup("g1:II").unwrap().table, 1);
        assert!(matches!(lookup("g2:II"), Err(Error::UnknownType(_))));
        assert_eq!(lookup("VI").unwrap().table, 2);
        assert_eq!(lookup("t3:IV-IV*-m").unwrap().genus(), 2);
        assert!(matches!(lookup("XYZ"), Err(Error::UnknownType(_))));
        assert!(matches!(lookup("II*-III-m"), Err(Error::UnknownType(_))));
    }

    #[test]
    fn spot_checks() {
        for name in ["IV*", "II", "VI", "I0*-IV-m"] {
            let r = catalog_jumps(name).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
