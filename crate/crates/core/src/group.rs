//! The composition group of the eight conjugations and its dihedral model.
//!
//! Composing any two of the eight maps yields another of the eight, so
//! they form a group of order 8. This module builds that Cayley table
//! by actually composing unit actions and identifying the result,
//! checks the group axioms exhaustively, enumerates all subgroups by
//! brute force over the 256 subsets, and verifies the explicit
//! isomorphism `rho` onto the dihedral group of order eight.
//!
//! NOTE on the composition convention: `entry[r][c]` is `row after
//! column`, i.e. the column map is applied first. This is the unique
//! reading under which applying `dag4` and then `dag1` lands on
//! `pdag6`, matching the reference table this crate verifies against.

use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::involution::{unit_action, ConjTag};

/// The 8x8 composition table of the conjugations.
///
/// `entry(r, c)` is the tag of `r` composed after `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    entries: [[ConjTag; 8]; 8],
}

/// The reference composition table in tag indices: `[r][c]` holds the
/// index of (row map) after (column map). The generated table is
/// verified against this entry for entry; its top-left 4x4 block is
/// the composition table of the first four conjugates, which happen to
/// close among themselves.
pub const REFERENCE_COMPOSITION: [[usize; 8]; 8] = [
    [0, 1, 2, 3, 4, 5, 6, 7],
    [1, 0, 3, 2, 6, 7, 4, 5],
    [2, 3, 0, 1, 7, 6, 5, 4],
    [3, 2, 1, 0, 5, 4, 7, 6],
    [4, 7, 6, 5, 0, 3, 2, 1],
    [5, 6, 7, 4, 3, 0, 1, 2],
    [6, 5, 4, 7, 1, 2, 3, 0],
    [7, 4, 5, 6, 2, 1, 0, 3],
];

/// Compose two conjugations (`inner` first) and identify the result
/// among the eight tags by its action on the imaginary units.
pub fn compose(outer: ConjTag, inner: ConjTag) -> Result<ConjTag, Error> {
    unit_action(outer)
        .compose(&unit_action(inner))
        .identify()
        .ok_or(Error::UnidentifiableComposition)
}

/// Build the full composition table by composing unit actions.
pub fn cayley_table() -> Result<CayleyTable, Error> {
    let mut entries = [[ConjTag::Dag0; 8]; 8];
    for r in ConjTag::ALL {
        for c in ConjTag::ALL {
            entries[r.index()][c.index()] = compose(r, c)?;
        }
    }
    Ok(CayleyTable { entries })
}

impl CayleyTable {
    /// The composition `r` after `c`.
    pub fn entry(&self, r: ConjTag, c: ConjTag) -> ConjTag {
        self.entries[r.index()][c.index()]
    }

    /// First pair in `subset` (row-major scan) whose composition
    /// escapes `subset`, together with the escaping result.
    pub fn closure_failure(
        &self,
        subset: &[ConjTag],
    ) -> Option<(ConjTag, ConjTag, ConjTag)> {
        for &r in subset {
            for &c in subset {
                let result = self.entry(r, c);
                if !subset.contains(&result) {
                    return Some((r, c, result));
                }
            }
        }
        None
    }

    /// Render as a Markdown table with row and column labels.
    pub fn to_markdown(&self) -> String {
        render_markdown(&self.labels(), &self.cells())
    }

    /// Render as CSV with row and column labels.
    pub fn to_csv(&self) -> String {
        render_csv(&self.labels(), &self.cells())
    }

    /// Render as JSON: `{"order": [...], "table": [[...]]}`.
    pub fn to_json(&self) -> Value {
        render_json(&self.labels(), &self.cells())
    }

    fn labels(&self) -> Vec<String> {
        ConjTag::ALL.iter().map(|t| t.name().to_string()).collect()
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|t| t.name().to_string()).collect())
            .collect()
    }
}

/// Outcome of checking the group axioms on a [`CayleyTable`].
#[derive(Clone, Debug)]
pub struct GroupReport {
    /// Every row and column is a permutation of all eight tags.
    pub closure_ok: bool,
    /// The identity row and column act trivially.
    pub identity_ok: bool,
    /// Every element has a two-sided inverse.
    pub inverses_ok: bool,
    /// Associativity holds on all 512 triples.
    pub associativity_ok: bool,
    /// Unordered pairs whose two composition orders differ.
    pub noncommuting_pairs: Vec<(ConjTag, ConjTag)>,
    /// Human-readable details for each failed axiom.
    pub failures: Vec<String>,
}

impl GroupReport {
    /// True when all four axioms hold.
    pub fn all_ok(&self) -> bool {
        self.closure_ok && self.identity_ok && self.inverses_ok && self.associativity_ok
    }
}

/// Check closure, identity, inverses, and associativity exhaustively,
/// and collect the pairs witnessing noncommutativity.
pub fn verify_group_axioms(table: &CayleyTable) -> GroupReport {
    let mut failures = Vec::new();

    let mut closure_ok = true;
    for r in ConjTag::ALL {
        let mut row_seen = [false; 8];
        let mut col_seen = [false; 8];
        for c in ConjTag::ALL {
            row_seen[table.entry(r, c).index()] = true;
            col_seen[table.entry(c, r).index()] = true;
        }
        if row_seen != [true; 8] || col_seen != [true; 8] {
            closure_ok = false;
            failures.push(format!("row or column of {r} is not a permutation"));
        }
    }

    let mut identity_ok = true;
    for t in ConjTag::ALL {
        if table.entry(ConjTag::Dag0, t) != t || table.entry(t, ConjTag::Dag0) != t {
            identity_ok = false;
            failures.push(format!("dag0 does not act as identity on {t}"));
        }
    }

    let mut inverses_ok = true;
    for t in ConjTag::ALL {
        let has_inverse = ConjTag::ALL.into_iter().any(|u| {
            table.entry(t, u) == ConjTag::Dag0 && table.entry(u, t) == ConjTag::Dag0
        });
        if !has_inverse {
            inverses_ok = false;
            failures.push(format!("{t} has no two-sided inverse"));
        }
    }

    let mut associativity_ok = true;
    for a in ConjTag::ALL {
        for b in ConjTag::ALL {
            for c in ConjTag::ALL {
                let left = table.entry(table.entry(a, b), c);
                let right = table.entry(a, table.entry(b, c));
                if left != right {
                    associativity_ok = false;
                    failures.push(format!("associativity fails on ({a}, {b}, {c})"));
                }
            }
        }
    }

    let mut noncommuting_pairs = Vec::new();
    for (i, a) in ConjTag::ALL.into_iter().enumerate() {
        for b in ConjTag::ALL.into_iter().skip(i + 1) {
            if table.entry(a, b) != table.entry(b, a) {
                noncommuting_pairs.push((a, b));
            }
        }
    }

    GroupReport {
        closure_ok,
        identity_ok,
        inverses_ok,
        associativity_ok,
        noncommuting_pairs,
        failures,
    }
}

/// All subgroups, by exhaustive search over the 256 subsets.
///
/// A nonempty subset of a finite group closed under the group
/// operation is a subgroup, so closure is the only test needed. Each
/// subgroup is sorted by tag, and the list is sorted by size then
/// lexicographically.
pub fn subgroups(table: &CayleyTable) -> Vec<Vec<ConjTag>> {
    let mut found = Vec::new();
    for mask in 1u16..256 {
        let subset: Vec<ConjTag> = ConjTag::ALL
            .into_iter()
            .filter(|t| mask & (1 << t.index()) != 0)
            .collect();
        if table.closure_failure(&subset).is_none() {
            found.push(subset);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    found
}

/// Element of the dihedral group of order 8, in the normal form
/// `a^rot * x^flip` with `a` the quarter turn and `x` a reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct D8Element {
    /// Exponent of the rotation, reduced mod 4.
    pub rot: u8,
    /// Whether the reflection is present.
    pub flip: bool,
}

impl D8Element {
    /// Build, reducing the rotation mod 4.
    pub fn new(rot: u8, flip: bool) -> D8Element {
        D8Element { rot: rot % 4, flip }
    }

    /// The identity.
    pub fn identity() -> D8Element {
        D8Element::new(0, false)
    }

    /// All eight elements in the reference table's ordering:
    /// `Id, x, a2x, a2, a3x, ax, a, a3`.
    pub const TABLE_ORDER: [D8Element; 8] = [
        D8Element { rot: 0, flip: false },
        D8Element { rot: 0, flip: true },
        D8Element { rot: 2, flip: true },
        D8Element { rot: 2, flip: false },
        D8Element { rot: 3, flip: true },
        D8Element { rot: 1, flip: true },
        D8Element { rot: 1, flip: false },
        D8Element { rot: 3, flip: false },
    ];

    /// Normal-form name: `Id`, `a`, `a2`, `a3`, `x`, `ax`, `a2x`, `a3x`.
    pub fn name(&self) -> &'static str {
        match (self.rot, self.flip) {
            (0, false) => "Id",
            (1, false) => "a",
            (2, false) => "a2",
            (3, false) => "a3",
            (0, true) => "x",
            (1, true) => "ax",
            (2, true) => "a2x",
            (3, true) => "a3x",
            _ => unreachable!("rot is reduced mod 4"),
        }
    }

    /// Parse a normal-form name.
    pub fn from_name(name: &str) -> Option<D8Element> {
        D8Element::TABLE_ORDER
            .into_iter()
            .find(|e| e.name() == name)
    }

    /// Least `k >= 1` with the `k`-th power equal to the identity.
    pub fn order(&self) -> u32 {
        let mut power = *self;
        for k in 1..=8 {
            if power == D8Element::identity() {
                return k;
            }
            power = d8_multiply(*self, power);
        }
        unreachable!("element order divides 8")
    }
}

impl fmt::Display for D8Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Normal-form multiplication: moving `x` past `a` reverses the
/// rotation, `x * a^r = a^(-r) * x`.
pub fn d8_multiply(g: D8Element, h: D8Element) -> D8Element {
    let rot = if g.flip {
        (g.rot + 4 - h.rot) % 4
    } else {
        (g.rot + h.rot) % 4
    };
    D8Element::new(rot, g.flip ^ h.flip)
}

/// The 8x8 multiplication table of D8 in the reference ordering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D8Table {
    entries: [[D8Element; 8]; 8],
}

/// Build the D8 table; `entry(r, c)` is `TABLE_ORDER[r] * TABLE_ORDER[c]`.
pub fn d8_table() -> D8Table {
    let order = D8Element::TABLE_ORDER;
    let mut entries = [[D8Element::identity(); 8]; 8];
    for (r, &g) in order.iter().enumerate() {
        for (c, &h) in order.iter().enumerate() {
            entries[r][c] = d8_multiply(g, h);
        }
    }
    D8Table { entries }
}

impl D8Table {
    /// Product of the `r`-th and `c`-th elements of the table ordering.
    pub fn entry_at(&self, r: usize, c: usize) -> D8Element {
        self.entries[r][c]
    }

    /// Render as a Markdown table with row and column labels.
    pub fn to_markdown(&self) -> String {
        render_markdown(&self.labels(), &self.cells())
    }

    /// Render as CSV with row and column labels.
    pub fn to_csv(&self) -> String {
        render_csv(&self.labels(), &self.cells())
    }

    /// Render as JSON: `{"order": [...], "table": [[...]]}`.
    pub fn to_json(&self) -> Value {
        render_json(&self.labels(), &self.cells())
    }

    fn labels(&self) -> Vec<String> {
        D8Element::TABLE_ORDER
            .iter()
            .map(|e| e.name().to_string())
            .collect()
    }

    fn cells(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.name().to_string()).collect())
            .collect()
    }
}

/// All subgroups of D8, by exhaustive search over the 256 subsets.
pub fn d8_subgroups() -> Vec<Vec<D8Element>> {
    let elements: Vec<D8Element> = D8Element::TABLE_ORDER.to_vec();
    let mut found = Vec::new();
    for mask in 1u16..256 {
        let subset: Vec<D8Element> = elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let closed = subset
            .iter()
            .all(|&g| subset.iter().all(|&h| subset.contains(&d8_multiply(g, h))));
        if closed {
            let mut sorted = subset;
            sorted.sort();
            found.push(sorted);
        }
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    found.dedup();
    found
}

/// The isomorphism onto D8: `dag0 -> Id`, `dag1 -> x`, `dag2 -> a2x`,
/// `dag3 -> a2`, `dag4 -> a3x`, `dag5 -> ax`, `pdag6 -> a`, `pdag7 -> a3`.
pub fn rho(tag: ConjTag) -> D8Element {
    match tag {
        ConjTag::Dag0 => D8Element::new(0, false),
        ConjTag::Dag1 => D8Element::new(0, true),
        ConjTag::Dag2 => D8Element::new(2, true),
        ConjTag::Dag3 => D8Element::new(2, false),
        ConjTag::Dag4 => D8Element::new(3, true),
        ConjTag::Dag5 => D8Element::new(1, true),
        ConjTag::Pdag6 => D8Element::new(1, false),
        ConjTag::Pdag7 => D8Element::new(3, false),
    }
}

/// Outcome of checking that [`rho`] is an isomorphism.
#[derive(Clone, Debug)]
pub struct IsomorphismReport {
    /// `rho(f after g) = rho(f) * rho(g)` on all 64 pairs.
    pub homomorphism_ok: bool,
    /// `rho` hits all eight elements.
    pub bijective_ok: bool,
    /// Element orders are preserved.
    pub orders_ok: bool,
    /// `rho` maps the subgroup lattice onto the D8 subgroup lattice.
    pub subgroup_lattice_ok: bool,
    /// Human-readable details for each failed property.
    pub failures: Vec<String>,
}

impl IsomorphismReport {
    /// True when every property holds.
    pub fn all_ok(&self) -> bool {
        self.homomorphism_ok && self.bijective_ok && self.orders_ok && self.subgroup_lattice_ok
    }
}

/// Verify that [`rho`] is a group isomorphism preserving orders and
/// the subgroup lattice.
pub fn verify_isomorphism() -> Result<IsomorphismReport, Error> {
    let table = cayley_table()?;
    let mut failures = Vec::new();

    let mut homomorphism_ok = true;
    for f in ConjTag::ALL {
        for g in ConjTag::ALL {
            let lhs = rho(table.entry(f, g));
            let rhs = d8_multiply(rho(f), rho(g));
            if lhs != rhs {
                homomorphism_ok = false;
                failures.push(format!(
                    "rho({f} after {g}) = {lhs} but rho({f})*rho({g}) = {rhs}"
                ));
            }
        }
    }

    let mut images: Vec<D8Element> = ConjTag::ALL.into_iter().map(rho).collect();
    images.sort();
    images.dedup();
    let bijective_ok = images.len() == 8;
    if !bijective_ok {
        failures.push("rho is not a bijection".to_string());
    }

    let mut orders_ok = true;
    for t in ConjTag::ALL {
        if crate::involution::order(t) != rho(t).order() {
            orders_ok = false;
            failures.push(format!("rho does not preserve the order of {t}"));
        }
    }

    let image_lattice: Vec<Vec<D8Element>> = subgroups(&table)
        .into_iter()
        .map(|sub| {
            let mut image: Vec<D8Element> = sub.into_iter().map(rho).collect();
            image.sort();
            image
        })
        .collect();
    let mut sorted_image = image_lattice;
    sorted_image.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    let subgroup_lattice_ok = sorted_image == d8_subgroups();
    if !subgroup_lattice_ok {
        failures.push("rho does not map the subgroup lattice onto D8's".to_string());
    }

    Ok(IsomorphismReport {
        homomorphism_ok,
        bijective_ok,
        orders_ok,
        subgroup_lattice_ok,
        failures,
    })
}

fn render_markdown(labels: &[String], cells: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str("|  |");
    for label in labels {
        out.push_str(&format!(" {label} |"));
    }
    out.push('\n');
    out.push_str("| --- |");
    for _ in labels {
        out.push_str(" --- |");
    }
    out.push('\n');
    for (label, row) in labels.iter().zip(cells) {
        out.push_str(&format!("| {label} |"));
        for cell in row {
            out.push_str(&format!(" {cell} |"));
        }
        out.push('\n');
    }
    out
}

fn render_csv(labels: &[String], cells: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push(',');
    out.push_str(&labels.join(","));
    out.push('\n');
    for (label, row) in labels.iter().zip(cells) {
        out.push_str(label);
        out.push(',');
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn render_json(labels: &[String], cells: &[Vec<String>]) -> Value {
    json!({ "order": labels, "table": cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFERENCE_TABLE: [[usize; 8]; 8] = REFERENCE_COMPOSITION;

    #[test]
    fn table_matches_the_reference() {
        let table = cayley_table().unwrap();
        for r in ConjTag::ALL {
            for c in ConjTag::ALL {
                assert_eq!(
                    table.entry(r, c).index(),
                    REFERENCE_TABLE[r.index()][c.index()],
                    "mismatch at ({r}, {c})"
                );
            }
        }
    }

    #[test]
    fn composition_convention_examples() {
        let table = cayley_table().unwrap();
        // Applying dag4 first and then dag1 gives pdag6.
        assert_eq!(table.entry(ConjTag::Dag1, ConjTag::Dag4), ConjTag::Pdag6);
        assert_eq!(table.entry(ConjTag::Pdag6, ConjTag::Pdag7), ConjTag::Dag0);
        for c in ConjTag::ALL {
            assert_eq!(table.entry(ConjTag::Dag0, c), c);
        }
    }

    #[test]
    fn axioms_hold_and_noncommutativity_is_witnessed() {
        let table = cayley_table().unwrap();
        let report = verify_group_axioms(&table);
        assert!(report.all_ok(), "failures: {:?}", report.failures);
        assert!(!report.noncommuting_pairs.is_empty());
        assert!(report
            .noncommuting_pairs
            .contains(&(ConjTag::Dag1, ConjTag::Pdag6)));
        assert_eq!(table.entry(ConjTag::Dag1, ConjTag::Pdag6), ConjTag::Dag4);
        assert_eq!(table.entry(ConjTag::Pdag6, ConjTag::Dag1), ConjTag::Dag5);
    }

    #[test]
    fn six_conjugates_are_not_closed() {
        let table = cayley_table().unwrap();
        let six = [
            ConjTag::Dag0,
            ConjTag::Dag1,
            ConjTag::Dag2,
            ConjTag::Dag3,
            ConjTag::Dag4,
            ConjTag::Dag5,
        ];
        assert_eq!(
            table.closure_failure(&six),
            Some((ConjTag::Dag1, ConjTag::Dag4, ConjTag::Pdag6))
        );
        assert_eq!(table.closure_failure(&ConjTag::ALL), None);
    }

    #[test]
    fn subgroup_lattice_matches_the_reference() {
        use ConjTag::*;
        let table = cayley_table().unwrap();
        let found = subgroups(&table);
        let expected: Vec<Vec<ConjTag>> = vec![
            vec![Dag0],
            vec![Dag0, Dag1],
            vec![Dag0, Dag2],
            vec![Dag0, Dag3],
            vec![Dag0, Dag4],
            vec![Dag0, Dag5],
            vec![Dag0, Dag1, Dag2, Dag3],
            vec![Dag0, Dag3, Dag4, Dag5],
            vec![Dag0, Dag3, Pdag6, Pdag7],
            ConjTag::ALL.to_vec(),
        ];
        assert_eq!(found, expected);
    }

    #[test]
    fn non_subgroup_example() {
        let table = cayley_table().unwrap();
        // pdag6 composed with itself is dag3, outside the set.
        assert_eq!(
            table.closure_failure(&[ConjTag::Dag0, ConjTag::Pdag6]),
            Some((ConjTag::Pdag6, ConjTag::Pdag6, ConjTag::Dag3))
        );
    }

    #[test]
    fn d8_normal_form_relations() {
        let a = D8Element::new(1, false);
        let x = D8Element::new(0, true);
        assert_eq!(d8_multiply(x, a), D8Element::new(3, true));
        assert_eq!(d8_multiply(a, D8Element::new(3, false)), D8Element::identity());
        assert_eq!(d8_multiply(x, x), D8Element::identity());
        for g in D8Element::TABLE_ORDER {
            assert_eq!(d8_multiply(D8Element::identity(), g), g);
            assert_eq!(d8_multiply(g, D8Element::identity()), g);
        }
    }

    #[test]
    fn d8_table_has_the_same_index_pattern_as_the_conjugation_table() {
        // This index agreement is exactly what makes rho an
        // isomorphism: TABLE_ORDER lists the rho-images of the tags.
        let table = d8_table();
        let order = D8Element::TABLE_ORDER;
        for r in 0..8 {
            for c in 0..8 {
                let expected = order[REFERENCE_TABLE[r][c]];
                assert_eq!(table.entry_at(r, c), expected, "mismatch at ({r}, {c})");
            }
        }
    }

    #[test]
    fn rho_examples_and_isomorphism() {
        assert_eq!(rho(ConjTag::Pdag6), D8Element::new(1, false));
        assert_eq!(rho(ConjTag::Dag0), D8Element::identity());
        for (tag, d8) in ConjTag::ALL.into_iter().zip(D8Element::TABLE_ORDER) {
            assert_eq!(rho(tag), d8);
        }

        let report = verify_isomorphism().unwrap();
        assert!(report.all_ok(), "failures: {:?}", report.failures);

        // Cross-multiplying the two tables on the worked example.
        let table = cayley_table().unwrap();
        let lhs = rho(table.entry(ConjTag::Dag1, ConjTag::Dag4));
        let rhs = d8_multiply(rho(ConjTag::Dag1), rho(ConjTag::Dag4));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, D8Element::new(1, false));
    }

    #[test]
    fn d8_subgroup_lattice() {
        let found = d8_subgroups();
        assert_eq!(found.len(), 10);
        let sizes: Vec<usize> = found.iter().map(Vec::len).collect();
        assert_eq!(sizes, [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]);
        let named: Vec<Vec<&str>> = found
            .iter()
            .map(|sub| sub.iter().map(D8Element::name).collect())
            .collect();
        let expected: Vec<Vec<&str>> = vec![
            vec!["Id"],
            vec!["Id", "x"],
            vec!["Id", "ax"],
            vec!["Id", "a2"],
            vec!["Id", "a2x"],
            vec!["Id", "a3x"],
            vec!["Id", "x", "a2", "a2x"],
            vec!["Id", "a", "a2", "a3"],
            vec!["Id", "ax", "a2", "a3x"],
            vec!["Id", "x", "a", "ax", "a2", "a2x", "a3", "a3x"],
        ];
        assert_eq!(named, expected);
    }

    #[test]
    fn element_orders() {
        let orders: Vec<u32> = D8Element::TABLE_ORDER.iter().map(D8Element::order).collect();
        // Ordering Id, x, a2x, a2, a3x, ax, a, a3.
        assert_eq!(orders, [1, 2, 2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn d8_names_round_trip() {
        for e in D8Element::TABLE_ORDER {
            assert_eq!(D8Element::from_name(e.name()), Some(e));
        }
        assert_eq!(D8Element::from_name("b"), None);
    }

    #[test]
    fn render_formats() {
        let table = cayley_table().unwrap();
        let csv = table.to_csv();
        let first_two: Vec<&str> = csv.lines().take(2).collect();
        assert_eq!(
            first_two,
            [
                ",dag0,dag1,dag2,dag3,dag4,dag5,pdag6,pdag7",
                "dag0,dag0,dag1,dag2,dag3,dag4,dag5,pdag6,pdag7",
            ]
        );
        assert_eq!(csv.lines().count(), 9);

        let md = table.to_markdown();
        assert!(md.starts_with("|  | dag0 | dag1 |"));
        assert_eq!(md.lines().count(), 10);

        let json = table.to_json();
        assert_eq!(json["order"][0], "dag0");
        assert_eq!(json["order"][7], "pdag7");
        assert_eq!(json["table"][1][4], "pdag6");

        let d8_json = d8_table().to_json();
        assert_eq!(d8_json["order"][6], "a");
        assert_eq!(d8_json["table"][1][6], "a3x");
    }
}
