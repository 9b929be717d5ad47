//! Versioned text documents: tree catalogs, labeling lists, decomposition
//! certificates, and feasibility reports.
//!
//! Every document starts with `format_version: 1` and a `kind:` line and is
//! rendered deterministically. Certificates store one base labeling per tree
//! next to the tree's canonical key; the embedded copies are reconstructed
//! from the stated rotation convention at verification time, so a verifier
//! needs nothing but the file.

use crate::decomposition::{
    materialize_family_copies, verify_cover, CoverageVerdict, DecompositionError,
    FamilyDecompositionCertificate, MultigraphSpec, RotationDecomposition, TreeRecord,
    ROTATION_CONVENTION,
};
use crate::feasibility::FeasibilityReport;
use crate::labeling::{Convention, VertexLabeling};
use crate::trees::{Tree, TreeFamilyCatalog};
use std::fmt::Write as _;
use thiserror::Error;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("document ended early: expected {expected}")]
    UnexpectedEnd { expected: String },
}

fn malformed(line: usize, message: impl Into<String>) -> DocumentError {
    DocumentError::Malformed {
        line,
        message: message.into(),
    }
}

/// Renders a labeling as its convention tag followed by `vertex:label` pairs
/// sorted by vertex id.
pub fn format_labeling(labeling: &VertexLabeling) -> String {
    let mut out = labeling.convention().to_string();
    for (v, &label) in labeling.labels().iter().enumerate() {
        write!(out, " {v}:{label}").unwrap();
    }
    out
}

fn parse_labeling(text: &str, line: usize) -> Result<VertexLabeling, DocumentError> {
    let mut tokens = text.split_whitespace();
    let convention = match tokens.next() {
        Some("graceful") => Convention::Graceful,
        Some("semigraceful") => Convention::Semigraceful,
        other => {
            return Err(malformed(
                line,
                format!("expected a labeling convention tag, got {other:?}"),
            ))
        }
    };
    let mut labels = Vec::new();
    for (i, token) in tokens.enumerate() {
        let (vertex, label) = token
            .split_once(':')
            .ok_or_else(|| malformed(line, format!("expected vertex:label, got {token:?}")))?;
        let vertex: usize = vertex
            .parse()
            .map_err(|_| malformed(line, format!("bad vertex id {vertex:?}")))?;
        if vertex != i {
            return Err(malformed(
                line,
                format!("vertex ids must be 0.. in order, got {vertex} at position {i}"),
            ));
        }
        let label: u32 = label
            .parse()
            .map_err(|_| malformed(line, format!("bad label {label:?}")))?;
        labels.push(label);
    }
    VertexLabeling::new(convention, labels).map_err(|e| malformed(line, e.to_string()))
}

fn format_key(key: &[u32]) -> String {
    key.iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn parse_tree_line(text: &str, line: usize) -> Result<Tree, DocumentError> {
    let key = text
        .split_whitespace()
        .map(|t| {
            t.parse::<u32>()
                .map_err(|_| malformed(line, format!("bad level {t:?}")))
        })
        .collect::<Result<Vec<u32>, _>>()?;
    let tree = Tree::from_level_sequence(&key).map_err(|e| malformed(line, e.to_string()))?;
    if tree.canonical_key() != key.as_slice() {
        return Err(malformed(line, "level sequence is not a canonical key"));
    }
    Ok(tree)
}

/// Catalog document: header plus one `tree:` line (canonical key) per tree in
/// catalog order.
pub fn render_catalog(catalog: &TreeFamilyCatalog) -> String {
    let mut out = String::new();
    writeln!(out, "format_version: {FORMAT_VERSION}").unwrap();
    writeln!(out, "kind: tree-catalog").unwrap();
    writeln!(out, "order: {}", catalog.order()).unwrap();
    writeln!(out, "count: {}", catalog.count()).unwrap();
    for tree in catalog.trees() {
        writeln!(out, "tree: {}", format_key(tree.canonical_key())).unwrap();
    }
    out
}

/// Labeling-list document: one `tree:`/`labels:` pair per catalog tree.
pub fn render_labeling_list(
    order: usize,
    mode: Convention,
    entries: &[(&Tree, &VertexLabeling)],
) -> String {
    let mut out = String::new();
    writeln!(out, "format_version: {FORMAT_VERSION}").unwrap();
    writeln!(out, "kind: labeling-list").unwrap();
    writeln!(out, "order: {order}").unwrap();
    writeln!(out, "mode: {mode}").unwrap();
    writeln!(out, "count: {}", entries.len()).unwrap();
    for (tree, labeling) in entries {
        writeln!(out, "tree: {}", format_key(tree.canonical_key())).unwrap();
        writeln!(out, "labels: {}", format_labeling(labeling)).unwrap();
    }
    out
}

/// Feasibility report document.
pub fn render_feasibility(report: &FeasibilityReport) -> String {
    let mut out = String::new();
    writeln!(out, "format_version: {FORMAT_VERSION}").unwrap();
    writeln!(out, "kind: feasibility-report").unwrap();
    writeln!(out, "order: {}", report.order).unwrap();
    writeln!(out, "tau: {}", report.tau).unwrap();
    writeln!(out, "gcd: {}", report.gcd_value).unwrap();
    writeln!(out, "k_min: {}", report.k_min).unwrap();
    writeln!(out, "m_min: {}", report.m_min).unwrap();
    writeln!(out, "multigraph_edges: {}", report.multigraph_edges).unwrap();
    writeln!(out, "family_edges: {}", report.family_edges).unwrap();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// One tree, `p` rotations, multiplicity 2.
    Rotation,
    /// The whole family, `p` rotations each, multiplicity `2·τ(p)`.
    Family,
}

impl std::fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CertificateKind::Rotation => "rotation-decomposition",
            CertificateKind::Family => "family-decomposition",
        })
    }
}

/// A decomposition certificate as stored on disk: multigraph spec, rotation
/// convention, and one `(canonical key, base labeling)` record per tree.
#[derive(Debug, Clone)]
pub struct CertificateDocument {
    pub kind: CertificateKind,
    pub spec: MultigraphSpec,
    pub records: Vec<TreeRecord>,
}

impl CertificateDocument {
    pub fn from_rotation(decomposition: &RotationDecomposition) -> Self {
        CertificateDocument {
            kind: CertificateKind::Rotation,
            spec: decomposition.spec,
            records: vec![TreeRecord {
                tree: decomposition.tree.clone(),
                base: decomposition.base.clone(),
            }],
        }
    }

    pub fn from_family(certificate: &FamilyDecompositionCertificate) -> Self {
        CertificateDocument {
            kind: CertificateKind::Family,
            spec: certificate.spec,
            records: certificate.records.clone(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "format_version: {FORMAT_VERSION}").unwrap();
        writeln!(out, "kind: {}", self.kind).unwrap();
        writeln!(out, "order: {}", self.spec.order()).unwrap();
        writeln!(out, "multiplicity: {}", self.spec.multiplicity()).unwrap();
        writeln!(out, "rotation: {ROTATION_CONVENTION}").unwrap();
        writeln!(out, "trees: {}", self.records.len()).unwrap();
        for record in &self.records {
            writeln!(out, "tree: {}", format_key(record.tree.canonical_key())).unwrap();
            writeln!(out, "base: {}", format_labeling(&record.base)).unwrap();
        }
        out
    }

    /// Strict parse of [`CertificateDocument::render`] output: fields in
    /// order, canonical tree keys, bijective semigraceful bases.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let mut fields = FieldReader::new(text);
        let version = fields.expect("format_version")?;
        if version.value != FORMAT_VERSION.to_string() {
            return Err(malformed(
                version.line,
                format!("unsupported format_version {:?}", version.value),
            ));
        }
        let kind_field = fields.expect("kind")?;
        let kind = match kind_field.value.as_str() {
            "rotation-decomposition" => CertificateKind::Rotation,
            "family-decomposition" => CertificateKind::Family,
            other => {
                return Err(malformed(
                    kind_field.line,
                    format!("unknown certificate kind {other:?}"),
                ))
            }
        };
        let order = fields.expect_parsed::<usize>("order")?;
        let multiplicity = fields.expect_parsed::<u64>("multiplicity")?;
        let rotation = fields.expect("rotation")?;
        if rotation.value != ROTATION_CONVENTION {
            return Err(malformed(
                rotation.line,
                format!("unknown rotation convention {:?}", rotation.value),
            ));
        }
        let tree_count = fields.expect_parsed::<usize>("trees")?;
        let spec = MultigraphSpec::new(order.value, multiplicity.value)
            .map_err(|e| malformed(order.line, e.to_string()))?;

        let mut records = Vec::with_capacity(tree_count.value);
        for _ in 0..tree_count.value {
            let tree_field = fields.expect("tree")?;
            let tree = parse_tree_line(&tree_field.value, tree_field.line)?;
            if tree.order() != order.value {
                return Err(malformed(
                    tree_field.line,
                    format!(
                        "tree has order {} but the certificate is for order {}",
                        tree.order(),
                        order.value
                    ),
                ));
            }
            let base_field = fields.expect("base")?;
            let base = parse_labeling(&base_field.value, base_field.line)?;
            if base.convention() != Convention::Semigraceful {
                return Err(malformed(
                    base_field.line,
                    "certificate bases must use the semigraceful convention",
                ));
            }
            if base.order() != order.value {
                return Err(malformed(
                    base_field.line,
                    format!(
                        "base labels {} vertices but the certificate is for order {}",
                        base.order(),
                        order.value
                    ),
                ));
            }
            records.push(TreeRecord { tree, base });
        }
        fields.expect_end()?;
        Ok(CertificateDocument {
            kind,
            spec,
            records,
        })
    }

    /// Reconstructs every embedded copy from the stored bases and recounts
    /// the pair coverage against the stated multigraph.
    pub fn verify(&self) -> Result<CoverageVerdict, DecompositionError> {
        let copies = materialize_family_copies(&self.records, self.spec.order())?;
        let embeddings = copies
            .iter()
            .flatten()
            .map(|e| (&self.records[e.tree_index].tree, e));
        verify_cover(embeddings, &self.spec)
    }
}

struct Field {
    line: usize,
    value: String,
}

struct ParsedField<T> {
    line: usize,
    value: T,
}

/// Line-oriented `name: value` reader that skips blank lines and tracks line
/// numbers for error reporting.
struct FieldReader<'a> {
    lines: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
}

impl<'a> FieldReader<'a> {
    fn new(text: &'a str) -> Self {
        FieldReader {
            lines: text.lines().enumerate().peekable(),
        }
    }

    fn next_nonempty(&mut self) -> Option<(usize, &'a str)> {
        loop {
            let (i, line) = self.lines.next()?;
            if !line.trim().is_empty() {
                return Some((i + 1, line));
            }
        }
    }

    fn expect(&mut self, name: &str) -> Result<Field, DocumentError> {
        let (line, text) = self
            .next_nonempty()
            .ok_or_else(|| DocumentError::UnexpectedEnd {
                expected: format!("field {name:?}"),
            })?;
        let (key, value) = text
            .split_once(':')
            .ok_or_else(|| malformed(line, format!("expected {name:?} field, got {text:?}")))?;
        if key.trim() != name {
            return Err(malformed(
                line,
                format!("expected field {name:?}, got {:?}", key.trim()),
            ));
        }
        Ok(Field {
            line,
            value: value.trim().to_string(),
        })
    }

    fn expect_parsed<T: std::str::FromStr>(
        &mut self,
        name: &str,
    ) -> Result<ParsedField<T>, DocumentError> {
        let field = self.expect(name)?;
        let value = field
            .value
            .parse()
            .map_err(|_| malformed(field.line, format!("bad {name} value {:?}", field.value)))?;
        Ok(ParsedField {
            line: field.line,
            value,
        })
    }

    fn expect_end(&mut self) -> Result<(), DocumentError> {
        if let Some((line, text)) = self.next_nonempty() {
            return Err(malformed(
                line,
                format!("unexpected trailing content {text:?}"),
            ));
        }
        Ok(())
    }
}
