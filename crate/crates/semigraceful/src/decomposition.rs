//! Cyclic decompositions of complete multigraphs into spanning trees.
//!
//! A semigraceful labeling embeds its tree into the doubled complete
//! multigraph on `p` vertices so that the embedding uses two edges of every
//! cyclic distance. Rotating the labels through all `p` steps then covers
//! every vertex pair exactly twice; doing this for one base labeling per
//! isomorphism class covers every pair `2·τ(p)` times. Verification never
//! trusts a certificate's claims: coverage is always recounted from the
//! reconstructed embeddings.

use crate::labeling::{
    find_semigraceful_labeling, is_semigraceful_labeling, Convention, LabelingError, SearchOutcome,
    VertexLabeling,
};
use crate::trees::{enumerate_trees, Tree, TreeError, TreeFamilyCatalog};
use thiserror::Error;

/// Tag naming the one rotation convention used by certificates: labels move
/// one step clockwise per rotation, `x -> ((x + r - 1) mod p) + 1`.
pub const ROTATION_CONVENTION: &str = "plus-one";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("multigraph needs order >= 2 and multiplicity >= 1, got p={order}, m={multiplicity}")]
    BadMultigraph { order: usize, multiplicity: u64 },
    #[error("rotation {rotation} is outside 0..{order}")]
    RotationOutOfRange { rotation: u32, order: usize },
    #[error("labeling error: {0}")]
    Labeling(#[from] LabelingError),
    #[error("tree error: {0}")]
    Tree(#[from] TreeError),
    #[error("embedded tree of order {tree} does not match multigraph order {spec}")]
    OrderMismatch { tree: usize, spec: usize },
    #[error("base labeling is not semigraceful for the tree with canonical key {key:?}")]
    NotSemigraceful { key: Vec<u32> },
    #[error("no base labeling supplied for the tree with canonical key {key:?}")]
    MissingBase { key: Vec<u32> },
    #[error("family decomposition requires an odd order >= 3, got {0}")]
    EvenFamilyOrder(usize),
    #[error("no semigraceful labeling exists for the tree with canonical key {key:?}")]
    SemigracefulCounterexample { key: Vec<u32> },
    #[error("search budget exhausted on the tree with canonical key {key:?}")]
    BudgetExhausted { key: Vec<u32> },
}

/// A complete multigraph `K_p^(m)`: every unordered vertex pair joined by
/// exactly `m` parallel edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultigraphSpec {
    order: usize,
    multiplicity: u64,
}

impl MultigraphSpec {
    pub fn new(order: usize, multiplicity: u64) -> Result<Self, DecompositionError> {
        if order < 2 || multiplicity == 0 {
            return Err(DecompositionError::BadMultigraph {
                order,
                multiplicity,
            });
        }
        Ok(MultigraphSpec {
            order,
            multiplicity,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    /// `m · p(p-1)/2`
    pub fn total_edges(&self) -> u128 {
        let p = self.order as u128;
        self.multiplicity as u128 * p * (p - 1) / 2
    }
}

/// One spanning-tree copy inside a decomposition: a catalog tree embedded by
/// the `rotation`-step image of its base labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedTree {
    pub tree_index: usize,
    pub rotation: u32,
    pub labeling: VertexLabeling,
}

/// Exact per-pair edge counts over labels `1..=p`, the ledger every
/// verification reduces to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCoverageTable {
    order: usize,
    counts: Vec<u64>,
}

impl PairCoverageTable {
    pub fn new(order: usize) -> Self {
        PairCoverageTable {
            order,
            counts: vec![0; order * (order - 1) / 2],
        }
    }

    fn index(&self, a: u32, b: u32) -> usize {
        debug_assert!(1 <= a && a < b && b as usize <= self.order);
        let p = self.order as u64;
        let a = a as u64;
        let b = b as u64;
        ((a - 1) * p - a * (a - 1) / 2 + (b - a - 1)) as usize
    }

    fn record(&mut self, a: u32, b: u32) {
        let (a, b) = (a.min(b), a.max(b));
        let i = self.index(a, b);
        self.counts[i] += 1;
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Count for the unordered pair `{a, b}`, `1 <= a < b <= p`.
    pub fn count(&self, a: u32, b: u32) -> u64 {
        let (a, b) = (a.min(b), a.max(b));
        self.counts[self.index(a, b)]
    }

    /// All `p(p-1)/2` entries, pairs ascending.
    pub fn iter(&self) -> impl Iterator<Item = ((u32, u32), u64)> + '_ {
        let p = self.order as u32;
        (1..=p)
            .flat_map(move |a| (a + 1..=p).map(move |b| (a, b)))
            .zip(self.counts.iter().copied())
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn is_uniform(&self, multiplicity: u64) -> bool {
        self.counts.iter().all(|&c| c == multiplicity)
    }

    /// Pairs whose count differs from the target, for deficit reports.
    pub fn mismatches(&self, multiplicity: u64) -> Vec<((u32, u32), u64)> {
        self.iter().filter(|&(_, c)| c != multiplicity).collect()
    }
}

/// Coverage table plus the exact-cover verdict it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageVerdict {
    pub pass: bool,
    pub table: PairCoverageTable,
}

/// Rotates every label one step per unit of `r`: `x -> ((x + r - 1) mod p) + 1`.
/// Rotation preserves bijectivity and every induced cyclic distance.
pub fn rotate_labeling(
    labeling: &VertexLabeling,
    r: u32,
) -> Result<VertexLabeling, DecompositionError> {
    if labeling.convention() != Convention::Semigraceful {
        return Err(LabelingError::ConventionMismatch {
            expected: Convention::Semigraceful,
            actual: labeling.convention(),
        }
        .into());
    }
    let p = labeling.order() as u32;
    if r >= p {
        return Err(DecompositionError::RotationOutOfRange {
            rotation: r,
            order: labeling.order(),
        });
    }
    let rotated = labeling
        .labels()
        .iter()
        .map(|&x| ((x + r - 1) % p) + 1)
        .collect();
    Ok(VertexLabeling::new(Convention::Semigraceful, rotated)?)
}

/// The cyclic decomposition of `K_p^(2)` into the `p` rotations of one
/// semigraceful embedding.
#[derive(Debug, Clone)]
pub struct RotationDecomposition {
    pub spec: MultigraphSpec,
    pub tree: Tree,
    pub base: VertexLabeling,
    /// Rotations `0..p`, identity first.
    pub copies: Vec<EmbeddedTree>,
}

impl RotationDecomposition {
    pub fn embeddings(&self) -> Vec<(&Tree, &EmbeddedTree)> {
        self.copies.iter().map(|e| (&self.tree, e)).collect()
    }
}

/// Builds the rotation decomposition for a tree and a verified semigraceful
/// base labeling: one embedded copy per rotation `0..p`.
pub fn build_rotation_decomposition(
    tree: &Tree,
    base: &VertexLabeling,
) -> Result<RotationDecomposition, DecompositionError> {
    if !is_semigraceful_labeling(tree, base)? {
        return Err(DecompositionError::NotSemigraceful {
            key: tree.canonical_key().to_vec(),
        });
    }
    let p = tree.order();
    let spec = MultigraphSpec::new(p, 2)?;
    let copies = (0..p as u32)
        .map(|r| {
            Ok(EmbeddedTree {
                tree_index: 0,
                rotation: r,
                labeling: rotate_labeling(base, r)?,
            })
        })
        .collect::<Result<Vec<_>, DecompositionError>>()?;
    Ok(RotationDecomposition {
        spec,
        tree: tree.clone(),
        base: base.clone(),
        copies,
    })
}

/// Recounts the pair coverage of a set of embedded trees against a multigraph
/// and reports whether it is an exact cover (every pair hit exactly `m`
/// times). The table comes back either way for diagnostics.
pub fn verify_cover<'a, I>(
    embeddings: I,
    spec: &MultigraphSpec,
) -> Result<CoverageVerdict, DecompositionError>
where
    I: IntoIterator<Item = (&'a Tree, &'a EmbeddedTree)>,
{
    let mut table = PairCoverageTable::new(spec.order());
    for (tree, embedded) in embeddings {
        if tree.order() != spec.order() {
            return Err(DecompositionError::OrderMismatch {
                tree: tree.order(),
                spec: spec.order(),
            });
        }
        if embedded.labeling.order() != spec.order() {
            return Err(DecompositionError::OrderMismatch {
                tree: embedded.labeling.order(),
                spec: spec.order(),
            });
        }
        if embedded.labeling.convention() != Convention::Semigraceful {
            return Err(LabelingError::ConventionMismatch {
                expected: Convention::Semigraceful,
                actual: embedded.labeling.convention(),
            }
            .into());
        }
        for &(u, v) in tree.edges() {
            table.record(embedded.labeling.label_of(u), embedded.labeling.label_of(v));
        }
    }
    let pass = table.is_uniform(spec.multiplicity());
    Ok(CoverageVerdict { pass, table })
}

/// One catalog tree together with its base semigraceful labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeRecord {
    pub tree: Tree,
    pub base: VertexLabeling,
}

/// The whole-family object: `p` copies of the complete tree family of order
/// `p`, copy `r` consisting of the rotation-`r` embedding of every tree, an
/// exact cover of `K_p^(2τ(p))`.
#[derive(Debug, Clone)]
pub struct FamilyDecompositionCertificate {
    pub spec: MultigraphSpec,
    pub catalog_order: usize,
    /// One record per isomorphism class, ascending by canonical key.
    pub records: Vec<TreeRecord>,
    /// `family_copies[r]` holds the rotation-`r` embedding of every record.
    pub family_copies: Vec<Vec<EmbeddedTree>>,
}

impl FamilyDecompositionCertificate {
    pub fn embeddings(&self) -> Vec<(&Tree, &EmbeddedTree)> {
        self.family_copies
            .iter()
            .flatten()
            .map(|e| (&self.records[e.tree_index].tree, e))
            .collect()
    }

    /// Recounts coverage from the embedded copies.
    pub fn verify(&self) -> Result<CoverageVerdict, DecompositionError> {
        verify_cover(self.embeddings(), &self.spec)
    }
}

/// Assembles the family decomposition of `K_p^(2τ(p))` from one verified
/// semigraceful base labeling per catalog tree (aligned by catalog index).
pub fn build_family_decomposition(
    catalog: &TreeFamilyCatalog,
    bases: &[VertexLabeling],
) -> Result<FamilyDecompositionCertificate, DecompositionError> {
    let p = catalog.order();
    if p % 2 == 0 || p < 3 {
        return Err(DecompositionError::EvenFamilyOrder(p));
    }
    if bases.len() < catalog.trees().len() {
        return Err(DecompositionError::MissingBase {
            key: catalog.trees()[bases.len()].canonical_key().to_vec(),
        });
    }
    let mut records = Vec::with_capacity(catalog.trees().len());
    for (tree, base) in catalog.trees().iter().zip(bases) {
        if !is_semigraceful_labeling(tree, base)? {
            return Err(DecompositionError::NotSemigraceful {
                key: tree.canonical_key().to_vec(),
            });
        }
        records.push(TreeRecord {
            tree: tree.clone(),
            base: base.clone(),
        });
    }
    let spec = MultigraphSpec::new(p, 2 * records.len() as u64)?;
    let family_copies = materialize_family_copies(&records, p)?;
    Ok(FamilyDecompositionCertificate {
        spec,
        catalog_order: p,
        records,
        family_copies,
    })
}

/// Rotation-`r` embeddings of every record, grouped by `r`.
pub(crate) fn materialize_family_copies(
    records: &[TreeRecord],
    order: usize,
) -> Result<Vec<Vec<EmbeddedTree>>, DecompositionError> {
    (0..order as u32)
        .map(|r| {
            records
                .iter()
                .enumerate()
                .map(|(tree_index, record)| {
                    Ok(EmbeddedTree {
                        tree_index,
                        rotation: r,
                        labeling: rotate_labeling(&record.base, r)?,
                    })
                })
                .collect()
        })
        .collect()
}

/// A family certificate bundled with its freshly recomputed verdict.
#[derive(Debug, Clone)]
pub struct VerifiedFamily {
    pub certificate: FamilyDecompositionCertificate,
    pub verdict: CoverageVerdict,
}

/// The two decompositions answering Eggleton's questions, verified.
#[derive(Debug, Clone)]
pub struct EggletonReproduction {
    /// `K_5^(6)` into 5 copies of the order-5 family.
    pub k5: VerifiedFamily,
    /// `K_7^(22)` into 7 copies of the order-7 family.
    pub k7: VerifiedFamily,
}

/// Runs the full pipeline (enumerate, label, decompose, verify) for orders 5
/// and 7. `budget` bounds each per-tree labeling search.
pub fn reproduce_eggleton(budget: u64) -> Result<EggletonReproduction, DecompositionError> {
    let k5 = family_pipeline(5, budget)?;
    let k7 = family_pipeline(7, budget)?;
    Ok(EggletonReproduction { k5, k7 })
}

/// Enumerates the order-`p` family, searches a semigraceful base per tree,
/// builds the family decomposition, and verifies it.
pub fn family_pipeline(p: usize, budget: u64) -> Result<VerifiedFamily, DecompositionError> {
    let catalog = enumerate_trees(p)?;
    let bases = search_family_bases(&catalog, budget)?;
    let certificate = build_family_decomposition(&catalog, &bases)?;
    let verdict = certificate.verify()?;
    Ok(VerifiedFamily {
        certificate,
        verdict,
    })
}

/// One semigraceful base labeling per catalog tree, or the error naming the
/// first tree whose search failed.
pub fn search_family_bases(
    catalog: &TreeFamilyCatalog,
    budget: u64,
) -> Result<Vec<VertexLabeling>, DecompositionError> {
    catalog
        .trees()
        .iter()
        .map(|tree| match find_semigraceful_labeling(tree, budget)? {
            SearchOutcome::Found(labeling) => Ok(labeling),
            SearchOutcome::Exhausted => Err(DecompositionError::SemigracefulCounterexample {
                key: tree.canonical_key().to_vec(),
            }),
            SearchOutcome::BudgetExhausted => Err(DecompositionError::BudgetExhausted {
                key: tree.canonical_key().to_vec(),
            }),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semi(labels: &[u32]) -> VertexLabeling {
        VertexLabeling::new(Convention::Semigraceful, labels.to_vec()).unwrap()
    }

    fn path5() -> Tree {
        Tree::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn rotation_by_zero_is_identity() {
        let base = semi(&[2, 3, 1, 4, 5]);
        assert_eq!(rotate_labeling(&base, 0).unwrap(), base);
    }

    #[test]
    fn rotation_by_one_matches_hand_computation() {
        let base = semi(&[2, 3, 1, 4, 5]);
        let rotated = rotate_labeling(&base, 1).unwrap();
        assert_eq!(rotated.labels(), &[3, 4, 2, 5, 1]);
    }

    #[test]
    fn rotation_preserves_induced_distances() {
        let tree = path5();
        let base = semi(&[2, 3, 1, 4, 5]);
        let rotated = rotate_labeling(&base, 1).unwrap();
        let induced = crate::labeling::induced_edge_labels(&tree, &rotated).unwrap();
        assert_eq!(induced.values(), &[1, 1, 2, 2]);
    }

    #[test]
    fn rotation_rejects_graceful_convention_and_bad_step() {
        let graceful = VertexLabeling::new(Convention::Graceful, vec![0, 1, 2]).unwrap();
        assert!(matches!(
            rotate_labeling(&graceful, 1),
            Err(DecompositionError::Labeling(_))
        ));
        let base = semi(&[1, 2, 3]);
        assert!(matches!(
            rotate_labeling(&base, 3),
            Err(DecompositionError::RotationOutOfRange { .. })
        ));
    }

    #[test]
    fn path5_rotation_decomposition_covers_every_pair_twice() {
        let decomposition =
            build_rotation_decomposition(&path5(), &semi(&[2, 3, 1, 4, 5])).unwrap();
        assert_eq!(decomposition.copies.len(), 5);
        let verdict = verify_cover(decomposition.embeddings(), &decomposition.spec).unwrap();
        assert!(verdict.pass);
        assert!(verdict.table.is_uniform(2));
    }

    #[test]
    fn p3_rotation_decomposition() {
        let p3 = Tree::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let decomposition = build_rotation_decomposition(&p3, &semi(&[1, 2, 3])).unwrap();
        assert_eq!(decomposition.copies.len(), 3);
        let verdict = verify_cover(decomposition.embeddings(), &decomposition.spec).unwrap();
        assert!(verdict.pass);
        assert_eq!(verdict.table.total(), 6);
    }

    #[test]
    fn star_rotation_decomposition() {
        let star = Tree::new(5, vec![(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let decomposition = build_rotation_decomposition(&star, &semi(&[1, 2, 3, 4, 5])).unwrap();
        let verdict = verify_cover(decomposition.embeddings(), &decomposition.spec).unwrap();
        assert!(verdict.pass);
    }

    #[test]
    fn builder_rejects_non_semigraceful_base() {
        assert!(matches!(
            build_rotation_decomposition(&path5(), &semi(&[1, 2, 3, 4, 5])),
            Err(DecompositionError::NotSemigraceful { .. })
        ));
    }

    #[test]
    fn cover_fails_against_wrong_multiplicity() {
        let decomposition =
            build_rotation_decomposition(&path5(), &semi(&[2, 3, 1, 4, 5])).unwrap();
        let spec3 = MultigraphSpec::new(5, 3).unwrap();
        let verdict = verify_cover(decomposition.embeddings(), &spec3).unwrap();
        assert!(!verdict.pass);
        assert!(verdict.table.is_uniform(2));
        assert_eq!(verdict.table.mismatches(3).len(), 10);
    }

    #[test]
    fn cover_fails_with_a_rotation_missing() {
        let decomposition =
            build_rotation_decomposition(&path5(), &semi(&[2, 3, 1, 4, 5])).unwrap();
        let partial: Vec<_> = decomposition.embeddings().into_iter().take(4).collect();
        let verdict = verify_cover(partial, &decomposition.spec).unwrap();
        assert!(!verdict.pass);
        assert!(verdict.table.iter().any(|(_, c)| c == 1));
        assert_eq!(verdict.table.total(), 4 * 4);
    }

    #[test]
    fn verify_rejects_order_mismatch() {
        let decomposition =
            build_rotation_decomposition(&path5(), &semi(&[2, 3, 1, 4, 5])).unwrap();
        let spec7 = MultigraphSpec::new(7, 2).unwrap();
        assert!(matches!(
            verify_cover(decomposition.embeddings(), &spec7),
            Err(DecompositionError::OrderMismatch { .. })
        ));
    }

    #[test]
    fn family_decomposition_order_three() {
        let catalog = enumerate_trees(3).unwrap();
        let bases = vec![semi(&[1, 2, 3])];
        let certificate = build_family_decomposition(&catalog, &bases).unwrap();
        assert_eq!(certificate.spec.multiplicity(), 2);
        assert_eq!(certificate.family_copies.len(), 3);
        assert_eq!(certificate.family_copies[0].len(), 1);
        let verdict = certificate.verify().unwrap();
        assert!(verdict.pass);
    }

    #[test]
    fn family_builder_rejects_even_order_and_missing_bases() {
        let catalog = enumerate_trees(4).unwrap();
        assert!(matches!(
            build_family_decomposition(&catalog, &[]),
            Err(DecompositionError::EvenFamilyOrder(4))
        ));
        let catalog5 = enumerate_trees(5).unwrap();
        assert!(matches!(
            build_family_decomposition(&catalog5, &[]),
            Err(DecompositionError::MissingBase { .. })
        ));
    }

    #[test]
    fn multigraph_spec_arithmetic() {
        let spec = MultigraphSpec::new(5, 6).unwrap();
        assert_eq!(spec.total_edges(), 60);
        assert!(MultigraphSpec::new(1, 2).is_err());
        assert!(MultigraphSpec::new(5, 0).is_err());
    }

    #[test]
    fn coverage_table_indexing() {
        let mut table = PairCoverageTable::new(5);
        table.record(5, 1);
        table.record(1, 5);
        table.record(2, 3);
        assert_eq!(table.count(1, 5), 2);
        assert_eq!(table.count(3, 2), 1);
        assert_eq!(table.count(4, 5), 0);
        assert_eq!(table.iter().count(), 10);
        assert_eq!(table.total(), 3);
    }

    #[test]
    fn tiny_budget_reports_budget_exhaustion() {
        assert!(matches!(
            reproduce_eggleton(0),
            Err(DecompositionError::BudgetExhausted { .. })
        ));
    }
}
