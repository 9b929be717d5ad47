//! Free trees: validated edge-list representation, centroid-rooted canonical
//! keys, isomorphism testing, and enumeration of all pairwise non-isomorphic
//! trees of a given order.
//!
//! Trees are stored over internal vertex ids `0..p-1`. Vertex ids are identity
//! only; integer labels used by labelings live in [`crate::labeling`].

use thiserror::Error;

/// Largest order accepted by [`enumerate_trees`] unless a caller raises the
/// limit explicitly via [`enumerate_trees_with_max`].
pub const DEFAULT_MAX_ORDER: usize = 20;

/// Number of free trees per order, orders 1..=27 (Sloane's A000055 with the
/// empty-tree entry dropped). Serves counts past the enumeration limit.
const TREE_COUNT_FIXTURE: [u64; 27] = [
    1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320, 48629, 123867, 317955,
    823065, 2144505, 5623756, 14828074, 39299897, 104636890, 279793450, 751065460,
];

/// Fixture lookup for the number of free trees of a given order, if tabled.
pub fn tree_count_fixture(order: usize) -> Option<u64> {
    if (1..=TREE_COUNT_FIXTURE.len()).contains(&order) {
        Some(TREE_COUNT_FIXTURE[order - 1])
    } else {
        None
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("tree order must be at least 1")]
    ZeroOrder,
    #[error("order {order} is outside the supported range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },
    #[error("a tree of order {order} must have exactly {expected} edges, got {actual}")]
    EdgeCount {
        order: usize,
        expected: usize,
        actual: usize,
    },
    #[error("edge ({u}, {v}) mentions a vertex outside 0..{order}")]
    VertexOutOfRange { u: u32, v: u32, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(u32, u32),
    #[error("edges do not form a connected acyclic graph")]
    NotATree,
    #[error("invalid level sequence at position {position}")]
    BadLevelSequence { position: usize },
    #[error("malformed edge-list text: {0}")]
    BadEdgeListText(String),
}

/// A free tree of order `p`: `p - 1` unordered edges over vertex ids
/// `0..p-1`, plus a canonical key that is equal for isomorphic trees and
/// distinct for non-isomorphic ones.
///
/// The key is the level sequence (preorder depth sequence) of the tree rooted
/// at its centroid, with sibling subtrees ordered so the sequence is
/// lexicographically greatest for that root. Bicentroidal trees are rooted at
/// each of the two centroids and the lexicographically smaller of the two
/// sequences is kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    order: usize,
    edges: Vec<(u32, u32)>,
    canonical_key: Vec<u32>,
}

impl Tree {
    /// Validates and builds a tree: exactly `order - 1` edges, no self-loops,
    /// no repeated pairs, connected and acyclic.
    pub fn new(order: usize, edges: Vec<(u32, u32)>) -> Result<Self, TreeError> {
        if order == 0 {
            return Err(TreeError::ZeroOrder);
        }
        if edges.len() != order - 1 {
            return Err(TreeError::EdgeCount {
                order,
                expected: order - 1,
                actual: edges.len(),
            });
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u as usize >= order || v as usize >= order {
                return Err(TreeError::VertexOutOfRange { u, v, order });
            }
            if u == v {
                return Err(TreeError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        let adj = adjacency(order, &normalized);
        if !is_connected(order, &adj) {
            return Err(TreeError::NotATree);
        }
        let canonical_key = canonical_key_of(order, &adj);
        Ok(Tree {
            order,
            edges: normalized,
            canonical_key,
        })
    }

    /// Decodes a level sequence (`seq[i]` = depth of preorder vertex `i`,
    /// `seq[0] = 0`) into a tree whose vertex ids are the sequence positions.
    /// The parent of vertex `i > 0` is the nearest previous vertex one level
    /// up. Canonical keys are such sequences, so this inverts
    /// [`Tree::canonical_key`].
    pub fn from_level_sequence(seq: &[u32]) -> Result<Self, TreeError> {
        let order = seq.len();
        if order == 0 {
            return Err(TreeError::ZeroOrder);
        }
        if seq[0] != 0 {
            return Err(TreeError::BadLevelSequence { position: 0 });
        }
        let mut edges = Vec::with_capacity(order.saturating_sub(1));
        let mut stack: Vec<usize> = vec![0];
        for (i, &level) in seq.iter().enumerate().skip(1) {
            if level == 0 || level > seq[i - 1] + 1 {
                return Err(TreeError::BadLevelSequence { position: i });
            }
            while seq[*stack.last().unwrap()] >= level {
                stack.pop();
            }
            let parent = *stack.last().unwrap() as u32;
            edges.push((parent, i as u32));
            stack.push(i);
        }
        edges.sort_unstable();
        let adj = adjacency(order, &edges);
        let canonical_key = canonical_key_of(order, &adj);
        Ok(Tree {
            order,
            edges,
            canonical_key,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Normalized edge list: each pair `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn canonical_key(&self) -> &[u32] {
        &self.canonical_key
    }

    pub fn adjacency(&self) -> Vec<Vec<u32>> {
        adjacency(self.order, &self.edges)
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.order];
        for &(u, v) in &self.edges {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        deg
    }

    /// Edge-list text format: first line the order, then one `u v` line per
    /// edge with 0-based vertex ids.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the format written by [`Tree::to_edge_list_text`].
    pub fn from_edge_list_text(text: &str) -> Result<Self, TreeError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let order: usize = lines
            .next()
            .ok_or_else(|| TreeError::BadEdgeListText("empty input".into()))?
            .trim()
            .parse()
            .map_err(|_| TreeError::BadEdgeListText("first line must be the order".into()))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut parts = line.split_whitespace();
            let u = parts
                .next()
                .and_then(|t| t.parse::<u32>().ok())
                .ok_or_else(|| TreeError::BadEdgeListText(format!("bad edge line {line:?}")))?;
            let v = parts
                .next()
                .and_then(|t| t.parse::<u32>().ok())
                .ok_or_else(|| TreeError::BadEdgeListText(format!("bad edge line {line:?}")))?;
            if parts.next().is_some() {
                return Err(TreeError::BadEdgeListText(format!(
                    "trailing tokens on edge line {line:?}"
                )));
            }
            edges.push((u, v));
        }
        Tree::new(order, edges)
    }
}

/// True iff the two trees are isomorphic as free trees.
pub fn trees_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.canonical_key == b.canonical_key
}

/// Every free tree of one order, sorted ascending by canonical key.
#[derive(Debug, Clone)]
pub struct TreeFamilyCatalog {
    order: usize,
    trees: Vec<Tree>,
}

impl TreeFamilyCatalog {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn count(&self) -> u64 {
        self.trees.len() as u64
    }

    pub fn get(&self, index: usize) -> Option<&Tree> {
        self.trees.get(index)
    }
}

/// Enumerates every free tree of the given order exactly once up to
/// isomorphism, with the default order limit.
pub fn enumerate_trees(order: usize) -> Result<TreeFamilyCatalog, TreeError> {
    enumerate_trees_with_max(order, DEFAULT_MAX_ORDER)
}

/// [`enumerate_trees`] with an explicit order limit. Generation walks the
/// Wright-Richmond-Odlyzko-McKay successor over centroid-rooted level
/// sequences (constant amortized time per tree); the catalog is then keyed
/// and sorted by this crate's canonical form.
pub fn enumerate_trees_with_max(
    order: usize,
    max_order: usize,
) -> Result<TreeFamilyCatalog, TreeError> {
    if order == 0 || order > max_order {
        return Err(TreeError::OrderOutOfRange {
            order,
            max: max_order,
        });
    }
    let mut trees = Vec::new();
    if order == 1 {
        trees.push(Tree::new(1, Vec::new())?);
    } else {
        let mut layout = initial_layout(order);
        loop {
            let valid = next_free_tree(layout);
            trees.push(tree_from_layout(&valid));
            match next_rooted_tree(&valid, None) {
                Some(next) => layout = next,
                None => break,
            }
        }
    }
    trees.sort_unstable_by(|a, b| a.canonical_key.cmp(&b.canonical_key));
    for w in trees.windows(2) {
        assert!(
            w[0].canonical_key != w[1].canonical_key,
            "enumeration produced two trees with identical canonical keys"
        );
    }
    Ok(TreeFamilyCatalog { order, trees })
}

/// τ(order): the number of free trees. Enumerates within the default limit,
/// serves fixture values up to order 27 beyond it.
pub fn tree_count(order: usize) -> Result<u64, TreeError> {
    if (1..=DEFAULT_MAX_ORDER).contains(&order) {
        Ok(enumerate_trees(order)?.count())
    } else if let Some(tau) = tree_count_fixture(order) {
        Ok(tau)
    } else {
        Err(TreeError::OrderOutOfRange {
            order,
            max: TREE_COUNT_FIXTURE.len(),
        })
    }
}

fn adjacency(order: usize, edges: &[(u32, u32)]) -> Vec<Vec<u32>> {
    let mut adj = vec![Vec::new(); order];
    for &(u, v) in edges {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
    }
    adj
}

fn is_connected(order: usize, adj: &[Vec<u32>]) -> bool {
    let mut seen = vec![false; order];
    let mut queue = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(u) = queue.pop() {
        for &w in &adj[u] {
            if !seen[w as usize] {
                seen[w as usize] = true;
                reached += 1;
                queue.push(w as usize);
            }
        }
    }
    reached == order
}

/// The one or two vertices minimizing the largest component left by their
/// removal, ascending by id.
fn centroids(order: usize, adj: &[Vec<u32>]) -> Vec<usize> {
    if order == 1 {
        return vec![0];
    }
    let mut parent = vec![usize::MAX; order];
    let mut bfs = Vec::with_capacity(order);
    let mut seen = vec![false; order];
    bfs.push(0usize);
    seen[0] = true;
    let mut head = 0;
    while head < bfs.len() {
        let u = bfs[head];
        head += 1;
        for &w in &adj[u] {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                bfs.push(w);
            }
        }
    }
    let mut size = vec![1u32; order];
    for &u in bfs.iter().rev() {
        if u != 0 {
            size[parent[u]] += size[u];
        }
    }
    let mut out = Vec::new();
    for u in 0..order {
        let mut biggest = order as u32 - size[u];
        for &w in &adj[u] {
            let w = w as usize;
            if parent[w] == u {
                biggest = biggest.max(size[w]);
            }
        }
        if (biggest as usize) * 2 <= order {
            out.push(u);
        }
    }
    debug_assert!(out.len() == 1 || out.len() == 2);
    out
}

/// Preorder depth sequence of the subtree at `v`, sibling subtrees ordered
/// descending so the sequence is lexicographically greatest. Equal sequences
/// mean isomorphic rooted subtrees.
pub(crate) fn canonical_sequence(
    adj: &[Vec<u32>],
    v: usize,
    parent: usize,
    depth: u32,
) -> Vec<u32> {
    let mut child_seqs: Vec<Vec<u32>> = adj[v]
        .iter()
        .filter(|&&w| w as usize != parent)
        .map(|&w| canonical_sequence(adj, w as usize, v, depth + 1))
        .collect();
    child_seqs.sort_unstable_by(|a, b| b.cmp(a));
    let mut seq = Vec::with_capacity(1 + child_seqs.iter().map(Vec::len).sum::<usize>());
    seq.push(depth);
    for cs in child_seqs {
        seq.extend(cs);
    }
    seq
}

fn canonical_key_of(order: usize, adj: &[Vec<u32>]) -> Vec<u32> {
    centroids(order, adj)
        .into_iter()
        .map(|c| canonical_sequence(adj, c, usize::MAX, 0))
        .min()
        .expect("a tree has at least one centroid")
}

// --- Wright-Richmond-Odlyzko-McKay free tree generation over level
// --- sequences (root at level 0, lexicographically decreasing order).

fn initial_layout(order: usize) -> Vec<u32> {
    // the path rooted at its center
    let mut layout: Vec<u32> = (0..=(order / 2) as u32).collect();
    layout.extend(1..order.div_ceil(2) as u32);
    layout
}

/// Beyer-Hedetniemi successor of a rooted level sequence, optionally chopped
/// at position `p`.
fn next_rooted_tree(pred: &[u32], p: Option<usize>) -> Option<Vec<u32>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - (p - q)];
    }
    Some(result)
}

/// Splits a layout into the root's first subtree (depths shifted to start at
/// 0) and the remainder of the tree with that subtree removed.
fn split_layout(layout: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut one_found = false;
    let mut m = layout.len();
    for (i, &level) in layout.iter().enumerate() {
        if level == 1 {
            if one_found {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    let left: Vec<u32> = layout[1..m].iter().map(|&x| x - 1).collect();
    let mut rest = Vec::with_capacity(1 + layout.len() - m);
    rest.push(0);
    rest.extend_from_slice(&layout[m..]);
    (left, rest)
}

/// Advances an arbitrary rooted layout to the next one that is the canonical
/// representative of a free tree (possibly the layout itself).
fn next_free_tree(candidate: Vec<u32>) -> Vec<u32> {
    let (left, rest) = split_layout(&candidate);
    let left_height = *left.iter().max().expect("root has a child for order >= 2");
    let rest_height = *rest.iter().max().expect("rest contains the root");
    let mut valid = rest_height >= left_height;
    if valid
        && rest_height == left_height
        && (left.len() > rest.len() || (left.len() == rest.len() && left > rest))
    {
        valid = false;
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))
        .expect("an invalid free-tree layout always has a rooted successor");
    if candidate[p] > 2 {
        let (new_left, _) = split_layout(&next);
        let new_left_height = *new_left.iter().max().expect("left subtree is nonempty");
        let suffix_len = new_left_height as usize + 1;
        let start = next.len() - suffix_len;
        for (k, slot) in next[start..].iter_mut().enumerate() {
            *slot = k as u32 + 1;
        }
    }
    next
}

/// Rebuilds a generated layout as a [`Tree`] in canonical vertex ids.
fn tree_from_layout(layout: &[u32]) -> Tree {
    let raw = Tree::from_level_sequence(layout).expect("generator layouts are well-formed");
    let tree = Tree::from_level_sequence(&raw.canonical_key)
        .expect("canonical keys are well-formed level sequences");
    debug_assert_eq!(tree.canonical_key, raw.canonical_key);
    tree
}
