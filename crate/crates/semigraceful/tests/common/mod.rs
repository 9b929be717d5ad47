#![allow(dead_code)] // each test binary uses a different slice of this module

//! Shared oracles for the integration suites: Prüfer-sequence brute force,
//! naive coverage recounts, and a small deterministic generator. These stay
//! independent of the library paths they cross-check.

use semigraceful::decomposition::EmbeddedTree;
use semigraceful::trees::Tree;
use std::collections::{BTreeMap, BTreeSet};

/// Splitmix-style deterministic generator for reproducible "random" cases.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// Decodes a Prüfer sequence over `0..p-1` (length `p-2`) into tree edges.
pub fn prufer_to_edges(p: usize, seq: &[u32]) -> Vec<(u32, u32)> {
    assert_eq!(seq.len(), p.saturating_sub(2));
    let mut degree = vec![1u32; p];
    for &s in seq {
        degree[s as usize] += 1;
    }
    let mut edges = Vec::with_capacity(p - 1);
    // pointer walk: always join the smallest current leaf to the next code entry
    let mut ptr = 0usize;
    while degree[ptr] != 1 {
        ptr += 1;
    }
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf as u32, s));
        degree[s as usize] -= 1;
        if degree[s as usize] == 1 && (s as usize) < ptr {
            leaf = s as usize;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    let last = (leaf as u32, p as u32 - 1);
    edges.push(last);
    edges
}

/// Canonical keys of every labeled tree on `p` vertices, obtained by brute
/// force over all `p^(p-2)` Prüfer sequences.
pub fn prufer_canonical_keys(p: usize) -> BTreeSet<Vec<u32>> {
    let mut keys = BTreeSet::new();
    if p == 1 {
        keys.insert(vec![0]);
        return keys;
    }
    if p == 2 {
        keys.insert(Tree::new(2, vec![(0, 1)]).unwrap().canonical_key().to_vec());
        return keys;
    }
    let len = p - 2;
    let mut seq = vec![0u32; len];
    loop {
        let edges = prufer_to_edges(p, &seq);
        let tree = Tree::new(p, edges).expect("Prüfer decodes to a tree");
        keys.insert(tree.canonical_key().to_vec());
        // odometer increment over base-p sequences
        let mut i = 0;
        loop {
            if i == len {
                return keys;
            }
            seq[i] += 1;
            if seq[i] < p as u32 {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// A uniformly chosen labeled tree on `p` vertices via a random Prüfer
/// sequence.
pub fn random_tree(rng: &mut Rng, p: usize) -> Tree {
    if p == 1 {
        return Tree::new(1, vec![]).unwrap();
    }
    if p == 2 {
        return Tree::new(2, vec![(0, 1)]).unwrap();
    }
    let seq: Vec<u32> = (0..p - 2).map(|_| rng.below(p as u64) as u32).collect();
    Tree::new(p, prufer_to_edges(p, &seq)).unwrap()
}

/// Relabels a tree's vertices by a permutation of `0..p-1`.
pub fn permuted_tree(tree: &Tree, perm: &[u32]) -> Tree {
    let edges = tree
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Tree::new(tree.order(), edges).unwrap()
}

/// Edge-by-edge recount of pair coverage, independent of
/// `PairCoverageTable`'s indexing.
pub fn naive_recount(embeddings: &[(&Tree, &EmbeddedTree)]) -> BTreeMap<(u32, u32), u64> {
    let mut counts = BTreeMap::new();
    for (tree, embedded) in embeddings {
        for &(u, v) in tree.edges() {
            let a = embedded.labeling.label_of(u);
            let b = embedded.labeling.label_of(v);
            let pair = (a.min(b), a.max(b));
            *counts.entry(pair).or_insert(0) += 1;
        }
    }
    counts
}
