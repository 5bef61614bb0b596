//! Brute-force verification engine: Todd–Coxeter enumeration over the
//! trivial subgroup, giving the regular permutation representation of a
//! small finite group, plus group order, centre order and abelianisation
//! order computed from it.
//!
//! Nothing here uses the classification code; it only reads the defining
//! presentation.

use std::collections::VecDeque;

use thiserror::Error;

use crate::classify::GroupOrder;
use crate::graph::{DyerGraph, Order};

/// Default limit on the number of cosets defined during one enumeration.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const UNDEFINED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("coset enumeration exceeded {max_cosets} cosets")]
    CapExceeded { max_cosets: usize },
    #[error("coset table is incomplete")]
    IncompleteTable,
}

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

pub type Word = Vec<Letter>;

fn free_reduce(word: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn invert(word: &[Letter]) -> Word {
    word.iter().rev().map(|l| l.inv()).collect()
}

/// A finite presentation. Relators are freely reduced and nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>) -> Self {
        Presentation {
            generators,
            relators: Vec::new(),
        }
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Adds the free reduction of `word`; trivial words are dropped.
    pub fn add_relator(&mut self, word: &[Letter]) {
        let reduced = free_reduce(word);
        if !reduced.is_empty() {
            self.relators.push(reduced);
        }
    }

    /// Adds `[u, v]` for every pair of generators.
    pub fn with_commutators(mut self) -> Self {
        let n = self.generators.len();
        for u in 0..n {
            for v in (u + 1)..n {
                let (a, b) = (Letter::new(u), Letter::new(v));
                self.add_relator(&[a, b, a.inv(), b.inv()]);
            }
        }
        self
    }

    pub fn permute_relators(&mut self, order: &[usize]) {
        self.relators = order.iter().map(|&i| self.relators[i].clone()).collect();
    }

    /// Generators `g` with a relator exactly `g g`.
    fn involutions(&self) -> Vec<bool> {
        let mut inv = vec![false; self.generators.len()];
        for r in &self.relators {
            if let [a, b] = r.as_slice() {
                if a == b {
                    inv[a.generator] = true;
                }
            }
        }
        inv
    }
}

/// `uvu...` with `m` letters.
fn alternating(u: usize, v: usize, m: u32) -> Word {
    (0..m)
        .map(|i| Letter::new(if i % 2 == 0 { u } else { v }))
        .collect()
}

/// The defining presentation: `v^f(v)` for finite orders and
/// `(uvu...)(vuv...)^-1` with `m` letters each for every edge.
pub fn presentation_of(g: &DyerGraph) -> Presentation {
    let mut p = Presentation::new(g.names().to_vec());
    for v in 0..g.vertex_count() {
        if let Order::Finite(f) = g.order(v) {
            p.add_relator(&vec![Letter::new(v); f as usize]);
        }
    }
    for (u, v, m) in g.edges() {
        let mut word = alternating(u, v, m);
        word.extend(invert(&alternating(v, u, m)));
        p.add_relator(&word);
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationStatus {
    Complete,
    CapExceeded,
}

/// Result of coset enumeration over the trivial subgroup. When complete, the
/// cosets are the group elements (coset 0 is the identity) and
/// `act(c, s)` is right multiplication by generator `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    status: EnumerationStatus,
    forward: Vec<Vec<u32>>,
    backward: Vec<Vec<u32>>,
    cosets: usize,
    max_cosets: usize,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == EnumerationStatus::Complete
    }

    /// Number of cosets: the group order when complete, the live count at
    /// the point of abort otherwise.
    pub fn len(&self) -> usize {
        self.cosets
    }

    pub fn is_empty(&self) -> bool {
        self.cosets == 0
    }

    pub fn generator_count(&self) -> usize {
        self.forward.len()
    }

    pub fn act(&self, coset: usize, generator: usize) -> usize {
        self.forward[generator][coset] as usize
    }

    pub fn act_inverse(&self, coset: usize, generator: usize) -> usize {
        self.backward[generator][coset] as usize
    }

    pub fn act_letter(&self, coset: usize, letter: Letter) -> usize {
        if letter.inverse {
            self.act_inverse(coset, letter.generator)
        } else {
            self.act(coset, letter.generator)
        }
    }

    pub fn act_word(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act_letter(c, l))
    }

    fn require_complete(&self) -> Result<(), OracleError> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(OracleError::CapExceeded {
                max_cosets: self.max_cosets,
            })
        }
    }
}

/// Mutable HLT state. Columns come in inverse pairs; an involution uses one
/// self-inverse column.
struct Enumerator {
    columns: usize,
    inverse_col: Vec<usize>,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    max_cosets: usize,
}

struct Overflow;

impl Enumerator {
    fn get(&self, coset: usize, col: usize) -> u32 {
        self.table[coset * self.columns + col]
    }

    fn put(&mut self, coset: usize, col: usize, value: u32) {
        self.table[coset * self.columns + col] = value;
    }

    fn rows(&self) -> usize {
        self.parent.len()
    }

    fn is_live(&self, coset: usize) -> bool {
        self.parent[coset] as usize == coset
    }

    fn new_coset(&mut self) -> Result<usize, Overflow> {
        if self.rows() >= self.max_cosets {
            return Err(Overflow);
        }
        let id = self.rows();
        self.parent.push(id as u32);
        self.table.extend(std::iter::repeat_n(UNDEFINED, self.columns));
        self.live += 1;
        Ok(id)
    }

    fn define(&mut self, coset: usize, col: usize) -> Result<(), Overflow> {
        let fresh = self.new_coset()?;
        self.put(coset, col, fresh as u32);
        self.put(fresh, self.inverse_col[col], coset as u32);
        Ok(())
    }

    fn rep(&mut self, coset: usize) -> usize {
        let mut root = coset;
        while self.parent[root] as usize != root {
            root = self.parent[root] as usize;
        }
        let mut cur = coset;
        while self.parent[cur] as usize != root {
            let next = self.parent[cur] as usize;
            self.parent[cur] = root as u32;
            cur = next;
        }
        root
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut VecDeque<usize>) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, dead) = (ra.min(rb), ra.max(rb));
            self.parent[dead] = keep as u32;
            self.live -= 1;
            queue.push_back(dead);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = VecDeque::new();
        self.merge(a, b, &mut queue);
        while let Some(dead) = queue.pop_front() {
            for col in 0..self.columns {
                let target = self.get(dead, col);
                if target == UNDEFINED {
                    continue;
                }
                let target = target as usize;
                let inv = self.inverse_col[col];
                if self.get(target, inv) as usize == dead {
                    self.put(target, inv, UNDEFINED);
                }
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_img = self.get(mu, col);
                if mu_img != UNDEFINED {
                    self.merge(nu, mu_img as usize, &mut queue);
                } else {
                    let nu_img = self.get(nu, inv);
                    if nu_img != UNDEFINED {
                        self.merge(mu, nu_img as usize, &mut queue);
                    } else {
                        self.put(mu, col, nu as u32);
                        self.put(nu, inv, mu as u32);
                    }
                }
            }
        }
    }

    /// Scans `relator` at `coset`, defining cosets to close the gap.
    fn scan_and_fill(&mut self, coset: usize, relator: &[usize]) -> Result<(), Overflow> {
        let mut f = coset;
        let mut b = coset;
        let mut i = 0usize;
        let mut j = relator.len();
        loop {
            while i < j {
                let next = self.get(f, relator[i]);
                if next == UNDEFINED {
                    break;
                }
                f = next as usize;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let prev = self.get(b, self.inverse_col[relator[j - 1]]);
                if prev == UNDEFINED {
                    break;
                }
                b = prev as usize;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                let col = relator[i];
                self.put(f, col, b as u32);
                self.put(b, self.inverse_col[col], f as u32);
                return Ok(());
            }
            self.define(f, relator[i])?;
        }
    }
}

/// HLT enumeration over the trivial subgroup. At most `max_cosets` cosets
/// are ever defined; running out yields [`EnumerationStatus::CapExceeded`].
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> CosetTable {
    let gens = p.generators.len();
    let involution = p.involutions();
    let mut column_of = vec![(0usize, 0usize); gens];
    let mut inverse_col = Vec::new();
    for g in 0..gens {
        let c = inverse_col.len();
        if involution[g] {
            inverse_col.push(c);
            column_of[g] = (c, c);
        } else {
            inverse_col.push(c + 1);
            inverse_col.push(c);
            column_of[g] = (c, c + 1);
        }
    }
    let columns = inverse_col.len();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| {
            w.iter()
                .map(|l| {
                    let (f, b) = column_of[l.generator];
                    if l.inverse {
                        b
                    } else {
                        f
                    }
                })
                .collect()
        })
        .collect();

    let capped = |live: usize| CosetTable {
        status: EnumerationStatus::CapExceeded,
        forward: Vec::new(),
        backward: Vec::new(),
        cosets: live,
        max_cosets,
    };

    let mut e = Enumerator {
        columns,
        inverse_col,
        table: Vec::new(),
        parent: Vec::new(),
        live: 0,
        max_cosets: max_cosets.max(1),
    };
    if e.new_coset().is_err() {
        return capped(0);
    }

    let mut coset = 0;
    while coset < e.rows() {
        if e.is_live(coset) {
            for r in &relators {
                if e.scan_and_fill(coset, r).is_err() {
                    return capped(e.live);
                }
                if !e.is_live(coset) {
                    break;
                }
            }
            for col in 0..columns {
                if !e.is_live(coset) {
                    break;
                }
                if e.get(coset, col) == UNDEFINED && e.define(coset, col).is_err() {
                    return capped(e.live);
                }
            }
        }
        coset += 1;
    }

    standardize(&e, &column_of, max_cosets)
}

/// Renumbers live cosets in breadth-first order from coset 0, scanning
/// generators in order, forward before inverse.
fn standardize(e: &Enumerator, column_of: &[(usize, usize)], max_cosets: usize) -> CosetTable {
    let mut number = vec![UNDEFINED; e.rows()];
    let mut order = Vec::with_capacity(e.live);
    number[0] = 0;
    order.push(0usize);
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for &(f, b) in column_of {
            for col in [f, b] {
                let t = e.get(c, col) as usize;
                if number[t] == UNDEFINED {
                    number[t] = order.len() as u32;
                    order.push(t);
                }
            }
        }
    }
    let gens = column_of.len();
    let mut forward = vec![vec![0u32; order.len()]; gens];
    let mut backward = vec![vec![0u32; order.len()]; gens];
    for (new, &old) in order.iter().enumerate() {
        for (g, &(f, b)) in column_of.iter().enumerate() {
            forward[g][new] = number[e.get(old, f) as usize];
            backward[g][new] = number[e.get(old, b) as usize];
        }
    }
    CosetTable {
        status: EnumerationStatus::Complete,
        forward,
        backward,
        cosets: order.len(),
        max_cosets,
    }
}

pub fn brute_order(g: &DyerGraph, max_cosets: usize) -> Result<usize, OracleError> {
    let table = todd_coxeter(&presentation_of(g), max_cosets);
    table.require_complete()?;
    Ok(table.len())
}

/// Counts elements commuting with every generator. Element `x_c` is the one
/// taking coset 0 to `c`; left multiplication by `s` is computed along a
/// spanning tree, since it commutes with the right action.
pub fn brute_centre_order(t: &CosetTable) -> Result<usize, OracleError> {
    if !t.is_complete() {
        return Err(OracleError::IncompleteTable);
    }
    let n = t.len();
    let mut central = vec![true; n];
    let tree = spanning_tree(t);
    for s in 0..t.generator_count() {
        let mut left = vec![UNDEFINED; n];
        left[0] = t.act(0, s) as u32;
        for &(from, letter, to) in &tree {
            left[to] = t.act_letter(left[from] as usize, letter) as u32;
        }
        for c in 0..n {
            if left[c] as usize != t.act(c, s) {
                central[c] = false;
            }
        }
    }
    Ok(central.iter().filter(|&&z| z).count())
}

/// BFS tree edges `(parent, letter, child)` from coset 0.
fn spanning_tree(t: &CosetTable) -> Vec<(usize, Letter, usize)> {
    let n = t.len();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    while let Some(c) = queue.pop_front() {
        for g in 0..t.generator_count() {
            for letter in [Letter::new(g), Letter::new(g).inv()] {
                let d = t.act_letter(c, letter);
                if !seen[d] {
                    seen[d] = true;
                    edges.push((c, letter, d));
                    queue.push_back(d);
                }
            }
        }
    }
    edges
}

/// Order of the abelianisation; infinite as soon as a generator has
/// infinite order (it cannot be identified with any other generator).
pub fn brute_abelianisation_order(
    g: &DyerGraph,
    max_cosets: usize,
) -> Result<GroupOrder, OracleError> {
    if g.orders().iter().any(|o| o.is_infinite()) {
        return Ok(GroupOrder::Infinite);
    }
    let table = todd_coxeter(&presentation_of(g).with_commutators(), max_cosets);
    table.require_complete()?;
    Ok(GroupOrder::from(table.len() as u64))
}

/// Enumerates and returns the full table, for callers that need more than
/// the order.
pub fn enumerate_graph(g: &DyerGraph, max_cosets: usize) -> Result<CosetTable, OracleError> {
    let table = todd_coxeter(&presentation_of(g), max_cosets);
    table.require_complete()?;
    Ok(table)
}
