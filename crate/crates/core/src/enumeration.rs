//! Todd–Coxeter coset enumeration and Reidemeister–Schreier rewriting.
//!
//! Enumeration is HLT-style: every live coset in order has each relator
//! scanned (defining new cosets to fill gaps), then its row is completed.
//! Coincidences are processed with a union-find queue. After closing, cosets
//! are renumbered in breadth-first order from the subgroup coset, scanning
//! columns `g1, g1^-1, g2, g2^-1, ...`; the BFS tree gives the Schreier
//! transversal.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::perm::{generator_permutation, Perm};
use crate::presentations::{braid_presentation, Presentation, SurfaceParams};
use crate::words::{Alphabet, GenSym, Word};

/// Default coset limit.
pub const DEFAULT_MAX_COSETS: usize = 1_000_000;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    MalformedWord(String),
    IncompleteTable,
    NotInSubgroup,
    InvalidLimit,
}

impl fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationError::MalformedWord(s) => write!(f, "MalformedWord: unknown generator {s}"),
            EnumerationError::IncompleteTable => f.write_str("IncompleteTable"),
            EnumerationError::NotInSubgroup => f.write_str("NotInSubgroup"),
            EnumerationError::InvalidLimit => f.write_str("InvalidLimit: max_cosets must be at least 1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationStatus {
    Complete { index: usize },
    Aborted { limit: usize },
}

/// Action of the generators on the cosets of a subgroup. Coset ids are
/// zero-based; coset `0` is the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub presentation: Presentation,
    pub subgroup_generators: Vec<Word>,
    /// Row-major `cosets × 2·gens`; column `2k` is generator `k`, `2k+1`
    /// its inverse.
    table: Vec<u32>,
    transversal: Vec<Word>,
    status: EnumerationStatus,
}

impl CosetTable {
    pub fn status(&self) -> EnumerationStatus {
        self.status
    }

    pub fn index(&self) -> Option<usize> {
        match self.status {
            EnumerationStatus::Complete { index } => Some(index),
            EnumerationStatus::Aborted { .. } => None,
        }
    }

    pub fn generators(&self) -> &[GenSym] {
        self.presentation.generators()
    }

    fn columns(&self) -> usize {
        2 * self.generators().len()
    }

    pub fn coset_count(&self) -> usize {
        if self.columns() == 0 {
            return self.transversal.len();
        }
        self.table.len() / self.columns()
    }

    /// Image of coset `c` under column `col`.
    pub fn action(&self, c: usize, col: usize) -> Option<usize> {
        let v = self.table[c * self.columns() + col];
        (v != NONE).then_some(v as usize)
    }

    /// Schreier representative of each coset.
    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    /// Follows `w` from coset `c`. `Ok(None)` if the table has a gap.
    pub fn act(&self, c: usize, w: &Word) -> Result<Option<usize>, EnumerationError> {
        let alpha = self.presentation.alphabet();
        let mut cur = c;
        for (s, e) in w.letters() {
            let k = alpha.position(s.name()).ok_or_else(|| EnumerationError::MalformedWord(s.name().to_string()))?;
            let col = 2 * k + (e < 0) as usize;
            match self.action(cur, col) {
                Some(next) => cur = next,
                None => return Ok(None),
            }
        }
        Ok(Some(cur))
    }

    /// Every entry defined and each column a permutation inverse to its
    /// partner column.
    pub fn is_closed(&self) -> bool {
        let n = self.coset_count();
        let cols = self.columns();
        (0..n).all(|c| {
            (0..cols).all(|x| match self.action(c, x) {
                Some(d) => d < n && self.action(d, x ^ 1) == Some(c),
                None => false,
            })
        })
    }

    /// Scanning any relator from any coset returns to that coset.
    pub fn relators_close(&self) -> bool {
        let n = self.coset_count();
        self.presentation.relators().iter().all(|r| (0..n).all(|c| matches!(self.act(c, r), Ok(Some(d)) if d == c)))
    }

    /// Transversal words lead from coset 0 to their own coset.
    pub fn transversal_consistent(&self) -> bool {
        self.transversal.iter().enumerate().all(|(c, t)| matches!(self.act(0, t), Ok(Some(d)) if d == c))
    }
}

fn word_columns(alpha: &Alphabet, w: &Word) -> Result<Vec<usize>, EnumerationError> {
    w.letters()
        .map(|(s, e)| {
            alpha
                .position(s.name())
                .map(|k| 2 * k + (e < 0) as usize)
                .ok_or_else(|| EnumerationError::MalformedWord(s.name().to_string()))
        })
        .collect()
}

struct Enumerator {
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    defined: usize,
    limit: usize,
    queue: Vec<usize>,
}

#[derive(Debug)]
struct LimitReached;

impl Enumerator {
    fn new(cols: usize, limit: usize) -> Enumerator {
        let mut e = Enumerator { cols, table: Vec::new(), parent: Vec::new(), defined: 0, limit, queue: Vec::new() };
        e.new_coset().expect("limit is at least one");
        e
    }

    fn get(&self, c: usize, x: usize) -> u32 {
        self.table[c * self.cols + x]
    }

    fn set(&mut self, c: usize, x: usize, v: u32) {
        self.table[c * self.cols + x] = v;
    }

    fn new_coset(&mut self) -> Result<usize, LimitReached> {
        if self.defined >= self.limit {
            return Err(LimitReached);
        }
        let c = self.defined;
        self.defined += 1;
        self.table.extend(core::iter::repeat_n(NONE, self.cols));
        self.parent.push(c as u32);
        Ok(c)
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] as usize == c
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] as usize != r {
            r = self.parent[r] as usize;
        }
        let mut k = c;
        while self.parent[k] as usize != r {
            let next = self.parent[k] as usize;
            self.parent[k] = r as u32;
            k = next;
        }
        r
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize, LimitReached> {
        let d = self.new_coset()?;
        self.set(c, x, d as u32);
        self.set(d, x ^ 1, c as u32);
        Ok(d)
    }

    fn merge(&mut self, k: usize, l: usize) {
        let (k1, l1) = (self.rep(k), self.rep(l));
        if k1 == l1 {
            return;
        }
        let (keep, drop) = if k1 < l1 { (k1, l1) } else { (l1, k1) };
        self.parent[drop] = keep as u32;
        self.queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                let f = f as usize;
                self.set(f, x ^ 1, NONE);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                if ex != NONE {
                    self.merge(f1, ex as usize);
                } else {
                    let fx = self.get(f1, x ^ 1);
                    if fx != NONE {
                        self.merge(e1, fx as usize);
                    } else {
                        self.set(e1, x, f1 as u32);
                        self.set(f1, x ^ 1, e1 as u32);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), LimitReached> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i = 0usize;
        let mut j = w.len() - 1;
        loop {
            while i <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]) as usize;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, w[j] ^ 1) != NONE {
                b = self.get(b, w[j] ^ 1) as usize;
                if j == 0 {
                    break;
                }
                j -= 1;
            }
            if j < i || (j == i && self.get(b, w[j] ^ 1) != NONE) {
                self.coincidence(f, b);
                return Ok(());
            } else if i == j {
                self.set(f, w[i], b as u32);
                self.set(b, w[i] ^ 1, f as u32);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> Result<(), LimitReached> {
        for w in subgroup {
            self.scan_and_fill(0, w)?;
        }
        let mut c = 0;
        while c < self.defined {
            for r in relators {
                if !self.live(c) {
                    break;
                }
                self.scan_and_fill(c, r)?;
            }
            if self.live(c) {
                for x in 0..self.cols {
                    if self.get(c, x) == NONE {
                        self.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }
}

/// Breadth-first renumbering from coset 0, returning the compact table and
/// the Schreier transversal.
fn standardize(
    gens: &[GenSym],
    cols: usize,
    count: usize,
    act: impl Fn(usize, usize) -> usize,
) -> (Vec<u32>, Vec<Word>) {
    let mut new_id: BTreeMap<usize, usize> = BTreeMap::new();
    let mut order = Vec::new();
    let mut rep: Vec<Word> = Vec::new();
    let mut queue = VecDeque::new();
    new_id.insert(0, 0);
    order.push(0);
    rep.push(Word::identity());
    queue.push_back(0usize);
    while let Some(c) = queue.pop_front() {
        let here = rep[new_id[&c]].clone();
        for x in 0..cols {
            let d = act(c, x);
            if let alloc::collections::btree_map::Entry::Vacant(slot) = new_id.entry(d) {
                slot.insert(order.len());
                order.push(d);
                let step = Word::power_of(gens[x / 2].clone(), if x.rem_euclid(2) == 0 { 1 } else { -1 });
                rep.push(&here * &step);
                queue.push_back(d);
            }
        }
    }
    debug_assert_eq!(order.len(), count);
    let mut table = Vec::with_capacity(order.len() * cols);
    for &old in &order {
        for x in 0..cols {
            table.push(new_id[&act(old, x)] as u32);
        }
    }
    (table, rep)
}

/// Enumerates the cosets of `⟨subgroup⟩` in the group presented by `p`.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Result<CosetTable, EnumerationError> {
    if max_cosets == 0 {
        return Err(EnumerationError::InvalidLimit);
    }
    let alpha = p.alphabet();
    let relators: Vec<Vec<usize>> = p.relators().iter().map(|r| word_columns(alpha, r)).collect::<Result<_, _>>()?;
    let subgroup_cols: Vec<Vec<usize>> = subgroup.iter().map(|w| word_columns(alpha, w)).collect::<Result<_, _>>()?;
    let cols = 2 * alpha.len();
    let mut e = Enumerator::new(cols, max_cosets);
    if e.run(&relators, &subgroup_cols).is_err() {
        return Ok(CosetTable {
            presentation: p.clone(),
            subgroup_generators: subgroup.to_vec(),
            table: e.table,
            transversal: Vec::new(),
            status: EnumerationStatus::Aborted { limit: max_cosets },
        });
    }
    let live: Vec<usize> = (0..e.defined).filter(|&c| e.live(c)).collect();
    let (table, transversal) = standardize(p.generators(), cols, live.len(), |c, x| e.get(c, x) as usize);
    Ok(CosetTable {
        presentation: p.clone(),
        subgroup_generators: subgroup.to_vec(),
        table,
        transversal,
        status: EnumerationStatus::Complete { index: live.len() },
    })
}

/// The coset table of the pure braid group `P_n = ker ρ` in `B_n(Σ)`,
/// built from the action of `ρ` on `S_n` rather than by enumeration.
pub fn pure_subgroup_table(params: SurfaceParams, max_cosets: usize) -> Result<CosetTable, EnumerationError> {
    if max_cosets == 0 {
        return Err(EnumerationError::InvalidLimit);
    }
    let presentation = braid_presentation(params);
    let n = params.n as usize;
    let gens = presentation.generators().to_vec();
    let cols = 2 * gens.len();
    let images: Vec<Perm> =
        gens.iter().map(|g| generator_permutation(n, g).expect("braid generators have permutations")).collect();

    let mut ids: BTreeMap<Perm, usize> = BTreeMap::new();
    let mut perms = alloc::vec![Perm::identity(n)];
    ids.insert(Perm::identity(n), 0);
    let mut k = 0;
    while k < perms.len() {
        for x in 0..cols {
            let img = &images[x / 2];
            let step = if x.rem_euclid(2) == 0 { img.clone() } else { img.inverse() };
            let next = perms[k].then(&step);
            if !ids.contains_key(&next) {
                if perms.len() >= max_cosets {
                    return Ok(CosetTable {
                        presentation,
                        subgroup_generators: Vec::new(),
                        table: Vec::new(),
                        transversal: Vec::new(),
                        status: EnumerationStatus::Aborted { limit: max_cosets },
                    });
                }
                ids.insert(next.clone(), perms.len());
                perms.push(next);
            }
        }
        k += 1;
    }
    let act = |c: usize, x: usize| {
        let img = &images[x / 2];
        let step = if x.rem_euclid(2) == 0 { img.clone() } else { img.inverse() };
        ids[&perms[c].then(&step)]
    };
    let (table, transversal) = standardize(&gens, cols, perms.len(), act);
    Ok(CosetTable {
        presentation,
        subgroup_generators: Vec::new(),
        table,
        transversal,
        status: EnumerationStatus::Complete { index: perms.len() },
    })
}

/// A presentation of the subgroup on Schreier generators.
#[derive(Clone, Debug)]
pub struct RewrittenPresentation {
    /// `(alias, t·g·rep(t·g)^-1)` for every non-trivial Schreier generator.
    pub schreier_generators: Vec<(GenSym, Word)>,
    pub relators: Vec<Word>,
    pub labels: Vec<String>,
    /// `alias_at[c][k]`: alias index for coset `c` and generator `k`.
    alias_at: Vec<Vec<Option<usize>>>,
}

impl RewrittenPresentation {
    pub fn to_presentation(&self, name: &str) -> Presentation {
        let mut p = Presentation::new(name, self.schreier_generators.iter().map(|(s, _)| s.clone()), [])
            .expect("aliases are distinct");
        for (r, label) in self.relators.iter().zip(&self.labels) {
            p.push_relator(r.clone(), label.clone()).expect("relators use aliases");
        }
        p
    }

    /// Substitutes alias definitions back into ambient generators.
    pub fn expand(&self, w: &Word) -> Word {
        w.substitute(|s| self.schreier_generators.iter().find(|(a, _)| a == s).map(|(_, def)| def.clone()))
    }
}

/// Rewrites `w` read from coset `start`, returning the alias word and the
/// coset reached.
fn rewrite_from(
    aliases: &[(GenSym, Word)],
    alias_at: &[Vec<Option<usize>>],
    table: &CosetTable,
    start: usize,
    w: &Word,
) -> Result<(Word, usize), EnumerationError> {
    let alpha = table.presentation.alphabet();
    let mut out = Word::identity();
    let mut c = start;
    for (s, e) in w.letters() {
        let k = alpha.position(s.name()).ok_or_else(|| EnumerationError::MalformedWord(s.name().to_string()))?;
        if e > 0 {
            if let Some(a) = alias_at[c][k] {
                out = &out * &Word::generator(aliases[a].0.clone());
            }
            c = table.action(c, 2 * k).ok_or(EnumerationError::IncompleteTable)?;
        } else {
            let prev = table.action(c, 2 * k + 1).ok_or(EnumerationError::IncompleteTable)?;
            if let Some(a) = alias_at[prev][k] {
                out = &out * &Word::power_of(aliases[a].0.clone(), -1);
            }
            c = prev;
        }
    }
    Ok((out, c))
}

pub fn reidemeister_schreier(table: &CosetTable) -> Result<RewrittenPresentation, EnumerationError> {
    let Some(index) = table.index() else {
        return Err(EnumerationError::IncompleteTable);
    };
    let gens = table.generators();
    let reps = table.transversal();
    let mut aliases: Vec<(GenSym, Word)> = Vec::new();
    let mut alias_at = alloc::vec![alloc::vec![None; gens.len()]; index];
    for c in 0..index {
        for (k, g) in gens.iter().enumerate() {
            let d = table.action(c, 2 * k).ok_or(EnumerationError::IncompleteTable)?;
            let def = &(&reps[c] * &Word::generator(g.clone())) * &reps[d].inverse();
            if !def.is_identity() {
                alias_at[c][k] = Some(aliases.len());
                aliases.push((GenSym::named(&format!("y{}", aliases.len() + 1)), def));
            }
        }
    }
    let mut relators = Vec::new();
    let mut labels = Vec::new();
    for c in 0..index {
        for (label, r) in table.presentation.labelled_relators() {
            let (w, end) = rewrite_from(&aliases, &alias_at, table, c, r)?;
            debug_assert_eq!(end, c);
            if !w.is_identity() {
                relators.push(w);
                labels.push(format!("{label}@{}", c + 1));
            }
        }
    }
    Ok(RewrittenPresentation { schreier_generators: aliases, relators, labels, alias_at })
}

/// Expresses a subgroup element over the Schreier generators.
pub fn rewrite_word(rp: &RewrittenPresentation, table: &CosetTable, w: &Word) -> Result<Word, EnumerationError> {
    if table.index().is_none() {
        return Err(EnumerationError::IncompleteTable);
    }
    let (out, end) = rewrite_from(&rp.schreier_generators, &rp.alias_at, table, 0, w)?;
    if end != 0 {
        return Err(EnumerationError::NotInSubgroup);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::abelianize;
    use crate::words::parse_word_any;

    fn w(t: &str) -> Word {
        parse_word_any(t).unwrap()
    }

    #[test]
    fn sphere_orders() {
        let t = todd_coxeter(&braid_presentation(SurfaceParams::new(0, 0, 3)), &[], 1000).unwrap();
        assert_eq!(t.status(), EnumerationStatus::Complete { index: 12 });
        assert!(t.is_closed() && t.relators_close() && t.transversal_consistent());

        let t = todd_coxeter(&braid_presentation(SurfaceParams::new(0, 0, 2)), &[], 1000).unwrap();
        assert_eq!(t.index(), Some(2));
    }

    #[test]
    fn whole_group_subgroup() {
        let a = GenSym::named("a");
        let p = Presentation::new("C3", [a.clone()], [Word::power_of(a.clone(), 3)]).unwrap();
        let t = todd_coxeter(&p, &[Word::generator(a)], 10).unwrap();
        assert_eq!(t.index(), Some(1));
    }

    #[test]
    fn abort_and_errors() {
        // Z has no finite enumeration over the trivial subgroup
        let x = GenSym::named("x");
        let p = Presentation::new("Z", [x], []).unwrap();
        let t = todd_coxeter(&p, &[], 50).unwrap();
        assert_eq!(t.status(), EnumerationStatus::Aborted { limit: 50 });
        assert_eq!(reidemeister_schreier(&t).unwrap_err(), EnumerationError::IncompleteTable);
        assert_eq!(todd_coxeter(&p, &[w("q")], 50).unwrap_err(), EnumerationError::MalformedWord("q".into()));
        assert_eq!(todd_coxeter(&p, &[], 0).unwrap_err(), EnumerationError::InvalidLimit);
    }

    #[test]
    fn coincidences_collapse() {
        // ⟨a, b | a^3, b^2, (ab)^2⟩ = S_3, index of ⟨a⟩ is 2
        let (a, b) = (GenSym::named("a"), GenSym::named("b"));
        let p = Presentation::new("S3", [a.clone(), b.clone()], [w("a^3"), w("b^2"), w("(a b)^2")]).unwrap();
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), Some(6));
        assert_eq!(todd_coxeter(&p, &[w("a")], 100).unwrap().index(), Some(2));
        // ⟨a, b | a b a^-1 b^-2, b a b^-1 a^-2⟩ is trivial and forces coincidences
        let p = Presentation::new("T", [a, b], [w("a b a^-1 b^-2"), w("b a b^-1 a^-2")]).unwrap();
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(t.index(), Some(1));
        assert!(t.is_closed() && t.relators_close());
    }

    #[test]
    fn pure_tables() {
        let t = pure_subgroup_table(SurfaceParams::new(0, 1, 2), 100).unwrap();
        assert_eq!(t.index(), Some(2));
        assert_eq!(t.transversal(), [Word::identity(), w("s1")]);

        let t = pure_subgroup_table(SurfaceParams::new(1, 0, 2), 100).unwrap();
        assert_eq!(t.index(), Some(2));
        let (ka, kb) = (2, 4);
        for c in 0..2 {
            assert_eq!(t.action(c, ka), Some(c));
            assert_eq!(t.action(c, kb), Some(c));
        }
        let t = pure_subgroup_table(SurfaceParams::new(0, 0, 3), 100).unwrap();
        assert_eq!(t.index(), Some(6));
        assert!(t.is_closed() && t.relators_close() && t.transversal_consistent());

        let t = pure_subgroup_table(SurfaceParams::new(0, 0, 4), 10).unwrap();
        assert_eq!(t.status(), EnumerationStatus::Aborted { limit: 10 });
    }

    #[test]
    fn rs_plane_two_strands() {
        let t = pure_subgroup_table(SurfaceParams::new(0, 1, 2), 100).unwrap();
        // drop ζ_1 to get B_2(R^2) = ⟨s1⟩ with no relators
        let plane = Presentation::new("B_2(R2)", [GenSym::sigma(1)], []).unwrap();
        let t2 = todd_coxeter(&plane, &[w("s1^2")], 100).unwrap();
        let rp = reidemeister_schreier(&t2).unwrap();
        assert_eq!(rp.schreier_generators.len(), 1);
        assert_eq!(rp.schreier_generators[0].1, w("s1^2"));
        assert!(rp.relators.is_empty());
        assert_eq!(rewrite_word(&rp, &t2, &w("s1^2")).unwrap(), w("y1"));
        assert_eq!(rewrite_word(&rp, &t2, &Word::identity()).unwrap(), Word::identity());
        assert_eq!(rewrite_word(&rp, &t2, &w("s1")).unwrap_err(), EnumerationError::NotInSubgroup);
        let _ = t;
    }

    #[test]
    fn rs_annulus_zeta_is_generator() {
        let t = pure_subgroup_table(SurfaceParams::new(0, 2, 2), 100).unwrap();
        let rp = reidemeister_schreier(&t).unwrap();
        let img = rewrite_word(&rp, &t, &w("z1")).unwrap();
        assert_eq!(img.syllable_len(), 1);
        assert_eq!(rp.expand(&img), w("z1"));
    }

    #[test]
    fn rs_pure_torus_homology() {
        for n in [2, 3] {
            let t = pure_subgroup_table(SurfaceParams::new(1, 0, n), 1000).unwrap();
            let rp = reidemeister_schreier(&t).unwrap();
            let ab = abelianize(&rp.to_presentation("P_n(T)"));
            assert_eq!(ab.invariants.free_rank, 2 * n as usize, "n = {n}");
            assert!(ab.invariants.torsion.is_empty());
        }
    }

    #[test]
    fn rewriting_round_trips() {
        let t = pure_subgroup_table(SurfaceParams::new(1, 1, 3), 1000).unwrap();
        let rp = reidemeister_schreier(&t).unwrap();
        for text in ["s1^2", "s2^-1 s1^2 s2", "a1 s1 b1 s1^-1", "z1 s2 s1 s1 s2^-1 a1^-1", "e"] {
            let word = w(text);
            let r = rewrite_word(&rp, &t, &word).unwrap();
            assert_eq!(rp.expand(&r), word, "{text}");
        }
    }
}
