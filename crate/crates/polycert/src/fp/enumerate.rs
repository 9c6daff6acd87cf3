//! Todd-Coxeter coset enumeration for presentations on involutory
//! generators.
//!
//! Two strategies are provided. The relator-scanning strategy (`Hlt`)
//! scans and fills every relator at every live coset in order, then
//! completes each row. The deduction strategy (`Felsch`) defines one
//! table entry at a time and drains a deduction stack, scanning every
//! relator rotation that begins with the deduced letter at both edge
//! endpoints. Both process coincidences immediately through a union-find
//! with path compression, migrating the dead coset's row and re-forcing
//! its edges between live representatives.
//!
//! Because every generator is an involution, the inverse action is the
//! generator's own column, and every edge is stored symmetrically in both
//! endpoint rows.

use std::collections::VecDeque;

use crate::dsu::UnionFind;
use crate::error::{Error, Result};
use crate::fp::word::{Presentation, Word};
use crate::group::Permutation;

const UNDEF: u32 = u32::MAX;

/// Coset definition order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Relator scanning with gap filling, row by row.
    Hlt,
    /// One definition at a time with exhaustive deduction processing.
    Felsch,
}

/// A complete, compacted coset table: every entry defined, cosets
/// renumbered 0..index with 0 the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    ngens: usize,
    cosets: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn generator_count(&self) -> usize {
        self.ngens
    }

    pub fn num_cosets(&self) -> usize {
        self.cosets
    }

    /// Image of `coset` under right multiplication by generator `gen`.
    pub fn action(&self, coset: usize, gen: usize) -> usize {
        self.table[coset * self.ngens + gen] as usize
    }

    /// The generator's action on cosets as a permutation.
    pub fn generator_permutation(&self, gen: usize) -> Permutation {
        Permutation::from_images(
            (0..self.cosets)
                .map(|c| self.table[c * self.ngens + gen])
                .collect(),
        )
        .expect("columns of a complete coset table are permutations")
    }
}

/// Result of a completed enumeration: the subgroup index and the table
/// certifying it.
#[derive(Clone, Debug)]
pub struct Enumeration {
    pub index: usize,
    pub table: CosetTable,
}

/// Enumerates the cosets of the subgroup generated by `subgroup` words in
/// the group given by `p`. With no subgroup words the index is the group
/// order. `Overflow` means the cap was hit and nothing was decided.
pub fn todd_coxeter(
    p: &Presentation,
    subgroup: &[Word],
    max_cosets: usize,
    strategy: Strategy,
) -> Result<Enumeration> {
    if max_cosets == 0 {
        return Err(Error::Overflow(0));
    }
    for w in subgroup {
        if let Some(&bad) = w.letters().iter().find(|&&l| l as usize >= p.generator_count()) {
            return Err(Error::InvalidPresentation(format!(
                "subgroup word uses generator {bad} but only {} generators exist",
                p.generator_count()
            )));
        }
    }
    if p.generator_count() == 0 {
        return Ok(Enumeration {
            index: 1,
            table: CosetTable {
                ngens: 0,
                cosets: 1,
                table: Vec::new(),
            },
        });
    }
    let relators = p.all_relator_letters();
    let mut e = Enumerator::new(p.generator_count(), max_cosets, strategy == Strategy::Felsch);
    for w in subgroup {
        if !w.is_empty() {
            e.scan(w.letters(), 0, true)?;
        }
    }
    match strategy {
        Strategy::Hlt => e.run_hlt(&relators)?,
        Strategy::Felsch => e.run_felsch(&relators)?,
    }
    e.validate(&relators, subgroup);
    let table = e.compact();
    Ok(Enumeration {
        index: table.cosets,
        table,
    })
}

struct Enumerator {
    ngens: usize,
    table: Vec<u32>,
    uf: UnionFind,
    live: usize,
    max_live: usize,
    max_defined: usize,
    dead_queue: VecDeque<u32>,
    deductions: Vec<(u32, u8)>,
    track_deductions: bool,
}

impl Enumerator {
    fn new(ngens: usize, max_live: usize, track_deductions: bool) -> Self {
        let mut e = Enumerator {
            ngens,
            table: Vec::new(),
            uf: UnionFind::new(),
            live: 0,
            max_live,
            // Safety margin for overshoot before collapses; counted over
            // all definitions ever made, live or dead.
            max_defined: max_live.saturating_mul(4).saturating_add(1024),
            dead_queue: VecDeque::new(),
            deductions: Vec::new(),
            track_deductions,
        };
        e.new_coset().expect("cap of at least one coset");
        e
    }

    fn defined(&self) -> usize {
        self.uf.len()
    }

    fn raw(&self, c: u32, g: u8) -> u32 {
        self.table[c as usize * self.ngens + g as usize]
    }

    fn set_raw(&mut self, c: u32, g: u8, v: u32) {
        self.table[c as usize * self.ngens + g as usize] = v;
    }

    /// Reads an entry, lazily normalizing stale references to dead cosets.
    fn entry(&mut self, c: u32, g: u8) -> u32 {
        let e = self.raw(c, g);
        if e == UNDEF {
            return UNDEF;
        }
        let r = self.uf.find(e);
        if r != e {
            self.set_raw(c, g, r);
        }
        r
    }

    fn new_coset(&mut self) -> Result<u32> {
        if self.live >= self.max_live {
            return Err(Error::Overflow(self.max_live));
        }
        if self.defined() >= self.max_defined {
            return Err(Error::Overflow(self.max_live));
        }
        let c = self.uf.push();
        self.table.extend(std::iter::repeat_n(UNDEF, self.ngens));
        self.live += 1;
        Ok(c)
    }

    fn queue_merge(&mut self, x: u32, y: u32) {
        if let Some((_, dead)) = self.uf.union(x, y) {
            self.live -= 1;
            self.dead_queue.push_back(dead);
        }
    }

    /// Establishes the edge a.g = b in both directions, merging whatever
    /// contradicts it.
    fn force_edge(&mut self, a: u32, g: u8, b: u32) {
        let a = self.uf.find(a);
        let b = self.uf.find(b);
        let ta = self.entry(a, g);
        if ta == UNDEF {
            self.set_raw(a, g, b);
            if self.track_deductions {
                self.deductions.push((a, g));
            }
        } else if ta != b {
            self.queue_merge(ta, b);
        }
        let a = self.uf.find(a);
        let b = self.uf.find(b);
        let tb = self.entry(b, g);
        if tb == UNDEF {
            self.set_raw(b, g, a);
            if self.track_deductions {
                self.deductions.push((b, g));
            }
        } else if tb != a {
            self.queue_merge(tb, a);
        }
    }

    /// Migrates the rows of dead cosets, re-forcing each of their edges
    /// between live representatives. Runs until no coincidences remain.
    fn process_coincidences(&mut self) {
        while let Some(dead) = self.dead_queue.pop_front() {
            for g in 0..self.ngens as u8 {
                let t = self.raw(dead, g);
                if t == UNDEF {
                    continue;
                }
                self.set_raw(dead, g, UNDEF);
                let u = self.uf.find(dead);
                let v = self.uf.find(t);
                self.force_edge(u, g, v);
            }
            // A union can complete a relator cycle without writing any
            // new entry, so every edge at the survivor must be rescanned.
            if self.track_deductions {
                let keep = self.uf.find(dead);
                for g in 0..self.ngens as u8 {
                    if self.raw(keep, g) != UNDEF {
                        self.deductions.push((keep, g));
                    }
                }
            }
        }
    }

    /// Scans `word` at `start`. With `fill` the scan always completes,
    /// defining new cosets to close gaps; without it the scan stops
    /// unless it completes or closes by a single deduction.
    fn scan(&mut self, word: &[u8], start: u32, fill: bool) -> Result<()> {
        debug_assert!(!word.is_empty());
        let mut base = self.uf.find(start);
        loop {
            let mut f = base;
            let mut i = 0usize;
            while i < word.len() {
                let next = self.entry(f, word[i]);
                if next == UNDEF {
                    break;
                }
                f = next;
                i += 1;
            }
            if i == word.len() {
                if f != base {
                    self.queue_merge(f, base);
                    self.process_coincidences();
                }
                return Ok(());
            }
            let mut b = base;
            let mut j = word.len() - 1;
            while j > i {
                let prev = self.entry(b, word[j]);
                if prev == UNDEF {
                    break;
                }
                b = prev;
                j -= 1;
            }
            if j == i {
                self.force_edge(f, word[i], b);
                self.process_coincidences();
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            let c = self.new_coset()?;
            self.force_edge(f, word[i], c);
            self.process_coincidences();
            base = self.uf.find(base);
        }
    }

    fn run_hlt(&mut self, relators: &[Vec<u8>]) -> Result<()> {
        let mut alpha: u32 = 0;
        while (alpha as usize) < self.defined() {
            if self.uf.find(alpha) != alpha {
                alpha += 1;
                continue;
            }
            for rel in relators {
                self.scan(rel, alpha, true)?;
                if self.uf.find(alpha) != alpha {
                    break;
                }
            }
            if self.uf.find(alpha) == alpha {
                for g in 0..self.ngens as u8 {
                    if self.entry(alpha, g) == UNDEF {
                        let c = self.new_coset()?;
                        self.force_edge(alpha, g, c);
                        self.process_coincidences();
                        if self.uf.find(alpha) != alpha {
                            break;
                        }
                    }
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    fn run_felsch(&mut self, relators: &[Vec<u8>]) -> Result<()> {
        // Rotations of each relator grouped by starting letter, deduped.
        let mut rotations: Vec<Vec<Vec<u8>>> = vec![Vec::new(); self.ngens];
        for rel in relators {
            for p in 0..rel.len() {
                let rot: Vec<u8> = rel[p..].iter().chain(&rel[..p]).copied().collect();
                let bucket = &mut rotations[rot[0] as usize];
                if !bucket.contains(&rot) {
                    bucket.push(rot);
                }
            }
        }
        self.drain_deductions(&rotations)?;
        let mut cursor = 0usize;
        loop {
            let mut next_def: Option<(u32, u8)> = None;
            while cursor < self.defined() * self.ngens {
                let c = (cursor / self.ngens) as u32;
                let g = (cursor % self.ngens) as u8;
                if self.uf.find(c) == c && self.entry(c, g) == UNDEF {
                    next_def = Some((c, g));
                    break;
                }
                cursor += 1;
            }
            let Some((c, g)) = next_def else {
                return Ok(());
            };
            let d = self.new_coset()?;
            self.force_edge(c, g, d);
            self.process_coincidences();
            self.drain_deductions(&rotations)?;
        }
    }

    fn drain_deductions(&mut self, rotations: &[Vec<Vec<u8>>]) -> Result<()> {
        while let Some((c, g)) = self.deductions.pop() {
            let c = self.uf.find(c);
            for rot in &rotations[g as usize] {
                self.scan(rot, c, false)?;
            }
        }
        Ok(())
    }

    /// Post-enumeration consistency pass: the table must be total on live
    /// cosets, every relator must close at every live coset, and every
    /// subgroup word must close at coset 0. A violation is a bug in the
    /// enumeration, not a property of the input, hence the panics.
    fn validate(&mut self, relators: &[Vec<u8>], subgroup: &[Word]) {
        let live: Vec<u32> = (0..self.defined() as u32)
            .filter(|&c| self.uf.find(c) == c)
            .collect();
        for w in subgroup {
            if !w.is_empty() {
                let base = self.uf.find(0);
                assert_eq!(self.walk(base, w.letters()), base, "subgroup word must close");
            }
        }
        for &c in &live {
            for rel in relators {
                assert_eq!(self.walk(c, rel), c, "relator must close at every coset");
            }
        }
    }

    fn walk(&mut self, start: u32, word: &[u8]) -> u32 {
        let mut c = start;
        for &g in word {
            c = self.entry(c, g);
            assert_ne!(c, UNDEF, "complete table expected");
        }
        c
    }

    fn compact(mut self) -> CosetTable {
        let mut remap = vec![UNDEF; self.defined()];
        let mut live_ids: Vec<u32> = Vec::with_capacity(self.live);
        for c in 0..self.defined() as u32 {
            if self.uf.find(c) == c {
                remap[c as usize] = live_ids.len() as u32;
                live_ids.push(c);
            }
        }
        let ngens = self.ngens;
        let mut table = vec![UNDEF; live_ids.len() * ngens];
        for (new, &old) in live_ids.iter().enumerate() {
            for g in 0..ngens {
                let e = self.entry(old, g as u8);
                debug_assert_ne!(e, UNDEF, "complete table expected");
                table[new * ngens + g] = remap[e as usize];
            }
        }
        CosetTable {
            ngens,
            cosets: live_ids.len(),
            table,
        }
    }
}
