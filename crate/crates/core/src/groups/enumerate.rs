//! Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! Cosets are numbered from 1; entry 0 in the table means "undefined".
//! Coincidences are merged through a union-find forest (the smaller number
//! survives) and dead rows are reclaimed by compaction when the row budget
//! runs out.

use serde::{Deserialize, Serialize};

use super::presentation::Presentation;
use super::word::Word;

pub const DEFAULT_MAX_COSETS: usize = 2_000_000;

/// Coset definition strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Strategy {
    /// Define cosets in table order and scan every relator cycle through each
    /// new entry (Felsch).
    Felsch,
    /// Scan-and-fill every relator at each coset in turn (HLT).
    #[default]
    Hlt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// The table closed with this many live cosets, certifying the order.
    Closed(u64),
    /// The coset budget ran out; nothing is concluded.
    Exceeded,
}

impl Outcome {
    pub fn order(self) -> Option<u64> {
        match self {
            Outcome::Closed(k) => Some(k),
            Outcome::Exceeded => None,
        }
    }
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Outcome::Closed(k) => write!(f, "CLOSED({k})"),
            Outcome::Exceeded => write!(f, "EXCEEDED"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub defined: u64,
    pub max_live: u64,
    pub coincidences: u64,
    pub compactions: u64,
}

/// A closed coset table with rows and targets numbered from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    table: Vec<u32>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.table.len() / (2 * self.ngens).max(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn num_generators(&self) -> usize {
        self.ngens
    }

    /// Image of `coset` under column `col` (`2g` or `2g+1`).
    pub fn act(&self, coset: usize, col: usize) -> usize {
        self.table[coset * 2 * self.ngens + col] as usize
    }

    pub fn act_word(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, l| self.act(c, l.column()))
    }

    /// Every column is a permutation of the rows and each generator column is
    /// inverse to its partner.
    pub fn is_permutation_action(&self) -> bool {
        let n = self.len();
        for col in 0..2 * self.ngens {
            let mut seen = vec![false; n];
            for c in 0..n {
                let d = self.act(c, col);
                if d >= n || seen[d] || self.act(d, col ^ 1) != c {
                    return false;
                }
                seen[d] = true;
            }
        }
        true
    }

    /// Every relator acts trivially on every coset.
    pub fn satisfies(&self, p: &Presentation) -> bool {
        (0..self.len()).all(|c| p.relators().iter().all(|r| self.act_word(c, r) == c))
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub outcome: Outcome,
    pub stats: EnumerationStats,
    pub table: Option<CosetTable>,
}

/// Runs the enumeration with the default strategy.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Enumeration {
    enumerate(p, max_cosets, Strategy::default())
}

pub fn enumerate(p: &Presentation, max_cosets: usize, strategy: Strategy) -> Enumeration {
    let mut e = Enumerator::new(p, max_cosets.max(1), strategy);
    let closed = match strategy {
        Strategy::Felsch => e.run_felsch(),
        Strategy::Hlt => e.run_hlt(),
    };
    if closed {
        let table = e.closed_table();
        Enumeration {
            outcome: Outcome::Closed(table.len() as u64),
            stats: e.stats,
            table: Some(table),
        }
    } else {
        Enumeration {
            outcome: Outcome::Exceeded,
            stats: e.stats,
            table: None,
        }
    }
}

struct Enumerator {
    width: usize,
    ngens: usize,
    max: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    /// highest row number in use
    top: u32,
    live: usize,
    deductions: Vec<(u32, u32)>,
    record_deductions: bool,
    queue: Vec<u32>,
    relators: Vec<Vec<u32>>,
    /// cyclic conjugates of relators and their inverses, bucketed by first column
    cycles: Vec<Vec<Vec<u32>>>,
    stats: EnumerationStats,
}

struct Exhausted;

impl Enumerator {
    fn new(p: &Presentation, max: usize, strategy: Strategy) -> Self {
        let ngens = p.num_generators();
        let width = 2 * ngens;
        let relators: Vec<Vec<u32>> = p
            .relators()
            .iter()
            .map(|w| w.letters().iter().map(|l| l.column() as u32).collect())
            .collect();
        let mut cycles: Vec<Vec<Vec<u32>>> = vec![Vec::new(); width];
        for r in &relators {
            let inv: Vec<u32> = r.iter().rev().map(|c| c ^ 1).collect();
            for w in [r, &inv] {
                for k in 0..w.len() {
                    let rot: Vec<u32> = w[k..].iter().chain(&w[..k]).copied().collect();
                    let bucket = &mut cycles[rot[0] as usize];
                    if !bucket.contains(&rot) {
                        bucket.push(rot);
                    }
                }
            }
        }
        let mut e = Enumerator {
            width,
            ngens,
            max,
            table: vec![0; 2 * width],
            parent: vec![0, 1],
            top: 1,
            live: 1,
            deductions: Vec::new(),
            record_deductions: strategy == Strategy::Felsch,
            queue: Vec::new(),
            relators,
            cycles,
            stats: EnumerationStats::default(),
        };
        e.stats.defined = 1;
        e.stats.max_live = 1;
        e
    }

    #[inline]
    fn get(&self, c: u32, col: u32) -> u32 {
        self.table[c as usize * self.width + col as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, col: u32, v: u32) {
        self.table[c as usize * self.width + col as usize] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != r {
            let next = self.parent[x as usize];
            self.parent[x as usize] = r;
            x = next;
        }
        r
    }

    fn push_deduction(&mut self, c: u32, col: u32) {
        if self.record_deductions {
            self.deductions.push((c, col));
        }
    }

    /// Allocates a fresh row and links `c --col--> new`.
    fn define(&mut self, c: u32, col: u32) -> Result<(), Exhausted> {
        if self.top as usize >= self.max {
            return Err(Exhausted);
        }
        self.top += 1;
        let d = self.top;
        self.table.resize((d as usize + 1) * self.width, 0);
        self.parent.push(d);
        self.set(c, col, d);
        self.set(d, col ^ 1, c);
        self.live += 1;
        self.stats.defined += 1;
        self.stats.max_live = self.stats.max_live.max(self.live as u64);
        self.push_deduction(c, col);
        Ok(())
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (x, y) = (self.rep(a), self.rep(b));
        if x != y {
            let (keep, kill) = if x < y { (x, y) } else { (y, x) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            self.queue.push(kill);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.stats.coincidences += 1;
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.width as u32 {
                let d = self.get(g, col);
                if d == 0 {
                    continue;
                }
                self.set(d, col ^ 1, 0);
                let mu = self.rep(g);
                let nu = self.rep(d);
                let fwd = self.get(mu, col);
                if fwd != 0 {
                    self.merge(nu, fwd);
                } else {
                    let back = self.get(nu, col ^ 1);
                    if back != 0 {
                        self.merge(mu, back);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, col ^ 1, mu);
                        self.push_deduction(mu, col);
                    }
                }
            }
        }
    }

    /// Scans `w` at `c` without defining anything, recording a deduction
    /// when exactly one entry is missing.
    fn scan(&mut self, c: u32, w: &[u32]) {
        let mut f = c;
        let mut i = 0;
        let mut j = w.len();
        while i < j {
            let nf = self.get(f, w[i]);
            if nf == 0 {
                break;
            }
            f = nf;
            i += 1;
        }
        if i == j {
            if f != c {
                self.coincidence(f, c);
            }
            return;
        }
        let mut b = c;
        while j > i {
            let nb = self.get(b, w[j - 1] ^ 1);
            if nb == 0 {
                break;
            }
            b = nb;
            j -= 1;
        }
        if j == i {
            if f != b {
                self.coincidence(f, b);
            }
        } else if j == i + 1 {
            self.set(f, w[i], b);
            self.set(b, w[i] ^ 1, f);
            self.push_deduction(f, w[i]);
        }
    }

    /// Scans `w` at `c`, defining new cosets to close gaps.
    fn scan_and_fill(&mut self, c: u32, w: &[u32]) -> Result<(), Exhausted> {
        let mut f = c;
        let mut b = c;
        let mut i = 0;
        let mut j = w.len();
        loop {
            while i < j {
                let nf = self.get(f, w[i]);
                if nf == 0 {
                    break;
                }
                f = nf;
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i {
                let nb = self.get(b, w[j - 1] ^ 1);
                if nb == 0 {
                    break;
                }
                b = nb;
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            } else if j == i + 1 {
                self.set(f, w[i], b);
                self.set(b, w[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn process_deductions(&mut self) {
        while let Some((c, col)) = self.deductions.pop() {
            if !self.is_live(c) {
                continue;
            }
            let cycles = std::mem::take(&mut self.cycles[col as usize]);
            for w in &cycles {
                self.scan(c, w);
                if !self.is_live(c) {
                    break;
                }
            }
            self.cycles[col as usize] = cycles;
            let d = self.get(c, col);
            if d == 0 || !self.is_live(d) {
                continue;
            }
            let inv = (col ^ 1) as usize;
            let cycles = std::mem::take(&mut self.cycles[inv]);
            for w in &cycles {
                self.scan(d, w);
                if !self.is_live(d) {
                    break;
                }
            }
            self.cycles[inv] = cycles;
        }
    }

    /// Renumbers live rows consecutively, preserving order. Returns the new
    /// number of the first live row `>= c`.
    fn compact(&mut self, c: u32) -> u32 {
        self.stats.compactions += 1;
        let mut map = vec![0u32; self.top as usize + 1];
        let mut next = 0u32;
        for r in 1..=self.top {
            if self.is_live(r) {
                next += 1;
                map[r as usize] = next;
            }
        }
        let mut table = vec![0u32; (next as usize + 1) * self.width];
        for r in 1..=self.top {
            let nr = map[r as usize];
            if nr == 0 {
                continue;
            }
            for col in 0..self.width {
                let v = self.table[r as usize * self.width + col];
                if v != 0 {
                    let rv = self.rep(v);
                    table[nr as usize * self.width + col] = map[rv as usize];
                }
            }
        }
        let new_c = (c..=self.top)
            .find(|&r| self.is_live(r))
            .map_or(next + 1, |r| map[r as usize]);
        self.table = table;
        self.parent = (0..=next).collect();
        self.top = next;
        new_c
    }

    fn run_felsch(&mut self) -> bool {
        let mut c = 1u32;
        while c <= self.top {
            if self.is_live(c) {
                for col in 0..self.width as u32 {
                    if !self.is_live(c) {
                        break;
                    }
                    if self.get(c, col) != 0 {
                        continue;
                    }
                    if self.top as usize >= self.max {
                        if self.live >= self.max {
                            return false;
                        }
                        c = self.compact(c);
                    }
                    if self.define(c, col).is_err() {
                        return false;
                    }
                    self.process_deductions();
                }
            }
            c += 1;
        }
        true
    }

    fn run_hlt(&mut self) -> bool {
        let mut c = 1u32;
        let relators = std::mem::take(&mut self.relators);
        let mut ok = true;
        'outer: while c <= self.top {
            for r in &relators {
                if !self.is_live(c) {
                    break;
                }
                if self.scan_and_fill(c, r).is_err() {
                    // out of rows: reclaim dead ones and retry this coset
                    if self.live >= self.max || self.top as usize == self.live {
                        ok = false;
                        break 'outer;
                    }
                    c = self.compact(c);
                    continue 'outer;
                }
            }
            if self.is_live(c) {
                for col in 0..self.width as u32 {
                    if self.is_live(c) && self.get(c, col) == 0 && self.define(c, col).is_err() {
                        if self.live >= self.max || self.top as usize == self.live {
                            ok = false;
                            break 'outer;
                        }
                        c = self.compact(c);
                        continue 'outer;
                    }
                }
            }
            c += 1;
        }
        self.relators = relators;
        ok
    }

    fn closed_table(&mut self) -> CosetTable {
        self.compact(1);
        let n = self.top as usize;
        let mut table = vec![0u32; n * self.width];
        for r in 1..=n {
            for col in 0..self.width {
                table[(r - 1) * self.width + col] = self.table[r * self.width + col] - 1;
            }
        }
        CosetTable {
            ngens: self.ngens,
            table,
        }
    }
}
