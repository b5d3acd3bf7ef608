//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use fusion_torsion::fusion::IrrLabel;
use fusion_torsion::providers::WordGroup;

/// A free product of cyclic groups as a string-rewriting system: lowercase
/// letters are generators, uppercase their inverses, and `order[i]` (0 for
/// infinite) gives the relation `g_i^order = 1`.
pub struct RawGroup {
    pub letters: Vec<char>,
    pub order: Vec<u32>,
}

impl RawGroup {
    pub fn new(orders: &[u32]) -> Self {
        RawGroup {
            letters: ('a'..).take(orders.len()).collect(),
            order: orders.to_vec(),
        }
    }

    fn index(&self, c: char) -> usize {
        self.letters.iter().position(|l| *l == c.to_ascii_lowercase()).unwrap()
    }

    /// Letters a word may use: inverses only for infinite factors.
    pub fn alphabet(&self) -> Vec<char> {
        let mut out = Vec::new();
        for (i, l) in self.letters.iter().enumerate() {
            out.push(*l);
            if self.order[i] != 1 && self.order[i] != 2 {
                out.push(l.to_ascii_uppercase());
            }
        }
        out
    }

    /// Naive reduction: cancel `xX`/`Xx`, rewrite `X` as `x^{m−1}` for
    /// finite order `m`, collapse `x^m`, repeat until nothing changes.
    pub fn reduce(&self, w: &str) -> String {
        let mut s: Vec<char> = Vec::new();
        for c in w.chars() {
            let i = self.index(c);
            let m = self.order[i];
            if c.is_ascii_uppercase() && m != 0 {
                for _ in 0..m - 1 {
                    self.push(&mut s, self.letters[i]);
                }
            } else {
                self.push(&mut s, c);
            }
        }
        s.into_iter().collect()
    }

    fn push(&self, s: &mut Vec<char>, c: char) {
        if let Some(&last) = s.last() {
            if last != c && last.eq_ignore_ascii_case(&c) {
                s.pop();
                return;
            }
        }
        s.push(c);
        let i = self.index(c);
        let m = self.order[i] as usize;
        if m != 0 && s.len() >= m && s[s.len() - m..].iter().all(|&x| x == c) {
            s.truncate(s.len() - m);
        }
    }

    pub fn inverse(&self, w: &str) -> String {
        let inv: String = w
            .chars()
            .rev()
            .map(|c| if c.is_ascii_lowercase() { c.to_ascii_uppercase() } else { c.to_ascii_lowercase() })
            .collect();
        self.reduce(&inv)
    }

    /// Every reduced word of length ≤ `max_len`, by reducing all raw strings.
    pub fn ball(&self, max_len: usize) -> BTreeSet<String> {
        let alphabet = self.alphabet();
        let mut out = BTreeSet::new();
        let mut layer = vec![String::new()];
        for _ in 0..=max_len {
            let mut next = Vec::new();
            for w in &layer {
                let r = self.reduce(w);
                if r.len() <= max_len {
                    out.insert(r);
                }
                for c in &alphabet {
                    next.push(format!("{w}{c}"));
                }
            }
            layer = next;
        }
        out
    }

    /// Reduced words of length ≤ `max_len` with `w^k = 1` for some `1 ≤ k ≤ max_power`.
    pub fn torsion(&self, max_len: usize, max_power: usize) -> BTreeSet<String> {
        self.ball(max_len)
            .into_iter()
            .filter(|w| (1..=max_power).any(|k| self.reduce(&w.repeat(k)).is_empty()))
            .collect()
    }

    /// Subgroup generated by the conjugates `g s g⁻¹` (`s ∈ seeds`,
    /// `|g| ≤ conj_len`), exploring products of length ≤ `max_len`.
    pub fn normal_closure(&self, seeds: &BTreeSet<String>, conj_len: usize, max_len: usize) -> BTreeSet<String> {
        let mut conjugates = BTreeSet::new();
        for g in self.ball(conj_len) {
            let gi = self.inverse(&g);
            for s in seeds {
                let c = self.reduce(&format!("{g}{s}{gi}"));
                if !c.is_empty() && c.len() <= max_len {
                    conjugates.insert(c);
                }
            }
        }
        let mut seen: HashSet<String> = HashSet::from([String::new()]);
        let mut queue = VecDeque::from([String::new()]);
        while let Some(w) = queue.pop_front() {
            for c in &conjugates {
                let p = self.reduce(&format!("{w}{c}"));
                if p.len() <= max_len && seen.insert(p.clone()) {
                    queue.push_back(p);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Spells a word-group label in the rewriting alphabet.
pub fn spell(label: &IrrLabel) -> String {
    let mut s = String::new();
    for syl in WordGroup::word(label).unwrap() {
        let c = (b'a' + syl.factor as u8) as char;
        let c = if syl.exp < 0 { c.to_ascii_uppercase() } else { c };
        for _ in 0..syl.exp.unsigned_abs() {
            s.push(c);
        }
    }
    s
}
