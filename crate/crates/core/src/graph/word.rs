use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;

/// A word in which every symbol occurs exactly twice. Words are read
/// cyclically; [`DoubleOccurrenceWord::cyclically_equivalent`] compares them
/// modulo rotation and reversal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DoubleOccurrenceWord {
    symbols: Vec<char>,
}

impl std::str::FromStr for DoubleOccurrenceWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(s.chars().collect())
    }
}

impl std::fmt::Display for DoubleOccurrenceWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for c in &self.symbols {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl DoubleOccurrenceWord {
    pub fn new(symbols: Vec<char>) -> Result<Self> {
        let mut counts: BTreeMap<char, usize> = BTreeMap::new();
        for &c in &symbols {
            *counts.entry(c).or_default() += 1;
        }
        if let Some((c, n)) = counts.iter().find(|(_, &n)| n != 2) {
            return Err(Error::input(format!("symbol {c:?} occurs {n} times, expected 2")));
        }
        Ok(DoubleOccurrenceWord { symbols })
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    /// Alphabet in order of first occurrence.
    pub fn alphabet(&self) -> Vec<char> {
        let mut out = Vec::new();
        for &c in &self.symbols {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    fn positions(&self, a: char) -> Option<(usize, usize)> {
        let mut it = self.symbols.iter().enumerate().filter(|(_, &c)| c == a).map(|(i, _)| i);
        Some((it.next()?, it.next()?))
    }

    /// Exactly one occurrence of `b` lies between the two occurrences of `a`.
    pub fn interlaced(&self, a: char, b: char) -> bool {
        if a == b {
            return false;
        }
        match (self.positions(a), self.positions(b)) {
            (Some((i, j)), Some((k, l))) => ((i < k && k < j) as u8 + (i < l && l < j) as u8) == 1,
            _ => false,
        }
    }

    /// Vertices are the symbols (first-occurrence order), edges join interlaced pairs.
    pub fn interlacement_graph(&self) -> Result<LabeledGraph> {
        let alphabet = self.alphabet();
        let n = alphabet.len();
        if n > 64 {
            return Err(Error::capacity("interlacement graphs hold at most 64 symbols"));
        }
        let mut adj = vec![0u64; n];
        for x in 0..n {
            for y in x + 1..n {
                if self.interlaced(alphabet[x], alphabet[y]) {
                    adj[x] |= 1 << y;
                    adj[y] |= 1 << x;
                }
            }
        }
        LabeledGraph::from_masks(alphabet.iter().map(|c| c.to_string()).collect(), adj)
    }

    /// For interlaced `a` and `b` the word reads `a B b C a D b E` (up to
    /// rotation, and with the roles of `a` and `b` possibly exchanged); the
    /// result is `a D b C a B b E`, swapping the two outer segments in place.
    pub fn transposition(&self, a: char, b: char) -> Result<Self> {
        if !self.interlaced(a, b) {
            return Err(Error::precondition(format!("{a} and {b} are not interlaced")));
        }
        let w = &self.symbols;
        let p: Vec<usize> = (0..w.len()).filter(|&i| w[i] == a || w[i] == b).collect();
        let mut out = Vec::with_capacity(w.len());
        out.extend_from_slice(&w[..=p[0]]);
        out.extend_from_slice(&w[p[2] + 1..p[3]]);
        out.extend_from_slice(&w[p[1]..=p[2]]);
        out.extend_from_slice(&w[p[0] + 1..p[1]]);
        out.extend_from_slice(&w[p[3]..]);
        Ok(DoubleOccurrenceWord { symbols: out })
    }

    /// Equal up to rotation and reversal.
    pub fn cyclically_equivalent(&self, other: &Self) -> bool {
        let n = self.symbols.len();
        if n != other.symbols.len() {
            return false;
        }
        if n == 0 {
            return true;
        }
        let reversed: Vec<char> = other.symbols.iter().rev().copied().collect();
        (0..n).any(|r| {
            (0..n).all(|t| self.symbols[(r + t) % n] == other.symbols[t])
                || (0..n).all(|t| self.symbols[(r + t) % n] == reversed[t])
        })
    }

    pub fn rotated(&self, r: usize) -> Self {
        let mut s = self.symbols.clone();
        if !s.is_empty() {
            let len = s.len();
            s.rotate_left(r % len);
        }
        DoubleOccurrenceWord { symbols: s }
    }

    pub fn reversed(&self) -> Self {
        DoubleOccurrenceWord {
            symbols: self.symbols.iter().rev().copied().collect(),
        }
    }
}
