//! Word-packed bit sets used for relation rows and solver position masks.

pub(crate) const WORD_BITS: usize = 64;

pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

pub(crate) fn get(words: &[u64], i: usize) -> bool {
    words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
}

pub(crate) fn set(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
}

pub(crate) fn clear(words: &mut [u64], i: usize) {
    words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
}

pub(crate) fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub(crate) fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|w| *w == 0)
}

pub(crate) fn first_one(words: &[u64]) -> Option<usize> {
    for (i, w) in words.iter().enumerate() {
        if *w != 0 {
            return Some(i * WORD_BITS + w.trailing_zeros() as usize);
        }
    }
    None
}

/// `a ⊆ b`
pub(crate) fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

pub(crate) fn and_not(a: &[u64], b: &[u64]) -> Box<[u64]> {
    a.iter().zip(b).map(|(x, y)| x & !y).collect()
}

pub(crate) fn or_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= *s;
    }
}

pub(crate) fn and_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d &= *s;
    }
}

pub(crate) fn iter_ones(words: &[u64]) -> OnesIter<'_> {
    OnesIter { words, word: 0, cur: words.first().copied().unwrap_or(0) }
}

pub(crate) struct OnesIter<'a> {
    words: &'a [u64],
    word: usize,
    cur: u64,
}

impl Iterator for OnesIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.cur == 0 {
            self.word += 1;
            if self.word >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.word];
        }
        let bit = self.cur.trailing_zeros() as usize;
        self.cur &= self.cur - 1;
        Some(self.word * WORD_BITS + bit)
    }
}

/// Square bit matrix, row-major; `row(u)` is the set of columns related to `u`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = words_for(n);
        BitMatrix { n, words, data: vec![0; n * words] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> usize {
        self.words
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.words..(r + 1) * self.words]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        get(self.row(r), c)
    }

    pub fn set(&mut self, r: usize, c: usize) {
        set(self.row_mut(r), c);
    }

    /// `row(dst) |= row(src)`; the rows must be distinct.
    pub fn or_row_from(&mut self, dst: usize, src: usize) {
        assert_ne!(dst, src);
        let w = self.words;
        let (lo, hi, dst_first) = if dst < src { (dst, src, true) } else { (src, dst, false) };
        let (head, tail) = self.data.split_at_mut(hi * w);
        let a = &mut head[lo * w..lo * w + w];
        let b = &tail[..w];
        if dst_first {
            or_assign(a, b);
        } else {
            or_assign(&mut tail[..w], &head[lo * w..lo * w + w]);
        }
    }

    /// Reachability closure over the stored edges (Warshall, bit-parallel).
    pub fn close_transitively(&mut self) {
        for k in 0..self.n {
            for u in 0..self.n {
                if u != k && self.get(u, k) {
                    self.or_row_from(u, k);
                }
            }
        }
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix({}x{})", self.n, self.n)?;
        for r in 0..self.n {
            for c in 0..self.n {
                write!(f, "{}", if self.get(r, c) { '1' } else { '.' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iteration_is_ascending() {
        let mut w = vec![0u64; 3];
        for i in [0, 5, 63, 64, 127, 130] {
            set(&mut w, i);
        }
        let got: Vec<usize> = iter_ones(&w).collect();
        assert_eq!(got, vec![0, 5, 63, 64, 127, 130]);
        assert_eq!(count_ones(&w), 6);
        assert_eq!(first_one(&w), Some(0));
    }

    #[test]
    fn closure_fills_chains() {
        let mut m = BitMatrix::new(70);
        for i in 0..69 {
            m.set(i, i + 1);
        }
        m.close_transitively();
        assert!(m.get(0, 69));
        assert!(!m.get(69, 0));
        assert_eq!(m.count_ones(), 70 * 69 / 2);
    }

    #[test]
    fn or_row_from_both_directions() {
        let mut m = BitMatrix::new(130);
        m.set(0, 129);
        m.set(2, 1);
        m.or_row_from(2, 0);
        assert!(m.get(2, 129) && m.get(2, 1));
        m.or_row_from(0, 2);
        assert!(m.get(0, 1));
    }
}
