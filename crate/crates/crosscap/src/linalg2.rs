//! Dense linear algebra over Z_2 on word-packed bit vectors.

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first_set(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn dot(&self, other: &BitVec) -> bool {
        debug_assert_eq!(self.len, other.len);
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(&other.words) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&i| self.get(i))
    }
}

/// Row-echelon basis of a subspace, kept reduced with known pivot columns.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reduces `v` against the current basis; returns the residue.
    pub fn reduce(&self, mut v: BitVec) -> BitVec {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    /// Inserts `v` if independent; returns true when the rank grew.
    pub fn insert(&mut self, v: BitVec) -> bool {
        let r = self.reduce(v);
        match r.first_set() {
            None => false,
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

/// Basis of the kernel of the linear map given by `rows` (each row is one
/// linear constraint on a vector of length `n`).
pub(crate) fn kernel_basis(rows: &[BitVec], n: usize) -> Vec<BitVec> {
    // Gaussian elimination tracking which variable each constraint pivots on.
    let mut ech: Vec<BitVec> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for r in rows {
        let mut v = r.clone();
        for (row, &p) in ech.iter().zip(&pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        if let Some(p) = v.first_set() {
            ech.push(v);
            pivots.push(p);
        }
    }
    // Back-substitute to full reduction.
    for i in (0..ech.len()).rev() {
        for j in 0..i {
            if ech[j].get(pivots[i]) {
                let (a, b) = ech.split_at_mut(i);
                a[j].xor_assign(&b[0]);
            }
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = BitVec::unit(n, free);
        for (row, &p) in ech.iter().zip(&pivots) {
            if row.get(free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis
}

/// Solves `x` as a combination of `basis` vectors modulo the subspace
/// `modded`: returns the coefficient vector over `basis` if representable.
pub(crate) fn coordinates_mod(
    basis: &[BitVec],
    modded: &Echelon,
    x: &BitVec,
) -> Option<Vec<bool>> {
    // Augment each basis vector with an indicator tail, reduce x against them.
    let n = x.len();
    let m = basis.len();
    let mut ech: Vec<(BitVec, Vec<bool>)> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let mut v = modded.reduce(b.clone());
        let mut tail = vec![false; m];
        tail[i] = true;
        for (row, rt) in &ech {
            if let Some(p) = row.first_set() {
                if v.get(p) {
                    v.xor_assign(row);
                    for (t, r) in tail.iter_mut().zip(rt) {
                        *t ^= r;
                    }
                }
            }
        }
        if !v.is_zero() {
            ech.push((v, tail));
        }
    }
    let mut v = modded.reduce(x.clone());
    let mut coeff = vec![false; m];
    for (row, rt) in &ech {
        if let Some(p) = row.first_set() {
            if v.get(p) {
                v.xor_assign(row);
                for (c, r) in coeff.iter_mut().zip(rt) {
                    *c ^= r;
                }
            }
        }
    }
    v.is_zero().then_some(coeff)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(bits: &[u8]) -> BitVec {
        let mut v = BitVec::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b == 1);
        }
        v
    }

    #[test]
    fn kernel_of_simple_map() {
        // constraints x0+x1 = 0, x1+x2 = 0 over Z_2^3: kernel = span{(1,1,1)}
        let rows = vec![bv(&[1, 1, 0]), bv(&[0, 1, 1])];
        let k = kernel_basis(&rows, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], bv(&[1, 1, 1]));
    }

    #[test]
    fn coordinates_modulo_subspace() {
        let mut modded = Echelon::new();
        modded.insert(bv(&[1, 1, 1, 1]));
        let basis = vec![bv(&[1, 0, 0, 0]), bv(&[0, 1, 0, 0]), bv(&[0, 0, 1, 0])];
        // x = (0,0,0,1) = (1,1,1,1) + e0 + e1 + e2
        let c = coordinates_mod(&basis, &modded, &bv(&[0, 0, 0, 1])).unwrap();
        assert_eq!(c, vec![true, true, true]);
        let c = coordinates_mod(&basis, &modded, &bv(&[0, 1, 0, 0])).unwrap();
        assert_eq!(c, vec![false, true, false]);
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(bv(&[1, 1, 0])));
        assert!(e.insert(bv(&[0, 1, 1])));
        assert!(!e.insert(bv(&[1, 0, 1])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&bv(&[1, 0, 1])));
        assert!(!e.contains(&bv(&[1, 0, 0])));
    }
}
