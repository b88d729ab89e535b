use crate::exactfield::{Chart, Scalar};

/// A dense array of scalars with every index ranging over `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    n: usize,
    rank: usize,
    data: Vec<Scalar>,
}

impl Tensor {
    pub fn zeros(n: usize, rank: usize) -> Self {
        Tensor {
            n,
            rank,
            data: vec![Scalar::zero(); n.pow(rank as u32)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.rank, "index arity");
        idx.iter().fold(0, |acc, &k| {
            assert!(k < self.n, "index out of range");
            acc * self.n + k
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Scalar {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Scalar) {
        let o = self.offset(idx);
        self.data[o] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// All multi-indices in lexicographic order.
    pub fn indices(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let (n, rank) = (self.n, self.rank);
        (0..self.data.len()).map(move |mut o| {
            let mut idx = vec![0; rank];
            for slot in idx.iter_mut().rev() {
                *slot = o % n;
                o /= n;
            }
            idx
        })
    }

    pub fn nonzero(&self) -> Vec<(Vec<usize>, &Scalar)> {
        self.indices()
            .zip(&self.data)
            .filter(|(_, s)| !s.is_zero())
            .collect()
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> Tensor {
        Tensor {
            n: self.n,
            rank: self.rank,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn conjugate(&self, chart: &Chart) -> Tensor {
        self.map(|s| s.conjugate(chart))
    }

    /// Entries are constants (no coordinate dependence).
    pub fn is_constant(&self) -> bool {
        self.data.iter().all(Scalar::is_constant)
    }
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.nonzero()).finish()
    }
}
