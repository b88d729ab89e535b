use std::collections::HashMap;

use super::ExactError;

/// Ordered coordinate symbols together with the conjugation involution.
///
/// `involution[a] = (b, sign)` means `conj(x_a) = sign · x_b`. All symbols,
/// conjugates included, are independent variables for differentiation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    n: usize,
    names: Vec<String>,
    involution: Vec<(usize, i8)>,
    lookup: HashMap<String, usize>,
}

/// Role of a symbol in the standard chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StdSymbol {
    Z(usize),
    Zb(usize),
    W(usize, usize),
    Wb(usize, usize),
}

impl Chart {
    /// The standard chart of CR dimension `n`: `z_j`, `zb_j`, `w_kl` (k ≤ l),
    /// `wb_kl` (k < l), with `conj(w_kk) = -w_kk`. Indices in names are
    /// 1-based; everything in the API is 0-based.
    pub fn standard(n: usize) -> Self {
        let mut names = Vec::new();
        let mut inv = Vec::new();
        let wname = |p: &str, k: usize, l: usize| {
            if n < 10 {
                format!("{p}{}{}", k + 1, l + 1)
            } else {
                format!("{p}{}_{}", k + 1, l + 1)
            }
        };
        for j in 0..n {
            names.push(format!("z{}", j + 1));
        }
        for j in 0..n {
            names.push(format!("zb{}", j + 1));
        }
        for k in 0..n {
            for l in k..n {
                names.push(wname("w", k, l));
            }
        }
        for k in 0..n {
            for l in k + 1..n {
                names.push(wname("wb", k, l));
            }
        }
        let mut chart = Self {
            n,
            names,
            involution: Vec::new(),
            lookup: HashMap::new(),
        };
        for a in 0..chart.names.len() {
            let e = match chart.role(a) {
                StdSymbol::Z(j) => (chart.zb(j), 1),
                StdSymbol::Zb(j) => (chart.z(j), 1),
                StdSymbol::W(k, l) if k == l => (a, -1),
                StdSymbol::W(k, l) => (chart.wb(k, l).0, 1),
                StdSymbol::Wb(k, l) => (chart.w(k, l).0, 1),
            };
            inv.push(e);
        }
        chart.involution = inv;
        chart.rebuild_lookup();
        chart
    }

    /// A chart with arbitrary symbols and involution.
    pub fn custom(
        n: usize,
        names: Vec<String>,
        involution: Vec<(usize, i8)>,
    ) -> Result<Self, ExactError> {
        if names.len() != involution.len() {
            return Err(ExactError::BadChart("involution length mismatch".into()));
        }
        for (a, &(b, s)) in involution.iter().enumerate() {
            if b >= names.len() || (s != 1 && s != -1) {
                return Err(ExactError::BadChart(format!("bad involution entry at {a}")));
            }
            let (c, t) = involution[b];
            if c != a || s * t != 1 {
                return Err(ExactError::BadChart(format!(
                    "involution is not an involution at {}",
                    names[a]
                )));
            }
        }
        let mut c = Self {
            n,
            names,
            involution,
            lookup: HashMap::new(),
        };
        c.rebuild_lookup();
        Ok(c)
    }

    fn rebuild_lookup(&mut self) {
        self.lookup = self
            .names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ExactError> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| ExactError::UnknownSymbol(name.to_string()))
    }

    pub fn conj_of(&self, a: usize) -> (usize, i8) {
        self.involution[a]
    }

    pub fn z(&self, j: usize) -> usize {
        j
    }

    pub fn zb(&self, j: usize) -> usize {
        self.n + j
    }

    fn w_offset(&self, k: usize, l: usize) -> usize {
        // rows 0..k contribute n-r entries each
        let before: usize = (0..k).map(|r| self.n - r).sum();
        before + (l - k)
    }

    pub fn w(&self, k: usize, l: usize) -> (usize, i8) {
        assert!(k <= l, "w symbols are indexed with k <= l");
        (2 * self.n + self.w_offset(k, l), 1)
    }

    pub fn wb(&self, k: usize, l: usize) -> (usize, i8) {
        assert!(k <= l);
        if k == l {
            return (self.w(k, k).0, -1);
        }
        let nw = self.n * (self.n + 1) / 2;
        let before: usize = (0..k).map(|r| self.n - r - 1).sum();
        (2 * self.n + nw + before + (l - k - 1), 1)
    }

    /// Role of symbol `a` in the standard chart.
    pub fn role(&self, a: usize) -> StdSymbol {
        let n = self.n;
        if a < n {
            return StdSymbol::Z(a);
        }
        if a < 2 * n {
            return StdSymbol::Zb(a - n);
        }
        let mut r = a - 2 * n;
        for k in 0..n {
            if r < n - k {
                return StdSymbol::W(k, k + r);
            }
            r -= n - k;
        }
        for k in 0..n {
            if r < n - k - 1 {
                return StdSymbol::Wb(k, k + 1 + r);
            }
            r -= n - k - 1;
        }
        panic!("symbol index {a} out of range for the standard chart");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_chart_layout() {
        let c = Chart::standard(3);
        assert_eq!(c.len(), 2 * 3 + 9);
        assert_eq!(c.name(c.w(1, 2).0), "w23");
        assert_eq!(c.name(c.wb(0, 2).0), "wb13");
        assert_eq!(c.index_of("zb2").unwrap(), c.zb(1));
        assert!(c.index_of("q7").is_err());
        for a in 0..c.len() {
            let (b, s) = c.conj_of(a);
            let (a2, t) = c.conj_of(b);
            assert_eq!((a2, s * t), (a, 1));
        }
        assert_eq!(c.conj_of(c.w(2, 2).0), (c.w(2, 2).0, -1));
    }

    #[test]
    fn custom_chart_rejects_non_involution() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert!(Chart::custom(1, names.clone(), vec![(1, 1), (1, 1)]).is_err());
        assert!(Chart::custom(1, names, vec![(1, 1), (0, 1)]).is_ok());
    }
}
