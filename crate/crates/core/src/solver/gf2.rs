/// Linear equations over GF(2) on named variables.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Gf2System {
    pub names: Vec<String>,
    /// Each equation: variable indices whose sum equals the bit.
    pub equations: Vec<(Vec<usize>, bool)>,
}

impl Gf2System {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn var(&mut self, name: impl Into<String>) -> usize {
        self.names.push(name.into());
        self.names.len() - 1
    }

    /// Adds `sum(vars) = rhs`; a variable listed twice cancels out.
    pub fn equation(&mut self, vars: impl IntoIterator<Item = usize>, rhs: bool) {
        let vars: Vec<usize> = vars.into_iter().collect();
        assert!(vars.iter().all(|&v| v < self.names.len()), "undeclared variable");
        self.equations.push((vars, rhs));
    }

    pub fn satisfied_by(&self, x: &[bool]) -> bool {
        self.equations.iter().all(|(vars, rhs)| vars.iter().fold(false, |s, &v| s ^ x[v]) == *rhs)
    }
}

/// Gaussian elimination; free variables are set to 0.
pub fn gf2_solve(sys: &Gf2System) -> Option<Vec<bool>> {
    let n = sys.names.len();
    let words = n / 64 + 1;
    // row bit n is the right-hand side
    let mut rows: Vec<Vec<u64>> = sys
        .equations
        .iter()
        .map(|(vars, rhs)| {
            let mut r = vec![0u64; words];
            for &v in vars {
                r[v / 64] ^= 1 << (v % 64);
            }
            if *rhs {
                r[n / 64] |= 1 << (n % 64);
            }
            r
        })
        .collect();
    let get = |r: &[u64], i: usize| r[i / 64] >> (i % 64) & 1 == 1;
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..n {
        let Some(p) = (top..rows.len()).find(|&i| get(&rows[i], col)) else { continue };
        rows.swap(top, p);
        let pivot = rows[top].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != top && get(r, col) {
                r.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        pivots.push(col);
        top += 1;
    }
    if rows[top..].iter().any(|r| get(r, n)) {
        return None;
    }
    let mut x = vec![false; n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = get(&rows[i], n);
    }
    Some(x)
}
