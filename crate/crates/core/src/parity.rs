//! Union-find over GF(2) potentials: every element carries a parity relative
//! to its root, so `s_u + s_v = c` constraints can be merged and checked in
//! near-constant time. Union by size without path compression, which keeps
//! every merge undoable through [`ParityDsu::rollback`].

#[derive(Debug, Clone)]
pub(crate) struct ParityDsu {
    parent: Vec<usize>,
    // parity of the element relative to its parent
    parity: Vec<bool>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl ParityDsu {
    pub fn new(n: usize) -> Self {
        ParityDsu {
            parent: (0..n).collect(),
            parity: vec![false; n],
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut v: usize) -> (usize, bool) {
        let mut p = false;
        while self.parent[v] != v {
            p ^= self.parity[v];
            v = self.parent[v];
        }
        (v, p)
    }

    /// Records `s_u + s_v = c`. Returns `false` (and records nothing) when
    /// the constraint contradicts earlier ones.
    pub fn union(&mut self, u: usize, v: usize, c: bool) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            self.history.push(None);
            return pu ^ pv == c;
        }
        let (big, small) = if self.size[ru] >= self.size[rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        self.parent[small] = big;
        self.parity[small] = pu ^ pv ^ c;
        self.size[big] += self.size[small];
        self.history.push(Some((small, big)));
        true
    }

    /// Number of `union` calls recorded so far (successful or redundant).
    pub fn checkpoint(&self) -> usize {
        self.history.len()
    }

    pub fn rollback(&mut self, checkpoint: usize) {
        while self.history.len() > checkpoint {
            if let Some((small, big)) = self.history.pop().flatten() {
                self.parent[small] = small;
                self.parity[small] = false;
                self.size[big] -= self.size[small];
            }
        }
    }

    /// Parity of each element relative to its root; roots get `false`.
    pub fn potentials(&self) -> Vec<bool> {
        (0..self.parent.len()).map(|v| self.find(v).1).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_odd_cycle_of_constraints() {
        let mut d = ParityDsu::new(3);
        assert!(d.union(0, 1, true));
        assert!(d.union(1, 2, true));
        assert!(!d.union(0, 2, true));
        assert!(d.union(0, 2, false));
    }

    #[test]
    fn rollback_restores_independence() {
        let mut d = ParityDsu::new(4);
        d.union(0, 1, false);
        let cp = d.checkpoint();
        d.union(1, 2, true);
        d.union(2, 3, true);
        assert_eq!(d.find(3).0, d.find(0).0);
        d.rollback(cp);
        assert_ne!(d.find(2).0, d.find(0).0);
        assert!(d.union(0, 2, false));
        let pot = d.potentials();
        assert_eq!(pot[0], pot[1]);
        assert_eq!(pot[0], pot[2]);
    }
}
