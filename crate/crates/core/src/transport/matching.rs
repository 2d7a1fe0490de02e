//! Exact min-cost perfect matching on square integer matrices.
//!
//! The Hungarian method (shortest augmenting paths with integer potentials)
//! gives one optimal assignment together with an optimal dual. By
//! complementary slackness the optimal assignments are exactly the perfect
//! matchings of the tight subgraph `cost[i][j] == u[i] + v[j]`, so ties are
//! broken inside that subgraph: either lexicographically (the canonical
//! answer) or at random for sampling.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::TransportError;

/// Optimal assignment `row -> assignment[row]` and its total cost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub assignment: Vec<usize>,
    pub cost: i64,
}

/// Lexicographically smallest optimal assignment.
pub fn min_cost_matching(cost: &[Vec<i64>]) -> Result<Matching, TransportError> {
    let face = OptimalFace::solve(cost)?;
    let assignment = face.lex_smallest();
    Ok(Matching { cost: face.cost, assignment })
}

/// The set of optimal assignments of one cost matrix, represented by its
/// tight subgraph and one member.
#[derive(Debug, Clone)]
pub struct OptimalFace {
    n: usize,
    tight: Vec<Vec<usize>>,
    base: Vec<usize>,
    pub cost: i64,
}

fn validate(cost: &[Vec<i64>]) -> Result<(), TransportError> {
    let n = cost.len();
    for (i, row) in cost.iter().enumerate() {
        if row.len() != n {
            return Err(TransportError::NonSquare { row: i, len: row.len(), n });
        }
        if let Some(j) = row.iter().position(|&c| c < 0) {
            return Err(TransportError::NegativeCost { row: i, col: j, value: row[j] });
        }
    }
    Ok(())
}

impl OptimalFace {
    pub fn solve(cost: &[Vec<i64>]) -> Result<Self, TransportError> {
        validate(cost)?;
        let n = cost.len();
        let (base, u, v) = hungarian(cost);
        let total = base.iter().enumerate().map(|(i, &j)| cost[i][j]).sum();
        let tight = (0..n)
            .map(|i| (0..n).filter(|&j| cost[i][j] == u[i] + v[j]).collect())
            .collect();
        Ok(OptimalFace { n, tight, base, cost: total })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn lex_smallest(&self) -> Vec<usize> {
        let order: Vec<usize> = (0..self.n).collect();
        self.select(&order, |_, cols| cols.to_vec())
    }

    /// A random optimal assignment: rows are fixed in random order, each to a
    /// random column that still extends to a tight perfect matching.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.shuffle(rng);
        self.select(&order, |_, cols| {
            let mut c = cols.to_vec();
            c.shuffle(rng);
            c
        })
    }

    /// Fixes rows in `order`, each to the first column in `prefs(row)` that
    /// keeps a tight perfect matching on the unfixed rows.
    fn select(&self, order: &[usize], mut prefs: impl FnMut(usize, &[usize]) -> Vec<usize>) -> Vec<usize> {
        let n = self.n;
        let mut row_of = vec![0; n];
        let mut col_of = self.base.clone();
        for (i, &j) in col_of.iter().enumerate() {
            row_of[j] = i;
        }
        let mut row_fixed = vec![false; n];
        let mut col_fixed = vec![false; n];

        for &i in order {
            for j in prefs(i, &self.tight[i]) {
                if col_fixed[j] {
                    continue;
                }
                if col_of[i] == j || self.reroute(i, j, &row_fixed, &col_fixed, &mut col_of, &mut row_of) {
                    break;
                }
            }
            row_fixed[i] = true;
            col_fixed[col_of[i]] = true;
        }
        col_of
    }

    /// Tries to move row `i` onto column `j`: the displaced row must reach
    /// `i`'s old column along an alternating path of tight edges through
    /// unfixed rows. Rewrites the matching on success.
    fn reroute(
        &self,
        i: usize,
        j: usize,
        row_fixed: &[bool],
        col_fixed: &[bool],
        col_of: &mut [usize],
        row_of: &mut [usize],
    ) -> bool {
        let target = col_of[i];
        let start = row_of[j];
        // parent[row] = (previous row, column taken from it)
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[start] = true;
        seen[i] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut end = None;
        'bfs: while let Some(r) = queue.pop_front() {
            for &c in &self.tight[r] {
                if col_fixed[c] || c == j {
                    continue;
                }
                if c == target {
                    end = Some((r, c));
                    break 'bfs;
                }
                let next = row_of[c];
                if !seen[next] && !row_fixed[next] {
                    seen[next] = true;
                    parent[next] = Some((r, c));
                    queue.push_back(next);
                }
            }
        }
        let Some((mut r, mut c)) = end else { return false };
        loop {
            let prev = parent[r];
            col_of[r] = c;
            row_of[c] = r;
            match prev {
                Some((pr, pc)) => {
                    c = pc;
                    r = pr;
                }
                None => break,
            }
        }
        col_of[i] = j;
        row_of[j] = i;
        true
    }
}

/// Shortest-augmenting-path Hungarian method, O(n^3).
/// Returns the assignment and potentials with `u[i] + v[j] <= cost[i][j]`.
fn hungarian(cost: &[Vec<i64>]) -> (Vec<usize>, Vec<i64>, Vec<i64>) {
    let n = cost.len();
    const INF: i64 = i64::MAX / 4;
    // 1-based with a virtual column 0
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0usize;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0usize;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        if p[j] != 0 {
            assignment[p[j] - 1] = j - 1;
        }
    }
    (assignment, u[1..].to_vec(), v[1..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    /// Every permutation in lexicographic order.
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for j in 0..used.len() {
                if !used[j] {
                    used[j] = true;
                    prefix.push(j);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[j] = false;
                }
            }
        }
        let mut out = vec![];
        rec(&mut vec![], &mut vec![false; n], &mut out);
        out
    }

    fn perm_cost(cost: &[Vec<i64>], p: &[usize]) -> i64 {
        p.iter().enumerate().map(|(i, &j)| cost[i][j]).sum()
    }

    #[test]
    fn small_examples() {
        let m = min_cost_matching(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!((m.assignment, m.cost), (vec![0, 1], 0));

        let zero_diag = vec![vec![0, 5, 5], vec![5, 0, 5], vec![5, 5, 0]];
        assert_eq!(min_cost_matching(&zero_diag).unwrap().assignment, vec![0, 1, 2]);

        let m = min_cost_matching(&[vec![1, 2, 3], vec![2, 1, 3], vec![3, 3, 2]]).unwrap();
        assert_eq!(m.cost, 4);
        assert_eq!(m.assignment, vec![0, 1, 2]);

        assert_eq!(min_cost_matching(&[]).unwrap().cost, 0);
    }

    #[test]
    fn ties_resolve_lexicographically() {
        // all permutations cost the same: the identity is lex-smallest
        let flat = vec![vec![1; 4]; 4];
        assert_eq!(min_cost_matching(&flat).unwrap().assignment, vec![0, 1, 2, 3]);
        // row 0 prefers column 2 but only at equal cost to column 0
        let c = vec![vec![1, 9, 0], vec![0, 9, 9], vec![9, 0, 9]];
        let m = min_cost_matching(&c).unwrap();
        assert_eq!((m.assignment, m.cost), (vec![2, 0, 1], 0));
    }

    #[test]
    fn input_errors() {
        assert_eq!(
            min_cost_matching(&[vec![0, 1], vec![1]]).unwrap_err(),
            TransportError::NonSquare { row: 1, len: 1, n: 2 }
        );
        assert_eq!(
            min_cost_matching(&[vec![0, -1], vec![1, 0]]).unwrap_err(),
            TransportError::NegativeCost { row: 0, col: 1, value: -1 }
        );
    }

    #[test]
    fn lex_smallest_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.random_range(1..=6);
            let cost: Vec<Vec<i64>> =
                (0..n).map(|_| (0..n).map(|_| rng.random_range(0..4)).collect()).collect();
            let best = permutations(n).into_iter().min_by_key(|p| perm_cost(&cost, p)).unwrap();
            let m = min_cost_matching(&cost).unwrap();
            assert_eq!(m.cost, perm_cost(&cost, &best));
            // min_by_key keeps the first minimum, i.e. the lex-smallest
            assert_eq!(m.assignment, best, "{cost:?}");
        }
    }

    #[test]
    fn samples_are_optimal_and_cover_ties() {
        let flat = vec![vec![2; 3]; 3];
        let face = OptimalFace::solve(&flat).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..200 {
            let p = face.sample(&mut rng);
            assert_eq!(perm_cost(&flat, &p), 6);
            seen.insert(p);
        }
        assert_eq!(seen.len(), 6);
    }
}
