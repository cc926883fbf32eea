//! Slow, obviously-correct reference implementations used by the
//! integration tests. Nothing here touches the crate's occurrence search.
#![allow(dead_code)]

use popwilf::{FerrersBoard, LabeledPoset};

/// All permutations of `1..=n` in lexicographic order.
pub fn perms(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Calls `f` on every increasing `k`-tuple drawn from `0..n`; stops early
/// when `f` returns true.
pub fn any_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..n {
            if n - i < k - acc.len() {
                break;
            }
            acc.push(i);
            if rec(n, k, i + 1, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(n, k, 0, &mut Vec::with_capacity(k), f)
}

/// `(a, b)` pairs with `a < b` in the poset, as plain data.
pub fn relations(p: &LabeledPoset) -> Vec<(usize, usize)> {
    p.relations()
}

fn realizes(w: &[usize], pos: &[usize], rels: &[(usize, usize)]) -> bool {
    rels.iter().all(|&(a, b)| w[pos[a - 1]] < w[pos[b - 1]])
}

/// Subsequence scan: does `w` contain `p`?
pub fn contains(w: &[usize], p: &LabeledPoset) -> bool {
    let rels = relations(p);
    let k = p.size();
    if k > w.len() {
        return false;
    }
    any_combination(w.len(), k, &mut |pos| realizes(w, pos, &rels))
}

pub fn avoiders(p: &LabeledPoset, n: usize) -> Vec<Vec<usize>> {
    perms(n).into_iter().filter(|w| !contains(w, p)).collect()
}

pub fn count(p: &LabeledPoset, n: usize) -> u64 {
    avoiders(p, n).len() as u64
}

pub fn counts(p: &LabeledPoset, max_n: usize) -> Vec<u64> {
    (1..=max_n).map(|n| count(p, n)).collect()
}

/// Transversals of a board as row-per-column vectors: permutations whose
/// every 1 sits below its column's height.
pub fn board_transversals(board: &FerrersBoard) -> Vec<Vec<usize>> {
    let n = board.num_rows();
    perms(n)
        .into_iter()
        .filter(|rows| rows.iter().enumerate().all(|(c, &r)| r <= board.column_height(c + 1)))
        .collect()
}

/// Column-subset scan: an occurrence counts when the top-right corner of
/// its bounding rectangle lies in the board.
pub fn board_contains(board: &FerrersBoard, rows: &[usize], p: &LabeledPoset) -> bool {
    let rels = relations(p);
    let k = p.size();
    if k > rows.len() {
        return false;
    }
    any_combination(rows.len(), k, &mut |cols| {
        let top = cols.iter().map(|&c| rows[c]).max().unwrap();
        let right = cols[k - 1] + 1;
        top <= board.column_height(right) && realizes(rows, cols, &rels)
    })
}

pub fn board_count(board: &FerrersBoard, p: &LabeledPoset) -> u64 {
    board_transversals(board).iter().filter(|t| !board_contains(board, t, p)).count() as u64
}

/// Occurrence of a classical pattern `sigma` whose entries `gap` and
/// `gap + 1` (1-based) are not adjacent in `w`.
pub fn contains_distant(w: &[usize], sigma: &[usize], gap: usize) -> bool {
    let m = sigma.len();
    any_combination(w.len(), m, &mut |pos| {
        pos[gap] - pos[gap - 1] >= 2
            && (0..m).all(|i| (0..m).all(|j| (sigma[i] < sigma[j]) == (w[pos[i]] < w[pos[j]])))
    })
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
