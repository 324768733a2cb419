//! Monochromatic arithmetic progressions and exact van der Waerden number
//! search by backtracking over colorings.

/// Monochromatic arithmetic progression inside a coloring of 1..N; `start`
/// is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoAp {
    pub start: usize,
    pub step: usize,
    pub color: u8,
}

/// Earliest (by start, then step) monochromatic n-term arithmetic
/// progression in the coloring, if any.
pub fn find_mono_ap(colors: &[u8], n: usize) -> Option<MonoAp> {
    assert!(n >= 2, "progressions need n ≥ 2");
    let len = colors.len();
    for start in 1..=len {
        let color = colors[start - 1];
        let mut step = 1;
        while start + (n - 1) * step <= len {
            if (1..n).all(|i| colors[start + i * step - 1] == color) {
                return Some(MonoAp { start, step, color });
            }
            step += 1;
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VdwResult {
    /// Least N ≤ N_max forcing a monochromatic n-AP, with a longest
    /// witness coloring (length N−1) that avoids one.
    Found { value: usize, witness: Vec<u8> },
    /// Some coloring of 1..N_max still avoids a monochromatic n-AP.
    NotFoundUpTo { bound: usize, witness: Vec<u8> },
}

fn ap_ends_at_last(colors: &[u8], n: usize) -> bool {
    let last = colors.len();
    let color = colors[last - 1];
    let mut step = 1;
    while last > (n - 1) * step {
        if (1..n).all(|i| colors[last - i * step - 1] == color) {
            return true;
        }
        step += 1;
    }
    false
}

fn extend(colors: &mut Vec<u8>, n: usize, k: usize, n_max: usize, best: &mut Vec<u8>) -> bool {
    if colors.len() > best.len() {
        best.clone_from(colors);
    }
    if colors.len() == n_max {
        return true;
    }
    let choices = if colors.is_empty() { 1 } else { k as u8 };
    for color in 0..choices {
        colors.push(color);
        let blocked = ap_ends_at_last(colors, n);
        if !blocked && extend(colors, n, k, n_max, best) {
            return true;
        }
        colors.pop();
    }
    false
}

/// Backtracking search for the van der Waerden number W(n, k): the least N
/// such that every k-coloring of 1..N contains a monochromatic n-AP. The
/// first position is pinned to color 0 (color symmetry); each branch is
/// pruned as soon as a progression ends at the newest position.
pub fn vdw_number(n: usize, k: usize, n_max: usize) -> VdwResult {
    assert!(n >= 2 && k >= 1 && n_max >= 1, "need n ≥ 2, k ≥ 1, N_max ≥ 1");
    let mut colors = Vec::new();
    let mut best = Vec::new();
    if extend(&mut colors, n, k, n_max, &mut best) {
        VdwResult::NotFoundUpTo { bound: n_max, witness: colors }
    } else {
        VdwResult::Found { value: best.len() + 1, witness: best }
    }
}
