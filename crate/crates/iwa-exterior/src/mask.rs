//! Monomials as 6-bit masks over (α, β, γ, ᾱ, β̄, γ̄).
//!
//! A mask stands for the wedge of its set bits in increasing order.

pub type Mask = u8;

pub const ALPHA: Mask = 1 << 0;
pub const BETA: Mask = 1 << 1;
pub const GAMMA: Mask = 1 << 2;
pub const ALPHA_BAR: Mask = 1 << 3;
pub const BETA_BAR: Mask = 1 << 4;
pub const GAMMA_BAR: Mask = 1 << 5;
pub const TOP: Mask = 0b11_1111;
pub const HOL: Mask = 0b00_0111;

pub const NAMES: [&str; 6] = ["al", "be", "ga", "al~", "be~", "ga~"];

pub fn degree(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Type at J₀: (number of unbarred, number of barred) factors.
pub fn bidegree(m: Mask) -> (usize, usize) {
    ((m & HOL).count_ones() as usize, (m >> 3).count_ones() as usize)
}

/// Sign of e_a ∧ e_b relative to e_{a|b}; 0 when they share a factor.
pub fn wedge_sign(a: Mask, b: Mask) -> i32 {
    if a & b != 0 {
        return 0;
    }
    let mut inversions = 0;
    for j in 0..6 {
        if b & (1 << j) != 0 {
            inversions += (a >> (j + 1)).count_ones();
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of the permutation sorting the given sequence of distinct indices,
/// or 0 if an index repeats.
pub fn sequence_sign(seq: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] == seq[j] {
                return 0;
            }
            if seq[i] > seq[j] {
                sign = -sign;
            }
        }
    }
    sign
}

pub fn indices(m: Mask) -> Vec<usize> {
    (0..6).filter(|k| m & (1 << k) != 0).collect()
}

pub fn from_indices(idx: &[usize]) -> Mask {
    idx.iter().fold(0, |m, &k| m | (1 << k))
}

/// conj(e_m) = sign · e_{m'}.
pub fn conj_mask(m: Mask) -> (Mask, i32) {
    let swapped: Vec<usize> = indices(m).iter().map(|&k| (k + 3) % 6).collect();
    (from_indices(&swapped), sequence_sign(&swapped))
}

/// ι_k e_m = sign · e_{m \ k}, or None when k ∉ m.
pub fn contract_mask(k: usize, m: Mask) -> Option<(Mask, i32)> {
    if m & (1 << k) == 0 {
        return None;
    }
    let before = (m & ((1 << k) - 1)).count_ones();
    Some((m & !(1 << k), if before % 2 == 0 { 1 } else { -1 }))
}

/// All masks of a given degree in increasing numeric order.
pub fn of_degree(k: usize) -> Vec<Mask> {
    (0..=TOP).filter(|&m| degree(m) == k).collect()
}

/// All masks of a given J₀-bidegree in increasing numeric order.
pub fn of_bidegree(p: usize, q: usize) -> Vec<Mask> {
    (0..=TOP).filter(|&m| bidegree(m) == (p, q)).collect()
}

pub fn name(m: Mask) -> String {
    if m == 0 {
        return "1".to_string();
    }
    indices(m)
        .iter()
        .map(|&k| NAMES[k])
        .collect::<Vec<_>>()
        .join("^")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(wedge_sign(ALPHA, BETA), 1);
        assert_eq!(wedge_sign(BETA, ALPHA), -1);
        assert_eq!(wedge_sign(ALPHA, ALPHA), 0);
        assert_eq!(wedge_sign(HOL, TOP & !HOL), 1);
        assert_eq!(wedge_sign(TOP & !HOL, HOL), -1);
        // conj(α∧β∧γ) = ᾱ∧β̄∧γ̄
        assert_eq!(conj_mask(HOL), (TOP & !HOL, 1));
        // conj(α∧ᾱ) = ᾱ∧α = −α∧ᾱ
        assert_eq!(conj_mask(ALPHA | ALPHA_BAR), (ALPHA | ALPHA_BAR, -1));
        assert_eq!(contract_mask(1, ALPHA | BETA), Some((ALPHA, -1)));
        assert_eq!(of_degree(3).len(), 20);
        assert_eq!(of_bidegree(2, 1).len(), 9);
    }
}
