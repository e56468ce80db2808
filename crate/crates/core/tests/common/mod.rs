#![allow(dead_code)]

//! Test-only oracles, written independently of the library's code paths.

/// All permutations of `1..=n` via Heap's algorithm (order irrelevant).
pub fn heap_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (1..=n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

pub fn wexc(w: &[usize]) -> usize {
    (0..w.len()).filter(|&i| w[i] > i).count()
}

pub fn ascents(w: &[usize]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] < w[i]).count()
}

pub fn maj(w: &[usize]) -> usize {
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).sum()
}

pub fn q_pos(w: &[usize]) -> usize {
    w.iter().position(|&v| v == w.len()).unwrap() + 1
}

/// `c(n,k; j)` straight from the defining sum, in i128.
pub fn cnk_i128(n: usize, k: usize, j: usize) -> i128 {
    let binom = |n: u32, i: u32| -> i128 {
        let mut acc: i128 = 1;
        for t in 0..i {
            acc = acc * (n - t) as i128 / (t + 1) as i128;
        }
        acc
    };
    (0..=k)
        .map(|i| {
            let s = if i % 2 == 0 { 1 } else { -1 };
            s * ((k + 1 - i) as i128).pow((n - j) as u32)
                * ((k - i) as i128).pow(j as u32)
                * binom(n as u32 + 1, i as u32)
        })
        .sum()
}
