//! Floating-point counterparts of the exact cyclotomic computations.

use std::f64::consts::PI;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }
    pub fn zeta(n: u64, k: i64) -> Self {
        let a = 2.0 * PI * k as f64 / n as f64;
        Self::new(a.cos(), a.sin())
    }
    pub fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
    pub fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
    pub fn mul(self, o: Self) -> Self {
        Self::new(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)
    }
    pub fn div(self, o: Self) -> Self {
        let d = o.re * o.re + o.im * o.im;
        Self::new((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)
    }
    pub fn scale(self, s: f64) -> Self {
        Self::new(self.re * s, self.im * s)
    }
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }
}

/// Determinant of the DFT matrix by LU with partial pivoting.
pub fn dft_det(n: u64) -> C64 {
    let nn = n as usize;
    let mut a: Vec<Vec<C64>> = (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| C64::zeta(n, j * (i - 1))).collect())
        .collect();
    let mut det = C64::new(1.0, 0.0);
    for k in 0..nn {
        let p = (k..nn)
            .max_by(|&x, &y| a[x][k].norm_sqr().total_cmp(&a[y][k].norm_sqr()))
            .unwrap();
        if p != k {
            a.swap(p, k);
            det = det.scale(-1.0);
        }
        det = det.mul(a[k][k]);
        for i in k + 1..nn {
            let f = a[i][k].div(a[k][k]);
            for j in k..nn {
                let t = f.mul(a[k][j]);
                a[i][j] = a[i][j].sub(t);
            }
        }
    }
    det
}

fn sum(n: u64, terms: &[(i64, u64)]) -> C64 {
    terms.iter().fold(C64::new(0.0, 0.0), |acc, &(c, e)| {
        acc.add(C64::zeta(n, e as i64).scale(c as f64))
    })
}

const TOL: f64 = 1e-9;

/// Minimal vanishing sums by brute force over all coefficient vectors,
/// decided numerically. Sorted.
pub fn minimal_vanishing_sums(n: u64, bound: i64, max_terms: usize) -> Vec<Vec<(i64, u64)>> {
    let vals: Vec<i64> = (-bound..=bound).collect();
    let base = vals.len();
    let mut out = Vec::new();
    let total = base.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let mut terms = Vec::new();
        for e in 0..n {
            let v = vals[c % base];
            c /= base;
            if v != 0 {
                terms.push((v, e));
            }
        }
        if terms.is_empty() || terms[0].1 != 0 || terms[0].0 < 0 || terms.len() > max_terms {
            continue;
        }
        if sum(n, &terms).norm_sqr().sqrt() > TOL {
            continue;
        }
        let k = terms.len();
        let minimal = (1..(1u32 << k) - 1).all(|mask| {
            let sub: Vec<(i64, u64)> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| terms[i]).collect();
            sum(n, &sub).norm_sqr().sqrt() > TOL
        });
        if minimal {
            out.push(terms);
        }
    }
    out.sort();
    out
}
