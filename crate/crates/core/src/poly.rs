//! Sparse multivariate polynomials with integer coefficients.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Exponent vectors are compared lexicographically with x_1 > x_2 > ⋯.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i128>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i128) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, 1)
    }

    /// x_{i+1}.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, 1);
        p
    }

    /// Σ c_i x_i.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Poly::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c as i128);
        }
        p
    }

    pub fn monomial(exps: Vec<u32>, c: i128) -> Self {
        let mut p = Poly::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i128)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), *c))
    }

    pub fn coeff(&self, exps: &[u32]) -> i128 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i128 {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree of each term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: i128) {
        if c == 0 {
            return;
        }
        debug_assert_eq!(exps.len(), self.nvars);
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    fn leading(&self) -> Option<(&Vec<u32>, i128)> {
        self.terms.last_key_value().map(|(e, c)| (e, *c))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i128) -> Poly {
        if k == 0 {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self` over ℤ.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (ld, lc) = match d.leading() {
            Some((e, c)) => (e.clone(), c),
            None => return Err(Error::NonIntegralSolution),
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((lm, c)) = rem.leading() {
            if lm.iter().zip(&ld).any(|(a, b)| a < b) || c % lc != 0 {
                return Err(Error::NonIntegralSolution);
            }
            let m: Vec<u32> = lm.iter().zip(&ld).map(|(a, b)| a - b).collect();
            let t = Poly::monomial(m, c / lc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    /// Swap x_{i+1} and x_{i+2}.
    pub fn swap_vars(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, i + 1);
            out.add_term(e, *c);
        }
        out
    }

    /// Divided difference ∂_i f = (f − s_i f)/(x_i − x_{i+1}), 0-based `i`.
    pub fn divided_difference(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let (p, q) = (e[i], e[i + 1]);
            // (x^p y^q − x^q y^p)/(x − y) = sign · Σ x^{hi-1-k} y^{lo+k}
            let (hi, lo, sign) = if p > q { (p, q, 1) } else { (q, p, -1) };
            for k in 0..(hi - lo) {
                let mut m = e.clone();
                m[i] = hi - 1 - k;
                m[i + 1] = lo + k;
                out.add_term(m, sign * c);
            }
        }
        out
    }

    pub fn eval(&self, point: &[i128]) -> i128 {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(*c, |acc, (&k, &x)| acc * x.pow(k))
            })
            .sum()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(if *c < 0 { " - " } else { " + " })?;
            } else if *c < 0 {
                f.write_str("-")?;
            }
            let a = c.unsigned_abs();
            let is_const = e.iter().all(|&x| x == 0);
            if a != 1 || is_const {
                write!(f, "{a}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "x{}", i + 1)?,
                    _ => write!(f, "x{}^{x}", i + 1)?,
                }
            }
        }
        Ok(())
    }
}
