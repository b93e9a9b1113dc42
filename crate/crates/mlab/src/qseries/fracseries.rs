//! Exact truncated q-series with exponents on a 1/D lattice.
//!
//! A `FracSeries` is a finite map from exponents e = key/D to exact rational
//! coefficients, together with a truncation order: coefficients are trusted
//! for every exponent strictly below `order`.  Arithmetic tracks the order
//! pessimistically, so an identity reported "true to N" really is exact for
//! all exponents below N.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact truncated power series in q with exponents in (1/D) * Z.
#[derive(Clone, Debug)]
pub struct FracSeries {
    /// Exponent denominator D.
    denom: i64,
    /// key -> coefficient, exponent = key / D; zero coefficients not stored.
    coeffs: BTreeMap<i64, BigRational>,
    /// Coefficients are exact for all exponents < order / D.
    order: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub(crate) fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

impl FracSeries {
    /// Empty (identically zero up to `order`) series on lattice 1/D.
    pub fn zero(denom: i64, order_num: i64) -> Self {
        FracSeries {
            denom,
            coeffs: BTreeMap::new(),
            order: order_num,
        }
    }

    /// The monomial c * q^(key/D), trusted up to order_num/D.
    pub fn monomial(denom: i64, key: i64, c: BigRational, order_num: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() && key < order_num {
            coeffs.insert(key, c);
        }
        FracSeries {
            denom,
            coeffs,
            order: order_num,
        }
    }

    pub fn constant(denom: i64, c: i64, order_num: i64) -> Self {
        Self::monomial(denom, 0, BigRational::from(BigInt::from(c)), order_num)
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// Truncation order as an exact rational exponent.
    pub fn order(&self) -> Rational64 {
        Rational64::new(self.order, self.denom)
    }

    /// Coefficient of q^e (exact); zero if absent. Panics if e is not on the
    /// lattice; returns None beyond the trusted order.
    pub fn coeff(&self, e: Rational64) -> Option<BigRational> {
        let key = self.key_of(e)?;
        if key >= self.order {
            return None;
        }
        Some(
            self.coeffs
                .get(&key)
                .cloned()
                .unwrap_or_else(BigRational::zero),
        )
    }

    fn key_of(&self, e: Rational64) -> Option<i64> {
        let scaled = e * Rational64::new(self.denom, 1);
        if scaled.is_integer() {
            Some(scaled.to_integer())
        } else {
            None
        }
    }

    /// Iterate (exponent, coefficient) in exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (Rational64, &BigRational)> {
        let d = self.denom;
        self.coeffs
            .iter()
            .map(move |(&k, c)| (Rational64::new(k, d), c))
    }

    pub fn insert(&mut self, key: i64, c: BigRational) {
        if key >= self.order {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
    }

    /// Lowest exponent with a nonzero coefficient, as a lattice key; falls
    /// back to the order for the (known-)zero series.
    fn valuation_key(&self) -> i64 {
        self.coeffs.keys().next().copied().unwrap_or(self.order)
    }

    /// Re-express on a finer lattice; `new_denom` must be a multiple of D.
    pub fn rescale(&self, new_denom: i64) -> FracSeries {
        assert!(new_denom % self.denom == 0, "lattice refinement only");
        let f = new_denom / self.denom;
        FracSeries {
            denom: new_denom,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&k, c)| (k * f, c.clone()))
                .collect(),
            order: self.order.saturating_mul(f),
        }
    }

    fn aligned(&self, other: &FracSeries) -> (FracSeries, FracSeries) {
        let d = lcm(self.denom, other.denom);
        (self.rescale(d), other.rescale(d))
    }

    pub fn neg(&self) -> FracSeries {
        FracSeries {
            denom: self.denom,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c.clone())).collect(),
            order: self.order,
        }
    }

    pub fn scale(&self, c: &BigRational) -> FracSeries {
        if c.is_zero() {
            return FracSeries::zero(self.denom, self.order);
        }
        FracSeries {
            denom: self.denom,
            coeffs: self.coeffs.iter().map(|(&k, v)| (k, v * c)).collect(),
            order: self.order,
        }
    }

    pub fn add(&self, other: &FracSeries) -> FracSeries {
        let (mut a, b) = self.aligned(other);
        a.order = a.order.min(b.order);
        let order = a.order;
        a.coeffs.retain(|&k, _| k < order);
        for (&k, c) in &b.coeffs {
            if k >= order {
                continue;
            }
            let entry = a.coeffs.entry(k).or_insert_with(BigRational::zero);
            *entry += c;
            if entry.is_zero() {
                a.coeffs.remove(&k);
            }
        }
        a
    }

    pub fn sub(&self, other: &FracSeries) -> FracSeries {
        self.add(&other.neg())
    }

    /// Product; the order is min(ord_a + val_b, ord_b + val_a).
    pub fn mul(&self, other: &FracSeries) -> FracSeries {
        let (a, b) = self.aligned(other);
        let va = a.valuation_key();
        let vb = b.valuation_key();
        let order = (a.order.saturating_add(vb)).min(b.order.saturating_add(va));
        let lo = va + vb;
        if a.coeffs.is_empty() || b.coeffs.is_empty() || lo >= order {
            return FracSeries::zero(a.denom, order);
        }
        // dense accumulator over [lo, order)
        let len = (order - lo) as usize;
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); len];
        for (&ka, ca) in &a.coeffs {
            if ka + vb >= order {
                break;
            }
            for (&kb, cb) in &b.coeffs {
                let k = ka + kb;
                if k >= order {
                    break;
                }
                acc[(k - lo) as usize] += ca * cb;
            }
        }
        let mut coeffs = BTreeMap::new();
        for (i, c) in acc.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(lo + i as i64, c);
            }
        }
        FracSeries {
            denom: a.denom,
            coeffs,
            order,
        }
    }

    /// Integer power by repeated multiplication; `pow(0)` is 1 with the same
    /// order bookkeeping as `self`.
    pub fn pow(&self, n: u32) -> FracSeries {
        if n == 0 {
            return FracSeries::monomial(self.denom, 0, BigRational::one(), self.order);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Division by a series whose lowest stored coefficient is nonzero.
    ///
    /// The quotient's order is min(ord_a - v_b, ord_b + v_a - 2 v_b).
    pub fn div(&self, other: &FracSeries) -> Result<FracSeries> {
        let (a, b) = self.aligned(other);
        if b.coeffs.is_empty() {
            return Err(Error::domain(
                "series division by a series with no known nonzero coefficient",
            ));
        }
        let vb = b.valuation_key();
        let lead = b.coeffs[&vb].clone();
        let va = a.valuation_key();
        let order = (a.order - vb).min(b.order + va - 2 * vb);
        let lo = va - vb;
        if lo >= order {
            return Ok(FracSeries::zero(a.denom, order));
        }
        let len = (order - lo) as usize;
        let mut q: Vec<BigRational> = vec![BigRational::zero(); len];
        // b normalized so b[vb] = 1 conceptually: q[i] = (a[lo+i+vb] - sum) / lead
        for i in 0..len {
            let target = lo + i as i64 + vb;
            let mut s = a
                .coeffs
                .get(&target)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            for (&kb, cb) in b.coeffs.range(vb + 1..) {
                let j = target - kb; // exponent key of q term
                if j < lo {
                    break;
                }
                let idx = (j - lo) as usize;
                if idx < i {
                    let qc = &q[idx];
                    if !qc.is_zero() {
                        s -= qc * cb;
                    }
                }
            }
            q[i] = s / &lead;
        }
        let mut coeffs = BTreeMap::new();
        for (i, c) in q.into_iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(lo + i as i64, c);
            }
        }
        Ok(FracSeries {
            denom: a.denom,
            coeffs,
            order,
        })
    }

    pub fn truncate(&mut self, order_num: i64) {
        if order_num < self.order {
            self.order = order_num;
            self.coeffs.retain(|&k, _| k < order_num);
        }
    }

    /// Exact equality of all coefficients with exponent < n_limit.
    /// Errors if either side is not trusted that far.
    pub fn equal_to(&self, other: &FracSeries, n_limit: Rational64) -> Result<bool> {
        let (a, b) = self.aligned(other);
        let key_limit = n_limit * Rational64::new(a.denom, 1);
        let key_limit = if key_limit.is_integer() {
            key_limit.to_integer()
        } else {
            key_limit.to_integer() + 1
        };
        if a.order < key_limit || b.order < key_limit {
            return Err(Error::domain(format!(
                "series only trusted to {} and {}, cannot compare below {}",
                a.order as f64 / a.denom as f64,
                b.order as f64 / b.denom as f64,
                n_limit
            )));
        }
        for (k, c) in &a.coeffs {
            if *k >= key_limit {
                break;
            }
            match b.coeffs.get(k) {
                Some(d) if d == c => {}
                _ => return Ok(false),
            }
        }
        for (k, _) in b.coeffs.range(..key_limit) {
            if !a.coeffs.contains_key(k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Evaluate the truncated polynomial at a real point (diagnostic; the
    /// truncation error is not accounted for).
    pub fn eval_f64(&self, q: f64) -> f64 {
        let mut s = 0.0;
        for (&k, c) in &self.coeffs {
            let e = k as f64 / self.denom as f64;
            let cf = big_to_f64(c);
            s += cf * q.powf(e);
        }
        s
    }
}

pub(crate) fn big_to_f64(c: &BigRational) -> f64 {
    let num = c.numer();
    let den = c.denom();
    // exact for the integer coefficients that occur in practice
    let nf = num.to_string().parse::<f64>().unwrap_or(f64::NAN);
    let df = den.to_string().parse::<f64>().unwrap_or(f64::NAN);
    nf / df
}

impl fmt::Display for FracSeries {
    /// One term per line: "num/den<TAB>coefficient" in exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (e, c) in self.iter() {
            let e = e.reduced();
            if c.is_integer() {
                writeln!(f, "{}/{}\t{}", e.numer(), e.denom(), c.numer())?;
            } else {
                writeln!(
                    f,
                    "{}/{}\t{}/{}",
                    e.numer(),
                    e.denom(),
                    c.numer(),
                    c.denom()
                )?;
            }
        }
        Ok(())
    }
}

impl PartialEq for FracSeries {
    /// Structural equality up to the shared trusted order.
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.aligned(other);
        let limit = a.order.min(b.order);
        let am: Vec<_> = a.coeffs.range(..limit).collect();
        let bm: Vec<_> = b.coeffs.range(..limit).collect();
        am == bm
    }
}
