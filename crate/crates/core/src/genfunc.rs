//! Exponential generating functions for the rank-graded Boolean interval
//! counts of types C and D, and the recurrence they satisfy.
//!
//! Series are expanded over exact rationals; coefficients only become
//! integers after scaling by `n!`, and that integrality is asserted.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::enumeration::CountTable;
use crate::error::{domain, Error, Result};
use crate::graph::Family;
use crate::sequences::factorial;

/// Polynomial in `q` with rational coefficients, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::new(vec![c])
    }

    /// From integer numerators over a common denominator.
    pub fn from_ints(nums: &[i64], den: i64) -> Self {
        QPoly::new(
            nums.iter()
                .map(|&a| BigRational::new(a.into(), den.into()))
                .collect(),
        )
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| acc * q + a)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, o: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        QPoly::new((0..len).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, o: &QPoly) -> QPoly {
        self + &-o
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => c.to_string(),
                1 => format!("{c}q"),
                _ => format!("{c}q^{k}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// `numerator / denominator + constant` as a power series in `x` whose
/// coefficients are polynomials in `q`. The denominator's constant term is 1.
#[derive(Clone, Debug)]
pub struct RationalSeries {
    numerator: Vec<QPoly>,
    denominator: Vec<QPoly>,
    constant: QPoly,
}

impl RationalSeries {
    pub fn new(numerator: Vec<QPoly>, denominator: Vec<QPoly>, constant: QPoly) -> Result<Self> {
        let one = QPoly::constant(BigRational::one());
        if denominator.first() != Some(&one) {
            return Err(domain("series denominator must have constant term 1"));
        }
        Ok(RationalSeries {
            numerator,
            denominator,
            constant,
        })
    }

    /// Coefficients `c_0, ..., c_order` of `x^n`.
    pub fn expand(&self, order: usize) -> Vec<QPoly> {
        let mut c: Vec<QPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut next = self.numerator.get(n).cloned().unwrap_or_default();
            for (i, d) in self.denominator.iter().enumerate().skip(1).take(n) {
                next = &next - &(d * &c[n - i]);
            }
            c.push(next);
        }
        if let Some(c0) = c.first_mut() {
            *c0 = &*c0 + &self.constant;
        }
        c
    }
}

fn x_poly(terms: &[(&[i64], i64)]) -> Vec<QPoly> {
    terms.iter().map(|(n, d)| QPoly::from_ints(n, *d)).collect()
}

/// `1 - 2x - 2q x^2`, shared by both families.
fn shared_denominator() -> Vec<QPoly> {
    x_poly(&[(&[1], 1), (&[-2], 1), (&[0, -2], 1)])
}

/// Bivariate EGF `sum f(n,k) q^k x^n / n!`.
/// C: `((2+q)x + 2q x^2) / (1 - 2x - 2q x^2) + 1`.
/// D: `(1/2)(2x + (4q + q^2) x^2) / (1 - 2x - 2q x^2) + 1`.
pub fn egf_series(family: Family) -> Result<RationalSeries> {
    let numerator = match family {
        Family::C => x_poly(&[(&[], 1), (&[2, 1], 1), (&[0, 2], 1)]),
        Family::D => x_poly(&[(&[], 1), (&[2], 2), (&[0, 4, 1], 2)]),
        f => return Err(unsupported(f)),
    };
    RationalSeries::new(numerator, shared_denominator(), QPoly::from_ints(&[1], 1))
}

/// Univariate EGF of the totals over all ranks.
/// C: `(3x + 2x^2) / (1 - 2x - 2x^2) + 1`; D: `(1/2)(2x + 5x^2) / (1 - 2x - 2x^2) + 1`.
pub fn egf_total_series(family: Family) -> Result<RationalSeries> {
    let numerator = match family {
        Family::C => x_poly(&[(&[], 1), (&[3], 1), (&[2], 1)]),
        Family::D => x_poly(&[(&[], 1), (&[2], 2), (&[5], 2)]),
        f => return Err(unsupported(f)),
    };
    let denominator = x_poly(&[(&[1], 1), (&[-2], 1), (&[-2], 1)]);
    RationalSeries::new(numerator, denominator, QPoly::from_ints(&[1], 1))
}

fn unsupported(f: Family) -> Error {
    Error::Unsupported(format!("no generating function for family {f}"))
}

/// `n! * c`, required to be a non-negative integer.
fn scaled_integer(c: &BigRational, n: usize, what: &str) -> Result<BigUint> {
    let v = c * BigRational::from_integer(BigInt::from(factorial(n)));
    if !v.is_integer() || v.is_negative() {
        return Err(Error::Internal(format!(
            "{what}: n={n} coefficient {v} is not a non-negative integer after n! scaling"
        )));
    }
    Ok(v.to_integer().to_biguint().expect("non-negative"))
}

/// `f(n, k)` for `n = 0..=max_n` read off the bivariate EGF.
pub fn expand_egf(family: Family, max_n: usize) -> Result<CountTable> {
    let series = egf_series(family)?;
    let rows = series
        .expand(max_n)
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let len = c.coeffs().len().max(1);
            (0..len)
                .map(|k| scaled_integer(&c.coeff(k), n, &format!("{family} EGF")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable::new(family, 0, rows))
}

/// Total counts `sum_k f(n, k)` for `n = 0..=max_n` from the univariate EGF.
pub fn egf_total(family: Family, max_n: usize) -> Result<Vec<BigUint>> {
    egf_total_series(family)?
        .expand(max_n)
        .iter()
        .enumerate()
        .map(|(n, c)| scaled_integer(&c.coeff(0), n, &format!("{family} total EGF")))
        .collect()
}

/// `f(n,k) = 2n f(n-1,k) + 2n(n-1) f(n-2,k-1)` for `n >= 3`, from the
/// rank-1 and rank-2 rows, with `f(0,0) = 1`. Rows run `n = 0..=max_n`.
pub fn recurrence_table(family: Family, max_n: usize) -> Result<CountTable> {
    if max_n < 2 {
        return Err(domain(format!(
            "recurrence table needs max_n >= 2, got {max_n}"
        )));
    }
    let u = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
    let mut rows: Vec<Vec<BigUint>> = match family {
        Family::C => vec![u(&[1]), u(&[2, 1]), u(&[8, 8, 0])],
        Family::D => vec![u(&[1]), u(&[1]), u(&[4, 4, 1])],
        f => return Err(unsupported(f)),
    };
    for n in 3..=max_n {
        let len = rows[n - 1].len().max(rows[n - 2].len() + 1);
        let row = (0..len)
            .map(|k| {
                let a = rows[n - 1].get(k).cloned().unwrap_or_default() * (2 * n);
                let b = match k {
                    0 => BigUint::zero(),
                    _ => rows[n - 2].get(k - 1).cloned().unwrap_or_default() * (2 * n * (n - 1)),
                };
                a + b
            })
            .collect();
        rows.push(row);
    }
    Ok(CountTable::new(family, 0, rows))
}

/// Per-`n` outcome of comparing the recurrence, the EGF and the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AgreementRow {
    pub n: usize,
    pub recurrence: Vec<BigUint>,
    pub egf: Vec<BigUint>,
    pub closed_form: Vec<BigUint>,
    pub total: BigUint,
    pub agree: bool,
}

/// Compares all sources for `n = 1..=max_n`.
pub fn triple_agreement(family: Family, max_n: usize) -> Result<Vec<AgreementRow>> {
    let rec = recurrence_table(family, max_n.max(2))?;
    let egf = expand_egf(family, max_n)?;
    let totals = egf_total(family, max_n)?;
    let closed = crate::enumeration::count_table(family, max_n)?;
    Ok((1..=max_n)
        .map(|n| {
            let r = rec.row(n).unwrap_or_default().to_vec();
            let e = egf.row(n).unwrap_or_default().to_vec();
            let c = closed.row(n).unwrap_or_default().to_vec();
            let sum: BigUint = e.iter().sum();
            let agree = r == e && e == c && sum == totals[n];
            AgreementRow {
                n,
                recurrence: r,
                egf: e,
                closed_form: c,
                total: totals[n].clone(),
                agree,
            }
        })
        .collect())
}

/// Largest `q`-degree among the first `order + 1` bivariate coefficients.
pub fn max_q_degree(family: Family, order: usize) -> Result<usize> {
    Ok(egf_series(family)?
        .expand(order)
        .iter()
        .filter_map(QPoly::degree)
        .max()
        .unwrap_or(0))
}
