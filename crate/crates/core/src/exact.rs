//! Exact scalars.
//!
//! Everything in this crate is computed over [`Rational`] (big rationals in
//! lowest terms). Points where a summand degenerates to `0/0` are resolved by
//! shifting the offending parameters by a formal `ε`, expanding numerator and
//! denominator as [`EpsPoly`] values and taking the limit `ε → 0` with
//! [`eps_limit`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always normalized with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("symbol `{0}` has no value in the assignment")]
    MissingSymbol(Symbol),
    #[error("`{form}` must evaluate to an integer, got {value}")]
    NonInteger { form: String, value: Rational },
    #[error("cannot parse linear form `{0}`")]
    Parse(String),
}

/// Builds a rational from an integer.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds `num/den`. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Returns the value as `i64` when it is an integer that fits.
pub fn as_integer(x: &Rational) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integer binomial `C(n, k)` for integer `n` (any sign) and `k`.
///
/// Same convention as [`binomial`]: zero for negative `k`.
pub fn choose(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    // symmetric shortcut only holds for n >= 0
    let k = if n >= 0 && 2 * k > n { n - k } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Generalized binomial coefficient `x(x-1)...(x-j+1)/j!`.
///
/// Zero for `j < 0`; the empty product gives `1` at `j = 0`.
pub fn binomial(x: &Rational, j: i64) -> Rational {
    if j < 0 {
        return Rational::zero();
    }
    if x.is_integer() {
        if let Some(n) = x.to_integer().to_i64() {
            return Rational::from_integer(choose(n, j));
        }
    }
    // x = p/q: prod (p - i q) / (q^j j!), normalized once at the end
    let p = x.numer();
    let q = x.denom();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j {
        num *= p - q * i;
        den *= q * (i + 1);
    }
    Rational::new(num, den)
}

/// [`binomial`] with a perturbed upper argument.
pub fn binomial_eps(x: &EpsPoly, j: i64) -> EpsPoly {
    if j < 0 {
        return EpsPoly::zero();
    }
    let mut acc = EpsPoly::constant(Rational::one());
    for i in 0..j {
        acc = &acc * &(x - &EpsPoly::constant(int(i)));
    }
    acc.scale(&Rational::new(BigInt::one(), factorial(j as u64)))
}

/// Dense polynomial in the formal perturbation `ε`; `coeffs[i]` multiplies `ε^i`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct EpsPoly {
    coeffs: Vec<Rational>,
}

impl EpsPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        EpsPoly { coeffs }
    }

    pub fn zero() -> Self {
        EpsPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c0 + c1·ε`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn at_zero(&self) -> Rational {
        self.coeff(0)
    }

    pub fn eval(&self, eps: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * eps + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl fmt::Display for EpsPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "ε")?,
                1 => write!(f, "{a}ε")?,
                _ if a.is_one() => write!(f, "ε^{i}")?,
                _ => write!(f, "{a}ε^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &EpsPoly {
    type Output = EpsPoly;
    fn add(self, rhs: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EpsPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &EpsPoly {
    type Output = EpsPoly;
    fn sub(self, rhs: &EpsPoly) -> EpsPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        EpsPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &EpsPoly {
    type Output = EpsPoly;
    fn mul(self, rhs: &EpsPoly) -> EpsPoly {
        if self.is_zero() || rhs.is_zero() {
            return EpsPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        EpsPoly::new(out)
    }
}

impl Neg for &EpsPoly {
    type Output = EpsPoly;
    fn neg(self) -> EpsPoly {
        EpsPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for EpsPoly {
            type Output = EpsPoly;
            fn $m(self, rhs: EpsPoly) -> EpsPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// A value that may diverge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Limit {
    Value(Rational),
    Pole,
}

impl Limit {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            Limit::Value(v) => Some(v),
            Limit::Pole => None,
        }
    }

    pub fn is_pole(&self) -> bool {
        matches!(self, Limit::Pole)
    }
}

impl From<Rational> for Limit {
    fn from(v: Rational) -> Self {
        Limit::Value(v)
    }
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Limit::Value(v) => write!(f, "{v}"),
            Limit::Pole => write!(f, "pole"),
        }
    }
}

/// `lim_{ε→0} num(ε)/den(ε)`, decided by the ε-valuations of both sides.
pub fn eps_limit(num: &EpsPoly, den: &EpsPoly) -> Result<Limit, ExactError> {
    let vd = den.valuation().ok_or(ExactError::ZeroDenominator)?;
    let Some(vn) = num.valuation() else {
        return Ok(Limit::Value(Rational::zero()));
    };
    Ok(match vn.cmp(&vd) {
        std::cmp::Ordering::Greater => Limit::Value(Rational::zero()),
        std::cmp::Ordering::Equal => Limit::Value(num.coeff(vn) / den.coeff(vd)),
        std::cmp::Ordering::Less => Limit::Pole,
    })
}

/// Parameters that may appear in a linear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    /// Upper summation limit `n`.
    N,
    M,
    R,
    /// Summation index.
    K,
    /// Walk length `N`.
    Steps,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::N, Symbol::M, Symbol::R, Symbol::K, Symbol::Steps];

    pub fn name(self) -> &'static str {
        match self {
            Symbol::N => "n",
            Symbol::M => "m",
            Symbol::R => "r",
            Symbol::K => "k",
            Symbol::Steps => "N",
        }
    }

    fn from_char(c: char) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|s| s.name().starts_with(c))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Assignment = BTreeMap<Symbol, Rational>;

/// `constant + Σ coefficient·symbol`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LinearForm {
    constant: Rational,
    coefficients: BTreeMap<Symbol, Rational>,
}

impl LinearForm {
    pub fn new(constant: Rational, coefficients: BTreeMap<Symbol, Rational>) -> Self {
        let coefficients = coefficients.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LinearForm { constant, coefficients }
    }

    pub fn constant_form(c: Rational) -> Self {
        LinearForm { constant: c, coefficients: BTreeMap::new() }
    }

    pub fn symbol(s: Symbol) -> Self {
        LinearForm::new(Rational::zero(), BTreeMap::from([(s, Rational::one())]))
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn coefficient(&self, s: Symbol) -> Rational {
        self.coefficients.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.coefficients.keys().copied()
    }

    pub fn depends_on(&self, s: Symbol) -> bool {
        self.coefficients.contains_key(&s)
    }

    pub fn eval(&self, a: &Assignment) -> Result<Rational, ExactError> {
        let mut acc = self.constant.clone();
        for (s, c) in &self.coefficients {
            let v = a.get(s).ok_or(ExactError::MissingSymbol(*s))?;
            acc += c * v;
        }
        Ok(acc)
    }

    /// Evaluates with `value + ε` substituted for every symbol in `perturbed`.
    pub fn eval_eps(&self, a: &Assignment, perturbed: &BTreeSet<Symbol>) -> Result<EpsPoly, ExactError> {
        let c0 = self.eval(a)?;
        let c1 = self
            .coefficients
            .iter()
            .filter(|(s, _)| perturbed.contains(s))
            .fold(Rational::zero(), |acc, (_, c)| acc + c);
        Ok(EpsPoly::linear(c0, c1))
    }

    pub fn eval_integer(&self, a: &Assignment) -> Result<i64, ExactError> {
        let v = self.eval(a)?;
        as_integer(&v).ok_or_else(|| ExactError::NonInteger { form: self.to_string(), value: v })
    }

    /// Replaces each symbol in `map` by the given form.
    pub fn substitute(&self, map: &BTreeMap<Symbol, LinearForm>) -> LinearForm {
        let mut constant = self.constant.clone();
        let mut coefficients: BTreeMap<Symbol, Rational> = BTreeMap::new();
        for (s, c) in &self.coefficients {
            match map.get(s) {
                Some(f) => {
                    constant += c * &f.constant;
                    for (t, d) in &f.coefficients {
                        *coefficients.entry(*t).or_insert_with(Rational::zero) += c * d;
                    }
                }
                None => *coefficients.entry(*s).or_insert_with(Rational::zero) += c,
            }
        }
        LinearForm::new(constant, coefficients)
    }

    /// Returns `self + c`.
    pub fn shifted(&self, c: &Rational) -> LinearForm {
        LinearForm { constant: &self.constant + c, coefficients: self.coefficients.clone() }
    }
}

/// Parses forms such as `2n+m-r+1`, `n-k`, `-3`, `1/2m`.
impl FromStr for LinearForm {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ExactError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err());
        }
        let mut constant = Rational::zero();
        let mut coefficients: BTreeMap<Symbol, Rational> = BTreeMap::new();
        let mut chunks = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > start {
                chunks.push(&compact[start..i]);
                start = i;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes()[0] {
                b'+' => (1, &chunk[1..]),
                b'-' => (-1, &chunk[1..]),
                _ => (1, chunk),
            };
            if body.is_empty() {
                return Err(err());
            }
            let last = body.chars().last().ok_or_else(err)?;
            match Symbol::from_char(last).filter(|_| last.is_alphabetic()) {
                Some(sym) => {
                    let coef_text = &body[..body.len() - last.len_utf8()];
                    let coef = if coef_text.is_empty() {
                        Rational::one()
                    } else {
                        parse_rational(coef_text).ok_or_else(err)?
                    };
                    *coefficients.entry(sym).or_insert_with(Rational::zero) += coef * int(sign);
                }
                None => constant += parse_rational(body).ok_or_else(err)? * int(sign),
            }
        }
        Ok(LinearForm::new(constant, coefficients))
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, c) in &self.coefficients {
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if a.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{a}{s}")?;
            }
        }
        if first {
            return write!(f, "{}", self.constant);
        }
        if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}", self.constant.abs())?;
        }
        Ok(())
    }
}

/// Shorthand used by the identity registry; panics on malformed input.
pub(crate) fn lf(s: &str) -> LinearForm {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&int(8), 5), int(56));
        assert_eq!(binomial(&int(-1), 0), int(1));
        assert_eq!(binomial(&q("1/2"), 2), q("-1/8"));
        assert_eq!(binomial(&int(3), -1), int(0));
        // zero factor inside the product
        assert_eq!(binomial(&int(2), 5), int(0));
        assert_eq!(binomial(&int(-2), 3), int(-4));
        assert_eq!(binomial(&int(0), 1), int(0));
    }

    #[test]
    fn binomial_eps_matches_pointwise() {
        let x = EpsPoly::linear(q("-1"), q("1"));
        let b = binomial_eps(&x, 2);
        // (ε-1)(ε-2)/2 = 1 - 3ε/2 + ε²/2
        assert_eq!(b, EpsPoly::new(vec![q("1"), q("-3/2"), q("1/2")]));
        assert_eq!(binomial_eps(&x, -2), EpsPoly::zero());
        assert_eq!(binomial_eps(&x, 0), EpsPoly::constant(int(1)));
    }

    #[test]
    fn eps_limit_examples() {
        let num = EpsPoly::from_ints(&[0, 4, 4]);
        let den = EpsPoly::from_ints(&[0, 2, 3, 1]);
        assert_eq!(eps_limit(&num, &den).unwrap(), Limit::Value(int(2)));
        assert_eq!(
            eps_limit(&EpsPoly::from_ints(&[5]), &EpsPoly::from_ints(&[3])).unwrap(),
            Limit::Value(q("5/3"))
        );
        assert_eq!(
            eps_limit(&EpsPoly::from_ints(&[0, 0, 1]), &EpsPoly::from_ints(&[0, 1])).unwrap(),
            Limit::Value(int(0))
        );
        assert_eq!(
            eps_limit(&EpsPoly::from_ints(&[0, 1]), &EpsPoly::from_ints(&[0, 0, 1])).unwrap(),
            Limit::Pole
        );
        assert_eq!(eps_limit(&EpsPoly::zero(), &EpsPoly::from_ints(&[0, 1])).unwrap(), Limit::Value(int(0)));
        assert_eq!(eps_limit(&EpsPoly::from_ints(&[1]), &EpsPoly::zero()), Err(ExactError::ZeroDenominator));
    }

    #[test]
    fn eval_linear_form_examples() {
        let f = lf("m+k+1");
        let a = Assignment::from([(Symbol::M, int(-1)), (Symbol::K, int(0))]);
        assert_eq!(f.eval_eps(&a, &BTreeSet::from([Symbol::M])).unwrap(), EpsPoly::from_ints(&[0, 1]));
        let a = Assignment::from([(Symbol::M, int(2)), (Symbol::K, int(3))]);
        assert_eq!(f.eval_eps(&a, &BTreeSet::new()).unwrap(), EpsPoly::from_ints(&[6]));

        let g = lf("2n+m+r+1");
        let a = Assignment::from([(Symbol::N, int(1)), (Symbol::M, q("1/2")), (Symbol::R, q("1/3"))]);
        let got = g.eval_eps(&a, &BTreeSet::from([Symbol::M, Symbol::R])).unwrap();
        assert_eq!(got, EpsPoly::linear(q("23/6"), int(2)));
        assert_eq!(got.degree(), Some(1));

        let missing = Assignment::from([(Symbol::N, int(1))]);
        assert_eq!(g.eval(&missing), Err(ExactError::MissingSymbol(Symbol::M)));
    }

    #[test]
    fn linear_form_parse_and_display() {
        let f = lf("2n + m - r + 1");
        assert_eq!(f.coefficient(Symbol::N), int(2));
        assert_eq!(f.coefficient(Symbol::R), int(-1));
        assert_eq!(f.constant(), &int(1));
        assert_eq!(f.to_string(), "2n+m-r+1");
        assert_eq!(lf("-3").to_string(), "-3");
        assert_eq!(lf("n-k").to_string(), "n-k");
        assert_eq!(lf("1/2m").coefficient(Symbol::M), q("1/2"));
        assert_eq!(lf("m-m"), LinearForm::constant_form(int(0)));
        assert!("2x".parse::<LinearForm>().is_err());
        assert!("".parse::<LinearForm>().is_err());
        assert!("n+".parse::<LinearForm>().is_err());
    }

    #[test]
    fn substitute_reverses_index() {
        // k -> n-k, m <-> r
        let map = BTreeMap::from([
            (Symbol::K, lf("n-k")),
            (Symbol::M, lf("r")),
            (Symbol::R, lf("m")),
        ]);
        assert_eq!(lf("m+2k").substitute(&map), lf("2n-2k+r"));
        assert_eq!(lf("n+r-k+1").substitute(&map), lf("m+k+1"));
    }

    #[test]
    fn lower_index_must_be_integer() {
        let a = Assignment::from([(Symbol::M, q("1/2"))]);
        assert!(matches!(lf("m+1").eval_integer(&a), Err(ExactError::NonInteger { .. })));
    }

    fn small_poly() -> impl Strategy<Value = EpsPoly> {
        prop::collection::vec((-6i64..6, 1i64..4), 0..5)
            .prop_map(|cs| EpsPoly::new(cs.into_iter().map(|(n, d)| ratio(n, d)).collect()))
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..8).prop_map(|(n, d)| ratio(n, d))
    }

    /// Pascal's triangle, independent of the multiplicative routine.
    fn pascal_row(n: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..n {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    proptest! {
        #[test]
        fn falling_factorial_recurrence(x in small_rational(), j in 0i64..12) {
            let lhs = binomial(&x, j + 1) * int(j + 1);
            let rhs = binomial(&x, j) * (&x - int(j));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integer_binomial_counts_subsets(n in 0usize..40, j in 0usize..40) {
            prop_assume!(j <= n);
            let expected = pascal_row(n)[j].clone();
            prop_assert_eq!(binomial(&int(n as i64), j as i64), Rational::from_integer(expected));
        }

        #[test]
        fn unperturbed_limit_is_direct_ratio(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.at_zero().is_zero());
            let lim = eps_limit(&a, &b).unwrap();
            prop_assert_eq!(lim, Limit::Value(a.at_zero() / b.at_zero()));
        }

        #[test]
        fn eps_poly_ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
                prop_assert_eq!((&a * &b).degree(), Some(da + db));
            }
        }

        #[test]
        fn rational_binomial_matches_eps_constant(x in small_rational(), j in -2i64..9) {
            let via_poly = binomial_eps(&EpsPoly::constant(x.clone()), j).at_zero();
            prop_assert_eq!(binomial(&x, j), via_poly);
        }
    }
}
