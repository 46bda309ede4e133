use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::EvalError;
use crate::exact::{binomial, binomial_eps, eps_limit, lf, Assignment, EpsPoly, Limit, LinearForm, Rational, Symbol};

/// `binomial(upper, lower)`; `lower` must evaluate to an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Binomial {
    pub upper: LinearForm,
    pub lower: LinearForm,
}

/// `base^exponent`; `exponent` must evaluate to an integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exponential {
    pub base: Rational,
    pub exponent: LinearForm,
}

/// A product
/// `constant · (Σ ∏ numerator forms) · ∏ binomials · ∏ exponentials / ∏ denominator forms`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub constant: Rational,
    /// Sum of products; `[[]]` is the constant 1.
    pub numerator: Vec<Vec<LinearForm>>,
    pub denominator: Vec<LinearForm>,
    pub binomials: Vec<Binomial>,
    pub exponentials: Vec<Exponential>,
}

impl Default for Term {
    fn default() -> Self {
        Term {
            constant: Rational::one(),
            numerator: vec![vec![]],
            denominator: Vec::new(),
            binomials: Vec::new(),
            exponentials: Vec::new(),
        }
    }
}

impl Term {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn scaled(mut self, c: Rational) -> Self {
        self.constant *= c;
        self
    }

    /// Multiplies every product of the numerator by `form`.
    pub fn times(mut self, form: &str) -> Self {
        let f = lf(form);
        for product in &mut self.numerator {
            product.push(f.clone());
        }
        self
    }

    /// Replaces the numerator with a sum of products.
    pub fn numerator_sum(mut self, products: &[&[&str]]) -> Self {
        self.numerator = products.iter().map(|p| p.iter().map(|s| lf(s)).collect()).collect();
        self
    }

    pub fn over(mut self, form: &str) -> Self {
        self.denominator.push(lf(form));
        self
    }

    pub fn binom(mut self, upper: &str, lower: &str) -> Self {
        self.binomials.push(Binomial { upper: lf(upper), lower: lf(lower) });
        self
    }

    pub fn pow(mut self, base: Rational, exponent: &str) -> Self {
        self.exponentials.push(Exponential { base, exponent: lf(exponent) });
        self
    }

    /// All linear forms appearing anywhere in the term.
    pub fn forms(&self) -> impl Iterator<Item = &LinearForm> {
        self.numerator
            .iter()
            .flatten()
            .chain(&self.denominator)
            .chain(self.binomials.iter().flat_map(|b| [&b.upper, &b.lower]))
            .chain(self.exponentials.iter().map(|e| &e.exponent))
    }

    /// Denominator forms that vanish at the assignment.
    pub fn vanishing_denominators(&self, a: &Assignment) -> Result<Vec<&LinearForm>, EvalError> {
        let mut out = Vec::new();
        for f in &self.denominator {
            if f.eval(a)?.is_zero() {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// Evaluates the term, taking the `ε → 0` limit when a denominator
    /// vanishes. Only the symbols in `free` that occur in a vanishing
    /// denominator are perturbed, all by the same `ε`.
    pub fn evaluate(&self, a: &Assignment, free: &[Symbol]) -> Result<Limit, EvalError> {
        let vanishing = self.vanishing_denominators(a)?;
        if vanishing.is_empty() {
            return self.evaluate_direct(a).map(Limit::Value);
        }
        let perturbed: BTreeSet<Symbol> = vanishing
            .iter()
            .flat_map(|f| f.symbols())
            .filter(|s| free.contains(s))
            .collect();
        self.evaluate_perturbed(a, &perturbed)
    }

    /// Plain product; errors on a vanishing denominator.
    pub fn evaluate_direct(&self, a: &Assignment) -> Result<Rational, EvalError> {
        // accumulate unreduced and normalize once
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let mut mul = |v: &Rational| {
            num *= v.numer();
            den *= v.denom();
        };
        mul(&self.constant);
        mul(&self.eval_numerator(a)?);
        for b in &self.binomials {
            mul(&binomial(&b.upper.eval(a)?, b.lower.eval_integer(a)?));
        }
        for e in &self.exponentials {
            mul(&power(&e.base, e.exponent.eval_integer(a)?)?);
        }
        for f in &self.denominator {
            let v = f.eval(a)?;
            if v.is_zero() {
                return Err(EvalError::DivisionByZero(f.to_string()));
            }
            num *= v.denom();
            den *= v.numer();
        }
        Ok(Rational::new(num, den))
    }

    /// `ε`-path evaluation with an explicit set of perturbed symbols. Lower
    /// binomial indices and exponents are never perturbed.
    pub fn evaluate_perturbed(&self, a: &Assignment, perturbed: &BTreeSet<Symbol>) -> Result<Limit, EvalError> {
        let mut num = EpsPoly::zero();
        for product in &self.numerator {
            let mut p = EpsPoly::constant(Rational::one());
            for f in product {
                p = &p * &f.eval_eps(a, perturbed)?;
            }
            num = &num + &p;
        }
        let mut scalar = self.constant.clone();
        for e in &self.exponentials {
            scalar *= power(&e.base, e.exponent.eval_integer(a)?)?;
        }
        num = num.scale(&scalar);
        for b in &self.binomials {
            let j = b.lower.eval_integer(a)?;
            num = &num * &binomial_eps(&b.upper.eval_eps(a, perturbed)?, j);
        }
        let mut den = EpsPoly::constant(Rational::one());
        for f in &self.denominator {
            den = &den * &f.eval_eps(a, perturbed)?;
        }
        eps_limit(&num, &den).map_err(|_| {
            let forms: Vec<_> = self.denominator.iter().map(|f| f.to_string()).collect();
            EvalError::DivisionByZero(forms.join("·"))
        })
    }

    fn eval_numerator(&self, a: &Assignment) -> Result<Rational, EvalError> {
        let mut total = Rational::zero();
        for product in &self.numerator {
            let mut p = Rational::one();
            for f in product {
                p *= f.eval(a)?;
            }
            total += p;
        }
        Ok(total)
    }

    /// Applies a symbol substitution to every form.
    pub fn substitute(&self, map: &BTreeMap<Symbol, LinearForm>) -> Term {
        Term {
            constant: self.constant.clone(),
            numerator: self.numerator.iter().map(|p| p.iter().map(|f| f.substitute(map)).collect()).collect(),
            denominator: self.denominator.iter().map(|f| f.substitute(map)).collect(),
            binomials: self
                .binomials
                .iter()
                .map(|b| Binomial { upper: b.upper.substitute(map), lower: b.lower.substitute(map) })
                .collect(),
            exponentials: self
                .exponentials
                .iter()
                .map(|e| Exponential { base: e.base.clone(), exponent: e.exponent.substitute(map) })
                .collect(),
        }
    }
}

fn power(base: &Rational, exp: i64) -> Result<Rational, EvalError> {
    if base.is_zero() && exp < 0 {
        return Err(EvalError::DivisionByZero(format!("{base}^{exp}")));
    }
    let e = i32::try_from(exp).map_err(|_| EvalError::Usage(format!("exponent {exp} out of range")))?;
    Ok(base.pow(e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn at(pairs: &[(Symbol, Rational)]) -> Assignment {
        pairs.iter().cloned().collect()
    }

    #[test]
    fn direct_product() {
        // (m+1)/(m+k+1) · C(m+2k, k) at m=0, k=1: 1/2 · 2
        let t = Term::new().times("m+1").over("m+k+1").binom("m+2k", "k");
        let a = at(&[(Symbol::M, int(0)), (Symbol::K, int(1))]);
        assert_eq!(t.evaluate(&a, &[Symbol::M]).unwrap(), Limit::Value(int(1)));
    }

    #[test]
    fn cancels_pairwise_zero() {
        let t = Term::new().times("m+1").over("m+1");
        let a = at(&[(Symbol::M, int(-1))]);
        assert_eq!(t.evaluate(&a, &[Symbol::M]).unwrap(), Limit::Value(int(1)));
        assert!(matches!(t.evaluate_direct(&a), Err(EvalError::DivisionByZero(_))));
    }

    #[test]
    fn pole_when_numerator_stays_finite() {
        let t = Term::new().over("m+3");
        let a = at(&[(Symbol::M, int(-3))]);
        assert_eq!(t.evaluate(&a, &[Symbol::M]).unwrap(), Limit::Pole);
    }

    #[test]
    fn vanishing_without_free_symbol_is_an_error() {
        let t = Term::new().over("k-1");
        let a = at(&[(Symbol::K, int(1))]);
        assert!(matches!(t.evaluate(&a, &[Symbol::M]), Err(EvalError::DivisionByZero(_))));
    }

    #[test]
    fn exponentials_and_constants() {
        let t = Term::new().scaled(int(4)).pow(ratio(1, 2), "k").over("k+3");
        let a = at(&[(Symbol::K, int(2))]);
        assert_eq!(t.evaluate_direct(&a).unwrap(), ratio(1, 5));
        let z = Term::new().pow(int(0), "-k");
        assert!(z.evaluate_direct(&at(&[(Symbol::K, int(1))])).is_err());
    }
}
