use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{FieldSpec, Scalar};
use super::varset::{SquarefreeMonomial, MAX_VARS};
use super::RingError;

/// Shared handle to a ring description.
pub type Ring = Arc<RingSpec>;

/// `K[x1..xN, params]`: `num_vars` ordinary variables followed by parameter
/// variables (such as `t`), which are ordinary polynomial variables that
/// squarefree monomials never mention.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    var_names: Vec<String>,
    field: FieldSpec,
    param_vars: Vec<String>,
}

impl RingSpec {
    /// `K[x1, .., xN]` with default names.
    pub fn new(num_vars: usize, field: FieldSpec) -> Result<Ring, RingError> {
        Self::with_params(num_vars, field, &[])
    }

    pub fn with_params(num_vars: usize, field: FieldSpec, params: &[&str]) -> Result<Ring, RingError> {
        let names = (1..=num_vars).map(|i| format!("x{i}")).collect();
        Self::with_names(names, field, params.iter().map(|s| s.to_string()).collect())
    }

    pub fn with_names(
        var_names: Vec<String>,
        field: FieldSpec,
        param_vars: Vec<String>,
    ) -> Result<Ring, RingError> {
        if var_names.is_empty() {
            return Err(RingError::NoVariables);
        }
        if var_names.len() > MAX_VARS {
            return Err(RingError::TooManyVariables(var_names.len()));
        }
        let mut seen = std::collections::HashSet::new();
        for name in var_names.iter().chain(&param_vars) {
            if !is_identifier(name) || (field == FieldSpec::Gf4 && name == "w") {
                return Err(RingError::BadVariableName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(RingError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(RingSpec {
            var_names,
            field,
            param_vars,
        }))
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn num_params(&self) -> usize {
        self.param_vars.len()
    }

    /// Ordinary plus parameter variables; the length of exponent vectors and points.
    pub fn total_vars(&self) -> usize {
        self.var_names.len() + self.param_vars.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn param_vars(&self) -> &[String] {
        &self.param_vars
    }

    /// Name of variable `i`, where indices `>= num_vars` are parameters.
    pub fn name(&self, i: usize) -> &str {
        if i < self.var_names.len() {
            &self.var_names[i]
        } else {
            &self.param_vars[i - self.var_names.len()]
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.var_names
            .iter()
            .chain(&self.param_vars)
            .position(|n| n == name)
    }

    /// Same variables over another field.
    pub fn with_field(&self, field: FieldSpec) -> Result<Ring, RingError> {
        Self::with_names(self.var_names.clone(), field, self.param_vars.clone())
    }

    /// Drops the parameter variables.
    pub fn without_params(&self) -> Ring {
        Arc::new(RingSpec {
            var_names: self.var_names.clone(),
            field: self.field,
            param_vars: Vec::new(),
        })
    }

    /// Checks that a monomial only mentions ordinary variables of this ring.
    pub fn check_monomial(&self, m: SquarefreeMonomial) -> Result<(), RingError> {
        if m.support().span() > self.num_vars() {
            return Err(RingError::VariableOutOfRange {
                index: m.support().span() - 1,
                num_vars: self.num_vars(),
            });
        }
        Ok(())
    }

    /// Divisibility of squarefree monomials belonging to this ring.
    pub fn sqf_divides(&self, a: SquarefreeMonomial, b: SquarefreeMonomial) -> Result<bool, RingError> {
        self.check_monomial(a)?;
        self.check_monomial(b)?;
        Ok(a.divides(b))
    }

    /// Formats a squarefree monomial with this ring's variable names.
    pub fn format_monomial(&self, m: SquarefreeMonomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.support()
            .iter()
            .map(|i| self.name(i))
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Exponent vector over all variables of a ring (ordinary, then parameters).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Exponents(Vec<u32>);

impl Exponents {
    pub fn zero(n: usize) -> Self {
        Exponents(vec![0; n])
    }

    pub fn from_vec(v: Vec<u32>) -> Self {
        Exponents(v)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Exponents) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Exponents) -> Option<Exponents> {
        self.divides(other)
            .then(|| Exponents(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    /// Graded reverse lexicographic comparison with `x1 > x2 > ...`.
    pub fn degrevlex_cmp(&self, other: &Exponents) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }

    fn of_monomial(n: usize, m: SquarefreeMonomial, e: u32) -> Exponents {
        let mut v = vec![0; n];
        for i in m.support().iter() {
            v[i] = e;
        }
        Exponents(v)
    }
}

/// A term of a polynomial: exponent vector with a nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub exponents: Exponents,
    pub coefficient: Scalar,
}

/// Exact multivariate polynomial over a [`RingSpec`].
///
/// Terms with zero coefficients are never stored, so equality of polynomials
/// is equality of term maps.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: BTreeMap<Exponents, Scalar>,
}

/// Arithmetic operation selector for [`Polynomial::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Self::monomial(ring, Exponents::zero(ring.total_vars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, ring.field().one())
    }

    /// The variable with index `i` (parameters follow the ordinary variables).
    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.total_vars(), "variable index out of range");
        let mut e = Exponents::zero(ring.total_vars());
        e.0[i] = 1;
        Self::monomial(ring, e, ring.field().one())
    }

    /// `c * x^e`; the coefficient must belong to the ring's field.
    pub fn monomial(ring: &Ring, exponents: Exponents, c: Scalar) -> Self {
        assert_eq!(exponents.0.len(), ring.total_vars(), "exponent vector length");
        assert_eq!(c.field(), ring.field(), "coefficient field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponents, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Squarefree monomial raised to the power `e`.
    pub fn from_sqf_pow(ring: &Ring, m: SquarefreeMonomial, e: u32) -> Result<Self, RingError> {
        ring.check_monomial(m)?;
        Ok(Self::monomial(
            ring,
            Exponents::of_monomial(ring.total_vars(), m, e),
            ring.field().one(),
        ))
    }

    pub fn from_sqf(ring: &Ring, m: SquarefreeMonomial) -> Result<Self, RingError> {
        Self::from_sqf_pow(ring, m, 1)
    }

    /// `sum m^e` over the given monomials.
    pub fn sum_of_monomials<I>(ring: &Ring, monomials: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (SquarefreeMonomial, u32)>,
    {
        let mut acc = Self::zero(ring);
        for (m, e) in monomials {
            acc = &acc + &Self::from_sqf_pow(ring, m, e)?;
        }
        Ok(acc)
    }

    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Scalar)>,
    {
        let mut p = Self::zero(ring);
        for (e, c) in terms {
            assert_eq!(e.0.len(), ring.total_vars(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                let s = &*existing + &c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
            .into_iter()
            .map(|(exponents, coefficient)| Term {
                exponents,
                coefficient,
            })
            .collect()
    }

    pub fn coefficient(&self, e: &Exponents) -> Scalar {
        self.terms
            .get(e)
            .cloned()
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponents::degree).max()
    }

    /// Whether any term involves a parameter variable.
    pub fn uses_params(&self) -> bool {
        let n = self.ring.num_vars();
        self.terms.keys().any(|e| e.0[n..].iter().any(|&x| x > 0))
    }

    /// Terms in degree-reverse-lexicographic descending order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.degrevlex_cmp(a.0));
        v
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), RingError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, RingError> {
        self.check_ring(other)?;
        let mut out = Polynomial::zero(&self.ring);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn arith(op: ArithOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, RingError> {
        match op {
            ArithOp::Add => f.checked_add(g),
            ArithOp::Sub => f.checked_sub(g),
            ArithOp::Mul => f.checked_mul(g),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Polynomial::zero(&self.ring);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation; `point` has one entry per ordinary and parameter variable.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, RingError> {
        if point.len() != self.ring.total_vars() {
            return Err(RingError::PointLength {
                expected: self.ring.total_vars(),
                got: point.len(),
            });
        }
        let field = self.ring.field();
        if let Some(bad) = point.iter().find(|s| s.field() != field) {
            return Err(RingError::NoFieldMap {
                from: bad.field(),
                to: field,
            });
        }
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(&e.0) {
                if k > 0 {
                    t = &t * &x.pow(k);
                    if t.is_zero() {
                        break;
                    }
                }
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// The same polynomial with coefficients mapped into another field.
    pub fn to_ring(&self, ring: &Ring) -> Result<Polynomial, RingError> {
        if ring.var_names() != self.ring.var_names() || ring.param_vars() != self.ring.param_vars() {
            return Err(RingError::RingMismatch);
        }
        let field = ring.field();
        let mut out = Polynomial::zero(ring);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), field.convert(c)?);
        }
        Ok(out)
    }

    /// Substitutes values for every parameter variable, landing in `target`,
    /// which must have the same ordinary variables and no parameters.
    pub fn specialize_params(&self, values: &[Scalar], target: &Ring) -> Result<Polynomial, RingError> {
        let n = self.ring.num_vars();
        if values.len() != self.ring.num_params() {
            return Err(RingError::PointLength {
                expected: self.ring.num_params(),
                got: values.len(),
            });
        }
        if target.var_names() != self.ring.var_names() || target.num_params() != 0 {
            return Err(RingError::RingMismatch);
        }
        let field = target.field();
        let values: Vec<Scalar> = values.iter().map(|v| field.convert(v)).collect::<Result<_, _>>()?;
        let mut out = Polynomial::zero(target);
        for (e, c) in &self.terms {
            let mut coeff = field.convert(c)?;
            for (v, &k) in values.iter().zip(&e.0[n..]) {
                coeff = &coeff * &v.pow(k);
            }
            out.add_term(Exponents(e.0[..n].to_vec()), coeff);
        }
        Ok(out)
    }

    /// Embeds into a ring with the same leading variables and possibly more
    /// trailing ones (no parameters on either side).
    pub(crate) fn embed(&self, ring: &Ring) -> Polynomial {
        let n = ring.total_vars();
        debug_assert!(n >= self.ring.total_vars());
        let mut out = Polynomial::zero(ring);
        for (e, c) in &self.terms {
            let mut v = e.0.clone();
            v.resize(n, 0);
            out.terms.insert(Exponents(v), c.clone());
        }
        out
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different rings; use the `checked_*`
        /// methods for a fallible version.
        impl<'a> $tr<&'a Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &'a Polynomial) -> Polynomial {
                self.$checked(rhs).expect("polynomials from different rings")
            }
        }

        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, checked_add);
forward_op!(Sub, sub, checked_sub);
forward_op!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-&self.ring.field().one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.ring.name(i).to_string()
                    } else {
                        format!("{}^{}", self.ring.name(i), k)
                    }
                })
                .collect();
            let coeff = match &abs {
                Scalar::Gf4(g) if g.bits() == 3 => "(w + 1)".to_string(),
                other => other.to_string(),
            };
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
