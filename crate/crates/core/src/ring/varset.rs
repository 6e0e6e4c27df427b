use std::cmp::Ordering;
use std::fmt;

/// Maximum number of ring variables representable in a [`VarSet`].
pub const MAX_VARS: usize = 64;

/// A set of variable (or vertex) indices, stored as a 64-bit mask.
///
/// Indices are zero-based internally; `x1` is index 0. Constructors taking
/// "labels" use the one-based numbering of variable names and vertex lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Panics if an index is `>= 64`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            assert!(i < MAX_VARS, "variable index {i} out of range");
            bits |= 1 << i;
        }
        VarSet(bits)
    }

    /// One-based labels, `from_labels([1, 3])` is `{x1, x3}`.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::from_indices(labels.into_iter().map(|l| {
            assert!(l >= 1, "labels are one-based");
            l - 1
        }))
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        Self::from_indices([i])
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> VarSet {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> VarSet {
        self.union(VarSet::singleton(i))
    }

    pub fn without(self, i: usize) -> VarSet {
        self.difference(VarSet::singleton(i))
    }

    /// Largest index plus one, 0 for the empty set.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Ascending indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }

    /// Lexicographic comparison of the ascending index lists.
    pub fn lex_cmp(self, other: VarSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VarSet::from_indices(iter)
    }
}

/// A product of distinct variables, identified with its support.
///
/// The empty support is the unit monomial `1`; it is representable but never
/// a valid ideal generator.
///
/// Ordering is by degree, then lexicographically by support, which matches
/// the order in which generator lists are conventionally written
/// (`x1*x3 < x1*x4 < x2*x4 < x1*x2*x5`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquarefreeMonomial {
    support: VarSet,
}

impl SquarefreeMonomial {
    pub const ONE: SquarefreeMonomial = SquarefreeMonomial {
        support: VarSet::EMPTY,
    };

    pub fn new(support: VarSet) -> Self {
        SquarefreeMonomial { support }
    }

    /// `from_labels([1, 3])` is `x1*x3`.
    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Self {
        Self::new(VarSet::from_labels(labels))
    }

    pub fn support(self) -> VarSet {
        self.support
    }

    pub fn degree(self) -> usize {
        self.support.len()
    }

    pub fn is_one(self) -> bool {
        self.support.is_empty()
    }

    /// `self | other`, i.e. support inclusion.
    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.support.is_subset(other.support)
    }

    /// Whether `self` divides the (not necessarily squarefree) product `a*b`.
    pub fn divides_product(self, a: SquarefreeMonomial, b: SquarefreeMonomial) -> bool {
        self.support.is_subset(a.support.union(b.support))
    }

    /// Squarefree part of a product.
    pub fn lcm(self, other: SquarefreeMonomial) -> SquarefreeMonomial {
        SquarefreeMonomial::new(self.support.union(other.support))
    }
}

impl Ord for SquarefreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.support.lex_cmp(other.support))
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats with the default variable names `x1, x2, ...`.
impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for i in self.support.iter() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(labels: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::from_labels(labels.iter().copied())
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 3]).divides(m(&[1, 3, 5])));
        assert!(!m(&[1, 3]).divides(m(&[1, 4])));
        assert!(m(&[2, 4]).divides_product(m(&[1, 4]), m(&[2, 5])));
        assert!(!m(&[1, 3]).divides_product(m(&[1, 4]), m(&[2, 5])));
    }

    #[test]
    fn ordering_is_degree_then_lex() {
        let mut v = vec![m(&[1, 2, 5]), m(&[2, 4]), m(&[1, 4]), m(&[1, 3]), m(&[3, 5])];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["x1*x3", "x1*x4", "x2*x4", "x3*x5", "x1*x2*x5"]);
    }

    #[test]
    fn iteration_and_span() {
        let s = VarSet::from_labels([64, 1, 7]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 6, 63]);
        assert_eq!(s.span(), 64);
        assert_eq!(VarSet::full(64).len(), 64);
        assert_eq!(VarSet::EMPTY.span(), 0);
    }
}
