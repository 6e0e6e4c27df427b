use crate::ring::{FieldSpec, Polynomial, RingSpec, SquarefreeMonomial};

use super::ideal::MonomialIdeal;
use super::CombinatoricsError;

/// The ideal `I_m` in `3m + 3` variables together with its `2m + 1`
/// candidate generators up to radical and the grouping they come from.
#[derive(Clone, Debug)]
pub struct ImFamily {
    pub m: usize,
    pub ideal: MonomialIdeal,
    /// `x1*x2, s_n + t_n, u_n + v_n` for `n = 1..=m`.
    pub candidates: Vec<Polynomial>,
    /// `{r_1}, {s_n, t_n}, {u_n, v_n}`, in the order of `candidates`.
    pub parts: Vec<Vec<SquarefreeMonomial>>,
}

/// The four generator families of block `n` (one-based):
/// `s_n = x_{3n-2} x_{3n+2}`, `t_n = x_{3n+1} x_{3n+3}`,
/// `u_n = x_{3n+1} x_{3n+2}`, `v_n = x_{3n-1} x_{3n+3}`.
pub fn im_block(n: usize) -> [SquarefreeMonomial; 4] {
    let x = |a: usize, b: usize| SquarefreeMonomial::from_labels([a, b]);
    [
        x(3 * n - 2, 3 * n + 2),
        x(3 * n + 1, 3 * n + 3),
        x(3 * n + 1, 3 * n + 2),
        x(3 * n - 1, 3 * n + 3),
    ]
}

pub fn build_im(m: usize, field: FieldSpec) -> Result<ImFamily, CombinatoricsError> {
    if m == 0 {
        return Err(CombinatoricsError::FamilyIndex(m));
    }
    let ring = RingSpec::new(3 * m + 3, field)?;
    let r1 = SquarefreeMonomial::from_labels([1, 2]);
    let mut parts = vec![vec![r1]];
    for n in 1..=m {
        let [s, t, u, v] = im_block(n);
        parts.push(vec![s, t]);
        parts.push(vec![u, v]);
    }
    let ideal = MonomialIdeal::new(&ring, parts.iter().flatten().copied())?;
    let candidates = parts
        .iter()
        .map(|p| Polynomial::sum_of_monomials(&ring, p.iter().map(|&g| (g, 1))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ImFamily {
        m,
        ideal,
        candidates,
        parts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_member() {
        let f = build_im(1, FieldSpec::Rational).unwrap();
        assert_eq!(f.ideal.to_string(), "(x1*x2, x1*x5, x2*x6, x4*x5, x4*x6)");
        assert_eq!(f.candidates.len(), 3);
        assert_eq!(f.candidates[1].to_string(), "x1*x5 + x4*x6");
        assert_eq!(f.candidates[2].to_string(), "x4*x5 + x2*x6");
    }

    #[test]
    fn sizes() {
        for m in 1..=5 {
            let f = build_im(m, FieldSpec::Rational).unwrap();
            assert_eq!(f.ideal.generators().len(), 4 * m + 1);
            assert_eq!(f.ideal.ring().num_vars(), 3 * m + 3);
            assert_eq!(f.candidates.len(), 2 * m + 1);
            assert!(f.ideal.is_minimal());
        }
        assert!(build_im(0, FieldSpec::Rational).is_err());
    }
}
