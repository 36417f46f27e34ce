use crate::parity::Parity;

/// A canonical supermonomial: an exponent per even generator together with a
/// strictly increasing list of odd generator indices.
///
/// Strict monotonicity of `odd` is the canonical form; any product that
/// would repeat an odd factor is zero and is represented by the absence of a
/// monomial, never by a stored zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    even: Vec<u32>,
    odd: Vec<u32>,
}

impl Monomial {
    /// The empty monomial (the unit) over `even_count` even generators.
    pub fn one(even_count: usize) -> Monomial {
        Monomial {
            even: vec![0; even_count],
            odd: Vec::new(),
        }
    }

    pub(crate) fn from_parts(even: Vec<u32>, odd: Vec<u32>) -> Monomial {
        debug_assert!(odd.windows(2).all(|w| w[0] < w[1]), "odd factors not canonical");
        Monomial { even, odd }
    }

    pub fn even_exponents(&self) -> &[u32] {
        &self.even
    }

    pub fn even_exponent(&self, i: usize) -> u32 {
        self.even[i]
    }

    pub fn odd_factors(&self) -> &[u32] {
        &self.odd
    }

    pub fn parity(&self) -> Parity {
        Parity::from_u32(self.odd.len() as u32)
    }

    pub fn total_degree(&self) -> u32 {
        self.even.iter().sum::<u32>() + self.odd.len() as u32
    }

    pub fn is_one(&self) -> bool {
        self.odd.is_empty() && self.even.iter().all(|&e| e == 0)
    }

    /// Product with the Koszul reordering sign, or `None` when an odd factor
    /// repeats and the product is zero.
    ///
    /// The sign is the parity of the permutation that interleaves the two
    /// sorted odd-factor lists; even factors commute with everything and
    /// contribute no sign.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, i64)> {
        debug_assert_eq!(self.even.len(), other.even.len());
        let even = self
            .even
            .iter()
            .zip(&other.even)
            .map(|(a, b)| a + b)
            .collect();

        let mut odd = Vec::with_capacity(self.odd.len() + other.odd.len());
        let mut swaps = 0usize;
        let (a, b) = (&self.odd, &other.odd);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] < b[j] {
                odd.push(a[i]);
                i += 1;
            } else if a[i] > b[j] {
                // b[j] crosses every remaining factor of a
                swaps += a.len() - i;
                odd.push(b[j]);
                j += 1;
            } else {
                return None;
            }
        }
        odd.extend_from_slice(&a[i..]);
        odd.extend_from_slice(&b[j..]);

        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((Monomial { even, odd }, sign))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grassmann(odd: &[u32]) -> Monomial {
        Monomial::from_parts(vec![], odd.to_vec())
    }

    #[test]
    fn odd_factors_anticommute() {
        let th1 = grassmann(&[0]);
        let th2 = grassmann(&[1]);
        let (m12, s12) = th1.mul(&th2).unwrap();
        let (m21, s21) = th2.mul(&th1).unwrap();
        assert_eq!(m12, m21);
        assert_eq!(s12, 1);
        assert_eq!(s21, -1);
    }

    #[test]
    fn odd_square_is_zero() {
        let th1 = grassmann(&[0]);
        assert!(th1.mul(&th1).is_none());
    }

    #[test]
    fn interleaving_sign_counts_all_crossings() {
        // (th1 th3) * (th2 th4): th2 crosses th3 only -> one swap.
        let a = grassmann(&[0, 2]);
        let b = grassmann(&[1, 3]);
        let (m, s) = a.mul(&b).unwrap();
        assert_eq!(m, grassmann(&[0, 1, 2, 3]));
        assert_eq!(s, -1);
    }

    #[test]
    fn even_exponents_add() {
        let a = Monomial::from_parts(vec![2, 0], vec![]);
        let b = Monomial::from_parts(vec![1, 3], vec![]);
        let (m, s) = a.mul(&b).unwrap();
        assert_eq!(m.even_exponents(), &[3, 3]);
        assert_eq!(s, 1);
    }

    #[test]
    fn degree_and_parity() {
        let m = Monomial::from_parts(vec![2, 1], vec![0, 2, 3]);
        assert_eq!(m.total_degree(), 6);
        assert_eq!(m.parity(), Parity::ODD);
    }
}
