//! Dense square matrices over an exact scalar, with the two exact kernels
//! the spectra pipeline needs: Faddeev–LeVerrier characteristic polynomials
//! and fraction-free (Bareiss) elimination for determinants and ranks.

use crate::poly::Poly;
use crate::scalar::ExactScalar;

/// Row-major square matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquareMatrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: ExactScalar> SquareMatrix<S> {
    pub fn zeros(n: usize) -> Self {
        SquareMatrix {
            n,
            data: vec![S::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        SquareMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.n {
            t += &self[(i, i)];
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let prod = a.clone() * other[(k, j)].clone();
                    out[(i, j)] += &prod;
                }
            }
        }
        out
    }

    /// self - shift·I, as used for the rank-based multiplicity cross-check.
    pub fn shift_diagonal(&self, shift: i64) -> Self {
        let mut m = self.clone();
        let s = S::from(shift);
        for i in 0..self.n {
            m[(i, i)] -= &s;
        }
        m
    }

    /// Characteristic polynomial det(xI - M) by the Faddeev–LeVerrier
    /// recurrence. All divisions are exact; coefficients are integers for
    /// integer input.
    pub fn char_poly(&self) -> Poly<S> {
        let n = self.n;
        if n == 0 {
            return Poly::one();
        }
        // c[n] = 1, M_1 = I, and for k = 1..=n:
        //   c[n-k] = -tr(A·M_k)/k,   M_{k+1} = A·M_k + c[n-k]·I
        let mut coeffs = vec![S::zero(); n + 1];
        coeffs[n] = S::one();
        let mut m_k = Self::identity(n);
        for k in 1..=n {
            let am = self.mul(&m_k);
            let tr = am.trace();
            let divisor = S::from(k as i64);
            debug_assert!(
                (tr.clone() % divisor.clone()).is_zero(),
                "Faddeev-LeVerrier trace division must be exact"
            );
            coeffs[n - k] = -(tr / divisor);
            if k < n {
                m_k = am;
                let c = coeffs[n - k].clone();
                for i in 0..n {
                    m_k[(i, i)] += &c;
                }
            }
        }
        Poly::new(coeffs)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det_bareiss(&self) -> S {
        let n = self.n;
        if n == 0 {
            return S::one();
        }
        let mut m = self.clone();
        let mut prev = S::one();
        let mut sign_flip = false;
        for col in 0..n {
            // pivot search within the remaining rows
            let pivot_row = (col..n).find(|&r| !m[(r, col)].is_zero());
            let Some(pr) = pivot_row else {
                return S::zero();
            };
            if pr != col {
                m.swap_rows(pr, col);
                sign_flip = !sign_flip;
            }
            let pivot = m[(col, col)].clone();
            for i in (col + 1)..n {
                for j in (col + 1)..n {
                    let num = pivot.clone() * m[(i, j)].clone()
                        - m[(i, col)].clone() * m[(col, j)].clone();
                    debug_assert!(
                        (num.clone() % prev.clone()).is_zero(),
                        "Bareiss division must be exact"
                    );
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, col)] = S::zero();
            }
            prev = pivot;
        }
        let det = m[(n - 1, n - 1)].clone();
        if sign_flip {
            -det
        } else {
            det
        }
    }

    /// Exact rank by fraction-free elimination with column skipping.
    pub fn rank_bareiss(&self) -> usize {
        let n = self.n;
        let mut m = self.clone();
        let mut prev = S::one();
        let mut rank = 0;
        for col in 0..n {
            let pivot_row = (rank..n).find(|&r| !m[(r, col)].is_zero());
            let Some(pr) = pivot_row else {
                continue;
            };
            if pr != rank {
                m.swap_rows(pr, rank);
            }
            let pivot = m[(rank, col)].clone();
            for i in (rank + 1)..n {
                for j in (col + 1)..n {
                    let num = pivot.clone() * m[(i, j)].clone()
                        - m[(i, col)].clone() * m[(rank, j)].clone();
                    debug_assert!((num.clone() % prev.clone()).is_zero());
                    m[(i, j)] = num / prev.clone();
                }
                m[(i, col)] = S::zero();
            }
            prev = pivot;
            rank += 1;
            if rank == n {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.n {
            self.data.swap(a * self.n + j, b * self.n + j);
        }
    }
}

impl<S> std::ops::Index<(usize, usize)> for SquareMatrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.n + j]
    }
}

impl<S> std::ops::IndexMut<(usize, usize)> for SquareMatrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.n + j]
    }
}
