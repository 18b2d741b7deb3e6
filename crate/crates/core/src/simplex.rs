//! Simplices with exact rational vertices, their vertex matrices, and the
//! basic Lagrange polynomials (barycentric coordinates).
//!
//! Everything here is exact: coordinates are [`Rational`]s and every identity
//! the rest of the crate relies on (`λ_j(x^{(k)}) = δ_jk`, `Σ λ_j = 1`,
//! `(n+1)·S⁻¹ = Sᵀ` for Hadamard simplices) is checked as an equality.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::rational::{common_denominator, dot, int, Rational};

/// Axis-aligned cube `center + half_side·[-1, 1]^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cube {
    center: Vec<Rational>,
    half_side: Rational,
}

impl Cube {
    pub fn new(center: Vec<Rational>, half_side: Rational) -> Result<Self> {
        if !half_side.is_positive() {
            return Err(Error::InvalidParameter(
                "cube half side must be positive".into(),
            ));
        }
        Ok(Cube { center, half_side })
    }

    /// `Q'_n = [-1, 1]^n`.
    pub fn symmetric(n: usize) -> Self {
        Cube {
            center: vec![Rational::zero(); n],
            half_side: Rational::one(),
        }
    }

    /// `Q_n = [0, 1]^n`.
    pub fn unit(n: usize) -> Self {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        Cube {
            center: vec![half.clone(); n],
            half_side: half,
        }
    }

    pub fn dimension(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &[Rational] {
        &self.center
    }

    pub fn half_side(&self) -> &Rational {
        &self.half_side
    }

    /// The vertex encoded by `mask`: bit `i` set selects the upper end of
    /// coordinate `i`.
    pub fn vertex(&self, mask: u64) -> Vec<Rational> {
        self.center
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if mask >> i & 1 == 1 {
                    c + &self.half_side
                } else {
                    c - &self.half_side
                }
            })
            .collect()
    }
}

/// `n + 1` affinely independent points in `n`-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex {
    vertices: Vec<Vec<Rational>>,
    determinant: Rational,
}

impl Simplex {
    pub fn new(vertices: Vec<Vec<Rational>>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidParameter("simplex needs vertices".into()));
        }
        let n = vertices.len() - 1;
        for v in &vertices {
            if v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: v.len(),
                });
            }
        }
        let determinant = bareiss_determinant(&vertex_matrix(&vertices));
        if determinant.is_zero() {
            return Err(Error::Degenerate);
        }
        Ok(Simplex {
            vertices,
            determinant,
        })
    }

    pub fn from_integer_vertices(vertices: &[Vec<i64>]) -> Result<Self> {
        Self::new(
            vertices
                .iter()
                .map(|v| v.iter().map(|&x| int(x)).collect())
                .collect(),
        )
    }

    /// The simplex whose vertex matrix is `h`: vertex `j` is row `j` with the
    /// trailing `+1` dropped. Lies in `[-1, 1]^n` with every vertex at a cube
    /// corner.
    pub fn from_hadamard(h: &HadamardMatrix) -> Result<Self> {
        if !h.has_unit_last_column() {
            return Err(Error::NormalizationRequired);
        }
        let n = h.order() - 1;
        let vertices = h
            .rows()
            .map(|r| r[..n].iter().map(|&v| int(i64::from(v))).collect())
            .collect();
        Self::new(vertices)
    }

    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// `Δ = det S`.
    pub fn determinant(&self) -> &Rational {
        &self.determinant
    }

    pub fn vertex_matrix(&self) -> Vec<Vec<Rational>> {
        vertex_matrix(&self.vertices)
    }

    pub fn centroid(&self) -> Vec<Rational> {
        let n = self.dimension();
        let count = int(n as i64 + 1);
        (0..n)
            .map(|i| {
                self.vertices
                    .iter()
                    .fold(Rational::zero(), |acc, v| acc + &v[i])
                    / &count
            })
            .collect()
    }

    /// Homothetic copy with ratio `sigma` about the centroid.
    pub fn scaled_about_centroid(&self, sigma: &Rational) -> Result<Self> {
        let c = self.centroid();
        Self::new(
            self.vertices
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(&c)
                        .map(|(x, ci)| ci + (x - ci) * sigma)
                        .collect()
                })
                .collect(),
        )
    }

    /// Applies `x ↦ scale·x + shift` coordinate-wise.
    pub fn map_affine(&self, scale: &Rational, shift: &Rational) -> Result<Self> {
        Self::new(
            self.vertices
                .iter()
                .map(|v| v.iter().map(|x| x * scale + shift).collect())
                .collect(),
        )
    }

    /// Maps `[0, 1]^n` coordinates onto `[-1, 1]^n` via `x ↦ 2x - 1`.
    pub fn unit_to_symmetric(&self) -> Result<Self> {
        self.map_affine(&int(2), &int(-1))
    }

    /// Maps `[-1, 1]^n` coordinates onto `[0, 1]^n` via `x ↦ (x + 1)/2`.
    pub fn symmetric_to_unit(&self) -> Result<Self> {
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        self.map_affine(&half, &half)
    }

    /// All `n(n+1)/2` squared edge lengths, in `(j, k)` lexicographic order.
    pub fn squared_edges(&self) -> Vec<Rational> {
        let mut out = Vec::new();
        for (j, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[j + 1..] {
                out.push(
                    a.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, y)| acc + (x - y) * (x - y)),
                );
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        let edges = self.squared_edges();
        edges.windows(2).all(|w| w[0] == w[1])
    }

    /// For a regular simplex centred at the origin with `‖x^{(j)}‖² = n`,
    /// i.e. circumradius `R = √n`, the edge satisfies `d = R·√2·√((n+1)/n)`,
    /// so `d² = 2(n+1)`. Returns `None` when the simplex is not of that kind.
    pub fn inscribed_edge_relation_holds(&self) -> Option<bool> {
        let n = self.dimension();
        if n == 0 || !self.is_regular() {
            return None;
        }
        let radius_sq = int(n as i64);
        let centred = self.centroid().iter().all(Zero::is_zero);
        let on_sphere = self.vertices.iter().all(|v| dot(v, v) == radius_sq);
        if !centred || !on_sphere {
            return None;
        }
        Some(self.squared_edges()[0] == int(2 * (n as i64 + 1)))
    }
}

fn vertex_matrix(vertices: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    vertices
        .iter()
        .map(|v| {
            let mut row = v.clone();
            row.push(Rational::one());
            row
        })
        .collect()
}

/// Exact determinant: each row is cleared of denominators and the resulting
/// integer matrix is reduced with fraction-free (Bareiss) elimination.
pub fn bareiss_determinant(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "determinant of a non-square matrix");
            let d = common_denominator(row);
            let out = row.iter().map(|x| (x * &d).to_integer()).collect();
            scale *= d;
            out
        })
        .collect();
    Rational::new(bareiss_integer(&mut a), scale)
}

/// Bareiss elimination on an integer matrix, in place. Returns the
/// determinant.
pub fn bareiss_integer(a: &mut [Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact inverse by Gauss-Jordan elimination; `None` when singular.
pub fn invert(matrix: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<Rational>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        a[col].iter_mut().for_each(|v| *v /= &p);
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            row.iter_mut()
                .zip(&pivot_row)
                .for_each(|(v, pv)| *v -= &f * pv);
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Coefficients of the basic Lagrange polynomials `λ_j(x) = Σ_i l_ij x_i + l_{n+1,j}`.
///
/// `coefficients[i][j] = l_ij` is the inverse of the vertex matrix, so column
/// `j` holds the coefficients of `λ_j` with the constant term last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeEvaluator {
    dimension: usize,
    coefficients: Vec<Vec<Rational>>,
    determinant: Rational,
}

impl LagrangeEvaluator {
    pub fn build(simplex: &Simplex) -> Result<Self> {
        let coefficients = invert(&simplex.vertex_matrix()).ok_or(Error::Degenerate)?;
        Ok(LagrangeEvaluator {
            dimension: simplex.dimension(),
            coefficients,
            determinant: simplex.determinant().clone(),
        })
    }

    /// Uses `S⁻¹ = Sᵀ/(n+1)` for the simplex of a normalized Hadamard matrix,
    /// and checks that it agrees with the general inverse.
    pub fn from_hadamard(h: &HadamardMatrix) -> Result<Self> {
        let simplex = Simplex::from_hadamard(h)?;
        let m = h.order();
        let scale = int(m as i64);
        let coefficients: Vec<Vec<Rational>> = (0..m)
            .map(|i| (0..m).map(|j| int(i64::from(h.get(j, i))) / &scale).collect())
            .collect();
        let general = Self::build(&simplex)?;
        if general.coefficients != coefficients {
            return Err(Error::InvariantViolation(
                "(n+1)·S⁻¹ differs from Sᵀ".into(),
            ));
        }
        Ok(LagrangeEvaluator {
            dimension: m - 1,
            coefficients,
            determinant: simplex.determinant().clone(),
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The inverse vertex matrix `(l_ij)`.
    pub fn coefficients(&self) -> &[Vec<Rational>] {
        &self.coefficients
    }

    pub fn determinant(&self) -> &Rational {
        &self.determinant
    }

    pub fn lambda(&self, j: usize, x: &[Rational]) -> Result<Rational> {
        self.check_dim(x)?;
        Ok(self.lambda_unchecked(j, x))
    }

    fn lambda_unchecked(&self, j: usize, x: &[Rational]) -> Rational {
        let n = self.dimension;
        x.iter()
            .enumerate()
            .fold(self.coefficients[n][j].clone(), |acc, (i, xi)| {
                acc + &self.coefficients[i][j] * xi
            })
    }

    /// `(λ_1(x), …, λ_{n+1}(x))`.
    pub fn barycentric(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        self.check_dim(x)?;
        Ok((0..=self.dimension)
            .map(|j| self.lambda_unchecked(j, x))
            .collect())
    }

    fn check_dim(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                got: x.len(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::sylvester;
    use crate::rational::ratio;

    fn h4_simplex() -> Simplex {
        Simplex::from_hadamard(&sylvester(2).unwrap().normalize_last_column()).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn determinant_examples() {
        let id: Vec<Vec<Rational>> = (0..4)
            .map(|i| (0..4).map(|j| int((i == j) as i64)).collect())
            .collect();
        assert_eq!(bareiss_determinant(&id), int(1));
        assert_eq!(h4_simplex().determinant().abs(), int(16));
        let singular = vec![ints(&[1, 2, 3]), ints(&[4, 5, 6]), ints(&[1, 2, 3])];
        assert_eq!(bareiss_determinant(&singular), int(0));
    }

    #[test]
    fn determinant_by_cofactor_oracle() {
        fn cofactor(m: &[Vec<Rational>]) -> Rational {
            if m.len() == 1 {
                return m[0][0].clone();
            }
            let mut acc = Rational::zero();
            for (j, a) in m[0].iter().enumerate() {
                let minor: Vec<Vec<Rational>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = a * cofactor(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
        let m = vec![
            vec![ratio(1, 2), ratio(-3, 4), int(2), int(0)],
            vec![int(5), ratio(1, 3), ratio(-7, 5), int(1)],
            vec![int(0), int(0), ratio(2, 9), int(3)],
            vec![ratio(1, 7), int(4), int(0), ratio(-1, 2)],
        ];
        assert_eq!(bareiss_determinant(&m), cofactor(&m));
        let h = sylvester(2).unwrap();
        let hm: Vec<Vec<Rational>> = h
            .rows()
            .map(|r| r.iter().map(|&v| int(i64::from(v))).collect())
            .collect();
        assert_eq!(cofactor(&hm).abs(), int(16));
    }

    #[test]
    fn hadamard_simplex_vertices() {
        let s = h4_simplex();
        let expected = vec![
            ints(&[1, 1, 1]),
            ints(&[-1, 1, -1]),
            ints(&[-1, -1, 1]),
            ints(&[1, -1, -1]),
        ];
        assert_eq!(s.vertices(), expected.as_slice());
    }

    #[test]
    fn order_one_is_a_point() {
        let s = Simplex::from_hadamard(&sylvester(0).unwrap()).unwrap();
        assert_eq!(s.dimension(), 0);
        assert!(s.vertices()[0].is_empty());
        let ev = LagrangeEvaluator::from_hadamard(&sylvester(0).unwrap()).unwrap();
        assert_eq!(ev.barycentric(&[]).unwrap(), vec![int(1)]);
    }

    #[test]
    fn normalization_required() {
        assert!(matches!(
            Simplex::from_hadamard(&sylvester(2).unwrap()),
            Err(Error::NormalizationRequired)
        ));
    }

    #[test]
    fn segment_polynomials() {
        let s = Simplex::from_integer_vertices(&[vec![-1], vec![1]]).unwrap();
        let ev = LagrangeEvaluator::build(&s).unwrap();
        for x in [ratio(-1, 1), ratio(1, 3), ratio(5, 2)] {
            let l = ev.barycentric(std::slice::from_ref(&x)).unwrap();
            assert_eq!(l[0], (int(1) - &x) / int(2));
            assert_eq!(l[1], (int(1) + &x) / int(2));
        }
    }

    #[test]
    fn h4_barycentric_examples() {
        let s = h4_simplex();
        let ev = LagrangeEvaluator::build(&s).unwrap();
        let l = ev.barycentric(&ints(&[-1, -1, -1])).unwrap();
        assert_eq!(l, vec![ratio(-1, 2), ratio(1, 2), ratio(1, 2), ratio(1, 2)]);
        let c = ev.barycentric(&s.centroid()).unwrap();
        assert!(c.iter().all(|v| *v == ratio(1, 4)));
        for (k, v) in s.vertices().iter().enumerate() {
            let l = ev.barycentric(v).unwrap();
            for (j, lj) in l.iter().enumerate() {
                assert_eq!(*lj, int((j == k) as i64));
            }
        }
    }

    #[test]
    fn fast_path_matches_general_inverse() {
        let h = sylvester(2).unwrap().normalize_last_column();
        let fast = LagrangeEvaluator::from_hadamard(&h).unwrap();
        let general = LagrangeEvaluator::build(&Simplex::from_hadamard(&h).unwrap()).unwrap();
        assert_eq!(fast, general);
        // λ_j(x) = (h^{(j)}, (x, 1))/4
        let x = vec![ratio(1, 3), ratio(-2, 5), int(7)];
        let l = fast.barycentric(&x).unwrap();
        for j in 0..4 {
            let mut y = x.clone();
            y.push(int(1));
            let hj: Vec<Rational> = h.row(j).iter().map(|&v| int(i64::from(v))).collect();
            assert_eq!(l[j], dot(&hj, &y) / int(4));
        }
    }

    #[test]
    fn dimension_mismatch() {
        let ev = LagrangeEvaluator::build(&h4_simplex()).unwrap();
        assert!(matches!(
            ev.barycentric(&ints(&[1, 1])),
            Err(Error::DimensionMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn degenerate_simplex_rejected() {
        let r = Simplex::from_integer_vertices(&[vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert!(matches!(r, Err(Error::Degenerate)));
    }

    #[test]
    fn regularity() {
        let s = h4_simplex();
        assert!(s.is_regular());
        assert!(s.squared_edges().iter().all(|e| *e == int(8)));
        assert_eq!(s.inscribed_edge_relation_holds(), Some(true));
        let mut v = s.vertices().to_vec();
        v[0][0] = ratio(1, 2);
        let p = Simplex::new(v).unwrap();
        assert!(!p.is_regular());
        assert_eq!(p.inscribed_edge_relation_holds(), None);
    }

    #[test]
    fn cube_vertices() {
        let q = Cube::unit(3);
        assert_eq!(q.vertex(0b101), ints(&[1, 0, 1]));
        let s = Cube::symmetric(2);
        assert_eq!(s.vertex(0b10), ints(&[-1, 1]));
        assert!(Cube::new(vec![int(0)], int(0)).is_err());
    }
}
