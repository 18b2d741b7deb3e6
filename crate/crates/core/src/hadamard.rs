//! Hadamard matrices: construction, verification, equivalence operations and
//! the `+`/`-` text format.
//!
//! A [`SignMatrix`] is any square matrix of `±1` entries; a [`HadamardMatrix`]
//! is a sign matrix whose rows have been checked to be pairwise orthogonal,
//! i.e. `H·Hᵀ = m·I`. Parsing only produces a sign matrix; orthogonality is
//! checked separately so that a file with the right shape but the wrong
//! contents reports a verification failure rather than a parse error.

use std::fmt;

use crate::error::{Error, Result};

/// Largest Sylvester exponent accepted; `2^24` rows is already far beyond
/// anything the norm scans can use.
pub const MAX_SYLVESTER_EXPONENT: u32 = 24;

/// Square matrix with entries in `{+1, -1}`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl SignMatrix {
    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self>
    where
        T: Copy + Into<i64>,
    {
        let order = rows.len();
        if order == 0 {
            return Err(Error::MalformedMatrix("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::MalformedMatrix(format!(
                    "row {} has {} entries, expected {order}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                match v.into() {
                    1 => entries.push(1),
                    -1 => entries.push(-1),
                    other => {
                        return Err(Error::MalformedMatrix(format!(
                            "entry ({}, {}) is {other}, expected +1 or -1",
                            i + 1,
                            j + 1
                        )))
                    }
                }
            }
        }
        Ok(SignMatrix { order, entries })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Zero-based entry access.
    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> + '_ {
        self.entries.chunks(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.rows()
            .map(|r| r.iter().map(|&v| i64::from(v)).collect())
            .collect()
    }

    fn row_dot(&self, a: usize, b: usize) -> i64 {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(&x, &y)| i64::from(x) * i64::from(y))
            .sum()
    }

    /// `H·Hᵀ = m·I` in exact integer arithmetic.
    pub fn is_hadamard(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.row_dot(a, b) == 0))
    }

    /// Parses the `+`/`-` row format. Whitespace inside a line is ignored and
    /// blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<i8>> = Vec::new();
        let mut first_line = 0;
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let mut row = Vec::new();
            for ch in line.chars().filter(|c| !c.is_whitespace()) {
                match ch {
                    '+' => row.push(1),
                    '-' => row.push(-1),
                    other => {
                        return Err(Error::Parse {
                            line: lineno,
                            message: format!("illegal character {other:?}"),
                        })
                    }
                }
            }
            if row.is_empty() {
                continue;
            }
            if let Some(first) = rows.first() {
                if first.len() != row.len() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!(
                            "row has {} entries but line {first_line} has {}",
                            row.len(),
                            first.len()
                        ),
                    });
                }
            } else {
                first_line = lineno;
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 0,
                message: "no rows".into(),
            });
        }
        if rows.len() != rows[0].len() {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!(
                    "matrix is not square: {} rows of length {}",
                    rows.len(),
                    rows[0].len()
                ),
            });
        }
        let order = rows.len();
        Ok(SignMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// One line per row, `+`/`-` characters, trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = String::with_capacity(self.order * (self.order + 1));
        for row in self.rows() {
            out.extend(row.iter().map(|&v| if v > 0 { '+' } else { '-' }));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignMatrix(order {})", self.order)?;
        f.write_str(&self.serialize())
    }
}

impl fmt::Display for SignMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Checks an arbitrary integer matrix: malformed input (non-square, entries
/// other than `±1`) is an error, otherwise returns whether `H·Hᵀ = m·I`.
pub fn verify<T>(rows: &[Vec<T>]) -> Result<bool>
where
    T: Copy + Into<i64>,
{
    Ok(SignMatrix::from_rows(rows)?.is_hadamard())
}

/// One of the four operations generating Hadamard equivalence. Indices are
/// one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EquivalenceOp {
    NegateRow(usize),
    NegateCol(usize),
    SwapRows(usize, usize),
    SwapCols(usize, usize),
}

/// A sign matrix with pairwise orthogonal rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HadamardMatrix(SignMatrix);

impl HadamardMatrix {
    pub fn new(matrix: SignMatrix) -> Result<Self> {
        if !matrix.is_hadamard() {
            return Err(Error::InvariantViolation(format!(
                "order-{} matrix has non-orthogonal rows",
                matrix.order()
            )));
        }
        Ok(HadamardMatrix(matrix))
    }

    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self>
    where
        T: Copy + Into<i64>,
    {
        Self::new(SignMatrix::from_rows(rows)?)
    }

    /// Parses the text format and verifies orthogonality.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(SignMatrix::parse(text)?)
    }

    pub fn serialize(&self) -> String {
        self.0.serialize()
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.0.get(row, col)
    }

    pub fn row(&self, row: usize) -> &[i8] {
        self.0.row(row)
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> + '_ {
        self.0.rows()
    }

    pub fn as_sign_matrix(&self) -> &SignMatrix {
        &self.0
    }

    pub fn into_sign_matrix(self) -> SignMatrix {
        self.0
    }

    pub fn has_unit_last_column(&self) -> bool {
        let m = self.order();
        (0..m).all(|i| self.get(i, m - 1) == 1)
    }

    pub fn apply_op(&self, op: EquivalenceOp) -> Result<Self> {
        let m = self.order();
        let check = |i: usize| {
            if i == 0 || i > m {
                Err(Error::IndexOutOfRange { index: i, order: m })
            } else {
                Ok(i - 1)
            }
        };
        let distinct = |a: usize, b: usize| {
            if a == b {
                Err(Error::InvalidParameter(format!(
                    "swap indices must differ (both {a})"
                )))
            } else {
                Ok(())
            }
        };
        let mut entries = self.0.entries.clone();
        match op {
            EquivalenceOp::NegateRow(r) => {
                let r = check(r)?;
                entries[r * m..(r + 1) * m].iter_mut().for_each(|v| *v = -*v);
            }
            EquivalenceOp::NegateCol(c) => {
                let c = check(c)?;
                (0..m).for_each(|i| entries[i * m + c] = -entries[i * m + c]);
            }
            EquivalenceOp::SwapRows(a, b) => {
                let (a, b) = (check(a)?, check(b)?);
                distinct(a + 1, b + 1)?;
                for j in 0..m {
                    entries.swap(a * m + j, b * m + j);
                }
            }
            EquivalenceOp::SwapCols(a, b) => {
                let (a, b) = (check(a)?, check(b)?);
                distinct(a + 1, b + 1)?;
                for i in 0..m {
                    entries.swap(i * m + a, i * m + b);
                }
            }
        }
        Ok(HadamardMatrix(SignMatrix { order: m, entries }))
    }

    /// Negates every row whose last entry is `-1`, so that the matrix becomes
    /// the vertex matrix of a simplex inscribed in `[-1, 1]^n`.
    pub fn normalize_last_column(&self) -> Self {
        let m = self.order();
        let mut entries = self.0.entries.clone();
        for row in entries.chunks_mut(m) {
            if row[m - 1] < 0 {
                row.iter_mut().for_each(|v| *v = -*v);
            }
        }
        HadamardMatrix(SignMatrix { order: m, entries })
    }
}

impl fmt::Debug for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HadamardMatrix(order {})", self.order())?;
        f.write_str(&self.serialize())
    }
}

impl fmt::Display for HadamardMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Sylvester doubling `H_{2m} = [[H, H], [H, -H]]`, order `2^k`.
pub fn sylvester(k: u32) -> Result<HadamardMatrix> {
    if k > MAX_SYLVESTER_EXPONENT {
        return Err(Error::Capacity(format!(
            "Sylvester exponent {k} exceeds {MAX_SYLVESTER_EXPONENT}"
        )));
    }
    let mut order = 1usize;
    let mut entries: Vec<i8> = vec![1];
    for _ in 0..k {
        let next = order * 2;
        let mut doubled = vec![0i8; next * next];
        for i in 0..order {
            for j in 0..order {
                let v = entries[i * order + j];
                doubled[i * next + j] = v;
                doubled[i * next + j + order] = v;
                doubled[(i + order) * next + j] = v;
                doubled[(i + order) * next + j + order] = -v;
            }
        }
        order = next;
        entries = doubled;
    }
    Ok(HadamardMatrix(SignMatrix { order, entries }))
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Paley construction I for a prime `q ≡ 3 (mod 4)`, order `q + 1`.
///
/// With the Jacobsthal matrix `Q_ij = χ(j - i)` (χ the quadratic character
/// mod `q`), the bordered skew matrix `S = [[0, 1ᵀ], [-1, Q]]` satisfies
/// `S·Sᵀ = q·I` and `Sᵀ = -S`, so `H = I + S` is Hadamard.
pub fn paley(q: u64) -> Result<HadamardMatrix> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(Error::InvalidParameter(format!(
            "Paley I needs a prime q ≡ 3 (mod 4), got {q}"
        )));
    }
    let q = q as usize;
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    let chi = |a: usize| -> i8 {
        if a == 0 {
            0
        } else if residue[a] {
            1
        } else {
            -1
        }
    };
    let m = q + 1;
    let mut entries = vec![0i8; m * m];
    for j in 1..m {
        entries[j] = 1;
        entries[j * m] = -1;
    }
    for i in 0..q {
        for j in 0..q {
            entries[(i + 1) * m + j + 1] = chi((j + q - i) % q);
        }
    }
    for i in 0..m {
        entries[i * m + i] += 1;
    }
    HadamardMatrix::new(SignMatrix { order: m, entries })
}

/// Smallest construction available here for order `m`: Sylvester for powers
/// of two, Paley I for `m - 1` prime `≡ 3 (mod 4)`.
pub fn construct(order: usize) -> Result<HadamardMatrix> {
    if order.is_power_of_two() {
        return sylvester(order.trailing_zeros());
    }
    if order >= 4 {
        let q = (order - 1) as u64;
        if is_prime(q) && q % 4 == 3 {
            return paley(q);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no built-in construction for order {order}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gram_is_scaled_identity(h: &HadamardMatrix) -> bool {
        let m = h.order();
        (0..m).all(|a| {
            (0..m).all(|b| {
                let d: i64 = (0..m)
                    .map(|k| i64::from(h.get(a, k)) * i64::from(h.get(b, k)))
                    .sum();
                d == if a == b { m as i64 } else { 0 }
            })
        })
    }

    #[test]
    fn sylvester_base_cases() {
        assert_eq!(sylvester(0).unwrap().serialize(), "+\n");
        assert_eq!(sylvester(1).unwrap().serialize(), "++\n+-\n");
    }

    #[test]
    fn sylvester_16_gram() {
        let h = sylvester(4).unwrap();
        assert_eq!(h.order(), 16);
        assert!(gram_is_scaled_identity(&h));
    }

    #[test]
    fn sylvester_capacity() {
        assert!(matches!(sylvester(25), Err(Error::Capacity(_))));
    }

    #[test]
    fn paley_orders() {
        for q in [3u64, 7, 11, 19, 23, 31, 43] {
            let h = paley(q).unwrap();
            assert_eq!(h.order(), q as usize + 1);
            assert!(gram_is_scaled_identity(&h), "q = {q}");
        }
    }

    #[test]
    fn paley_rejects_bad_q() {
        for q in [5u64, 9, 13, 15, 1, 0, 2] {
            assert!(matches!(paley(q), Err(Error::InvalidParameter(_))), "q = {q}");
        }
    }

    #[test]
    fn verify_examples() {
        assert!(verify(&[vec![1i32]]).unwrap());
        assert!(!verify(&[vec![1i32, 1], vec![1, 1]]).unwrap());
        assert!(verify(&sylvester(2).unwrap().as_sign_matrix().to_rows()).unwrap());
        assert!(matches!(
            verify(&[vec![1i32, 1], vec![1]]),
            Err(Error::MalformedMatrix(_))
        ));
        assert!(matches!(
            verify(&[vec![1i32, 0], vec![1, 1]]),
            Err(Error::MalformedMatrix(_))
        ));
    }

    #[test]
    fn swap_rows_of_order_two() {
        let h = sylvester(1).unwrap();
        let s = h.apply_op(EquivalenceOp::SwapRows(1, 2)).unwrap();
        assert_eq!(s.serialize(), "+-\n++\n");
        assert!(s.as_sign_matrix().is_hadamard());
    }

    #[test]
    fn negate_row_is_involution() {
        let h = sylvester(3).unwrap();
        let twice = h
            .apply_op(EquivalenceOp::NegateRow(1))
            .unwrap()
            .apply_op(EquivalenceOp::NegateRow(1))
            .unwrap();
        assert_eq!(twice, h);
    }

    #[test]
    fn op_index_errors() {
        let h = sylvester(2).unwrap();
        assert!(matches!(
            h.apply_op(EquivalenceOp::NegateCol(5)),
            Err(Error::IndexOutOfRange { index: 5, order: 4 })
        ));
        assert!(matches!(
            h.apply_op(EquivalenceOp::NegateRow(0)),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            h.apply_op(EquivalenceOp::SwapCols(2, 2)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn normalize_sylvester_4() {
        let h = sylvester(2).unwrap();
        let last: Vec<i8> = (0..4).map(|i| h.get(i, 3)).collect();
        assert_eq!(last, vec![1, -1, -1, 1]);
        let n = h.normalize_last_column();
        assert!(n.has_unit_last_column());
        assert_eq!(n.row(0), h.row(0));
        assert_eq!(n.row(3), h.row(3));
        for r in [1, 2] {
            let neg: Vec<i8> = h.row(r).iter().map(|v| -v).collect();
            assert_eq!(n.row(r), neg.as_slice());
        }
        assert!(n.as_sign_matrix().is_hadamard());
        assert_eq!(n.normalize_last_column(), n);
    }

    #[test]
    fn normalize_fixed_point() {
        let h = paley(7).unwrap().normalize_last_column();
        assert_eq!(h.normalize_last_column(), h);
    }

    #[test]
    fn parse_examples() {
        let one = SignMatrix::parse("+\n").unwrap();
        assert_eq!(one.order(), 1);
        let two = HadamardMatrix::parse("++\n+-\n").unwrap();
        assert_eq!(two, sylvester(1).unwrap());
        let spaced = HadamardMatrix::parse("\n + + \n\n + - \n").unwrap();
        assert_eq!(spaced, two);
        let p = paley(3).unwrap();
        assert_eq!(HadamardMatrix::parse(&p.serialize()).unwrap(), p);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match SignMatrix::parse("++\n+x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match SignMatrix::parse("++\n\n+-+\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            SignMatrix::parse("++\n+-\n++\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(SignMatrix::parse("  \n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn parse_does_not_verify() {
        let m = SignMatrix::parse("++\n++\n").unwrap();
        assert!(!m.is_hadamard());
        assert!(matches!(
            HadamardMatrix::new(m),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn construct_dispatch() {
        assert_eq!(construct(16).unwrap(), sylvester(4).unwrap());
        assert_eq!(construct(12).unwrap(), paley(11).unwrap());
        assert!(construct(20).is_ok());
        assert!(construct(28).is_err());
    }
}
