//! Group elements and the arithmetic context that multiplies them.

use std::fmt;

use super::gf::{Fq, Gf};

/// Square matrix over GF(q), row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    pub dim: usize,
    pub entries: Vec<Fq>,
}

impl Mat {
    pub fn new(dim: usize, entries: Vec<Fq>) -> Mat {
        assert_eq!(entries.len(), dim * dim, "matrix entry count");
        Mat { dim, entries }
    }

    pub fn identity(dim: usize) -> Mat {
        let mut e = vec![0; dim * dim];
        for i in 0..dim {
            e[i * dim + i] = 1;
        }
        Mat { dim, entries: e }
    }

    pub fn scalar(dim: usize, c: Fq) -> Mat {
        let mut m = Mat::identity(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c;
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &Mat, k: &Gf) -> Mat {
        let n = self.dim;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0;
                for t in 0..n {
                    acc = k.add(acc, k.mul(self.get(i, t), other.get(t, j)));
                }
                out[i * n + j] = acc;
            }
        }
        Mat { dim: n, entries: out }
    }

    pub fn det(&self, k: &Gf) -> Fq {
        let (_, d) = self.eliminate(k);
        d
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self, k: &Gf) -> Option<Mat> {
        let (inv, d) = self.eliminate(k);
        (d != 0).then_some(inv)
    }

    fn eliminate(&self, k: &Gf) -> (Mat, Fq) {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut b = Mat::identity(n).entries;
        let mut det = 1;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
                return (Mat::identity(n), 0);
            };
            if piv != col {
                for j in 0..n {
                    a.swap(piv * n + j, col * n + j);
                    b.swap(piv * n + j, col * n + j);
                }
                det = k.neg(det);
            }
            let p = a[col * n + col];
            det = k.mul(det, p);
            let pi = k.inv(p).expect("nonzero pivot");
            for j in 0..n {
                a[col * n + j] = k.mul(a[col * n + j], pi);
                b[col * n + j] = k.mul(b[col * n + j], pi);
            }
            for r in 0..n {
                let f = a[r * n + col];
                if r == col || f == 0 {
                    continue;
                }
                for j in 0..n {
                    a[r * n + j] = k.sub(a[r * n + j], k.mul(f, a[col * n + j]));
                    b[r * n + j] = k.sub(b[r * n + j], k.mul(f, b[col * n + j]));
                }
            }
        }
        (Mat { dim: n, entries: b }, det)
    }

    pub fn transpose(&self) -> Mat {
        let n = self.dim;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.get(i, j);
            }
        }
        Mat { dim: n, entries: out }
    }

    pub fn map(&self, f: impl Fn(Fq) -> Fq) -> Mat {
        Mat { dim: self.dim, entries: self.entries.iter().map(|&x| f(x)).collect() }
    }

    /// Scales so that the first nonzero entry is 1.
    pub fn normalize_projective(&self, k: &Gf) -> Mat {
        let lead = *self.entries.iter().find(|&&x| x != 0).expect("nonzero matrix");
        let s = k.inv(lead).expect("nonzero");
        self.map(|x| k.mul(x, s))
    }

    pub fn is_scalar(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| if i == j { self.get(i, i) == self.get(0, 0) } else { self.get(i, j) == 0 }))
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.entries.chunks(self.dim).collect();
        write!(f, "{rows:?}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GroupElement {
    /// Images of the points `0..n`.
    Perm(Vec<u32>),
    Matrix(Mat),
    /// Matrix modulo scalars, first nonzero entry 1.
    Projective(Mat),
    /// `(A, i)` with product `(A, i)(B, j) = (A·τ^i(B), i + j)`.
    Semilinear {
        mat: Mat,
        power: u32,
    },
}

impl GroupElement {
    pub fn perm_from_cycles(n: usize, cycles: &[&[u32]]) -> GroupElement {
        let mut img: Vec<u32> = (0..n as u32).collect();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                img[x as usize] = c[(i + 1) % c.len()];
            }
        }
        GroupElement::Perm(img)
    }

    pub fn matrix(&self) -> Option<&Mat> {
        match self {
            GroupElement::Perm(_) => None,
            GroupElement::Matrix(m) | GroupElement::Projective(m) => Some(m),
            GroupElement::Semilinear { mat, .. } => Some(mat),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Perm(p) => {
                let mut seen = vec![false; p.len()];
                let mut any = false;
                for s in 0..p.len() {
                    if seen[s] || p[s] as usize == s {
                        continue;
                    }
                    let mut c = vec![s];
                    seen[s] = true;
                    let mut x = p[s] as usize;
                    while x != s {
                        seen[x] = true;
                        c.push(x);
                        x = p[x] as usize;
                    }
                    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    write!(f, "({})", parts.join(","))?;
                    any = true;
                }
                if !any {
                    write!(f, "()")?;
                }
                Ok(())
            }
            GroupElement::Matrix(m) | GroupElement::Projective(m) => write!(f, "{m:?}"),
            GroupElement::Semilinear { mat, power } => write!(f, "({mat:?}, {power})"),
        }
    }
}

/// Field automorphism used by semilinear pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// Entrywise Frobenius `x -> x^p`; period `f`.
    Frobenius,
    /// Frobenius followed by inverse transpose; period 2 over GF(p^2).
    FrobeniusInverseTranspose,
}

#[derive(Clone, Debug)]
pub enum Arith {
    Perm { degree: usize },
    Matrix { field: Gf, dim: usize, projective: bool },
    Semilinear { field: Gf, dim: usize, projective: bool, twist: Twist },
}

impl Arith {
    pub fn identity(&self) -> GroupElement {
        match self {
            Arith::Perm { degree } => GroupElement::Perm((0..*degree as u32).collect()),
            Arith::Matrix { dim, projective, .. } => {
                let m = Mat::identity(*dim);
                if *projective {
                    GroupElement::Projective(m)
                } else {
                    GroupElement::Matrix(m)
                }
            }
            Arith::Semilinear { dim, .. } => GroupElement::Semilinear { mat: Mat::identity(*dim), power: 0 },
        }
    }

    pub fn field(&self) -> Option<&Gf> {
        match self {
            Arith::Perm { .. } => None,
            Arith::Matrix { field, .. } | Arith::Semilinear { field, .. } => Some(field),
        }
    }

    fn period(&self) -> u32 {
        match self {
            Arith::Semilinear { field, twist: Twist::Frobenius, .. } => field.degree(),
            Arith::Semilinear { twist: Twist::FrobeniusInverseTranspose, .. } => 2,
            _ => 1,
        }
    }

    fn twist_once(&self, m: &Mat) -> Mat {
        match self {
            Arith::Semilinear { field, twist, .. } => {
                let fm = m.map(|x| field.frobenius(x));
                match twist {
                    Twist::Frobenius => fm,
                    Twist::FrobeniusInverseTranspose => fm.inverse(field).expect("invertible").transpose(),
                }
            }
            _ => m.clone(),
        }
    }

    /// `τ^i(m)`.
    pub fn twist(&self, m: &Mat, i: u32) -> Mat {
        let mut out = m.clone();
        for _ in 0..i % self.period() {
            out = self.twist_once(&out);
        }
        out
    }

    fn wrap_projective(&self, m: Mat) -> Mat {
        match self {
            Arith::Matrix { field, projective: true, .. } | Arith::Semilinear { field, projective: true, .. } => {
                m.normalize_projective(field)
            }
            _ => m,
        }
    }

    /// Brings an element into canonical form (projective normalisation).
    pub fn canonical(&self, x: GroupElement) -> GroupElement {
        match x {
            GroupElement::Projective(m) => GroupElement::Projective(self.wrap_projective(m)),
            GroupElement::Semilinear { mat, power } => {
                GroupElement::Semilinear { mat: self.wrap_projective(mat), power: power % self.period() }
            }
            other => other,
        }
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        match (self, x, y) {
            (Arith::Perm { .. }, GroupElement::Perm(a), GroupElement::Perm(b)) => {
                GroupElement::Perm(a.iter().map(|&i| b[i as usize]).collect())
            }
            (Arith::Matrix { field, .. }, GroupElement::Matrix(a), GroupElement::Matrix(b)) => {
                GroupElement::Matrix(a.mul(b, field))
            }
            (Arith::Matrix { field, .. }, GroupElement::Projective(a), GroupElement::Projective(b)) => {
                GroupElement::Projective(a.mul(b, field).normalize_projective(field))
            }
            (
                Arith::Semilinear { field, .. },
                GroupElement::Semilinear { mat: a, power: i },
                GroupElement::Semilinear { mat: b, power: j },
            ) => {
                let m = a.mul(&self.twist(b, *i), field);
                GroupElement::Semilinear { mat: self.wrap_projective(m), power: (i + j) % self.period() }
            }
            _ => panic!("element kind does not match its group"),
        }
    }

    pub fn inv(&self, x: &GroupElement) -> GroupElement {
        match (self, x) {
            (Arith::Perm { .. }, GroupElement::Perm(a)) => {
                let mut out = vec![0; a.len()];
                for (i, &v) in a.iter().enumerate() {
                    out[v as usize] = i as u32;
                }
                GroupElement::Perm(out)
            }
            (Arith::Matrix { field, .. }, GroupElement::Matrix(a)) => {
                GroupElement::Matrix(a.inverse(field).expect("invertible"))
            }
            (Arith::Matrix { field, .. }, GroupElement::Projective(a)) => {
                GroupElement::Projective(a.inverse(field).expect("invertible").normalize_projective(field))
            }
            (Arith::Semilinear { field, .. }, GroupElement::Semilinear { mat, power }) => {
                // (A, i)^-1 = (τ^-i(A^-1), -i)
                let per = self.period();
                let back = (per - power % per) % per;
                let m = self.twist(&mat.inverse(field).expect("invertible"), back);
                GroupElement::Semilinear { mat: self.wrap_projective(m), power: back }
            }
            _ => panic!("element kind does not match its group"),
        }
    }

    pub fn pow(&self, x: &GroupElement, e: u64) -> GroupElement {
        let mut result = self.identity();
        let mut base = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    pub fn order(&self, x: &GroupElement) -> u64 {
        let id = self.identity();
        let mut y = x.clone();
        let mut k = 1;
        while y != id {
            y = self.mul(&y, x);
            k += 1;
        }
        k
    }

    pub fn commutator(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(&self.inv(&yx), &xy)
    }
}
