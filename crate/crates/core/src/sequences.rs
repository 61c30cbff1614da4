//! The two (4,1)-recurrences `x_n = 4 x_{n-1} - x_{n-2}` that drive every
//! closed form in this crate, their Binet forms over Q(sqrt 3), and the
//! identities relating them.
//!
//! `a_n`: 1, 1, 3, 11, 41, 153, ...  (OEIS A001835)
//! `s_n`: 0, 1, 4, 15, 56, 209, ...  (OEIS A001353)

use std::fmt;
use std::ops::{Add, Mul, Neg, RangeInclusive, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeqKind {
    /// `(a_0, a_1) = (1, 1)`
    A,
    /// `(s_0, s_1) = (0, 1)`
    S,
}

impl SeqKind {
    fn initial(self) -> (i64, i64) {
        match self {
            SeqKind::A => (1, 1),
            SeqKind::S => (0, 1),
        }
    }
}

/// First `len` terms of the sequence.
pub fn seq_terms(kind: SeqKind, len: usize) -> Vec<BigInt> {
    let (x0, x1) = kind.initial();
    let mut out: Vec<BigInt> = Vec::with_capacity(len);
    for i in 0..len {
        let next = match i {
            0 => BigInt::from(x0),
            1 => BigInt::from(x1),
            _ => &out[i - 1] * 4u32 - &out[i - 2],
        };
        out.push(next);
    }
    out
}

pub fn seq_value(kind: SeqKind, n: usize) -> BigInt {
    let (x0, x1) = kind.initial();
    let (mut prev, mut cur) = (BigInt::from(x0), BigInt::from(x1));
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &cur * 4u32 - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Both sequences tabulated up to a fixed index, for formulas that touch many
/// terms at once.
#[derive(Debug, Clone)]
pub struct SeqTable {
    a: Vec<BigInt>,
    s: Vec<BigInt>,
}

impl SeqTable {
    /// Holds `a_0..=a_max` and `s_0..=s_max`.
    pub fn new(max: usize) -> Self {
        SeqTable {
            a: seq_terms(SeqKind::A, max + 1),
            s: seq_terms(SeqKind::S, max + 1),
        }
    }

    pub fn a(&self, i: usize) -> &BigInt {
        &self.a[i]
    }

    pub fn s(&self, i: usize) -> &BigInt {
        &self.s[i]
    }

    pub fn max_index(&self) -> usize {
        self.a.len() - 1
    }
}

/// `rational + root3 * sqrt(3)` with both parts in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    pub rational: BigRational,
    pub root3: BigRational,
}

impl QuadExt {
    pub fn new(rational: BigRational, root3: BigRational) -> Self {
        QuadExt { rational, root3 }
    }

    pub fn from_ints(rational: i64, root3: i64) -> Self {
        QuadExt::new(
            BigRational::from_integer(rational.into()),
            BigRational::from_integer(root3.into()),
        )
    }

    pub fn one() -> Self {
        QuadExt::from_ints(1, 0)
    }

    /// `2 + sqrt 3`
    pub fn lambda() -> Self {
        QuadExt::from_ints(2, 1)
    }

    /// `2 - sqrt 3`, the inverse of [`QuadExt::lambda`].
    pub fn lambda_inv() -> Self {
        QuadExt::from_ints(2, -1)
    }

    /// True when the value is an ordinary integer.
    pub fn is_integral(&self) -> bool {
        self.root3.is_zero() && self.rational.is_integer()
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = QuadExt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.root3.is_negative() {
            write!(f, "{} - {}*sqrt3", self.rational, -&self.root3)
        } else {
            write!(f, "{} + {}*sqrt3", self.rational, self.root3)
        }
    }
}

impl<'a> Add<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.rational + &rhs.rational, &self.root3 + &rhs.root3)
    }
}

impl<'a> Sub<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.rational - &rhs.rational, &self.root3 - &rhs.root3)
    }
}

impl<'a> Mul<&'a QuadExt> for &'a QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        let three = BigRational::from_integer(3.into());
        QuadExt::new(
            &self.rational * &rhs.rational + three * &self.root3 * &rhs.root3,
            &self.rational * &rhs.root3 + &self.root3 * &rhs.rational,
        )
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-self.rational, -self.root3)
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Binet coefficients `(alpha, beta)` with `x_n = alpha λ^n + beta λ^-n`.
pub fn binet_constants(kind: SeqKind) -> (QuadExt, QuadExt) {
    match kind {
        SeqKind::A => (
            QuadExt::new(ratio(1, 2), ratio(-1, 6)),
            QuadExt::new(ratio(1, 2), ratio(1, 6)),
        ),
        SeqKind::S => (
            QuadExt::new(BigRational::zero(), ratio(1, 6)),
            QuadExt::new(BigRational::zero(), ratio(-1, 6)),
        ),
    }
}

pub fn binet_value(kind: SeqKind, n: u64) -> QuadExt {
    let (alpha, beta) = binet_constants(kind);
    let up = &alpha * &QuadExt::lambda().pow(n);
    let down = &beta * &QuadExt::lambda_inv().pow(n);
    &up + &down
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `s_n = a_1 + ... + a_n`
    Sum,
    /// `2 s_n = a_{n+1} - a_n`
    DoubleS,
    /// `a_{n+1} - a_n = a_{k+1} a_{n-k+1} - a_k a_{n-k}`
    Convolution,
    /// `s_n = a_k s_{n-k} + a_{n-k+1} s_k`
    Split,
    /// `(a_{n+1} + a_n)^2 = 3 (a_{n+1} - a_n)^2 + 4`
    Square,
    /// `sum_{i+j=n+1} a_i a_j = (n(a_{n+1}+a_n) + (a_{n+1}-a_n))/6 = ((n+1)s_n + n a_n)/3`
    WeightedSum,
    /// `n = 2k+1`: `(a_{n+1}+a_n-2)/(a_{n+1}-a_n) = (s_{k+1}+s_k)/(s_{k+1}-s_k)`
    FactorOdd,
    /// `n = 2k`: `(a_{n+1}+a_n-2)/(a_{n+1}-a_n) = (s_{k+1}+2s_k+s_{k-1})/(s_{k+1}-s_{k-1})`
    FactorEven,
}

impl IdentityId {
    pub const ALL: [IdentityId; 8] = [
        IdentityId::Sum,
        IdentityId::DoubleS,
        IdentityId::Convolution,
        IdentityId::Split,
        IdentityId::Square,
        IdentityId::WeightedSum,
        IdentityId::FactorOdd,
        IdentityId::FactorEven,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Sum => "sum",
            IdentityId::DoubleS => "double-s",
            IdentityId::Convolution => "convolution",
            IdentityId::Split => "split",
            IdentityId::Square => "square",
            IdentityId::WeightedSum => "weighted-sum",
            IdentityId::FactorOdd => "factor-odd",
            IdentityId::FactorEven => "factor-even",
        }
    }

    /// Whether the identity takes a second index `k`.
    pub fn takes_k(self) -> bool {
        matches!(self, IdentityId::Convolution | IdentityId::Split)
    }

    /// Every admissible `k` for this `n`; empty when `n` is outside the
    /// identity's domain. `None` means the identity has no free `k`.
    pub fn cases(self, n: usize) -> Vec<Option<usize>> {
        match self {
            IdentityId::Convolution | IdentityId::Split => (0..=n).map(Some).collect(),
            IdentityId::FactorOdd if n.is_multiple_of(2) => Vec::new(),
            IdentityId::FactorEven if n % 2 == 1 || n == 0 => Vec::new(),
            _ => vec![None],
        }
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity `{s}`")))
    }
}

/// Outcome of checking one identity over a range of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySweep {
    pub id: IdentityId,
    pub cases: usize,
    /// First `(n, k)` where the two sides differ.
    pub first_failure: Option<(usize, Option<usize>)>,
}

impl IdentitySweep {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn sweep_identity(id: IdentityId, ns: RangeInclusive<usize>) -> Result<IdentitySweep> {
    let mut cases = 0;
    for n in ns {
        for k in id.cases(n) {
            cases += 1;
            if !check_identity(id, n, k)? {
                return Ok(IdentitySweep {
                    id,
                    cases,
                    first_failure: Some((n, k)),
                });
            }
        }
    }
    Ok(IdentitySweep {
        id,
        cases,
        first_failure: None,
    })
}

/// Whether the Binet form at `n` is the integer the recurrence gives.
pub fn binet_matches(kind: SeqKind, n: usize) -> bool {
    quad_equals_int(&binet_value(kind, n as u64), &seq_value(kind, n))
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn frac(num: BigInt, den: BigInt) -> Result<BigRational> {
    if den.is_zero() {
        return Err(Error::domain("zero denominator in identity evaluation"));
    }
    Ok(BigRational::new(num, den))
}

/// Evaluates both sides of `id` exactly and reports whether they agree.
///
/// `k` is required for `Convolution` and `Split`. For `FactorOdd` and
/// `FactorEven` it may be omitted and is then derived from `n`.
pub fn check_identity(id: IdentityId, n: usize, k: Option<usize>) -> Result<bool> {
    let k = match id {
        IdentityId::Convolution | IdentityId::Split => {
            let k = k.ok_or_else(|| Error::domain(format!("{id} requires k")))?;
            if k > n {
                return Err(Error::domain(format!(
                    "{id} requires k <= n, got k={k}, n={n}"
                )));
            }
            k
        }
        IdentityId::FactorOdd => {
            if n.is_multiple_of(2) {
                return Err(Error::domain(format!(
                    "{id} requires odd n = 2k+1, got n={n}"
                )));
            }
            let derived = (n - 1) / 2;
            match k {
                Some(k) if k != derived => {
                    return Err(Error::domain(format!(
                        "{id} requires n = 2k+1, got n={n}, k={k}"
                    )))
                }
                _ => derived,
            }
        }
        IdentityId::FactorEven => {
            if n % 2 == 1 || n < 2 {
                return Err(Error::domain(format!(
                    "{id} requires even n = 2k with k >= 1, got n={n}"
                )));
            }
            let derived = n / 2;
            match k {
                Some(k) if k != derived => {
                    return Err(Error::domain(format!(
                        "{id} requires n = 2k, got n={n}, k={k}"
                    )))
                }
                _ => derived,
            }
        }
        _ => 0,
    };

    let t = SeqTable::new(n + 1);
    let a = |i: usize| t.a(i).clone();
    let s = |i: usize| t.s(i).clone();

    let holds = match id {
        IdentityId::Sum => {
            let total: BigInt = (1..=n).map(&a).sum();
            s(n) == total
        }
        IdentityId::DoubleS => s(n) * 2 == a(n + 1) - a(n),
        IdentityId::Convolution => a(n + 1) - a(n) == a(k + 1) * a(n - k + 1) - a(k) * a(n - k),
        IdentityId::Split => s(n) == a(k) * s(n - k) + a(n - k + 1) * s(k),
        IdentityId::Square => {
            let plus = a(n + 1) + a(n);
            let minus = a(n + 1) - a(n);
            &plus * &plus == BigInt::from(3) * &minus * &minus + 4
        }
        IdentityId::WeightedSum => {
            let conv: BigInt = (1..=n).map(|i| a(i) * a(n + 1 - i)).sum();
            let conv = BigRational::from_integer(conv);
            let nn = BigInt::from(n);
            let first = frac(&nn * (a(n + 1) + a(n)) + (a(n + 1) - a(n)), 6.into())?;
            let second = frac((&nn + 1) * s(n) + &nn * a(n), 3.into())?;
            conv == first && conv == second
        }
        IdentityId::FactorOdd => {
            let lhs = frac(a(n + 1) + a(n) - 2, a(n + 1) - a(n))?;
            let rhs = frac(s(k + 1) + s(k), s(k + 1) - s(k))?;
            lhs == rhs
        }
        IdentityId::FactorEven => {
            let lhs = frac(a(n + 1) + a(n) - 2, a(n + 1) - a(n))?;
            let rhs = frac(s(k + 1) + s(k) * 2 + s(k - 1), s(k + 1) - s(k - 1))?;
            lhs == rhs
        }
    };
    Ok(holds)
}

/// Whether `x` is the integer `expected`.
pub fn quad_equals_int(x: &QuadExt, expected: &BigInt) -> bool {
    x.is_integral() && x.rational.numer() == expected && x.rational.denom().is_one()
}
