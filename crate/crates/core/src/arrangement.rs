//! Regions of the arrangements `B_n = {x_i, x_i ± x_j}` and `H_n = {x_i, x_i + x_j}`
//! cut by the affine slice `P = {l_1 x_1 + ... + l_n x_n = 1}` with
//! `l_1 >> l_2 >> ... >> l_n > 0`.
//!
//! A region of `B_n` is indexed by a signed permutation `(a, σ)`:
//! `|x_{a_1}| > ... > |x_{a_n}|` and `sgn x_i = σ(i)`. It is the open cone on
//! `v_i = σ(a_1) e_{a_1} + ... + σ(a_i) e_{a_i}`, so its slice is decided by
//! the signs of `f(v_i)`. A region of `H_n` is indexed by an ordered
//! partition and an orientation, and is the union of the `B_n` regions that
//! refine it.
//!
//! Everything here is exact; there is no floating point.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use thiserror::Error;

use crate::enumerate::{ordered_partitions, signed_permutations, DEFAULT_LIMIT};
use crate::maps::signed_to_partition;
use crate::objects::{OrderedPartition, Sign, SignedPermutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("point is not generic: {0}")]
    NonGenericPoint(String),
    #[error("weights are not dominant: {0}")]
    NotDominant(String),
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("certificate rejected: {0}")]
    InvalidCertificate(String),
}

/// Positive integer weights with `l_i > l_{i+1} + ... + l_n` for every `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LWeights {
    l: Vec<BigInt>,
}

impl LWeights {
    pub fn new(l: Vec<BigInt>) -> Result<Self, ArrangementError> {
        let mut tail = BigInt::zero();
        for (i, li) in l.iter().enumerate().rev() {
            if !li.is_positive() {
                return Err(ArrangementError::NotDominant(format!("l_{} = {li} is not positive", i + 1)));
            }
            if *li <= tail {
                return Err(ArrangementError::NotDominant(format!(
                    "l_{} = {li} does not exceed the tail sum {tail}",
                    i + 1
                )));
            }
            tail += li;
        }
        Ok(LWeights { l })
    }

    pub fn n(&self) -> usize {
        self.l.len()
    }

    pub fn values(&self) -> &[BigInt] {
        &self.l
    }

    /// `f(x) = l_1 x_1 + ... + l_n x_n` on a rational point.
    pub fn eval(&self, x: &[BigRational]) -> Result<BigRational, ArrangementError> {
        self.check_dim(x.len())?;
        Ok(self
            .l
            .iter()
            .zip(x)
            .fold(BigRational::zero(), |acc, (l, xi)| acc + BigRational::from_integer(l.clone()) * xi))
    }

    /// `f(v)` on an integer vector.
    pub fn eval_int(&self, v: &[i64]) -> Result<BigInt, ArrangementError> {
        self.check_dim(v.len())?;
        Ok(self.l.iter().zip(v).map(|(l, &vi)| l * vi).sum())
    }

    fn check_dim(&self, found: usize) -> Result<(), ArrangementError> {
        if found == self.n() {
            Ok(())
        } else {
            Err(ArrangementError::DimensionMismatch { expected: self.n(), found })
        }
    }
}

/// `l_i = 2^(n-i)`.
pub fn default_weights(n: usize) -> LWeights {
    let l = (1..=n).map(|i| BigInt::one() << (n - i)).collect();
    LWeights::new(l).expect("powers of two dominate their tails")
}

/// Random dominant weights: `l_n` and each gap `l_i - (l_{i+1} + ... + l_n)`
/// drawn uniformly from `1..=max_gap`.
pub fn random_weights<R: Rng + ?Sized>(n: usize, max_gap: u32, rng: &mut R) -> LWeights {
    let mut l = vec![BigInt::zero(); n];
    let mut tail = BigInt::zero();
    for i in (0..n).rev() {
        l[i] = &tail + BigInt::from(rng.random_range(1..=max_gap.max(1)));
        tail += &l[i];
    }
    LWeights::new(l).expect("constructed dominant")
}

/// The generators `v_1, ..., v_n` of the cone of a `B_n` region.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeGenerators {
    vectors: Vec<Vec<i64>>,
}

impl ConeGenerators {
    pub fn vectors(&self) -> &[Vec<i64>] {
        &self.vectors
    }
}

pub fn cone_generators(s: &SignedPermutation) -> ConeGenerators {
    let n = s.n();
    let mut v = vec![0i64; n];
    let vectors = s
        .entries()
        .iter()
        .map(|&(a, sign)| {
            v[a - 1] = sign.as_i64();
            v.clone()
        })
        .collect();
    ConeGenerators { vectors }
}

/// `f(v_1), ..., f(v_n)`.
///
/// Under dominant weights the sign of `f(v_i)` is the sign of the smallest
/// value among `a_1, ..., a_i`; this is checked.
pub fn f_values(w: &LWeights, g: &ConeGenerators) -> Result<Vec<BigInt>, ArrangementError> {
    let values = g.vectors.iter().map(|v| w.eval_int(v)).collect::<Result<Vec<_>, _>>()?;
    for (i, (f, v)) in values.iter().zip(&g.vectors).enumerate() {
        // smallest coordinate index touched by v_i
        let min_sign = v.iter().find(|&&c| c != 0).copied().unwrap_or(0);
        assert_eq!(
            f.signum(),
            BigInt::from(min_sign),
            "sign identity fails at v_{}; weights are not dominant",
            i + 1
        );
    }
    Ok(values)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionClass {
    Bounded,
    Empty,
    Unbounded,
}

impl fmt::Display for RegionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RegionClass::Bounded => "bounded",
            RegionClass::Empty => "empty",
            RegionClass::Unbounded => "unbounded",
        })
    }
}

/// Exact evidence for a region classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The slice is the simplex on these vertices `v_i / f(v_i)`.
    BoundedSimplex { vertices: Vec<Vec<BigRational>> },
    /// `f` is negative on every generator, hence on the whole cone.
    EmptyWitness { f_values: Vec<BigInt> },
    /// The slice contains `base + t * direction` for all `t >= 0`.
    UnboundedRay { base: Vec<BigRational>, direction: Vec<BigInt> },
}

fn fmt_vec<T: fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::BoundedSimplex { vertices } => {
                writeln!(f, "certificate: simplex")?;
                for (i, v) in vertices.iter().enumerate() {
                    writeln!(f, "vertex {}: {}", i + 1, fmt_vec(v))?;
                }
                Ok(())
            }
            Certificate::EmptyWitness { f_values } => {
                writeln!(f, "certificate: empty")?;
                writeln!(f, "f-values: {}", fmt_vec(f_values))
            }
            Certificate::UnboundedRay { base, direction } => {
                writeln!(f, "certificate: ray")?;
                writeln!(f, "base: {}", fmt_vec(base))?;
                writeln!(f, "direction: {}", fmt_vec(direction))
            }
        }
    }
}

/// Classification read off the signs of the left-to-right minima.
pub fn classify_b_region(s: &SignedPermutation) -> RegionClass {
    if s.all_minima_positive() {
        RegionClass::Bounded
    } else if s.all_minima_negative() {
        RegionClass::Empty
    } else {
        RegionClass::Unbounded
    }
}

fn scaled(v: &[i64], f: &BigInt) -> Vec<BigRational> {
    v.iter().map(|&c| BigRational::new(BigInt::from(c), f.clone())).collect()
}

/// Classification computed only from the signs of `f(v_i)`, with a certificate.
///
/// Ray certificates use the smallest `i` with `f(v_i) > 0` and the smallest
/// `j` with `f(v_j) < 0`: base `v_i / f(v_i)`, direction `f(v_i) v_j - f(v_j) v_i`.
pub fn classify_b_region_geometric(
    w: &LWeights,
    s: &SignedPermutation,
) -> Result<(RegionClass, Certificate), ArrangementError> {
    w.check_dim(s.n())?;
    let g = cone_generators(s);
    let fv = f_values(w, &g)?;
    let pos = fv.iter().position(|f| f.is_positive());
    let neg = fv.iter().position(|f| f.is_negative());
    Ok(match (pos, neg) {
        (_, None) => {
            let vertices = g.vectors.iter().zip(&fv).map(|(v, f)| scaled(v, f)).collect();
            (RegionClass::Bounded, Certificate::BoundedSimplex { vertices })
        }
        (None, Some(_)) => (RegionClass::Empty, Certificate::EmptyWitness { f_values: fv }),
        (Some(i), Some(j)) => {
            let (fi, fj) = (&fv[i], &fv[j]);
            let direction = g.vectors[j]
                .iter()
                .zip(&g.vectors[i])
                .map(|(&vj, &vi)| fi * vj - fj * vi)
                .collect();
            let base = scaled(&g.vectors[i], fi);
            (RegionClass::Unbounded, Certificate::UnboundedRay { base, direction })
        }
    })
}

/// Whether `x` lies in the closure of the `B_n` region of `s`:
/// `σ(a_1) x_{a_1} >= ... >= σ(a_n) x_{a_n} >= 0`.
pub fn b_region_closure_contains(s: &SignedPermutation, x: &[BigRational]) -> bool {
    chain(s, x).windows(2).all(|w| w[0] >= w[1]) && chain(s, x).last().is_none_or(|y| !y.is_negative())
}

/// Whether `x` lies in the open `B_n` region of `s`.
pub fn b_region_contains(s: &SignedPermutation, x: &[BigRational]) -> bool {
    let y = chain(s, x);
    y.windows(2).all(|w| w[0] > w[1]) && y.last().is_none_or(|v| v.is_positive())
}

fn chain(s: &SignedPermutation, x: &[BigRational]) -> Vec<BigRational> {
    s.entries()
        .iter()
        .map(|&(a, sign)| if sign.is_plus() { x[a - 1].clone() } else { -x[a - 1].clone() })
        .collect()
}

/// Checks a certificate against the region of `s` in exact arithmetic.
pub fn validate_certificate(
    w: &LWeights,
    s: &SignedPermutation,
    cert: &Certificate,
) -> Result<(), ArrangementError> {
    let n = s.n();
    w.check_dim(n)?;
    let bad = |msg: String| Err(ArrangementError::InvalidCertificate(msg));
    match cert {
        Certificate::BoundedSimplex { vertices } => {
            if vertices.len() != n {
                return bad(format!("{} vertices for dimension {n}", vertices.len()));
            }
            for (i, v) in vertices.iter().enumerate() {
                if w.eval(v)? != BigRational::one() {
                    return bad(format!("vertex {} is off the slice", i + 1));
                }
                if !b_region_closure_contains(s, v) {
                    return bad(format!("vertex {} is outside the region closure", i + 1));
                }
            }
        }
        Certificate::EmptyWitness { f_values: fv } => {
            let expected = f_values(w, &cone_generators(s))?;
            if *fv != expected {
                return bad("f-values do not match the generators".into());
            }
            if !fv.iter().all(Signed::is_negative) {
                return bad("some f-value is not negative".into());
            }
        }
        Certificate::UnboundedRay { base, direction } => {
            w.check_dim(base.len())?;
            w.check_dim(direction.len())?;
            let dir: Vec<BigRational> = direction.iter().cloned().map(BigRational::from_integer).collect();
            if direction.iter().all(Zero::is_zero) {
                return bad("zero direction".into());
            }
            if w.eval(base)? != BigRational::one() {
                return bad("base is off the slice".into());
            }
            if !w.eval(&dir)?.is_zero() {
                return bad("direction leaves the slice".into());
            }
            let tip: Vec<BigRational> = base.iter().zip(&dir).map(|(b, d)| b + d).collect();
            if !b_region_closure_contains(s, base) || !b_region_closure_contains(s, &tip) {
                return bad("ray leaves the region closure".into());
            }
        }
    }
    Ok(())
}

/// Symbolic description of an `H_n` region `R+` or `R-`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRegion {
    pub partition: OrderedPartition,
    pub orientation: Sign,
}

impl HRegion {
    /// Required sign of `x_i` (index 1-based) in this region.
    pub fn sign_of(&self, i: usize) -> Sign {
        let block = self.partition.block_of(i).expect("coordinate in [n]");
        Sign::of_location(block) * self.orientation
    }

    /// Strict membership: coordinate signs, and `|x_u| > |x_v|` for `u` in a
    /// block and `v` in the next block.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        let n = self.partition.n();
        if x.len() != n {
            return false;
        }
        let signs_ok = (1..=n).all(|i| match self.sign_of(i) {
            Sign::Plus => x[i - 1].is_positive(),
            Sign::Minus => x[i - 1].is_negative(),
        });
        signs_ok
            && self.partition.blocks().windows(2).all(|pair| {
                pair[0].iter().all(|&u| pair[1].iter().all(|&v| x[u - 1].abs() > x[v - 1].abs()))
            })
    }
}

impl fmt::Display for HRegion {
    /// Inequalities in the style `x_1>0,x_2<0,|x_1|>|x_2|`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.partition.n();
        let mut parts: Vec<String> = (1..=n)
            .map(|i| format!("x_{i}{}0", if self.sign_of(i).is_plus() { '>' } else { '<' }))
            .collect();
        if self.partition.num_blocks() > 1 {
            let chain: Vec<String> = self
                .partition
                .blocks()
                .iter()
                .map(|b| b.iter().map(|i| format!("|x_{i}|")).collect::<Vec<_>>().join(","))
                .collect();
            parts.push(chain.join(">"));
        }
        f.write_str(&parts.join(","))
    }
}

/// The two `H_n` regions `(R+, R-)` of an ordered partition, `R- = -R+`.
pub fn h_regions(p: &OrderedPartition) -> (HRegion, HRegion) {
    (
        HRegion { partition: p.clone(), orientation: Sign::Plus },
        HRegion { partition: p.clone(), orientation: Sign::Minus },
    )
}

pub fn classify_h_region(p: &OrderedPartition, orientation: Sign) -> RegionClass {
    match (p.all_minima_at_odd_locations(), orientation) {
        (true, Sign::Plus) => RegionClass::Bounded,
        (true, Sign::Minus) => RegionClass::Empty,
        (false, _) => RegionClass::Unbounded,
    }
}

/// The `B_n` regions refining an `H_n` region: every ordering of each block,
/// signs by block parity times the orientation.
pub fn b_regions_inside(p: &OrderedPartition, orientation: Sign) -> Vec<SignedPermutation> {
    let mut out: Vec<Vec<(usize, Sign)>> = vec![Vec::new()];
    for (j, block) in p.blocks().iter().enumerate() {
        let sign = Sign::of_location(j + 1) * orientation;
        let orders = crate::enumerate::permutations(block.len());
        out = out
            .into_iter()
            .flat_map(|prefix| {
                orders.iter().map(move |ord| {
                    let mut next = prefix.clone();
                    next.extend(ord.iter().map(|&k| (block[k - 1], sign)));
                    next
                })
            })
            .collect();
    }
    out.into_iter().map(|e| SignedPermutation::new(e).expect("blocks partition [n]")).collect()
}

/// Classifies an `H_n` region from the geometric classes of the `B_n`
/// regions inside it: unbounded if any piece is, empty if all are.
pub fn classify_h_region_geometric(
    w: &LWeights,
    p: &OrderedPartition,
    orientation: Sign,
) -> Result<RegionClass, ArrangementError> {
    let mut classes = Vec::new();
    for s in b_regions_inside(p, orientation) {
        classes.push(classify_b_region_geometric(w, &s)?.0);
    }
    Ok(if classes.contains(&RegionClass::Unbounded) {
        RegionClass::Unbounded
    } else if classes.iter().all(|&c| c == RegionClass::Empty) {
        RegionClass::Empty
    } else {
        RegionClass::Bounded
    })
}

/// The `H_n` region containing the `B_n` region of `s`.
pub fn refinement_map(s: &SignedPermutation) -> (OrderedPartition, Sign) {
    let orientation = s.entries().first().map_or(Sign::Plus, |&(_, sign)| sign);
    (signed_to_partition(s), orientation)
}

/// The `B_n` region containing a generic point.
pub fn b_region_of_point(x: &[BigRational]) -> Result<SignedPermutation, ArrangementError> {
    if let Some(i) = x.iter().position(Zero::is_zero) {
        return Err(ArrangementError::NonGenericPoint(format!("x_{} = 0", i + 1)));
    }
    let mut order: Vec<usize> = (1..=x.len()).collect();
    order.sort_by(|&a, &b| x[b - 1].abs().cmp(&x[a - 1].abs()));
    if let Some(w) = order.windows(2).find(|w| x[w[0] - 1].abs() == x[w[1] - 1].abs()) {
        return Err(ArrangementError::NonGenericPoint(format!("|x_{}| = |x_{}|", w[0].min(w[1]), w[0].max(w[1]))));
    }
    let entries = order
        .into_iter()
        .map(|i| (i, if x[i - 1].is_positive() { Sign::Plus } else { Sign::Minus }))
        .collect();
    Ok(SignedPermutation::new(entries).expect("indices permute [n]"))
}

/// The `H_n` region containing a generic point, as (partition, orientation).
pub fn h_region_of_point(x: &[BigRational]) -> Result<(OrderedPartition, Sign), ArrangementError> {
    Ok(refinement_map(&b_region_of_point(x)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrangementKind {
    B,
    H,
}

/// Number of bounded regions of the sliced arrangement, found by classifying
/// every region.
pub fn count_bounded(kind: ArrangementKind, n: usize) -> Result<u64, ArrangementError> {
    count_bounded_with_limit(kind, n, DEFAULT_LIMIT)
}

pub fn count_bounded_with_limit(kind: ArrangementKind, n: usize, limit: usize) -> Result<u64, ArrangementError> {
    if n > limit {
        return Err(ArrangementError::LimitExceeded { n, limit });
    }
    let count = match kind {
        ArrangementKind::B => signed_permutations(n)
            .iter()
            .filter(|s| classify_b_region(s) == RegionClass::Bounded)
            .count(),
        ArrangementKind::H => ordered_partitions(n)
            .iter()
            .flat_map(|p| [Sign::Plus, Sign::Minus].map(|o| classify_h_region(p, o)))
            .filter(|&c| c == RegionClass::Bounded)
            .count(),
    };
    Ok(count as u64)
}
