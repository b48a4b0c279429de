//! Totally real number fields with exact element arithmetic.
//!
//! A field is built either as a real quadratic field of fundamental
//! discriminant D (integral basis {1, w}, w = (D + sqrt(D))/2) or as a
//! monogenic field Z[alpha] for a monic integer polynomial with squarefree
//! discriminant. Elements are exact rational coordinate vectors with respect
//! to the integral basis; embeddings are certified rational enclosures of
//! the real roots of the defining polynomial.

use crate::error::{Error, Result};
use crate::interval::{FInterval, RatInterval};
use crate::poly::{br, is_squarefree_i64, isolate_real_roots, rational_roots, refine_root, QPoly};
use crate::ratmat::{qmat_det, qmat_identity, qmat_inverse, vec_qmat_mul, QMat};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::sync::Arc;

#[derive(Debug)]
pub struct NumberField {
    degree: usize,
    defining_poly: QPoly,
    /// Rows: integral basis elements in power-basis coordinates. Row 0 is 1.
    basis_to_power: QMat,
    power_to_basis: QMat,
    discriminant: BigInt,
    /// Root enclosures in embedding order (sigma_1, ..., sigma_n).
    roots: Vec<RatInterval>,
    prec_bits: u32,
    /// mult_table[i][j] = coordinates of b_i * b_j.
    mult_table: Vec<Vec<Vec<BigRational>>>,
    /// basis_embed[j][i] = certified f64 enclosure of sigma_j(b_i).
    basis_embed: Vec<Vec<FInterval>>,
    basis_traces: Vec<BigRational>,
    /// Set for quadratic fields: the discriminant D as i64.
    quadratic_disc: Option<i64>,
    label: String,
}

impl NumberField {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn defining_poly(&self) -> &QPoly {
        &self.defining_poly
    }

    pub fn integral_basis(&self) -> &QMat {
        &self.basis_to_power
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_quadratic(&self) -> bool {
        self.quadratic_disc.is_some()
    }

    pub fn quadratic_disc(&self) -> Option<i64> {
        self.quadratic_disc
    }

    pub fn basis_embed(&self) -> &Vec<Vec<FInterval>> {
        &self.basis_embed
    }

    pub fn basis_trace(&self, i: usize) -> &BigRational {
        &self.basis_traces[i]
    }

    /// Root enclosure for sigma_j refined to the given dyadic width.
    pub fn root_refined(&self, j: usize, width_log2: u32) -> RatInterval {
        let width = BigRational::new(BigInt::one(), BigInt::one() << width_log2);
        refine_root(&self.defining_poly, &self.roots[j], &width)
    }

    /// f64 values of the embeddings of the basis elements (midpoints of
    /// certified enclosures, accurate to the last ulp or two).
    pub fn basis_embed_f64(&self) -> Vec<Vec<f64>> {
        self.basis_embed
            .iter()
            .map(|row| row.iter().map(|iv| iv.mid()).collect())
            .collect()
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

fn newton_power_sums(p: &QPoly, upto: usize) -> Vec<BigRational> {
    // p monic of degree n: power sums p_0..p_upto of its roots
    let n = p.degree();
    let a = p.coeffs(); // a[k] is the coefficient of x^k, a[n] = 1
    let mut sums = vec![br(n as i64)];
    for k in 1..=upto {
        let mut s = BigRational::zero();
        for i in 1..k.min(n + 1) {
            s += &a[n - i] * &sums[k - i];
        }
        if k <= n {
            s += br(k as i64) * &a[n - k];
        }
        sums.push(-s);
    }
    sums
}

fn build_field(
    defining_poly: QPoly,
    basis_to_power: QMat,
    discriminant: BigInt,
    roots: Vec<RatInterval>,
    quadratic_disc: Option<i64>,
    label: String,
    prec_bits: u32,
) -> Arc<NumberField> {
    let n = defining_poly.degree();
    let power_to_basis = qmat_inverse(&basis_to_power).expect("integral basis invertible");
    // refine roots to the working precision
    let width = BigRational::new(BigInt::one(), BigInt::one() << prec_bits);
    let roots: Vec<RatInterval> = roots
        .iter()
        .map(|iv| refine_root(&defining_poly, iv, &width))
        .collect();

    let mut mult_table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        let pi = QPoly::new(basis_to_power[i].clone());
        for j in 0..=i {
            let pj = QPoly::new(basis_to_power[j].clone());
            let prod = pi.mul(&pj).rem(&defining_poly);
            let mut power = prod.coeffs().to_vec();
            power.resize(n, BigRational::zero());
            let coords = vec_qmat_mul(&power, &power_to_basis);
            mult_table[i][j] = coords.clone();
            mult_table[j][i] = coords;
        }
    }

    let mut basis_embed = Vec::with_capacity(n);
    for root in &roots {
        let row: Vec<FInterval> = (0..n)
            .map(|i| {
                QPoly::new(basis_to_power[i].clone())
                    .eval_interval(root)
                    .to_f64()
            })
            .collect();
        basis_embed.push(row);
    }

    let sums = newton_power_sums(&defining_poly, n.saturating_sub(1));
    let basis_traces: Vec<BigRational> = (0..n)
        .map(|i| {
            basis_to_power[i]
                .iter()
                .zip(&sums)
                .map(|(c, s)| c * s)
                .sum()
        })
        .collect();

    Arc::new(NumberField {
        degree: n,
        defining_poly,
        basis_to_power,
        power_to_basis,
        discriminant,
        roots,
        prec_bits,
        mult_table,
        basis_embed,
        basis_traces,
        quadratic_disc,
        label,
    })
}

/// The real quadratic field Q(sqrt(D)) of fundamental discriminant D,
/// with integral basis {1, w}, w = (D + sqrt(D))/2, and embeddings ordered
/// so that sigma_1(sqrt(D)) > 0.
pub fn make_quadratic_field(d: i64) -> Result<Arc<NumberField>> {
    make_quadratic_field_prec(d, 128)
}

pub fn make_quadratic_field_prec(d: i64, prec_bits: u32) -> Result<Arc<NumberField>> {
    let fundamental = d > 4
        && if d % 4 == 1 {
            is_squarefree_i64(d)
        } else if d % 4 == 0 {
            let q = d / 4;
            (q % 4 == 2 || q % 4 == 3) && is_squarefree_i64(q)
        } else {
            false
        };
    if !fundamental {
        return Err(Error::NotFundamentalDiscriminant(d));
    }
    let poly = QPoly::new(vec![br(-d), br(0), br(1)]);
    let mut roots = isolate_real_roots(&poly);
    roots.reverse(); // sigma_1 = +sqrt(D)
    let basis = vec![vec![br(1), br(0)], vec![BigRational::new(BigInt::from(d), BigInt::from(2)), BigRational::new(BigInt::one(), BigInt::from(2))]];
    Ok(build_field(
        poly,
        basis,
        BigInt::from(d),
        roots,
        Some(d),
        format!("Q(sqrt({d}))"),
        prec_bits,
    ))
}

/// Monogenic totally real field Z[alpha] for monic integer P with
/// squarefree discriminant; integral basis is the power basis and the
/// embeddings are ordered by ascending root.
pub fn make_monogenic_field(p: &QPoly) -> Result<Arc<NumberField>> {
    make_monogenic_field_prec(p, 128)
}

pub fn make_monogenic_field_prec(p: &QPoly, prec_bits: u32) -> Result<Arc<NumberField>> {
    if !p.is_monic() || !p.has_integer_coeffs() {
        return Err(Error::NotMonicIntegral);
    }
    let n = p.degree();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "degree {n} defining polynomial (need degree >= 2)"
        )));
    }
    let disc = p.discriminant();
    debug_assert!(disc.is_integer());
    let disc_int = disc.to_integer();
    match disc_int.to_i64() {
        Some(v) => {
            if !is_squarefree_i64(v) {
                return Err(Error::NonSquarefreeDiscriminant(v.to_string()));
            }
        }
        None => {
            return Err(Error::NonSquarefreeDiscriminant(format!(
                "{disc_int} (too large to certify)"
            )))
        }
    }
    let roots = isolate_real_roots(p);
    if roots.len() != n {
        return Err(Error::ComplexRoots);
    }
    if !rational_roots(p).is_empty() {
        return Err(Error::ReduciblePolynomial);
    }
    if n >= 4 && has_proper_integer_factor(p, &roots) {
        return Err(Error::ReduciblePolynomial);
    }
    Ok(build_field(
        p.clone(),
        qmat_identity(n),
        disc_int,
        roots,
        None,
        format!("Q[x]/({})", poly_label(p)),
        prec_bits,
    ))
}

fn poly_label(p: &QPoly) -> String {
    let mut parts = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let term = match i {
            0 => format!("{c}"),
            1 => format!("{c}*x"),
            _ => format!("{c}*x^{i}"),
        };
        parts.push(term);
    }
    parts.join(" + ").replace("+ -", "- ")
}

/// Detect a proper monic integer factor by testing subsets of the real
/// roots: elementary symmetric functions of a subset are enclosed with
/// width < 1/2, and near-integer candidates are confirmed by exact
/// division. All roots are real, so this is a complete factor search.
fn has_proper_integer_factor(p: &QPoly, roots: &[RatInterval]) -> bool {
    let n = p.degree();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut width_log2 = 32u32;
    loop {
        let refined: Vec<RatInterval> = roots
            .iter()
            .map(|iv| {
                let w = BigRational::new(BigInt::one(), BigInt::one() << width_log2);
                refine_root(p, iv, &w)
            })
            .collect();
        let mut all_tight = true;
        'subsets: for mask in 1u32..(1 << n) - 1 {
            let size = mask.count_ones() as usize;
            if size < 2 || size > n / 2 {
                continue;
            }
            // elementary symmetric polynomials of the chosen enclosures
            let mut esp = vec![RatInterval::point(BigRational::one())];
            for (idx, root) in refined.iter().enumerate() {
                if mask & (1 << idx) == 0 {
                    continue;
                }
                let mut next = Vec::with_capacity(esp.len() + 1);
                next.push(esp[0].clone());
                for k in 1..=esp.len() {
                    let carried = esp[k - 1].mul(root);
                    if k < esp.len() {
                        next.push(esp[k].add(&carried));
                    } else {
                        next.push(carried);
                    }
                }
                esp = next;
            }
            let mut coeffs = Vec::with_capacity(size + 1);
            for (k, e) in esp.iter().enumerate() {
                if e.width() >= half {
                    all_tight = false;
                    continue 'subsets;
                }
                let mid = e.mid();
                let rounded = mid.round();
                if (&rounded - &e.lo).is_negative() || (&e.hi - &rounded).is_negative() {
                    // no integer in the enclosure: subset gives no factor
                    continue 'subsets;
                }
                // factor coefficient: (-1)^k e_k
                let c = if k % 2 == 1 { -rounded } else { rounded };
                coeffs.push(c);
            }
            coeffs.reverse();
            let cand = QPoly::new(coeffs.into_iter().collect());
            if !cand.is_zero() && cand.degree() >= 1 {
                let (_, r) = p.divrem(&cand);
                if r.is_zero() {
                    return true;
                }
            }
        }
        if all_tight {
            return false;
        }
        width_log2 *= 2;
        if width_log2 > 4096 {
            // cannot happen for sane inputs; fail closed
            return true;
        }
    }
}

#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<BigRational>,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement{:?}", self.coords)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) && self.coords == other.coords
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn new(field: &Arc<NumberField>, coords: Vec<BigRational>) -> Self {
        assert_eq!(coords.len(), field.degree());
        FieldElement { field: field.clone(), coords }
    }

    pub fn from_i64(field: &Arc<NumberField>, coords: &[i64]) -> Self {
        Self::new(field, coords.iter().map(|&c| br(c)).collect())
    }

    pub fn zero(field: &Arc<NumberField>) -> Self {
        Self::new(field, vec![BigRational::zero(); field.degree()])
    }

    pub fn one(field: &Arc<NumberField>) -> Self {
        let mut c = vec![BigRational::zero(); field.degree()];
        c[0] = BigRational::one();
        Self::new(field, c)
    }

    pub fn rational(field: &Arc<NumberField>, r: BigRational) -> Self {
        let mut c = vec![BigRational::zero(); field.degree()];
        c[0] = r;
        Self::new(field, c)
    }

    pub fn basis_element(field: &Arc<NumberField>, i: usize) -> Self {
        let mut c = vec![BigRational::zero(); field.degree()];
        c[i] = BigRational::one();
        Self::new(field, c)
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(|c| c.is_zero())
    }

    /// Coordinates in the power basis of the defining root.
    pub fn power_coords(&self) -> Vec<BigRational> {
        vec_qmat_mul(&self.coords, &self.field.basis_to_power)
    }

    pub fn has_integral_coords(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    fn same_field(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.field, &other.field), "field mismatch");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.same_field(o);
        Self::new(
            &self.field,
            self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.same_field(o);
        Self::new(
            &self.field,
            self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(&self.field, self.coords.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(&self.field, self.coords.iter().map(|a| a * s).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.same_field(o);
        let n = self.field.degree();
        let mut out = vec![BigRational::zero(); n];
        for i in 0..n {
            if self.coords[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if o.coords[j].is_zero() {
                    continue;
                }
                let f = &self.coords[i] * &o.coords[j];
                for (k, t) in self.field.mult_table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += &f * t;
                    }
                }
            }
        }
        Self::new(&self.field, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.field);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplication-by-x matrix on the integral basis (row i = coords of
    /// x * b_i).
    pub fn mult_matrix(&self) -> QMat {
        let n = self.field.degree();
        (0..n)
            .map(|i| self.mul(&Self::basis_element(&self.field, i)).coords)
            .collect()
    }

    pub fn trace(&self) -> BigRational {
        self.coords
            .iter()
            .zip(&self.field.basis_traces)
            .map(|(c, t)| c * t)
            .sum()
    }

    pub fn norm(&self) -> BigRational {
        qmat_det(&self.mult_matrix())
    }

    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // solve y * M_x = e_0, i.e. M_x^T y = e_0
        let m = crate::ratmat::qmat_transpose(&self.mult_matrix());
        let mut e0 = vec![BigRational::zero(); self.field.degree()];
        e0[0] = BigRational::one();
        let y = crate::ratmat::qmat_solve(&m, &e0).ok_or(Error::DivisionByZero)?;
        Ok(Self::new(&self.field, y))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.invert()?))
    }

    /// Fast certified f64 enclosures of all embeddings.
    pub fn embed_intervals(&self) -> Vec<FInterval> {
        let n = self.field.degree();
        (0..n)
            .map(|j| {
                let mut acc = FInterval::zero();
                for (i, c) in self.coords.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let ci = RatInterval::point(c.clone()).to_f64();
                    acc = acc.add(ci.mul(self.field.basis_embed[j][i]));
                }
                acc
            })
            .collect()
    }

    /// Exact rational enclosure of sigma_j(self) with width below the
    /// requested dyadic target.
    pub fn embed_interval_exact(&self, j: usize, width_log2: u32) -> RatInterval {
        let poly = QPoly::new(self.power_coords());
        if poly.is_zero() {
            return RatInterval::point(BigRational::zero());
        }
        let mut bits = self.field.prec_bits.max(width_log2);
        let target = BigRational::new(BigInt::one(), BigInt::one() << width_log2);
        loop {
            let root = self.field.root_refined(j, bits);
            let iv = poly.eval_interval(&root);
            if iv.width() <= target {
                return iv;
            }
            bits *= 2;
            assert!(bits < 1 << 20, "embedding refinement runaway");
        }
    }

    /// Exact sign of sigma_j(self): sigma_j is injective on the field, so
    /// the sign is zero only for the zero element and refinement always
    /// terminates otherwise.
    pub fn sign_at(&self, j: usize) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if let Some(s) = self.embed_intervals()[j].sign() {
            return s;
        }
        let mut bits = self.field.prec_bits;
        loop {
            let root = self.field.root_refined(j, bits);
            let iv = QPoly::new(self.power_coords()).eval_interval(&root);
            if let Some(s) = iv.sign() {
                return s;
            }
            bits *= 2;
            assert!(bits < 1 << 20, "sign refinement runaway for nonzero element");
        }
    }

    pub fn is_totally_positive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        (0..self.field.degree()).all(|j| self.sign_at(j) == 1)
    }

    pub fn is_totally_nonnegative(&self) -> bool {
        self.is_zero() || self.is_totally_positive()
    }

    /// f64 embeddings, accurate to a couple of ulps.
    pub fn embed_f64(&self) -> Vec<f64> {
        let n = self.field.degree();
        (0..n).map(|j| self.embed_f64_at(j)).collect()
    }

    pub fn embed_f64_at(&self, j: usize) -> f64 {
        let fast = self.embed_intervals()[j];
        // midpoint is fine when the enclosure is already a few ulps wide
        if fast.hi - fast.lo <= 1e-13 * (1.0 + fast.mid().abs()) {
            return fast.mid();
        }
        let iv = self.embed_interval_exact(j, 80);
        iv.to_f64().mid()
    }
}

/// Returns (trace, norm) computed exactly.
pub fn trace_norm(x: &FieldElement) -> (BigRational, BigRational) {
    (x.trace(), x.norm())
}

/// Fundamental unit (> 1) of a real quadratic field, from the continued
/// fraction of sqrt(d) (D = 4d) or (1 + sqrt(D))/2 (D odd).
pub fn fundamental_unit(field: &Arc<NumberField>) -> Result<FieldElement> {
    let d_disc = field
        .quadratic_disc()
        .ok_or(Error::NotQuadratic(field.degree()))?;
    // theta and its coordinates in the integral basis {1, w}
    let (cf_d, p0, q0, theta_coords) = if d_disc % 4 == 0 {
        let d = d_disc / 4;
        // theta = sqrt(d) = w - 2d
        (BigInt::from(d), BigInt::zero(), BigInt::one(), (br(-2 * d), br(1)))
    } else {
        // theta = (1 + sqrt(D))/2 = w - (D-1)/2
        (
            BigInt::from(d_disc),
            BigInt::one(),
            BigInt::from(2),
            (br(-(d_disc - 1) / 2), br(1)),
        )
    };

    let theta = FieldElement::new(field, vec![theta_coords.0, theta_coords.1]);
    let sqrt_floor = cf_d.sqrt();

    // continued fraction of (P + sqrt(cf_d)) / Q
    let mut p = p0;
    let mut q = q0;
    // convergents
    let mut h_prev = BigInt::one();
    let mut h = floor_quadratic(&p, &q, &cf_d, &sqrt_floor);
    let mut k_prev = BigInt::zero();
    let mut k = BigInt::one();
    let mut a = h.clone();

    for _ in 0..100_000 {
        // candidate u = h - k * theta
        let u = FieldElement::new(field, vec![BigRational::from_integer(h.clone()), BigRational::zero()])
            .sub(&theta.scale(&BigRational::from_integer(k.clone())));
        let n = u.norm();
        if n.abs().is_one() && !u.is_zero() {
            let eps = u.invert()?;
            let eps = if eps.sign_at(0) > 0 { eps } else { eps.neg() };
            debug_assert!(eps.has_integral_coords());
            return Ok(eps);
        }
        // CF step
        p = &a * &q - &p;
        q = (&cf_d - &p * &p) / &q;
        a = floor_quadratic(&p, &q, &cf_d, &sqrt_floor);
        let h_next = &a * &h + &h_prev;
        let k_next = &a * &k + &k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    Err(Error::UnitSearchExhausted(
        "continued fraction produced no unit".into(),
    ))
}

/// floor((P + sqrt(D)) / Q) for nonsquare D > 0, exact.
fn floor_quadratic(p: &BigInt, q: &BigInt, d: &BigInt, sqrt_floor: &BigInt) -> BigInt {
    use num_integer::Integer;
    let mut m = if q.is_positive() {
        (p + sqrt_floor).div_floor(q)
    } else {
        (p + sqrt_floor + BigInt::one()).div_floor(q)
    };
    // fix up with the exact predicate m <= (P + sqrt(D))/Q < m + 1
    let le = |m: &BigInt| -> bool {
        // m*Q - P <= sqrt(D), assuming Q > 0; flip for Q < 0
        let lhs = m * q - p;
        if q.is_positive() {
            !lhs.is_positive() || &lhs * &lhs <= *d
        } else {
            lhs.is_positive() && &lhs * &lhs >= *d || lhs.is_zero() || lhs.is_negative() && false
        }
    };
    if q.is_positive() {
        while !le(&m) {
            m -= 1;
        }
        while le(&(&m + BigInt::one())) {
            m += 1;
        }
    } else {
        // Q < 0: (P + sqrt(D))/Q is decreasing in sqrt(D)
        let ge = |m: &BigInt| -> bool {
            // m <= (P + sqrt(D))/Q  <=>  m*Q >= P + sqrt(D) (Q<0)
            let lhs = m * q - p;
            // need lhs >= sqrt(D)
            lhs.is_positive() && &lhs * &lhs >= *d
        };
        while !ge(&m) {
            m -= 1;
        }
        while ge(&(&m + BigInt::one())) {
            m += 1;
        }
    }
    m
}

#[derive(Debug, Clone, Copy)]
pub struct UnitSearchBudget {
    pub max_power: u32,
    pub coord_box: i64,
}

impl Default for UnitSearchBudget {
    fn default() -> Self {
        UnitSearchBudget { max_power: 64, coord_box: 50 }
    }
}

/// A unit u != 1 with u = 1 mod m*O_K, totally positive if requested.
/// Quadratic fields scan powers of the fundamental unit; higher degree
/// fields search a coordinate box for norm +-1 elements and scan their
/// powers.
pub fn search_units(
    field: &Arc<NumberField>,
    modulus: i64,
    require_totally_positive: bool,
    budget: UnitSearchBudget,
) -> Result<FieldElement> {
    let m = br(modulus);
    let congruent = |u: &FieldElement| -> bool {
        let diff = u.sub(&FieldElement::one(field));
        diff.coords().iter().all(|c| (c / &m).is_integer())
    };
    let admissible = |u: &FieldElement| -> bool {
        congruent(u) && (!require_totally_positive || u.is_totally_positive())
    };

    if field.is_quadratic() {
        let eps = fundamental_unit(field)?;
        let mut u = eps.clone();
        for _ in 1..=budget.max_power {
            if !u.is_one() && admissible(&u) {
                return Ok(u);
            }
            u = u.mul(&eps);
        }
        return Err(Error::UnitSearchExhausted(format!(
            "powers of the fundamental unit up to {}",
            budget.max_power
        )));
    }

    // degree >= 3: box search for units, then power scan
    let n = field.degree();
    let mut found_units = Vec::new();
    for radius in 1..=budget.coord_box {
        let mut coords = vec![-radius; n];
        loop {
            if coords.iter().any(|&c| c.abs() == radius) {
                let x = FieldElement::from_i64(field, &coords);
                if !x.is_zero() && !x.is_one() {
                    let nrm = x.norm();
                    if nrm.abs().is_one() {
                        found_units.push(x);
                    }
                }
            }
            // odometer over the box
            let mut i = 0;
            loop {
                if i == n {
                    break;
                }
                coords[i] += 1;
                if coords[i] <= radius {
                    break;
                }
                coords[i] = -radius;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        for base in &found_units {
            let mut u = base.clone();
            for _ in 1..=budget.max_power {
                if !u.is_one() && admissible(&u) {
                    return Ok(u);
                }
                u = u.mul(base);
            }
        }
        if !found_units.is_empty() && radius >= 5 {
            // plenty of units scanned already; widening the box further
            // will not change the congruence classes reachable by powers
            break;
        }
    }
    Err(Error::UnitSearchExhausted(format!(
        "coordinate box {} / powers {}",
        budget.coord_box, budget.max_power
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quadratic_17() {
        let f = make_quadratic_field(17).unwrap();
        assert_eq!(f.degree(), 2);
        assert_eq!(f.discriminant(), &BigInt::from(17));
        let w = FieldElement::basis_element(&f, 1);
        let e = w.embed_f64();
        assert_relative_eq!(e[0], 10.561552812808830, epsilon = 1e-9);
        assert_relative_eq!(e[1], 6.438447187191170, epsilon = 1e-9);
    }

    #[test]
    fn rejects_non_fundamental() {
        assert!(make_quadratic_field(16).is_err());
        assert!(make_quadratic_field(18).is_err());
        assert!(make_quadratic_field(12).is_ok()); // 4*3, 3 = 3 mod 4
        assert!(make_quadratic_field(8).is_ok());
    }

    #[test]
    fn trace_norm_of_omega() {
        let f = make_quadratic_field(17).unwrap();
        let w = FieldElement::basis_element(&f, 1);
        let (t, n) = trace_norm(&w);
        assert_eq!(t, br(17));
        assert_eq!(n, br(68));
        let one = FieldElement::one(&f);
        assert_eq!(one.trace(), br(2));
        assert_eq!(one.norm(), br(1));
    }

    #[test]
    fn trace_norm_sqrt2() {
        let f = make_quadratic_field(8).unwrap();
        // sqrt(2) = w - 4 with w = 4 + sqrt(2)
        let s2 = FieldElement::from_i64(&f, &[-4, 1]);
        let (t, n) = trace_norm(&s2);
        assert_eq!(t, br(0));
        assert_eq!(n, br(-2));
    }

    #[test]
    fn inversion() {
        let f = make_quadratic_field(8).unwrap();
        let s2 = FieldElement::from_i64(&f, &[-4, 1]);
        let u = FieldElement::one(&f).add(&s2); // 1 + sqrt(2)
        let inv = u.invert().unwrap();
        assert_eq!(u.mul(&inv), FieldElement::one(&f));
        // (1+sqrt2)^-1 = -1+sqrt2
        assert_eq!(inv, s2.sub(&FieldElement::one(&f)));
        assert!(FieldElement::zero(&f).invert().is_err());
        // 2^{-1} = 1/2
        let two = FieldElement::from_i64(&f, &[2, 0]);
        assert_eq!(
            two.invert().unwrap(),
            FieldElement::rational(&f, BigRational::new(BigInt::one(), BigInt::from(2)))
        );
    }

    #[test]
    fn total_positivity() {
        let f = make_quadratic_field(8).unwrap();
        let s2 = FieldElement::from_i64(&f, &[-4, 1]);
        let one = FieldElement::one(&f);
        // 3 + 2 sqrt2 totally positive
        let x = one.scale(&br(3)).add(&s2.scale(&br(2)));
        assert!(x.is_totally_positive());
        // 1 + sqrt2 not
        let y = one.add(&s2);
        assert!(!y.is_totally_positive());
        let z = FieldElement::zero(&f);
        assert!(z.is_totally_nonnegative());
        assert!(!z.is_totally_positive());
    }

    #[test]
    fn fundamental_units() {
        let f8 = make_quadratic_field(8).unwrap();
        let eps = fundamental_unit(&f8).unwrap();
        // 1 + sqrt(2) = (-3, 1) in basis {1, 4+sqrt2}
        assert_eq!(eps, FieldElement::from_i64(&f8, &[-3, 1]));
        assert_eq!(eps.norm(), br(-1));

        let f17 = make_quadratic_field(17).unwrap();
        let eps = fundamental_unit(&f17).unwrap();
        // 4 + sqrt(17) = 2w - 13
        assert_eq!(eps, FieldElement::from_i64(&f17, &[-13, 2]));
        assert_eq!(eps.norm(), br(-1));

        let f5 = make_quadratic_field(5).unwrap();
        let eps = fundamental_unit(&f5).unwrap();
        // (1+sqrt5)/2 = w - 2
        assert_eq!(eps, FieldElement::from_i64(&f5, &[-2, 1]));
    }

    #[test]
    fn unit_search_mod4_mod3_mod5() {
        let f = make_quadratic_field(8).unwrap();
        let u4 = search_units(&f, 4, true, UnitSearchBudget::default()).unwrap();
        // eps^4 = 17 + 12 sqrt2 = (-31, 12)
        assert_eq!(u4, FieldElement::from_i64(&f, &[-31, 12]));
        assert!(u4.is_totally_positive());

        let u3 = search_units(&f, 3, false, UnitSearchBudget::default()).unwrap();
        // eps^8 = 577 + 408 sqrt2
        assert_eq!(u3, FieldElement::from_i64(&f, &[577 - 4 * 408, 408]));

        let u5 = search_units(&f, 5, false, UnitSearchBudget::default()).unwrap();
        // eps^12 = 19601 + 13860 sqrt2
        assert_eq!(u5, FieldElement::from_i64(&f, &[19601 - 4 * 13860, 13860]));
        let (_, n) = trace_norm(&u5);
        assert_eq!(n.abs(), br(1));
    }

    #[test]
    fn monogenic_cubic() {
        let p = QPoly::from_int_coeffs_descending(&[1, 0, -4, -1]);
        let f = make_monogenic_field(&p).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.discriminant(), &BigInt::from(229));
        // alpha is a unit: alpha * (alpha^2 - 4) = 1
        let a = FieldElement::basis_element(&f, 1);
        assert_eq!(a.norm(), br(1));
        let inv = a.invert().unwrap();
        assert_eq!(inv, FieldElement::from_i64(&f, &[-4, 0, 1]));
    }

    #[test]
    fn monogenic_rejections() {
        // disc 49: not squarefree
        let p = QPoly::from_int_coeffs_descending(&[1, -1, -2, 1]);
        assert!(matches!(
            make_monogenic_field(&p),
            Err(Error::NonSquarefreeDiscriminant(_))
        ));
        // complex roots
        let p = QPoly::from_int_coeffs_descending(&[1, 0, 0, -2]);
        assert!(matches!(make_monogenic_field(&p), Err(Error::ComplexRoots)));
        // reducible with rational root: x^2 - 3x + 2... disc = 1 squarefree
        let p = QPoly::from_int_coeffs_descending(&[1, -3, 2]);
        assert!(matches!(
            make_monogenic_field(&p),
            Err(Error::ReduciblePolynomial)
        ));
    }

    #[test]
    fn quadratic_as_monogenic() {
        let p = QPoly::from_int_coeffs_descending(&[1, -1, -4]);
        let f = make_monogenic_field(&p).unwrap();
        assert_eq!(f.discriminant(), &BigInt::from(17));
    }

    #[test]
    fn embeddings_match_arithmetic() {
        // numeric embedding of a product equals the product of embeddings
        let f = make_quadratic_field(17).unwrap();
        let x = FieldElement::from_i64(&f, &[3, 2]);
        let y = FieldElement::from_i64(&f, &[-1, 5]);
        let xy = x.mul(&y);
        let (ex, ey, exy) = (x.embed_f64(), y.embed_f64(), xy.embed_f64());
        for j in 0..2 {
            assert_relative_eq!(ex[j] * ey[j], exy[j], max_relative = 1e-12);
        }
    }

    #[test]
    fn cubic_unit_search_mod4() {
        let p = QPoly::from_int_coeffs_descending(&[1, 0, -4, -1]);
        let f = make_monogenic_field(&p).unwrap();
        let u = search_units(&f, 4, false, UnitSearchBudget::default()).unwrap();
        assert!(!u.is_one());
        assert_eq!(u.norm().abs(), br(1));
        let diff = u.sub(&FieldElement::one(&f));
        assert!(diff.coords().iter().all(|c| (c / br(4)).is_integer()));
    }
}
