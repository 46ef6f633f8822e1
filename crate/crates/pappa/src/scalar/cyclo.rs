use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

/// The cyclotomic field Q(ζ_L) in the power basis 1, ζ_L, …, ζ_L^{φ(L)-1}.
#[derive(Debug)]
pub struct CycloField {
    order: u32,
    phi: usize,
    /// `powers[k]` holds the coordinates of ζ_L^k for 0 ≤ k < L.
    powers: Vec<Vec<i128>>,
    /// Complex embedding of the basis vectors.
    embed: Vec<Complex64>,
}

impl CycloField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let phi_poly = cyclotomic_polynomial(order);
        let phi = phi_poly.len() - 1;
        let l = order as usize;
        let mut powers = Vec::with_capacity(l);
        let mut cur = vec![0i128; phi];
        cur[0] = 1;
        if phi == 0 {
            // Q(ζ_1) = Q; never used with order 1 but keep it well defined.
            return CycloField { order, phi: 1, powers: vec![vec![1]], embed: vec![Complex64::new(1.0, 0.0)] };
        }
        for _ in 0..l {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic polynomial
            let top = cur[phi - 1];
            let mut next = vec![0i128; phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1];
            }
            if top != 0 {
                for i in 0..phi {
                    next[i] -= top * phi_poly[i];
                }
            }
            cur = next;
        }
        let embed = (0..phi)
            .map(|k| {
                let t = 2.0 * core::f64::consts::PI * (k as f64) / (order as f64);
                Complex64::new(libm::cos(t), libm::sin(t))
            })
            .collect();
        CycloField { order, phi, powers, embed }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi
    }
}

/// Integer coefficients of Φ_L, lowest degree first.
pub fn cyclotomic_polynomial(order: u32) -> Vec<i128> {
    // x^L - 1 divided by Φ_d for every proper divisor d.
    let l = order as usize;
    let mut num = vec![0i128; l + 1];
    num[0] = -1;
    num[l] = 1;
    for d in 1..order {
        if order.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &div);
        }
    }
    num
}

fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut quo = vec![0i128; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        quo[i] = c;
        if c != 0 {
            for j in 0..=dn {
                rem[i + j] -= c * den[j];
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quo
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// An element of Q(ζ_L): integer numerators over a shared positive denominator,
/// kept in lowest terms so equality is coordinate equality.
#[derive(Clone)]
pub struct Cyclo {
    field: Arc<CycloField>,
    num: Vec<i128>,
    den: i128,
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo[L={}](", self.field.order)?;
        let mut first = true;
        for (k, &c) in self.num.iter().enumerate() {
            if c != 0 {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "{}·z^{}", c, k)?;
                first = false;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")/{}", self.den)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.den == other.den && self.num == other.num
    }
}

impl Cyclo {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        Cyclo { field: field.clone(), num: vec![0; field.phi], den: 1 }
    }

    pub fn rational(field: &Arc<CycloField>, n: i128, d: i128) -> Self {
        assert!(d != 0, "zero denominator");
        let mut c = Cyclo::zero(field);
        c.num[0] = n;
        c.den = d;
        c.normalize();
        c
    }

    /// ζ_L^k for any integer k.
    pub fn root(field: &Arc<CycloField>, k: i64) -> Self {
        let l = field.order as i64;
        let idx = k.rem_euclid(l) as usize;
        Cyclo { field: field.clone(), num: field.powers[idx].clone(), den: 1 }
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn numerators(&self) -> &[i128] {
        &self.num
    }

    pub fn denominator(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    /// Rational value when the element lies in Q.
    pub fn as_rational(&self) -> Option<(i128, i128)> {
        if self.num[1..].iter().all(|&c| c == 0) {
            Some((self.num[0], self.den))
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -*c;
            }
        }
        if self.is_zero() {
            self.den = 1;
            return;
        }
        let mut g = self.den;
        for &c in &self.num {
            if g == 1 {
                break;
            }
            if c != 0 {
                g = gcd(g, c);
            }
        }
        if g > 1 {
            self.den /= g;
            for c in &mut self.num {
                *c /= g;
            }
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.num.iter().enumerate() {
            if c != 0 {
                acc += self.field.embed[k] * (c as f64);
            }
        }
        acc / (self.den as f64)
    }

    pub fn checked_add(&self, other: &Cyclo) -> Option<Cyclo> {
        debug_assert_eq!(self.field.order, other.field.order);
        let g = gcd(self.den, other.den);
        let la = other.den / g;
        let lb = self.den / g;
        let den = self.den.checked_mul(la)?;
        let mut num = Vec::with_capacity(self.num.len());
        for (a, b) in self.num.iter().zip(&other.num) {
            num.push(a.checked_mul(la)?.checked_add(b.checked_mul(lb)?)?);
        }
        let mut out = Cyclo { field: self.field.clone(), num, den };
        out.normalize();
        Some(out)
    }

    pub fn neg(&self) -> Cyclo {
        Cyclo { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den }
    }

    pub fn checked_mul(&self, other: &Cyclo) -> Option<Cyclo> {
        debug_assert_eq!(self.field.order, other.field.order);
        if self.is_zero() || other.is_zero() {
            return Some(Cyclo::zero(&self.field));
        }
        let phi = self.field.phi;
        let mut wide = vec![0i128; 2 * phi - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                if b != 0 {
                    wide[i + j] = wide[i + j].checked_add(a.checked_mul(b)?)?;
                }
            }
        }
        let mut num = vec![0i128; phi];
        num.copy_from_slice(&wide[..phi]);
        for (k, &c) in wide.iter().enumerate().skip(phi) {
            if c != 0 {
                for (t, &r) in self.field.powers[k].iter().enumerate() {
                    if r != 0 {
                        num[t] = num[t].checked_add(c.checked_mul(r)?)?;
                    }
                }
            }
        }
        let den = self.den.checked_mul(other.den)?;
        let mut out = Cyclo { field: self.field.clone(), num, den };
        out.normalize();
        Some(out)
    }

    /// Complex conjugation: ζ_L^k ↦ ζ_L^{-k}, then re-reduction.
    pub fn checked_conj(&self) -> Option<Cyclo> {
        let l = self.field.order as usize;
        let phi = self.field.phi;
        let mut num = vec![0i128; phi];
        for (k, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = (l - k) % l;
            for (t, &r) in self.field.powers[idx].iter().enumerate() {
                if r != 0 {
                    num[t] = num[t].checked_add(c.checked_mul(r)?)?;
                }
            }
        }
        let mut out = Cyclo { field: self.field.clone(), num, den: self.den };
        out.normalize();
        Some(out)
    }

    /// Multiplicative inverse via the product of the Galois conjugates.
    ///
    /// The product over σ ≠ id of σ(x) is an algebraic integer multiple of the
    /// norm's reciprocal, so x⁻¹ = (Π_{σ≠id} σ(x)) / N(x).
    pub fn checked_inv(&self) -> Option<Cyclo> {
        assert!(!self.is_zero(), "inverse of zero");
        let l = self.field.order;
        let mut others = Cyclo::rational(&self.field, 1, 1);
        for a in 2..l {
            if gcd(a as i128, l as i128) == 1 {
                others = others.checked_mul(&self.galois(a)?)?;
            }
        }
        let norm = self.checked_mul(&others)?;
        let (n, d) = norm.as_rational().expect("field norm must be rational");
        let scale = Cyclo::rational(&self.field, d, n);
        others.checked_mul(&scale)
    }

    /// The automorphism ζ_L ↦ ζ_L^a for a coprime to L.
    pub fn galois(&self, a: u32) -> Option<Cyclo> {
        let l = self.field.order as usize;
        let phi = self.field.phi;
        let mut num = vec![0i128; phi];
        for (k, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = (k * a as usize) % l;
            for (t, &r) in self.field.powers[idx].iter().enumerate() {
                if r != 0 {
                    num[t] = num[t].checked_add(c.checked_mul(r)?)?;
                }
            }
        }
        let mut out = Cyclo { field: self.field.clone(), num, den: self.den };
        out.normalize();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(16).len(), 9);
    }

    #[test]
    fn roots_multiply_by_exponent_addition() {
        let f = Arc::new(CycloField::new(48));
        for a in -50i64..50 {
            let x = Cyclo::root(&f, a);
            let y = Cyclo::root(&f, 7);
            assert_eq!(x.checked_mul(&y).unwrap(), Cyclo::root(&f, a + 7));
        }
    }

    #[test]
    fn inverse_of_one_plus_root() {
        let f = Arc::new(CycloField::new(16));
        let x = Cyclo::rational(&f, 1, 1).checked_add(&Cyclo::root(&f, 3)).unwrap();
        let inv = x.checked_inv().unwrap();
        assert_eq!(x.checked_mul(&inv).unwrap(), Cyclo::rational(&f, 1, 1));
    }
}
