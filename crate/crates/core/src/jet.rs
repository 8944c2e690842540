//! Second-order jets in three variables: value, gradient and Hessian
//! propagated through arithmetic.  The resonant Hamiltonians use these to
//! obtain exact partial derivatives of the coefficient functions with
//! respect to the Delaunay actions, which gives closed-form vector fields
//! and variational Jacobians without hand-derived formulas.

/// Value, gradient and symmetric Hessian (packed [xx, xy, xz, yy, yz, zz]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet3 {
    pub v: f64,
    pub g: [f64; 3],
    pub h: [f64; 6],
}

const H_IDX: [[usize; 3]; 3] = [[0, 1, 2], [1, 3, 4], [2, 4, 5]];

impl Jet3 {
    pub const fn constant(v: f64) -> Self {
        Jet3 { v, g: [0.0; 3], h: [0.0; 6] }
    }

    /// Seeds the `k`-th independent variable.
    pub fn variable(v: f64, k: usize) -> Self {
        let mut g = [0.0; 3];
        g[k] = 1.0;
        Jet3 { v, g, h: [0.0; 6] }
    }

    pub fn hess(&self, i: usize, j: usize) -> f64 {
        self.h[H_IDX[i][j]]
    }

    pub fn add(&self, o: &Jet3) -> Jet3 {
        let mut r = *self;
        r.v += o.v;
        for k in 0..3 {
            r.g[k] += o.g[k];
        }
        for k in 0..6 {
            r.h[k] += o.h[k];
        }
        r
    }

    pub fn sub(&self, o: &Jet3) -> Jet3 {
        let mut r = *self;
        r.v -= o.v;
        for k in 0..3 {
            r.g[k] -= o.g[k];
        }
        for k in 0..6 {
            r.h[k] -= o.h[k];
        }
        r
    }

    pub fn mul(&self, o: &Jet3) -> Jet3 {
        let mut r = Jet3::constant(self.v * o.v);
        for k in 0..3 {
            r.g[k] = self.g[k] * o.v + self.v * o.g[k];
        }
        let mut idx = 0;
        for i in 0..3 {
            for j in i..3 {
                r.h[idx] = self.hess(i, j) * o.v
                    + self.g[i] * o.g[j]
                    + self.g[j] * o.g[i]
                    + self.v * o.hess(i, j);
                idx += 1;
            }
        }
        r
    }

    pub fn scale(&self, c: f64) -> Jet3 {
        let mut r = *self;
        r.v *= c;
        for k in 0..3 {
            r.g[k] *= c;
        }
        for k in 0..6 {
            r.h[k] *= c;
        }
        r
    }

    pub fn add_scalar(&self, c: f64) -> Jet3 {
        let mut r = *self;
        r.v += c;
        r
    }

    /// Chain rule through a scalar function: given f(u) with derivatives
    /// f' and f'' at u = self.v.
    pub fn compose(&self, f: f64, fp: f64, fpp: f64) -> Jet3 {
        let mut r = Jet3::constant(f);
        for k in 0..3 {
            r.g[k] = fp * self.g[k];
        }
        let mut idx = 0;
        for i in 0..3 {
            for j in i..3 {
                r.h[idx] = fp * self.hess(i, j) + fpp * self.g[i] * self.g[j];
                idx += 1;
            }
        }
        r
    }

    pub fn recip(&self) -> Jet3 {
        let inv = 1.0 / self.v;
        self.compose(inv, -inv * inv, 2.0 * inv * inv * inv)
    }

    pub fn div(&self, o: &Jet3) -> Jet3 {
        self.mul(&o.recip())
    }

    pub fn sqrt(&self) -> Jet3 {
        let s = self.v.sqrt();
        self.compose(s, 0.5 / s, -0.25 / (s * self.v))
    }

    /// Integer power, by repeated squaring on jets.
    pub fn powi(&self, n: i32) -> Jet3 {
        if n == 0 {
            return Jet3::constant(1.0);
        }
        let mut base = if n < 0 { self.recip() } else { *self };
        let mut e = n.unsigned_abs();
        let mut acc = Jet3::constant(1.0);
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn fd_check<F: Fn(f64, f64, f64) -> f64>(f: F, jet: &Jet3, x: [f64; 3]) {
        let h = 1e-5;
        for k in 0..3 {
            let mut xp = x;
            let mut xm = x;
            xp[k] += h;
            xm[k] -= h;
            let fd = (f(xp[0], xp[1], xp[2]) - f(xm[0], xm[1], xm[2])) / (2.0 * h);
            assert_relative_eq!(jet.g[k], fd, max_relative = 1e-7, epsilon = 1e-9);
        }
        for i in 0..3 {
            for j in 0..3 {
                let mut xpp = x;
                let mut xpm = x;
                let mut xmp = x;
                let mut xmm = x;
                xpp[i] += h;
                xpp[j] += h;
                xpm[i] += h;
                xpm[j] -= h;
                xmp[i] -= h;
                xmp[j] += h;
                xmm[i] -= h;
                xmm[j] -= h;
                let fd = (f(xpp[0], xpp[1], xpp[2]) - f(xpm[0], xpm[1], xpm[2])
                    - f(xmp[0], xmp[1], xmp[2])
                    + f(xmm[0], xmm[1], xmm[2]))
                    / (4.0 * h * h);
                assert_relative_eq!(jet.hess(i, j), fd, max_relative = 1e-4, epsilon = 1e-6);
            }
        }
    }

    #[test]
    fn jet_matches_finite_differences() {
        let x = [1.3, 0.7, 2.1];
        let f = |a: f64, b: f64, c: f64| (a * a * b + c).sqrt() / (a + b * c);
        let ja = Jet3::variable(x[0], 0);
        let jb = Jet3::variable(x[1], 1);
        let jc = Jet3::variable(x[2], 2);
        let jet = ja.powi(2).mul(&jb).add(&jc).sqrt().div(&ja.add(&jb.mul(&jc)));
        assert_relative_eq!(jet.v, f(x[0], x[1], x[2]), max_relative = 1e-14);
        fd_check(f, &jet, x);
    }

    #[test]
    fn negative_powers() {
        let x = [2.0, 1.0, 1.0];
        let j = Jet3::variable(x[0], 0).powi(-3);
        assert_relative_eq!(j.v, 0.125);
        assert_relative_eq!(j.g[0], -3.0 / 16.0);
        assert_relative_eq!(j.hess(0, 0), 12.0 / 32.0);
    }
}
