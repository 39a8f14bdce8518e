//! Phase-space (first-order system) form of second-order equations.
//!
//! A homogeneous equation `P y'' + Q y' + R y = 0` becomes `y' = D y` for the
//! phase vector `y = (y, y')` with
//!
//! ```text
//! D = | 0     1    |
//!     | -R/P  -Q/P |
//! ```
//!
//! The dimensionless Schrödinger form `-φ'' + b φ' + v φ = ε φ` becomes
//! `φ' = A φ` with
//!
//! ```text
//! A = | 0      1 |          k²(x) = ε - v(x).
//!     | -k²    b |
//! ```
//!
//! Writing `φ = g f` for an integrating factor `g` gives `φ = B f` with
//! `B = [[g, 0], [g', g]]`, and the factor vector obeys `f' = C f` with
//! `C = B⁻¹(AB - B')`. This module builds these matrices, integrates the
//! linear system with fixed-step RK4, and finds eigenvalues by shooting.

use crate::error::{Error, Result};

/// Determinant threshold below which `B` is treated as non-invertible.
pub const NEAR_SINGULAR_DET: f64 = 1e-14;

/// A real 2x2 matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

impl Matrix2 {
    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn zero() -> Self {
        Self::new(0.0, 0.0, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        Self::new(1.0, 0.0, 0.0, 1.0)
    }

    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        Matrix2::new(
            self.a11 * rhs.a11 + self.a12 * rhs.a21,
            self.a11 * rhs.a12 + self.a12 * rhs.a22,
            self.a21 * rhs.a11 + self.a22 * rhs.a21,
            self.a21 * rhs.a12 + self.a22 * rhs.a22,
        )
    }

    pub fn sub(&self, rhs: &Matrix2) -> Matrix2 {
        Matrix2::new(
            self.a11 - rhs.a11,
            self.a12 - rhs.a12,
            self.a21 - rhs.a21,
            self.a22 - rhs.a22,
        )
    }

    /// Inverse, or [`Error::NearSingular`] when |det| < [`NEAR_SINGULAR_DET`].
    pub fn inverse(&self) -> Result<Matrix2> {
        let det = self.det();
        if det.abs() < NEAR_SINGULAR_DET {
            return Err(Error::NearSingular {
                det,
                threshold: NEAR_SINGULAR_DET,
            });
        }
        Ok(Matrix2::new(
            self.a22 / det,
            -self.a12 / det,
            -self.a21 / det,
            self.a11 / det,
        ))
    }

    pub fn max_abs(&self) -> f64 {
        self.a11
            .abs()
            .max(self.a12.abs())
            .max(self.a21.abs())
            .max(self.a22.abs())
    }

    pub fn is_finite(&self) -> bool {
        self.a11.is_finite() && self.a12.is_finite() && self.a21.is_finite() && self.a22.is_finite()
    }
}

/// A point of phase space: function value and first derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseVector {
    pub value: f64,
    pub slope: f64,
}

impl PhaseVector {
    pub fn new(value: f64, slope: f64) -> Self {
        Self { value, slope }
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite() && self.slope.is_finite()
    }

    pub fn norm_inf(&self) -> f64 {
        self.value.abs().max(self.slope.abs())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::new(self.value * factor, self.slope * factor)
    }
}

/// A uniform grid of at least 3 points with `x_min < x_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::InvalidGrid("endpoints must be finite".into()));
        }
        if x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "x_min = {x_min} must be < x_max = {x_max}"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidGrid(format!(
                "n_points = {n_points} must be >= 3"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            n_points,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn point(&self, i: usize) -> f64 {
        self.x_min + self.spacing() * i as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |i| self.point(i))
    }

    /// Same span with spacing halved (`2n - 1` points); used by convergence passes.
    pub fn refined(&self) -> Grid {
        Grid {
            x_min: self.x_min,
            x_max: self.x_max,
            n_points: 2 * self.n_points - 1,
        }
    }
}

/// A phase-space solution sampled on a grid.
#[derive(Debug, Clone)]
pub struct PhaseTrajectory {
    grid: Grid,
    samples: Vec<PhaseVector>,
}

impl PhaseTrajectory {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn samples(&self) -> &[PhaseVector] {
        &self.samples
    }

    pub fn last(&self) -> PhaseVector {
        *self.samples.last().expect("trajectory is never empty")
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.samples.iter().map(|s| s.value)
    }
}

/// Parity of the launched solution in a shooting run.
///
/// `Even` and `Odd` launch `(1, 0)` and `(0, 1)` from the grid's left end,
/// which is then understood to be the symmetry point (x = 0 for the
/// symmetric models). `None` launches `(0, 1)` from `x_min` (left Dirichlet).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Even,
    Odd,
    None,
}

impl Symmetry {
    fn initial(&self) -> PhaseVector {
        match self {
            Symmetry::Even => PhaseVector::new(1.0, 0.0),
            Symmetry::Odd | Symmetry::None => PhaseVector::new(0.0, 1.0),
        }
    }
}

/// Controls for the shooting bisection.
#[derive(Debug, Clone, Copy)]
pub struct ShootingConfig {
    /// Bisection stops when the bracket width drops below this.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Phase vectors are rescaled whenever their norm exceeds this
    /// (legal by linearity; keeps growing solutions inside f64 range).
    pub renorm_threshold: f64,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-10,
            max_iterations: 200,
            renorm_threshold: 1e6,
        }
    }
}

/// Matrix of the template system `y' = D y` built from `P y'' + Q y' + R y = 0`.
///
/// Fails with [`Error::SingularCoefficient`] when `P = 0`.
pub fn template_matrix(p: f64, q: f64, r: f64) -> Result<Matrix2> {
    if p == 0.0 {
        return Err(Error::SingularCoefficient { x: f64::NAN });
    }
    Ok(Matrix2::new(0.0, 1.0, -r / p, -q / p))
}

/// Matrix of the dimensionless Schrödinger system `φ' = A φ`.
pub fn tise_matrix(b: f64, k_squared: f64) -> Matrix2 {
    Matrix2::new(0.0, 1.0, -k_squared, b)
}

/// Matrix governing the polynomial factor `f` of `φ = g f`:
///
/// ```text
/// C = | 0                        1          |
///     | -(g k² - b g' + g'')/g   b - 2 g'/g |
/// ```
pub fn factor_matrix(
    g: f64,
    g_prime: f64,
    g_double_prime: f64,
    b: f64,
    k_squared: f64,
) -> Result<Matrix2> {
    if g == 0.0 {
        return Err(Error::ZeroIntegratingFactor);
    }
    Ok(Matrix2::new(
        0.0,
        1.0,
        -(g * k_squared - b * g_prime + g_double_prime) / g,
        b - 2.0 * g_prime / g,
    ))
}

/// Max-abs entry of `B⁻¹(AB - B') - C`; zero in exact arithmetic whenever
/// the four matrices come from one consistent `(g, b, k²)` triple.
pub fn factor_identity_residual(
    a: &Matrix2,
    b: &Matrix2,
    b_prime: &Matrix2,
    c: &Matrix2,
) -> Result<f64> {
    let b_inv = b.inverse()?;
    let lhs = b_inv.mul(&a.mul(b).sub(b_prime));
    Ok(lhs.sub(c).max_abs())
}

/// Fixed-step classical RK4 for `φ' = A(x)φ` with `A` built from `b`, `k²`.
///
/// `samples[0]` is the initial vector; any non-finite coefficient aborts
/// with the position of failure.
pub fn integrate_phase_space<Fb, Fk>(
    b: Fb,
    k_squared: Fk,
    initial: PhaseVector,
    grid: &Grid,
) -> Result<PhaseTrajectory>
where
    Fb: Fn(f64) -> f64,
    Fk: Fn(f64) -> f64,
{
    if !initial.is_finite() {
        return Err(Error::NonFinite { x: grid.x_min() });
    }
    let h = grid.spacing();
    let mut samples = Vec::with_capacity(grid.n_points());
    samples.push(initial);
    let mut phi = initial;

    let deriv = |x: f64, p: PhaseVector| -> Result<PhaseVector> {
        let bv = b(x);
        let kv = k_squared(x);
        if !bv.is_finite() || !kv.is_finite() {
            return Err(Error::NonFinite { x });
        }
        Ok(PhaseVector::new(p.slope, -kv * p.value + bv * p.slope))
    };

    for i in 0..grid.n_points() - 1 {
        let x = grid.point(i);
        let k1 = deriv(x, phi)?;
        let k2 = deriv(
            x + 0.5 * h,
            PhaseVector::new(
                phi.value + 0.5 * h * k1.value,
                phi.slope + 0.5 * h * k1.slope,
            ),
        )?;
        let k3 = deriv(
            x + 0.5 * h,
            PhaseVector::new(
                phi.value + 0.5 * h * k2.value,
                phi.slope + 0.5 * h * k2.slope,
            ),
        )?;
        let k4 = deriv(
            x + h,
            PhaseVector::new(phi.value + h * k3.value, phi.slope + h * k3.slope),
        )?;
        phi = PhaseVector::new(
            phi.value + h / 6.0 * (k1.value + 2.0 * k2.value + 2.0 * k3.value + k4.value),
            phi.slope + h / 6.0 * (k1.slope + 2.0 * k2.slope + 2.0 * k3.slope + k4.slope),
        );
        if !phi.is_finite() {
            return Err(Error::NonFinite { x: grid.point(i + 1) });
        }
        samples.push(phi);
    }

    Ok(PhaseTrajectory {
        grid: *grid,
        samples,
    })
}

/// Value at `x_max` of the renormalized trajectory; sign is preserved by
/// the (positive) rescalings, which is all bisection needs.
fn boundary_value<Fb, Fk>(
    b: &Fb,
    k_squared: &Fk,
    initial: PhaseVector,
    grid: &Grid,
    renorm_threshold: f64,
) -> Result<f64>
where
    Fb: Fn(f64) -> f64,
    Fk: Fn(f64) -> f64,
{
    let h = grid.spacing();
    let mut phi = initial;

    let deriv = |x: f64, p: PhaseVector| -> Result<PhaseVector> {
        let bv = b(x);
        let kv = k_squared(x);
        if !bv.is_finite() || !kv.is_finite() {
            return Err(Error::NonFinite { x });
        }
        Ok(PhaseVector::new(p.slope, -kv * p.value + bv * p.slope))
    };

    for i in 0..grid.n_points() - 1 {
        let x = grid.point(i);
        let k1 = deriv(x, phi)?;
        let k2 = deriv(
            x + 0.5 * h,
            PhaseVector::new(
                phi.value + 0.5 * h * k1.value,
                phi.slope + 0.5 * h * k1.slope,
            ),
        )?;
        let k3 = deriv(
            x + 0.5 * h,
            PhaseVector::new(
                phi.value + 0.5 * h * k2.value,
                phi.slope + 0.5 * h * k2.slope,
            ),
        )?;
        let k4 = deriv(
            x + h,
            PhaseVector::new(phi.value + h * k3.value, phi.slope + h * k3.slope),
        )?;
        phi = PhaseVector::new(
            phi.value + h / 6.0 * (k1.value + 2.0 * k2.value + 2.0 * k3.value + k4.value),
            phi.slope + h / 6.0 * (k1.slope + 2.0 * k2.slope + 2.0 * k3.slope + k4.slope),
        );
        if !phi.is_finite() {
            return Err(Error::NonFinite { x: grid.point(i + 1) });
        }
        let norm = phi.norm_inf();
        if norm > renorm_threshold {
            phi = phi.scaled(1.0 / norm);
        }
    }
    Ok(phi.value)
}

/// Shooting eigenvalue search with symmetry-selected initial data.
///
/// Bisects ε over `bracket` on the sign of the trajectory value at `x_max`.
/// `k_squared_of(ε, x)` evaluates the energy-dependent coefficient.
pub fn shoot_eigenvalue<Fb, Fk>(
    b: Fb,
    k_squared_of: Fk,
    bracket: (f64, f64),
    grid: &Grid,
    symmetry: Symmetry,
) -> Result<f64>
where
    Fb: Fn(f64) -> f64,
    Fk: Fn(f64, f64) -> f64,
{
    shoot_eigenvalue_with_initial(
        b,
        k_squared_of,
        bracket,
        grid,
        symmetry.initial(),
        &ShootingConfig::default(),
    )
}

/// Shooting with caller-supplied initial data (e.g. the small-x series of a
/// radial equation) and explicit configuration.
pub fn shoot_eigenvalue_with_initial<Fb, Fk>(
    b: Fb,
    k_squared_of: Fk,
    bracket: (f64, f64),
    grid: &Grid,
    initial: PhaseVector,
    config: &ShootingConfig,
) -> Result<f64>
where
    Fb: Fn(f64) -> f64,
    Fk: Fn(f64, f64) -> f64,
{
    let (mut lo, mut hi) = bracket;
    if lo >= hi {
        return Err(Error::InvalidParameter(format!(
            "bracket [{lo}, {hi}] is empty"
        )));
    }
    let f_lo = boundary_value(
        &b,
        &|x| k_squared_of(lo, x),
        initial,
        grid,
        config.renorm_threshold,
    )?;
    let f_hi = boundary_value(
        &b,
        &|x| k_squared_of(hi, x),
        initial,
        grid,
        config.renorm_threshold,
    )?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }

    let sign_lo = f_lo.signum();
    for _ in 0..config.max_iterations {
        let mid = 0.5 * (lo + hi);
        if hi - lo < config.tolerance {
            return Ok(mid);
        }
        let f_mid = boundary_value(
            &b,
            &|x| k_squared_of(mid, x),
            initial,
            grid,
            config.renorm_threshold,
        )?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence {
        tolerance: config.tolerance,
        max_iterations: config.max_iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn template_matrix_direct_substitution() {
        // Hermite coefficients at x=0, lambda=1 and x=1, lambda=2.
        let d = template_matrix(1.0, 0.0, 2.0).unwrap();
        assert_eq!(d, Matrix2::new(0.0, 1.0, -2.0, 0.0));
        let d = template_matrix(1.0, -2.0, 4.0).unwrap();
        assert_eq!(d, Matrix2::new(0.0, 1.0, -4.0, 2.0));
    }

    #[test]
    fn template_matrix_rejects_singular_p() {
        assert!(matches!(
            template_matrix(0.0, 1.0, 1.0),
            Err(Error::SingularCoefficient { .. })
        ));
    }

    #[test]
    fn tise_matrix_entries() {
        assert_eq!(tise_matrix(0.0, 1.0), Matrix2::new(0.0, 1.0, -1.0, 0.0));
        // oscillator ground state at x=0 in dimensionless units: k² = ε = 1
        assert_eq!(tise_matrix(0.0, 1.0), Matrix2::new(0.0, 1.0, -1.0, 0.0));
        assert_eq!(
            tise_matrix(-2.0, -0.25),
            Matrix2::new(0.0, 1.0, 0.25, -2.0)
        );
    }

    #[test]
    fn factor_matrix_identity_factor_reduces_to_tise_matrix() {
        let c = factor_matrix(1.0, 0.0, 0.0, 0.0, 4.0).unwrap();
        assert_eq!(c, Matrix2::new(0.0, 1.0, -4.0, 0.0));
    }

    #[test]
    fn factor_matrix_gaussian_factor_matches_template_matrix() {
        // g = exp(-x²/2) at x=0: g=1, g'=0, g''=-1; k² = 1 + 2λ at λ=1.
        let c = factor_matrix(1.0, 0.0, -1.0, 0.0, 3.0).unwrap();
        let d = template_matrix(1.0, 0.0, 2.0).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn factor_matrix_rejects_zero_g() {
        assert!(matches!(
            factor_matrix(0.0, 1.0, 0.0, 0.0, 1.0),
            Err(Error::ZeroIntegratingFactor)
        ));
    }

    #[test]
    fn factor_identity_zero_for_identity_b() {
        let a = tise_matrix(0.3, 2.0);
        let b = Matrix2::identity();
        let b_prime = Matrix2::zero();
        let residual = factor_identity_residual(&a, &b, &b_prime, &a).unwrap();
        assert_eq!(residual, 0.0);
    }

    #[test]
    fn factor_identity_detects_constructed_offset() {
        let a = tise_matrix(-0.7, 1.3);
        let b = Matrix2::identity();
        let b_prime = Matrix2::zero();
        let mut c = a;
        c.a21 += 1.0;
        let residual = factor_identity_residual(&a, &b, &b_prime, &c).unwrap();
        assert_relative_eq!(residual, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn factor_identity_consistent_oscillator_data() {
        // g = exp(-x²/2), b = 0, k² = ε - x² at x = 0.7, ε = 3.
        let x: f64 = 0.7;
        let eps = 3.0;
        let g = (-x * x / 2.0).exp();
        let g_p = -x * g;
        let g_pp = (x * x - 1.0) * g;
        let k2 = eps - x * x;
        let a = tise_matrix(0.0, k2);
        let b = Matrix2::new(g, 0.0, g_p, g);
        let b_prime = Matrix2::new(g_p, 0.0, g_pp, g_p);
        let c = factor_matrix(g, g_p, g_pp, 0.0, k2).unwrap();
        let residual = factor_identity_residual(&a, &b, &b_prime, &c).unwrap();
        assert!(residual < 1e-12, "residual = {residual:e}");
    }

    #[test]
    fn near_singular_b_is_rejected() {
        let a = tise_matrix(0.0, 1.0);
        let b = Matrix2::new(1e-8, 0.0, 0.0, 1e-8); // det = 1e-16
        let b_prime = Matrix2::zero();
        assert!(matches!(
            factor_identity_residual(&a, &b, &b_prime, &a),
            Err(Error::NearSingular { .. })
        ));
    }

    #[test]
    fn grid_invariants() {
        assert!(Grid::new(0.0, 1.0, 2).is_err());
        assert!(Grid::new(1.0, 0.0, 10).is_err());
        assert!(Grid::new(0.0, f64::INFINITY, 10).is_err());
        let g = Grid::new(0.0, 1.0, 11).unwrap();
        assert_relative_eq!(g.spacing(), 0.1);
        assert_relative_eq!(g.point(10), 1.0);
        assert_eq!(g.refined().n_points(), 21);
    }

    #[test]
    fn rk4_exponential_growth() {
        // y'' = y with y(0) = 1, y'(0) = 1 has solution e^x.
        let grid = Grid::new(0.0, 1.0, 2001).unwrap();
        let traj =
            integrate_phase_space(|_| 0.0, |_| -1.0, PhaseVector::new(1.0, 1.0), &grid).unwrap();
        let err = (traj.last().value - 1f64.exp()).abs();
        assert!(err < 1e-8, "err = {err:e}");
    }

    #[test]
    fn rk4_oscillator_ground_state_decays() {
        let grid = Grid::new(0.0, 6.0, 2400).unwrap();
        let eps = 1.0;
        let traj = integrate_phase_space(
            |_| 0.0,
            |x| eps - x * x,
            PhaseVector::new(1.0, 0.0),
            &grid,
        )
        .unwrap();
        let tail = traj.last().value.abs();
        assert!(tail < 1e-6, "tail = {tail:e}");
        // monotone decay beyond the classical turning point x = 1
        let h = grid.spacing();
        let start = (1.5 / h) as usize;
        let vals: Vec<f64> = traj.values().collect();
        for i in start..vals.len() - 1 {
            assert!(vals[i + 1] <= vals[i] + 1e-12);
        }
    }

    #[test]
    fn rk4_non_eigenvalue_diverges() {
        let grid = Grid::new(0.0, 6.0, 2400).unwrap();
        let eps = 2.0;
        let traj = integrate_phase_space(
            |_| 0.0,
            |x| eps - x * x,
            PhaseVector::new(1.0, 0.0),
            &grid,
        )
        .unwrap();
        assert!(traj.last().value.abs() > 1e2);
    }

    #[test]
    fn rk4_aborts_on_non_finite_coefficient() {
        let grid = Grid::new(0.0, 1.0, 101).unwrap();
        let res = integrate_phase_space(
            |_| 0.0,
            |x| if x > 0.5 { f64::NAN } else { 1.0 },
            PhaseVector::new(1.0, 0.0),
            &grid,
        );
        assert!(matches!(res, Err(Error::NonFinite { .. })));
    }

    #[test]
    fn rk4_fourth_order_convergence() {
        // y'' = -y, y(0)=0, y'(0)=1, exact sin(x).
        let exact = 2.0f64.sin();
        let err_at = |n: usize| {
            let grid = Grid::new(0.0, 2.0, n).unwrap();
            let traj =
                integrate_phase_space(|_| 0.0, |_| 1.0, PhaseVector::new(0.0, 1.0), &grid).unwrap();
            (traj.last().value - exact).abs()
        };
        let coarse = err_at(101);
        let fine = err_at(201);
        let factor = coarse / fine;
        assert!(factor >= 12.0, "convergence factor {factor} < 12");
    }

    #[test]
    fn rk4_linearity() {
        let grid = Grid::new(0.0, 3.0, 301).unwrap();
        let base =
            integrate_phase_space(|_| 0.1, |x| 2.0 - x, PhaseVector::new(1.0, -0.5), &grid)
                .unwrap();
        let scaled = integrate_phase_space(
            |_| 0.1,
            |x| 2.0 - x,
            PhaseVector::new(3.0, -1.5),
            &grid,
        )
        .unwrap();
        for (a, b) in base.samples().iter().zip(scaled.samples()) {
            assert_relative_eq!(3.0 * a.value, b.value, max_relative = 1e-12);
            assert_relative_eq!(3.0 * a.slope, b.slope, max_relative = 1e-12);
        }
    }

    #[test]
    fn shooting_finds_oscillator_ground_state() {
        let grid = Grid::new(0.0, 8.0, 3200).unwrap();
        let eps = shoot_eigenvalue(
            |_| 0.0,
            |e, x| e - x * x,
            (0.5, 1.5),
            &grid,
            Symmetry::Even,
        )
        .unwrap();
        assert!((eps - 1.0).abs() < 1e-6, "eps = {eps}");
    }

    #[test]
    fn shooting_finds_first_odd_state() {
        let grid = Grid::new(0.0, 8.0, 3200).unwrap();
        let eps = shoot_eigenvalue(
            |_| 0.0,
            |e, x| e - x * x,
            (2.5, 3.5),
            &grid,
            Symmetry::Odd,
        )
        .unwrap();
        assert!((eps - 3.0).abs() < 1e-6, "eps = {eps}");
    }

    #[test]
    fn shooting_rejects_empty_bracket() {
        let grid = Grid::new(0.0, 8.0, 3200).unwrap();
        let res = shoot_eigenvalue(
            |_| 0.0,
            |e, x| e - x * x,
            (1.2, 1.8),
            &grid,
            Symmetry::Even,
        );
        assert!(matches!(res, Err(Error::NoSignChange { .. })));
    }
}
