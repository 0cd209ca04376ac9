use super::{
    multiply, negate_q, restricted_euler_product, signed_odd_theta, substitute_power, EulerFactor,
    TruncatedSeries,
};
use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// The theta-function identities checked coefficientwise. Each is stated as
/// `lhs = rhs` with both sides division-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `φ(-q)ψ(q)² = Σ (-1)^m (2m+1) q^{2t_m}`
    ParityDifference,
    /// `ψ(q)² = φ(q)ψ(q²)`
    PsiSquare,
    /// `φ(q)ψ(q)² + φ(-q)ψ(-q)² = 2φ(q²)²ψ(q²)`
    ParitySum,
    /// `φ(-q) = ∏ (1-q^{2n-1})² (1-q^{2n})`
    GaussPhi,
    /// `ψ(q) ∏ (1-qⁿ) = ∏ (1-q^{2n})²`
    GaussPsi,
    /// `∏ (1-qⁿ)³ = Σ (-1)^m (2m+1) q^{t_m}`
    Jacobi,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::ParityDifference,
        Identity::PsiSquare,
        Identity::ParitySum,
        Identity::GaussPhi,
        Identity::GaussPsi,
        Identity::Jacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::ParityDifference => "parity-difference",
            Identity::PsiSquare => "psi-square",
            Identity::ParitySum => "parity-sum",
            Identity::GaussPhi => "gauss-phi",
            Identity::GaussPsi => "gauss-psi",
            Identity::Jacobi => "jacobi",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Identity::ParityDifference => "phi(-q)psi(q)^2 = sum (-1)^m (2m+1) q^(2t_m)",
            Identity::PsiSquare => "psi(q)^2 = phi(q)psi(q^2)",
            Identity::ParitySum => "phi(q)psi(q)^2 + phi(-q)psi(-q)^2 = 2phi(q^2)^2 psi(q^2)",
            Identity::GaussPhi => "phi(-q) = prod (1-q^(2n-1))^2 (1-q^(2n))",
            Identity::GaussPsi => "psi(q) prod (1-q^n) = prod (1-q^(2n))^2",
            Identity::Jacobi => "prod (1-q^n)^3 = sum (-1)^m (2m+1) q^(t_m)",
        }
    }

    /// Both sides, built from the supplied `φ` and `ψ` expansions (which must
    /// share an order).
    pub fn sides(
        self,
        phi: &TruncatedSeries,
        psi: &TruncatedSeries,
    ) -> Result<(TruncatedSeries, TruncatedSeries)> {
        let n = phi.order();
        if psi.order() != n {
            return Err(Error::OrderMismatch(n, psi.order()));
        }
        let square = |s: &TruncatedSeries| multiply(s, s);
        Ok(match self {
            Identity::ParityDifference => (
                multiply(&negate_q(phi), &square(psi)?)?,
                signed_odd_theta(n, 2)?,
            ),
            Identity::PsiSquare => (square(psi)?, multiply(phi, &substitute_power(psi, 2)?)?),
            Identity::ParitySum => {
                let plus = multiply(phi, &square(psi)?)?;
                let minus = multiply(&negate_q(phi), &square(&negate_q(psi))?)?;
                let phi2 = substitute_power(phi, 2)?;
                let psi2 = substitute_power(psi, 2)?;
                (
                    plus.add(&minus)?,
                    multiply(&square(&phi2)?, &psi2)?.scale(2)?,
                )
            }
            Identity::GaussPhi => (
                negate_q(phi),
                restricted_euler_product(
                    &[EulerFactor::new(2, 1, 2), EulerFactor::new(2, 0, 1)],
                    n,
                )?,
            ),
            Identity::GaussPsi => (
                multiply(
                    psi,
                    &restricted_euler_product(&[EulerFactor::new(1, 0, 1)], n)?,
                )?,
                restricted_euler_product(&[EulerFactor::new(2, 0, 2)], n)?,
            ),
            Identity::Jacobi => (
                restricted_euler_product(&[EulerFactor::new(1, 0, 3)], n)?,
                signed_odd_theta(n, 1)?,
            ),
        })
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown identity '{s}'")))
    }
}
