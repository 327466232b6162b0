//! Flux functions `F(u)` and their derivatives.

use crate::error::{Error, Result};

/// A scalar flux `F` paired with its analytic derivative `F'`.
///
/// The scheme only consumes `F'`; `F` is kept for diagnostics and for
/// checking that the pair is consistent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FluxModel {
    /// `F(u) = a u` with constant speed `a != 0`.
    Linear { speed: f64 },
    /// `F(u) = u^2 / 2`.
    Burgers,
}

impl FluxModel {
    pub fn linear(speed: f64) -> Result<Self> {
        if speed == 0.0 || !speed.is_finite() {
            return Err(Error::ZeroAdvectionSpeed);
        }
        Ok(FluxModel::Linear { speed })
    }

    pub fn burgers() -> Self {
        FluxModel::Burgers
    }

    pub fn name(&self) -> &'static str {
        match self {
            FluxModel::Linear { .. } => "linear",
            FluxModel::Burgers => "burgers",
        }
    }

    /// Speed `a` of the linear flux, `None` otherwise.
    pub fn linear_speed(&self) -> Option<f64> {
        match *self {
            FluxModel::Linear { speed } => Some(speed),
            FluxModel::Burgers => None,
        }
    }

    #[inline]
    pub fn flux(&self, u: f64) -> f64 {
        match *self {
            FluxModel::Linear { speed } => speed * u,
            FluxModel::Burgers => 0.5 * u * u,
        }
    }

    #[inline]
    pub fn dflux(&self, u: f64) -> f64 {
        match *self {
            FluxModel::Linear { speed } => speed,
            FluxModel::Burgers => u,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_values() {
        let f = FluxModel::linear(2.0).unwrap();
        assert_eq!(f.flux(3.0), 6.0);
        assert_eq!(f.dflux(3.0), 2.0);
        let g = FluxModel::linear(-1.0).unwrap();
        for u in [-5.0, 0.0, 0.5, 17.0] {
            assert_eq!(g.dflux(u), -1.0);
        }
    }

    #[test]
    fn linear_rejects_zero_speed() {
        assert!(matches!(
            FluxModel::linear(0.0),
            Err(Error::ZeroAdvectionSpeed)
        ));
    }

    #[test]
    fn burgers_values() {
        let f = FluxModel::burgers();
        assert_eq!((f.flux(2.0), f.dflux(2.0)), (2.0, 2.0));
        assert_eq!((f.flux(0.0), f.dflux(0.0)), (0.0, 0.0));
        assert_eq!((f.flux(-3.0), f.dflux(-3.0)), (4.5, -3.0));
    }

    #[test]
    fn derivative_matches_central_difference() {
        let delta = 1e-6;
        for model in [FluxModel::linear(0.7).unwrap(), FluxModel::burgers()] {
            let mut u = -10.0;
            while u <= 10.0 {
                let fd = (model.flux(u + delta) - model.flux(u - delta)) / (2.0 * delta);
                let exact = model.dflux(u);
                assert!(
                    (fd - exact).abs() <= 1e-5 * exact.abs().max(1.0),
                    "{} at u={u}: fd={fd} exact={exact}",
                    model.name()
                );
                u += 0.37;
            }
        }
    }
}
