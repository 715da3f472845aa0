//! Centralized default tolerances.
//!
//! Every threshold used by the verification suites lives here so reports can
//! echo the exact values they were judged against. Individual runs may
//! override fields through [`Tolerances`].

use serde::{Deserialize, Serialize};

/// Equality tolerance for glued edge lengths. Constructions emit analytically
/// equal lengths, so this only binds on corrupted input.
pub const GLUE_LENGTH: f64 = 1e-12;

/// Law-of-cosines arguments may exceed [-1, 1] by at most this much before the
/// triangle is rejected instead of clamped.
pub const COSINE_CLAMP: f64 = 1e-12;

/// Discrete Gauss-Bonnet residual on any valid complex.
pub const GAUSS_BONNET: f64 = 1e-9;

/// Exact identities of the named constructions (areas, cone angles).
pub const CONSTRUCTION: f64 = 1e-9;

/// Slack allowed below curvature 1 in the smoothing certificate.
pub const SMOOTHING_CURVATURE: f64 = 1e-6;

/// Boundary match between a smoothed profile and the cone it replaces.
pub const SMOOTHING_BOUNDARY: f64 = 1e-9;

/// Agreement between the two total-curvature routes on a revolution profile.
pub const REVOLUTION_AGREEMENT: f64 = 1e-8;

/// Relative quadrature tolerance for areas of catalog conformal metrics.
pub const AREA_QUADRATURE_REL: f64 = 1e-8;

/// Relative quadrature tolerance for circle lengths of catalog metrics.
pub const CIRCLE_QUADRATURE_REL: f64 = 1e-10;

/// Supersolution residual threshold for metrics with analytic Laplacians.
pub const RESIDUAL_ANALYTIC: f64 = 1e-8;

/// Supersolution residual threshold for grid metrics (finite differences).
pub const RESIDUAL_GRID: f64 = 1e-4;

/// Pointwise Liouville residual of the round metric.
pub const LIOUVILLE: f64 = 1e-10;

/// Relative agreement between closed forms and quadrature for the
/// exponentially pinched metric ("romney" in the catalog).
pub const ROMNEY_REL: f64 = 1e-6;

/// Slack for the Hoelder integral against the measured area.
pub const HOELDER_SLACK: f64 = 1e-6;

/// Relative tolerance on the cone-angle growth limits of ball areas and
/// boundary lengths.
pub const GROWTH_REL: f64 = 1e-2;

/// Absolute margin subtracted from the diameter bound of the doubled-triangle
/// construction (mesh extrapolation accuracy at depth <= 6).
pub const DIAMETER_MARGIN: f64 = 0.05;

/// Agreement between analytic and finite-difference Laplacians at step 1e-3.
pub const FD_CONSISTENCY: f64 = 1e-6;

/// Area / total-curvature tolerance for complete revolution profiles.
pub const COMPLETE_PROFILE: f64 = 1e-6;

/// Default node budget for geodesic meshes.
pub const NODE_BUDGET: usize = 5_000_000;

/// Resolved tolerance set, echoed into every verification report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub glue_length: f64,
    pub gauss_bonnet: f64,
    pub construction: f64,
    pub smoothing_curvature: f64,
    pub smoothing_boundary: f64,
    pub revolution_agreement: f64,
    pub area_quadrature_rel: f64,
    pub circle_quadrature_rel: f64,
    pub residual_analytic: f64,
    pub residual_grid: f64,
    pub liouville: f64,
    pub romney_rel: f64,
    pub hoelder_slack: f64,
    pub growth_rel: f64,
    pub diameter_margin: f64,
    pub fd_consistency: f64,
    pub complete_profile: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            glue_length: GLUE_LENGTH,
            gauss_bonnet: GAUSS_BONNET,
            construction: CONSTRUCTION,
            smoothing_curvature: SMOOTHING_CURVATURE,
            smoothing_boundary: SMOOTHING_BOUNDARY,
            revolution_agreement: REVOLUTION_AGREEMENT,
            area_quadrature_rel: AREA_QUADRATURE_REL,
            circle_quadrature_rel: CIRCLE_QUADRATURE_REL,
            residual_analytic: RESIDUAL_ANALYTIC,
            residual_grid: RESIDUAL_GRID,
            liouville: LIOUVILLE,
            romney_rel: ROMNEY_REL,
            hoelder_slack: HOELDER_SLACK,
            growth_rel: GROWTH_REL,
            diameter_margin: DIAMETER_MARGIN,
            fd_consistency: FD_CONSISTENCY,
            complete_profile: COMPLETE_PROFILE,
        }
    }
}

impl Tolerances {
    /// Override one field by name. Unknown keys are rejected.
    pub fn set(&mut self, key: &str, value: f64) -> crate::Result<()> {
        match key {
            "glue_length" => self.glue_length = value,
            "gauss_bonnet" => self.gauss_bonnet = value,
            "construction" => self.construction = value,
            "smoothing_curvature" => self.smoothing_curvature = value,
            "smoothing_boundary" => self.smoothing_boundary = value,
            "revolution_agreement" => self.revolution_agreement = value,
            "area_quadrature_rel" => self.area_quadrature_rel = value,
            "circle_quadrature_rel" => self.circle_quadrature_rel = value,
            "residual_analytic" => self.residual_analytic = value,
            "residual_grid" => self.residual_grid = value,
            "liouville" => self.liouville = value,
            "romney_rel" => self.romney_rel = value,
            "hoelder_slack" => self.hoelder_slack = value,
            "growth_rel" => self.growth_rel = value,
            "diameter_margin" => self.diameter_margin = value,
            "fd_consistency" => self.fd_consistency = value,
            "complete_profile" => self.complete_profile = value,
            _ => {
                return Err(crate::Error::InvalidParameter {
                    name: format!("tolerance.{key}"),
                    reason: "unknown tolerance key".into(),
                })
            }
        }
        Ok(())
    }
}
