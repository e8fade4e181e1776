//! Minkowski vector space layer: the signature (-,+,…,+) bilinear form, the
//! reference norm and causal classification of vectors.
//!
//! Index 0 is the time coordinate throughout; `e1` in the sense of the
//! time-orientation vector is the basis vector with a 1 in slot 0.

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Points and tangent vectors share the coordinate representation.
pub type Vector = DVector<f64>;
pub type Point = DVector<f64>;

/// Reference norm on the ambient vector space. The Lorentzian structure never
/// depends on it; cone margins, lattice diameters and Lipschitz quotients do.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormKind {
    Euclidean,
    Sup,
}

impl NormKind {
    pub fn norm(&self, v: &Vector) -> f64 {
        match self {
            NormKind::Euclidean => v.norm(),
            NormKind::Sup => v.iter().fold(0.0_f64, |m, x| m.max(x.abs())),
        }
    }

    /// Dual norm: Euclidean is self-dual, the dual of sup is the 1-norm.
    pub fn dual_norm(&self, w: &Vector) -> f64 {
        match self {
            NormKind::Euclidean => w.norm(),
            NormKind::Sup => w.iter().map(|x| x.abs()).sum(),
        }
    }
}

/// Causal type of a vector with respect to the form and the time orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CausalClass {
    FutureTimelike,
    FutureLightlike,
    PastTimelike,
    PastLightlike,
    Spacelike,
    Zero,
}

impl CausalClass {
    /// Future-pointing causal vectors, i.e. members of the cone.
    pub fn is_future_causal(&self) -> bool {
        matches!(self, CausalClass::FutureTimelike | CausalClass::FutureLightlike)
    }
}

/// Dimension, bilinear form of signature (-,+,…,+) in the standard basis, and
/// the reference norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MinkowskiSpace {
    pub dim: usize,
    pub norm_kind: NormKind,
}

impl MinkowskiSpace {
    pub fn new(dim: usize, norm_kind: NormKind) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidInput(format!(
                "space dimension must be at least 2, got {dim}"
            )));
        }
        Ok(MinkowskiSpace { dim, norm_kind })
    }

    pub fn check_dim(&self, v: &Vector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// The bilinear form: -v_0 w_0 + Σ_{i>=1} v_i w_i.
    pub fn inner(&self, v: &Vector, w: &Vector) -> Result<f64> {
        self.check_dim(v)?;
        self.check_dim(w)?;
        Ok(self.inner_unchecked(v, w))
    }

    #[inline]
    pub fn inner_unchecked(&self, v: &Vector, w: &Vector) -> f64 {
        let mut acc = -v[0] * w[0];
        for i in 1..v.len() {
            acc += v[i] * w[i];
        }
        acc
    }

    /// |v|_1 = sqrt(|<v,v>_1|); degree-1 positively homogeneous.
    #[inline]
    pub fn magnitude(&self, v: &Vector) -> f64 {
        self.inner_unchecked(v, v).abs().sqrt()
    }

    /// Reference norm of a vector.
    #[inline]
    pub fn norm(&self, v: &Vector) -> f64 {
        self.norm_kind.norm(v)
    }

    /// Euclidean norm of the spatial block v_1..v_{m-1}.
    #[inline]
    pub fn spatial_norm(&self, v: &Vector) -> f64 {
        let mut acc = 0.0;
        for i in 1..v.len() {
            acc += v[i] * v[i];
        }
        acc.sqrt()
    }

    /// Classification by the signs of <v,v>_1 and the time component.
    pub fn classify(&self, v: &Vector) -> CausalClass {
        if v.iter().all(|x| *x == 0.0) {
            return CausalClass::Zero;
        }
        let q = self.inner_unchecked(v, v);
        // <v, e1>_1 = -v_0, so future-pointing means v_0 > 0.
        let future = v[0] > 0.0;
        if q < 0.0 {
            if future {
                CausalClass::FutureTimelike
            } else {
                CausalClass::PastTimelike
            }
        } else if q == 0.0 {
            if future {
                CausalClass::FutureLightlike
            } else {
                CausalClass::PastLightlike
            }
        } else {
            CausalClass::Spacelike
        }
    }

    /// Time-orientation vector (1, 0, …, 0).
    pub fn time_axis(&self) -> Vector {
        let mut v = Vector::zeros(self.dim);
        v[0] = 1.0;
        v
    }
}
