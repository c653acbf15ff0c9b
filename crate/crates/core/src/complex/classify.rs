use std::fmt;

use serde::Serialize;

use super::{ComplexError, DeltaComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SurfaceTag {
    Sphere,
    Disk,
    Annulus,
    Torus,
    MobiusStrip,
    KleinBottle,
    ProjectivePlane,
    Other,
}

impl SurfaceTag {
    pub fn name(self) -> &'static str {
        match self {
            SurfaceTag::Sphere => "Sphere",
            SurfaceTag::Disk => "Disk",
            SurfaceTag::Annulus => "Annulus",
            SurfaceTag::Torus => "Torus",
            SurfaceTag::MobiusStrip => "MobiusStrip",
            SurfaceTag::KleinBottle => "KleinBottle",
            SurfaceTag::ProjectivePlane => "ProjectivePlane",
            SurfaceTag::Other => "Other",
        }
    }

    /// Looks the tag up from orientability, Euler characteristic and boundary count.
    pub fn from_invariants(orientable: bool, euler: i64, boundary: usize) -> SurfaceTag {
        match (orientable, euler, boundary) {
            (true, 2, 0) => SurfaceTag::Sphere,
            (true, 1, 1) => SurfaceTag::Disk,
            (true, 0, 2) => SurfaceTag::Annulus,
            (true, 0, 0) => SurfaceTag::Torus,
            (false, 0, 1) => SurfaceTag::MobiusStrip,
            (false, 0, 0) => SurfaceTag::KleinBottle,
            (false, 1, 0) => SurfaceTag::ProjectivePlane,
            _ => SurfaceTag::Other,
        }
    }
}

impl fmt::Display for SurfaceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceRecord {
    pub connected: bool,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub boundary_components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceType {
    pub tag: SurfaceTag,
    pub record: SurfaceRecord,
}

impl fmt::Display for SurfaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.record;
        write!(
            f,
            "{} (chi={}, {}, boundary components={})",
            self.tag,
            r.euler_characteristic,
            if r.orientable { "orientable" } else { "non-orientable" },
            r.boundary_components
        )
    }
}

impl DeltaComplex {
    /// Names a connected compact surface by its invariants.
    pub fn classify(&self) -> Result<SurfaceType, ComplexError> {
        let components = self.component_count();
        if components != 1 {
            return Err(ComplexError::Disconnected(components));
        }
        let report = self.surface_report();
        if !report.is_surface {
            return Err(ComplexError::NotASurface(report.defects));
        }
        let orientable = self.orient()?.is_orientable();
        let euler = self.euler_characteristic();
        let boundary = self.boundary_components()?.len();
        Ok(SurfaceType {
            tag: SurfaceTag::from_invariants(orientable, euler, boundary),
            record: SurfaceRecord { connected: true, euler_characteristic: euler, orientable, boundary_components: boundary },
        })
    }
}
