//! The Coxeter plane and projections of noncrossing lines onto it.

use super::{FlatId, NoncrossingSet};
use crate::algebra::CycloNumber;
use crate::error::{Error, Result};
use crate::group::{CoxeterChoice, CoxeterGroup};

/// P ⊗ C is spanned by the ω-eigenvector v of c and its conjugate.
pub struct CoxeterPlane {
    pub eigenvector: Vec<CycloNumber>,
    /// (line, whether its orthogonal projection to P is nonzero)
    pub line_projections: Vec<(FlatId, bool)>,
}

impl CoxeterPlane {
    pub fn all_lines_project_nonzero(&self) -> bool {
        self.line_projections.iter().all(|&(_, ok)| ok)
    }
}

pub fn coxeter_plane(group: &CoxeterGroup, nc: &NoncrossingSet) -> Result<CoxeterPlane> {
    if group.coxeter_choice() != CoxeterChoice::Bipartite {
        return Err(Error::Invalid("the Coxeter plane needs the bipartite Coxeter element".into()));
    }
    let f = group.working_field();
    let m = group.matrix(group.coxeter_element()).lift_to(f);
    let kernel = m.minus_scalar(&group.omega()).kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::Verification(format!("ω-eigenspace of c has dimension {}", kernel.len())));
    }
    let v = kernel.into_iter().next().expect("one vector");
    // x real, so ⟨x, v̄⟩ is the conjugate of ⟨x, v⟩; projection vanishes iff ⟨x, v⟩ = 0
    let line_projections = nc
        .lines(group)
        .into_iter()
        .map(|i| {
            let x = nc.flats()[i];
            let b = &group.flat(x).basis[0];
            (x, !group.inner(b, &v).is_zero())
        })
        .collect();
    Ok(CoxeterPlane { eigenvector: v, line_projections })
}
