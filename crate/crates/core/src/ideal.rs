//! Homogeneous ideals in `k[x, y, z]` accessed one graded piece at a time.

use std::sync::Mutex;

use crate::algebra::{Field, HomogeneousForm};
use crate::gradedla::GradedPiece;

/// Number of variables of the plane's coordinate ring.
pub const PLANE_VARS: usize = 3;

/// Anything that can produce its degree-`d` piece `I_d`.
pub trait GradedIdeal: Sync {
    fn field(&self) -> Field;

    fn piece(&self, d: usize) -> GradedPiece;

    /// The scheme degree if it is known up front (an explicit point set).
    fn known_point_count(&self) -> Option<usize> {
        None
    }
}

/// The ideal generated by finitely many forms, pieces cached as computed.
#[derive(Debug)]
pub struct FormIdeal {
    field: Field,
    nvars: usize,
    generators: Vec<HomogeneousForm>,
    cache: Mutex<Vec<GradedPiece>>,
}

impl FormIdeal {
    pub fn new(field: Field, nvars: usize, generators: Vec<HomogeneousForm>) -> FormIdeal {
        FormIdeal { field, nvars, generators, cache: Mutex::new(Vec::new()) }
    }

    pub fn plane(field: Field, generators: Vec<HomogeneousForm>) -> FormIdeal {
        FormIdeal::new(field, PLANE_VARS, generators)
    }

    pub fn generators(&self) -> &[HomogeneousForm] {
        &self.generators
    }
}

impl Clone for FormIdeal {
    fn clone(&self) -> Self {
        FormIdeal::new(self.field, self.nvars, self.generators.clone())
    }
}

impl GradedIdeal for FormIdeal {
    fn field(&self) -> Field {
        self.field
    }

    fn piece(&self, d: usize) -> GradedPiece {
        let mut cache = self.cache.lock().unwrap();
        while cache.len() <= d {
            let e = cache.len();
            let mut next = match cache.last() {
                Some(prev) => prev.times_linear(),
                None => GradedPiece::zero(self.field, self.nvars, 0),
            };
            for g in self.generators.iter().filter(|g| g.degree() == e) {
                next.insert(g);
            }
            cache.push(next);
        }
        cache[d].clone()
    }
}
