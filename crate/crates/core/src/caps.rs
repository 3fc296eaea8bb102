use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Enumeration limits shared by every exhaustive routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Caps {
    /// Largest semiring carrier that may be built or validated.
    pub semiring_size: usize,
    /// Largest semimodule carrier whose sublattices may be enumerated.
    pub module_size: usize,
    /// Largest number of candidate generator assignments a Hom search may visit.
    pub hom_search: u128,
    /// Largest number of lattice nodes an enumeration may produce.
    pub lattice_nodes: usize,
}

/// Size bound below which brute-force subset oracles are run.
pub const ORACLE_SIZE: usize = 16;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            semiring_size: 64,
            module_size: 64,
            hom_search: 1 << 22,
            lattice_nodes: 1 << 16,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> Result<()> {
        if self.semiring_size == 0
            || self.module_size == 0
            || self.hom_search == 0
            || self.lattice_nodes == 0
        {
            return Err(Error::Parameter("caps must be positive".into()));
        }
        Ok(())
    }

    pub(crate) fn check_module(&self, what: &str, size: usize) -> Result<()> {
        if size > self.module_size {
            return Err(Error::resource(
                format!("{what} (module size)"),
                size as u128,
                self.module_size as u128,
            ));
        }
        Ok(())
    }
}
