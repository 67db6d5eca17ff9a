use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gmodules::{
    adjoint_module, natural_module, simple_module, tensor_square_natural, verma_module,
    GradedGModule,
};
use crate::tensor_pipeline::{checks::top_tensor_square, Parity, TensorDecomposition};

/// Modules addressable from the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleSelector {
    A1,
    A2,
    AsPlus,
    AaPlus,
    LxL,
    Verma(u64),
    Simple(u64),
    Adjoint,
}

impl FromStr for ModuleSelector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownSelector(s.to_string());
        let labelled = |rest: &str| rest.parse::<u64>().map_err(|_| unknown());
        match s {
            "A1" => Ok(Self::A1),
            "A2" => Ok(Self::A2),
            "AsPlus" => Ok(Self::AsPlus),
            "AaPlus" => Ok(Self::AaPlus),
            "LxL" => Ok(Self::LxL),
            "adjoint" => Ok(Self::Adjoint),
            _ => {
                if let Some(rest) = s.strip_prefix("Z:") {
                    Ok(Self::Verma(labelled(rest)?))
                } else if let Some(rest) = s.strip_prefix("L:") {
                    Ok(Self::Simple(labelled(rest)?))
                } else {
                    Err(unknown())
                }
            }
        }
    }
}

impl fmt::Display for ModuleSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::A1 => write!(f, "A1"),
            Self::A2 => write!(f, "A2"),
            Self::AsPlus => write!(f, "AsPlus"),
            Self::AaPlus => write!(f, "AaPlus"),
            Self::LxL => write!(f, "LxL"),
            Self::Verma(l) => write!(f, "Z:{l}"),
            Self::Simple(l) => write!(f, "L:{l}"),
            Self::Adjoint => write!(f, "adjoint"),
        }
    }
}

impl ModuleSelector {
    pub fn build(self, p: u64) -> Result<GradedGModule> {
        let top = |parity: Parity| -> Result<GradedGModule> {
            let mut d = TensorDecomposition::s2_split(p)?;
            Ok(d.canonical_submodules()?.top(parity).module.clone())
        };
        match self {
            Self::A1 => natural_module(p),
            Self::A2 => tensor_square_natural(p),
            Self::AsPlus => top(Parity::Symmetric),
            Self::AaPlus => top(Parity::Antisymmetric),
            Self::LxL => top_tensor_square(p),
            Self::Verma(l) => verma_module(p, l),
            Self::Simple(l) => Ok(simple_module(p, l)?.0),
            Self::Adjoint => adjoint_module(p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["A1", "A2", "AsPlus", "AaPlus", "LxL", "Z:3", "L:0", "adjoint"] {
            assert_eq!(s.parse::<ModuleSelector>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_unknown() {
        for s in ["", "A3", "Z:", "L:x", "Z3"] {
            assert_eq!(
                s.parse::<ModuleSelector>(),
                Err(Error::UnknownSelector(s.to_string()))
            );
        }
    }
}
