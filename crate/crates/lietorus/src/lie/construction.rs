//! A built Lie torus together with the construction that produced it.

use std::sync::Arc;

use crate::linalg::ScalarMatrix;
use crate::tori::AntiKind;

use super::multiloop::MultiLoop;
use super::psl3::Psl3Torus;
use super::sl::SlTorus;
use super::tensor::TensorTorus;
use super::tits::TitsB;
use super::tkk::Tkk;
use super::LieTorus;

#[derive(Clone)]
pub enum Construction {
    /// `sl_{l+1}(A)` with an optional anti-involution of `A`.
    Sl(Arc<SlTorus>, Option<AntiKind>),
    Tensor(Arc<TensorTorus>),
    Psl3(Arc<Psl3Torus>, Option<AntiKind>),
    Tkk(Arc<Tkk>),
    TitsB(Arc<TitsB>),
    /// The multi-loop algebra with optional `τ` and `ψ` on `g`.
    MultiLoop(Arc<MultiLoop>, Option<ScalarMatrix>, Option<ScalarMatrix>),
}

impl std::fmt::Debug for Construction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Construction({})", self.lie().name())
    }
}

impl Construction {
    pub fn lie(&self) -> Arc<dyn LieTorus> {
        match self {
            Construction::Sl(l, _) => l.clone(),
            Construction::Tensor(l) => l.clone(),
            Construction::Psl3(l, _) => l.clone(),
            Construction::Tkk(l) => l.clone(),
            Construction::TitsB(l) => l.clone(),
            Construction::MultiLoop(l, _, _) => l.clone(),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Construction::Sl(..) => "SL",
            Construction::Tensor(_) => "Tensor",
            Construction::Psl3(..) => "PSL3",
            Construction::Tkk(_) => "TKK",
            Construction::TitsB(_) => "TitsB",
            Construction::MultiLoop(..) => "MultiLoop",
        }
    }
}
