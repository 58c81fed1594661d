use num_rational::BigRational;
use num_traits::One;

use super::AnsSystem;
use crate::error::Result;
use crate::exactalg::{Matrix, Orientation, Semiring, Vector};
use crate::series::LinearRepresentation;

/// The block representation of the prefix-count series and the resulting
/// representation of the enumerating series.
///
/// With `k` the system dimension, `η`, `κ(a)`, `ζ`, `ξ` have dimension
/// `2k+1` split in blocks `(1, k, k)`:
///
/// ```text
/// η = (1 λ 0)     κ(a) = | 1  0     λ   |     ζ = (0 0 ν)ᵀ    ξ = (1 0 ν)ᵀ
///                        | 0  μ(a)  σ_a |
///                        | 0  0     σ   |
/// ```
///
/// `η·κ(u)·ζ` counts the words of the language smaller than `u`, and
/// `η·κ(u)·ξ` is one more than that.
#[derive(Debug, Clone)]
pub struct EnumeratorRep {
    pub eta: Vector,
    pub kappa: Vec<Matrix>,
    pub zeta: Vector,
    pub xi: Vector,
    /// Hadamard product of `(η, κ, ξ)` with the characteristic series, before trimming.
    pub product: LinearRepresentation,
    /// `product` with useless coordinates removed.
    pub final_rep: LinearRepresentation,
}

impl EnumeratorRep {
    /// `(η, κ, ζ)`: coefficient of `u` is the number of language words below `u`.
    pub fn count_below_rep(
        &self,
        alphabet: &crate::automata::OrderedAlphabet,
    ) -> LinearRepresentation {
        LinearRepresentation::new(
            alphabet.clone(),
            self.eta.clone(),
            self.kappa.clone(),
            self.zeta.clone(),
        )
        .expect("blocks have dimension 2k+1")
    }

    /// `(η, κ, ξ)`: one plus the count below.
    pub fn successor_count_rep(
        &self,
        alphabet: &crate::automata::OrderedAlphabet,
    ) -> LinearRepresentation {
        LinearRepresentation::new(
            alphabet.clone(),
            self.eta.clone(),
            self.kappa.clone(),
            self.xi.clone(),
        )
        .expect("blocks have dimension 2k+1")
    }

    /// Dimension of the Hadamard product before trimming, `(2k+1)·k`.
    pub fn pre_trim_dimension(&self) -> usize {
        self.product.dimension()
    }
}

fn place(target: &mut Matrix, row: usize, col: usize, block: &Matrix) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            target.set(row + i, col + j, block.get(i, j).clone());
        }
    }
}

impl AnsSystem {
    /// Builds an N-representation of the enumerating series, whose
    /// coefficient is `value(w) + 1` on the language and 0 elsewhere.
    pub fn enumerating_series(&self) -> Result<EnumeratorRep> {
        let k = self.dimension();
        let n = 2 * k + 1;
        let lambda = self.rep.initial();
        let nu = self.rep.terminal();
        let one = |o| Vector::new(o, Semiring::N, vec![BigRational::one()]).expect("1 is natural");
        let zeros = |o| Vector::zeros(o, Semiring::N, k);

        let eta = one(Orientation::Row)
            .concat(lambda)?
            .concat(&zeros(Orientation::Row))?;
        let zeta = Vector::zeros(Orientation::Column, Semiring::N, k + 1).concat(nu)?;
        let xi = one(Orientation::Column)
            .concat(&zeros(Orientation::Column))?
            .concat(nu)?;

        let lambda_block = Matrix::new(Semiring::N, 1, k, lambda.entries().to_vec())?;
        let kappa = (0..self.alphabet().len())
            .map(|a| {
                let mut m = Matrix::zeros(Semiring::N, n, n);
                m.set(0, 0, BigRational::one());
                place(&mut m, 0, k + 1, &lambda_block);
                place(&mut m, 1, 1, self.rep.matrix(a));
                place(&mut m, 1, k + 1, self.sigma_below(a));
                place(&mut m, k + 1, k + 1, &self.sigma);
                m
            })
            .collect::<Vec<_>>();

        let successor = LinearRepresentation::new(
            self.alphabet().clone(),
            eta.clone(),
            kappa.clone(),
            xi.clone(),
        )?;
        let product = successor.hadamard(&self.rep)?;
        let final_rep = product.trim();
        Ok(EnumeratorRep {
            eta,
            kappa,
            zeta,
            xi,
            product,
            final_rep,
        })
    }
}
