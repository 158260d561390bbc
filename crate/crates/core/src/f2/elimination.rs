//! The two elimination procedures that drive the staircase decomposition:
//! simultaneous strict lower triangularization of commuting square-zero
//! matrices, and the swap/compose reduction of `(A, b)` pairs.

use serde::{Deserialize, Serialize};

use super::{F2Matrix, F2Vector};
use crate::error::{invariant, precondition, Result};

/// Basis of `∩ᵢ ker(Aᵢ)` for square `n × n` matrices, found by eliminating on
/// the vertical stack. With no matrices the whole space is returned.
pub fn kernel_intersection(n: usize, mats: &[F2Matrix]) -> Vec<F2Vector> {
    if mats.is_empty() {
        return (0..n).map(|i| F2Vector::unit(n, i)).collect();
    }
    for m in mats {
        assert_eq!(m.ncols(), n, "matrix width does not match n");
    }
    F2Matrix::vstack(mats).kernel()
}

fn check_commuting_square_zero(n: usize, mats: &[F2Matrix]) -> Result<()> {
    for (i, a) in mats.iter().enumerate() {
        if a.nrows() != n || a.ncols() != n {
            return Err(precondition(format!("matrix {i} is not {n}x{n}")));
        }
        if !(a * a).is_zero() {
            return Err(precondition(format!("matrix {i} does not square to zero")));
        }
    }
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate().skip(i + 1) {
            if a * b != b * a {
                return Err(precondition(format!("matrices {i} and {j} do not commute")));
            }
        }
    }
    Ok(())
}

fn drop_coordinate(v: &F2Vector, p: usize) -> F2Vector {
    let comps: Vec<bool> = (0..v.len()).filter(|&i| i != p).map(|i| v.get(i)).collect();
    F2Vector::from_components(&comps)
}

fn insert_zero_coordinate(v: &F2Vector, p: usize) -> F2Vector {
    let mut comps: Vec<bool> = (0..v.len()).map(|i| v.get(i)).collect();
    comps.insert(p, false);
    F2Vector::from_components(&comps)
}

/// Returns a basis `b₁, …, bₙ` (as matrix columns) such that every `Aᵢ` maps
/// `b_k` into `span(b_{k+1}, …, bₙ)`.
fn flag_basis(n: usize, mats: &[F2Matrix]) -> Result<Vec<F2Vector>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let kernel = kernel_intersection(n, mats);
    let Some(&v) = kernel.first() else {
        return Err(invariant(
            "kernel intersection is trivial for commuting square-zero matrices",
        ));
    };
    // Quotient by ⟨v⟩: coordinate p of v is 1, so x ↦ x + x_p·v kills
    // coordinate p and the remaining n-1 coordinates parametrize V/⟨v⟩.
    let p = v.alpha() - 1;
    let project = |x: F2Vector| {
        let x = if x.get(p) { x + v } else { x };
        drop_coordinate(&x, p)
    };
    let quotients: Vec<F2Matrix> = mats
        .iter()
        .map(|a| {
            let cols: Vec<F2Vector> = (0..n - 1)
                .map(|c| {
                    let e = insert_zero_coordinate(&F2Vector::unit(n - 1, c), p);
                    project(a.mul_vec(&e))
                })
                .collect();
            if n == 1 {
                F2Matrix::zero(0, 0)
            } else {
                F2Matrix::from_columns(&cols)
            }
        })
        .collect();
    let mut basis: Vec<F2Vector> = flag_basis(n - 1, &quotients)?
        .iter()
        .map(|y| insert_zero_coordinate(y, p))
        .collect();
    basis.push(v);
    Ok(basis)
}

/// Finds an invertible `M` with `M·Aᵢ·M⁻¹` strictly lower triangular for
/// every `Aᵢ`. The matrices must be `n × n`, pairwise commuting and square
/// to zero.
pub fn simultaneous_strict_lower_triangularize(n: usize, mats: &[F2Matrix]) -> Result<F2Matrix> {
    check_commuting_square_zero(n, mats)?;
    let basis = flag_basis(n, mats)?;
    let change = if n == 0 {
        F2Matrix::identity(0)
    } else {
        F2Matrix::from_columns(&basis)
    };
    let m = change
        .inverse()
        .ok_or_else(|| invariant("flag basis is not a basis"))?;
    for (i, a) in mats.iter().enumerate() {
        if !(&(&m * a) * &change).is_strictly_lower_triangular() {
            return Err(invariant(format!(
                "conjugate of matrix {i} is not strictly lower triangular"
            )));
        }
    }
    Ok(m)
}

/// One step of the swap/compose reduction. Indices are 0-based positions in
/// the pair list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairOp {
    Swap(usize, usize),
    /// `Aᵢ ← Aᵢ + Aⱼ + AᵢAⱼ`, `bᵢ ← bᵢ + bⱼ + Aᵢbⱼ` for `Compose(i, j)`.
    Compose(usize, usize),
}

pub type AffinePair = (F2Matrix, F2Vector);

/// Applies a single operation in place.
pub fn apply_pair_op(pairs: &mut [AffinePair], op: PairOp) {
    match op {
        PairOp::Swap(i, j) => pairs.swap(i, j),
        PairOp::Compose(i, j) => {
            let (ai, bi) = pairs[i].clone();
            let (aj, bj) = pairs[j].clone();
            let b = bi + bj + ai.mul_vec(&bj);
            let a = &(&ai + &aj) + &(&ai * &aj);
            pairs[i] = (a, b);
        }
    }
}

/// The operation sequence of a successful reduction plus its end state.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub ops: Vec<PairOp>,
    /// `basis[i]` is the vector `uᵢ` with `X′ᵢ = X^{uᵢ}` written in the
    /// original generators.
    pub basis: Vec<F2Vector>,
    /// The pairs after all operations; every `b` equals the matching `eᵢ`.
    pub pairs: Vec<AffinePair>,
}

impl TransformRecord {
    /// Replays the recorded operations over `initial`.
    pub fn replay(&self, initial: &[AffinePair]) -> Vec<AffinePair> {
        let mut pairs = initial.to_vec();
        for &op in &self.ops {
            apply_pair_op(&mut pairs, op);
        }
        pairs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EliminationOutcome {
    Reduced(TransformRecord),
    /// The pair at this 0-based index reached `b = 0`.
    ZeroVectorReached(usize),
}

struct Reducer {
    pairs: Vec<AffinePair>,
    basis: Vec<F2Vector>,
    ops: Vec<PairOp>,
}

impl Reducer {
    fn apply(&mut self, op: PairOp) {
        apply_pair_op(&mut self.pairs, op);
        match op {
            PairOp::Swap(i, j) => self.basis.swap(i, j),
            PairOp::Compose(i, j) => {
                let bj = self.basis[j];
                self.basis[i] += bj;
            }
        }
        self.ops.push(op);
    }

    fn alpha(&self, i: usize) -> usize {
        self.pairs[i].1.alpha()
    }

    fn alpha_sum(&self) -> usize {
        (0..self.pairs.len()).map(|i| self.alpha(i)).sum()
    }

    fn first_collision(&self) -> Option<(usize, usize)> {
        let n = self.pairs.len();
        (0..n).find_map(|i| {
            (i + 1..n)
                .find(|&j| self.alpha(i) == self.alpha(j))
                .map(|j| (i, j))
        })
    }
}

/// Reduces `n` pairs `(Aᵢ, bᵢ)` of strictly lower triangular `Aᵢ` until either
/// every `bᵢ = eᵢ` or some `bᵢ` becomes zero.
///
/// Phase one composes the first colliding pair (ascending `i < j`) whenever
/// two vectors share the same `α`, then swaps so `α(bᵢ) = i`. Phase two clears
/// each `bᵢ` below its leading one by composing with pair `α(bᵢ + eᵢ)`.
pub fn twisted_gaussian_elimination(pairs: &[AffinePair]) -> Result<EliminationOutcome> {
    let n = pairs.len();
    for (i, (a, b)) in pairs.iter().enumerate() {
        if a.nrows() != n || a.ncols() != n || b.len() != n {
            return Err(precondition(format!(
                "pair {i} does not have dimension {n}"
            )));
        }
        if !a.is_strictly_lower_triangular() {
            return Err(precondition(format!(
                "matrix {i} is not strictly lower triangular"
            )));
        }
    }
    let mut r = Reducer {
        pairs: pairs.to_vec(),
        basis: (0..n).map(|i| F2Vector::unit(n, i)).collect(),
        ops: Vec::new(),
    };
    if let Some(i) = (0..n).find(|&i| r.pairs[i].1.is_zero()) {
        return Ok(EliminationOutcome::ZeroVectorReached(i));
    }

    while let Some((i, j)) = r.first_collision() {
        let before = r.alpha_sum();
        r.apply(PairOp::Compose(i, j));
        if r.pairs[i].1.is_zero() {
            return Ok(EliminationOutcome::ZeroVectorReached(i));
        }
        if r.alpha_sum() <= before {
            return Err(invariant(
                "phase-one compose did not increase the alpha sum",
            ));
        }
    }
    for pos in 0..n {
        let j = (pos..n)
            .find(|&j| r.alpha(j) == pos + 1)
            .ok_or_else(|| invariant("alpha values are not a permutation of 1..n"))?;
        if j != pos {
            r.apply(PairOp::Swap(pos, j));
        }
    }

    for i in 0..n {
        let target = F2Vector::unit(n, i);
        while r.pairs[i].1 != target {
            let k = (r.pairs[i].1 + target).alpha() - 1;
            if k <= i {
                return Err(invariant("row reduction pivot is not below the diagonal"));
            }
            r.apply(PairOp::Compose(i, k));
        }
    }

    Ok(EliminationOutcome::Reduced(TransformRecord {
        ops: r.ops,
        basis: r.basis,
        pairs: r.pairs,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> F2Vector {
        F2Vector::unit(n, i)
    }

    #[test]
    fn kernel_intersection_examples() {
        assert_eq!(
            kernel_intersection(3, &[F2Matrix::zero(3, 3)]),
            vec![e(3, 0), e(3, 1), e(3, 2)]
        );
        assert!(kernel_intersection(3, &[F2Matrix::identity(3)]).is_empty());
        assert_eq!(
            kernel_intersection(2, &[F2Matrix::from_strs(&["00", "10"])]),
            vec![e(2, 1)]
        );
    }

    fn assert_triangularizes(m: &F2Matrix, mats: &[F2Matrix]) {
        let inv = m.inverse().expect("invertible");
        for a in mats {
            assert!((&(m * a) * &inv).is_strictly_lower_triangular(), "{a:?}");
        }
    }

    #[test]
    fn triangularize_examples() {
        let zeros = [F2Matrix::zero(2, 2), F2Matrix::zero(2, 2)];
        let m = simultaneous_strict_lower_triangularize(2, &zeros).unwrap();
        assert_triangularizes(&m, &zeros);

        let lower = [F2Matrix::from_strs(&["00", "10"])];
        let m = simultaneous_strict_lower_triangularize(2, &lower).unwrap();
        assert_triangularizes(&m, &lower);

        let upper = [F2Matrix::from_strs(&["01", "00"])];
        let m = simultaneous_strict_lower_triangularize(2, &upper).unwrap();
        assert_eq!(m, F2Matrix::from_strs(&["01", "10"]));
        assert_triangularizes(&m, &upper);
    }

    #[test]
    fn triangularize_rejects_bad_input() {
        let not_nilpotent = [F2Matrix::identity(2)];
        assert!(matches!(
            simultaneous_strict_lower_triangularize(2, &not_nilpotent),
            Err(crate::Error::PreconditionViolated(_))
        ));
        let noncommuting = [
            F2Matrix::from_strs(&["00", "10"]),
            F2Matrix::from_strs(&["01", "00"]),
        ];
        assert!(matches!(
            simultaneous_strict_lower_triangularize(2, &noncommuting),
            Err(crate::Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn elimination_identity_is_empty() {
        let pairs: Vec<AffinePair> = (0..3).map(|i| (F2Matrix::zero(3, 3), e(3, i))).collect();
        let EliminationOutcome::Reduced(rec) = twisted_gaussian_elimination(&pairs).unwrap() else {
            panic!("expected reduction");
        };
        assert!(rec.ops.is_empty());
    }

    #[test]
    fn elimination_permuted_basis_uses_swaps_only() {
        let pairs: Vec<AffinePair> = [2, 0, 1]
            .iter()
            .map(|&i| (F2Matrix::zero(3, 3), e(3, i)))
            .collect();
        let EliminationOutcome::Reduced(rec) = twisted_gaussian_elimination(&pairs).unwrap() else {
            panic!("expected reduction");
        };
        assert!(!rec.ops.is_empty());
        assert!(rec.ops.iter().all(|op| matches!(op, PairOp::Swap(..))));
        assert!(rec.pairs.iter().enumerate().all(|(i, p)| p.1 == e(3, i)));
    }

    #[test]
    fn elimination_duplicate_vectors_reach_zero() {
        let pairs = vec![
            (F2Matrix::zero(2, 2), e(2, 0)),
            (F2Matrix::zero(2, 2), e(2, 0)),
        ];
        assert_eq!(
            twisted_gaussian_elimination(&pairs).unwrap(),
            EliminationOutcome::ZeroVectorReached(0)
        );
    }

    #[test]
    fn compose_rule_matches_definition() {
        let ai = F2Matrix::from_strs(&["000", "100", "010"]);
        let aj = F2Matrix::from_strs(&["000", "000", "100"]);
        let mut pairs = vec![(ai.clone(), e(3, 0)), (aj.clone(), e(3, 1))];
        apply_pair_op(&mut pairs, PairOp::Compose(0, 1));
        assert_eq!(pairs[0].0, &(&ai + &aj) + &(&ai * &aj));
        assert_eq!(pairs[0].1, e(3, 0) + e(3, 1) + ai.mul_vec(&e(3, 1)));
    }
}
