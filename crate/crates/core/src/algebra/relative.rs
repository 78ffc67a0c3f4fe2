//! Relative Dirac operators `D_{g,k} = D_g − j(D_k)` for quadratic subalgebras.
//!
//! The embedding `j: U(k) ⊗ Cl(k) → U(g) ⊗ Cl(g)` sends `K ⊗ 1` to
//! `K ⊗ 1 + 1 ⊗ q(λ_p(K))` and `1 ⊗ K` to `1 ⊗ K`, where `λ_p` is the part of
//! `λ_g(K) = −¼ Σ B(K, [e_a, e_b]) e^a ∧ e^b` lying in `Λ²p`.

use num_traits::{One, Zero};

use super::clifford::{quantize, CliffElement, ExtElement};
use super::dirac::{cubic_dirac_tensor, T_CUBIC};
use super::envelope::{casimir, EnvElement};
use super::lie::{casimir_trace_ad, killing_form, killing_matrix, LieBasisVector, LieElement, DIM};
use super::number::{rat, AlgNumber};
use super::spin::SpinOperator;
use super::tensor::EnvCliff;
use super::AlgebraError;

type Vec3 = [AlgNumber; 3];

/// Row reduction in place; returns pivot columns.
fn row_reduce(rows: &mut Vec<Vec<AlgNumber>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row.iter()) {
                    *x -= &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn rank(vectors: &[Vec3]) -> usize {
    let mut rows: Vec<Vec<AlgNumber>> = vectors.iter().map(|v| v.to_vec()).collect();
    row_reduce(&mut rows, DIM).len()
}

/// Coordinates of `v` in the span of `basis`, if it lies there.
fn coordinates(basis: &[LieElement], v: &LieElement) -> Option<Vec<AlgNumber>> {
    let n = basis.len();
    // Augmented system with the basis vectors as columns.
    let mut rows: Vec<Vec<AlgNumber>> = (0..DIM)
        .map(|i| {
            let mut row: Vec<AlgNumber> = basis.iter().map(|b| b.0[i].clone()).collect();
            row.push(v.0[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut rows, n + 1);
    if pivots.contains(&n) {
        return None;
    }
    let mut x = vec![AlgNumber::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

/// Basis of `{x : ⟨row_i, x⟩ = 0 for all i}`.
fn nullspace(rows: &[Vec3]) -> Vec<LieElement> {
    let mut m: Vec<Vec<AlgNumber>> = rows.iter().map(|v| v.to_vec()).collect();
    let pivots = if m.is_empty() { vec![] } else { row_reduce(&mut m, DIM) };
    let free: Vec<usize> = (0..DIM).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x: Vec3 = Default::default();
            x[f] = AlgNumber::one();
            for (r, &c) in pivots.iter().enumerate() {
                x[c] = -&m[r][f];
            }
            LieElement(x)
        })
        .collect()
}

fn invert(m: &[Vec<AlgNumber>]) -> Option<Vec<Vec<AlgNumber>>> {
    let n = m.len();
    let mut aug: Vec<Vec<AlgNumber>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { AlgNumber::one() } else { AlgNumber::zero() }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// The B-dual basis of a subspace with nondegenerate restricted form.
fn dual_in_subspace(basis: &[LieElement]) -> Result<Vec<LieElement>, AlgebraError> {
    let gram: Vec<Vec<AlgNumber>> =
        basis.iter().map(|x| basis.iter().map(|y| killing_form(x, y)).collect()).collect();
    let inv = invert(&gram).ok_or(AlgebraError::DegenerateSubalgebra)?;
    Ok((0..basis.len())
        .map(|a| {
            (0..basis.len()).fold(LieElement::zero(), |acc, b| &acc + &basis[b].scale(&inv[b][a]))
        })
        .collect())
}

/// A quadratic subalgebra `k ⊂ su(1,1)` together with `p = k^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraSpec {
    pub generators: Vec<LieElement>,
    pub complement: Vec<LieElement>,
}

impl SubalgebraSpec {
    pub fn new(generators: Vec<LieElement>) -> Result<Self, AlgebraError> {
        let coords: Vec<Vec3> = generators.iter().map(|g| g.0.clone()).collect();
        if generators.is_empty() || rank(&coords) < generators.len() {
            return Err(AlgebraError::InvalidSpan);
        }
        for x in &generators {
            for y in &generators {
                if coordinates(&generators, &x.bracket(y)).is_none() {
                    return Err(AlgebraError::NotASubalgebra);
                }
            }
        }
        dual_in_subspace(&generators)?;
        let g = killing_matrix();
        let rows: Vec<Vec3> = generators
            .iter()
            .map(|k| {
                std::array::from_fn(|j| (0..DIM).fold(AlgNumber::zero(), |acc, i| acc + &k.0[i] * &g[i][j]))
            })
            .collect();
        let complement = nullspace(&rows);
        Ok(Self { generators, complement })
    }

    /// `k = span{e3}`, the compact Cartan subalgebra.
    pub fn elliptic() -> Self {
        Self::new(vec![LieElement::basis(LieBasisVector::E3)]).expect("span{e3} is quadratic")
    }

    pub fn contains(&self, x: &LieElement) -> bool {
        coordinates(&self.generators, x).is_some()
    }

    /// `[k, p] ⊆ p`.
    pub fn complement_is_invariant(&self) -> bool {
        self.generators.iter().all(|k| {
            self.complement.iter().all(|p| coordinates(&self.complement, &k.bracket(p)).is_some())
        })
    }
}

fn lie_basis() -> [LieElement; 3] {
    std::array::from_fn(|i| LieElement::basis(LieBasisVector::from_index(i)))
}

/// `λ(ξ) = −¼ Σ_{a,b} B(ξ, [e_a, e_b]) e^a ∧ e^b` over a basis of a subspace.
fn lambda_over(xi: &LieElement, basis: &[LieElement], dual: &[LieElement]) -> ExtElement {
    let mut out = ExtElement::zero();
    for a in 0..basis.len() {
        for b in 0..basis.len() {
            let c = killing_form(xi, &basis[a].bracket(&basis[b]));
            if c.is_zero() {
                continue;
            }
            let w = ExtElement::from_vector(&dual[a]).wedge(&ExtElement::from_vector(&dual[b]));
            out = &out + &w.scale(&c);
        }
    }
    out.scale(&AlgNumber::from_rational(rat(-1, 4)))
}

fn structure_tensor_over(basis: &[LieElement], dual: &[LieElement]) -> ExtElement {
    let n = basis.len();
    let mut out = ExtElement::zero();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let coeff = killing_form(&basis[a].bracket(&basis[b]), &basis[c]);
                if coeff.is_zero() {
                    continue;
                }
                let w = ExtElement::from_vector(&dual[a])
                    .wedge(&ExtElement::from_vector(&dual[b]))
                    .wedge(&ExtElement::from_vector(&dual[c]));
                out = &out + &w.scale(&coeff);
            }
        }
    }
    out.scale(&AlgNumber::from_rational(rat(-1, 12)))
}

/// Contraction `ι_α` of a 2-form with the covector `α = B(k, ·)`.
fn contract_2form(k: &LieElement, w: &ExtElement) -> LieElement {
    let basis = lie_basis();
    let mut out = LieElement::zero();
    for (blade, c) in w.terms() {
        let idx = super::clifford::blade_indices(*blade);
        if idx.len() != 2 {
            continue;
        }
        let (i, j) = (idx[0], idx[1]);
        let ai = killing_form(k, &basis[i]);
        let aj = killing_form(k, &basis[j]);
        out = &out + &(&basis[j].scale(&(c * &ai)) - &basis[i].scale(&(c * &aj)));
    }
    out
}

/// Every ingredient of the relative Dirac construction, kept for inspection.
#[derive(Clone, Debug)]
pub struct RelativeDirac {
    pub spec: SubalgebraSpec,
    pub lambda_g: Vec<ExtElement>,
    pub lambda_k: Vec<ExtElement>,
    pub lambda_p: Vec<ExtElement>,
    /// `j(D_k)`.
    pub embedded_dirac_k: EnvCliff,
    /// `D_{g,k} = D_g − j(D_k)`.
    pub dirac: EnvCliff,
    /// `Σ^{(p)} p^a ⊗ p_a + 1 ⊗ q(φ_p)`.
    pub complement_form: EnvCliff,
    /// `D_{g,k}² − (Ω_g − j(Ω_k) + Tr_g Ω_g/24 − Tr_k Ω_k/24)`.
    pub square_residual: EnvCliff,
}

impl RelativeDirac {
    pub fn spin(&self) -> SpinOperator {
        SpinOperator::from_tensor(&self.dirac)
    }

    /// Whether each `λ_p(k_i)` has no leg along `k`.
    pub fn lambda_p_in_complement(&self) -> bool {
        self.spec.generators.iter().all(|k| {
            self.lambda_p.iter().all(|l| contract_2form(k, l).is_zero())
        })
    }
}

/// Builds `D_{g,k}` and checks its square symbolically in `U(g) ⊗ Cl(g)`.
pub fn relative_dirac(k: &SubalgebraSpec) -> Result<RelativeDirac, AlgebraError> {
    let kb = &k.generators;
    let kd = dual_in_subspace(kb)?;
    let g_basis = lie_basis();
    let g_dual = super::lie::dual_basis();

    let lambda_g: Vec<ExtElement> = kb.iter().map(|x| lambda_over(x, &g_basis, &g_dual)).collect();
    let lambda_k: Vec<ExtElement> = kb.iter().map(|x| lambda_over(x, kb, &kd)).collect();
    let lambda_p: Vec<ExtElement> = lambda_g
        .iter()
        .zip(&lambda_k)
        .map(|(g, kk)| g + &kk.scale(&AlgNumber::from_int(-1)))
        .collect();

    // J(K) = K ⊗ 1 + 1 ⊗ q(λ_p(K)), extended linearly from the basis of k.
    let embed = |x: &LieElement| -> EnvCliff {
        let c = coordinates(kb, x).expect("element of k");
        let mut out = EnvCliff::env(&EnvElement::from_lie(x));
        for (ci, lp) in c.iter().zip(&lambda_p) {
            out = &out + &EnvCliff::cliff(&quantize(lp).scale(ci));
        }
        out
    };

    let phi_k = structure_tensor_over(kb, &kd);
    let mut embedded_dirac_k = EnvCliff::cliff(&quantize(&phi_k));
    let mut embedded_casimir_k = EnvCliff::zero();
    for (up, down) in kd.iter().zip(kb) {
        embedded_dirac_k = &embedded_dirac_k + &(&embed(up) * &EnvCliff::cliff(&CliffElement::from_vector(down)));
        embedded_casimir_k = &embedded_casimir_k + &(&embed(up) * &embed(down));
    }

    let dirac = &cubic_dirac_tensor(&T_CUBIC) - &embedded_dirac_k;

    let pb = &k.complement;
    let pd = dual_in_subspace(pb)?;
    let mut complement_form = EnvCliff::cliff(&quantize(&structure_tensor_over(pb, &pd)));
    for (up, down) in pd.iter().zip(pb) {
        complement_form = &complement_form
            + &EnvCliff::pure(&EnvElement::from_lie(up), &CliffElement::from_vector(down));
    }

    let trace_k = trace_ad_subalgebra(kb, &kd);
    let constant = (&casimir_trace_ad() - &trace_k).scale(&rat(1, 24));
    let rhs = &(&EnvCliff::env(&casimir()) - &embedded_casimir_k)
        + &EnvCliff::env(&EnvElement::constant(constant));
    let square_residual = &(&dirac * &dirac) - &rhs;

    Ok(RelativeDirac {
        spec: k.clone(),
        lambda_g,
        lambda_k,
        lambda_p,
        embedded_dirac_k,
        dirac,
        complement_form,
        square_residual,
    })
}

/// `Tr_k Ω_k = Σ_a Tr(ad_k(k^a) ad_k(k_a))` with `ad` restricted to `k`.
fn trace_ad_subalgebra(basis: &[LieElement], dual: &[LieElement]) -> AlgNumber {
    let n = basis.len();
    let ad = |x: &LieElement| -> Vec<Vec<AlgNumber>> {
        let cols: Vec<Vec<AlgNumber>> =
            basis.iter().map(|b| coordinates(basis, &x.bracket(b)).expect("k is closed")).collect();
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    };
    let mut total = AlgNumber::zero();
    for (up, down) in dual.iter().zip(basis) {
        let a = ad(up);
        let b = ad(down);
        for i in 0..n {
            for j in 0..n {
                total += &(&a[i][j] * &b[j][i]);
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use LieBasisVector::*;

    fn half() -> AlgNumber {
        AlgNumber::from_rational(rat(1, 2))
    }

    #[test]
    fn elliptic_complement() {
        let k = SubalgebraSpec::elliptic();
        assert_eq!(k.complement.len(), 2);
        for p in &k.complement {
            assert!(killing_form(p, &LieElement::basis(E3)).is_zero());
        }
        assert!(k.complement_is_invariant());
    }

    #[test]
    fn elliptic_relative_dirac() {
        let rd = relative_dirac(&SubalgebraSpec::elliptic()).unwrap();
        let quarter_e12 = ExtElement::blade(0b011, AlgNumber::from_rational(rat(1, 4)));
        assert_eq!(rd.lambda_g, vec![quarter_e12.clone()]);
        assert_eq!(rd.lambda_k, vec![ExtElement::zero()]);
        assert_eq!(rd.lambda_p, vec![quarter_e12]);
        assert!(rd.lambda_p_in_complement());
        // D_{g,k} = ½(e1 ⊗ e1 + e2 ⊗ e2)
        let expect = &EnvCliff::pure(&EnvElement::generator(E1).scale(&half()), &CliffElement::generator(0))
            + &EnvCliff::pure(&EnvElement::generator(E2).scale(&half()), &CliffElement::generator(1));
        assert_eq!(rd.dirac, expect);
        assert_eq!(rd.complement_form, expect);
        assert!(rd.square_residual.is_zero());
    }

    #[test]
    fn embedded_elliptic_dirac() {
        // j(D_k) = −½ e3 ⊗ e3 − ⅛ ⊗ e1e2e3
        let rd = relative_dirac(&SubalgebraSpec::elliptic()).unwrap();
        let expect = &EnvCliff::pure(&EnvElement::generator(E3).scale(&-half()), &CliffElement::generator(2))
            + &EnvCliff::cliff(&CliffElement::word(&[0, 1, 2]).scale(&AlgNumber::from_rational(rat(-1, 8))));
        assert_eq!(rd.embedded_dirac_k, expect);
    }

    #[test]
    fn hyperbolic_subalgebra_also_satisfies_square_identity() {
        let k = SubalgebraSpec::new(vec![LieElement::basis(E1)]).unwrap();
        let rd = relative_dirac(&k).unwrap();
        assert!(rd.square_residual.is_zero());
        assert!(rd.lambda_p_in_complement());
        assert_eq!(rd.dirac, rd.complement_form);
    }

    #[test]
    fn null_direction_is_rejected() {
        let k = SubalgebraSpec::new(vec![LieElement::from_ints([1, 0, 1])]);
        assert_eq!(k, Err(AlgebraError::DegenerateSubalgebra));
    }

    #[test]
    fn non_subalgebra_is_rejected() {
        let k = SubalgebraSpec::new(vec![LieElement::basis(E1), LieElement::basis(E2)]);
        assert_eq!(k, Err(AlgebraError::NotASubalgebra));
    }

    #[test]
    fn dependent_span_is_rejected() {
        let k = SubalgebraSpec::new(vec![LieElement::basis(E3), LieElement::from_ints([0, 0, 2])]);
        assert_eq!(k, Err(AlgebraError::InvalidSpan));
        assert_eq!(SubalgebraSpec::new(vec![]), Err(AlgebraError::InvalidSpan));
    }

    #[test]
    fn whole_algebra_gives_zero_relative_operator() {
        let k = SubalgebraSpec::new(lie_basis().to_vec()).unwrap();
        let rd = relative_dirac(&k).unwrap();
        assert!(k.complement.is_empty());
        assert!(rd.dirac.is_zero());
        assert!(rd.square_residual.is_zero());
    }
}
