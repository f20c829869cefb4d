use iwa_cohomology::linalg::{self, Vector};
use iwa_cohomology::BigradedComplex;
use iwa_deformation::{gamma_forms, ComplexStructure};
use iwa_exterior::Form;
use iwa_hodge::{aeppli22_generators, aeppli_projection, gauduchon_lift, Metric};
use iwa_scalars::{GScalar, Matrix, ParamPoint};

use crate::mirror_map::coords_in_basis;
use crate::MirrorError;

/// A linear map with its matrix against documented bases.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub matrix: Matrix<GScalar>,
    pub rank: usize,
}

impl LinearMap {
    fn from_cols(rows: usize, cols: Vec<Vector>) -> Self {
        let rank = linalg::rank(&cols);
        LinearMap {
            matrix: Matrix::from_cols(rows, &cols),
            rank,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.rows() == self.matrix.cols() && self.matrix == Matrix::identity(self.matrix.rows())
    }
}

fn structure(t: &ParamPoint) -> Result<ComplexStructure, MirrorError> {
    if !t.is_essential() {
        return Err(MirrorError::OffSlice);
    }
    Ok(ComplexStructure::new(t)?)
}

/// A_t: [Γ_j(t)] ↦ [Γ_j(t)∧γ̄_t]_A against the generators α_tγ_tᾱ_tγ̄_t, ...
pub fn iso_a(t: &ParamPoint) -> Result<LinearMap, MirrorError> {
    let j = structure(t)?;
    let space = BigradedComplex::new(&j).aeppli(2, 2);
    let gens = aeppli22_generators(&Metric::canonical(j.clone()));
    let gb = j.covector(5);
    let cols = gamma_forms(&j)?
        .iter()
        .map(|g| coords_in_basis(&space, &gens, &g.wedge(&gb)))
        .collect::<Result<_, _>>()?;
    Ok(LinearMap::from_cols(4, cols))
}

/// B_t: the t-generators mapped to the t = 0 generators. Its matrix is the
/// identity by construction; the content is that both lists are bases.
pub fn iso_b(t: &ParamPoint) -> Result<LinearMap, MirrorError> {
    let j = structure(t)?;
    for s in [j.clone(), ComplexStructure::standard()] {
        let space = BigradedComplex::new(&s).aeppli(2, 2);
        let gens = aeppli22_generators(&Metric::canonical(s.clone()));
        if space.class_rank(&gens)? != 4 || space.dimension() != 4 {
            return Err(MirrorError::DegreeMismatch("generators are not an Aeppli basis".into()));
        }
    }
    let cols = (0..4)
        .map(|k| (0..4).map(|i| GScalar::from_int((i == k) as i64)).collect())
        .collect();
    Ok(LinearMap::from_cols(4, cols))
}

/// Q_m of each generator in H⁴_DR class coordinates, with P∘Q = id checked.
fn lift_matrix(m: &Metric, gens: &[Form<GScalar>; 4]) -> Result<LinearMap, MirrorError> {
    let dr = BigradedComplex::standard().de_rham(4);
    let ae = BigradedComplex::new(m.structure()).aeppli(2, 2);
    let mut cols = Vec::with_capacity(4);
    for (k, g) in gens.iter().enumerate() {
        let lift = gauduchon_lift(m, g)?;
        let back = coords_in_basis(&ae, gens, &aeppli_projection(m, &lift.omega))?;
        let want: Vector = (0..4).map(|i| GScalar::from_int((i == k) as i64)).collect();
        if back != want {
            return Err(MirrorError::DegreeMismatch(format!("P∘Q ≠ id on generator {k}")));
        }
        cols.push(dr.class_coords(&lift.omega)?);
    }
    Ok(LinearMap::from_cols(dr.dimension(), cols))
}

/// I_t = Q_{ω_t} on the generators of H^{2,2}_A(X_t).
pub fn lift_i(t: &ParamPoint) -> Result<LinearMap, MirrorError> {
    let j = structure(t)?;
    let m = Metric::canonical(j);
    let gens = aeppli22_generators(&m);
    lift_matrix(&m, &gens)
}

/// The square Q_{ω_t^{1,1}} ∘ B_t = C ∘ Q_{ω_t}: C is determined on im Q_{ω_t};
/// reports the ranks of the three maps.
#[derive(Clone, Debug)]
pub struct SquareReport {
    pub rank_q_t: usize,
    pub rank_q11: usize,
    pub rank_composite: usize,
    pub commutes: bool,
}

pub fn conclusion_square(t: &ParamPoint) -> Result<SquareReport, MirrorError> {
    let it = lift_i(t)?;
    let b = iso_b(t)?;
    let m11 = Metric::omega11(t)?;
    let gens0 = aeppli22_generators(&m11);
    let q11 = lift_matrix(&m11, &gens0)?;
    let rhs = &q11.matrix * &b.matrix;
    let src: Vec<Vector> = (0..4).map(|k| it.matrix.col(k)).collect();
    // C on im I_t: C(I_t e_k) = (Q11 B) e_k; well defined iff I_t injective.
    let well_defined = linalg::rank(&src) == 4;
    let images: Vec<Vector> = (0..4).map(|k| rhs.col(k)).collect();
    let mut commutes = well_defined;
    if well_defined {
        let probe: Vector = (0..4).map(|k| GScalar::from_int(k as i64 + 1)).collect();
        let y = it.matrix.mul_vec(&probe);
        let x = linalg::express(&src, &y).expect("in the image");
        commutes = linalg::combine(&images, &x, rhs.rows()) == rhs.mul_vec(&probe);
    }
    Ok(SquareReport {
        rank_q_t: it.rank,
        rank_q11: q11.rank,
        rank_composite: linalg::rank(&images),
        commutes,
    })
}

/// [α_tβ_tγ_tᾱ_t]_BC ↦ [α_tᾱ_tγ_tγ̄_t]_A, [α_tβ_tγ_tβ̄_t]_BC ↦ [β_tβ̄_tγ_tγ̄_t]_A.
#[derive(Clone, Debug)]
pub struct Bc31Report {
    pub bc_dimension: usize,
    pub domain_rank: usize,
    pub map: LinearMap,
    pub images_closed: bool,
}

pub fn bc31_to_aeppli(t: &ParamPoint) -> Result<Bc31Report, MirrorError> {
    let j = ComplexStructure::new(t)?;
    let cx = BigradedComplex::new(&j);
    let bc = cx.bott_chern(3, 1);
    let ae = cx.aeppli(2, 2);
    let c = j.covectors();
    let w = |idx: [usize; 4]| Form::wedge_all(&idx.map(|k| c[k].clone()));
    let domain = [w([0, 1, 2, 3]), w([0, 1, 2, 4])];
    let domain_rank = bc.class_rank(&domain)?;
    let images = [w([0, 3, 2, 5]), w([1, 4, 2, 5])];
    let gens = aeppli22_generators(&Metric::canonical(j.clone()));
    let cols = images
        .iter()
        .map(|u| coords_in_basis(&ae, &gens, u))
        .collect::<Result<_, _>>()?;
    Ok(Bc31Report {
        bc_dimension: bc.dimension(),
        domain_rank,
        map: LinearMap::from_cols(4, cols),
        images_closed: images.iter().all(|u| u.d().is_zero()),
    })
}
