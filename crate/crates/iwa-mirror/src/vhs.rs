use iwa_cohomology::linalg;
use iwa_cohomology::BigradedComplex;
use iwa_deformation::{gamma_forms, gamma_forms_from, jet_frame, sigma_from_frame, ComplexStructure, TangentElement};
use iwa_exterior::mask;
use iwa_exterior::{render_form, Form, Frame};
use iwa_scalars::{GScalar, Jet1, ParamPoint, ParamVar};
use serde::Serialize;

use crate::pairing::ordered;
use crate::star::star_frame_coords;
use crate::MirrorError;

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VhsReport {
    pub transversality: Verdict,
    pub f2_holomorphic: Verdict,
    pub h12_not_holomorphic: Verdict,
    pub fg_holomorphic: Verdict,
    /// First-order anti-holomorphic jets at 0 of the coefficients σ/σ̄12 that
    /// relate Γ_j(t) to γ_t ∧ (torus classes); reported without a verdict.
    pub second_iso_obstruction: Vec<String>,
}

impl VhsReport {
    pub fn verdicts(&self) -> [&Verdict; 4] {
        [&self.transversality, &self.f2_holomorphic, &self.h12_not_holomorphic, &self.fg_holomorphic]
    }
}

const CONJ: [ParamVar; 6] = ParamVar::ANTIHOLOMORPHIC;

fn jet_covectors(f: &Frame<Jet1>) -> [Form<Jet1>; 6] {
    std::array::from_fn(|k| f.covector(k))
}

fn gamma_jets() -> Result<[Form<Jet1>; 4], MirrorError> {
    let f = jet_frame(&ParamPoint::zero())?;
    let sigma = sigma_from_frame(&f)?;
    Ok(gamma_forms_from(&jet_covectors(&f), &sigma)?)
}

/// [θ⌟Γ_j] = 0 in H^{1,2} and [θ⌟Ω] ∈ span [Γ_j] in H^{2,1}, for θ = ξ_i ⊗ ᾱ, ξ_i ⊗ β̄
/// with i ∈ {α, β}.
pub fn transversality() -> Result<Verdict, MirrorError> {
    let frame = Frame::identity();
    let cx = BigradedComplex::standard();
    let h12 = cx.dolbeault(1, 2);
    let h21 = cx.dolbeault(2, 1);
    let gammas = gamma_forms(&ComplexStructure::standard())?;
    let omega = ordered(&[0, 1, 2]);
    let span: Vec<_> = gammas.iter().map(|g| h21.class_coords(g)).collect::<Result<_, _>>()?;
    let mut holds = true;
    let mut witnesses = Vec::new();
    for k in 0..2 {
        for j in 0..2 {
            let theta = TangentElement::basis(k, j);
            for (n, g) in gammas.iter().enumerate() {
                let c = theta.contract(&frame, g);
                if !h12.is_boundary(&c) {
                    holds = false;
                    witnesses.push(format!("θ=ξ{}⊗{}: θ⌟Γ{} = {} is not ∂̄-exact", mask::NAMES[k], mask::NAMES[j + 3], n + 1, render_form(&c)));
                }
            }
            let c = theta.contract(&frame, &omega);
            let x = h21.class_coords(&c)?;
            let inside = linalg::in_span(&span, &x);
            holds &= inside;
            witnesses.push(format!(
                "θ=ξ{}⊗{}: θ⌟Ω = {} {} span[Γ]",
                mask::NAMES[k],
                mask::NAMES[j + 3],
                render_form(&c),
                if inside { "∈" } else { "∉" }
            ));
        }
    }
    Ok(Verdict {
        name: "transversality at 0".into(),
        holds,
        witnesses,
    })
}

/// ∂Γ_j/∂t̄ at 0, expected: Γ₁/t̄12 = −αβγ, Γ₂/t̄22 = −αβγ, Γ₃/t̄11 = αβγ,
/// Γ₄/t̄21 = αβγ, all others zero.
pub fn f2_holomorphic() -> Result<Verdict, MirrorError> {
    let gj = gamma_jets()?;
    let top = ordered(&[0, 1, 2]);
    let expected = [(ParamVar::S12, -1), (ParamVar::S22, -1), (ParamVar::S11, 1), (ParamVar::S21, 1)];
    let mut holds = true;
    let mut witnesses = Vec::new();
    for (n, g) in gj.iter().enumerate() {
        for v in CONJ {
            let d = g.partial(v);
            let want = if expected[n].0 == v {
                top.scale(&GScalar::from_int(expected[n].1))
            } else {
                Form::zero()
            };
            holds &= d == want;
            if !d.is_zero() || d != want {
                witnesses.push(format!("∂Γ{}/∂{} = {}", n + 1, v.name(), render_form(&d)));
            }
        }
    }
    Ok(Verdict {
        name: "F² holomorphic (anti-holomorphic derivatives of Γ_j are ±αβγ)".into(),
        holds,
        witnesses,
    })
}

/// ∂̄₀ of ∂(⋆_tΓ̄₁)/∂t̄21 at 0 is nonzero; also the identity
/// ∂̄₀(α∧γ̄∧β) = −α∧ᾱ∧β∧β̄.
pub fn h12_witness() -> Result<Verdict, MirrorError> {
    let f = jet_frame(&ParamPoint::zero())?;
    let g1 = gamma_jets()?[0].conj();
    let s = f.from_frame(&star_frame_coords(&f.to_frame(&g1)));
    let d = s.partial(ParamVar::S21);
    let id = Frame::<GScalar>::identity();
    let dbar = id.delbar(&d);
    let witness = id.delbar(&ordered(&[0, 5, 1]));
    let expected = -ordered(&[0, 3, 1, 4]);
    let holds = !dbar.is_zero() && witness == expected;
    Ok(Verdict {
        name: "H^{1,2}_[γ] not holomorphic".into(),
        holds,
        witnesses: vec![
            format!("∂(⋆_tΓ̄₁)/∂t̄21 at 0 = {}", render_form(&d)),
            format!("∂̄₀ of it = {}", render_form(&dbar)),
            format!("∂̄₀(α∧γ̄∧β) = {}", render_form(&witness)),
        ],
    })
}

/// The four generators α_tγ_tᾱ_tγ̄_t, α_tγ_tβ̄_tγ̄_t, β_tγ_tᾱ_tγ̄_t, β_tγ_tβ̄_tγ̄_t
/// as jets at 0 over the full polydisc.
fn generator_jets() -> Result<[Form<Jet1>; 4], MirrorError> {
    let c = jet_covectors(&jet_frame(&ParamPoint::zero())?);
    let w = |a: usize, b: usize| Form::wedge_all(&[c[a].clone(), c[2].clone(), c[b].clone(), c[5].clone()]);
    Ok([w(0, 3), w(0, 4), w(1, 3), w(1, 4)])
}

/// Anti-holomorphic derivatives of the generators land in
/// H^{2,0}(B₀)∧γγ̄ ⊕ span{αβγᾱ, αβγβ̄} (d-closed (3,1)-forms, i.e. the BC image).
pub fn fg_holomorphic() -> Result<Verdict, MirrorError> {
    let gens = generator_jets()?;
    let targets = [ordered(&[0, 1, 2, 5]), ordered(&[0, 1, 2, 3]), ordered(&[0, 1, 2, 4])];
    let tv: Vec<_> = targets.iter().map(|u| u.to_vec(&mask::of_degree(4))).collect();
    let mut holds = true;
    let mut witnesses = Vec::new();
    for (n, g) in gens.iter().enumerate() {
        for v in CONJ {
            let d = g.partial(v);
            if d.is_zero() {
                continue;
            }
            let inside = linalg::in_span(&tv, &d.to_vec(&mask::of_degree(4)));
            holds &= inside;
            witnesses.push(format!("∂G{}/∂{} = {}", n + 1, v.name(), render_form(&d)));
        }
    }
    let g1 = &gens[0];
    holds &= g1.partial(ParamVar::S12) == -targets[0].clone();
    holds &= g1.partial(ParamVar::S32) == targets[1];
    holds &= targets[1].d().is_zero() && targets[2].d().is_zero();
    Ok(Verdict {
        name: "F_G holomorphic".into(),
        holds,
        witnesses,
    })
}

fn obstruction() -> Result<Vec<String>, MirrorError> {
    let f = jet_frame(&ParamPoint::zero())?;
    let s = sigma_from_frame(&f)?;
    let inv = s
        .sigma12
        .conj()
        .try_inv()
        .ok_or_else(|| MirrorError::NormalizationPole("σ12(0) = 0".into()))?;
    let names = ["σ22̄/σ̄12", "σ21̄/σ̄12", "σ12̄/σ̄12", "σ11̄/σ̄12"];
    let vals = [&s.sigma22b, &s.sigma21b, &s.sigma12b, &s.sigma11b];
    let mut out = Vec::new();
    for (name, v) in names.iter().zip(vals) {
        let r = v.clone() * inv.clone();
        let parts: Vec<String> = CONJ.iter().map(|&p| format!("{}:{}", p.name(), r.partial(p))).collect();
        out.push(format!("{name} at 0 = {}; ∂/∂t̄ = [{}]", r.value(), parts.join(", ")));
    }
    Ok(out)
}

pub fn vhs_checks() -> Result<VhsReport, MirrorError> {
    Ok(VhsReport {
        transversality: transversality()?,
        f2_holomorphic: f2_holomorphic()?,
        h12_not_holomorphic: h12_witness()?,
        fg_holomorphic: fg_holomorphic()?,
        second_iso_obstruction: obstruction()?,
    })
}
