use std::fmt;
use std::str::FromStr;

use iwa_exterior::Form;
use iwa_scalars::GScalar;
use serde::{Deserialize, Serialize};

use crate::pairing::{labelled, ordered, PairingKind, PairingMatrix};
use crate::torus::hb_matrix_b0;
use crate::MirrorError;

/// The spaces whose signatures are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedSpace {
    /// H on [αγᾱ+βγβ̄], [αγᾱ−βγβ̄], [αγβ̄], [βγᾱ].
    H21Gamma,
    /// H on [αβγ] and the four classes above.
    F2,
    /// H_B on H^{1,1}(B₀).
    H11B,
    /// H_B on H^{2,0}(B₀) ⊕ H^{1,1}(B₀).
    F1B,
}

impl NamedSpace {
    pub const ALL: [NamedSpace; 4] = [NamedSpace::H21Gamma, NamedSpace::F2, NamedSpace::H11B, NamedSpace::F1B];

    pub fn name(self) -> &'static str {
        match self {
            NamedSpace::H21Gamma => "h21gamma",
            NamedSpace::F2 => "f2",
            NamedSpace::H11B => "h11B",
            NamedSpace::F1B => "f1B",
        }
    }
}

impl fmt::Display for NamedSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSpace {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedSpace::ALL
            .into_iter()
            .find(|n| n.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown space '{s}' (expected h21gamma, f2, h11B or f1B)"))
    }
}

fn h21_gamma_basis() -> Vec<(String, Form<GScalar>)> {
    let agab = ordered(&[0, 2, 3]);
    let bgbb = ordered(&[1, 2, 4]);
    vec![
        labelled("al.ga.al~ + be.ga.be~", agab.clone() + bgbb.clone()),
        labelled("al.ga.al~ - be.ga.be~", agab - bgbb),
        labelled("al.ga.be~", ordered(&[0, 2, 4])),
        labelled("be.ga.al~", ordered(&[1, 2, 3])),
    ]
}

pub fn named_pairing(space: NamedSpace) -> Result<PairingMatrix, MirrorError> {
    match space {
        NamedSpace::H21Gamma => PairingMatrix::new(PairingKind::H, &h21_gamma_basis()),
        NamedSpace::F2 => {
            let mut b = vec![labelled("al.be.ga", ordered(&[0, 1, 2]))];
            b.extend(h21_gamma_basis());
            PairingMatrix::new(PairingKind::H, &b)
        }
        NamedSpace::F1B => hb_matrix_b0(),
        NamedSpace::H11B => {
            let full = hb_matrix_b0()?;
            let idx = [1, 2, 3, 4];
            let rows = idx.iter().map(|&a| idx.iter().map(|&b| full.entries[(a, b)].clone()).collect()).collect();
            Ok(PairingMatrix {
                kind: full.kind,
                labels: idx.iter().map(|&a| full.labels[a].clone()).collect(),
                entries: iwa_scalars::Matrix::from_rows(rows),
            })
        }
    }
}
