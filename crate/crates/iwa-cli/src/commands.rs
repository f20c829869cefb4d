use clap::ValueEnum;
use iwa_cohomology::{BigradedComplex, CohomologyNumbers, Grid};
use iwa_deformation::{build_structure, nakamura_class, sigma_appendix, CVariant, NakamuraClass, Sigma, SIGMA_NAMES};
use iwa_exterior::{parse_form, render_form};
use iwa_hodge::{metric_predicates, Metric};
use iwa_mirror::{
    coordinates_w, coordinates_z, mirror_map_complexified, mirror_map_positive, named_pairing, render_signs,
    vhs_checks, NamedSpace, SymplecticBasis, Verdict, BASIS22_LABELS,
};
use iwa_scalars::{GScalar, ParamPoint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::emit::{Report, Table};
use crate::CliError;

/// Outcome of a command besides its report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Verification failed; carries the first failing witness.
    Failed(String),
}

pub type CommandResult = Result<(Report, Status), CliError>;

fn per_point<F>(points: &[ParamPoint], f: F) -> Result<Report, CliError>
where
    F: Fn(&ParamPoint) -> Result<Report, CliError> + Sync + Send,
{
    let parts = points.par_iter().map(f).collect::<Result<Vec<_>, _>>()?;
    Ok(Report::merge(parts))
}

fn grid_table(title: String, corner: &str, g: &Grid) -> Table {
    let mut t = Table::new(title, &[corner, "q=0", "q=1", "q=2", "q=3"]);
    for (p, row) in g.iter().enumerate() {
        let mut cells = vec![format!("p={p}")];
        cells.extend(row.iter().map(usize::to_string));
        t.row(cells);
    }
    t
}

fn betti_table(title: String, betti: &[usize; 7]) -> Table {
    let mut t = Table::new(title, &["k", "0", "1", "2", "3", "4", "5", "6"]);
    let mut cells = vec!["b_k".to_string()];
    cells.extend(betti.iter().map(usize::to_string));
    t.row(cells);
    t
}

fn at(t: &ParamPoint) -> String {
    format!("t = {t}")
}

/// JSON schema of `iwa hodge`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeReport {
    pub t: ParamPoint,
    pub nakamura_class: String,
    pub hpq_dolbeault: Grid,
    pub hpq_bc: Grid,
    pub hpq_aeppli: Grid,
    pub betti: [usize; 7],
    pub frolicher_e1: Grid,
    pub frolicher_e2: Grid,
}

fn numbers(t: &ParamPoint) -> Result<CohomologyNumbers, CliError> {
    let j = build_structure(t)?;
    Ok(CohomologyNumbers::compute(&BigradedComplex::new(&j))?)
}

pub fn hodge_report(t: &ParamPoint) -> Result<HodgeReport, CliError> {
    let n = numbers(t)?;
    Ok(HodgeReport {
        t: t.clone(),
        nakamura_class: nakamura_class(t).to_string(),
        hpq_dolbeault: n.dolbeault,
        hpq_bc: n.bott_chern,
        hpq_aeppli: n.aeppli,
        betti: n.betti,
        frolicher_e1: n.dolbeault,
        frolicher_e2: n.e2,
    })
}

pub fn hodge(points: &[ParamPoint]) -> CommandResult {
    let r = per_point(points, |t| {
        let h = hodge_report(t)?;
        let tables = vec![
            grid_table(format!("Dolbeault h^{{p,q}} at {}", at(t)), "dolbeault", &h.hpq_dolbeault),
            grid_table(format!("Bott-Chern h^{{p,q}} at {}", at(t)), "bott-chern", &h.hpq_bc),
            grid_table(format!("Aeppli h^{{p,q}} at {}", at(t)), "aeppli", &h.hpq_aeppli),
            grid_table(format!("Frolicher E2 at {}", at(t)), "E2", &h.frolicher_e2),
            betti_table(format!("Betti numbers at {}", at(t)), &h.betti),
        ];
        Ok(Report {
            json: serde_json::to_value(&h).expect("plain data"),
            tables,
        })
    })?;
    Ok((r, Status::Ok))
}

pub fn frolicher(points: &[ParamPoint]) -> CommandResult {
    let r = per_point(points, |t| {
        let n = numbers(t)?;
        let sums_match = (0..7).all(|k| CohomologyNumbers::diagonal_sum(&n.e2, k) == n.betti[k]);
        let e1_degenerates = (0..7).all(|k| CohomologyNumbers::diagonal_sum(&n.dolbeault, k) == n.betti[k]);
        let json = json!({
            "t": t,
            "frolicher_e1": n.dolbeault,
            "frolicher_e2": n.e2,
            "frolicher_e3": n.e3,
            "frolicher_e_infinity": n.e_infinity,
            "betti": n.betti,
            "e1_degenerates": e1_degenerates,
            "e2_equals_e3": n.e2 == n.e3,
            "e2_sums_equal_betti": sums_match,
        });
        let mut summary = Table::new(format!("Frolicher summary at {}", at(t)), &["property", "value"]);
        summary.row(vec!["E1 = E_infinity".into(), e1_degenerates.to_string()]);
        summary.row(vec!["E2 = E3".into(), (n.e2 == n.e3).to_string()]);
        summary.row(vec!["sum E2^{p,q} = b_k".into(), sums_match.to_string()]);
        Ok(Report {
            json,
            tables: vec![
                grid_table(format!("E1 at {}", at(t)), "E1", &n.dolbeault),
                grid_table(format!("E2 at {}", at(t)), "E2", &n.e2),
                grid_table(format!("E3 at {}", at(t)), "E3", &n.e3),
                summary,
            ],
        })
    })?;
    Ok((r, Status::Ok))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum MetricChoice {
    /// ω_t = iΣφ_j∧φ̄_j on X_t.
    #[default]
    Canonical,
    /// ω_t^{1,1} on X₀ (essential slice only).
    Omega11,
}

impl MetricChoice {
    fn build(self, t: &ParamPoint) -> Result<Metric, CliError> {
        Ok(match self {
            MetricChoice::Canonical => Metric::canonical(build_structure(t)?),
            MetricChoice::Omega11 => Metric::omega11(t)?,
        })
    }

    fn name(self) -> &'static str {
        match self {
            MetricChoice::Canonical => "canonical",
            MetricChoice::Omega11 => "omega11",
        }
    }
}

pub fn star(points: &[ParamPoint], form: &str, metric: MetricChoice) -> CommandResult {
    let u = parse_form(form).map_err(|e| CliError::Usage(format!("--form: {e}")))?;
    let r = per_point(points, |t| {
        let m = metric.build(t)?;
        let s = m.star(&u);
        let mut tab = Table::new(format!("Hodge star ({}) at {}", metric.name(), at(t)), &["form", "star"]);
        tab.row(vec![render_form(&u), render_form(&s)]);
        Ok(Report {
            json: json!({"t": t, "metric": metric.name(), "form": render_form(&u), "star": render_form(&s)}),
            tables: vec![tab],
        })
    })?;
    Ok((r, Status::Ok))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Gauduchon,
    Sg,
    Balanced,
    Kahler,
}

impl Check {
    const ALL: [Check; 4] = [Check::Gauduchon, Check::Sg, Check::Balanced, Check::Kahler];

    fn name(self) -> &'static str {
        match self {
            Check::Gauduchon => "gauduchon",
            Check::Sg => "sg",
            Check::Balanced => "balanced",
            Check::Kahler => "kahler",
        }
    }
}

pub fn metric(points: &[ParamPoint], check: Option<Check>, choice: MetricChoice) -> CommandResult {
    let checks: Vec<Check> = check.map_or(Check::ALL.to_vec(), |c| vec![c]);
    let r = per_point(points, |t| {
        let p = metric_predicates(&choice.build(t)?);
        let mut obj = serde_json::Map::new();
        obj.insert("t".into(), json!(t));
        obj.insert("metric".into(), json!(choice.name()));
        obj.insert("positive".into(), json!(p.positive));
        let mut tab = Table::new(format!("Metric conditions ({}) at {}", choice.name(), at(t)), &["predicate", "holds", "witness"]);
        let mut witnesses = serde_json::Map::new();
        for c in &checks {
            let v = match c {
                Check::Gauduchon => &p.gauduchon,
                Check::Sg => &p.strongly_gauduchon,
                Check::Balanced => &p.balanced,
                Check::Kahler => &p.kahler,
            };
            obj.insert(c.name().into(), json!(v.holds));
            witnesses.insert(c.name().into(), json!(v.witness));
            tab.row(vec![c.name().into(), v.holds.to_string(), v.witness.clone().unwrap_or_else(|| "-".into())]);
        }
        if checks.len() == 1 {
            obj.insert("witness".into(), witnesses.into_iter().next().map(|(_, v)| v).unwrap_or(Value::Null));
        } else {
            obj.insert("witnesses".into(), Value::Object(witnesses));
        }
        Ok(Report {
            json: Value::Object(obj),
            tables: vec![tab],
        })
    })?;
    Ok((r, Status::Ok))
}

fn sigma_rows(tab: &mut Table, source: &str, s: &Sigma<GScalar>) {
    for (name, v) in SIGMA_NAMES.iter().zip(s.to_array()) {
        tab.row(vec![source.into(), name.to_string(), v.to_string()]);
    }
}

pub fn sigma(points: &[ParamPoint]) -> CommandResult {
    let r = per_point(points, |t| {
        let frame = build_structure(t)?.sigma()?;
        let class = nakamura_class(t);
        let appendix = match class {
            NakamuraClass::ClassII | NakamuraClass::Parallelisable => Some(sigma_appendix(t, CVariant::Corrected)?),
            NakamuraClass::ClassIII => None,
        };
        let mut tab = Table::new(format!("sigma at {} (class {class})", at(t)), &["source", "name", "value"]);
        sigma_rows(&mut tab, "frame", &frame);
        if let Some(a) = &appendix {
            sigma_rows(&mut tab, "closed form", a);
        }
        Ok(Report {
            json: json!({
                "t": t,
                "nakamura_class": class.to_string(),
                "frame": frame,
                "closed_form": appendix,
                "agree": appendix.as_ref().map(|a| a == &frame),
            }),
            tables: vec![tab],
        })
    })?;
    Ok((r, Status::Ok))
}

pub fn coords(points: &[ParamPoint]) -> CommandResult {
    let basis = SymplecticBasis::standard();
    let r = per_point(points, |t| {
        let z = coordinates_z(t, &basis)?;
        let w = coordinates_w(t)?;
        let mut tab = Table::new(format!("canonical coordinates at {}", at(t)), &["i", "z_i", "w_i"]);
        for k in 0..4 {
            tab.row(vec![(k + 1).to_string(), z[k].to_string(), w[k].to_string()]);
        }
        Ok(Report {
            json: json!({"t": t, "z": z, "w": w}),
            tables: vec![tab],
        })
    })?;
    Ok((r, Status::Ok))
}

pub fn mirror(points: &[ParamPoint], complexified: bool) -> CommandResult {
    let r = per_point(points, |t| {
        let m = if complexified {
            mirror_map_complexified(t)?
        } else {
            mirror_map_positive(t)?
        };
        let mut tab = Table::new(
            format!("{} mirror map at {} (marked: {})", if complexified { "complexified" } else { "positive" }, at(t), m.marked),
            &["class", "coefficient"],
        );
        for (l, c) in BASIS22_LABELS.iter().zip(&m.coeffs) {
            tab.row(vec![l.to_string(), c.to_string()]);
        }
        Ok(Report {
            json: json!({
                "t": t,
                "complexified": complexified,
                "basis": BASIS22_LABELS,
                "coeffs": m.coeffs,
                "marked": m.marked,
            }),
            tables: vec![tab],
        })
    })?;
    Ok((r, Status::Ok))
}

pub fn signature(space: NamedSpace) -> CommandResult {
    let m = named_pairing(space)?;
    let signs = m
        .signature()
        .ok_or_else(|| CliError::Domain {
            kind: "NotHermitian".into(),
            message: format!("pairing on {space} is not Hermitian"),
        })?;
    let (minus, plus, zero) = m.inertia().expect("Hermitian");
    let entries: Vec<Vec<String>> = (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| m.entries[(r, c)].to_string()).collect())
        .collect();
    let mut header = vec![""];
    header.extend(m.labels.iter().map(String::as_str));
    let mut tab = Table::new(format!("{:?} on {space}: signature {}", m.kind, render_signs(&signs)), &header);
    for (l, row) in m.labels.iter().zip(&entries) {
        let mut cells = vec![l.clone()];
        cells.extend(row.iter().cloned());
        tab.row(cells);
    }
    let json = json!({
        "space": space.name(),
        "pairing": format!("{:?}", m.kind),
        "basis": m.labels,
        "matrix": entries,
        "signature": render_signs(&signs),
        "inertia": {"minus": minus, "plus": plus, "zero": zero},
    });
    Ok((Report { json, tables: vec![tab] }, Status::Ok))
}

fn verdict_rows(tab: &mut Table, v: &Verdict) {
    tab.row(vec![v.name.clone(), v.holds.to_string(), v.witnesses.first().cloned().unwrap_or_default()]);
    for w in v.witnesses.iter().skip(1) {
        tab.row(vec![String::new(), String::new(), w.clone()]);
    }
}

pub fn vhs_check() -> CommandResult {
    let r = vhs_checks()?;
    let mut tab = Table::new("VHS checks at t = 0", &["check", "holds", "witnesses"]);
    for v in r.verdicts() {
        verdict_rows(&mut tab, v);
    }
    let mut obs = Table::new("second isomorphism: anti-holomorphic jets (no verdict)", &["coefficient"]);
    for line in &r.second_iso_obstruction {
        obs.row(vec![line.clone()]);
    }
    let status = match r.verdicts().iter().find(|v| !v.holds) {
        Some(v) => Status::Failed(format!("{}: {}", v.name, v.witnesses.join("; "))),
        None => Status::Ok,
    };
    Ok((
        Report {
            json: serde_json::to_value(&r).expect("plain data"),
            tables: vec![tab, obs],
        },
        status,
    ))
}
