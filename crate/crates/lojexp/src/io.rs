//! JSON wire formats. Rationals travel as "a/b" in lowest terms (integer
//! strings and plain JSON integers are accepted on input).

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algnum::Alg;
use crate::closure::{ClosureCertificate, ClosureWitness};
use crate::error::{EngineError, Result};
use crate::exponent::{Exactness, LojResult, LojValue, SharpnessWitness, ThetaReport};
use crate::families::{CandidateLabel, ChamberReport, FamilyCandidate, FamilySpec};
use crate::filtration::FiltrationSpec;
use crate::ideal::MonomialIdeal;
use crate::infinity::{DivisorRow, DivisorTable, NondegeneracyReport, PolyMap};
use crate::lattice::{ExpVec, WeightVec};
use crate::multiplicity::{MilnorReport, MixedTable, TeissierReport};
use crate::polyhedron::NewtonPolyhedron;
use crate::rat::{format_rat, parse_rat, Rat};

/// A rational carried as "a/b" (or an integer) in JSON.
#[derive(Debug, Clone, PartialEq)]
pub struct RatStr(pub Rat);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let text = match &v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            other => {
                return Err(serde::de::Error::custom(format!(
                    "expected rational string, got {other}"
                )))
            }
        };
        parse_rat(&text)
            .map(RatStr)
            .map_err(|e| serde::de::Error::custom(e.to_string()))
    }
}

// ---------- input formats ----------

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdealJson {
    pub dim: usize,
    pub gens: Vec<Vec<i64>>,
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        MonomialIdeal::from_coords(self.dim, &self.gens)
    }

    pub fn of(ideal: &MonomialIdeal) -> IdealJson {
        IdealJson {
            dim: ideal.dim(),
            gens: ideal.gens().iter().map(|g| g.coords().to_vec()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConstraintJson {
    pub w: Vec<i64>,
    pub c: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorJson {
    pub ideal: IdealJson,
    pub lambda: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FiltrationJson {
    Power { ideal: IdealJson },
    Linear { dim: usize, constraints: Vec<ConstraintJson> },
    Product { factors: Vec<FactorJson> },
}

impl FiltrationJson {
    pub fn to_spec(&self) -> Result<FiltrationSpec> {
        match self {
            FiltrationJson::Power { ideal } => Ok(FiltrationSpec::Power(ideal.to_ideal()?)),
            FiltrationJson::Linear { dim, constraints } => {
                let cs = constraints
                    .iter()
                    .map(|c| Ok((WeightVec::new(c.w.clone())?, c.c.0.clone())))
                    .collect::<Result<Vec<_>>>()?;
                FiltrationSpec::linear(*dim, cs)
            }
            FiltrationJson::Product { factors } => {
                let fs = factors
                    .iter()
                    .map(|f| Ok((f.ideal.to_ideal()?, f.lambda.0.clone())))
                    .collect::<Result<Vec<_>>>()?;
                FiltrationSpec::product(fs)
            }
        }
    }
}

/// Accepts either a bare ideal file or a filtration file; bare ideals are
/// read as their power filtration.
pub fn parse_filtration(text: &str) -> Result<FiltrationSpec> {
    if let Ok(f) = serde_json::from_str::<FiltrationJson>(text) {
        return f.to_spec();
    }
    let ideal: IdealJson = serde_json::from_str(text)
        .map_err(|e| EngineError::InvalidInput(format!("not an ideal or filtration: {e}")))?;
    Ok(FiltrationSpec::Power(ideal.to_ideal()?))
}

pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let ideal: IdealJson = serde_json::from_str(text)
        .map_err(|e| EngineError::InvalidInput(format!("bad ideal JSON: {e}")))?;
    ideal.to_ideal()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyCandidateJson {
    pub label: serde_json::Value,
    pub a0: RatStr,
    pub a1: RatStr,
    pub b0: RatStr,
    pub b1: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FamilyJson {
    pub candidates: Vec<FamilyCandidateJson>,
}

impl FamilyJson {
    pub fn to_spec(&self) -> Result<FamilySpec> {
        let mut out = Vec::new();
        for c in &self.candidates {
            let label = match &c.label {
                serde_json::Value::String(s) => CandidateLabel::Name(s.clone()),
                serde_json::Value::Array(a) => {
                    let coords = a
                        .iter()
                        .map(|v| {
                            v.as_i64().ok_or_else(|| {
                                EngineError::InvalidInput("label array must be integers".into())
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    CandidateLabel::Weight(WeightVec::new(coords)?)
                }
                other => {
                    return Err(EngineError::InvalidInput(format!(
                        "label must be a string or weight array, got {other}"
                    )))
                }
            };
            out.push(FamilyCandidate {
                label,
                a0: c.a0.0.clone(),
                a1: c.a1.0.clone(),
                b0: c.b0.0.clone(),
                b1: c.b1.0.clone(),
            });
        }
        FamilySpec::new(out)
    }
}

pub fn parse_family(text: &str) -> Result<FamilySpec> {
    let f: FamilyJson = serde_json::from_str(text)
        .map_err(|e| EngineError::InvalidInput(format!("bad family JSON: {e}")))?;
    f.to_spec()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i64>,
    pub coeff: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapJson {
    pub n: usize,
    pub components: Vec<Vec<TermJson>>,
}

impl MapJson {
    pub fn to_map(&self) -> Result<PolyMap> {
        let comps = self
            .components
            .iter()
            .map(|comp| {
                comp.iter()
                    .map(|t| Ok((ExpVec::new(t.exp.clone())?, t.coeff.0.clone())))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        PolyMap::new(self.n, comps)
    }
}

pub fn parse_map(text: &str) -> Result<PolyMap> {
    let m: MapJson = serde_json::from_str(text)
        .map_err(|e| EngineError::InvalidInput(format!("bad map JSON: {e}")))?;
    m.to_map()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableRowJson {
    pub label: String,
    #[serde(rename = "ordX")]
    pub ord_x: u64,
    #[serde(rename = "ordY")]
    pub ord_y: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableJson {
    pub rows: Vec<TableRowJson>,
}

impl TableJson {
    pub fn to_table(&self) -> Result<DivisorTable> {
        DivisorTable::new(
            self.rows
                .iter()
                .map(|r| DivisorRow {
                    label: r.label.clone(),
                    ord_x: r.ord_x,
                    ord_y: r.ord_y,
                })
                .collect(),
        )
    }
}

pub fn parse_table(text: &str) -> Result<DivisorTable> {
    let t: TableJson = serde_json::from_str(text)
        .map_err(|e| EngineError::InvalidInput(format!("bad table JSON: {e}")))?;
    t.to_table()
}

// ---------- output formats ----------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<i64>,
    pub offset: RatStr,
    pub compact: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyhedronJson {
    pub dim: usize,
    pub vertices: Vec<Vec<RatStr>>,
    pub facets: Vec<FacetJson>,
}

impl PolyhedronJson {
    pub fn of(np: &NewtonPolyhedron) -> PolyhedronJson {
        PolyhedronJson {
            dim: np.dim(),
            vertices: np
                .vertices()
                .iter()
                .map(|v| v.iter().map(|x| RatStr(x.clone())).collect())
                .collect(),
            facets: np
                .facets()
                .iter()
                .map(|f| FacetJson {
                    normal: f.normal.coords().to_vec(),
                    offset: RatStr(f.offset.clone()),
                    compact: f.normal.strictly_positive(),
                })
                .collect(),
        }
    }
}

pub fn loj_value_string(v: &LojValue) -> String {
    match v {
        LojValue::Finite(r) => format_rat(r),
        LojValue::Infinite => "inf".to_string(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LojCandidateJson {
    pub u: Vec<i64>,
    pub v_a: RatStr,
    pub v_b: RatStr,
    pub ratio: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LojJson {
    pub value: String,
    pub maximizers: Vec<Vec<i64>>,
    pub per_candidate: Vec<LojCandidateJson>,
    pub exact: bool,
}

impl LojJson {
    pub fn of(res: &LojResult) -> LojJson {
        LojJson {
            value: loj_value_string(&res.value),
            maximizers: res
                .maximizer_set
                .iter()
                .map(|u| u.coords().to_vec())
                .collect(),
            per_candidate: res
                .per_candidate
                .iter()
                .map(|(u, va, vb, r)| LojCandidateJson {
                    u: u.coords().to_vec(),
                    v_a: RatStr(va.clone()),
                    v_b: RatStr(vb.clone()),
                    ratio: RatStr(r.clone()),
                })
                .collect(),
            exact: matches!(res.exactness, Exactness::Exact),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ThetaJson {
    pub lct: RatStr,
    pub loj_m: RatStr,
    pub theta: RatStr,
    pub rigid: bool,
    pub diagonal_facet: Option<FacetJson>,
}

impl ThetaJson {
    pub fn of(r: &ThetaReport) -> ThetaJson {
        ThetaJson {
            lct: RatStr(r.lct.clone()),
            loj_m: RatStr(r.loj_m.clone()),
            theta: RatStr(r.theta.clone()),
            rigid: r.rigid,
            diagonal_facet: r.diagonal_facet.as_ref().map(|(u, c)| FacetJson {
                normal: u.coords().to_vec(),
                offset: RatStr(c.clone()),
                compact: true,
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateJson {
    pub member: bool,
    pub witness: WitnessJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessJson {
    ViolatedFacet {
        monomial: Vec<i64>,
        normal: Vec<i64>,
        deficit: RatStr,
    },
    Convex {
        monomial: Vec<i64>,
        lambdas: Vec<(Vec<RatStr>, RatStr)>,
        slack: Vec<RatStr>,
    },
    Power {
        monomial: Vec<i64>,
        k: u64,
        decomposition: Vec<(Vec<i64>, u64)>,
        remainder: Vec<i64>,
    },
}

impl CertificateJson {
    pub fn of(c: &ClosureCertificate) -> CertificateJson {
        let witness = match &c.witness {
            ClosureWitness::ViolatedFacet {
                monomial,
                normal,
                deficit,
            } => WitnessJson::ViolatedFacet {
                monomial: monomial.coords().to_vec(),
                normal: normal.coords().to_vec(),
                deficit: RatStr(deficit.clone()),
            },
            ClosureWitness::Convex {
                monomial,
                lambdas,
                slack,
            } => WitnessJson::Convex {
                monomial: monomial.coords().to_vec(),
                lambdas: lambdas
                    .iter()
                    .map(|(v, l)| {
                        (
                            v.iter().map(|x| RatStr(x.clone())).collect(),
                            RatStr(l.clone()),
                        )
                    })
                    .collect(),
                slack: slack.iter().map(|x| RatStr(x.clone())).collect(),
            },
            ClosureWitness::Power {
                monomial,
                k,
                decomposition,
                remainder,
            } => WitnessJson::Power {
                monomial: monomial.coords().to_vec(),
                k: *k,
                decomposition: decomposition
                    .iter()
                    .map(|(g, e)| (g.coords().to_vec(), *e))
                    .collect(),
                remainder: remainder.coords().to_vec(),
            },
        };
        CertificateJson {
            member: c.member,
            witness,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixedJson {
    pub dim: usize,
    pub e: Vec<u64>,
    pub window: (i64, i64),
    pub stable: bool,
}

impl MixedJson {
    pub fn of(t: &MixedTable) -> MixedJson {
        MixedJson {
            dim: t.dim,
            e: t.e.clone(),
            window: t.window,
            stable: t.stable,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TeissierJson {
    pub table: MixedJson,
    pub log_convex: bool,
    pub product_multiplicity: u64,
    pub binomial_identity: bool,
    pub minkowski: bool,
    pub containment_rows: Vec<(u32, u32, bool)>,
    pub containment_bounds: bool,
    pub loj_bound_rows: Vec<(usize, RatStr, u64)>,
    pub loj_bounds: bool,
}

impl TeissierJson {
    pub fn of(r: &TeissierReport) -> TeissierJson {
        TeissierJson {
            table: MixedJson::of(&r.table),
            log_convex: r.log_convex,
            product_multiplicity: r.product_multiplicity,
            binomial_identity: r.binomial_identity,
            minkowski: r.minkowski,
            containment_rows: r.containment_rows.clone(),
            containment_bounds: r.containment_bounds,
            loj_bound_rows: r
                .loj_bound_rows
                .iter()
                .map(|(i, l, e)| (*i, RatStr(l.clone()), *e))
                .collect(),
            loj_bounds: r.loj_bounds,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MilnorJson {
    pub mu: u64,
    pub gradient_loj: RatStr,
    pub bound_rows: Vec<(usize, RatStr, u64)>,
    pub bounds_hold: bool,
}

impl MilnorJson {
    pub fn of(r: &MilnorReport) -> MilnorJson {
        MilnorJson {
            mu: r.mu,
            gradient_loj: RatStr(r.gradient_loj.clone()),
            bound_rows: r
                .bound_rows
                .iter()
                .map(|(i, l, e)| (*i, RatStr(l.clone()), *e))
                .collect(),
            bounds_hold: r.bounds_hold,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum WallJson {
    Rational {
        value: RatStr,
    },
    Quadratic {
        expr: String,
        enclosure: (RatStr, RatStr),
    },
}

impl WallJson {
    pub fn of(w: &Alg) -> WallJson {
        match w {
            Alg::Rational(r) => WallJson::Rational {
                value: RatStr(r.clone()),
            },
            surd => {
                let (lo, hi) = surd.enclosure(32);
                WallJson::Quadratic {
                    expr: surd.describe(),
                    enclosure: (RatStr(lo), RatStr(hi)),
                }
            }
        }
    }

    pub fn plain(w: &Alg) -> String {
        match w {
            Alg::Rational(r) => format_rat(r),
            surd => surd.describe(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChamberJson {
    pub lo: WallJson,
    pub hi: WallJson,
    pub sample: RatStr,
    pub maximizers: Vec<String>,
    pub formula: FormulaJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FormulaJson {
    pub label: String,
    pub a0: RatStr,
    pub a1: RatStr,
    pub b0: RatStr,
    pub b1: RatStr,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChamberReportJson {
    pub walls: Vec<WallJson>,
    pub chambers: Vec<ChamberJson>,
    pub l_continuous: bool,
    pub inv_l_affine: bool,
}

impl ChamberReportJson {
    pub fn of(spec: &FamilySpec, r: &ChamberReport) -> ChamberReportJson {
        ChamberReportJson {
            walls: r.walls.iter().map(WallJson::of).collect(),
            chambers: r
                .chambers
                .iter()
                .map(|ch| {
                    let f = &spec.candidates()[ch.formula];
                    ChamberJson {
                        lo: WallJson::of(&ch.lo),
                        hi: WallJson::of(&ch.hi),
                        sample: RatStr(ch.sample.clone()),
                        maximizers: ch
                            .maximizer_set
                            .iter()
                            .map(|&i| spec.candidates()[i].label.to_string())
                            .collect(),
                        formula: FormulaJson {
                            label: f.label.to_string(),
                            a0: RatStr(f.a0.clone()),
                            a1: RatStr(f.a1.clone()),
                            b0: RatStr(f.b0.clone()),
                            b1: RatStr(f.b1.clone()),
                        },
                    }
                })
                .collect(),
            l_continuous: r.l_continuous,
            inv_l_affine: r.inv_l_affine,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SharpnessJson {
    pub n: i64,
    pub m: i64,
    pub p: i64,
    pub q: i64,
    pub witness: Vec<i64>,
    pub valuation_rows: Vec<(Vec<i64>, RatStr, RatStr)>,
    pub check_valuations: bool,
    pub witness_values: (RatStr, RatStr),
    pub check_witness_violates: bool,
}

impl SharpnessJson {
    pub fn of(s: &SharpnessWitness) -> SharpnessJson {
        SharpnessJson {
            n: s.n_param,
            m: s.m_param,
            p: s.p,
            q: s.q,
            witness: s.witness.coords().to_vec(),
            valuation_rows: s
                .valuation_rows
                .iter()
                .map(|(w, a, b)| (w.coords().to_vec(), RatStr(a.clone()), RatStr(b.clone())))
                .collect(),
            check_valuations: s.check_valuations,
            witness_values: (
                RatStr(s.witness_values.0.clone()),
                RatStr(s.witness_values.1.clone()),
            ),
            check_witness_violates: s.check_witness_violates,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NondegeneracyJson {
    pub nondegenerate: bool,
    pub offending_w: Option<Vec<i64>>,
}

impl NondegeneracyJson {
    pub fn of(r: &NondegeneracyReport) -> NondegeneracyJson {
        NondegeneracyJson {
            nondegenerate: r.nondegenerate,
            offending_w: r.offending.as_ref().map(|w| w.coords().to_vec()),
        }
    }
}
