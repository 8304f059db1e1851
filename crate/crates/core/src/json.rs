//! Wire formats. Every number is written as an exact string (`"p/q"` or
//! `"n"`); integer literals are also accepted on input.

use serde::{Deserialize, Serialize};

use crate::cones::RationalCone;
use crate::cover::{CoverScope, UnimodularCover};
use crate::ellipsoid::{Ellipsoid, EllipsoidalSet};
use crate::error::{Error, Result};
use crate::exact::{format_rational, parse_rational, AffineLattice, ExactScalar, IntVector, RatMatrix, RatVector};
use crate::polytope::{LatticePolytope, Simplex};

/// A rational read from either a string literal or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Text(String),
    Int(i64),
}

impl Num {
    pub fn value(&self) -> Result<ExactScalar> {
        match self {
            Num::Text(s) => parse_rational(s),
            Num::Int(n) => Ok(crate::exact::int(*n)),
        }
    }

    pub fn integer(&self) -> Result<i64> {
        crate::exact::as_i64(&self.value()?)
            .ok_or_else(|| Error::Parse(format!("expected an integer, got {self:?}")))
    }
}

impl From<&ExactScalar> for Num {
    fn from(x: &ExactScalar) -> Self {
        Num::Text(format_rational(x))
    }
}

pub fn nums(v: &[ExactScalar]) -> Vec<Num> {
    v.iter().map(Num::from).collect()
}

pub fn values(v: &[Num]) -> Result<RatVector> {
    v.iter().map(Num::value).collect()
}

pub fn integers(v: &[Num]) -> Result<IntVector> {
    v.iter().map(Num::integer).collect()
}

fn rows(m: &RatMatrix) -> Vec<Vec<Num>> {
    (0..m.rows()).map(|i| nums(m.row(i))).collect()
}

fn matrix(rows: &[Vec<Num>]) -> Result<RatMatrix> {
    RatMatrix::from_rows(rows.iter().map(|r| values(r)).collect::<Result<_>>()?)
}

/// `shift + basis * Z^d`; basis vectors are the columns of the row-major
/// `basis`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub basis: Vec<Vec<Num>>,
    pub shift: Vec<Num>,
}

impl From<&AffineLattice> for LatticeJson {
    fn from(l: &AffineLattice) -> Self {
        Self { basis: rows(l.basis()), shift: nums(l.shift()) }
    }
}

impl LatticeJson {
    pub fn to_lattice(&self) -> Result<AffineLattice> {
        AffineLattice::new(matrix(&self.basis)?, values(&self.shift)?)
    }
}

fn lattice_or_standard(l: &Option<LatticeJson>, dim: usize) -> Result<AffineLattice> {
    match l {
        Some(l) => l.to_lattice(),
        None => Ok(AffineLattice::standard(dim)),
    }
}

/// Facet inequality `normal . x <= offset` in ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<Num>,
    pub offset: Num,
}

/// A lattice polytope given by points whose hull it is. The lattice
/// defaults to `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
    pub vertices: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<FacetJson>>,
}

impl PolytopeJson {
    pub fn new(p: &LatticePolytope, with_facets: bool) -> Self {
        let facets = with_facets.then(|| {
            p.ambient_facets().iter().map(|(n, b)| FacetJson { normal: nums(n), offset: b.into() }).collect()
        });
        Self {
            lattice: Some(p.lattice().into()),
            vertices: p.vertices().iter().map(|v| nums(v)).collect(),
            facets,
        }
    }

    pub fn to_polytope(&self) -> Result<LatticePolytope> {
        let pts: Vec<RatVector> = self.vertices.iter().map(|v| values(v)).collect::<Result<_>>()?;
        let dim = pts.first().ok_or(Error::EmptyPointSet)?.len();
        LatticePolytope::new(&pts, &lattice_or_standard(&self.lattice, dim)?)
    }
}

/// A cone generated by integer vectors in coordinates of the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeJson {
    pub rays: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
}

impl From<&RationalCone> for ConeJson {
    fn from(c: &RationalCone) -> Self {
        Self { rays: c.rays().to_vec(), lattice: Some(c.lattice().into()) }
    }
}

impl ConeJson {
    pub fn to_cone(&self) -> Result<RationalCone> {
        let dim = self.rays.first().ok_or(Error::EmptyPointSet)?.len();
        RationalCone::new(&lattice_or_standard(&self.lattice, dim)?, &self.rays)
    }
}

/// `{ x : (x - center)^T A (x - center) <= 1 }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipsoidJson {
    #[serde(rename = "A")]
    pub a: Vec<Vec<Num>>,
    pub center: Vec<Num>,
}

impl From<&Ellipsoid> for EllipsoidJson {
    fn from(e: &Ellipsoid) -> Self {
        Self { a: rows(e.matrix()), center: nums(e.center()) }
    }
}

impl EllipsoidJson {
    pub fn to_ellipsoid(&self) -> Result<Ellipsoid> {
        Ellipsoid::new(matrix(&self.a)?, values(&self.center)?)
    }
}

/// Points of an ellipsoidal set bundled with the ellipsoid that cuts them
/// out. `extremal` is informational and recomputed on input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EllipsoidalSetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<LatticeJson>,
    pub points: Vec<Vec<Num>>,
    pub certificate: EllipsoidJson,
    #[serde(default)]
    pub extremal: Vec<Vec<Num>>,
}

impl From<&EllipsoidalSet> for EllipsoidalSetJson {
    fn from(s: &EllipsoidalSet) -> Self {
        Self {
            lattice: Some(s.lattice().into()),
            points: s.points().iter().map(|v| nums(v)).collect(),
            certificate: s.certificate().into(),
            extremal: s.extremal_points().iter().map(|v| nums(v)).collect(),
        }
    }
}

impl EllipsoidalSetJson {
    pub fn to_set(&self) -> Result<EllipsoidalSet> {
        let certificate = self.certificate.to_ellipsoid()?;
        let lattice = lattice_or_standard(&self.lattice, certificate.dim())?;
        let pts: Vec<RatVector> = self.points.iter().map(|v| values(v)).collect::<Result<_>>()?;
        EllipsoidalSet::with_certificate(&pts, certificate, &lattice)
    }
}

fn scope_name(s: CoverScope) -> &'static str {
    match s {
        CoverScope::Full => "full",
        CoverScope::BoundaryNeighbourhood => "boundary-neighbourhood",
    }
}

fn parse_scope(s: &str) -> Result<CoverScope> {
    match s {
        "full" => Ok(CoverScope::Full),
        "boundary-neighbourhood" => Ok(CoverScope::BoundaryNeighbourhood),
        other => Err(Error::Parse(format!("unknown cover scope {other:?}"))),
    }
}

/// A cover as simplices indexing into a shared, sorted point table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverJson {
    pub target: PolytopeJson,
    pub points: Vec<Vec<Num>>,
    pub simplices: Vec<Vec<usize>>,
    #[serde(default = "default_scope")]
    pub scope: String,
    #[serde(default)]
    pub verified: bool,
}

fn default_scope() -> String {
    scope_name(CoverScope::Full).to_owned()
}

impl From<&UnimodularCover> for CoverJson {
    fn from(c: &UnimodularCover) -> Self {
        let lattice = c.target.lattice();
        let mut table: Vec<IntVector> =
            c.simplices.iter().flat_map(|s| s.vertex_coords().iter().cloned()).collect();
        table.sort_by_cached_key(|y| lattice.from_coords(y));
        table.dedup();
        let index = |y: &IntVector| table.iter().position(|t| t == y).expect("vertex in table");
        let simplices = c
            .simplices
            .iter()
            .map(|s| {
                let mut ix: Vec<usize> = s.vertex_coords().iter().map(index).collect();
                ix.sort_unstable();
                ix
            })
            .collect();
        Self {
            target: PolytopeJson::new(&c.target, false),
            points: table.iter().map(|y| nums(&lattice.from_coords(y))).collect(),
            simplices,
            scope: scope_name(c.scope).to_owned(),
            verified: c.verified,
        }
    }
}

impl CoverJson {
    /// Rebuilds the cover. The `verified` flag is carried over as given;
    /// callers that need a certificate must run the verifier.
    pub fn to_cover(&self) -> Result<UnimodularCover> {
        let target = self.target.to_polytope()?;
        let lattice = target.lattice().clone();
        let table: Vec<IntVector> =
            self.points.iter().map(|v| lattice.to_coords(&values(v)?)).collect::<Result<_>>()?;
        let simplices = self
            .simplices
            .iter()
            .map(|ix| {
                let verts = ix
                    .iter()
                    .map(|&i| {
                        table.get(i).cloned().ok_or_else(|| Error::Parse(format!("point index {i} out of range")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Simplex::from_coords(lattice.clone(), verts)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(UnimodularCover {
            target,
            simplices,
            scope: parse_scope(&self.scope)?,
            verified: self.verified,
            repairs: 0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_vec};

    #[test]
    fn numbers_accept_both_spellings() {
        let v: Vec<Num> = serde_json::from_str(r#"["3/6", 4, "-2"]"#).unwrap();
        assert_eq!(values(&v).unwrap(), vec![rat(1, 2), rat(4, 1), rat(-2, 1)]);
        assert_eq!(serde_json::to_string(&nums(&[rat(1, 2), rat(4, 1)])).unwrap(), r#"["1/2","4"]"#);
        assert!(serde_json::from_str::<Num>("1.5").is_err());
        assert!(Num::Text("1/0".into()).value().is_err());
    }

    #[test]
    fn polytope_round_trip() {
        let json = r#"{"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1],["1/3","1/3","1/3"]]}"#;
        let p: PolytopeJson = serde_json::from_str(json).unwrap();
        assert!(p.to_polytope().is_err());
        let json = r#"{"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1],[0,0,0]]}"#;
        let p = serde_json::from_str::<PolytopeJson>(json).unwrap().to_polytope().unwrap();
        let out = PolytopeJson::new(&p, true);
        let text = serde_json::to_string(&out).unwrap();
        let back: PolytopeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, out);
        assert_eq!(back.to_polytope().unwrap().vertex_coords(), p.vertex_coords());
        assert_eq!(out.facets.unwrap().len(), 4);
    }

    #[test]
    fn ellipsoid_and_set_round_trip() {
        let e = Ellipsoid::ball(vec![rat(1, 2); 3], rat(3, 4)).unwrap();
        let ej = EllipsoidJson::from(&e);
        assert_eq!(ej.to_ellipsoid().unwrap(), e);
        let s = EllipsoidalSet::from_ellipsoid(e, &AffineLattice::half_integer(3));
        let sj = EllipsoidalSetJson::from(&s);
        let text = serde_json::to_string(&sj).unwrap();
        let back: EllipsoidalSetJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, sj);
        assert_eq!(back.to_set().unwrap(), s);
    }

    #[test]
    fn cover_round_trip() {
        let l = AffineLattice::standard(2);
        let square =
            LatticePolytope::new(&[rat_vec(&[0, 0]), rat_vec(&[1, 0]), rat_vec(&[0, 1]), rat_vec(&[1, 1])], &l).unwrap();
        let s1 = Simplex::from_coords(l.clone(), vec![vec![0, 0], vec![1, 0], vec![1, 1]]).unwrap();
        let s2 = Simplex::from_coords(l.clone(), vec![vec![0, 0], vec![0, 1], vec![1, 1]]).unwrap();
        let cover = UnimodularCover {
            target: square,
            simplices: vec![s1, s2],
            scope: CoverScope::Full,
            verified: true,
            repairs: 0,
        };
        let cj = CoverJson::from(&cover);
        assert_eq!(cj.points.len(), 4);
        assert_eq!(cj.simplices, vec![vec![0, 2, 3], vec![0, 1, 3]]);
        let back = cj.to_cover().unwrap();
        assert_eq!(CoverJson::from(&back), cj);
        let mut broken = cj.clone();
        broken.simplices[0][0] = 9;
        assert!(broken.to_cover().is_err());
    }

    #[test]
    fn cone_and_lattice_round_trip() {
        let l = AffineLattice::half_integer(3);
        let lj = LatticeJson::from(&l);
        assert_eq!(lj.to_lattice().unwrap(), l);
        let c: ConeJson = serde_json::from_str(r#"{"rays": [[1,0,0],[0,1,0],[1,1,2]]}"#).unwrap();
        let cone = c.to_cone().unwrap();
        assert_eq!(ConeJson::from(&cone).to_cone().unwrap(), cone);
    }
}
