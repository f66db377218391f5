use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abgroup::{homology_at, image, kernel, normalize_invariants, smith, FgAbGroup, Invariants, InvariantsRepr, Transforms};
use crate::rmod::{LeftModule, RightModule};

use super::basis::{Direction, Theory};
use super::complex::{complex, ChainComplexZ};
use super::HomologyError;

/// One degree of a (co)homology computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeGroup {
    pub n: usize,
    #[serde(flatten)]
    pub group: InvariantsRepr,
}

impl DegreeGroup {
    pub fn invariants(&self) -> Invariants {
        self.group.clone().into()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub direction: Direction,
    pub theory: Theory,
    pub z: usize,
    pub rack_order: usize,
    #[serde(rename = "H")]
    pub groups: Vec<DegreeGroup>,
}

impl HomologyResult {
    pub fn degree(&self, n: usize) -> Option<Invariants> {
        self.groups.iter().find(|g| g.n == n).map(DegreeGroup::invariants)
    }
}

/// Smith diagonal of a map, without transforms.
fn diagonal(cx: &ChainComplexZ, n: usize) -> Vec<BigInt> {
    if n == 0 || n > cx.top() {
        return Vec::new();
    }
    smith(&cx.map(n).to_dense(), Transforms::NONE).diagonal
}

/// Homology in degrees `0..top` (the top degree lacks its outgoing map).
/// Complexes of free groups use Smith diagonals only; otherwise each
/// degree is a subquotient of the presented chain group.
pub fn homology_groups(cx: &ChainComplexZ) -> Result<HomologyResult, HomologyError> {
    let top = cx.top();
    let groups: Vec<DegreeGroup> = if cx.is_free() {
        let diags: Vec<Vec<BigInt>> = (0..=top).into_par_iter().map(|n| diagonal(cx, n)).collect();
        let ranks = cx.ranks();
        (0..top)
            .map(|n| {
                // incoming map (the one whose cokernel carries torsion)
                let (inc, out) = match cx.direction() {
                    Direction::Homology => (n + 1, n),
                    Direction::Cohomology => (n, n + 1),
                };
                let free = ranks[n] - diags[inc].len() - diags[out].len();
                let torsion: Vec<BigInt> = diags[inc].iter().filter(|d| !d.is_one()).cloned().collect();
                let inv = Invariants::new(free, normalize_invariants(&torsion));
                DegreeGroup { n, group: (&inv).into() }
            })
            .collect()
    } else {
        (0..top)
            .into_par_iter()
            .map(|n| {
                let (f, g) = match cx.direction() {
                    Direction::Homology => (cx.map_hom(n), cx.map_hom(n + 1)),
                    Direction::Cohomology => (cx.map_hom(n), cx.map_hom(n + 1)),
                };
                let h = match cx.direction() {
                    Direction::Homology => homology_at(&g, &f)?,
                    Direction::Cohomology => homology_at(&f, &g)?,
                };
                Ok(DegreeGroup { n, group: h.group().invariants().into() })
            })
            .collect::<Result<_, HomologyError>>()?
    };
    Ok(HomologyResult {
        direction: cx.direction(),
        theory: cx.theory(),
        z: cx.z(),
        rack_order: cx.rack().order(),
        groups,
    })
}

/// `H_n(X; A)_z` for `0 <= n <= max_degree`.
pub fn homology(a: &RightModule, max_degree: usize, z: usize, theory: Theory) -> Result<HomologyResult, HomologyError> {
    homology_groups(&complex(a, z, max_degree + 1, theory, Direction::Homology)?)
}

/// `H^n(X; A)_z` for `0 <= n <= max_degree`.
pub fn cohomology(a: &LeftModule, max_degree: usize, z: usize, theory: Theory) -> Result<HomologyResult, HomologyError> {
    homology_groups(&complex(a, z, max_degree + 1, theory, Direction::Cohomology)?)
}

/// `Der(X, A) = ker d²`.
pub fn derivations(a: &LeftModule) -> Result<FgAbGroup, HomologyError> {
    let cx = complex(a, 0, 2, Theory::Rack, Direction::Cohomology)?;
    Ok(kernel(&cx.map_hom(2))?.group().clone())
}

/// `PDer(X, A) = im d¹_z`.
pub fn principal_derivations(a: &LeftModule, z: usize) -> Result<FgAbGroup, HomologyError> {
    let cx = complex(a, z, 1, Theory::Rack, Direction::Cohomology)?;
    Ok(image(&cx.map_hom(1))?.group().clone())
}

/// `H¹(X; A)_z = Der / PDer`.
pub fn first_cohomology(a: &LeftModule, z: usize) -> Result<FgAbGroup, HomologyError> {
    let cx = complex(a, z, 2, Theory::Rack, Direction::Cohomology)?;
    Ok(homology_at(&cx.map_hom(1), &cx.map_hom(2))?.group().clone())
}

/// `Ext(X, A) = ker d³ / im d²`.
pub fn ext_group(a: &LeftModule) -> Result<FgAbGroup, HomologyError> {
    let cx = complex(a, 0, 3, Theory::Rack, Direction::Cohomology)?;
    Ok(homology_at(&cx.map_hom(2), &cx.map_hom(3))?.group().clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZReport {
    pub z: usize,
    pub h1: InvariantsRepr,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub homology_h1: Option<InvariantsRepr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZIndependence {
    pub per_z: Vec<ZReport>,
    pub independent: bool,
}

/// `H¹` (and `H_1`, if a right module is supplied) for every choice of `z`.
pub fn z_independence_report(a: &LeftModule, right: Option<&RightModule>) -> Result<ZIndependence, HomologyError> {
    let per_z: Vec<ZReport> = (0..a.order())
        .into_par_iter()
        .map(|z| {
            let h1 = first_cohomology(a, z)?.invariants().into();
            let homology_h1 = match right {
                Some(r) => Some(
                    homology(r, 1, z, Theory::Rack)?.degree(1).expect("degree 1 computed").to_owned(),
                )
                .map(|i| (&i).into()),
                None => None,
            };
            Ok(ZReport { z, h1, homology_h1 })
        })
        .collect::<Result<_, HomologyError>>()?;
    let independent = per_z.windows(2).all(|w| w[0].h1 == w[1].h1 && w[0].homology_h1 == w[1].homology_h1);
    Ok(ZIndependence { per_z, independent })
}
