//! Decomposition of a specialised multiplicity-free module by splitting
//! with random commutant elements, and irreducibility certificates by
//! Norton's criterion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{int, rational_roots, Rational};
use crate::corpus::MatrixRep;
use crate::field::Scalar;
use crate::matrix::{Echelon, Matrix};

use super::linear::{commutant_basis, spin_echelon, SubspaceBasis};
use super::{AnalysisError, CoxeterGraphD};

const SPLIT_ATTEMPTS: usize = 32;

/// `5/3`: small height, not a root of unity, and no pole of the corpus.
pub fn default_r0() -> Rational {
    Rational::new(5.into(), 3.into())
}

/// Why a constituent is (or is not) known to be irreducible.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    OneDimensional,
    /// `theta = sum a_i (g_i - eps_i)` over the listed commuting nodes has
    /// a one-dimensional kernel, and its kernel vectors for `theta` and
    /// `theta^T` both spin to the whole space.
    Norton {
        nodes: Vec<usize>,
        eigenvalues: Vec<String>,
    },
    /// Endomorphisms are scalars; irreducible when the module is semisimple.
    ScalarEndomorphisms,
    Reducible {
        witness_dim: usize,
    },
    Uncertified,
}

impl Certificate {
    pub fn proves_irreducible(&self) -> bool {
        matches!(
            self,
            Certificate::OneDimensional
                | Certificate::Norton { .. }
                | Certificate::ScalarEndomorphisms
        )
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Constituent {
    pub basis: SubspaceBasis<Rational>,
    pub irreducible: bool,
    pub certificate: Certificate,
}

#[derive(Clone, PartialEq, Debug)]
pub struct Decomposition {
    pub r0: Rational,
    pub seed: u64,
    pub degree: usize,
    pub commutant_dim: usize,
    pub constituents: Vec<Constituent>,
}

impl Decomposition {
    pub fn dims(&self) -> Vec<usize> {
        self.constituents
            .iter()
            .map(|c| c.basis.dimension)
            .collect()
    }
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Decomposition", 5)?;
        s.serialize_field("r0", &self.r0.to_string())?;
        s.serialize_field("seed", &self.seed)?;
        s.serialize_field("degree", &self.degree)?;
        s.serialize_field("commutant_dim", &self.commutant_dim)?;
        s.serialize_field("constituents", &self.constituents)?;
        s.end()
    }
}

fn guard_point(r0: &Rational) -> Result<(), AnalysisError> {
    let one = int(1);
    if r0.is_zero() || *r0 == one || *r0 == -one {
        return Err(AnalysisError::ForbiddenPoint(r0.to_string()));
    }
    Ok(())
}

fn random_coeff(rng: &mut ChaCha8Rng) -> Rational {
    let k: i64 = rng.random_range(1..=997);
    int(if rng.random_bool(0.5) { k } else { -k })
}

/// The action on an invariant subspace, in the coordinates read off at the
/// pivot columns of its reduced echelon basis.
fn restrict_to(rep: &MatrixRep<Rational>, space: &Echelon<Rational>) -> MatrixRep<Rational> {
    let pivots = space.pivots();
    let k = space.rank();
    let matrices = rep
        .matrices()
        .iter()
        .map(|g| {
            let images: Vec<Vec<Rational>> = space.rows().iter().map(|b| g.mul_vec(b)).collect();
            debug_assert!(
                images.iter().all(|w| space.contains(w)),
                "subspace is not invariant"
            );
            Matrix::from_fn(k, k, |i, j| images[j][pivots[i]].clone())
        })
        .collect();
    MatrixRep::new(rep.name(), matrices).expect("square restricted generators")
}

/// Node sets of size at most three whose generators pairwise commute.
fn commuting_node_sets(n: usize) -> Vec<Vec<usize>> {
    let Ok(graph) = CoxeterGraphD::new(n) else {
        return (1..=n).map(|i| vec![i]).collect();
    };
    let free = |set: &[usize], j: usize| set.iter().all(|&i| !graph.is_edge(i, j));
    let mut out: Vec<Vec<usize>> = (1..=n).map(|i| vec![i]).collect();
    let mut frontier = out.clone();
    for _ in 1..3 {
        let mut next = Vec::new();
        for set in &frontier {
            for j in set[set.len() - 1] + 1..=n {
                if free(set, j) {
                    let mut s = set.clone();
                    s.push(j);
                    next.push(s);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn certify(module: &MatrixRep<Rational>, r0: &Rational, rng: &mut ChaCha8Rng) -> Certificate {
    let k = module.degree();
    if k == 1 {
        return Certificate::OneDimensional;
    }
    let eigen = [r0.clone(), -r0.recip()];
    let dual = module.transpose();
    for nodes in commuting_node_sets(module.node_count()) {
        for mask in 0..1usize << nodes.len() {
            let eps: Vec<&Rational> = (0..nodes.len()).map(|b| &eigen[(mask >> b) & 1]).collect();
            let mut theta = Matrix::<Rational>::zeros(k, k);
            for (&node, &e) in nodes.iter().zip(&eps) {
                let shifted = module.generator(node).sub(&Matrix::identity(k).scale(e));
                theta = theta.add(&shifted.scale(&random_coeff(rng)));
            }
            let kernel = theta.nullspace();
            if kernel.len() != 1 {
                continue;
            }
            let forward = spin_echelon(&kernel[0], module).expect("kernel vectors are nonzero");
            if forward.rank() < k {
                return Certificate::Reducible {
                    witness_dim: forward.rank(),
                };
            }
            let co = theta.transpose().nullspace();
            let backward = spin_echelon(&co[0], &dual).expect("kernel vectors are nonzero");
            if backward.rank() < k {
                return Certificate::Reducible {
                    witness_dim: k - backward.rank(),
                };
            }
            return Certificate::Norton {
                nodes,
                eigenvalues: eps.iter().map(ToString::to_string).collect(),
            };
        }
    }
    if commutant_basis(module).len() == 1 {
        Certificate::ScalarEndomorphisms
    } else {
        Certificate::Uncertified
    }
}

/// Eigenspaces of a random commutant element, provided they are rational,
/// cover the module and number exactly `dim C`.
fn split(
    spec: &MatrixRep<Rational>,
    commutant: &[Matrix<Rational>],
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Echelon<Rational>>, AnalysisError> {
    let d = spec.degree();
    for _ in 0..SPLIT_ATTEMPTS {
        let c = commutant.iter().fold(Matrix::zeros(d, d), |acc, b| {
            acc.add(&b.scale(&random_coeff(rng)))
        });
        let roots = rational_roots(&c.charpoly());
        if roots.len() != commutant.len() {
            continue;
        }
        let spaces: Vec<Echelon<Rational>> = roots
            .iter()
            .map(|lambda| {
                let shifted = c.sub(&Matrix::identity(d).scale(lambda));
                let mut e = Echelon::new(d);
                for v in shifted.nullspace() {
                    e.insert(v);
                }
                e
            })
            .collect();
        if spaces.iter().map(Echelon::rank).sum::<usize>() == d {
            return Ok(spaces);
        }
    }
    Err(AnalysisError::NotSplit {
        attempts: SPLIT_ATTEMPTS,
    })
}

/// Specialises at `r = r0` and splits the module into its constituents.
pub fn decompose(
    rep: &MatrixRep,
    r0: &Rational,
    seed: u64,
) -> Result<Decomposition, AnalysisError> {
    guard_point(r0)?;
    let spec = rep.specialize(r0)?;
    decompose_specialized(&spec, r0, seed)
}

pub(crate) fn decompose_specialized(
    spec: &MatrixRep<Rational>,
    r0: &Rational,
    seed: u64,
) -> Result<Decomposition, AnalysisError> {
    let d = spec.degree();
    let commutant = commutant_basis(spec);
    for (i, a) in commutant.iter().enumerate() {
        for b in &commutant[i + 1..] {
            if a.mul(b) != b.mul(a) {
                return Err(AnalysisError::NotMultiplicityFree {
                    commutant_dim: commutant.len(),
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spaces = if commutant.len() == 1 {
        let mut whole = Echelon::new(d);
        for i in 0..d {
            let mut e = vec![<Rational as Scalar>::zero(); d];
            e[i] = <Rational as Scalar>::one();
            whole.insert(e);
        }
        vec![whole]
    } else {
        split(spec, &commutant, &mut rng)?
    };
    let mut constituents: Vec<Constituent> = spaces
        .into_iter()
        .map(|space| {
            let certificate = certify(&restrict_to(spec, &space), r0, &mut rng);
            Constituent {
                irreducible: certificate.proves_irreducible(),
                certificate,
                basis: SubspaceBasis::from_echelon(space),
            }
        })
        .collect();
    constituents.sort_by(|a, b| {
        (a.basis.dimension, &a.basis.vectors).cmp(&(b.basis.dimension, &b.basis.vectors))
    });
    Ok(Decomposition {
        r0: r0.clone(),
        seed,
        degree: d,
        commutant_dim: commutant.len(),
        constituents,
    })
}

/// Every proper nonzero invariant subspace, as sums of constituents.
pub fn invariant_subspaces(
    rep: &MatrixRep,
    r0: &Rational,
) -> Result<Vec<SubspaceBasis<Rational>>, AnalysisError> {
    let dec = decompose(rep, r0, 0)?;
    if let Some(bad) = dec.constituents.iter().find(|c| !c.irreducible) {
        return Err(AnalysisError::Uncertified {
            dim: bad.basis.dimension,
        });
    }
    let d = dec.degree;
    let parts: Vec<Echelon<Rational>> = dec
        .constituents
        .iter()
        .map(|c| c.basis.echelon(d))
        .collect();
    let k = parts.len();
    let mut out: Vec<SubspaceBasis<Rational>> = (1..(1usize << k) - 1)
        .map(|mask| {
            let sum = (0..k)
                .filter(|b| mask >> b & 1 == 1)
                .fold(Echelon::new(d), |acc, b| acc.sum(&parts[b]));
            SubspaceBasis::from_echelon(sum)
        })
        .collect();
    out.sort_by(|a, b| (a.dimension, &a.vectors).cmp(&(b.dimension, &b.vectors)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{m_rep, n_rep, t_module, trivial_rep};

    #[test]
    fn splits_the_t_module() {
        let dec = decompose(&t_module(), &default_r0(), 7).unwrap();
        assert_eq!(dec.dims(), vec![3, 3]);
        assert!(dec.constituents.iter().all(|c| c.irreducible));
        assert_eq!(dec.commutant_dim, 2);
    }

    #[test]
    fn irreducible_summands() {
        for rep in [m_rep(), n_rep()] {
            let dec = decompose(&rep, &default_r0(), 1).unwrap();
            assert_eq!(dec.dims(), vec![3]);
            assert!(matches!(
                dec.constituents[0].certificate,
                Certificate::Norton { .. }
            ));
            assert!(invariant_subspaces(&rep, &default_r0()).unwrap().is_empty());
        }
    }

    #[test]
    fn rejects_repeated_constituents() {
        let t = trivial_rep(4);
        let tt = MatrixRep::direct_sum("trivial+trivial", &[&t, &t]).unwrap();
        assert_eq!(
            decompose(&tt, &default_r0(), 0),
            Err(AnalysisError::NotMultiplicityFree { commutant_dim: 4 })
        );
    }

    #[test]
    fn rejects_bad_points() {
        for r0 in [int(0), int(1), int(-1)] {
            assert!(matches!(
                decompose(&m_rep(), &r0, 0),
                Err(AnalysisError::ForbiddenPoint(_))
            ));
        }
    }

    #[test]
    fn pole_is_reported() {
        let rep = MatrixRep::new(
            "pole",
            vec![Matrix::from_rows(vec![vec!["1/(r-2)".parse().unwrap()]]); 4],
        )
        .unwrap();
        assert!(matches!(
            decompose(&rep, &int(2), 0),
            Err(AnalysisError::Arith(_))
        ));
    }

    #[test]
    fn lattice_of_t_module() {
        let subs = invariant_subspaces(&t_module(), &default_r0()).unwrap();
        assert_eq!(
            subs.iter().map(|s| s.dimension).collect::<Vec<_>>(),
            vec![3, 3]
        );
    }
}
