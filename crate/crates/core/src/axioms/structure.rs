//! Generic Lie-bialgebra law checker for finite-dimensional structure
//! constants over exact rationals.
//!
//! Tables are given explicitly for every ordered basis pair; nothing is
//! filled in by symmetry, so antisymmetry of the bracket table is itself a
//! checkable law.  By multilinearity it suffices to evaluate every law on
//! basis tuples.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::Error;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// `n / d` as an exact rational.
pub fn ratio(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Structure constants of a candidate Lie bialgebra on a named basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    names: Vec<String>,
    /// `bracket[i * dim + j][m]` = coefficient of `e_m` in `[e_i, e_j]`.
    bracket: Vec<Vec<Coeff>>,
    /// `cobracket[i][j * dim + k]` = coefficient of `e_j (x) e_k` in
    /// `delta(e_i)`.
    cobracket: Vec<Vec<Coeff>>,
}

/// Incremental table builder; [`Builder::finish`] demands total tables.
pub struct Builder {
    names: Vec<String>,
    bracket: Vec<Option<Vec<Coeff>>>,
    cobracket: Vec<Option<Vec<Coeff>>>,
}

impl StructureConstants {
    pub fn builder(names: &[&str]) -> Builder {
        let dim = names.len();
        Builder {
            names: names.iter().map(|s| s.to_string()).collect(),
            bracket: alloc::vec![None; dim * dim],
            cobracket: alloc::vec![None; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn bracket_of(&self, i: usize, j: usize) -> &[Coeff] {
        &self.bracket[i * self.dim() + j]
    }

    fn cobracket_of(&self, i: usize) -> &[Coeff] {
        &self.cobracket[i]
    }
}

impl Builder {
    fn index(&self, name: &str) -> usize {
        self.names
            .iter()
            .position(|n| n == name)
            .unwrap_or_else(|| panic!("unknown basis name {name:?}"))
    }

    /// Sets `[a, b]` to the given combination of basis elements.
    pub fn bracket(&mut self, a: &str, b: &str, terms: &[(&str, Coeff)]) -> &mut Self {
        let dim = self.names.len();
        let (i, j) = (self.index(a), self.index(b));
        let mut v = alloc::vec![Coeff::zero(); dim];
        for (name, c) in terms {
            let m = self.index(name);
            v[m] += c.clone();
        }
        self.bracket[i * dim + j] = Some(v);
        self
    }

    /// Sets `delta(a)` to the given combination of basis tensors.
    pub fn cobracket(&mut self, a: &str, terms: &[(&str, &str, Coeff)]) -> &mut Self {
        let dim = self.names.len();
        let i = self.index(a);
        let mut v = alloc::vec![Coeff::zero(); dim * dim];
        for (left, right, c) in terms {
            let (j, k) = (self.index(left), self.index(right));
            v[j * dim + k] += c.clone();
        }
        self.cobracket[i] = Some(v);
        self
    }

    /// Errors with [`Error::IncompleteTable`] unless every ordered bracket
    /// pair and every cobracket row has been set.
    pub fn finish(&mut self) -> Result<StructureConstants, Error> {
        let missing = self.bracket.iter().filter(|e| e.is_none()).count()
            + self.cobracket.iter().filter(|e| e.is_none()).count();
        if missing > 0 {
            return Err(Error::IncompleteTable { missing });
        }
        Ok(StructureConstants {
            names: self.names.clone(),
            bracket: self.bracket.iter().map(|e| e.clone().unwrap()).collect(),
            cobracket: self.cobracket.iter().map(|e| e.clone().unwrap()).collect(),
        })
    }
}

/// The individual laws the checker can evaluate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ScLaw {
    Antisymmetry,
    Jacobi,
    Coskew,
    CoJacobi,
    Compatibility,
}

impl ScLaw {
    pub const ALL: [ScLaw; 5] = [
        ScLaw::Antisymmetry,
        ScLaw::Jacobi,
        ScLaw::Coskew,
        ScLaw::CoJacobi,
        ScLaw::Compatibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScLaw::Antisymmetry => "antisymmetry",
            ScLaw::Jacobi => "jacobi",
            ScLaw::Coskew => "coskew",
            ScLaw::CoJacobi => "co-jacobi",
            ScLaw::Compatibility => "compatibility",
        }
    }
}

/// Outcome of one structure-constant law: holds exactly when the residual
/// (a combination of labelled basis monomials) is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScReport {
    pub law: ScLaw,
    pub holds: bool,
    pub witness: String,
    pub residual: BTreeMap<String, Coeff>,
}

impl ScReport {
    fn from_residual(law: ScLaw, witness: String, residual: BTreeMap<String, Coeff>) -> Self {
        ScReport { law, holds: residual.is_empty(), witness, residual }
    }
}

fn record(map: &mut BTreeMap<String, Coeff>, label: String, value: Coeff) {
    if !value.is_zero() {
        map.insert(label, value);
    }
}

/// Verifies the requested laws on all basis tuples, returning one report per
/// law with the first failing tuple as witness.
pub fn check_structure_constants(sc: &StructureConstants, laws: &[ScLaw]) -> Vec<ScReport> {
    laws.iter().map(|&law| check_one(sc, law)).collect()
}

fn check_one(sc: &StructureConstants, law: ScLaw) -> ScReport {
    let d = sc.dim();
    let names = sc.names();
    match law {
        ScLaw::Antisymmetry => {
            for i in 0..d {
                for j in 0..d {
                    let mut residual = BTreeMap::new();
                    for m in 0..d {
                        let v = sc.bracket_of(i, j)[m].clone() + sc.bracket_of(j, i)[m].clone();
                        record(&mut residual, names[m].clone(), v);
                    }
                    if !residual.is_empty() {
                        let witness = alloc::format!("[{}, {}]", names[i], names[j]);
                        return ScReport::from_residual(law, witness, residual);
                    }
                }
            }
            ScReport::from_residual(law, String::from("all pairs"), BTreeMap::new())
        }
        ScLaw::Jacobi => {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        let mut residual = BTreeMap::new();
                        for m in 0..d {
                            let mut v = Coeff::zero();
                            for t in 0..d {
                                v += sc.bracket_of(j, k)[t].clone()
                                    * sc.bracket_of(i, t)[m].clone();
                                v += sc.bracket_of(k, i)[t].clone()
                                    * sc.bracket_of(j, t)[m].clone();
                                v += sc.bracket_of(i, j)[t].clone()
                                    * sc.bracket_of(k, t)[m].clone();
                            }
                            record(&mut residual, names[m].clone(), v);
                        }
                        if !residual.is_empty() {
                            let witness = alloc::format!(
                                "jacobi({}, {}, {})",
                                names[i], names[j], names[k]
                            );
                            return ScReport::from_residual(law, witness, residual);
                        }
                    }
                }
            }
            ScReport::from_residual(law, String::from("all triples"), BTreeMap::new())
        }
        ScLaw::Coskew => {
            for i in 0..d {
                let mut residual = BTreeMap::new();
                for j in 0..d {
                    for k in 0..d {
                        let v = sc.cobracket_of(i)[j * d + k].clone()
                            + sc.cobracket_of(i)[k * d + j].clone();
                        record(
                            &mut residual,
                            alloc::format!("{} | {}", names[j], names[k]),
                            v,
                        );
                    }
                }
                if !residual.is_empty() {
                    let witness = alloc::format!("delta({})", names[i]);
                    return ScReport::from_residual(law, witness, residual);
                }
            }
            ScReport::from_residual(law, String::from("all generators"), BTreeMap::new())
        }
        ScLaw::CoJacobi => {
            for i in 0..d {
                // T[a][b][c] = sum_k delta_i[a][k] * delta_k[b][c]
                let mut t = alloc::vec![Coeff::zero(); d * d * d];
                for a in 0..d {
                    for k in 0..d {
                        let left = sc.cobracket_of(i)[a * d + k].clone();
                        if left.is_zero() {
                            continue;
                        }
                        for b in 0..d {
                            for c in 0..d {
                                t[(a * d + b) * d + c] +=
                                    left.clone() * sc.cobracket_of(k)[b * d + c].clone();
                            }
                        }
                    }
                }
                let mut residual = BTreeMap::new();
                for a in 0..d {
                    for b in 0..d {
                        for c in 0..d {
                            // (id + e + e^2) with e(x (x) y (x) z) = z (x) x (x) y
                            let v = t[(a * d + b) * d + c].clone()
                                + t[(b * d + c) * d + a].clone()
                                + t[(c * d + a) * d + b].clone();
                            record(
                                &mut residual,
                                alloc::format!(
                                    "{} | {} | {}",
                                    names[a], names[b], names[c]
                                ),
                                v,
                            );
                        }
                    }
                }
                if !residual.is_empty() {
                    let witness = alloc::format!("co-jacobi({})", names[i]);
                    return ScReport::from_residual(law, witness, residual);
                }
            }
            ScReport::from_residual(law, String::from("all generators"), BTreeMap::new())
        }
        ScLaw::Compatibility => {
            for i in 0..d {
                for j in 0..d {
                    let mut residual = BTreeMap::new();
                    for a in 0..d {
                        for b in 0..d {
                            let mut v = Coeff::zero();
                            // delta([e_i, e_j])
                            for m in 0..d {
                                v += sc.bracket_of(i, j)[m].clone()
                                    * sc.cobracket_of(m)[a * d + b].clone();
                            }
                            // - e_i . delta(e_j) + e_j . delta(e_i)
                            v -= action_coeff(sc, i, j, a, b);
                            v += action_coeff(sc, j, i, a, b);
                            record(
                                &mut residual,
                                alloc::format!("{} | {}", names[a], names[b]),
                                v,
                            );
                        }
                    }
                    if !residual.is_empty() {
                        let witness =
                            alloc::format!("delta([{}, {}])", names[i], names[j]);
                        return ScReport::from_residual(law, witness, residual);
                    }
                }
            }
            ScReport::from_residual(law, String::from("all pairs"), BTreeMap::new())
        }
    }
}

/// Coefficient of `e_a (x) e_b` in `e_x . delta(e_y)` where the action is
/// `x . (y (x) z) = [x,y] (x) z + y (x) [x,z]`.
fn action_coeff(sc: &StructureConstants, x: usize, y: usize, a: usize, b: usize) -> Coeff {
    let d = sc.dim();
    let mut v = Coeff::zero();
    for p in 0..d {
        // [e_x, e_p] (x) e_b with delta(e_y) supported on (p, b)
        v += sc.cobracket_of(y)[p * d + b].clone() * sc.bracket_of(x, p)[a].clone();
        // e_a (x) [e_x, e_p] with delta(e_y) supported on (a, p)
        v += sc.cobracket_of(y)[a * d + p].clone() * sc.bracket_of(x, p)[b].clone();
    }
    v
}

/// The two-dimensional bialgebra with `[H, X] = 2X` and
/// `delta(X) = (X (x) H - H (x) X) / 2`.
pub fn two_dim_fixture() -> StructureConstants {
    let half = || ratio(1, 2);
    StructureConstants::builder(&["H", "X"])
        .bracket("H", "H", &[])
        .bracket("H", "X", &[("X", ratio(2, 1))])
        .bracket("X", "H", &[("X", ratio(-2, 1))])
        .bracket("X", "X", &[])
        .cobracket("H", &[])
        .cobracket("X", &[("X", "H", half()), ("H", "X", -half())])
        .finish()
        .expect("total tables")
}

/// `sl2` with `[X+, X-] = H`, `[H, X±] = ±2 X±` and the standard cobracket.
pub fn sl2_fixture() -> StructureConstants {
    let half = || ratio(1, 2);
    StructureConstants::builder(&["H", "X+", "X-"])
        .bracket("H", "H", &[])
        .bracket("H", "X+", &[("X+", ratio(2, 1))])
        .bracket("H", "X-", &[("X-", ratio(-2, 1))])
        .bracket("X+", "H", &[("X+", ratio(-2, 1))])
        .bracket("X+", "X+", &[])
        .bracket("X+", "X-", &[("H", ratio(1, 1))])
        .bracket("X-", "H", &[("X-", ratio(2, 1))])
        .bracket("X-", "X+", &[("H", ratio(-1, 1))])
        .bracket("X-", "X-", &[])
        .cobracket("H", &[])
        .cobracket("X+", &[("X+", "H", half()), ("H", "X+", -half())])
        .cobracket("X-", &[("X-", "H", half()), ("H", "X-", -half())])
        .finish()
        .expect("total tables")
}

/// The dual of `sl2`: `[Psi±, Phi] = Psi±/2`, `[Psi+, Psi-] = 0`,
/// `delta(Psi±) = ±2 (Phi (x) Psi± - Psi± (x) Phi)` and
/// `delta(Phi) = Psi+ (x) Psi- - Psi- (x) Psi+`.
pub fn sl2_dual_fixture() -> StructureConstants {
    let half = || ratio(1, 2);
    let two = || ratio(2, 1);
    StructureConstants::builder(&["Phi", "Psi+", "Psi-"])
        .bracket("Phi", "Phi", &[])
        .bracket("Phi", "Psi+", &[("Psi+", -half())])
        .bracket("Phi", "Psi-", &[("Psi-", -half())])
        .bracket("Psi+", "Phi", &[("Psi+", half())])
        .bracket("Psi+", "Psi+", &[])
        .bracket("Psi+", "Psi-", &[])
        .bracket("Psi-", "Phi", &[("Psi-", half())])
        .bracket("Psi-", "Psi+", &[])
        .bracket("Psi-", "Psi-", &[])
        .cobracket("Phi", &[("Psi+", "Psi-", ratio(1, 1)), ("Psi-", "Psi+", ratio(-1, 1))])
        .cobracket("Psi+", &[("Phi", "Psi+", two()), ("Psi+", "Phi", -two())])
        .cobracket("Psi-", &[("Phi", "Psi-", -two()), ("Psi-", "Phi", two())])
        .finish()
        .expect("total tables")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_hold(sc: &StructureConstants) -> bool {
        check_structure_constants(sc, &ScLaw::ALL).iter().all(|r| r.holds)
    }

    #[test]
    fn fixtures_are_lie_bialgebras() {
        assert!(all_hold(&two_dim_fixture()));
        assert!(all_hold(&sl2_fixture()));
        assert!(all_hold(&sl2_dual_fixture()));
    }

    #[test]
    fn perturbed_sl2_fails_coherence() {
        // delta(H) = X+ (x) X- breaks compatibility (and coskew)
        let sc = StructureConstants::builder(&["H", "X+", "X-"])
            .bracket("H", "H", &[])
            .bracket("H", "X+", &[("X+", ratio(2, 1))])
            .bracket("H", "X-", &[("X-", ratio(-2, 1))])
            .bracket("X+", "H", &[("X+", ratio(-2, 1))])
            .bracket("X+", "X+", &[])
            .bracket("X+", "X-", &[("H", ratio(1, 1))])
            .bracket("X-", "H", &[("X-", ratio(2, 1))])
            .bracket("X-", "X+", &[("H", ratio(-1, 1))])
            .bracket("X-", "X-", &[])
            .cobracket("H", &[("X+", "X-", ratio(1, 1))])
            .cobracket("X+", &[("X+", "H", ratio(1, 2)), ("H", "X+", ratio(-1, 2))])
            .cobracket("X-", &[("X-", "H", ratio(1, 2)), ("H", "X-", ratio(-1, 2))])
            .finish()
            .unwrap();
        let failed: Vec<ScLaw> = check_structure_constants(&sc, &ScLaw::ALL)
            .into_iter()
            .filter(|r| !r.holds)
            .map(|r| r.law)
            .collect();
        assert!(failed.contains(&ScLaw::CoJacobi) || failed.contains(&ScLaw::Compatibility));
        // algebra side is untouched
        assert!(!failed.contains(&ScLaw::Antisymmetry));
        assert!(!failed.contains(&ScLaw::Jacobi));
    }

    #[test]
    fn incomplete_tables_are_rejected() {
        let err = StructureConstants::builder(&["H", "X"])
            .bracket("H", "X", &[("X", ratio(2, 1))])
            .finish()
            .unwrap_err();
        assert!(matches!(err, Error::IncompleteTable { missing: 5 }));
    }

    #[test]
    fn reports_carry_residuals() {
        // a bracket table that is not antisymmetric
        let sc = StructureConstants::builder(&["H", "X"])
            .bracket("H", "H", &[])
            .bracket("H", "X", &[("X", ratio(2, 1))])
            .bracket("X", "H", &[("X", ratio(2, 1))])
            .bracket("X", "X", &[])
            .cobracket("H", &[])
            .cobracket("X", &[])
            .finish()
            .unwrap();
        let reports = check_structure_constants(&sc, &[ScLaw::Antisymmetry]);
        assert!(!reports[0].holds);
        assert_eq!(reports[0].residual.get("X"), Some(&ratio(4, 1)));
    }
}
