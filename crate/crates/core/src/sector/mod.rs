//! G-spaces built from a small factor library, their fixed-point sets,
//! Künneth summands, and the ranks of the (twisted) decomposition
//! components `(K*(M^{g,h}) ⊗ ℚ(ζ_{|h|}))^G`.

mod kmodel;

use std::fmt;

use thiserror::Error;

use crate::cyclotomic::{euler_phi, twisted_invariants_rank, CycloError};
use crate::f2::{F2Error, F2Polynomial};
use crate::group::{Character, FiniteAbelianGroup, GroupElement, GroupError};

pub use kmodel::{BasisWord, FactorBasis, FactorKind, KClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectorError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    F2(#[from] F2Error),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
    #[error("twisting class {0} is not integral")]
    NotIntegral(String),
    #[error("a nonzero twisting class in {vars} variables needs the group (Z/2)^{vars}, got {group}")]
    TwistGroup { vars: usize, group: String },
    #[error("torus action {0} must have order 1 or 2")]
    TorusAction(String),
    #[error("cannot parse space {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// One factor of a product G-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorSpace {
    /// `T² = ℂ/ℤ²` with `G` acting by `z ↦ χ(g)z`, `χ` of order ≤ 2.
    TwoTorus(Character),
    /// The four fixed points of the sign action on `T²`.
    FourPoints,
    Point,
}

impl FactorSpace {
    pub fn kind(&self) -> FactorKind {
        match self {
            FactorSpace::TwoTorus(_) => FactorKind::TwoTorus,
            FactorSpace::FourPoints => FactorKind::FourPoints,
            FactorSpace::Point => FactorKind::Point,
        }
    }

    /// Character by which `G` acts on odd K-theory (trivial if there is none).
    fn odd_character(&self, group: &FiniteAbelianGroup) -> Character {
        match self {
            FactorSpace::TwoTorus(chi) => chi.clone(),
            _ => group.trivial_character(),
        }
    }
}

/// A finite product of library factors with a `G`-action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGSpace {
    group: FiniteAbelianGroup,
    factors: Vec<FactorSpace>,
}

impl ProductGSpace {
    pub fn new(group: FiniteAbelianGroup, factors: Vec<FactorSpace>) -> Result<Self, SectorError> {
        for f in &factors {
            if let FactorSpace::TwoTorus(chi) = f {
                if chi.group() != group {
                    return Err(GroupError::Mismatch {
                        element: chi.to_string(),
                        group: group.to_string(),
                    }
                    .into());
                }
                if chi.order() > 2 {
                    return Err(SectorError::TorusAction(chi.to_string()));
                }
            }
        }
        Ok(ProductGSpace { group, factors })
    }

    /// `T⁶ = T² × T² × T²` with `(ℤ/2)³` acting by sign in each coordinate.
    pub fn t6() -> Self {
        let g = FiniteAbelianGroup::elementary_2(3);
        let factors = (0..3)
            .map(|i| {
                let mut e = [0; 3];
                e[i] = 1;
                FactorSpace::TwoTorus(g.character(&e).expect("valid"))
            })
            .collect();
        ProductGSpace { group: g, factors }
    }

    /// A point with trivial action; it has no factors.
    pub fn point(group: FiniteAbelianGroup) -> Self {
        ProductGSpace {
            group,
            factors: Vec::new(),
        }
    }

    /// Parses `t6`, `point`, or a product such as `T2[x1] * T2[x2] * 4*`.
    /// A torus action is written `x1`, `x1+x3`, `1` (trivial), or as an
    /// exponent vector `0,1,1`.
    pub fn parse(text: &str, group: &FiniteAbelianGroup) -> Result<Self, SectorError> {
        let fail = |reason: String| SectorError::Parse {
            text: text.to_string(),
            reason,
        };
        match text.trim() {
            "t6" | "T6" => {
                let t6 = Self::t6();
                if &t6.group != group {
                    return Err(fail(format!("t6 is a (Z/2)^3-space, not a {group}-space")));
                }
                return Ok(t6);
            }
            "point" | "pt" => return Ok(Self::point(group.clone())),
            _ => {}
        }
        let normalized = text.replace("4*", "P4");
        let mut factors = Vec::new();
        for tok in normalized.split(['*', '×']).map(str::trim) {
            let f = match tok {
                "P4" => FactorSpace::FourPoints,
                "pt" => FactorSpace::Point,
                _ => {
                    let inner = tok
                        .strip_prefix("T2[")
                        .or_else(|| tok.strip_prefix("T²["))
                        .and_then(|s| s.strip_suffix(']'))
                        .ok_or_else(|| fail(format!("unknown factor {tok:?}")))?;
                    FactorSpace::TwoTorus(parse_character(inner, group).map_err(fail)?)
                }
            };
            factors.push(f);
        }
        Self::new(group.clone(), factors)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn factors(&self) -> &[FactorSpace] {
        &self.factors
    }

    pub fn kinds(&self) -> Vec<FactorKind> {
        self.factors.iter().map(FactorSpace::kind).collect()
    }

    /// `M^S`: a torus survives iff every element of `S` acts trivially on
    /// it, otherwise it collapses to its four fixed points.
    pub fn fixed_set(&self, s: &[GroupElement]) -> Result<Self, SectorError> {
        for g in s {
            self.group.check(g)?;
        }
        let mut factors = Vec::with_capacity(self.factors.len());
        for f in &self.factors {
            factors.push(match f {
                FactorSpace::TwoTorus(chi) => {
                    let mut fixed = true;
                    for g in s {
                        fixed &= chi.eval(g)?.is_one();
                    }
                    if fixed {
                        f.clone()
                    } else {
                        FactorSpace::FourPoints
                    }
                }
                other => other.clone(),
            });
        }
        Ok(ProductGSpace {
            group: self.group.clone(),
            factors,
        })
    }

    /// All products of nonzero graded pieces, in factor order with `K⁰`
    /// before `K¹`.
    pub fn kunneth_summands(&self) -> Vec<KunnethSummand> {
        let mut out = vec![KunnethSummand {
            pieces: Vec::new(),
            character: self.group.trivial_character(),
            rank: 1,
            grading: 0,
        }];
        for f in &self.factors {
            let kind = f.kind();
            let pieces: Vec<(u8, Character, u64)> = match kind {
                FactorKind::TwoTorus => vec![
                    (0, self.group.trivial_character(), 2),
                    (1, f.odd_character(&self.group), 2),
                ],
                FactorKind::FourPoints => vec![(0, self.group.trivial_character(), 4)],
                FactorKind::Point => vec![(0, self.group.trivial_character(), 1)],
            };
            out = out
                .iter()
                .flat_map(|s| {
                    pieces.iter().map(move |(deg, chi, rank)| {
                        let mut p = s.pieces.clone();
                        p.push((kind, *deg));
                        KunnethSummand {
                            pieces: p,
                            character: s.character.mul(chi).expect("same group"),
                            rank: s.rank * rank,
                            grading: (s.grading + deg) % 2,
                        }
                    })
                })
                .collect();
        }
        out
    }

    /// Character of `G` on a basis word of this space's K-theory.
    pub fn word_character(&self, word: &BasisWord) -> Character {
        let mut chi = self.group.trivial_character();
        for (f, b) in self.factors.iter().zip(word.factors()) {
            if b.degree() == 1 {
                chi = chi.mul(&f.odd_character(&self.group)).expect("same group");
            }
        }
        chi
    }

    /// Every basis word of `K*` of this space.
    pub fn basis_words(&self) -> Vec<BasisWord> {
        let mut words = vec![Vec::new()];
        for kind in self.kinds() {
            words = words
                .into_iter()
                .flat_map(|w| {
                    kind.basis().into_iter().map(move |b| {
                        let mut w = w.clone();
                        w.push(b);
                        w
                    })
                })
                .collect();
        }
        words.into_iter().map(BasisWord::new).collect()
    }
}

/// `4* × T² × T²`, or `pt` for the bare point.
impl fmt::Display for ProductGSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "pt");
        }
        let parts: Vec<&str> = self.factors.iter().map(|x| x.kind().symbol()).collect();
        write!(f, "{}", parts.join(" × "))
    }
}

fn parse_character(text: &str, group: &FiniteAbelianGroup) -> Result<Character, String> {
    let text = text.trim();
    if text.contains(',') || text.chars().all(|c| c.is_ascii_digit()) && text != "1" {
        let exps: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse::<i64>()).collect();
        let exps = exps.map_err(|e| e.to_string())?;
        return group.character(&exps).map_err(|e| e.to_string());
    }
    let mut exps = vec![0i64; group.rank()];
    if text != "1" {
        for term in text.split('+').map(str::trim) {
            let i = term
                .strip_prefix('x')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| (1..=group.rank()).contains(&i))
                .ok_or_else(|| format!("bad character term {term:?}"))?;
            exps[i - 1] += 1;
        }
    }
    group.character(&exps).map_err(|e| e.to_string())
}

/// A graded piece `K^{d₁}(X₁) ⊗ … ⊗ K^{dₙ}(Xₙ)` of a product space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KunnethSummand {
    pub pieces: Vec<(FactorKind, u8)>,
    pub character: Character,
    pub rank: u64,
    pub grading: u8,
}

impl fmt::Display for KunnethSummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pieces.is_empty() {
            return write!(f, "K⁰(pt)");
        }
        let parts: Vec<String> = self
            .pieces
            .iter()
            .map(|(k, d)| format!("K{}({})", if *d == 0 { "⁰" } else { "¹" }, k.symbol()))
            .collect();
        write!(f, "{}", parts.join(" ⊗ "))
    }
}

fn check_alpha(alpha: &F2Polynomial) -> Result<(), SectorError> {
    if alpha.is_integral() {
        Ok(())
    } else {
        Err(SectorError::NotIntegral(alpha.to_string()))
    }
}

/// `τ_h τ_g α`; for `α = 0` this is zero in any group.
pub fn double_transgression(
    group: &FiniteAbelianGroup,
    alpha: &F2Polynomial,
    g: &GroupElement,
    h: &GroupElement,
) -> Result<F2Polynomial, SectorError> {
    group.check(g)?;
    group.check(h)?;
    if alpha.is_zero() {
        return Ok(alpha.clone());
    }
    if !group.is_elementary_2() || group.rank() != alpha.num_vars() {
        return Err(SectorError::TwistGroup {
            vars: alpha.num_vars(),
            group: group.to_string(),
        });
    }
    Ok(alpha.double_transgress(g, h)?)
}

/// Character by which `G` acts on the coefficient line of the `(g, h)`
/// component.
pub fn twist_character(
    group: &FiniteAbelianGroup,
    alpha: &F2Polynomial,
    g: &GroupElement,
    h: &GroupElement,
) -> Result<Character, SectorError> {
    let d = double_transgression(group, alpha, g, h)?;
    if d.is_zero() {
        return Ok(group.trivial_character());
    }
    Ok(d.character_of_square_class()?)
}

/// Rational rank of `(K*(M^{g,h}) ⊗ ℚ(ζ_{|h|})_{α_g})^G`.
pub fn component_rank(
    space: &ProductGSpace,
    g: &GroupElement,
    h: &GroupElement,
    alpha: &F2Polynomial,
) -> Result<u64, SectorError> {
    check_alpha(alpha)?;
    let twist = twist_character(&space.group, alpha, g, h)?;
    let fixed = space.fixed_set(&[g.clone(), h.clone()])?;
    let summands: Vec<(Character, u64)> = fixed
        .kunneth_summands()
        .into_iter()
        .map(|s| (s.character, s.rank))
        .collect();
    Ok(euler_phi(h.order()) as u64 * twisted_invariants_rank(&twist, &summands)?)
}

/// Sum of component ranks over the cyclic transversal.
pub fn sector_rank(space: &ProductGSpace, g: &GroupElement, alpha: &F2Polynomial) -> Result<u64, SectorError> {
    space
        .group
        .cyclic_transversal()
        .iter()
        .map(|h| component_rank(space, g, h, alpha))
        .sum()
}

/// Rank of the twisted stringy K-theory: the sum over all sectors.
pub fn total_rank(space: &ProductGSpace, alpha: &F2Polynomial) -> Result<u64, SectorError> {
    space.group.elements().iter().map(|g| sector_rank(space, g, alpha)).sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankRow {
    pub h: GroupElement,
    pub transgression: F2Polynomial,
    pub fixed_set: String,
    pub invariants: String,
    pub rank: u64,
}

/// The decomposition of one sector, one row per transversal element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankTable {
    pub sector: GroupElement,
    pub rows: Vec<RankRow>,
}

impl RankTable {
    pub fn total(&self) -> u64 {
        self.rows.iter().map(|r| r.rank).sum()
    }
}

pub fn rank_table(space: &ProductGSpace, g: &GroupElement, alpha: &F2Polynomial) -> Result<RankTable, SectorError> {
    check_alpha(alpha)?;
    let mut rows = Vec::new();
    for h in space.group.cyclic_transversal() {
        let transgression = double_transgression(&space.group, alpha, g, &h)?;
        let twist = twist_character(&space.group, alpha, g, &h)?;
        let fixed = space.fixed_set(&[g.clone(), h.clone()])?;
        let mut invariant = Vec::new();
        for s in fixed.kunneth_summands() {
            if s.character.mul(&twist)?.is_trivial() {
                invariant.push(s.to_string());
            }
        }
        let invariants = if invariant.is_empty() {
            "0".to_string()
        } else {
            invariant.join(" ⊕ ")
        };
        rows.push(RankRow {
            rank: component_rank(space, g, &h, alpha)?,
            h,
            transgression,
            fixed_set: fixed.to_string(),
            invariants,
        });
    }
    Ok(RankTable {
        sector: g.clone(),
        rows,
    })
}
