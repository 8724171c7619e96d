//! Domination variants and their feasibility conditions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which flavour of domination is being asked for, with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum DominationSpec {
    /// Every vertex outside X has a neighbour in X.
    Classical,
    /// Every vertex outside X has at least k neighbours in X.
    KDominating { k: u32 },
    /// |N[v] ∩ X| ≥ k for every v.
    KTuple { k: u32 },
    /// |N(v) ∩ X| ≥ k for every v.
    TotalK { k: u32 },
    /// {k}-dominating function: values in 0..=k with closed sums ≥ k.
    BraceK { k: u32 },
    /// (k,l)-domination: non-members see k of X in N[v], members see l.
    Parametric { k: u32, l: u32 },
    /// s-dominating r-function over closed neighbourhoods.
    Rs { r: Vec<u32>, s: Vec<u32> },
    /// Total s-dominating r-function over open neighbourhoods.
    TotalRs { r: Vec<u32>, s: Vec<u32> },
}

/// Per-vertex requirement of a set-type variant: a vertex outside the set needs
/// `out_req` set members in its neighbourhood, a member needs `in_req`.
/// `open` selects N(v) instead of N[v].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetRule {
    pub out_req: u32,
    pub in_req: u32,
    pub open: bool,
}

impl SetRule {
    /// The same rule phrased over closed neighbourhoods.
    pub fn closed_form(self) -> (u32, u32) {
        if self.open {
            (self.out_req, self.in_req + 1)
        } else {
            (self.out_req, self.in_req)
        }
    }
}

/// Caps, demands and neighbourhood kind of a function-type variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionRule {
    pub caps: Vec<u32>,
    pub demands: Vec<u32>,
    pub open: bool,
}

impl DominationSpec {
    pub fn is_set_type(&self) -> bool {
        !self.is_function_type()
    }

    pub fn is_function_type(&self) -> bool {
        matches!(self, Self::BraceK { .. } | Self::Rs { .. } | Self::TotalRs { .. })
    }

    pub fn set_rule(&self) -> Option<SetRule> {
        let rule = |out_req, in_req, open| Some(SetRule { out_req, in_req, open });
        match *self {
            Self::Classical => rule(1, 0, false),
            Self::KDominating { k } => rule(k, 0, false),
            Self::KTuple { k } => rule(k, k, false),
            Self::TotalK { k } => rule(k, k, true),
            Self::Parametric { k, l } => rule(k, l, false),
            _ => None,
        }
    }

    /// The (k, l) pair of the parametric variant equivalent to this set-type spec.
    pub fn parametric_equivalent(&self) -> Option<(u32, u32)> {
        match *self {
            Self::Classical => Some((1, 1)),
            Self::KDominating { k } => Some((k, 1)),
            Self::KTuple { k } => Some((k, k)),
            Self::TotalK { k } => Some((k, k + 1)),
            Self::Parametric { k, l } => Some((k, l)),
            _ => None,
        }
    }

    pub fn function_rule(&self, n: usize) -> Option<FunctionRule> {
        match self {
            Self::BraceK { k } => Some(FunctionRule { caps: vec![*k; n], demands: vec![*k; n], open: false }),
            Self::Rs { r, s } => Some(FunctionRule { caps: r.clone(), demands: s.clone(), open: false }),
            Self::TotalRs { r, s } => Some(FunctionRule { caps: r.clone(), demands: s.clone(), open: true }),
            _ => None,
        }
    }

    /// Checks parameter sanity and that at least one witness exists on `g`.
    pub fn check_feasible(&self, g: &Graph) -> Result<()> {
        let delta = g.min_degree();
        let positive = |name: &str, v: u32| {
            if v == 0 {
                Err(Error::InvalidSpec(format!("{name} must be at least 1")))
            } else {
                Ok(())
            }
        };
        match self {
            Self::Classical => Ok(()),
            Self::KDominating { k } | Self::BraceK { k } => positive("k", *k),
            Self::KTuple { k } => {
                positive("k", *k)?;
                if delta + 1 < *k as usize {
                    return Err(Error::InfeasibleSpec(format!(
                        "k-tuple domination needs δ ≥ k−1, got δ={delta}, k={k}"
                    )));
                }
                Ok(())
            }
            Self::TotalK { k } => {
                positive("k", *k)?;
                if delta < *k as usize {
                    return Err(Error::InfeasibleSpec(format!("total k-domination needs δ ≥ k, got δ={delta}, k={k}")));
                }
                Ok(())
            }
            Self::Parametric { k, l } => {
                positive("k", *k)?;
                positive("l", *l)?;
                // V(G) is the only candidate that must work; members need l inside N[v].
                if delta + 1 < *l as usize {
                    return Err(Error::InfeasibleSpec(format!("(k,l)-domination needs δ ≥ l−1, got δ={delta}, l={l}")));
                }
                Ok(())
            }
            Self::Rs { r, s } | Self::TotalRs { r, s } => {
                let open = matches!(self, Self::TotalRs { .. });
                if r.len() != g.n() || s.len() != g.n() {
                    return Err(Error::InvalidSpec(format!(
                        "r and s must have length n={}, got {} and {}",
                        g.n(),
                        r.len(),
                        s.len()
                    )));
                }
                for v in g.vertices() {
                    let own = if open { 0 } else { r[v] as u64 };
                    let capacity: u64 = own + g.neighbors(v).iter().map(|&u| r[u] as u64).sum::<u64>();
                    if capacity < s[v] as u64 {
                        return Err(Error::InfeasibleSpec(format!(
                            "vertex {v}: neighbourhood capacity {capacity} below demand {}",
                            s[v]
                        )));
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for DominationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Classical => write!(f, "classical"),
            Self::KDominating { k } => write!(f, "kdom:{k}"),
            Self::KTuple { k } => write!(f, "ktuple:{k}"),
            Self::TotalK { k } => write!(f, "totalk:{k}"),
            Self::BraceK { k } => write!(f, "bracek:{k}"),
            Self::Parametric { k, l } => write!(f, "param:{k},{l}"),
            Self::Rs { .. } => write!(f, "rs"),
            Self::TotalRs { .. } => write!(f, "totalrs"),
        }
    }
}

/// Parses the compact forms `classical`, `kdom:K`, `ktuple:K`, `totalk:K`,
/// `bracek:K` and `param:K,L`. The vector-valued variants are built directly.
impl FromStr for DominationSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("cannot parse specification `{text}`"));
        let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
        let (head, arg) = match text.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (text, None),
        };
        let spec = match (head, arg) {
            ("classical", None) => Self::Classical,
            ("kdom", Some(a)) => Self::KDominating { k: num(a)? },
            ("ktuple", Some(a)) => Self::KTuple { k: num(a)? },
            ("totalk", Some(a)) => Self::TotalK { k: num(a)? },
            ("bracek", Some(a)) => Self::BraceK { k: num(a)? },
            ("param", Some(a)) => {
                let (k, l) = a.split_once(',').ok_or_else(bad)?;
                Self::Parametric { k: num(k)?, l: num(l)? }
            }
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}
