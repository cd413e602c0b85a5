use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Pow};
use serde::Serialize;

use super::{commuting_pairs, rho_r_of, rho_wedge, RhoValue};
use crate::caps::Caps;
use crate::error::Result;
use crate::exact::ratio_string;
use crate::group::{prime_power_exponent, FiniteGroup};

/// User-supplied values `β(r)`.
pub type BetaTable = BTreeMap<usize, u64>;

/// One side-by-side comparison `lhs ≤ rhs`, or the reason it was skipped.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Check {
    Checked { lhs: String, rhs: String, holds: bool },
    Skipped { reason: String },
}

impl Check {
    pub fn holds(&self) -> Option<bool> {
        match self {
            Check::Checked { holds, .. } => Some(*holds),
            Check::Skipped { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Ineq2Detail {
    pub p: usize,
    /// `log_p i`.
    pub n: u32,
    pub rho_wedge: u64,
    /// Twice the exponent of `p` on the left side.
    pub doubled_exponent: i64,
    /// The left side squared, exactly.
    pub lhs_squared: String,
    pub max_w_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderInequalities {
    pub order: usize,
    pub groups: Vec<String>,
    pub rho_com: u64,
    pub rho_r: Option<usize>,
    /// `β(ρ_r(i))⁻² · i² ≤ ρ_com(i)`.
    pub first: Check,
    /// `i^{(2ρ_∧(i) + 1 − log_p i)/2} · i² ≤ ρ_com(i)`.
    pub second: Check,
    /// `i² · |W|⁻¹ ≤ ρ_com(i)`, with the largest `|W|` of the order.
    pub intermediate: Check,
    pub second_detail: Option<Ineq2Detail>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalityReport {
    pub orders: Vec<OrderInequalities>,
}

impl InequalityReport {
    /// No checked inequality fails.
    pub fn all_hold(&self) -> bool {
        self.orders
            .iter()
            .flat_map(|o| [&o.first, &o.second, &o.intermediate])
            .all(|c| c.holds() != Some(false))
    }
}

fn ratio_of(n: BigInt) -> String {
    ratio_string(&Ratio::from_integer(n))
}

/// `p^e`, `e` possibly negative.
fn p_power(p: usize, e: i64) -> Ratio<BigInt> {
    let base = BigInt::from(p).pow(e.unsigned_abs());
    if e >= 0 {
        Ratio::from_integer(base)
    } else {
        Ratio::new(BigInt::one(), base)
    }
}

/// Both inequalities for every order present in the corpus. Inequality (1)
/// needs `beta`; inequality (2) needs every group of the order to satisfy
/// the class-2 elementary hypotheses.
pub fn verify_inequalities(
    corpus: &[(String, FiniteGroup)],
    beta: Option<&BetaTable>,
    caps: &Caps,
) -> Result<InequalityReport> {
    let mut by_order: BTreeMap<usize, Vec<&(String, FiniteGroup)>> = BTreeMap::new();
    for item in corpus {
        by_order.entry(item.1.order()).or_default().push(item);
    }
    let mut orders = Vec::new();
    for (&i, members) in &by_order {
        let mut groups: Vec<String> = members.iter().map(|(n, _)| n.clone()).collect();
        groups.sort();
        let rho_com = members
            .iter()
            .map(|(_, g)| commuting_pairs(g, caps).map(|s| s.pairs))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .min()
            .expect("nonempty");
        let i2 = BigInt::from(i) * BigInt::from(i);
        let rho_big = BigInt::from(rho_com);

        let (rho_r, first) = match beta {
            None => (None, Check::Skipped { reason: "no β table supplied".into() }),
            Some(table) => {
                let mut r = Some(0usize);
                let mut err = None;
                for (name, g) in members {
                    match rho_r_of(g, caps) {
                        Ok(v) => r = r.map(|x| x.max(v)),
                        Err(e) => {
                            err = Some(format!("{name}: {e}"));
                            r = None;
                            break;
                        }
                    }
                }
                match (r, err) {
                    (Some(r), _) => match table.get(&r) {
                        Some(&b) => {
                            let b2 = BigInt::from(b) * BigInt::from(b);
                            let lhs = Ratio::new(i2.clone(), b2.clone());
                            let holds = i2 <= &rho_big * &b2;
                            (Some(r), Check::Checked { lhs: ratio_string(&lhs), rhs: ratio_of(rho_big.clone()), holds })
                        }
                        None => (Some(r), Check::Skipped { reason: format!("β({r}) missing from the table") }),
                    },
                    (None, e) => (None, Check::Skipped { reason: e.unwrap_or_default() }),
                }
            }
        };

        let mut reports = Vec::new();
        let mut failure = None;
        for (name, g) in members {
            match rho_wedge(g) {
                Ok(r) => reports.push(r),
                Err(e) => {
                    failure = Some(format!("{name}: {e}"));
                    break;
                }
            }
        }
        let (second, intermediate, second_detail) = match failure {
            Some(reason) => (
                Check::Skipped { reason: reason.clone() },
                Check::Skipped { reason },
                None,
            ),
            None => {
                let p = reports[0].p;
                let n = prime_power_exponent(i, p).expect("checked by rho_wedge");
                let k = reports.iter().filter_map(|r| r.k.finite()).min();
                let max_w = reports.iter().map(|r| r.w_order).max().expect("nonempty");
                let inter_lhs = Ratio::new(i2.clone(), BigInt::from(max_w));
                let intermediate = Check::Checked {
                    lhs: ratio_string(&inter_lhs),
                    rhs: ratio_of(rho_big.clone()),
                    holds: inter_lhs <= Ratio::from_integer(rho_big.clone()),
                };
                match k {
                    None => (Check::Skipped { reason: "ρ_∧ is ∞".into() }, intermediate, None),
                    Some(k) => {
                        let n_i = n as i64;
                        // i^{(2k+1-n)/2} · i² = p^{(n(2k+1-n) + 4n)/2}
                        let e2 = n_i * (2 * k as i64 + 1 - n_i) + 4 * n_i;
                        let lhs_sq = p_power(p, e2);
                        let rhs_sq = Ratio::from_integer(&rho_big * &rho_big);
                        let lhs = if e2 % 2 == 0 {
                            ratio_string(&p_power(p, e2 / 2))
                        } else {
                            format!("sqrt({})", ratio_string(&lhs_sq))
                        };
                        let holds = lhs_sq <= rhs_sq;
                        (
                            Check::Checked { lhs, rhs: ratio_of(rho_big.clone()), holds },
                            intermediate,
                            Some(Ineq2Detail {
                                p,
                                n,
                                rho_wedge: k,
                                doubled_exponent: e2,
                                lhs_squared: ratio_string(&lhs_sq),
                                max_w_order: max_w,
                            }),
                        )
                    }
                }
            }
        };
        orders.push(OrderInequalities { order: i, groups, rho_com, rho_r, first, second, intermediate, second_detail });
    }
    Ok(InequalityReport { orders })
}

/// ρ_∧ over the groups of one order: the least `k` among them.
pub fn rho_wedge_of_order(groups: &[&FiniteGroup]) -> Result<RhoValue> {
    let mut best = RhoValue::Infinite;
    for g in groups {
        best = best.min(rho_wedge(g)?.k);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn beta_inequality_for_s3() {
        let caps = Caps::default();
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]], &caps).unwrap();
        let corpus = vec![("S3".to_string(), s3)];
        let beta: BetaTable = [(1, 2), (2, 6)].into_iter().collect();
        let r = verify_inequalities(&corpus, Some(&beta), &caps).unwrap();
        let o = &r.orders[0];
        assert_eq!(o.rho_r, Some(1));
        assert_eq!(o.first, Check::Checked { lhs: "9/1".into(), rhs: "18/1".into(), holds: true });
        assert!(o.second.holds().is_none());
        let empty = BetaTable::new();
        let r = verify_inequalities(&corpus, Some(&empty), &caps).unwrap();
        assert!(matches!(r.orders[0].first, Check::Skipped { .. }));
    }

    #[test]
    fn abelian_intermediate_is_equality() {
        let caps = Caps::default();
        let corpus = vec![("Z3".to_string(), FiniteGroup::cyclic(3))];
        let r = verify_inequalities(&corpus, None, &caps).unwrap();
        assert_eq!(r.orders[0].intermediate, Check::Checked { lhs: "9/1".into(), rhs: "9/1".into(), holds: true });
        assert!(r.all_hold());
    }
}
