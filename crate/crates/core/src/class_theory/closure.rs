//! Closure of a finite catalog under the class operators.

use std::fmt;
use std::str::FromStr;

use super::catalog::Catalog;
use super::Guards;
use crate::algebra::{
    direct_product, enumerate_congruences, filtered_product, find_isomorphism, invariant_submodules, quotient,
    subrepresentation, Filter, Representation,
};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureOp {
    /// Subrepresentations `(V0, H)`.
    S,
    /// Homomorphic images, as quotients by congruences.
    H,
    /// Products of two members.
    Cfin,
    /// Filtered products of two members by principal ultrafilters.
    Cup,
}

impl FromStr for ClosureOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "S" => Ok(ClosureOp::S),
            "H" => Ok(ClosureOp::H),
            "Cfin" => Ok(ClosureOp::Cfin),
            "Cup" => Ok(ClosureOp::Cup),
            other => Err(format!("unknown operator `{other}` (known: S, H, Cfin, Cup)")),
        }
    }
}

impl fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureOp::S => "S",
            ClosureOp::H => "H",
            ClosureOp::Cfin => "Cfin",
            ClosureOp::Cup => "Cup",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureReport {
    pub op: ClosureOp,
    /// Number of representations the operator produced.
    pub produced: usize,
    /// Descriptions of results not isomorphic to any member.
    pub outside: Vec<String>,
    pub note: Option<String>,
}

impl ClosureReport {
    pub fn closed(&self) -> bool {
        self.outside.is_empty()
    }
}

/// Isomorphic to some member; sizes are compared before any search.
fn in_catalog(rep: &Representation, c: &Catalog, guards: &Guards) -> Result<bool> {
    for (_, member) in c.iter() {
        if find_isomorphism(rep, member, guards.iso_side)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn describe(rep: &Representation) -> String {
    format!(
        "|V|={} orders={:?} |G|={} kernel={:?}",
        rep.module().size(),
        rep.module().cyclic_orders(),
        rep.group().order(),
        rep.kernel()
    )
}

fn apply(c: &Catalog, op: ClosureOp, guards: &Guards) -> Result<Vec<(String, Representation)>> {
    let mut out = Vec::new();
    match op {
        ClosureOp::S => {
            for (name, rep) in c.iter() {
                for h in rep.group().subgroups(guards.subgroup_order)? {
                    for v0 in invariant_submodules(rep, &h) {
                        let (sub, _) = subrepresentation(rep, &v0, &h)?;
                        out.push((format!("{name}: V0={v0:?} H={h:?}"), sub));
                    }
                }
            }
        }
        ClosureOp::H => {
            for (name, rep) in c.iter() {
                for cong in enumerate_congruences(rep, guards.congruence_points, guards.subgroup_order)? {
                    let (q, _) = quotient(rep, &cong)?;
                    out.push((
                        format!("{name} / (V0={:?}, H={:?})", cong.submodule, cong.normal_subgroup),
                        q,
                    ));
                }
            }
        }
        ClosureOp::Cfin => {
            for i in 0..c.len() {
                for j in i..c.len() {
                    let p = direct_product(&[c.rep(i), c.rep(j)], guards.product_size)?;
                    out.push((format!("{} x {}", c.name(i), c.name(j)), p));
                }
            }
        }
        ClosureOp::Cup => {
            for i in 0..c.len() {
                for j in 0..c.len() {
                    for k in 0..2 {
                        let u = Filter::ultrafilter(2, k)?;
                        let p = filtered_product(&[c.rep(i), c.rep(j)], &u, guards.product_size)?;
                        out.push((format!("({} x {}) / U{k}", c.name(i), c.name(j)), p));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Apply the operator to the members and report results lying outside the
/// catalog up to isomorphism.
pub fn closure_check(c: &Catalog, op: ClosureOp, guards: &Guards) -> Result<ClosureReport> {
    let produced = apply(c, op, guards)?;
    let mut outside = Vec::new();
    for (origin, rep) in &produced {
        if !in_catalog(rep, c, guards)? {
            outside.push(format!("{origin}: {}", describe(rep)));
        }
    }
    let note = (op == ClosureOp::Cup).then(|| {
        "every ultrafilter on a finite index set is principal, so each ultraproduct is isomorphic to a factor \
         and closure under Cup is automatic"
            .to_string()
    });
    Ok(ClosureReport {
        op,
        produced: produced.len(),
        outside,
        note,
    })
}
