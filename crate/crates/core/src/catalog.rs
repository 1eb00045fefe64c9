//! The seven numerical types of hyperelliptic surfaces.
//!
//! Each row records the group `G`, the multiplicities of the multiple fibres
//! of `Ψ : X → B/G`, and the constants derived from them: `μ = lcm(mᵢ)` and
//! `γ = |G|`. `Num(X)` is generated by `A/μ` and `μB/γ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One row of the classification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    #[serde(rename = "type")]
    pub type_id: u32,
    #[serde(rename = "group")]
    pub group_label: String,
    pub gamma: u32,
    pub multiplicities: Vec<u32>,
    pub mu: u32,
    #[serde(rename = "gamma_over_mu")]
    pub fibre_b_coeff: u32,
}

struct Row {
    type_id: u32,
    group: &'static str,
    gamma: u32,
    multiplicities: &'static [u32],
    mu: u32,
    gamma_over_mu: u32,
}

const TABLE: [Row; 7] = [
    Row { type_id: 1, group: "Z2", gamma: 2, multiplicities: &[2, 2, 2, 2], mu: 2, gamma_over_mu: 1 },
    Row { type_id: 2, group: "Z2 x Z2", gamma: 4, multiplicities: &[2, 2, 2, 2], mu: 2, gamma_over_mu: 2 },
    Row { type_id: 3, group: "Z4", gamma: 4, multiplicities: &[2, 4, 4], mu: 4, gamma_over_mu: 1 },
    Row { type_id: 4, group: "Z4 x Z2", gamma: 8, multiplicities: &[2, 4, 4], mu: 4, gamma_over_mu: 2 },
    Row { type_id: 5, group: "Z3", gamma: 3, multiplicities: &[3, 3, 3], mu: 3, gamma_over_mu: 1 },
    Row { type_id: 6, group: "Z3 x Z3", gamma: 9, multiplicities: &[3, 3, 3], mu: 3, gamma_over_mu: 3 },
    Row { type_id: 7, group: "Z6", gamma: 6, multiplicities: &[2, 3, 6], mu: 6, gamma_over_mu: 1 },
];

impl SurfaceData {
    /// Odd types are exactly those with `γ = μ`.
    pub fn is_odd(&self) -> bool {
        self.type_id % 2 == 1
    }
}

fn check_type(type_id: i64) -> Result<usize> {
    if (1..=7).contains(&type_id) {
        Ok(type_id as usize - 1)
    } else {
        Err(Error::InvalidType(type_id))
    }
}

pub fn surface_params(type_id: i64) -> Result<SurfaceData> {
    let row = &TABLE[check_type(type_id)?];
    Ok(SurfaceData {
        type_id: row.type_id,
        group_label: row.group.to_string(),
        gamma: row.gamma,
        multiplicities: row.multiplicities.to_vec(),
        mu: row.mu,
        fibre_b_coeff: row.gamma_over_mu,
    })
}

/// True for types 1, 3, 5 and 7.
pub fn is_odd_type(type_id: i64) -> Result<bool> {
    check_type(type_id)?;
    Ok(type_id % 2 == 1)
}

/// All seven rows in type order.
pub fn all_surfaces() -> Vec<SurfaceData> {
    (1..=7).map(|t| surface_params(t).expect("type in range")).collect()
}
