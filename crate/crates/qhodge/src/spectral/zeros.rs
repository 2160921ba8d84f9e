//! Eigenvalue records E_{λμ} and exact zero-set scans.

use super::eigen::{eigen_a_poly, eigen_bcd_poly, f_lambda_mu};
use super::eval::{Evaluator, ZSpec};
use super::{SpectralError, Tau};
use crate::partition::{GenPartition, GroupSpec, Window};
use serde::Serialize;

/// Group together with the choice of z.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralParams {
    pub group: GroupSpec,
    pub z: ZSpec,
}

impl SpectralParams {
    pub fn new(group: GroupSpec, z: ZSpec) -> Self {
        SpectralParams { group, z }
    }

    fn evaluators(&self) -> Result<Vec<Evaluator>, SpectralError> {
        match self.z {
            ZSpec::RootOfUnity(m) if self.group.family == crate::partition::Family::Gl => {
                Ok((0..self.group.n as u32).map(|j| Evaluator::root_of_unity(self.group.n as u32, m, j)).collect())
            }
            _ => Ok(vec![Evaluator::for_params(&self.group, &self.z)?]),
        }
    }
}

/// E_{λμ} = E⁻_λ + E⁺_μ together with the second coding F_{λμ} (A series).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EigenRecord {
    pub lambda: GenPartition,
    pub mu: GenPartition,
    pub e_minus: String,
    pub e_plus: String,
    pub e: String,
    pub f: Option<String>,
    pub is_zero: bool,
}

/// Evaluates E_{λμ} under one evaluator, checking the two codings against each other.
pub fn record_with(
    l: &GenPartition,
    mu: &GenPartition,
    group: &GroupSpec,
    ev: &Evaluator,
) -> Result<EigenRecord, SpectralError> {
    for x in [l, mu] {
        if !group.admits(x) {
            return Err(SpectralError::NotAdmissible(x.to_string()));
        }
    }
    if group.family.is_a_series() {
        let em = ev.eval(&eigen_a_poly(l, Tau::Minus));
        let ep = ev.eval(&eigen_a_poly(mu, Tau::Plus));
        let e = em.add(&ep);
        let f = ev.eval(&f_lambda_mu(l, mu));
        if e != f {
            return Err(SpectralError::Inconsistent { lambda: l.to_string(), mu: mu.to_string() });
        }
        Ok(EigenRecord {
            lambda: l.clone(),
            mu: mu.clone(),
            e_minus: ev.render(&em),
            e_plus: ev.render(&ep),
            is_zero: e.is_zero(),
            e: ev.render(&e),
            f: Some(ev.render(&f)),
        })
    } else {
        let eps = group.epsilon();
        let el = ev.eval(&eigen_bcd_poly(l, eps));
        let emu = ev.eval(&eigen_bcd_poly(mu, eps));
        let e = el.add(&emu);
        Ok(EigenRecord {
            lambda: l.clone(),
            mu: mu.clone(),
            e_minus: ev.render(&el),
            e_plus: ev.render(&emu),
            is_zero: e.is_zero(),
            e: ev.render(&e),
            f: None,
        })
    }
}

/// E_{λμ} under the given parameters (first root-of-unity branch when applicable).
pub fn regularity_value(l: &GenPartition, mu: &GenPartition, params: &SpectralParams) -> Result<EigenRecord, SpectralError> {
    let ev = params.evaluators()?.remove(0);
    record_with(l, mu, &params.group, &ev)
}

/// Result of scanning all pairs (λ, μ) of a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZeroScan {
    pub pairs_scanned: usize,
    /// Pairs with E_{λμ} = 0.
    pub zeros: Vec<(GenPartition, GenPartition)>,
    /// For B, C, D: zeros with |λ| ≡ |μ| (mod 2), the only blocks that occur.
    pub zeros_parity_filtered: Option<Vec<(GenPartition, GenPartition)>>,
    /// Root-of-unity mode: whether all N choices of z gave the same zero set.
    pub branches_agree: bool,
    #[serde(skip)]
    pub records: Vec<EigenRecord>,
}

/// Exact zero set of E_{λμ} over window × window.
pub fn zero_scan(params: &SpectralParams, window: &Window, keep_records: bool) -> Result<ZeroScan, SpectralError> {
    let parts = params.group.enumerate(window);
    let evs = params.evaluators()?;
    let mut zero_sets = Vec::new();
    let mut records = Vec::new();
    for (bi, ev) in evs.iter().enumerate() {
        let mut zs = Vec::new();
        for l in &parts {
            for mu in &parts {
                let r = record_with(l, mu, &params.group, ev)?;
                if r.is_zero {
                    zs.push((l.clone(), mu.clone()));
                }
                if keep_records && bi == 0 {
                    records.push(r);
                }
            }
        }
        zero_sets.push(zs);
    }
    let branches_agree = zero_sets.windows(2).all(|w| w[0] == w[1]);
    let mut zeros = zero_sets.swap_remove(0);
    if !branches_agree {
        for other in zero_sets {
            for pr in other {
                if !zeros.contains(&pr) {
                    zeros.push(pr);
                }
            }
        }
    }
    let zeros_parity_filtered = (!params.group.family.is_a_series())
        .then(|| zeros.iter().filter(|(l, m)| (l.size() - m.size()) % 2 == 0).cloned().collect());
    Ok(ZeroScan { pairs_scanned: parts.len() * parts.len(), zeros, zeros_parity_filtered, branches_agree, records })
}

/// The zero set predicted for z^N q⁻² a primitive m-th root of unity:
/// rectangles ((n^N), (k^N)) with n, k ∈ mℤ, restricted to the window.
pub fn predicted_root_of_unity_zeros(group: &GroupSpec, m: u32, window: &Window) -> Vec<(GenPartition, GenPartition)> {
    let parts = group.enumerate(window);
    let rect = |l: &GenPartition| {
        let p = l.parts();
        p.iter().all(|&x| x == p[0]) && p[0].rem_euclid(m as i32) == 0
    };
    let mut out = Vec::new();
    for l in &parts {
        for mu in &parts {
            if rect(l) && rect(mu) {
                out.push((l.clone(), mu.clone()));
            }
        }
    }
    out
}
