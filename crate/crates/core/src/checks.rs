//! The verifiable claims about `A(1)`, packaged as named checks for the
//! `check-theorems` command.

use serde::Serialize;

use crate::bidegree::Bidegree;
use crate::error::Result;
use crate::margolis::{
    is_invertible, is_projective, kunneth_verify, map_is_stable_equivalence, margolis_report,
    verify_d8_presentation, MargolisReport,
};
use crate::module::{catalog, dual, quotient_tau, tensor, tensor_f2, A1Module};
use crate::picard::{
    generator_lattice, is_stably_trivial, joker_power, picard_coordinates, picard_element,
    signature, PicardCoordinates,
};
use crate::stable::{evaluation_map, kernel_of_cover, loop_module, minimal_free_cover};

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn outcome(
    id: usize,
    name: &'static str,
    run: impl FnOnce() -> Result<(bool, String)>,
) -> CheckResult {
    let (passed, detail) = run().unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult {
        id,
        name,
        passed,
        detail,
    }
}

fn same_dims(a: &MargolisReport, b: &MargolisReport) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x.dims == y.dims)
}

pub fn catalog_validation() -> CheckResult {
    outcome(1, "catalog validation", || {
        let expected = [("M2", 1), ("A1", 8), ("A1tilde", 8), ("J", 5)];
        let mut ok = true;
        let mut parts = Vec::new();
        for (name, rank) in expected {
            let m = catalog::builtin(name)?;
            ok &= m.validate().is_ok() && m.rank() == rank;
            parts.push(format!("{name}:{}", m.rank()));
        }
        Ok((ok, parts.join(" ")))
    })
}

pub fn projectivity() -> CheckResult {
    outcome(2, "projectivity detection", || {
        let a1 = margolis_report(&catalog::a1())?;
        let t = margolis_report(&catalog::a1_tilde())?;
        let ok = is_projective(&catalog::a1())?
            && a1.iter().all(|h| h.is_zero())
            && !is_projective(&catalog::a1_tilde())?
            && t.q0.is_zero()
            && t.q1.is_zero()
            && !t.sq2.is_zero();
        Ok((ok, format!("dim H(A1tilde/τ; Sq2) = {}", t.sq2.total_dim())))
    })
}

pub fn joker_invertible() -> CheckResult {
    outcome(3, "joker is invertible", || {
        let sig = is_invertible(&catalog::joker())?;
        Ok(match sig {
            Some(s) => (s.q0 != s.sq2, format!("signature {s}")),
            None => (false, "not invertible".into()),
        })
    })
}

pub fn joker_infinite_order() -> CheckResult {
    outcome(4, "joker has infinite order", || {
        let base = signature(&catalog::joker())?;
        let mut ok = true;
        for n in 1..=4 {
            let jn = joker_power(n)?;
            let explicit = signature(&jn)?;
            ok &= !is_stably_trivial(&jn)? && explicit == base.scale(n);
        }
        for n in 5..=8 {
            let additive = base.scale(n);
            ok &= additive.q0 != additive.sq2
                && generator_lattice()?.solve(additive.to_vector())?
                    == PicardCoordinates::new(0, 0, 0, n as i64);
        }
        Ok((ok, "n = 1..8".into()))
    })
}

pub fn joker_duality() -> CheckResult {
    outcome(5, "dual joker is the inverse", || {
        let j = picard_coordinates(&catalog::joker())?;
        let dj = picard_coordinates(&dual(&catalog::joker()))?;
        Ok((dj == -j && j != dj, format!("J {j}, DJ {dj}")))
    })
}

fn sample_modules() -> Result<Vec<A1Module>> {
    Ok(vec![
        catalog::unit(),
        catalog::a1_tilde(),
        catalog::joker(),
        loop_module(&catalog::unit())?,
        tensor(&catalog::joker(), &catalog::joker())?,
    ])
}

pub fn evaluation() -> CheckResult {
    outcome(6, "evaluation detects invertibility", || {
        let mut ok = true;
        for m in sample_modules()? {
            let ev = evaluation_map(&m)?;
            ok &= ev.validate().is_ok()
                && map_is_stable_equivalence(&ev)? == is_invertible(&m)?.is_some();
        }
        Ok((ok, "M2, A1tilde, J, ΩM2, J⊗J".into()))
    })
}

pub fn kunneth() -> CheckResult {
    outcome(7, "Künneth formula", || {
        let ms = [
            catalog::unit(),
            catalog::joker(),
            catalog::a1_tilde(),
            loop_module(&catalog::unit())?,
        ];
        let mut ok = true;
        let mut pairs = 0;
        for i in 0..ms.len() {
            for k in i..ms.len() {
                ok &= kunneth_verify(&ms[i], &ms[k])?;
                pairs += 1;
            }
        }
        Ok((ok, format!("{pairs} pairs")))
    })
}

pub fn loops() -> CheckResult {
    outcome(8, "loop functor", || {
        let unit = catalog::unit();
        let om2 = loop_module(&unit)?;
        let oj = loop_module(&catalog::joker())?;
        let mut ok = loop_module(&catalog::a1())?.is_zero()
            && om2.rank() == 7
            && is_invertible(&om2)?.is_some()
            && signature(&oj)? == signature(&om2)? + signature(&catalog::joker())?;
        for m in [unit, catalog::joker()] {
            let cover = minimal_free_cover(&m)?;
            let plain = margolis_report(&kernel_of_cover(&cover)?)?;
            let padded = margolis_report(&kernel_of_cover(&cover.pad(Bidegree::new(1, 0))?)?)?;
            ok &= same_dims(&plain, &padded);
        }
        Ok((
            ok,
            format!("rank ΩM2 = {}, rank ΩJ = {}", om2.rank(), oj.rank()),
        ))
    })
}

pub fn round_trip() -> CheckResult {
    outcome(9, "classification round trip", || {
        let lattice = generator_lattice()?;
        let mut ok = lattice.rank() == 4;
        let mut count = 0;
        for c in -2..=2 {
            for d in -2..=2 {
                for a in -3..=3 {
                    for b in -3..=3 {
                        let p = PicardCoordinates::new(a, b, c, d);
                        ok &= picard_coordinates(&picard_element(p)?)? == p;
                        count += 1;
                    }
                }
            }
        }
        Ok((
            ok,
            format!("{count} points, lattice rank {}", lattice.rank()),
        ))
    })
}

pub fn d8() -> CheckResult {
    outcome(10, "A(1)/τ ≅ F2[D8]", || {
        Ok((verify_d8_presentation(), "S1 = 1+x, S2 = 1+y".into()))
    })
}

pub fn tau_monoidal() -> CheckResult {
    outcome(11, "−/τ is strongly monoidal", || {
        let names = catalog::BUILTIN_NAMES;
        let mut ok = true;
        for m in names {
            for n in names {
                let (m, n) = (catalog::builtin(m)?, catalog::builtin(n)?);
                let left = quotient_tau(&tensor(&m, &n)?);
                let right = tensor_f2(&quotient_tau(&m), &quotient_tau(&n))?;
                ok &= left.basis == right.basis && left.sq1 == right.sq1 && left.sq2 == right.sq2;
            }
        }
        Ok((ok, format!("{} ordered pairs", names.len() * names.len())))
    })
}

pub fn run_all() -> Vec<CheckResult> {
    vec![
        catalog_validation(),
        projectivity(),
        joker_invertible(),
        joker_infinite_order(),
        joker_duality(),
        evaluation(),
        kunneth(),
        loops(),
        round_trip(),
        d8(),
        tau_monoidal(),
    ]
}
