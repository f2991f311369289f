//! Per-theorem verification suites. Each suite draws a deterministic
//! instance pool, runs the corresponding operations and assertions, and
//! renders a flat key-value report; instances run in parallel but the
//! report order is fixed by instance index.

use rayon::prelude::*;

use semilocal::algebra::{enumerate_vectors, Algebra, Morphism};
use semilocal::bridges::{
    biuniform_classify, bounds_report, copresentation_bridge, dual_bridge, free_cover_bridge_of,
    ideal_pair, pair_bridge, presentation_bridge, spectral_bridge, unit_rank_correspondence,
    BiuniformCase,
};
use semilocal::fp::FpMatrix;
use semilocal::locality::{
    calculus_checks, camps_dicks_check, classify_two_factor, is_local, product_decompose,
    support_profile, Budget, TwoFactorCase, Verdict,
};
use semilocal::module::{
    build_top_complement, direct_sum, injective_envelope, projective_cover, quotient_module,
    restrict_scalars, submodule_module, FdModule,
};
use semilocal::radical::{lift_idempotent, radical_bruteforce, radical_trace};
use semilocal::{matrix_morphism_lift, upper_triangular};

use crate::generate::{
    algebra_pool, algebra_pool_p_gt_dim, field_product_pool, module_pool, morphism_pool,
    truncated_poly,
};

pub const SUITE_IDS: &[&str] = &[
    "L2.1", "T2.4", "P2.5", "C2.6", "P2.7", "P3.1", "T3.3", "P4.4", "C4.5", "T5.4", "P6.3",
    "P6.4", "C6.5", "C6.7", "T7.2", "T7.3",
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub count: usize,
    pub seed: u64,
    pub budget: u64,
    pub fail_fast: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            count: 100,
            seed: 42,
            budget: 1 << 20,
            fail_fast: false,
        }
    }
}

pub struct SuiteReport {
    pub id: String,
    pub config: SuiteConfig,
    /// per-instance result lines, index order
    pub lines: Vec<String>,
    /// suite-level summary fields appended after the instances
    pub extra: Vec<String>,
    pub passes: usize,
    pub failures: usize,
    pub wall_ms: u128,
}

impl SuiteReport {
    /// Deterministic payload: everything except timing.
    pub fn payload(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "suite {}\nseed {}\nbudget {}\ncount {}\n",
            self.id, self.config.seed, self.config.budget, self.config.count
        ));
        for line in &self.lines {
            out.push_str(line);
            out.push('\n');
        }
        for line in &self.extra {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&format!(
            "summary pass={} fail={}\n",
            self.passes, self.failures
        ));
        out
    }

    /// Full rendering; the wall time rides in a comment so payloads stay
    /// byte-comparable.
    pub fn render(&self) -> String {
        format!("{}# wall_ms {}\n", self.payload(), self.wall_ms)
    }

    pub fn ok(&self) -> bool {
        self.failures == 0
    }
}

fn budget_of(cfg: &SuiteConfig) -> Budget {
    Budget {
        enumeration: cfg.budget,
        samples: 100_000,
        seed: cfg.seed,
    }
}

/// Runs instances in parallel, collecting (line, passed) by index.
fn run_instances<F>(cfg: &SuiteConfig, total: usize, f: F) -> (Vec<String>, usize, usize)
where
    F: Fn(usize) -> (String, bool) + Sync,
{
    let results: Vec<(String, bool)> = if cfg.fail_fast {
        let mut out = Vec::new();
        for i in 0..total {
            let r = f(i);
            let stop = !r.1;
            out.push(r);
            if stop {
                break;
            }
        }
        out
    } else {
        (0..total).into_par_iter().map(&f).collect()
    };
    let passes = results.iter().filter(|(_, ok)| *ok).count();
    let failures = results.len() - passes;
    let lines = results
        .into_iter()
        .enumerate()
        .map(|(i, (line, ok))| {
            format!("instance {} {} {}", i, if ok { "pass" } else { "FAIL" }, line)
        })
        .collect();
    (lines, passes, failures)
}

pub fn run_suite(id: &str, cfg: &SuiteConfig) -> Result<SuiteReport, String> {
    let start = std::time::Instant::now();
    let mut report = match id {
        "L2.1" => suite_calculus(cfg),
        "T2.4" => suite_codim_monotone(cfg),
        "P2.5" => suite_product_decompose(cfg),
        "C2.6" => suite_two_factor(cfg),
        "P2.7" => suite_restriction(cfg),
        "P3.1" => suite_commutative_top(cfg),
        "T3.3" => suite_free_cover(cfg),
        "P4.4" => suite_goldie_spectral(cfg),
        "C4.5" => suite_mono_iso(cfg),
        "T5.4" => suite_chi(cfg),
        "P6.3" => suite_dual_goldie(cfg),
        "P6.4" => suite_pair(cfg),
        "C6.5" => suite_bound_b2(cfg),
        "C6.7" => suite_biuniform(cfg),
        "T7.2" => suite_phi(cfg),
        "T7.3" => suite_bound_b3(cfg),
        "R.radical" => suite_radical_oracle(cfg),
        "R.idem" => suite_idempotents(cfg),
        other => return Err(format!("unknown suite id '{other}'")),
    };
    report.id = id.to_string();
    report.wall_ms = start.elapsed().as_millis();
    Ok(report)
}

fn empty_report(cfg: &SuiteConfig) -> SuiteReport {
    SuiteReport {
        id: String::new(),
        config: *cfg,
        lines: Vec::new(),
        extra: Vec::new(),
        passes: 0,
        failures: 0,
        wall_ms: 0,
    }
}

/// Extra suite (used by the acceptance gate): the two radical methods
/// agree exactly on algebras where both apply.
fn suite_radical_oracle(cfg: &SuiteConfig) -> SuiteReport {
    let pool = algebra_pool_p_gt_dim(cfg.seed, cfg.count);
    let (lines, passes, failures) = run_instances(cfg, pool.len(), |i| {
        let (name, a) = &pool[i];
        let trace = radical_trace(a);
        let brute = radical_bruteforce(a, cfg.budget);
        match (trace, brute) {
            (Ok(t), Ok(b)) => {
                let ok = t.radical == b.radical && t.nilpotency_index == b.nilpotency_index;
                (
                    format!(
                        "name={} p={} dim={} rad_dim={} index={} agree={}",
                        name,
                        a.modulus(),
                        a.dim(),
                        b.radical.dim(),
                        b.nilpotency_index,
                        ok
                    ),
                    ok,
                )
            }
            (t, b) => (
                format!("name={} error trace_ok={} brute_ok={}", name, t.is_ok(), b.is_ok()),
                false,
            ),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// Extra suite: exact idempotent lifting plus cover/envelope positions.
fn suite_idempotents(cfg: &SuiteConfig) -> SuiteReport {
    let algebras = algebra_pool(cfg.seed, cfg.count.div_ceil(4).max(4));
    let mut jobs = Vec::new();
    for (name, a) in &algebras {
        for m in module_pool(a, cfg.seed ^ 0x1D, 4) {
            jobs.push((name.clone(), a.clone(), m));
        }
    }
    jobs.truncate(cfg.count);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, a, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let w = a.wedderburn().map_err(|e| e.to_string())?;
            let mut lifted = 0usize;
            for b in &w.blocks {
                let e = lift_idempotent(a, &b.idempotent).map_err(|e| e.to_string())?;
                if !e.is_idempotent() {
                    return Err("lifted idempotent not exact".into());
                }
                lifted += 1;
            }
            let cover = projective_cover(m).map_err(|e| e.to_string())?;
            let pos = cover
                .module
                .submodule_position(&cover.kernel)
                .map_err(|e| e.to_string())?;
            if !pos.superfluous {
                return Err("cover kernel not superfluous".into());
            }
            let env = injective_envelope(m).map_err(|e| e.to_string())?;
            let pos = env
                .module
                .submodule_position(&env.map.image())
                .map_err(|e| e.to_string())?;
            if !pos.essential {
                return Err("envelope image not essential".into());
            }
            Ok(format!(
                "name={} dim={} lifted={} cover_dim={} env_dim={}",
                name,
                m.dim(),
                lifted,
                cover.module.dim(),
                env.module.dim()
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// L2.1: kernel containment, radical image equality and matrix lifts
/// for onto local morphisms, and composition behavior, including
/// witness transfer for non-local first factors.
fn suite_calculus(cfg: &SuiteConfig) -> SuiteReport {
    let pool = morphism_pool(cfg.seed, cfg.count);
    // lifted morphisms can leave the enumerable range; sampled checks
    // on them are trimmed to keep the suite minutes-scale
    let budget = Budget {
        samples: 2_000,
        ..budget_of(cfg)
    };
    let (lines, passes, failures) = run_instances(cfg, pool.len(), |i| {
        let gm = &pool[i];
        // pair the morphism with the canonical projection of its codomain
        let psi = gm
            .morphism
            .codomain()
            .semisimple_quotient()
            .ok()
            .map(|q| q.projection.clone());
        match calculus_checks(&gm.morphism, psi.as_ref(), &budget) {
            Ok(rep) => {
                let verdict = rep.phi_verdict.unwrap();
                let consistent = match verdict {
                    Verdict::NotLocal => !gm.expected_local,
                    Verdict::Local => gm.expected_local,
                    Verdict::UnknownBudget => true,
                };
                (
                    format!(
                        "name={} verdict={} kernel_in_radical={:?} lifts={} composition={:?}",
                        gm.name,
                        verdict,
                        rep.kernel_in_radical,
                        rep.lift_verdicts.len(),
                        rep.composition_verdict
                    ),
                    consistent,
                )
            }
            Err(e) => (format!("name={} error=\"{}\"", gm.name, e), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// T2.4: codim(R) <= codim(S) on every certified-local morphism; the
/// triangular inclusion over GF(2) rides along as instance 0.
fn suite_codim_monotone(cfg: &SuiteConfig) -> SuiteReport {
    let budget = budget_of(cfg);
    let mut jobs: Vec<(String, Morphism)> = Vec::new();
    let (_, incl) = upper_triangular(&Algebra::field(2).unwrap(), 2).unwrap();
    jobs.push(("triangular_incl_gf2".into(), incl));
    for gm in morphism_pool(cfg.seed, cfg.count * 2) {
        if jobs.len() > cfg.count {
            break;
        }
        if gm.expected_local {
            jobs.push((gm.name, gm.morphism));
        }
    }
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, phi) = &jobs[i];
        match camps_dicks_check(phi, &budget) {
            Ok(c) => (
                format!(
                    "name={} codim_r={} codim_s={} holds={}",
                    name, c.codim_domain, c.codim_codomain, c.holds
                ),
                c.holds,
            ),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// P2.5: support-induction decomposition with all re-verification
/// checks, plus the matrix-lift locality claim.
fn suite_product_decompose(cfg: &SuiteConfig) -> SuiteReport {
    let budget = budget_of(cfg);
    let pool = field_product_pool(cfg.seed, cfg.count);
    let (lines, passes, failures) = run_instances(cfg, pool.len(), |i| {
        let inst = &pool[i];
        let r = (|| -> Result<String, String> {
            let profile =
                support_profile(&inst.morphism, &inst.product, &budget).map_err(|e| e.to_string())?;
            let dec = product_decompose(&inst.morphism, &inst.product, &budget)
                .map_err(|e| e.to_string())?;
            if !dec.kernel_is_radical || !dec.block_count_matches {
                return Err("re-verification failed".into());
            }
            if dec.assembled_verdict == Verdict::NotLocal {
                return Err("assembled morphism not local".into());
            }
            // matrix lift stays local (no witness at any budget); lifted
            // algebras run at a trimmed enumeration bound
            let lift_budget = Budget {
                enumeration: budget.enumeration.min(1 << 16),
                samples: 2_000,
                seed: budget.seed,
            };
            let domain_dim = inst.morphism.domain().dim();
            let lift_ok = if (inst.morphism.domain().modulus() as u128)
                .pow((4 * domain_dim) as u32)
                <= lift_budget.enumeration as u128
            {
                let lifted =
                    matrix_morphism_lift(&inst.morphism, 2).map_err(|e| e.to_string())?;
                is_local(&lifted, &lift_budget).verdict != Verdict::NotLocal
            } else {
                true
            };
            if !lift_ok {
                return Err("matrix lift reported not-local".into());
            }
            Ok(format!(
                "name={} k={} m={} min_support={} kernel_is_radical={} blocks_match={}",
                inst.name,
                inst.product.block_count(),
                dec.m,
                profile.min_support,
                dec.kernel_is_radical,
                dec.block_count_matches
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={} error=\"{}\"", inst.name, e), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// C2.6: every local morphism into a product of two fields classifies
/// into exactly one of the dichotomy cases with verified certificates.
fn suite_two_factor(cfg: &SuiteConfig) -> SuiteReport {
    let budget = budget_of(cfg);
    let pool: Vec<_> = field_product_pool(cfg.seed, cfg.count * 3)
        .into_iter()
        .filter(|m| m.product.block_count() == 2)
        .take(cfg.count)
        .collect();
    let (lines, passes, failures) = run_instances(cfg, pool.len(), |i| {
        let inst = &pool[i];
        match classify_two_factor(&inst.morphism, &inst.product, &budget) {
            Ok(TwoFactorCase::Local { tau_index, .. }) => (
                format!("name={} case=1 tau={}", inst.name, tau_index),
                true,
            ),
            Ok(TwoFactorCase::TwoMaximalIdeals { .. }) => {
                (format!("name={} case=2", inst.name), true)
            }
            Err(e) => (format!("name={} error=\"{}\"", inst.name, e), false),
        }
    });
    let case2 = lines.iter().filter(|l| l.contains("case=2")).count();
    let mut report = SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    };
    report.extra.push(format!("census case2={case2}"));
    report
}

/// P2.7: restriction of scalars embeds End(M_S) into End(M_R) as a
/// local morphism, so End(M_S) is semilocal.
fn suite_restriction(cfg: &SuiteConfig) -> SuiteReport {
    let budget = budget_of(cfg);
    // pairs (phi: R -> S, M over S)
    let mut jobs: Vec<(String, Morphism, FdModule)> = Vec::new();
    {
        let gf2 = Algebra::field(2).unwrap();
        let (_, incl) = upper_triangular(&gf2, 2).unwrap();
        let m2 = incl.codomain().clone();
        let reg = FdModule::regular(&m2);
        // the simple column module of the 2x2 matrix algebra
        let e00 = m2.basis_element(0);
        let sub = reg.subspace_from_rows(&m2.left_mult_of(e00.coords()).row_space());
        let (simple, _) = submodule_module(&reg, &sub).unwrap();
        jobs.push(("ut2_into_m2_simple".into(), incl.clone(), simple));
        jobs.push(("ut2_into_m2_regular".into(), incl, reg));
    }
    if let Some(gf4) = crate::generate::field_extension(2, 2) {
        let gf2 = Algebra::field(2).unwrap();
        let mut mat = FpMatrix::zero(2, 1, 2);
        mat.set(0, 0, 1);
        let incl = Morphism::new(gf2, gf4.clone(), mat).unwrap();
        jobs.push(("gf2_into_gf4".into(), incl, FdModule::regular(&gf4)));
    }
    for gm in morphism_pool(cfg.seed, cfg.count * 2) {
        if jobs.len() >= cfg.count {
            break;
        }
        if !gm.expected_local {
            continue;
        }
        let s = gm.morphism.codomain().clone();
        for m in module_pool(&s, cfg.seed ^ 0x27, 2) {
            if jobs.len() >= cfg.count {
                break;
            }
            jobs.push((gm.name.clone(), gm.morphism.clone(), m));
        }
    }
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, phi, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let restricted = restrict_scalars(phi, m).map_err(|e| e.to_string())?;
            let endo_s = m.endo_algebra().map_err(|e| e.to_string())?;
            let endo_r = restricted.endo_algebra().map_err(|e| e.to_string())?;
            if endo_s.dim() > endo_r.dim() {
                return Err("restriction lost endomorphisms".into());
            }
            // the inclusion of endo algebras, coordinate-wise
            let mut mat = FpMatrix::zero(m.modulus(), endo_s.dim(), endo_r.dim());
            for r in 0..endo_s.dim() {
                let h = endo_s.basis_matrix(r);
                let coords = endo_r
                    .express(&h)
                    .ok_or("S-endomorphism is not an R-endomorphism")?;
                for (c, &v) in coords.iter().enumerate() {
                    mat.set(r, c, v);
                }
            }
            let incl = Morphism::new(endo_s.algebra.clone(), endo_r.algebra.clone(), mat)
                .map_err(|e| e.to_string())?;
            let rep = is_local(&incl, &budget);
            if rep.verdict == Verdict::NotLocal {
                return Err("endomorphism inclusion not local".into());
            }
            let codim = endo_s.algebra.ring_codim().map_err(|e| e.to_string())?;
            Ok(format!(
                "name={} end_s={} end_r={} verdict={} codim_end_s={}",
                name,
                endo_s.dim(),
                endo_r.dim(),
                rep.verdict,
                codim
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// P3.1: over commutative algebras the canonical map
/// End(M) -> End(M/MJ) is local.
fn suite_commutative_top(cfg: &SuiteConfig) -> SuiteReport {
    let budget = budget_of(cfg);
    let algebras: Vec<(String, Algebra)> = algebra_pool(cfg.seed, cfg.count * 3)
        .into_iter()
        .filter(|(_, a)| a.is_commutative())
        .collect();
    let mut jobs: Vec<(String, FdModule)> = Vec::new();
    for (name, a) in &algebras {
        for m in module_pool(a, cfg.seed ^ 0x31, 3) {
            if jobs.len() >= cfg.count {
                break;
            }
            jobs.push((name.clone(), m));
        }
    }
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let endo = m.endo_algebra().map_err(|e| e.to_string())?;
            let series = m.structural_series().map_err(|e| e.to_string())?;
            let (top, proj, sect) =
                quotient_module(m, &series.radical_sub).map_err(|e| e.to_string())?;
            let endo_top = top.endo_algebra().map_err(|e| e.to_string())?;
            let mut mat = FpMatrix::zero(m.modulus(), endo.dim(), endo_top.dim());
            for r in 0..endo.dim() {
                let fbar = sect.mul(&endo.basis_matrix(r)).mul(proj.matrix());
                let coords = endo_top.express(&fbar).ok_or("top endomorphism outside span")?;
                for (c, &v) in coords.iter().enumerate() {
                    mat.set(r, c, v);
                }
            }
            let phi = Morphism::new(endo.algebra.clone(), endo_top.algebra.clone(), mat)
                .map_err(|e| e.to_string())?;
            let rep = is_local(&phi, &budget);
            if rep.verdict == Verdict::NotLocal {
                return Err("top reduction not local".into());
            }
            Ok(format!(
                "name={} dim={} end={} end_top={} verdict={}",
                name,
                m.dim(),
                endo.dim(),
                endo_top.dim(),
                rep.verdict
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

fn module_jobs(cfg: &SuiteConfig, salt: u64) -> Vec<(String, FdModule)> {
    let algebras = algebra_pool(cfg.seed, cfg.count.div_ceil(3).max(4));
    let mut jobs = Vec::new();
    for (name, a) in &algebras {
        for m in module_pool(a, cfg.seed ^ salt, 4) {
            jobs.push((name.clone(), m));
        }
    }
    jobs.truncate(cfg.count);
    jobs
}

/// T3.3: complete the top, take the free cover, and certify the induced
/// pair morphism local; End(M) is semilocal with its codim reported.
fn suite_free_cover(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x33);
    let budget = budget_of(cfg);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let n = build_top_complement(m).map_err(|e| e.to_string())?;
            let (w, _, _) = direct_sum(&[m.clone(), n.clone()]).map_err(|e| e.to_string())?;
            let (cover, bridge) =
                free_cover_bridge_of(&w, cfg.budget, cfg.seed ^ i as u64).map_err(|e| e.to_string())?;
            let rep = is_local(&bridge.morphism, &budget);
            if rep.verdict == Verdict::NotLocal {
                return Err("free cover pair morphism not local".into());
            }
            let endo = m.endo_algebra().map_err(|e| e.to_string())?;
            let codim = endo.algebra.ring_codim().map_err(|e| e.to_string())?;
            Ok(format!(
                "name={} dim_m={} dim_n={} free_rank={} verdict={} codim_end={}",
                name,
                m.dim(),
                n.dim(),
                cover.rank,
                rep.verdict,
                codim
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// P4.4: the Goldie dimension of M equals the Goldie dimension of the
/// spectral endomorphism ring End(E(M))/J.
fn suite_goldie_spectral(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x44);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let (dim_m, _) = m.goldie_dims().map_err(|e| e.to_string())?;
            let bridge = spectral_bridge(m).map_err(|e| e.to_string())?;
            let spec_goldie = bridge
                .morphism
                .codomain()
                .ring_codim()
                .map_err(|e| e.to_string())?;
            if dim_m != spec_goldie {
                return Err(format!("dim {dim_m} != spectral Goldie {spec_goldie}"));
            }
            Ok(format!("name={name} dim={dim_m} spectral_goldie={spec_goldie}"))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// C4.5: spectral image invertibility coincides with injectivity on all
/// of End(M); monomorphisms of finite-length modules are isomorphisms.
fn suite_mono_iso(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x45);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let bridge = spectral_bridge(m).map_err(|e| e.to_string())?;
            let checked = unit_rank_correspondence(&bridge, cfg.budget, cfg.seed)
                .map_err(|e| e.to_string())?;
            let rep = is_local(&bridge.morphism, &budget_of(cfg));
            if rep.verdict == Verdict::NotLocal {
                return Err("spectral bridge not local".into());
            }
            Ok(format!("name={name} checked={checked} verdict={}", rep.verdict))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// T5.4: chi is local on every instance; the first codimension bound
/// holds.
fn suite_chi(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x54);
    let budget = budget_of(cfg);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let bridge =
                copresentation_bridge(m, cfg.seed ^ i as u64).map_err(|e| e.to_string())?;
            let rep = is_local(&bridge.morphism, &budget);
            if rep.verdict == Verdict::NotLocal {
                return Err("chi not local".into());
            }
            let b = bounds_report(m).map_err(|e| e.to_string())?;
            if !b.b1 {
                return Err(format!(
                    "bound b1 fails: {} > {} + {}",
                    b.codim_end, b.dim_m, b.dim_envelope_quotient
                ));
            }
            Ok(format!(
                "name={} verdict={} codim_end={} dim={} dim_l1={} b1_eq={}",
                name,
                rep.verdict,
                b.codim_end,
                b.dim_m,
                b.dim_envelope_quotient,
                b.b1_equality()
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    let eq = lines.iter().filter(|l| l.contains("b1_eq=true")).count();
    let mut report = SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    };
    report.extra.push(format!("census b1_equalities={eq}"));
    report
}

/// P6.3: dual image invertibility coincides with surjectivity, and the
/// dual target is semisimple of Goldie dimension codim(M).
fn suite_dual_goldie(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x63);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let bridge = dual_bridge(m).map_err(|e| e.to_string())?;
            let checked = unit_rank_correspondence(&bridge, cfg.budget, cfg.seed)
                .map_err(|e| e.to_string())?;
            let (_, codim_m) = m.goldie_dims().map_err(|e| e.to_string())?;
            let dual_goldie = bridge
                .morphism
                .codomain()
                .ring_codim()
                .map_err(|e| e.to_string())?;
            if codim_m != dual_goldie {
                return Err(format!("codim {codim_m} != dual Goldie {dual_goldie}"));
            }
            Ok(format!(
                "name={name} checked={checked} codim={codim_m} dual_goldie={dual_goldie}"
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// P6.4: the pair morphism is local and its kernel is exactly the
/// intersection of the distinguished ideals.
fn suite_pair(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x64);
    let budget = budget_of(cfg);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let bridge = pair_bridge(m).map_err(|e| e.to_string())?;
            let pair = ideal_pair(m).map_err(|e| e.to_string())?;
            let expected = pair.essential_kernel.intersect(&pair.superfluous_image);
            if bridge.morphism.kernel() != expected {
                return Err("pair kernel mismatch".into());
            }
            let rep = is_local(&bridge.morphism, &budget);
            if rep.verdict == Verdict::NotLocal {
                return Err("pair morphism not local".into());
            }
            Ok(format!(
                "name={} ia_dim={} ka_dim={} kernel_dim={} verdict={}",
                name,
                pair.essential_kernel.dim(),
                pair.superfluous_image.dim(),
                expected.dim(),
                rep.verdict
            ))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// C6.5: codim(End M) <= dim(M) + codim(M) with the equality census.
fn suite_bound_b2(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x65);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        match bounds_report(m) {
            Ok(b) if b.b2 => (
                format!(
                    "name={} codim_end={} dim={} codim={} b2_eq={}",
                    name,
                    b.codim_end,
                    b.dim_m,
                    b.codim_m,
                    b.b2_equality()
                ),
                true,
            ),
            Ok(b) => (
                format!(
                    "name={} bound_b2_fails codim_end={} dim={} codim={}",
                    name, b.codim_end, b.dim_m, b.codim_m
                ),
                false,
            ),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    let eq = lines.iter().filter(|l| l.contains("b2_eq=true")).count();
    let mut report = SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    };
    report.extra.push(format!("census b2_equalities={eq}"));
    report
}

/// C6.7: biuniform dichotomy with verified certificates; the case-2
/// census rides in the report (no minimum is required).
fn suite_biuniform(cfg: &SuiteConfig) -> SuiteReport {
    // uniserial instances guarantee the suite is nonempty
    let mut jobs: Vec<(String, FdModule)> = Vec::new();
    for (p, n) in [(2u64, 2usize), (2, 3), (3, 2), (3, 3), (5, 2)] {
        let a = truncated_poly(p, n);
        jobs.push((format!("uniserial_{p}_{n}"), FdModule::regular(&a)));
    }
    for (name, m) in module_jobs(cfg, 0x67) {
        if jobs.len() >= cfg.count {
            break;
        }
        if m.goldie_dims().map(|d| d == (1, 1)).unwrap_or(false) {
            jobs.push((name, m));
        }
    }
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        match biuniform_classify(m) {
            Ok(BiuniformCase::LocalEndo { .. }) => (format!("name={name} case=1"), true),
            Ok(BiuniformCase::TwoMaximalIdeals { .. }) => (format!("name={name} case=2"), true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    let case2 = lines.iter().filter(|l| l.ends_with("case=2")).count();
    let mut report = SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    };
    report.extra.push(format!("census case2={case2}"));
    report
}

/// T7.2: Phi is local on every instance.
fn suite_phi(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x72);
    let budget = budget_of(cfg);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        let r = (|| -> Result<String, String> {
            let bridge = presentation_bridge(m, cfg.seed ^ i as u64).map_err(|e| e.to_string())?;
            let rep = is_local(&bridge.morphism, &budget);
            if rep.verdict == Verdict::NotLocal {
                return Err("Phi not local".into());
            }
            Ok(format!("name={name} verdict={}", rep.verdict))
        })();
        match r {
            Ok(line) => (line, true),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    }
}

/// T7.3: codim(End M) <= codim(M) + codim(K) with the equality census.
fn suite_bound_b3(cfg: &SuiteConfig) -> SuiteReport {
    let jobs = module_jobs(cfg, 0x73);
    let (lines, passes, failures) = run_instances(cfg, jobs.len(), |i| {
        let (name, m) = &jobs[i];
        match bounds_report(m) {
            Ok(b) if b.b3 => (
                format!(
                    "name={} codim_end={} codim={} codim_k={} b3_eq={}",
                    name,
                    b.codim_end,
                    b.codim_m,
                    b.codim_cover_kernel,
                    b.b3_equality()
                ),
                true,
            ),
            Ok(b) => (
                format!(
                    "name={} bound_b3_fails codim_end={} codim={} codim_k={}",
                    name, b.codim_end, b.codim_m, b.codim_cover_kernel
                ),
                false,
            ),
            Err(e) => (format!("name={name} error=\"{e}\""), false),
        }
    });
    let eq = lines.iter().filter(|l| l.contains("b3_eq=true")).count();
    let mut report = SuiteReport {
        lines,
        passes,
        failures,
        ..empty_report(cfg)
    };
    report.extra.push(format!("census b3_equalities={eq}"));
    report
}

/// Convenience for the unit/rank invariant on enumerable endomorphism
/// algebras (used by the acceptance gate).
pub fn exhaustive_unit_check(m: &FdModule, budget: u64) -> Result<bool, String> {
    let endo = m.endo_algebra().map_err(|e| e.to_string())?;
    let p = m.modulus();
    if (p as u128).pow(endo.dim() as u32) > budget as u128 {
        return Ok(true);
    }
    for coords in enumerate_vectors(p, endo.dim()) {
        let h = endo.matrix_of(&coords);
        let unit = endo.algebra.is_unit_coords(&coords);
        if unit != (h.rank() == m.dim()) {
            return Ok(false);
        }
    }
    Ok(true)
}
