//! Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::time::Instant;

use lacuna::bounds::{
    corollary_bound, corollary_exact, crossover_gammas, optimal_c, propf_exact,
    quoted_crossover_gammas, ramakrishnan_exact, serre_bound, thm_c_exact, thm_d_bound,
    thm_d_exact, BoundArgs, BoundKind, BoundRecord, Crossover,
};
use lacuna::density::{
    classify, estimate_density, model_density, verify_bound, EstimateOptions, SetMode, SetSpec,
};
use lacuna::satake::{
    clebsch_gordan, dihedral_tensor, gl3_adjoint_class, gl3_adjoint_tensor, self_pairing,
    tensor_power_pole_order, DihedralPair, Gl2Type, LocalData, Quotient, SatakeClass,
};
use lacuna::sources::{serre_group_model, EllipticCurve, Q8Source, RealCharacter};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const N: u64 = 1_000_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn pole_orders() -> Outcome {
    let start = Instant::now();
    let split: Vec<u64> = (1..=4)
        .map(|k| tensor_power_pole_order(Gl2Type::NonSolvablePolyhedral, k, k).unwrap())
        .collect();
    ensure(split == [1, 2, 5, 14], format!("split pairing {split:?}"))?;
    let dihedral = self_pairing(&dihedral_tensor(DihedralPair::Contragredient(
        Quotient::Invariant,
    )))
    .unwrap();
    ensure(dihedral == 4, format!("dihedral self-pairing {dihedral}"))?;
    let gl3 = self_pairing(&gl3_adjoint_tensor(Gl2Type::NonSolvablePolyhedral).unwrap()).unwrap();
    ensure(gl3 == 3, format!("GL(3) self-pairing {gl3}"))?;
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 1.0, format!("took {elapsed:.2}s"))?;
    Ok(format!(
        "{split:?}, dihedral {dihedral}, GL(3) {gl3}, {elapsed:.3}s"
    ))
}

fn bound_values() -> Outcome {
    let start = Instant::now();
    let zero = BigRational::zero();
    let checks = [
        ("thm_c(4,0)", thm_c_exact(4, &zero).unwrap().value, q(1, 4)),
        (
            "thm_c(4,2)",
            thm_c_exact(4, &q(4, 1)).unwrap().value,
            q(3, 4),
        ),
        ("thm_c(2,0)", thm_c_exact(2, &zero).unwrap().value, q(1, 2)),
        (
            "thm_d(14,5,0)",
            thm_d_exact(14, 5, &zero).unwrap().value,
            q(2, 3),
        ),
        (
            "corollary(0)",
            corollary_exact(&zero).unwrap().value,
            q(2, 3),
        ),
        ("propf(1)", propf_exact(&q(1, 1)).unwrap().value, q(1, 2)),
        (
            "ramakrishnan(2)",
            ramakrishnan_exact(&q(2, 1)).unwrap().value,
            q(3, 4),
        ),
    ];
    for (name, got, want) in &checks {
        ensure(got == want, format!("{name} = {got}, want {want}"))?;
    }
    for n in 1..=10i64 {
        let got = serre_bound(n as u64).unwrap();
        ensure(got == q(n * n - 1, n * n), format!("serre({n}) = {got}"))?;
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(elapsed < 1.0, format!("took {elapsed:.2}s"))?;
    Ok(format!(
        "{} exact values and serre(1..=10), {elapsed:.3}s",
        checks.len()
    ))
}

fn corollary_identity() -> Outcome {
    let worst = (0..10_000)
        .map(|i| {
            let g = 4.0 * i as f64 / 9_999.0;
            (thm_d_bound(14, 5, g).unwrap().raw - corollary_bound(g).unwrap().raw).abs()
        })
        .fold(0.0, f64::max);
    ensure(worst < 1e-12, format!("max difference {worst:e}"))?;
    Ok(format!("max difference {worst:e} over 10^4 gammas"))
}

fn optimal_c_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let g = rng.random_range(0.0..4.0);
        let opt = optimal_c(14, 5, g).unwrap();
        let bound = thm_d_bound(14, 5, g).unwrap().raw;
        worst = worst.max((opt.value - bound).abs());
    }
    ensure(worst < 1e-6, format!("max |sup_c - thm_d| = {worst:e}"))?;
    let Crossover::Points(points) = crossover_gammas(14, 5, 2).unwrap() else {
        return Err("crossover reported identical bounds".into());
    };
    let roots: Vec<f64> = points.iter().map(|p| p.gamma).collect();
    for g in &roots {
        let r = g.powi(4) - 3.0 * g * g + 1.0;
        ensure(r.abs() < 1e-9, format!("gamma {g}: residual {r:e}"))?;
    }
    ensure(
        roots.len() == 2,
        format!("expected two tangency points, got {roots:?}"),
    )?;
    let quoted = quoted_crossover_gammas();
    Ok(format!(
        "sup_c error {worst:.1e}; tangency gammas {:.6?}; quoted ±(1/2)√(3±√5) = {:.6?}",
        roots, quoted
    ))
}

fn unit(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU))
}

fn clebsch_gordan_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let gl3 = gl3_adjoint_tensor(Gl2Type::NonSolvablePolyhedral).unwrap();
    let reps: Vec<((u32, u32), _)> = (0..=4)
        .flat_map(|a| (0..=4).map(move |b| ((a, b), clebsch_gordan(a, b))))
        .collect();
    let (mut cg, mut adj) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let (a, b, eta) = (unit(&mut rng), unit(&mut rng), unit(&mut rng));
        let class = SatakeClass::new(vec![a, b], 0);
        let local = LocalData::for_base(a, b);
        for ((x, y), rep) in &reps {
            let lhs = class
                .sym_power(*x)
                .unwrap()
                .tensor(&class.sym_power(*y).unwrap())
                .unwrap()
                .trace();
            cg = cg.max((lhs - local.rep_trace(rep).unwrap()).norm());
        }
        let big = gl3_adjoint_class(&class, eta).unwrap();
        let lhs = big.trace() * big.trace().conj();
        adj = adj.max((lhs - local.rep_trace(&gl3).unwrap()).norm());
    }
    ensure(cg < 1e-10, format!("Clebsch-Gordan error {cg:e}"))?;
    ensure(adj < 1e-10, format!("GL(3) error {adj:e}"))?;
    Ok(format!(
        "max error {cg:.1e} (a, b <= 4), GL(3) 5+3+1 {adj:.1e}"
    ))
}

fn natural(stream: &lacuna::sources::EigenvalueStream, spec: SetSpec) -> f64 {
    let m = classify(stream, &spec).unwrap();
    m.count() as f64 / m.len() as f64
}

fn q8_sharpness() -> Outcome {
    let (stream, counts) = Q8Source::default_polynomial().eigenvalues(N).unwrap();
    let zero = natural(&stream, SetSpec::abs(SetMode::AbsEquals, 0.0));
    let two = natural(&stream, SetSpec::abs(SetMode::AbsEquals, 2.0));
    ensure(
        (0.73..=0.77).contains(&zero),
        format!("zero density {zero}"),
    )?;
    ensure(
        (0.23..=0.27).contains(&two),
        format!("|a| = 2 density {two}"),
    )?;
    let freq = counts.frequencies();
    for (f, want) in freq.iter().zip([0.125, 0.125, 0.75]) {
        ensure(
            (f - want).abs() <= 0.02,
            format!("Frobenius order frequencies {freq:?}"),
        )?;
    }
    Ok(format!(
        "zero {zero:.4}, |a| = 2 {two:.4}, orders (1,2,4) {:.4?}",
        freq
    ))
}

fn cm_curve() -> Outcome {
    let e = EllipticCurve::new(0, 0, 0, -1, 0).unwrap();
    let stream = e.eigenvalues(N);
    let zero_set = SetSpec::abs(SetMode::AbsEquals, 0.0);
    let membership = classify(&stream, &zero_set).unwrap();
    if let Some(p) = membership
        .primes
        .iter()
        .zip(&membership.member)
        .find(|(p, hit)| **hit != (*p % 4 == 3))
        .map(|(p, _)| *p)
    {
        return Err(format!("zero set and p = 3 mod 4 disagree at {p}"));
    }
    let density = membership.count() as f64 / membership.len() as f64;
    ensure(
        (0.48..=0.52).contains(&density),
        format!("zero density {density}"),
    )?;
    let args = BoundArgs {
        m: Some(4),
        gamma: Some("0".parse().unwrap()),
        ..Default::default()
    };
    let record = BoundRecord::evaluate(BoundKind::ThmC, &args).unwrap();
    let est = estimate_density(&stream, &zero_set, &EstimateOptions::default()).unwrap();
    let report = verify_bound(&stream.source_id, est, &zero_set, &record, 0.02).unwrap();
    ensure(
        report.consistent,
        format!("inconsistent with thm-c: gap {}", report.gap),
    )?;
    Ok(format!(
        "zero density {density:.4}, zero set = {{p = 3 mod 4}} on {} primes, upper bound {} gap {:+.4}",
        membership.len(),
        report.bound.value,
        report.gap
    ))
}

fn quadratic_character() -> Outcome {
    let chi = RealCharacter::new(4, 1).unwrap();
    ensure(
        chi.discriminant == -4,
        format!("discriminant {}", chi.discriminant),
    )?;
    let stream = chi.eigenvalues(N);
    let density = natural(
        &stream,
        SetSpec::new(SetMode::ValueNotEquals, Complex64::new(1.0, 0.0)),
    );
    let bound = 0.5;
    ensure(
        (density - bound).abs() <= 0.01,
        format!("density {density}"),
    )?;
    Ok(format!(
        "density of chi(p) != 1 is {density:.4}, propf(1) = 1/2"
    ))
}

fn serre_family() -> Outcome {
    let mut parts = Vec::new();
    for r in [2u64, 3, 5, 7] {
        let model = serre_group_model(r).unwrap();
        let zero = SetSpec::abs(SetMode::AbsEquals, 0.0);
        let exact = model_density(&model, &zero).unwrap();
        let want = serre_bound(r).unwrap();
        ensure(exact == want, format!("r = {r}: model density {exact}"))?;
        let n = 100_000;
        let stream = model.sample(n, 7 + r, &format!("serre:{r}"));
        let p = 1.0 - 1.0 / (r * r) as f64;
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        let sampled = natural(&stream, zero);
        let z = (sampled - p) / sigma;
        ensure(
            z.abs() <= 3.0,
            format!("r = {r}: sampled {sampled}, z = {z:.2}"),
        )?;
        parts.push(format!("r={r} {exact} (z {z:+.2})"));
    }
    Ok(parts.join(", "))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("pole orders", pole_orders),
        ("bound values", bound_values),
        ("corollary identity", corollary_identity),
        ("optimal c", optimal_c_oracle),
        ("Clebsch-Gordan traces", clebsch_gordan_oracle),
        ("Q8 sharpness", q8_sharpness),
        ("CM curve", cm_curve),
        ("quadratic character", quadratic_character),
        ("Serre family", serre_family),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
