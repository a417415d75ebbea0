mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsic::bench::{run_sweep, TrialConfig};
use rsic::oracle::{brute_nearest, hamming};
use rsic::{Decoder, Fe, Field, Poly, RsCode, Word};

fn code(q: u32, k: usize) -> RsCode {
    RsCode::new(Field::from_order(q).unwrap(), k).unwrap()
}

#[test]
fn encoding_definitions_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for q in [5u32, 7, 11, 13, 17] {
        let f = Field::prime(q).unwrap();
        for k in 1..f.n() {
            let c = RsCode::new(f.clone(), k).unwrap();
            let g = c.generator_matrix();
            for _ in 0..1000 / (f.n() - 1) + 1 {
                let m = random_message(&mut rng, &c);
                let by_matrix = g.transpose().apply(&m, &f).unwrap();
                let cw = c.encode(&m).unwrap();
                assert_eq!(cw.symbols(), &by_matrix[..]);
                assert!(c.is_codeword(&cw).unwrap());

                let g_m = c.interpolate(&cw).unwrap();
                assert!(g_m.degree().is_below(k));
                assert_eq!(c.evaluate(&g_m), cw);
                assert_eq!(c.message_of(&cw).unwrap(), m);

                let u = Word::new((0..c.n()).map(|_| Fe(rng.gen_range(0..q))).collect());
                assert_eq!(c.is_codeword(&u).unwrap(), c.is_codeword_by_degree(&u).unwrap());
            }
        }
    }
}

#[test]
fn lagrange_reconstruction() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for f in fields_up_to(17) {
        let c = RsCode::new(f.clone(), 1).unwrap();
        let basis: Vec<Poly> = (0..c.n()).map(|i| c.lagrange_basis(i).unwrap()).collect();
        for (i, b) in basis.iter().enumerate() {
            assert_eq!(*b, lagrange_product(&c, i), "{f:?} i={i}");
        }
        for _ in 0..50 {
            let u: Vec<Fe> = (0..c.n()).map(|_| Fe(rng.gen_range(0..f.order()))).collect();
            let sum = u
                .iter()
                .zip(&basis)
                .fold(Poly::zero(), |acc, (&ui, fi)| acc.add(&fi.scale(ui, &f), &f));
            assert_eq!(sum, c.interpolate(&u).unwrap());
        }
    }
}

#[test]
fn corrects_every_weight_up_to_tau() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for q in [7u32, 11, 13, 17] {
        let n = q as usize - 1;
        for k in 1..=n - 2 {
            let c = code(q, k);
            for _ in 0..500 {
                let t = rng.gen_range(0..=c.tau());
                let (sent, received) = corrupted_codeword(&mut rng, &c, t);
                let expected_error = received.sub(&sent, c.field()).unwrap();
                for d in Decoder::ALL {
                    let out = d.decode(&c, &received).unwrap_or_else(|e| {
                        panic!("{d} q={q} k={k} t={t}: {e}")
                    });
                    assert_eq!(out.codeword, sent, "{d} q={q} k={k}");
                    assert_eq!(out.error, expected_error);
                    assert_eq!(out.t, t);
                    assert!(out.locator.is_monic());

                    // the locator is prod (x - alpha^i) over the error positions
                    let f = c.field();
                    let expected_locator = (0..n)
                        .filter(|&i| !expected_error[i].is_zero())
                        .fold(Poly::one(), |acc, i| {
                            acc.mul(&Poly::from_coeffs(vec![f.neg(f.alpha_pow(i as i64)), Fe::ONE]), f)
                        });
                    assert_eq!(out.locator, expected_locator);

                    match d {
                        Decoder::Interp | Decoder::InterpPositions => {
                            assert_eq!(out.trace.rank_checks, t + 1);
                            assert_eq!(out.trace.det_checks, 0);
                        }
                        Decoder::Pgz => {
                            assert_eq!(out.trace.rank_checks, 0);
                            let expected = if t == 0 { 0 } else { c.tau() - t + 1 };
                            assert_eq!(out.trace.det_checks, expected);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn decoders_agree_including_beyond_capability() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for q in [7u32, 11, 13, 17] {
        let n = q as usize - 1;
        for trial in 0..1000 {
            let k = rng.gen_range(1..n);
            let c = code(q, k);
            // up to twice the capability, so a good share is uncorrectable
            let t = rng.gen_range(0..=(2 * c.tau() + 1).min(n));
            let (_, received) = corrupted_codeword(&mut rng, &c, t);
            let outcomes: Vec<_> = Decoder::ALL.iter().map(|d| d.decode(&c, &received)).collect();
            let summary: Vec<_> = outcomes
                .iter()
                .map(|o| o.as_ref().ok().map(|out| (&out.codeword, &out.error, out.t, &out.locator)))
                .collect();
            assert!(
                summary.iter().all(|s| *s == summary[0]),
                "q={q} k={k} t={t} trial={trial}: {outcomes:?}"
            );
            for out in outcomes.iter().flatten() {
                assert!(c.is_codeword(&out.codeword).unwrap());
                assert!(hamming(&out.codeword, &received).unwrap() <= c.tau());
            }
        }
    }
}

#[test]
fn beyond_capability_never_miscorrects() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (q, k) in [(7u32, 1usize), (7, 2), (7, 3), (11, 2), (11, 3), (13, 2), (13, 3)] {
        let c = code(q, k);
        for _ in 0..200 {
            let (_, received) = corrupted_codeword(&mut rng, &c, c.tau() + 1);
            let truth = brute_nearest(&c, &received).unwrap();
            for d in Decoder::ALL {
                match d.decode(&c, &received) {
                    Ok(out) => {
                        assert!(truth.distance <= c.tau());
                        assert_eq!(out.codeword, truth.nearest);
                    }
                    Err(_) => assert!(truth.distance > c.tau(), "{d} missed a correctable word"),
                }
            }
        }
    }
}

#[test]
fn oracle_agrees_within_capability() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (q, k) in [(5u32, 2usize), (7, 2), (7, 3), (11, 3), (13, 2)] {
        let c = code(q, k);
        for _ in 0..100 {
            let t = rng.gen_range(0..=c.tau());
            let (sent, received) = corrupted_codeword(&mut rng, &c, t);
            let truth = brute_nearest(&c, &received).unwrap();
            assert!(truth.unique);
            assert_eq!(truth.distance, t);
            assert_eq!(truth.nearest, sent);
        }
    }
}

#[test]
fn sweep_counters_follow_error_weight() {
    for (q, k) in [(7u32, 2usize), (13, 3), (17, 4)] {
        let c = code(q, k);
        let tau = c.tau();
        let cfg = TrialConfig::full_sweep(c, 30, 77);
        let report = run_sweep(&cfg).unwrap();
        let mut prev_rank = 0.0;
        let mut prev_det = 0.0;
        for t in 0..=tau {
            let interp = report.row(Decoder::Interp, t).unwrap();
            let pgz = report.row(Decoder::Pgz, t).unwrap();
            assert_eq!(interp.failures + pgz.failures, 0);
            assert_eq!(interp.rank_checks_mean(), (t + 1) as f64);
            let det = if t == 0 { 0 } else { tau - t + 1 };
            assert_eq!(pgz.det_checks_mean(), det as f64);
            if t > 0 {
                assert!(interp.rank_checks_mean() >= prev_rank);
            }
            // t = 0 is settled by the zero syndrome test alone
            if t > 1 {
                assert!(pgz.det_checks_mean() <= prev_det);
            }
            prev_rank = interp.rank_checks_mean();
            prev_det = pgz.det_checks_mean();
        }
        let at = |d, t| {
            let r = report.row(d, t).unwrap();
            r.rank_checks_mean() + r.det_checks_mean()
        };
        let cheaper = |a, b| (0..=tau).any(|t| at(a, t) < at(b, t));
        assert!(cheaper(Decoder::Pgz, Decoder::Interp));
        // with tau = 2 the counts are 1,2,3 against 0,2,1 and never cross
        assert_eq!(cheaper(Decoder::Interp, Decoder::Pgz), tau >= 3);
    }
}
