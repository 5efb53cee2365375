//! Library results against independent brute-force computations.

use std::collections::BTreeSet;

use cpcode::analysis::{bound_chain, falsely_decodable_stats, EvaluationCode, StatsMode};
use cpcode::channel::ErrorPattern;
use cpcode::codebook::{cp_encode, grs_encode, rs_encode_dim, Character};
use cpcode::list::{gs_decode, gs_params, list_decode, s_zero, ListBackend};
use cpcode::unique::{cp_decode, hard_decision, rs_unique_decode};
use cpcode::{CodeParams, Error, Field, FieldCodeword, MessageSpace, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn eval(field: &Field, coeffs: &[u32], a: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, a), c))
}

/// All coefficient vectors of length `dim` in odometer order.
fn all_messages(q: u32, dim: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut d = vec![0u32; dim];
    loop {
        out.push(d.clone());
        let Some(i) = d.iter().position(|&x| x + 1 < q) else { return out };
        d[i] += 1;
        d[..i].iter_mut().for_each(|x| *x = 0);
    }
}

fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn brute_list(field: &Field, alphas: &[u32], y: &[u32], dim: usize, t: usize) -> Vec<Vec<u32>> {
    let mut out: Vec<Vec<u32>> = all_messages(field.order(), dim)
        .into_iter()
        .filter(|m| alphas.iter().zip(y).filter(|&(&a, &yi)| eval(field, m, a) != yi).count() <= t)
        .map(trimmed)
        .collect();
    out.sort();
    out
}

#[test]
fn cp_equals_character_of_grs() {
    for k in 1..=3 {
        let p = CodeParams::new(7, k).unwrap();
        for f in MessageSpace::Fp.enumerate(&p) {
            let g = Polynomial::from_coeffs(p.field(), f.coeffs().iter().skip(1).copied().collect()).unwrap();
            let cp = cp_encode(&f, &p).unwrap();
            let grs = grs_encode(&g, &p).unwrap();
            for (z, &c) in cp.0.iter().zip(&grs.0) {
                let want = num_complex::Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * c as f64 / 7.0);
                assert!((z - want).norm() < 1e-12);
            }
            assert_eq!(hard_decision(&cp, &p).unwrap(), grs.0);
        }
    }
}

#[test]
fn message_space_sizes() {
    for q in [4u32, 7, 8, 9] {
        let p_char = Field::with_order(q).unwrap().characteristic();
        for k in 1..=4usize {
            let e = (k - k / p_char as usize) as u32;
            assert_eq!(MessageSpace::Fp.size_for(q, p_char, k), (q as u128).pow(e));
            if k > q as usize - 1 {
                continue;
            }
            let params = CodeParams::new(q, k).unwrap();
            let count = MessageSpace::Fp.enumerate(&params).count() as u128;
            assert_eq!(count, (q as u128).pow(e), "q={q} k={k}");
            assert_eq!(MessageSpace::Fp.size(&params), count);
        }
    }
}

fn codeword_set(params: &CodeParams) -> BTreeSet<Vec<(i64, i64)>> {
    MessageSpace::Fp
        .enumerate(params)
        .map(|f| {
            cp_encode(&f, params)
                .unwrap()
                .0
                .iter()
                .map(|z| ((z.re * 1e9).round() as i64, (z.im * 1e9).round() as i64))
                .collect()
        })
        .collect()
}

#[test]
fn every_nontrivial_character_gives_the_same_codebook() {
    let base = CodeParams::new(5, 2).unwrap();
    let reference = codeword_set(&base);
    assert_eq!(reference.len(), 25);
    for beta in 1..5 {
        let twisted = base.with_character(Character::with_multiplier(base.field(), beta).unwrap()).unwrap();
        assert_eq!(codeword_set(&twisted), reference, "beta = {beta}");
    }
}

#[test]
fn unique_decoder_matches_nearest_codeword_search() {
    let params = CodeParams::new(11, 4).unwrap();
    let f = params.field().clone();
    let radius = (params.d() - 1) / 2;
    let book: Vec<(Vec<u32>, Vec<u32>)> = MessageSpace::Fp
        .enumerate(&params)
        .map(|m| {
            let word = params.alphas().iter().map(|&a| eval(&f, m.coeffs(), a)).collect();
            (m.into_coeffs(), word)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut decoded, mut failed) = (0, 0);
    for i in 0..300 {
        let y: Vec<u32> = if i % 3 == 0 {
            (0..10).map(|_| rng.gen_range(0..11)).collect()
        } else {
            let (_, c) = &book[rng.gen_range(0..book.len())];
            let w = rng.gen_range(0..=radius + 2);
            ErrorPattern::sample(10, w, 11, &mut rng).unwrap().apply_field(&FieldCodeword(c.clone()), &params).0
        };
        let near: Vec<&Vec<u32>> = book
            .iter()
            .filter(|(_, c)| c.iter().zip(&y).filter(|(a, b)| a != b).count() <= radius)
            .map(|(m, _)| m)
            .collect();
        assert!(near.len() <= 1);
        let word = cpcode::codebook::to_complex(&FieldCodeword(y), &params);
        match (cp_decode(&word, &params), near.first()) {
            (Ok(r), Some(m)) => {
                assert_eq!(r.message.coeffs(), m.as_slice());
                decoded += 1;
            }
            (Err(Error::DecodingFailure(_)), None) => failed += 1,
            (got, want) => panic!("decoder {got:?} vs oracle {want:?}"),
        }
    }
    assert!(decoded > 100 && failed > 50);
}

#[test]
fn rs_unique_decoder_on_extension_field() {
    let params = CodeParams::new(9, 4).unwrap();
    let f = params.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let m: Vec<u32> = (0..4).map(|_| rng.gen_range(0..9)).collect();
        let c = FieldCodeword(params.alphas().iter().map(|&a| eval(&f, &m, a)).collect());
        let w = rng.gen_range(0..=2);
        let y = ErrorPattern::sample(8, w, 9, &mut rng).unwrap().apply_field(&c, &params);
        let got = rs_unique_decode(&y, 4, &params).unwrap();
        assert_eq!(got.coeffs(), trimmed(m).as_slice());
    }
}

#[test]
fn gs_on_extension_fields_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for q in [8u32, 9] {
        let params = CodeParams::new(q, 2).unwrap();
        let n = params.n();
        for s in 1..=2 {
            let t = gs_params(n, 2, s).unwrap().t;
            for _ in 0..100 {
                let y: Vec<u32> = (0..n).map(|_| rng.gen_range(0..q)).collect();
                let got: Vec<Vec<u32>> = gs_decode(&FieldCodeword(y.clone()), s, &params, 2)
                    .unwrap()
                    .into_iter()
                    .map(|g| g.into_coeffs())
                    .collect();
                assert_eq!(got, brute_list(params.field(), params.alphas(), &y, 2, t as usize), "q={q} s={s}");
            }
        }
    }
}

#[test]
fn covering_backend_matches_brute_force_at_large_multiplicity() {
    // large s0 makes interpolation slow here; the covering backend stays exact
    let params = CodeParams::new(13, 5).unwrap();
    let (s0, t) = s_zero(12, 4).unwrap();
    let f = params.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..20 {
        let m: Vec<u32> = (0..4).map(|_| rng.gen_range(0..13)).collect();
        let c = FieldCodeword(params.alphas().iter().map(|&a| eval(&f, &m, a)).collect());
        let y = ErrorPattern::sample(12, t, 13, &mut rng).unwrap().apply_field(&c, &params);
        let got: Vec<Vec<u32>> = list_decode(&y, s0, &params, 4, ListBackend::ErasureCovering)
            .unwrap()
            .into_iter()
            .map(|g| g.into_coeffs())
            .collect();
        let want = brute_list(&f, params.alphas(), &y.0, 4, t);
        assert!(want.contains(&trimmed(m)));
        assert_eq!(got, want);
    }
}

#[test]
fn rs_encoder_is_polynomial_evaluation() {
    let params = CodeParams::new(16, 3).unwrap();
    let f = params.field().clone();
    for m in all_messages(16, 2).into_iter().step_by(7) {
        let p = Polynomial::from_coeffs(&f, m.clone()).unwrap();
        let w = rs_encode_dim(&p, &params, 3).unwrap();
        let want: Vec<u32> = params.alphas().iter().map(|&a| eval(&f, &m, a)).collect();
        assert_eq!(w.0, want);
    }
}

#[test]
fn average_list_size_of_the_mds_code_is_below_m1() {
    let params = CodeParams::new(7, 2).unwrap();
    let code = EvaluationCode::rs(&params, 2);
    let t = gs_params(6, 2, 1).unwrap().t as usize;
    for w in 0..=6 {
        let l = falsely_decodable_stats(w, t, &code, StatsMode::Exact).unwrap().l_bar;
        let m1 = bound_chain(w, t, 6, 2, 7).unwrap().m1;
        assert!(l <= m1, "w={w}: {l} > {m1}");
    }
}
