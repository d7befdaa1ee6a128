use padic_fft::cyclotomic::{
    closed_form_step_degree, cyclotomic_polynomial, euler_phi, factorize, tower_step_degree,
};
use padic_fft::tower::build_root_of_unity;
use padic_fft::FactoredOrder;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Plain dense arithmetic over `F_p`, constant term first, independent of
/// the library.
mod plain {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1u128;
        let mut bb = b as u128 % p as u128;
        while e > 0 {
            if e & 1 == 1 {
                r = r * bb % p as u128;
            }
            bb = bb * bb % p as u128;
            e >>= 1;
        }
        b = r as u64;
        b
    }

    pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let f = trim(f.to_vec());
        let d = f.len() - 1;
        let lead_inv = inv(f[d], p);
        while r.len() > d {
            let k = r.len() - 1;
            let c = (r[k] as u128 * lead_inv as u128 % p as u128) as u64;
            for j in 0..=d {
                let t = (c as u128 * f[j] as u128 % p as u128) as u64;
                r[k - d + j] = (r[k - d + j] + p - t) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % p as u128;
            }
        }
        rem(&out.into_iter().map(|c| c as u64).collect::<Vec<_>>(), f, p)
    }

    /// `X^e mod f`.
    pub fn x_pow(e: u64, f: &[u64], p: u64) -> Vec<u64> {
        let mut result = rem(&[1], f, p);
        let mut base = rem(&[0, 1], f, p);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = mulmod(&result, &base, f, p);
            }
            base = mulmod(&base, &base, f, p);
            e >>= 1;
        }
        result
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn sub_one(a: &[u64], p: u64) -> Vec<u64> {
        let mut a = a.to_vec();
        if a.is_empty() {
            a.push(0);
        }
        a[0] = (a[0] + p - 1) % p;
        trim(a)
    }
}

fn brute_order(p: u64, s: u64) -> u64 {
    let mut x = p % s;
    let mut d = 1;
    while x != 1 % s {
        x = x * p % s;
        d += 1;
    }
    d
}

/// `f` has `X` of exact order `s` in every irreducible factor and degree
/// `ord_s(p)`, hence is irreducible.
fn assert_primitive_factor(p: u64, s: u64, f: &[u64]) {
    assert_eq!(f.last(), Some(&1), "monic");
    assert_eq!(f.len() as u64 - 1, brute_order(p, s), "degree for p={p} s={s}");
    assert_eq!(plain::x_pow(s, f, p), plain::rem(&[1], f, p), "f | X^s - 1");
    for (q, _) in factorize(s) {
        let g = plain::gcd(f, &plain::sub_one(&plain::x_pow(s / q, f, p), p), p);
        assert_eq!(g.len(), 1, "f shares a factor with X^(s/{q}) - 1 for p={p} s={s}");
    }
}

fn root(p: u64, s: u64, seed: u64) -> Vec<u64> {
    let order = FactoredOrder::new(s).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    build_root_of_unity(p, &order, &mut rng).unwrap().modulus().coeffs().to_vec()
}

#[test]
fn factors_for_many_orders() {
    for p in [3u64, 5, 7, 11, 19, 31] {
        for s in 1..=120u64 {
            if s % p == 0 || brute_order(p, s) > 24 {
                continue;
            }
            assert_primitive_factor(p, s, &root(p, s, 7));
        }
    }
}

#[test]
fn planner_lengths() {
    assert_primitive_factor(3, 104, &root(3, 104, 1));
    assert_primitive_factor(3, 12584, &root(3, 12584, 1));
    assert_primitive_factor(19, 104, &root(19, 104, 1));
    assert_primitive_factor(5, 24, &root(5, 24, 1));
}

#[test]
fn large_prime() {
    let p = 1_000_003;
    for s in [2u64, 3, 6, 7, 14, 18] {
        assert_primitive_factor(p, s, &root(p, s, 3));
    }
}

#[test]
fn same_seed_same_factor() {
    for (p, s) in [(3, 104), (19, 40), (7, 60)] {
        assert_eq!(root(p, s, 11), root(p, s, 11));
    }
}

#[test]
fn factor_divides_cyclotomic_polynomial() {
    for (p, s) in [(3u64, 104u64), (19, 5), (7, 60), (5, 24)] {
        let f = root(p, s, 2);
        let phi: Vec<u64> = cyclotomic_polynomial(s)
            .unwrap()
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        assert!(plain::rem(&phi, &f, p).is_empty());
    }
}

#[test]
fn rejects_bad_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let s = FactoredOrder::new(6).unwrap();
    assert!(build_root_of_unity(2, &s, &mut rng).is_err());
    assert!(build_root_of_unity(9, &s, &mut rng).is_err());
    assert!(build_root_of_unity(3, &s, &mut rng).is_err());
}

#[test]
fn cyclotomic_degrees_sum_to_s() {
    for s in 1..=400u64 {
        let mut total = 0;
        for d in (1..=s).filter(|d| s % d == 0) {
            let phi = cyclotomic_polynomial(d).unwrap();
            assert_eq!(phi.len() as u64 - 1, euler_phi(d));
            assert_eq!(phi.last(), Some(&1));
            total += phi.len() as u64 - 1;
        }
        assert_eq!(total, s);
    }
}

#[test]
fn cyclotomic_product_is_x_pow_minus_one() {
    for s in [12u64, 30, 36, 105] {
        let mut prod = vec![1i128];
        for d in (1..=s).filter(|d| s % d == 0) {
            let phi = cyclotomic_polynomial(d).unwrap();
            let mut next = vec![0i128; prod.len() + phi.len() - 1];
            for (i, a) in prod.iter().enumerate() {
                for (j, &b) in phi.iter().enumerate() {
                    next[i + j] += a * b as i128;
                }
            }
            prod = next;
        }
        let mut expected = vec![0i128; s as usize + 1];
        expected[0] = -1;
        expected[s as usize] = 1;
        assert_eq!(prod, expected);
    }
}

#[test]
fn step_degrees_telescope() {
    for p in [3u64, 5, 7, 11, 19] {
        for s in 2..=300u64 {
            if s % p == 0 {
                continue;
            }
            let mut a = 1;
            let mut product = 1;
            for (q, v) in factorize(s) {
                for level in 1..=v {
                    let step = tower_step_degree(p, a, q, level).unwrap();
                    let closed = closed_form_step_degree(p, a, q, level).unwrap();
                    if q != 2 {
                        assert_eq!(step, closed, "p={p} a={a} q={q} v={level}");
                    }
                    product *= step;
                }
                a *= q.pow(v);
            }
            assert_eq!(product, brute_order(p, s), "p={p} s={s}");
        }
    }
}
