//! Constructions for the test corpus: `ℤ/n`, finite fields, full and upper
//! triangular matrix rings, and direct products.

use std::path::PathBuf;

use super::TableRing;
use crate::{Error, Guards};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    /// `ℤ/n`.
    Cyclic(usize),
    /// The field with `q` elements, `q` a prime power.
    Field(usize),
    /// `k × k` matrices over the base ring.
    Matrix(Box<RingSpec>, usize),
    /// Upper triangular `k × k` matrices over the base ring.
    Triangular(Box<RingSpec>, usize),
    Product(Vec<RingSpec>),
    File(PathBuf),
}

impl RingSpec {
    /// Parses `cyclic(n)`, `gf(q)`, `matrix(S,k)`, `triangular(S,k)`,
    /// `product(S,T,...)` and `file(path)`; `Zn` and `Fq` are shorthands.
    pub fn parse(text: &str) -> Result<RingSpec, Error> {
        let (spec, rest) = parse_spec(text.trim())?;
        if !rest.trim().is_empty() {
            return Err(Error::Invalid(format!("trailing input in ring spec: '{rest}'")));
        }
        Ok(spec)
    }
}

fn parse_spec(text: &str) -> Result<(RingSpec, &str), Error> {
    let text = text.trim_start();
    let name_len = text.find(|c: char| !c.is_ascii_alphanumeric()).unwrap_or(text.len());
    let (name, rest) = text.split_at(name_len);
    let bad = || Error::Invalid(format!("cannot parse ring spec at '{text}'"));
    let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some(n) = name.strip_prefix('Z').filter(|n| !n.is_empty()) {
        return Ok((RingSpec::Cyclic(number(n)?), rest));
    }
    if let Some(q) = name.strip_prefix('F').filter(|q| !q.is_empty()) {
        return Ok((RingSpec::Field(number(q)?), rest));
    }
    let rest = rest.trim_start().strip_prefix('(').ok_or_else(bad)?;
    match name {
        "cyclic" | "gf" => {
            let close = rest.find(')').ok_or_else(bad)?;
            let n = number(&rest[..close])?;
            let spec = if name == "cyclic" { RingSpec::Cyclic(n) } else { RingSpec::Field(n) };
            Ok((spec, &rest[close + 1..]))
        }
        "file" => {
            let close = rest.rfind(')').ok_or_else(bad)?;
            Ok((RingSpec::File(PathBuf::from(rest[..close].trim())), &rest[close + 1..]))
        }
        "matrix" | "triangular" => {
            let (base, rest) = parse_spec(rest)?;
            let rest = rest.trim_start().strip_prefix(',').ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            let k = number(&rest[..close])?;
            let spec = if name == "matrix" {
                RingSpec::Matrix(Box::new(base), k)
            } else {
                RingSpec::Triangular(Box::new(base), k)
            };
            Ok((spec, &rest[close + 1..]))
        }
        "product" => {
            let mut parts = Vec::new();
            let mut rest = rest;
            loop {
                let (part, r) = parse_spec(rest)?;
                parts.push(part);
                let r = r.trim_start();
                if let Some(r) = r.strip_prefix(',') {
                    rest = r;
                } else if let Some(r) = r.strip_prefix(')') {
                    return Ok((RingSpec::Product(parts), r));
                } else {
                    return Err(bad());
                }
            }
        }
        _ => Err(bad()),
    }
}

fn checked_order(n: Option<usize>, guards: &Guards) -> Result<usize, Error> {
    match n {
        Some(n) if n <= guards.order => Ok(n),
        _ => Err(Error::Guard(format!("ring order exceeds order guard {}", guards.order))),
    }
}

/// Builds tables from element-level operations on indices.
fn from_ops(
    name: String,
    n: usize,
    add: impl Fn(usize, usize) -> usize,
    mul: impl Fn(usize, usize) -> usize,
    one: usize,
    labels: Vec<String>,
    guards: &Guards,
) -> Result<TableRing, Error> {
    let add_t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect();
    let mul_t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    TableRing::from_tables(name, &add_t, &mul_t, one, Some(labels), guards)
}

/// Digits of `x` in base `b`, least significant first.
fn digits(mut x: usize, b: usize, len: usize) -> Vec<usize> {
    (0..len)
        .map(|_| {
            let d = x % b;
            x /= b;
            d
        })
        .collect()
}

fn undigits(ds: &[usize], b: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * b + d)
}

fn cyclic(n: usize, guards: &Guards) -> Result<TableRing, Error> {
    if n < 2 {
        return Err(Error::Invalid("cyclic rings need n ≥ 2".into()));
    }
    checked_order(Some(n), guards)?;
    let labels = (0..n).map(|i| i.to_string()).collect();
    from_ops(format!("Z{n}"), n, |a, b| (a + b) % n, |a, b| (a * b) % n, 1, labels, guards)
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
    let p = (2..=q).find(|p| q % p == 0)?;
    let mut e = 0;
    let mut m = q;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    (m == 1).then_some((p, e))
}

/// Remainder of `a` modulo a monic `m` over `F_p` (coefficients low first).
fn poly_mod(mut a: Vec<usize>, m: &[usize], p: usize) -> Vec<usize> {
    let dm = m.len() - 1;
    while a.len() > dm {
        let c = a.pop().unwrap();
        if c != 0 {
            let base = a.len() - dm;
            for (i, &mi) in m[..dm].iter().enumerate() {
                a[base + i] = (a[base + i] + (p - c) * mi) % p;
            }
        }
    }
    a
}

fn is_irreducible(m: &[usize], p: usize) -> bool {
    let e = m.len() - 1;
    for d in 1..=e / 2 {
        for code in 0..p.pow(d as u32) {
            let mut f = digits(code, p, d);
            f.push(1);
            if poly_mod(m.to_vec(), &f, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn field(q: usize, guards: &Guards) -> Result<TableRing, Error> {
    let (p, e) = prime_power(q).ok_or_else(|| Error::Invalid(format!("{q} is not a prime power")))?;
    checked_order(Some(q), guards)?;
    if e == 1 {
        return Ok(cyclic(p, guards)?.with_name(format!("F{p}")));
    }
    let modulus = (0..p.pow(e as u32))
        .map(|code| {
            let mut m = digits(code, p, e);
            m.push(1);
            m
        })
        .find(|m| is_irreducible(m, p))
        .expect("irreducible polynomials exist in every degree");
    let add = |a: usize, b: usize| {
        let (x, y) = (digits(a, p, e), digits(b, p, e));
        undigits(&x.iter().zip(&y).map(|(s, t)| (s + t) % p).collect::<Vec<_>>(), p)
    };
    let mul = |a: usize, b: usize| {
        let (x, y) = (digits(a, p, e), digits(b, p, e));
        let mut prod = vec![0; 2 * e - 1];
        for (i, s) in x.iter().enumerate() {
            for (j, t) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + s * t) % p;
            }
        }
        undigits(&poly_mod(prod, &modulus, p), p)
    };
    let labels = (0..q)
        .map(|a| {
            let ds = digits(a, p, e);
            let terms: Vec<String> = ds
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| match (i, c) {
                    (0, c) => c.to_string(),
                    (1, 1) => "a".to_string(),
                    (1, c) => format!("{c}a"),
                    (i, 1) => format!("a^{i}"),
                    (i, c) => format!("{c}a^{i}"),
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    from_ops(format!("F{q}"), q, add, mul, 1, labels, guards)
}

/// Matrices over `base` supported on the given positions of a `k × k` grid.
fn matrix_like(base: &TableRing, k: usize, positions: Vec<(usize, usize)>, name: String, guards: &Guards) -> Result<TableRing, Error> {
    let b = base.order();
    let n = checked_order(u32::try_from(positions.len()).ok().and_then(|len| b.checked_pow(len)), guards)?;
    let slot = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let decode: Vec<Vec<usize>> = (0..n).map(|x| digits(x, b, positions.len())).collect();
    let add = |x: usize, y: usize| {
        let s: Vec<usize> = decode[x].iter().zip(&decode[y]).map(|(&u, &v)| base.add(u, v)).collect();
        undigits(&s, b)
    };
    let mul = |x: usize, y: usize| {
        let (a, c) = (&decode[x], &decode[y]);
        let entries: Vec<usize> = positions
            .iter()
            .map(|&(i, j)| {
                (0..k).fold(0, |acc, l| match (slot(i, l), slot(l, j)) {
                    (Some(s), Some(t)) => base.add(acc, base.mul(a[s], c[t])),
                    _ => acc,
                })
            })
            .collect();
        undigits(&entries, b)
    };
    let one_entries: Vec<usize> = positions.iter().map(|&(i, j)| if i == j { base.one() } else { 0 }).collect();
    let one = undigits(&one_entries, b);
    let labels = decode
        .iter()
        .map(|ds| {
            let rows: Vec<String> = (0..k)
                .map(|i| {
                    let row: Vec<String> =
                        (0..k).map(|j| slot(i, j).map_or("0".to_string(), |s| base.label(ds[s]))).collect();
                    format!("[{}]", row.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    from_ops(name, n, add, mul, one, labels, guards)
}

/// Direct product with componentwise operations, named `AxB`.
pub fn product_ring(parts: &[TableRing], guards: &Guards) -> Result<TableRing, Error> {
    let sizes: Vec<usize> = parts.iter().map(TableRing::order).collect();
    let n = checked_order(sizes.iter().try_fold(1usize, |acc, &s| acc.checked_mul(s)), guards)?;
    let decode = |mut x: usize| -> Vec<usize> {
        sizes
            .iter()
            .map(|&s| {
                let d = x % s;
                x /= s;
                d
            })
            .collect()
    };
    let encode = |ds: &[usize]| ds.iter().zip(&sizes).rev().fold(0, |acc, (&d, &s)| acc * s + d);
    let comps: Vec<Vec<usize>> = (0..n).map(decode).collect();
    let add = |x: usize, y: usize| {
        let s: Vec<usize> = parts.iter().enumerate().map(|(i, r)| r.add(comps[x][i], comps[y][i])).collect();
        encode(&s)
    };
    let mul = |x: usize, y: usize| {
        let s: Vec<usize> = parts.iter().enumerate().map(|(i, r)| r.mul(comps[x][i], comps[y][i])).collect();
        encode(&s)
    };
    let one = encode(&parts.iter().map(TableRing::one).collect::<Vec<_>>());
    let labels = comps
        .iter()
        .map(|c| {
            let items: Vec<String> = parts.iter().zip(c).map(|(r, &d)| r.label(d)).collect();
            format!("({})", items.join(","))
        })
        .collect();
    let name = parts.iter().map(TableRing::name).collect::<Vec<_>>().join("x");
    from_ops(name, n, add, mul, one, labels, guards)
}

/// Builds and validates a ring from a spec.
pub fn build_ring(spec: &RingSpec, guards: &Guards) -> Result<TableRing, Error> {
    match spec {
        RingSpec::Cyclic(n) => cyclic(*n, guards),
        RingSpec::Field(q) => field(*q, guards),
        RingSpec::Matrix(base, k) => {
            let base = build_ring(base, guards)?;
            let positions = (0..*k).flat_map(|i| (0..*k).map(move |j| (i, j))).collect();
            matrix_like(&base, *k, positions, format!("M{k}({})", base.name()), guards)
        }
        RingSpec::Triangular(base, k) => {
            let base = build_ring(base, guards)?;
            let positions = (0..*k).flat_map(|i| (i..*k).map(move |j| (i, j))).collect();
            matrix_like(&base, *k, positions, format!("T{k}({})", base.name()), guards)
        }
        RingSpec::Product(parts) => {
            if parts.is_empty() {
                return Err(Error::Invalid("product of no rings".into()));
            }
            let rings = parts.iter().map(|p| build_ring(p, guards)).collect::<Result<Vec<_>, _>>()?;
            product_ring(&rings, guards)
        }
        RingSpec::File(path) => TableRing::load(path, guards),
    }
}
