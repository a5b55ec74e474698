use super::{FiniteGroup, MAX_ORDER, MAX_TABLE_ORDER};
use crate::error::{Error, Result};

fn check_cap(what: &'static str, order: usize, cap: usize) -> Result<()> {
    if order > cap {
        return Err(Error::SizeCap { what, order, cap });
    }
    Ok(())
}

/// `Z/nZ`
pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidArgument("cyclic group of order 0".into()));
    }
    check_cap("cyclic group", n, MAX_ORDER)?;
    let names = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_fn(format!("C{n}"), n, names, |i, j| (i + j) % n)
}

/// Dihedral group of order `two_n`, elements `a^i b^j` stored at `i + n*j`.
pub fn dihedral(two_n: usize) -> Result<FiniteGroup> {
    if two_n == 0 || two_n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("dihedral order {two_n} must be even and positive")));
    }
    check_cap("dihedral group", two_n, MAX_ORDER)?;
    let n = two_n / 2;
    let names = (0..two_n)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            let a = match i {
                0 => String::new(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            };
            match (a.is_empty(), j) {
                (true, 0) => "e".to_string(),
                (_, 0) => a,
                (_, _) => format!("{a}b"),
            }
        })
        .collect();
    FiniteGroup::from_fn(format!("D{two_n}"), two_n, names, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        // b a^k = a^-k b
        let k = if j == 1 { (n - k) % n } else { k };
        (i + k) % n + n * ((j + l) % 2)
    })
}

/// Generalized quaternion group `<x, y | x^2 = y^(N/4), xyx^-1 = y^-1>` of
/// order `N`; `y^i x^j` is stored at `i + (N/2) j`.
pub fn generalized_quaternion(two_pow: usize) -> Result<FiniteGroup> {
    if ![8, 16, 32, 64].contains(&two_pow) {
        return Err(Error::InvalidArgument(format!("no generalized quaternion group of order {two_pow}")));
    }
    let half = two_pow / 2;
    let names = (0..two_pow)
        .map(|e| {
            if two_pow == 8 {
                ["1", "i", "-1", "-i", "j", "k", "-j", "-k"][e].to_string()
            } else {
                let (i, j) = (e % half, e / half);
                match (i, j) {
                    (0, 0) => "1".to_string(),
                    (0, 1) => "x".to_string(),
                    (_, 0) => format!("y^{i}"),
                    _ => format!("y^{i}x"),
                }
            }
        })
        .collect();
    FiniteGroup::from_fn(format!("Q{two_pow}"), two_pow, names, |a, b| {
        let (i, j) = (a % half, a / half);
        let (k, l) = (b % half, b / half);
        let k = if j == 1 { (half - k) % half } else { k };
        let mut e = i + k;
        if j + l == 2 {
            e += two_pow / 4;
        }
        e % half + half * ((j + l) % 2)
    })
}

/// Even permutations of four points, lexicographic; `p*q` applies `q` first.
pub fn alternating4() -> Result<FiniteGroup> {
    let mut perms: Vec<[usize; 4]> = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (0..i).all(|j| p[i] != p[j]));
                    if distinct && inversions(&p).is_multiple_of(2) {
                        perms.push(p);
                    }
                }
            }
        }
    }
    let index = |p: [usize; 4]| perms.iter().position(|&q| q == p).expect("closed");
    let names = perms.iter().map(cycle_notation).collect();
    FiniteGroup::from_fn("A4", 12, names, |x, y| {
        let (p, q) = (perms[x], perms[y]);
        index([p[q[0]], p[q[1]], p[q[2]], p[q[3]]])
    })
}

fn inversions(p: &[usize; 4]) -> usize {
    (0..4).map(|i| (i + 1..4).filter(|&j| p[i] > p[j]).count()).sum()
}

fn cycle_notation(p: &[usize; 4]) -> String {
    let mut seen = [false; 4];
    let mut out = String::new();
    for s in 0..4 {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut t = p[s];
        while t != s {
            seen[t] = true;
            cyc.push(t);
            t = p[t];
        }
        let body: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// `g x h`; `(a, b)` is stored at `a |h| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    check_cap("direct product", g.order() * h.order(), MAX_ORDER)?;
    product_unbounded(g, h)
}

/// Direct product allowed up to the table limit; used for comparison groups.
pub(crate) fn product_unbounded(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, k) = (g.order(), h.order());
    check_cap("direct product", m * k, MAX_TABLE_ORDER)?;
    let names = (0..m * k).map(|x| format!("({},{})", g.name(x / k), h.name(x % k))).collect();
    FiniteGroup::from_fn(format!("{}x{}", g.label(), h.label()), m * k, names, |x, y| {
        g.mul(x / k, y / k) * k + h.mul(x % k, y % k)
    })
}

/// `g^k` (the trivial group for `k = 0`).
pub fn power(g: &FiniteGroup, k: usize) -> Result<FiniteGroup> {
    if k == 0 {
        return cyclic(1);
    }
    let mut out = g.clone();
    for _ in 1..k {
        out = product_unbounded(&out, g)?;
    }
    Ok(out)
}

const CATALOG: &[&str] = &[
    "C1",
    "C2",
    "C3",
    "C4",
    "C2xC2",
    "C5",
    "C6",
    "D6",
    "C7",
    "C8",
    "C2xC4",
    "C2xC2xC2",
    "D8",
    "Q8",
    "C9",
    "C3xC3",
    "C10",
    "D10",
    "C11",
    "C12",
    "C2xC6",
    "D12",
    "A4",
    "C13",
    "C14",
    "D14",
    "C15",
    "C16",
    "C2xC8",
    "C4xC4",
    "C2xC2xC4",
    "C2xC2xC2xC2",
    "D16",
    "Q16",
    "C2xD8",
    "C2xQ8",
];

/// Named groups of the built-in catalog with order at most `max_order`,
/// ordered by size.
pub fn catalog_up_to(max_order: usize) -> Vec<FiniteGroup> {
    CATALOG
        .iter()
        .map(|s| crate::spec::parse_spec(s).expect("catalog specs parse"))
        .filter(|g| g.order() <= max_order)
        .collect()
}
