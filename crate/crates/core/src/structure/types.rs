use crate::error::{Error, Result};
use crate::group::{
    cyclic, generalized_quaternion, isomorphic, primary_invariants, prime_factors, product_unbounded, FiniteGroup,
    MAX_TABLE_ORDER,
};
use crate::twin::CharType;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A direct factor of a type expression. Ordered cyclic before quaternion,
/// then by order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Factor {
    Cyclic(u64),
    Quaternion(u64),
}

impl Factor {
    pub fn order(self) -> u64 {
        match self {
            Factor::Cyclic(n) | Factor::Quaternion(n) => n,
        }
    }

    pub fn group(self) -> Result<FiniteGroup> {
        match self {
            Factor::Cyclic(n) => cyclic(n as usize),
            Factor::Quaternion(n) => generalized_quaternion(n as usize),
        }
    }
}

impl From<CharType> for Factor {
    fn from(t: CharType) -> Factor {
        match t {
            CharType::Cyclic(_) => Factor::Cyclic(t.order() as u64),
            CharType::Quaternion(_) => Factor::Quaternion(t.order() as u64),
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Cyclic(n) => write!(f, "C{n}"),
            Factor::Quaternion(n) => write!(f, "Q{n}"),
        }
    }
}

/// A product of cyclic and generalized quaternion groups with multiplicities.
/// Renders as `"C2^3 x C4 x Q8"`, or `"1"` when trivial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupType {
    factors: BTreeMap<Factor, u32>,
}

impl GroupType {
    pub fn trivial() -> GroupType {
        GroupType::default()
    }

    /// Trivial factors `C1` are dropped.
    pub fn push(&mut self, f: Factor, times: u32) {
        if f.order() > 1 && times > 0 {
            *self.factors.entry(f).or_insert(0) += times;
        }
    }

    pub fn from_factors<I: IntoIterator<Item = Factor>>(it: I) -> GroupType {
        let mut t = GroupType::trivial();
        for f in it {
            t.push(f, 1);
        }
        t
    }

    pub fn factors(&self) -> impl Iterator<Item = (Factor, u32)> + '_ {
        self.factors.iter().map(|(&f, &k)| (f, k))
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.factors.iter().try_fold(1u128, |acc, (f, &k)| acc.checked_mul((f.order() as u128).checked_pow(k)?))
    }

    /// The product group itself, up to [`MAX_TABLE_ORDER`] elements.
    pub fn build(&self) -> Result<FiniteGroup> {
        let order = self.order().unwrap_or(u128::MAX);
        if order > MAX_TABLE_ORDER as u128 {
            return Err(Error::SizeCap {
                what: "type group",
                order: order.min(usize::MAX as u128) as usize,
                cap: MAX_TABLE_ORDER,
            });
        }
        let mut g = cyclic(1)?;
        for (f, k) in self.factors() {
            let h = f.group()?;
            for _ in 0..k {
                g = product_unbounded(&g, &h)?;
            }
        }
        Ok(g.with_label(self.to_string()))
    }

    fn terms(&self) -> Vec<String> {
        self.factors.iter().map(|(f, &k)| if k == 1 { f.to_string() } else { format!("{f}^{k}") }).collect()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("1");
        }
        f.write_str(&self.terms().join(" x "))
    }
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn parse_term(term: &str, pos: usize) -> Result<(Factor, u32)> {
    let (base, exp) = match term.split_once('^') {
        Some((b, e)) => (b, e.parse::<u32>().map_err(|_| parse_err(pos, format!("bad exponent in {term:?}")))?),
        None => (term, 1),
    };
    let bad = || parse_err(pos, format!("unknown factor {term:?}"));
    if base.len() < 2 {
        return Err(bad());
    }
    let n: u64 = base[1..].parse().map_err(|_| bad())?;
    let f = match &base[..1] {
        "C" if n >= 1 => Factor::Cyclic(n),
        "Q" if n >= 8 && n.is_power_of_two() => Factor::Quaternion(n),
        _ => return Err(bad()),
    };
    Ok((f, exp))
}

/// Splits `"a x b x c"` into trimmed terms with their byte offsets.
fn split_terms(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for part in s.split(" x ") {
        let lead = part.len() - part.trim_start().len();
        out.push((start + lead, part.trim()));
        start += part.len() + 3;
    }
    out
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupType> {
        let s = s.trim();
        let mut t = GroupType::trivial();
        if s == "1" {
            return Ok(t);
        }
        for (pos, term) in split_terms(s) {
            let (f, k) = parse_term(term, pos)?;
            t.push(f, k);
        }
        Ok(t)
    }
}

/// `Z × G` with `Z` a left-zero semigroup of `left_zeros` elements.
/// Renders as `"2^m x G"`; `"2"` for one doubling, and `"2^0"` when the
/// whole semigroup is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdealType {
    pub left_zeros: u64,
    pub group: GroupType,
}

impl IdealType {
    pub fn new(left_zeros: u64, group: GroupType) -> IdealType {
        IdealType { left_zeros, group }
    }

    /// `log2` of the left-zero count, when it is a power of two.
    pub fn left_zero_exponent(&self) -> Option<u32> {
        self.left_zeros.is_power_of_two().then(|| self.left_zeros.trailing_zeros())
    }

    pub fn size(&self) -> Option<u128> {
        self.group.order()?.checked_mul(self.left_zeros as u128)
    }
}

impl fmt::Display for IdealType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.left_zero_exponent() {
            Some(0) => {}
            Some(1) => terms.push("2".to_string()),
            Some(m) => terms.push(format!("2^{m}")),
            None => terms.push(self.left_zeros.to_string()),
        }
        if !self.group.is_trivial() {
            terms.extend(self.group.terms());
        }
        if terms.is_empty() {
            return f.write_str("2^0");
        }
        f.write_str(&terms.join(" x "))
    }
}

impl FromStr for IdealType {
    type Err = Error;

    fn from_str(s: &str) -> Result<IdealType> {
        let terms = split_terms(s.trim());
        let mut left_zeros = 1u64;
        let mut group = GroupType::trivial();
        for (i, (pos, term)) in terms.into_iter().enumerate() {
            let first = term.chars().next().unwrap_or(' ');
            if first.is_ascii_digit() {
                if i != 0 {
                    return Err(parse_err(pos, "left-zero factor must come first"));
                }
                left_zeros = match term.split_once('^') {
                    Some(("2", e)) => {
                        let m: u32 = e.parse().map_err(|_| parse_err(pos, format!("bad exponent in {term:?}")))?;
                        1u64.checked_shl(m).filter(|_| m < 64).ok_or_else(|| parse_err(pos, "exponent too large"))?
                    }
                    Some(_) => return Err(parse_err(pos, format!("bad left-zero factor {term:?}"))),
                    None => term.parse().map_err(|_| parse_err(pos, format!("bad left-zero factor {term:?}")))?,
                };
                if left_zeros == 0 {
                    return Err(parse_err(pos, "empty left-zero factor"));
                }
            } else {
                let (f, k) = parse_term(term, pos)?;
                group.push(f, k);
            }
        }
        Ok(IdealType { left_zeros, group })
    }
}

macro_rules! string_serde {
    ($t:ty) => {
        impl Serialize for $t {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> Deserialize<'de> for $t {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

string_serde!(GroupType);
string_serde!(IdealType);

/// Partitions of `e` into non-increasing parts.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(e, e, &mut Vec::new(), &mut out);
    out
}

/// Every abelian group of order `n`, as cyclic prime-power factors.
fn abelian_types(n: u64) -> Vec<GroupType> {
    let mut out = vec![GroupType::trivial()];
    let mut rest = n;
    for p in prime_factors(n as usize) {
        let p = p as u64;
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        let mut next = Vec::new();
        for t in &out {
            for part in partitions(e) {
                let mut t = t.clone();
                for k in part {
                    t.push(Factor::Cyclic(p.pow(k)), 1);
                }
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Multisets of quaternion factors whose order divides `n`.
fn quaternion_choices(n: u64) -> Vec<Vec<Factor>> {
    let sizes: Vec<u64> = [8u64, 16, 32, 64].into_iter().filter(|s| n.is_multiple_of(*s)).collect();
    let mut out = Vec::new();
    fn go(sizes: &[u64], from: usize, n: u64, cur: &mut Vec<Factor>, out: &mut Vec<Vec<Factor>>) {
        out.push(cur.clone());
        for i in from..sizes.len() {
            if n.is_multiple_of(sizes[i]) {
                cur.push(Factor::Quaternion(sizes[i]));
                go(sizes, i, n / sizes[i], cur, out);
                cur.pop();
            }
        }
    }
    go(&sizes, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Writes `g` as a product of cyclic and generalized quaternion groups when it
/// is one. Abelian groups go through their primary invariants; otherwise every
/// split into quaternion factors times an abelian group is built and tested.
pub fn classify_group(g: &FiniteGroup) -> Option<GroupType> {
    let n = g.order() as u64;
    if g.is_abelian() {
        let inv = primary_invariants(g).ok()?;
        return Some(GroupType::from_factors(inv.into_iter().map(|q| Factor::Cyclic(q as u64))));
    }
    for qs in quaternion_choices(n) {
        if qs.is_empty() {
            continue;
        }
        let qorder: u64 = qs.iter().map(|f| f.order()).product();
        for mut t in abelian_types(n / qorder) {
            for &f in &qs {
                t.push(f, 1);
            }
            let Ok(h) = t.build() else { continue };
            if isomorphic(g, &h) {
                return Some(t);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::direct_product;

    #[test]
    fn render_and_parse() {
        let t: IdealType = "2 x C2 x C4 x C8".parse().unwrap();
        assert_eq!(t.left_zeros, 2);
        assert_eq!(t.to_string(), "2 x C2 x C4 x C8");
        let a: IdealType = "2^6 x C2^3".parse().unwrap();
        assert_eq!((a.left_zeros, a.group.to_string()), (64, "C2^3".to_string()));
        assert_eq!(IdealType::new(1, GroupType::trivial()).to_string(), "2^0");
        assert_eq!("2^0".parse::<IdealType>().unwrap(), IdealType::new(1, GroupType::trivial()));
        assert_eq!(GroupType::trivial().to_string(), "1");
        let q: GroupType = "Q8 x C2^3".parse().unwrap();
        assert_eq!(q.to_string(), "C2^3 x Q8");
        assert!("C2 x Q4".parse::<GroupType>().is_err());
        assert!("C2 x 2".parse::<IdealType>().is_err());
    }

    #[test]
    fn classify_small() {
        let c2 = cyclic(2).unwrap();
        let c4 = cyclic(4).unwrap();
        assert_eq!(classify_group(&direct_product(&c2, &c4).unwrap()).unwrap().to_string(), "C2 x C4");
        let q = generalized_quaternion(8).unwrap();
        let qc = direct_product(&q, &c2).unwrap();
        assert_eq!(classify_group(&qc).unwrap().to_string(), "C2 x Q8");
        assert_eq!(classify_group(&crate::group::dihedral(8).unwrap()), None);
        assert_eq!(classify_group(&cyclic(6).unwrap()).unwrap().to_string(), "C2 x C3");
    }

    #[test]
    fn abelian_type_count() {
        // five of order 16, two of order 9
        assert_eq!(abelian_types(16).len(), 5);
        assert_eq!(abelian_types(144).len(), 10);
    }
}
