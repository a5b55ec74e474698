use super::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::twin::TwinFamily;
use std::collections::BTreeSet;

pub const MAX_END_SIZE: usize = 4096;
pub const MAX_WREATH_SIZE: usize = 1_000_000;

/// An equivariant self-map of `T_K`: `images[i]` is the index of `f(sets[i])`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EndoMap {
    pub images: Vec<u32>,
}

impl EndoMap {
    /// Orbits of `T_K` met by the image.
    pub fn image_orbits(&self, family: &TwinFamily) -> BTreeSet<usize> {
        self.images.iter().map(|&i| family.orbit_of[i as usize]).collect()
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &EndoMap) -> EndoMap {
        EndoMap { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }
}

/// `End(T_K)` with its maps listed in the order of the semigroup elements.
#[derive(Debug)]
pub struct EndSemigroup {
    pub family: TwinFamily,
    pub maps: Vec<EndoMap>,
    /// Product `a * b = a ∘ b`.
    pub semigroup: FiniteSemigroup,
}

impl EndSemigroup {
    pub fn size(&self) -> usize {
        self.maps.len()
    }

    /// Semigroup element of a map given by its values on the orbit
    /// representatives.
    fn code(&self, m: &EndoMap) -> u32 {
        let t = self.family.sets.len() as u32;
        self.family.orbits.iter().rev().fold(0, |acc, o| acc * t + m.images[o[0]])
    }

    pub fn index_of(&self, m: &EndoMap) -> usize {
        self.code(m) as usize
    }
}

/// All equivariant maps `T_K -> T_K`, one per choice of images for the orbit
/// representatives, each checked for equivariance under `Stab(K)`.
pub fn end_tk(g: &FiniteGroup, family: &TwinFamily) -> Result<EndSemigroup> {
    let t = family.sets.len();
    let r = family.orbit_count();
    let size = (t as u128).checked_pow(r as u32).filter(|&s| s <= MAX_END_SIZE as u128);
    let Some(size) = size else {
        return Err(Error::SizeCap { what: "End(T_K)", order: t, cap: MAX_END_SIZE });
    };
    let size = size as usize;
    let stab: Vec<usize> = family.cogroup.stab.iter().collect();
    let idx = |a| family.index_of(a).expect("Stab(K) preserves T_K");
    // For each set, its orbit and some x with x·rep = set.
    let mut carrier = vec![(usize::MAX, 0usize); t];
    for (o, orbit) in family.orbits.iter().enumerate() {
        let rep = family.sets[orbit[0]];
        for &x in &stab {
            let i = idx(g.shift(x, rep));
            if carrier[i].0 == usize::MAX {
                carrier[i] = (o, x);
            }
        }
    }
    let mut maps = Vec::with_capacity(size);
    for code in 0..size {
        let mut c = code;
        let rep_images: Vec<usize> = (0..r)
            .map(|_| {
                let v = c % t;
                c /= t;
                v
            })
            .collect();
        let images: Vec<u32> = (0..t)
            .map(|i| {
                let (o, x) = carrier[i];
                idx(g.shift(x, family.sets[rep_images[o]])) as u32
            })
            .collect();
        for &x in &stab {
            for i in 0..t {
                let xi = idx(g.shift(x, family.sets[i]));
                let fx = idx(g.shift(x, family.sets[images[i] as usize]));
                if images[xi] as usize != fx {
                    return Err(Error::Violation(format!("endomorphism {code} of T_K is not equivariant at x = {x}")));
                }
            }
        }
        maps.push(EndoMap { images });
    }
    let reps: Vec<usize> = family.orbits.iter().map(|o| o[0]).collect();
    let mut table = Vec::with_capacity(size * size);
    for a in &maps {
        for b in &maps {
            let code = reps.iter().rev().fold(0u32, |acc, &i| acc * t as u32 + a.images[b.images[i] as usize]);
            table.push(code);
        }
    }
    let semigroup = FiniteSemigroup::from_table_sampled(size, table, 0xe2d)?;
    Ok(EndSemigroup { family: family.clone(), maps, semigroup })
}

/// `H ≀ A^A` on `|H|^a · a^a` elements. Element `(h, f)` sits at
/// `f_code · |H|^a + h_code` with both codes little-endian over `A`.
pub fn wreath_product(h: &FiniteGroup, a: usize) -> Result<FiniteSemigroup> {
    if a == 0 {
        return Err(Error::InvalidArgument("wreath product over an empty set".into()));
    }
    let hn = h.order();
    let size = (hn as u128)
        .checked_pow(a as u32)
        .and_then(|x| x.checked_mul((a as u128).checked_pow(a as u32)?))
        .filter(|&s| s <= MAX_WREATH_SIZE as u128);
    let Some(size) = size else {
        return Err(Error::SizeCap { what: "wreath product", order: hn, cap: MAX_WREATH_SIZE });
    };
    let hpow = hn.pow(a as u32);
    let h = h.clone();
    let digits = move |mut v: usize, base: usize| -> Vec<usize> {
        (0..a)
            .map(|_| {
                let d = v % base;
                v /= base;
                d
            })
            .collect()
    };
    FiniteSemigroup::from_fn(size as usize, move |x, y| {
        let (x, y) = (x as usize, y as usize);
        let (hx, fx) = (digits(x % hpow, hn), digits(x / hpow, a));
        let (hy, fy) = (digits(y % hpow, hn), digits(y / hpow, a));
        let mut hc = 0;
        let mut fc = 0;
        for alpha in (0..a).rev() {
            hc = hc * hn + h.mul(hx[fy[alpha]], hy[alpha]);
            fc = fc * a + fx[fy[alpha]];
        }
        (fc * hpow + hc) as u32
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, generalized_quaternion};
    use crate::semigroup::{semigroup_isomorphic, IsoVerdict};
    use crate::twin::{maximal_2cogroups, twin_sets_for};

    #[test]
    fn quaternion_end_count() {
        let g = generalized_quaternion(8).unwrap();
        let k = maximal_2cogroups(&g).unwrap().into_iter().find(|k| k.members.len() == 1).unwrap();
        let fam = twin_sets_for(&g, &k).unwrap();
        let end = end_tk(&g, &fam).unwrap();
        assert_eq!(end.size(), 256);
        for (i, m) in end.maps.iter().enumerate() {
            assert_eq!(end.index_of(m), i);
        }
    }

    #[test]
    fn wreath_sizes() {
        let c2 = cyclic(2).unwrap();
        assert_eq!(wreath_product(&c2, 2).unwrap().size(), 16);
        let w = wreath_product(&c2, 1).unwrap();
        let s = FiniteSemigroup::from_group(&c2);
        assert!(semigroup_isomorphic(&w, &s, 1000).unwrap().is_yes());
    }

    #[test]
    fn end_of_two_orbit_act_is_wreath() {
        let g = crate::spec::parse_spec("D8").unwrap();
        let fam = maximal_2cogroups(&g)
            .unwrap()
            .iter()
            .map(|k| twin_sets_for(&g, k).unwrap())
            .find(|f| (f.char_order, f.orbit_count()) == (2, 2))
            .expect("D8 has a cogroup with H(K) = C2 and two orbits");
        let end = end_tk(&g, &fam).unwrap();
        let w = wreath_product(&cyclic(2).unwrap(), 2).unwrap();
        assert!(matches!(semigroup_isomorphic(&end.semigroup, &w, 1 << 20).unwrap(), IsoVerdict::Yes(_)));
    }
}
