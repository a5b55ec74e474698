use super::FiniteSemigroup;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Result of an isomorphism search. `Indeterminate` means the node budget
/// ran out, which is not a disproof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    Yes(Vec<u32>),
    No,
    Indeterminate,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
}

pub const MAX_ISO_SIZE: usize = 4096;

/// Unreached elements scored per generator pick.
const GENERATOR_SCAN: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct Local {
    idempotent: bool,
    left_ideal: u32,
    right_ideal: u32,
    index: u32,
    period: u32,
    fixes_left: u32,
}

fn local(s: &FiniteSemigroup, x: u32) -> Local {
    let n = s.size() as u32;
    let mut l = vec![false; s.size()];
    let mut r = vec![false; s.size()];
    let mut fixes_left = 0;
    for t in 0..n {
        l[s.mul(t, x) as usize] = true;
        r[s.mul(x, t) as usize] = true;
        if s.mul(t, x) == t {
            fixes_left += 1;
        }
    }
    // powers x, x^2, ... until repetition
    let mut first_seen = HashMap::new();
    let mut p = x;
    let mut k = 1u32;
    let (index, period) = loop {
        if let Some(&j) = first_seen.get(&p) {
            break (j, k - j);
        }
        first_seen.insert(p, k);
        p = s.mul(p, x);
        k += 1;
    };
    Local {
        idempotent: s.mul(x, x) == x,
        left_ideal: l.iter().filter(|&&b| b).count() as u32,
        right_ideal: r.iter().filter(|&&b| b).count() as u32,
        index,
        period,
        fixes_left,
    }
}

/// Searches for a multiplication-preserving bijection `s1 -> s2`, visiting
/// at most `node_budget` partial assignments.
pub fn semigroup_isomorphic(s1: &FiniteSemigroup, s2: &FiniteSemigroup, node_budget: u64) -> Result<IsoVerdict> {
    for s in [s1, s2] {
        if s.size() > MAX_ISO_SIZE {
            return Err(Error::SizeCap { what: "semigroup isomorphism", order: s.size(), cap: MAX_ISO_SIZE });
        }
    }
    if s1.size() != s2.size() {
        return Ok(IsoVerdict::No);
    }
    let l1: Vec<Local> = (0..s1.size() as u32).map(|x| local(s1, x)).collect();
    let l2: Vec<Local> = (0..s2.size() as u32).map(|x| local(s2, x)).collect();
    let (mut a, mut b) = (l1.clone(), l2.clone());
    a.sort();
    b.sort();
    if a != b {
        return Ok(IsoVerdict::No);
    }
    let mut by_class: HashMap<Local, Vec<u32>> = HashMap::new();
    for (y, c) in l2.iter().enumerate() {
        by_class.entry(*c).or_default().push(y as u32);
    }
    // Few generators keep the search shallow: each step takes the candidate
    // whose closure grows most, scanning the rarest unreached classes first.
    let mut order: Vec<u32> = (0..s1.size() as u32).collect();
    order.sort_by_key(|&x| (by_class[&l1[x as usize]].len(), x));
    let mut gens = Vec::new();
    let mut reached = vec![false; s1.size()];
    loop {
        let mut best: Option<(usize, u32, Vec<bool>)> = None;
        for &x in order.iter().filter(|&&x| !reached[x as usize]).take(GENERATOR_SCAN) {
            gens.push(x);
            let c = closure(s1, &gens);
            gens.pop();
            let size = c.iter().filter(|&&b| b).count();
            if best.as_ref().is_none_or(|b| size > b.0) {
                best = Some((size, x, c));
            }
        }
        let Some((_, x, c)) = best else { break };
        gens.push(x);
        reached = c;
    }
    let candidates: Vec<&Vec<u32>> = gens.iter().map(|&g| &by_class[&l1[g as usize]]).collect();
    let mut search = Search { s1, s2, gens: &gens, candidates, nodes: 0, budget: node_budget };
    let mut imgs = Vec::new();
    Ok(match search.descend(&mut imgs) {
        Some(Some(map)) => IsoVerdict::Yes(map),
        Some(None) => IsoVerdict::No,
        None => IsoVerdict::Indeterminate,
    })
}

fn closure(s: &FiniteSemigroup, gens: &[u32]) -> Vec<bool> {
    let mut seen = vec![false; s.size()];
    let mut queue: Vec<u32> = Vec::new();
    for &g in gens {
        if !seen[g as usize] {
            seen[g as usize] = true;
            queue.push(g);
        }
    }
    let mut k = 0;
    while k < queue.len() {
        let a = queue[k];
        k += 1;
        for &g in gens {
            let b = s.mul(a, g);
            if !seen[b as usize] {
                seen[b as usize] = true;
                queue.push(b);
            }
        }
    }
    seen
}

struct Search<'a> {
    s1: &'a FiniteSemigroup,
    s2: &'a FiniteSemigroup,
    gens: &'a [u32],
    candidates: Vec<&'a Vec<u32>>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `None` when the budget ran out, `Some(None)` when no extension exists.
    fn descend(&mut self, imgs: &mut Vec<u32>) -> Option<Option<Vec<u32>>> {
        let t = imgs.len();
        if t == self.gens.len() {
            let map = self.extend(self.gens, imgs)?;
            return Some(map.and_then(|m| m.into_iter().collect::<Option<Vec<u32>>>()));
        }
        for &c in self.candidates[t] {
            imgs.push(c);
            if self.extend(&self.gens[..=t], imgs)?.is_some() {
                if let Some(found) = self.descend(imgs)? {
                    return Some(Some(found));
                }
            }
            imgs.pop();
        }
        Some(None)
    }

    fn extend(&mut self, gens: &[u32], imgs: &[u32]) -> Option<Option<Vec<Option<u32>>>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let (s1, s2) = (self.s1, self.s2);
        let mut map: Vec<Option<u32>> = vec![None; s1.size()];
        let mut used = vec![false; s2.size()];
        let mut queue = Vec::new();
        for (&g, &v) in gens.iter().zip(imgs) {
            match map[g as usize] {
                Some(w) if w != v => return Some(None),
                Some(_) => {}
                None => {
                    if used[v as usize] {
                        return Some(None);
                    }
                    used[v as usize] = true;
                    map[g as usize] = Some(v);
                    queue.push(g);
                }
            }
        }
        let mut k = 0;
        while k < queue.len() {
            let a = queue[k];
            k += 1;
            let fa = map[a as usize].expect("queued");
            for (&g, &fg) in gens.iter().zip(imgs) {
                let b = s1.mul(a, g);
                let fb = s2.mul(fa, fg);
                match map[b as usize] {
                    Some(v) if v != fb => return Some(None),
                    Some(_) => {}
                    None => {
                        if used[fb as usize] {
                            return Some(None);
                        }
                        used[fb as usize] = true;
                        map[b as usize] = Some(fb);
                        queue.push(b);
                    }
                }
            }
        }
        Some(Some(map))
    }
}
