//! Faithful permutation representations of quotients `G/N`.
//!
//! `G` acts on the `N`-orbits of `G`-orbits of point tuples. Short tuples
//! are tried first; the regular action on the full base tuple is the
//! fallback and is always faithful.

use std::collections::HashMap;

use crate::{GroupBuilder, Hom, PermError, PermGroup, Permutation};

pub const DEFAULT_COSET_BOUND: usize = 1_000_000;

/// One block action: an orbit of `k`-tuples and its partition into
/// `N`-orbits.
#[derive(Clone, Debug)]
struct Action {
    k: usize,
    index: HashMap<Vec<u32>, u32>,
    block_of: Vec<u32>,
    block_rep: Vec<Vec<u32>>,
}

impl Action {
    fn build(g: &PermGroup, n: &PermGroup, tuple: &[usize], bound: usize) -> Option<Action> {
        let k = tuple.len();
        let start: Vec<u32> = tuple.iter().map(|&x| x as u32).collect();
        let mut tuples = vec![start.clone()];
        let mut index = HashMap::new();
        index.insert(start, 0u32);
        let mut i = 0;
        while i < tuples.len() {
            for s in g.gens() {
                let t: Vec<u32> = tuples[i].iter().map(|&x| s.image(x as usize) as u32).collect();
                if !index.contains_key(&t) {
                    if tuples.len() >= bound {
                        return None;
                    }
                    index.insert(t.clone(), tuples.len() as u32);
                    tuples.push(t);
                }
            }
            i += 1;
        }
        let m = tuples.len();
        let mut parent: Vec<u32> = (0..m as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        for s in n.gens() {
            for (a, t) in tuples.iter().enumerate() {
                let u: Vec<u32> = t.iter().map(|&x| s.image(x as usize) as u32).collect();
                let b = index[&u];
                let (ra, rb) = (find(&mut parent, a as u32), find(&mut parent, b));
                if ra != rb {
                    let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                    parent[hi as usize] = lo;
                }
            }
        }
        let mut block_id: HashMap<u32, u32> = HashMap::new();
        let mut block_of = vec![0u32; m];
        let mut block_rep = Vec::new();
        for a in 0..m {
            let r = find(&mut parent, a as u32);
            let next = block_id.len() as u32;
            let id = *block_id.entry(r).or_insert(next);
            if id == next {
                block_rep.push(tuples[a].clone());
            }
            block_of[a] = id;
        }
        Some(Action { k, index, block_of, block_rep })
    }

    fn nblocks(&self) -> usize {
        self.block_rep.len()
    }

    fn act(&self, g: &Permutation, out: &mut Vec<u32>, offset: u32) {
        let mut t = vec![0u32; self.k];
        for rep in &self.block_rep {
            for (j, &x) in rep.iter().enumerate() {
                t[j] = g.image(x as usize) as u32;
            }
            let idx = self.index[&t];
            out.push(self.block_of[idx as usize] + offset);
        }
    }
}

/// `G/N` realized as a permutation group, with the quotient map and a
/// section back into `G`.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: PermGroup,
    kernel: PermGroup,
    actions: Vec<Action>,
    degree: usize,
    image: PermGroup,
    section: Hom,
}

impl Quotient {
    /// `kernel` must be normal in `group`.
    pub fn new(group: &PermGroup, kernel: &PermGroup, bound: usize) -> Result<Quotient, PermError> {
        let target = group.order() / kernel.order();
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        let base = group.base();
        for orb in group.orbits() {
            let inside: Vec<usize> = base.iter().copied().filter(|b| orb.binary_search(b).is_ok()).collect();
            for l in 1..=inside.len() {
                candidates.push(inside[..l].to_vec());
            }
        }
        let mut actions: Vec<Action> = Vec::new();
        let mut order = 1u128;
        let images_of = |acts: &[Action], x: &Permutation| -> Permutation {
            let mut out = Vec::new();
            let mut off = 0u32;
            for a in acts {
                a.act(x, &mut out, off);
                off += a.nblocks() as u32;
            }
            Permutation::from_raw(out)
        };
        let order_with = |acts: &[Action]| -> u128 {
            let deg: usize = acts.iter().map(|a| a.nblocks()).sum();
            let gens: Vec<Permutation> = group.gens().iter().map(|x| images_of(acts, x)).collect();
            PermGroup::generated(deg, gens).order()
        };
        if target > 1 {
            for c in &candidates {
                let Some(a) = Action::build(group, kernel, c, bound) else { continue };
                if a.nblocks() == 1 {
                    continue;
                }
                actions.push(a);
                let o = order_with(&actions);
                if o > order {
                    order = o;
                    if order == target {
                        break;
                    }
                } else {
                    actions.pop();
                }
            }
            if order != target {
                actions.clear();
                match Action::build(group, kernel, &base, bound) {
                    Some(a) => actions.push(a),
                    None => return Err(PermError::CosetBound { needed: group.order(), bound }),
                }
            }
            let mut i = 0;
            while actions.len() > 1 && i < actions.len() {
                let removed = actions.remove(i);
                if order_with(&actions) == target {
                    continue;
                }
                actions.insert(i, removed);
                i += 1;
            }
        }
        let degree = actions.iter().map(|a| a.nblocks()).sum::<usize>().max(1);
        let gen_images: Vec<Permutation> = if actions.is_empty() {
            group.gens().iter().map(|_| Permutation::identity(1)).collect()
        } else {
            group.gens().iter().map(|x| images_of(&actions, x)).collect()
        };
        let image = PermGroup::generated(degree, gen_images);
        let section = Hom::new(&image, group.gens().to_vec(), group.degree())?;
        Ok(Quotient { group: group.clone(), kernel: kernel.clone(), actions, degree, image, section })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn kernel(&self) -> &PermGroup {
        &self.kernel
    }

    /// The quotient as a permutation group; its generators are the images
    /// of the generators of `G`, in order.
    pub fn image(&self) -> &PermGroup {
        &self.image
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Image of an element of `G`.
    pub fn map(&self, g: &Permutation) -> Permutation {
        if self.actions.is_empty() {
            return Permutation::identity(1);
        }
        let mut out = Vec::with_capacity(self.degree);
        let mut off = 0u32;
        for a in &self.actions {
            a.act(g, &mut out, off);
            off += a.nblocks() as u32;
        }
        Permutation::from_raw(out)
    }

    /// Some element of `G` mapping to `x`.
    pub fn lift(&self, x: &Permutation) -> Option<Permutation> {
        self.section.apply(x)
    }

    /// Full preimage of the subgroup generated by `gens`.
    pub fn preimage(&self, gens: &[Permutation]) -> PermGroup {
        let mut b = GroupBuilder::from_group(&self.kernel);
        for x in gens {
            b.add(self.lift(x).expect("preimage of an element outside the quotient"));
        }
        b.build()
    }

    pub fn preimage_group(&self, h: &PermGroup) -> PermGroup {
        self.preimage(h.gens())
    }
}
