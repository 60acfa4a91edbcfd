use std::collections::{HashSet, VecDeque};

use crate::{OracleError, SmallGroup, Subgroup};

/// Conjugacy classes, each sorted, listed by smallest member.
pub fn conjugacy_classes(g: &SmallGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        seen[x] = true;
        let mut class = vec![x];
        let mut queue = VecDeque::from([x]);
        while let Some(y) = queue.pop_front() {
            for &s in g.gens() {
                let z = g.conj(y, s);
                if !seen[z] {
                    seen[z] = true;
                    class.push(z);
                    queue.push_back(z);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Every normal subgroup, as joins of normal closures of conjugacy
/// classes, sorted by order and then by members.
pub fn all_normal_subgroups(g: &SmallGroup, bound: usize) -> Result<Vec<Subgroup>, OracleError> {
    let classes = conjugacy_classes(g);
    let mut seen: HashSet<Subgroup> = HashSet::new();
    let mut queue = VecDeque::from([g.trivial()]);
    seen.insert(g.trivial());
    while let Some(s) = queue.pop_front() {
        for class in &classes {
            if s.contains(class[0]) {
                continue;
            }
            let t = g.close(&s, class);
            if seen.insert(t.clone()) {
                if seen.len() > bound {
                    return Err(OracleError::LatticeTooLarge { bound });
                }
                queue.push_back(t);
            }
        }
    }
    let mut all: Vec<Subgroup> = seen.into_iter().collect();
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(&b.elements())));
    Ok(all)
}
