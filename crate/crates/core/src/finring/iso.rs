//! Ring isomorphism search by backtracking over generator images.

use super::TableRing;

/// Per-element invariants preserved by isomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Signature {
    additive_order: usize,
    /// Index and period of the sequence `a, a², a³, …`.
    power_tail: (usize, usize),
    unit: bool,
    left_ann: usize,
    right_ann: usize,
}

fn signature(r: &TableRing, a: usize) -> Signature {
    let mut additive_order = 1;
    let mut x = a;
    while x != 0 {
        x = r.add(x, a);
        additive_order += 1;
    }
    let mut seen = vec![usize::MAX; r.order()];
    let mut p = a;
    let mut k = 1;
    let power_tail = loop {
        if seen[p] != usize::MAX {
            break (seen[p], k - seen[p]);
        }
        seen[p] = k;
        p = r.mul(p, a);
        k += 1;
    };
    Signature {
        additive_order,
        power_tail,
        unit: r.is_unit(a),
        left_ann: r.elements().filter(|&x| r.mul(x, a) == 0).count(),
        right_ann: r.elements().filter(|&x| r.mul(a, x) == 0).count(),
    }
}

/// Elements generating `r` under `+`, `·` and `1`, picked greedily.
fn generators(r: &TableRing) -> Vec<usize> {
    let mut inside = vec![false; r.order()];
    let mut members = Vec::new();
    let mut gens = Vec::new();
    let absorb = |x: usize, inside: &mut Vec<bool>, members: &mut Vec<usize>| {
        let mut queue = vec![x];
        while let Some(y) = queue.pop() {
            if inside[y] {
                continue;
            }
            inside[y] = true;
            members.push(y);
            for i in 0..members.len() {
                let z = members[i];
                queue.extend([r.add(y, z), r.mul(y, z), r.mul(z, y)]);
            }
        }
    };
    absorb(r.one(), &mut inside, &mut members);
    absorb(0, &mut inside, &mut members);
    for x in r.elements() {
        if !inside[x] {
            gens.push(x);
            absorb(x, &mut inside, &mut members);
        }
    }
    gens
}

/// Extends a partial map by closing under sums and products; false on a
/// conflict or a non-injective assignment.
fn propagate(a: &TableRing, b: &TableRing, map: &mut [usize], inverse: &mut [usize], mapped: &mut Vec<usize>, start: usize) -> bool {
    let mut cursor = start;
    while cursor < mapped.len() {
        let x = mapped[cursor];
        cursor += 1;
        for i in 0..cursor {
            let y = mapped[i];
            let (fx, fy) = (map[x], map[y]);
            let pairs = [
                (a.add(x, y), b.add(fx, fy)),
                (a.mul(x, y), b.mul(fx, fy)),
                (a.mul(y, x), b.mul(fy, fx)),
            ];
            for (src, dst) in pairs {
                if map[src] == usize::MAX {
                    if inverse[dst] != usize::MAX {
                        return false;
                    }
                    map[src] = dst;
                    inverse[dst] = src;
                    mapped.push(src);
                } else if map[src] != dst {
                    return false;
                }
            }
        }
    }
    true
}

/// An isomorphism `a → b` as an index map, if one exists.
pub fn find_isomorphism(a: &TableRing, b: &TableRing) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let sig_a: Vec<Signature> = a.elements().map(|x| signature(a, x)).collect();
    let sig_b: Vec<Signature> = b.elements().map(|x| signature(b, x)).collect();
    let (mut sa, mut sb) = (sig_a.clone(), sig_b.clone());
    sa.sort();
    sb.sort();
    if sa != sb || a.is_commutative() != b.is_commutative() {
        return None;
    }
    let gens = generators(a);
    let n = a.order();
    let mut map = vec![usize::MAX; n];
    let mut inverse = vec![usize::MAX; n];
    map[0] = 0;
    inverse[0] = 0;
    let mut mapped = vec![0];
    if a.one() != 0 {
        map[a.one()] = b.one();
        inverse[b.one()] = a.one();
        mapped.push(a.one());
    }
    if !propagate(a, b, &mut map, &mut inverse, &mut mapped, 0) {
        return None;
    }

    fn search(
        a: &TableRing,
        b: &TableRing,
        gens: &[usize],
        sig_a: &[Signature],
        sig_b: &[Signature],
        map: &mut Vec<usize>,
        inverse: &mut Vec<usize>,
        mapped: &mut Vec<usize>,
    ) -> bool {
        let Some(&g) = gens.iter().find(|&&g| map[g] == usize::MAX) else {
            return mapped.len() == a.order();
        };
        for cand in b.elements() {
            if inverse[cand] != usize::MAX || sig_b[cand] != sig_a[g] {
                continue;
            }
            let (saved_map, saved_inv, saved_len) = (map.clone(), inverse.clone(), mapped.len());
            map[g] = cand;
            inverse[cand] = g;
            mapped.push(g);
            if propagate(a, b, map, inverse, mapped, saved_len) && search(a, b, gens, sig_a, sig_b, map, inverse, mapped) {
                return true;
            }
            *map = saved_map;
            *inverse = saved_inv;
            mapped.truncate(saved_len);
        }
        false
    }

    search(a, b, &gens, &sig_a, &sig_b, &mut map, &mut inverse, &mut mapped).then_some(map)
}
