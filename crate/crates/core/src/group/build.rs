//! Constructors for the built-in group families.

use super::{FiniteGroup, GroupError};

pub fn trivial() -> FiniteGroup {
    cyclic(1).expect("C1 is a group")
}

/// `C_n = ⟨a⟩`, element `k` is `a^k`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Validation("C0 is not a group".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(((a + b) % n) as u16);
        }
    }
    let names = (0..n).map(|k| power_name("a", k)).collect();
    FiniteGroup::trusted(n, table, format!("C{n}"), names)
}

/// Dihedral group of order `2n`: index `k` is `r^k`, index `n + k` is `r^k s`.
pub fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(GroupError::Validation(format!(
            "dihedral order must be even and positive, got {order}"
        )));
    }
    let n = order / 2;
    let split = |x: usize| (x % n, x / n);
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (a, b) = split(x);
        for y in 0..order {
            let (c, d) = split(y);
            // r^a s^b · r^c s^d = r^(a ± c) s^(b + d)
            let rot = if b == 0 { (a + c) % n } else { (a + n - c) % n };
            let refl = (b + d) % 2;
            table.push((rot + refl * n) as u16);
        }
    }
    let names = (0..order)
        .map(|x| {
            let (a, b) = split(x);
            match (a, b) {
                (0, 0) => "e".to_string(),
                (_, 0) => power_name("r", a),
                (0, _) => "s".to_string(),
                (_, _) => format!("{}s", power_name("r", a)),
            }
        })
        .collect();
    FiniteGroup::trusted(order, table, format!("D{order}"), names)
}

/// Symmetric group on `n` points. Elements are permutations numbered by
/// lexicographic rank; products compose right to left, `(p·q)(i) = p(q(i))`.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Validation("S0 is not supported".into()));
    }
    let perms = permutations_lex(n);
    let order = perms.len();
    let mut rank = vec![u16::MAX; n.pow(n as u32)];
    for (r, p) in perms.iter().enumerate() {
        rank[code(p, n)] = r as u16;
    }
    let mut table = Vec::with_capacity(order * order);
    let mut buf = vec![0u8; n];
    for p in &perms {
        for q in &perms {
            for i in 0..n {
                buf[i] = p[q[i] as usize];
            }
            table.push(rank[code(&buf, n)]);
        }
    }
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::trusted(order, table, format!("S{n}"), names)
}

/// The permutation (as images of `0..n`) with lexicographic rank `r`.
pub fn unrank_permutation(n: usize, mut r: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut fact: usize = (1..n).product();
    let mut out = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        let idx = r / fact;
        r %= fact;
        out.push(pool.remove(idx));
        if k > 1 {
            fact /= k - 1;
        }
    }
    out
}

/// Componentwise product; element `(a, b)` has index `a * |B| + b`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (n, m) = (a.order(), b.order());
    let order = n * m;
    if order > crate::limits::MAX_REPRESENTABLE_ORDER {
        return Err(GroupError::TooLarge {
            order,
            cap: crate::limits::MAX_REPRESENTABLE_ORDER,
        });
    }
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (x1, x2) = (x / m, x % m);
        for y in 0..order {
            let (y1, y2) = (y / m, y % m);
            table.push((a.mul(x1, y1) * m + b.mul(x2, y2)) as u16);
        }
    }
    let names = (0..order)
        .map(|x| format!("({},{})", a.name(x / m), b.name(x % m)))
        .collect();
    FiniteGroup::trusted(order, table, format!("{}x{}", a.label(), b.label()), names)
}

fn power_name(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn code(p: &[u8], n: usize) -> usize {
    p.iter().rev().fold(0, |acc, &v| acc * n + v as usize)
}

fn permutations_lex(n: usize) -> Vec<Vec<u8>> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
        out.push(p.clone());
    }
}

/// 1-based cycle notation without separators, e.g. `(12)(34)`; `e` for the identity.
fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_numbering_is_lexicographic() {
        let g = symmetric(3).unwrap();
        let names: Vec<&str> = g.elements().map(|a| g.name(a)).collect();
        assert_eq!(names, ["e", "(23)", "(12)", "(123)", "(132)", "(13)"]);
        for r in 0..6 {
            let p = unrank_permutation(3, r);
            let perm: Vec<u8> = p.iter().map(|&v| v as u8).collect();
            assert_eq!(cycle_notation(&perm), g.name(r));
        }
    }

    #[test]
    fn symmetric_product_composes_right_to_left() {
        let g = symmetric(3).unwrap();
        let a = g.element_named("(12)").unwrap();
        let b = g.element_named("(23)").unwrap();
        // (12)(23): 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(g.name(g.mul(a, b)), "(123)");
    }

    #[test]
    fn orders() {
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(cyclic(7).unwrap().order(), 7);
        let p = direct_product(&cyclic(2).unwrap(), &dihedral(6).unwrap()).unwrap();
        assert_eq!(p.order(), 12);
        assert_eq!(p.label(), "C2xD6");
    }

    #[test]
    fn small_dihedral_degenerates() {
        assert!(dihedral(2).unwrap().is_abelian());
        assert!(dihedral(4).unwrap().is_abelian());
        assert!(!dihedral(6).unwrap().is_abelian());
        assert!(dihedral(5).is_err());
    }

    #[test]
    fn constructed_tables_pass_full_validation() {
        for g in [
            symmetric(4).unwrap(),
            dihedral(10).unwrap(),
            direct_product(&cyclic(3).unwrap(), &symmetric(3).unwrap()).unwrap(),
        ] {
            let rebuilt = FiniteGroup::from_table(g.order(), g.table(), g.label()).unwrap();
            assert_eq!(rebuilt.table(), g.table());
        }
    }
}
