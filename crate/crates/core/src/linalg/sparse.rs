use crate::arith::{Field, Scalar};

/// Sparse vector: strictly increasing indices, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

pub fn from_dense(v: &[Scalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(i, s)| (i, s.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, dim: usize, field: &Field) -> Vec<Scalar> {
    let mut out = vec![field.zero(); dim];
    for (i, s) in v {
        out[*i] = s.clone();
    }
    out
}

/// `a + c·b`.
pub fn axpy(a: &SparseVec, c: &Scalar, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + &(c * &b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `acc ← acc + c·b`.
pub fn add_scaled(acc: &mut SparseVec, c: &Scalar, b: &SparseVec) {
    if !c.is_zero() && !b.is_empty() {
        *acc = axpy(acc, c, b);
    }
}

/// `x ⊗ y` with `x⊗y` flattened as `a·dim_y + b`.
pub fn tensor(x: &SparseVec, y: &SparseVec, dim_y: usize) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() * y.len());
    for (a, s) in x {
        for (b, t) in y {
            out.push((a * dim_y + b, s * t));
        }
    }
    out
}

pub fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, s)| (*i, c * s)).collect()
}

pub fn get(v: &SparseVec, idx: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&idx, |(i, _)| *i)
        .ok()
        .map(|k| &v[k].1)
}

/// Builds a sparse vector from unsorted, possibly repeated entries.
pub fn collect(mut entries: Vec<(usize, Scalar)>) -> SparseVec {
    entries.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (i, s) in entries {
        match out.last_mut() {
            Some((j, t)) if *j == i => *t = &*t + &s,
            _ => out.push((i, s)),
        }
    }
    out.retain(|(_, s)| !s.is_zero());
    out
}

/// Reindexes entries through `f` (which must be injective).
pub fn remap(v: &SparseVec, f: impl Fn(usize) -> usize) -> SparseVec {
    collect(v.iter().map(|(i, s)| (f(*i), s.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axpy_cancels() {
        let f = Field::Rational;
        let a = vec![(0, f.int(1)), (2, f.int(3))];
        let b = vec![(2, f.int(1)), (5, f.int(1))];
        let r = axpy(&a, &f.int(-3), &b);
        assert_eq!(r, vec![(0, f.int(1)), (5, f.int(-3))]);
    }

    #[test]
    fn collect_merges_duplicates() {
        let f = Field::Rational;
        let v = collect(vec![(3, f.int(1)), (1, f.int(2)), (3, f.int(-1))]);
        assert_eq!(v, vec![(1, f.int(2))]);
    }
}
