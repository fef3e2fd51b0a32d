/// Decodes `code` into `len` digits of base `radix`, most significant first.
pub(crate) fn decode_digits(mut code: usize, radix: usize, len: usize) -> Vec<usize> {
    let mut digits = vec![0; len];
    for slot in digits.iter_mut().rev() {
        *slot = code % radix;
        code /= radix;
    }
    digits
}

pub(crate) fn encode_digits(digits: &[usize], radix: usize) -> usize {
    digits.iter().fold(0, |acc, &d| acc * radix + d)
}

/// Minimal union-find used for congruence closures.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns true when two distinct classes were merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        // keep the smaller index as root so labels stay canonical
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
        true
    }

    /// Class labels numbered by first occurrence.
    pub(crate) fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut root_label = vec![usize::MAX; n];
        let mut next = 0;
        let mut out = Vec::with_capacity(n);
        for x in 0..n {
            let r = self.find(x);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            out.push(root_label[r]);
        }
        out
    }
}

/// Sorted index list from a membership mask.
pub(crate) fn mask_to_vec(mask: &[bool]) -> Vec<usize> {
    mask.iter()
        .enumerate()
        .filter_map(|(i, &m)| m.then_some(i))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_round_trip() {
        for code in 0..81 {
            let d = decode_digits(code, 3, 4);
            assert_eq!(encode_digits(&d, 3), code);
        }
        assert_eq!(decode_digits(5, 3, 2), vec![1, 2]);
    }

    #[test]
    fn union_find_labels_by_first_occurrence() {
        let mut uf = UnionFind::new(5);
        uf.union(3, 1);
        uf.union(4, 0);
        assert_eq!(uf.labels(), vec![0, 1, 2, 1, 0]);
    }
}
