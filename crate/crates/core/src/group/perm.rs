/// A permutation of `0..degree`, stored as its image list.
///
/// Products compose left to right: `x.then(y)` applies `x` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// `None` unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm(images.iter().map(|&i| i as u32).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&p| p as usize).collect()
    }
}

/// The permutation representation a group was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermPresentation {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermPresentation {
    pub(crate) fn new(degree: usize, generators: Vec<Perm>, elements: Vec<Perm>) -> Self {
        Self { degree, generators, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// The permutation carried by element `id`.
    pub fn element(&self, id: usize) -> &Perm {
        &self.elements[id]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_left_to_right() {
        let a = Perm::from_images(&[1, 0, 2]).unwrap();
        let b = Perm::from_images(&[0, 2, 1]).unwrap();
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
        assert!(Perm::from_images(&[0, 0]).is_none());
        assert!(Perm::from_images(&[2, 0]).is_none());
    }
}
