use std::sync::Arc;

use crate::{PermError, PermGroup, Permutation};

/// A map from a permutation group into a symmetric group, fixed by the
/// images of the generators and evaluated through the stabilizer chain of
/// the source. When the images do not define a homomorphism the evaluation
/// is still a well defined function (useful as a section of a quotient map).
#[derive(Clone)]
pub struct Hom {
    source: PermGroup,
    images: Vec<Permutation>,
    target_degree: usize,
    strong: Arc<(Vec<Permutation>, Vec<Permutation>)>,
}

impl std::fmt::Debug for Hom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hom").field("images", &self.images).finish()
    }
}

impl Hom {
    pub fn new(
        source: &PermGroup,
        images: Vec<Permutation>,
        target_degree: usize,
    ) -> Result<Self, PermError> {
        if images.len() != source.gens().len() {
            return Err(PermError::ImageCount { expected: source.gens().len(), found: images.len() });
        }
        for x in &images {
            if x.degree() != target_degree {
                return Err(PermError::DegreeMismatch { expected: target_degree, found: x.degree() });
            }
        }
        let one = Permutation::identity(target_degree);
        let strong = source.eval_strong(&images, &one, |a, b| a.mul(b), |a| a.inverse());
        let inv = strong.iter().map(|x| x.inverse()).collect();
        Ok(Hom { source: source.clone(), images, target_degree, strong: Arc::new((strong, inv)) })
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    pub fn target_degree(&self) -> usize {
        self.target_degree
    }

    /// Image of `g`, or `None` when `g` is outside the source.
    pub fn apply(&self, g: &Permutation) -> Option<Permutation> {
        let one = Permutation::identity(self.target_degree);
        self.source.eval_element(g, &self.strong.0, &self.strong.1, &one, |a, b| a.mul(b))
    }

    pub fn image_group(&self) -> PermGroup {
        PermGroup::generated(self.target_degree, self.images.clone())
    }

    fn graph(&self, prefix: bool) -> PermGroup {
        let n = self.source.degree();
        let gens: Vec<Permutation> = self
            .source
            .gens()
            .iter()
            .zip(&self.images)
            .map(|(g, x)| g.direct_sum(x))
            .collect();
        if prefix {
            let moved: Vec<usize> = (0..self.target_degree)
                .filter(|&p| self.images.iter().any(|x| x.image(p) != p))
                .map(|p| p + n)
                .collect();
            PermGroup::with_base_prefix(n + self.target_degree, gens, &moved)
        } else {
            PermGroup::generated(n + self.target_degree, gens)
        }
    }

    /// Whether the generator images extend to a homomorphism.
    pub fn is_homomorphism(&self) -> bool {
        self.graph(false).order() == self.source.order()
    }

    /// Kernel of the homomorphism (the images must define one).
    pub fn kernel(&self) -> PermGroup {
        let n = self.source.degree();
        let graph = self.graph(true);
        let moved = (0..self.target_degree)
            .filter(|&p| self.images.iter().any(|x| x.image(p) != p))
            .count();
        let chain = graph.chain();
        let gens: Vec<Permutation> = if moved < chain.levels.len() {
            chain.levels[moved]
                .gens
                .iter()
                .map(|&k| chain.strong[k as usize].perm.restrict(n))
                .collect()
        } else {
            Vec::new()
        };
        PermGroup::generated(n, gens)
    }
}
