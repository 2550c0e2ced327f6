use super::presentation::GroupPresentation;
use super::word::Word;
use crate::error::{Error, Result};

/// A map of presented groups given on generators. Whether it is a
/// homomorphism is certified separately (see [`crate::order`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: GroupPresentation,
    target: GroupPresentation,
    images: Vec<Word>,
}

impl GroupHom {
    pub fn new(source: GroupPresentation, target: GroupPresentation, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.generator_count() {
            return Err(Error::HomArity { got: images.len(), expected: source.generator_count() });
        }
        let count = target.generator_count();
        for img in &images {
            if let Some(l) = img.letters().iter().find(|l| l.gen >= count) {
                return Err(Error::GeneratorOutOfRange { index: l.gen, count });
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(g: &GroupPresentation) -> Self {
        let images = (0..g.generator_count()).map(Word::generator).collect();
        GroupHom { source: g.clone(), target: g.clone(), images }
    }

    pub fn source(&self) -> &GroupPresentation {
        &self.source
    }

    pub fn target(&self) -> &GroupPresentation {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of a source word, freely reduced.
    pub fn substitute(&self, w: &Word) -> Word {
        w.substitute(&self.images)
    }
}
