use perm_core::catalog::{group_from_table, TableGroup};
use perm_core::{Hom, Operator, OperatorSet, PermGroup, Permutation};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Cycle notation with 1-based points.
pub type Cycles = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "format", rename_all = "lowercase")]
pub enum GroupSpec {
    Perm { degree: usize, generators: Vec<Cycles> },
    Table { table: Vec<Vec<usize>> },
}

/// A group file. Operators may also be given inline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(flatten)]
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub operators: Vec<OperatorSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OperatorKind {
    Automorphism,
    Endomorphism,
}

/// `images` gives the image of each generator (permutation input); `map`
/// gives the image label of each element label (table input).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorSpec {
    pub kind: OperatorKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub images: Option<Vec<Cycles>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct OperatorsFile {
    pub operators: Vec<OperatorSpec>,
}

/// Subgroup by generators (permutation input) or element labels (table
/// input).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubgroupFile {
    Generators { generators: Vec<Cycles> },
    Elements { elements: Vec<usize> },
}

/// A parsed group with its operators.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub group: PermGroup,
    pub table: Option<TableGroup>,
    pub ops: OperatorSet,
}

fn permutation(degree: usize, cycles: &Cycles) -> Result<Permutation, CliError> {
    Ok(Permutation::from_cycles(degree, cycles)?)
}

pub fn load_group(text: &str) -> Result<Loaded, CliError> {
    let file: GroupFile = serde_json::from_str(text)?;
    let mut loaded = match &file.group {
        GroupSpec::Perm { degree, generators } => {
            if *degree == 0 {
                return Err(CliError::Invalid("degree must be positive".into()));
            }
            let gens = generators.iter().map(|c| permutation(*degree, c)).collect::<Result<Vec<_>, _>>()?;
            Loaded { group: PermGroup::generated(*degree, gens), table: None, ops: OperatorSet::new() }
        }
        GroupSpec::Table { table } => {
            let t = group_from_table(table)?;
            Loaded { group: t.group.clone(), table: Some(t), ops: OperatorSet::new() }
        }
    };
    loaded.ops = operators(&loaded, &file.operators)?;
    Ok(loaded)
}

pub fn load_operators(text: &str, loaded: &Loaded) -> Result<OperatorSet, CliError> {
    let file: OperatorsFile = serde_json::from_str(text)?;
    operators(loaded, &file.operators)
}

fn operators(loaded: &Loaded, specs: &[OperatorSpec]) -> Result<OperatorSet, CliError> {
    let g = &loaded.group;
    let mut out = OperatorSet::new();
    for (i, spec) in specs.iter().enumerate() {
        let images: Vec<Permutation> = match (&loaded.table, &spec.images, &spec.map) {
            (None, Some(images), _) => images.iter().map(|c| permutation(g.degree(), c)).collect::<Result<_, _>>()?,
            (Some(t), _, Some(map)) => {
                if map.len() != t.elements.len() {
                    return Err(CliError::Invalid(format!("operator {i}: map has {} entries", map.len())));
                }
                g.gens()
                    .iter()
                    .map(|x| {
                        let label = t.label_of(x).expect("generator of the table group");
                        let image = map[label - t.offset];
                        t.element(image)
                            .cloned()
                            .ok_or_else(|| CliError::Invalid(format!("operator {i}: label {image} out of range")))
                    })
                    .collect::<Result<_, _>>()?
            }
            (None, None, _) => return Err(CliError::Invalid(format!("operator {i}: permutation input needs `images`"))),
            (Some(_), _, None) => return Err(CliError::Invalid(format!("operator {i}: table input needs `map`"))),
        };
        if loaded.table.is_none() && images.len() != g.gens().len() {
            return Err(CliError::Invalid(format!(
                "operator {i}: {} images for {} generators",
                images.len(),
                g.gens().len()
            )));
        }
        if let Some(y) = images.iter().find(|y| !g.contains(y)) {
            return Err(CliError::Invalid(format!("operator {i}: image {y} is not in the group")));
        }
        let hom = Hom::new(g, images, g.degree())?;
        if !hom.is_homomorphism() {
            return Err(CliError::Invalid(format!("operator {i} is not a homomorphism")));
        }
        if spec.kind == OperatorKind::Automorphism && hom.image_group().order() != g.order() {
            return Err(CliError::Invalid(format!("operator {i} is not bijective")));
        }
        out.push(Operator::Map(hom));
    }
    Ok(out)
}

pub fn load_subgroup(text: &str, loaded: &Loaded) -> Result<PermGroup, CliError> {
    let file: SubgroupFile = serde_json::from_str(text)?;
    let g = &loaded.group;
    let gens: Vec<Permutation> = match (&file, &loaded.table) {
        (SubgroupFile::Generators { generators }, None) => {
            generators.iter().map(|c| permutation(g.degree(), c)).collect::<Result<_, _>>()?
        }
        (SubgroupFile::Elements { elements }, Some(t)) => elements
            .iter()
            .map(|&l| t.element(l).cloned().ok_or_else(|| CliError::Invalid(format!("label {l} out of range"))))
            .collect::<Result<_, _>>()?,
        (SubgroupFile::Generators { .. }, Some(_)) => {
            return Err(CliError::Invalid("table input takes subgroups as `elements`".into()))
        }
        (SubgroupFile::Elements { .. }, None) => {
            return Err(CliError::Invalid("permutation input takes subgroups as `generators`".into()))
        }
    };
    Ok(PermGroup::generated(g.degree(), gens))
}

/// A group as a permutation-format file.
pub fn perm_file(g: &PermGroup) -> GroupFile {
    GroupFile {
        group: GroupSpec::Perm { degree: g.degree(), generators: g.gens().iter().map(|x| x.to_cycles()).collect() },
        operators: Vec::new(),
    }
}

/// A group as a 1-based table-format file.
pub fn table_file(g: &PermGroup) -> GroupFile {
    let (_, t) = perm_core::catalog::table_of(g);
    let table = t.into_iter().map(|row| row.into_iter().map(|x| x + 1).collect()).collect();
    GroupFile { group: GroupSpec::Table { table }, operators: Vec::new() }
}
