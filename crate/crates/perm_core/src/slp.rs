use crate::Permutation;

/// One instruction of a straight-line program. Operands index earlier lines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Line {
    Gen(usize),
    Mul(usize, usize),
    Inv(usize),
    Pow(usize, i64),
}

/// A straight-line program over `ngens` generators with any number of
/// designated outputs. An output of `None` stands for the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slp {
    pub ngens: usize,
    pub lines: Vec<Line>,
    pub outputs: Vec<Option<usize>>,
}

impl Slp {
    /// The empty program, evaluating to the identity.
    pub fn identity(ngens: usize) -> Self {
        Slp { ngens, lines: Vec::new(), outputs: vec![None] }
    }

    pub fn generator(ngens: usize, i: usize) -> Self {
        Slp { ngens, lines: vec![Line::Gen(i)], outputs: vec![Some(0)] }
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Evaluate every line over an arbitrary group given by closures.
    pub fn evaluate_with<T: Clone>(
        &self,
        gens: &[T],
        one: &T,
        mul: impl Fn(&T, &T) -> T,
        inv: impl Fn(&T) -> T,
    ) -> Vec<T> {
        let mut vals: Vec<T> = Vec::with_capacity(self.lines.len());
        for line in &self.lines {
            let v = match *line {
                Line::Gen(i) => gens[i].clone(),
                Line::Mul(a, b) => mul(&vals[a], &vals[b]),
                Line::Inv(a) => inv(&vals[a]),
                Line::Pow(a, e) => {
                    let base = if e < 0 { inv(&vals[a]) } else { vals[a].clone() };
                    let mut acc = one.clone();
                    for _ in 0..e.unsigned_abs() {
                        acc = mul(&acc, &base);
                    }
                    acc
                }
            };
            vals.push(v);
        }
        self.outputs
            .iter()
            .map(|o| match o {
                Some(i) => vals[*i].clone(),
                None => one.clone(),
            })
            .collect()
    }

    /// Evaluate the outputs on permutations of the given degree.
    pub fn evaluate(&self, gens: &[Permutation], degree: usize) -> Vec<Permutation> {
        let one = Permutation::identity(degree);
        let mut vals: Vec<Permutation> = Vec::with_capacity(self.lines.len());
        for line in &self.lines {
            let v = match *line {
                Line::Gen(i) => gens[i].clone(),
                Line::Mul(a, b) => vals[a].mul(&vals[b]),
                Line::Inv(a) => vals[a].inverse(),
                Line::Pow(a, e) => vals[a].pow(e),
            };
            vals.push(v);
        }
        self.outputs
            .iter()
            .map(|o| match o {
                Some(i) => vals[*i].clone(),
                None => one.clone(),
            })
            .collect()
    }

    /// The single output of a one-output program.
    pub fn evaluate_one(&self, gens: &[Permutation], degree: usize) -> Permutation {
        self.evaluate(gens, degree).swap_remove(0)
    }
}
