//! On-disk formats: the code file (JSON), bound and analysis reports
//! (JSON), and the enumerator CSV. All JSON is emitted with sorted keys and
//! contains only exact integers.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use bsymbol_core::bounds::{BoundReport, CodeParams};
use bsymbol_core::bsymbol::WeightEnumerator;
use bsymbol_core::codes::LinearCode;
use bsymbol_core::construct::{seed_hash_hex, ConstructionRecipe, RecipeKind};
use bsymbol_core::galois::FiniteField;
use bsymbol_core::Error;

/// {p, r, modulus} with the modulus as an ascending-degree coefficient list.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FieldDescriptor {
    pub p: u64,
    pub r: u32,
    pub modulus: Vec<u64>,
}

impl FieldDescriptor {
    pub fn of(field: &FiniteField) -> Self {
        FieldDescriptor {
            p: field.characteristic(),
            r: field.degree(),
            modulus: field.modulus().to_vec(),
        }
    }

    /// Reconstructs the field and checks the stored modulus against this
    /// tool's canonical choice; a different modulus would silently relabel
    /// every element index.
    pub fn to_field(&self) -> Result<Arc<FiniteField>, Error> {
        let field = FiniteField::new(self.p, self.r)?;
        if field.modulus() != self.modulus.as_slice() {
            return Err(Error::Precondition(format!(
                "code file uses modulus {:?}, but the canonical modulus for GF({}^{}) is {:?}",
                self.modulus,
                self.p,
                self.r,
                field.modulus()
            )));
        }
        Ok(field)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RecipeRecord {
    pub kind: String,
    pub q: u64,
    pub k: u64,
    pub b: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed_hash: Option<String>,
}

impl RecipeRecord {
    pub fn of(recipe: &ConstructionRecipe) -> Self {
        RecipeRecord {
            kind: recipe.kind.as_str().to_string(),
            q: recipe.q,
            k: recipe.k,
            b: recipe.b,
            s: recipe.s,
            delta: recipe.delta,
            seed_hash: recipe.seed_hash.map(seed_hash_hex),
        }
    }
}

/// The canonical code file: field descriptor, dimensions, and the generator
/// as rows of integer element indices. Round-trippable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldDescriptor,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeRecord>,
}

impl CodeFile {
    pub fn of(code: &LinearCode, recipe: Option<&ConstructionRecipe>) -> Self {
        CodeFile {
            field: FieldDescriptor::of(code.field()),
            n: code.length(),
            k: code.dimension(),
            generator: code.generator_rows(),
            recipe: recipe.map(RecipeRecord::of),
        }
    }

    pub fn to_code(&self) -> Result<LinearCode, Error> {
        let field = self.field.to_field()?;
        let code = LinearCode::from_generator(field, &self.generator)?;
        if code.length() != self.n || code.dimension() != self.k {
            return Err(Error::Precondition(
                "stated (n, k) disagree with the generator matrix".to_string(),
            ));
        }
        Ok(code)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub n: u64,
    pub k: u64,
    pub d_b: u64,
    pub b: u64,
    pub q: u64,
}

impl ParamsRecord {
    pub fn of(p: &CodeParams) -> Self {
        ParamsRecord {
            n: p.n,
            k: p.k,
            d_b: p.d_b,
            b: p.b,
            q: p.q,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundRecord {
    pub params: ParamsRecord,
    pub lhs: u64,
    pub rhs: u64,
    pub holds: bool,
    pub optimal: bool,
    pub distance_optimal: bool,
    pub gap: Option<u64>,
    pub conjecture: String,
}

impl BoundRecord {
    pub fn of(report: &BoundReport) -> Self {
        BoundRecord {
            params: ParamsRecord::of(&report.params),
            lhs: report.lhs,
            rhs: report.rhs,
            holds: report.holds,
            optimal: report.optimal,
            distance_optimal: report.distance_optimal,
            gap: report.gap,
            conjecture: report.conjecture.as_str().to_string(),
        }
    }
}

/// One (weight, count) row; zero-count rows are omitted except weight 0.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnumeratorRow {
    pub weight: usize,
    pub count: u64,
}

pub fn enumerator_rows(enumerator: &WeightEnumerator) -> Vec<EnumeratorRow> {
    enumerator
        .counts
        .iter()
        .enumerate()
        .filter(|&(w, &c)| w == 0 || c > 0)
        .map(|(weight, &count)| EnumeratorRow { weight, count })
        .collect()
}

/// Enumerator CSV: header `weight,count`, rows ascending by weight.
pub fn enumerator_csv(enumerator: &WeightEnumerator) -> String {
    let mut out = String::from("weight,count\n");
    for row in enumerator_rows(enumerator) {
        out.push_str(&format!("{},{}\n", row.weight, row.count));
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PerWindowReport {
    pub b: u64,
    pub d_b: u64,
    pub enumerator: Vec<EnumeratorRow>,
    pub bound: BoundRecord,
}

/// Full analysis of one code at the requested window sizes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub q: u64,
    pub n: u64,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeRecord>,
    pub results: Vec<PerWindowReport>,
}

/// Canonical JSON: sorted keys (serde_json maps are ordered), exact
/// integers only, trailing newline.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String, Error> {
    let v = serde_json::to_value(value)
        .map_err(|e| Error::Precondition(format!("serialization failed: {e}")))?;
    let mut s = serde_json::to_string_pretty(&v)
        .map_err(|e| Error::Precondition(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

pub fn parse_recipe_kind(kind: &str) -> Option<RecipeKind> {
    match kind {
        "concat" => Some(RecipeKind::Concat),
        "shi_cyclic" | "shi" => Some(RecipeKind::ShiCyclic),
        "repeat" => Some(RecipeKind::Repeat),
        "extend_b2" | "extend" => Some(RecipeKind::ExtendB2),
        "thm5" => Some(RecipeKind::Thm5),
        "thm6" => Some(RecipeKind::Thm6),
        _ => None,
    }
}
