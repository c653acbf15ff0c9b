use serde::Serialize;

use super::{build_model_on, ModelError, ModelKind};
use crate::complex::{ComplexJson, SurfaceType};
use crate::preferences::AlternativeSet;
use crate::social_choice::{fairness_report, image_of_psi, ProfileSpace, PsiImage, SocialChoiceError, SocialWelfareFunction};

/// Picks the model for an image of the restricted function: the strict-order
/// annulus when the image is exactly the strict orders, the realised
/// contradictory model when it also holds a cycle. The two strict cycles
/// count as one contradictory object, so an image with only one of them is
/// accepted with a warning.
pub fn arrovian_model(image: &PsiImage) -> Result<(super::Model, Option<String>), ModelError> {
    let missing = image.missing_orders();
    if !missing.is_empty() {
        let names: Vec<String> = missing.iter().map(ToString::to_string).collect();
        return Err(ModelError::LemmaViolation {
            image: image.to_string(),
            reason: format!("strict orders missing from the image: {}", names.join(", ")),
        });
    }
    let warning = (image.cycles.len() == 1)
        .then(|| format!("image holds only the cycle {}; treated as the contradictory cycle", image.cycles[0]));
    let kind = if image.has_cycle() { ModelKind::CONTRADICTORY_REALISED } else { ModelKind::VALID_UNREALISED };
    Ok((build_model_on(kind, &image.triple)?, warning))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ArrovianVerdict {
    pub swf: String,
    pub individuals: usize,
    pub alternatives: AlternativeSet,
    pub triple: AlternativeSet,
    pub image: PsiImage,
    pub model_kind: String,
    pub model: ComplexJson,
    pub surface: SurfaceType,
    pub orientable: bool,
    pub dictator: Option<usize>,
    pub non_dictatorship: bool,
    /// Non-dictatorship holds exactly when the model is non-orientable.
    pub theorem_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl ArrovianVerdict {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verdict serialises")
    }
}

/// Audits the function, computes the image of its restriction to `triple`,
/// builds the model and reads off orientability. Fails naming the audit if
/// unanimity or independence of irrelevant alternatives does not hold.
pub fn arrow_check(
    swf: &SocialWelfareFunction,
    space: &ProfileSpace,
    triple: &AlternativeSet,
) -> Result<ArrovianVerdict, ModelError> {
    let report = fairness_report(swf, space)?;
    if let Some(v) = report.unanimity.violation() {
        return Err(SocialChoiceError::PreconditionFailed {
            audit: "Unanimity",
            certificate: serde_json::to_value(v).expect("certificate serialises"),
        }
        .into());
    }
    if let Some(v) = report.iia.violation() {
        return Err(SocialChoiceError::PreconditionFailed {
            audit: "IIA",
            certificate: serde_json::to_value(v).expect("certificate serialises"),
        }
        .into());
    }
    let image = image_of_psi(swf, space, triple)?;
    let (model, warning) = arrovian_model(&image)?;
    let surface = model.complex.classify()?;
    let orientable = model.complex.orient()?.is_orientable();
    let non_dictatorship = report.non_dictatorship();
    Ok(ArrovianVerdict {
        swf: swf.name(),
        individuals: space.individuals(),
        alternatives: space.alternatives().clone(),
        triple: triple.clone(),
        model_kind: model.kind.to_string(),
        model: ComplexJson::from(&model.complex),
        image,
        surface,
        orientable,
        dictator: report.dictator.dictator,
        non_dictatorship,
        theorem_holds: non_dictatorship != orientable,
        warning,
    })
}
