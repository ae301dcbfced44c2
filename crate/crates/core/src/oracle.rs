//! Placeholder.
use crate::docalc::{CompatibleAdmgWitness, DocalcError, RuleQuery};

pub(crate) fn rule_counterexample_impl(
    _q: &RuleQuery,
) -> Result<CompatibleAdmgWitness, DocalcError> {
    unimplemented!()
}
