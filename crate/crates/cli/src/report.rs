use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::CliError;

pub const SCHEMA_VERSION: u32 = 1;

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub fn inputs_json(inputs: &[(String, String)]) -> Value {
    Value::Array(
        inputs
            .iter()
            .map(|(name, sha)| json!({ "name": name, "sha256": sha }))
            .collect(),
    )
}

pub fn error_json(e: &CliError) -> Value {
    use fibcat::Error as E;
    let (kind, details) = match e {
        CliError::Core(core) => match core {
            E::MissingComposite { .. } => ("missing_composite", Value::Null),
            E::LawViolation(_) => ("law_violation", Value::Null),
            E::DanglingEndpoint(_) => ("dangling_endpoint", Value::Null),
            E::DuplicateId(_) => ("duplicate_id", Value::Null),
            E::UnmappedItem(_) => ("unmapped_item", Value::Null),
            E::TargetMismatch => ("target_mismatch", Value::Null),
            E::ParallelismMismatch(_) => ("parallelism_mismatch", Value::Null),
            E::UnknownObject(_) => ("unknown_object", Value::Null),
            E::UnknownArrow(_) => ("unknown_arrow", Value::Null),
            E::NoLift { object, arrow } => ("no_lift", json!({ "object": object, "arrow": arrow })),
            E::NotCloven { object, arrow } => ("not_cloven", json!({ "object": object, "arrow": arrow })),
            E::InstanceTooLarge { what, size, cap } => (
                "instance_too_large",
                json!({ "what": what, "size": size, "cap": cap }),
            ),
            E::NonTermination { max_len, trace } => (
                "non_termination",
                json!({ "max_len": max_len, "trace": trace }),
            ),
            E::Parse(_) => ("parse", Value::Null),
        },
        CliError::Io(..) => ("io", Value::Null),
        CliError::UnknownEntry(_) => ("unknown_entry", Value::Null),
        CliError::Usage(_) => ("usage", Value::Null),
    };
    json!({ "kind": kind, "message": e.to_string(), "details": details })
}
