use std::path::Path;

use bmlab_core::graph::read_graph;
use bmlab_core::{FamilySpec, Graph};

use crate::CliError;

/// How the positional `<input>` argument is interpreted.
#[derive(Debug, Clone, Copy, Default)]
pub struct InputMode {
    /// Treat the input as JSON `FamilySpec` text or a file holding it.
    pub spec_json: bool,
    /// Reject family specs outside the sharp-graph catalog.
    pub catalog: bool,
}

pub struct Loaded {
    pub label: String,
    pub graph: Graph,
}

/// Resolves a family spec string, a JSON family spec, or a graph file.
pub fn load(input: &str, mode: InputMode) -> Result<Loaded, CliError> {
    if mode.spec_json {
        let text = if input.trim_start().starts_with('{') {
            input.to_string()
        } else {
            std::fs::read_to_string(input).map_err(|e| CliError::Input(format!("{input}: {e}")))?
        };
        let spec: FamilySpec =
            serde_json::from_str(&text).map_err(|e| CliError::Input(format!("invalid family spec JSON: {e}")))?;
        return from_spec(&spec, mode);
    }
    match FamilySpec::parse(input) {
        Ok(spec) => from_spec(&spec, mode),
        Err(spec_err) => {
            let path = Path::new(input);
            if !path.exists() {
                return Err(CliError::Input(format!(
                    "{input:?} is neither a family spec ({spec_err}) nor an existing file"
                )));
            }
            if mode.catalog {
                return Err(CliError::Input("--catalog applies to family specs, not graph files".into()));
            }
            let graph = read_graph(path)?;
            Ok(Loaded { label: input.to_string(), graph })
        }
    }
}

fn from_spec(spec: &FamilySpec, mode: InputMode) -> Result<Loaded, CliError> {
    if mode.catalog {
        spec.validate_catalog()?;
    }
    Ok(Loaded { label: spec.to_string(), graph: spec.build()? })
}
