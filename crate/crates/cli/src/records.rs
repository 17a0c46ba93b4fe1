use serde::Serialize;

/// One machine-readable run record, printed with `--json`.
#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub command: String,
    pub instance: String,
    pub parameter: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation_bits: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub examined: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pruned: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub wall_ms: f64,
}

impl RunRecord {
    pub fn new(command: &str, instance: String, parameter: &str) -> Self {
        RunRecord {
            command: command.to_string(),
            instance,
            parameter: parameter.to_string(),
            value: None,
            lower: None,
            upper: None,
            orientation_bits: None,
            examined: None,
            pruned: None,
            seed: None,
            wall_ms: 0.0,
        }
    }

    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string(self).expect("record serializes"));
        } else {
            let mut line = format!("{} {}", self.parameter, self.instance);
            match (self.value, self.lower, self.upper) {
                (Some(v), _, _) => line.push_str(&format!(" = {v}")),
                (None, Some(lo), Some(hi)) => line.push_str(&format!(" in [{lo}, {hi}]")),
                _ => line.push_str(" = none"),
            }
            if let Some(bits) = self.orientation_bits {
                line.push_str(&format!("  orientation_bits={bits:#x}"));
            }
            if let (Some(e), Some(p)) = (self.examined, self.pruned) {
                line.push_str(&format!("  examined={e} pruned={p}"));
            }
            line.push_str(&format!("  ({:.1} ms)", self.wall_ms));
            println!("{line}");
        }
    }
}
