use serde_json::{json, Map, Value};

use crate::config::{Format, RunConfig};

pub const SCHEMA: &str = "parkspace/1";

pub struct Report {
    pub command: &'static str,
    pub group: String,
    pub ok: bool,
    pub summary: String,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self, config: &RunConfig) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "group": self.group,
            "config": config.to_string(),
            "ok": self.ok,
            "summary": self.summary,
            "result": self.result,
        })
    }

    pub fn render(&self, config: &RunConfig) -> String {
        match config.format {
            Format::Json => serde_json::to_string_pretty(&self.to_json(config)).expect("serializable") + "\n",
            Format::Markdown => self.to_markdown(config),
        }
    }

    fn to_markdown(&self, config: &RunConfig) -> String {
        let mut out = format!(
            "# {} {}\n\n- schema: `{SCHEMA}`\n- config: `{config}`\n- status: **{}**\n- {}\n",
            self.command,
            self.group,
            if self.ok { "PASS" } else { "FAIL" },
            self.summary
        );
        if let Value::Object(map) = &self.result {
            write_object(&mut out, map, 2);
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn write_object(out: &mut String, map: &Map<String, Value>, level: usize) {
    let (simple, nested): (Vec<_>, Vec<_>) = map.iter().partition(|(_, v)| match v {
        Value::Object(_) => false,
        Value::Array(a) => a.iter().all(|x| !x.is_object() && !x.is_array()),
        _ => true,
    });
    if !simple.is_empty() {
        out.push_str("\n| field | value |\n|---|---|\n");
        for (k, v) in simple {
            out.push_str(&format!("| {k} | {} |\n", scalar(v)));
        }
    }
    for (k, v) in nested {
        out.push_str(&format!("\n{} {k}\n", "#".repeat(level)));
        match v {
            Value::Object(m) => write_object(out, m, level + 1),
            Value::Array(rows) => write_table(out, rows),
            _ => {}
        }
    }
}

fn write_table(out: &mut String, rows: &[Value]) {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !cols.contains(k) {
                    cols.push(k.clone());
                }
            }
        }
    }
    if cols.is_empty() {
        for r in rows {
            out.push_str(&format!("- {}\n", scalar(r)));
        }
        return;
    }
    out.push_str(&format!("\n| {} |\n|{}\n", cols.join(" | "), "---|".repeat(cols.len())));
    for r in rows {
        let cells: Vec<String> = cols.iter().map(|c| r.get(c).map_or("-".into(), scalar)).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
}
