//! The report envelope and its JSON and CSV renderings.

use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "fingroup";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
/// Bumped whenever a CSV column list changes.
pub const CSV_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, Serialize)]
pub struct Item {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Item {
    pub fn ok(name: impl Into<String>, result: impl Serialize) -> Self {
        let result = serde_json::to_value(result).expect("results serialize");
        Self { name: name.into(), status: Status::Ok, error: None, result: Some(result) }
    }

    pub fn error(name: impl Into<String>, error: impl ToString) -> Self {
        Self { name: name.into(), status: Status::Error, error: Some(error.to_string()), result: None }
    }

    pub fn from_result<T: Serialize, E: ToString>(name: impl Into<String>, r: Result<T, E>) -> Self {
        match r {
            Ok(v) => Self::ok(name, v),
            Err(e) => Self::error(name, e),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub job: Value,
    pub warnings: Vec<String>,
    pub items: Vec<Item>,
}

impl Report {
    /// 0 when every item succeeded (or there were none), 1 when all failed,
    /// 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        let failed = self.items.iter().filter(|i| i.status == Status::Error).count();
        match failed {
            0 => 0,
            n if n == self.items.len() => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("report serializes");
        out.push(b'\n');
        out
    }

    /// One row per item. Result columns are dotted paths into the item
    /// result; nested arrays and objects are written as compact JSON.
    pub fn to_csv(&self, columns: &[&str]) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let header = ["csv_version", "command", "name", "status", "error"].into_iter().chain(columns.iter().copied());
        w.write_record(header).expect("in-memory write");
        for item in &self.items {
            let mut row = vec![
                CSV_VERSION.to_string(),
                self.command.to_string(),
                item.name.clone(),
                match item.status {
                    Status::Ok => "ok".into(),
                    Status::Error => "error".into(),
                },
                item.error.clone().unwrap_or_default(),
            ];
            for col in columns {
                row.push(item.result.as_ref().and_then(|r| lookup(r, col)).map(cell).unwrap_or_default());
            }
            w.write_record(&row).expect("in-memory write");
        }
        w.into_inner().expect("in-memory flush")
    }
}

fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |v, key| v.get(key))
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn report(items: Vec<Item>) -> Report {
        Report { tool: TOOL, version: VERSION, command: "x", job: json!({}), warnings: vec![], items }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(report(vec![]).exit_code(), 0);
        assert_eq!(report(vec![Item::ok("a", 1)]).exit_code(), 0);
        assert_eq!(report(vec![Item::ok("a", 1), Item::error("b", "no")]).exit_code(), 2);
        assert_eq!(report(vec![Item::error("b", "no")]).exit_code(), 1);
    }

    #[test]
    fn csv_paths() {
        let r = report(vec![
            Item::ok("g", json!({"order": 6, "neumann": {"value": 3}, "list": [1, 2], "f": "1/2"})),
            Item::error("h", "missing, really"),
        ]);
        let text = String::from_utf8(r.to_csv(&["order", "neumann.value", "list", "f", "absent"])).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "csv_version,command,name,status,error,order,neumann.value,list,f,absent");
        assert_eq!(lines[1], "1,x,g,ok,,6,3,\"[1,2]\",1/2,");
        assert_eq!(lines[2], "1,x,h,error,\"missing, really\",,,,,");
    }
}
