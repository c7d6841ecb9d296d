//! Deterministic report assembly. Every command fills both the human lines
//! and the flat key-value stream from the same computed data; `--kv`
//! selects which rendering is printed.

#[derive(Debug, Default)]
pub struct Report {
    human: Vec<String>,
    kv: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.human.push(text.into());
    }

    pub fn pair(&mut self, key: impl Into<String>, value: impl ToString) {
        self.kv.push((key.into(), value.to_string()));
    }

    /// Add a human line and a key-value pair in one step.
    pub fn both(&mut self, key: &str, label: &str, value: impl ToString) {
        let value = value.to_string();
        self.human.push(format!("{label}: {value}"));
        self.kv.push((key.to_string(), value));
    }

    pub fn render(&self, kv_mode: bool) -> String {
        let mut out = String::new();
        if kv_mode {
            for (k, v) in &self.kv {
                out.push_str(k);
                out.push('=');
                out.push_str(v);
                out.push('\n');
            }
        } else {
            for line in &self.human {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    }
}
