//! Element names for constructed structures.
//!
//! Composite elements (tuples of components) are written as their components
//! joined by `|`. Backslashes and bars inside a component are escaped with a
//! backslash, so distinct component lists always give distinct names.

pub const SEPARATOR: char = '|';

pub fn encode<S: AsRef<str>>(components: &[S]) -> String {
    let mut out = String::new();
    for (i, c) in components.iter().enumerate() {
        if i > 0 {
            out.push(SEPARATOR);
        }
        for ch in c.as_ref().chars() {
            if ch == '\\' || ch == SEPARATOR {
                out.push('\\');
            }
            out.push(ch);
        }
    }
    out
}

/// Inverse of [`encode`].
pub fn decode(name: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut chars = name.chars();
    while let Some(ch) = chars.next() {
        match ch {
            '\\' => {
                if let Some(next) = chars.next() {
                    out.last_mut().unwrap().push(next);
                }
            }
            SEPARATOR => out.push(String::new()),
            _ => out.last_mut().unwrap().push(ch),
        }
    }
    out
}
