//! Reading codeword files for `export --highlight-code`.

use perfcode::bitstrings::BitWord;
use serde_json::Value;

use crate::DataError;

/// Extracts codewords from any of the accepted file shapes:
/// a `search` or `construct` record (`witness`), an `export` JSON dump
/// (`highlight`), a JSON array of words, or plain text with one word per line.
pub fn parse_code_file(text: &str) -> Result<Vec<BitWord>, DataError> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        let value: Value =
            serde_json::from_str(text).map_err(|e| DataError(format!("invalid JSON: {e}")))?;
        return words_from_json(&value);
    }
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_word)
        .collect()
}

fn parse_word(s: &str) -> Result<BitWord, DataError> {
    s.parse()
        .map_err(|_| DataError(format!("'{s}' is not a binary word")))
}

fn words_from_json(value: &Value) -> Result<Vec<BitWord>, DataError> {
    let list = match value {
        Value::Array(_) => value,
        Value::Object(map) => ["witness", "highlight"]
            .iter()
            .find_map(|k| map.get(*k).filter(|v| !v.is_null()))
            .ok_or_else(|| DataError("JSON object has no 'witness' or 'highlight' list".into()))?,
        _ => return Err(DataError("expected a JSON object or array".into())),
    };
    let Value::Array(items) = list else {
        return Err(DataError("codeword list is not an array".into()));
    };
    items
        .iter()
        .map(|v| match v {
            Value::String(s) => parse_word(s),
            other => Err(DataError(format!("codeword {other} is not a string"))),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(words: Vec<BitWord>) -> Vec<String> {
        words.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn accepted_shapes() {
        let expect = vec!["000".to_string(), "111".to_string()];
        let inputs = [
            r#"{"status":"found","witness":["000","111"],"nodes":3,"millis":0,"seed":0}"#,
            r#"{"n":3,"family":"qn","vertices":[],"edges":[],"highlight":["000","111"]}"#,
            r#"["000", "111"]"#,
            "# code\n000\n\n111\n",
        ];
        for text in inputs {
            assert_eq!(strings(parse_code_file(text).unwrap()), expect, "{text}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_code_file("0102\n").unwrap_err().0.contains("0102"));
        assert!(parse_code_file(r#"{"status":"exhausted"}"#).is_err());
        assert!(parse_code_file(r#"[1, 2]"#).is_err());
        assert!(parse_code_file("{oops").is_err());
    }
}
