use std::io::Read;

use serde::de::DeserializeOwned;
use witt_core::{Error, Result};

fn read_file(path: &str) -> Result<String> {
    if path == "-" {
        return read_stdin();
    }
    std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
    Ok(s)
}

fn parse<T: DeserializeOwned>(text: &str, source: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("{source}: {e}")))
}

/// Exactly `count` documents: one per listed file, the rest from stdin.
pub fn documents<T: DeserializeOwned>(files: &[String], count: usize) -> Result<Vec<T>> {
    if files.len() > count {
        return Err(Error::InvalidInput(format!(
            "expected {count} input(s), got {} files",
            files.len()
        )));
    }
    let mut out = Vec::with_capacity(count);
    for f in files {
        out.push(parse(&read_file(f)?, f)?);
    }
    if out.len() < count {
        let text = read_stdin()?;
        let stream = serde_json::Deserializer::from_str(&text).into_iter::<T>();
        for doc in stream {
            out.push(doc.map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?);
        }
        if out.len() != count {
            return Err(Error::InvalidInput(format!(
                "expected {count} input(s), got {}",
                out.len()
            )));
        }
    }
    Ok(out)
}

pub fn one<T: DeserializeOwned>(files: &[String]) -> Result<T> {
    Ok(documents(files, 1)?.pop().expect("one document"))
}

pub fn two<T: DeserializeOwned>(files: &[String]) -> Result<(T, T)> {
    let mut v = documents(files, 2)?;
    let b = v.pop().expect("two documents");
    let a = v.pop().expect("two documents");
    Ok((a, b))
}

pub fn file<T: DeserializeOwned>(path: &str) -> Result<T> {
    parse(&read_file(path)?, path)
}
