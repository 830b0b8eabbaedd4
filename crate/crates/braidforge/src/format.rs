//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! name B_3(S^2)
//! gens s1 s2
//! rel s1*s2*s1*s2^-1*s1^-1*s2^-1
//! img s1 s1^2
//! ```

use braidforge_core::presentations::Presentation;
use braidforge_core::{format_word, parse_word, parse_word_any, Alphabet, GenSym, Word};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("SyntaxError: line {line}: {message}")]
    Syntax { line: usize, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Everything a file may contain. Presentation files use `name`, `gens`
/// and `rel`; homomorphism image files use `img`.
#[derive(Debug, Default)]
struct Document {
    name: Option<String>,
    gens: Option<(usize, Vec<GenSym>)>,
    rels: Vec<(usize, String)>,
    imgs: Vec<(usize, GenSym, String)>,
}

fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut doc = Document::default();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match key {
            "name" => doc.name = Some(rest.to_string()),
            "gens" => {
                if doc.gens.is_some() {
                    return Err(syntax(line_no, "duplicate gens line"));
                }
                let mut syms = Vec::new();
                for name in rest.split_whitespace() {
                    let sym = GenSym::new(name).map_err(|e| syntax(line_no, e.to_string()))?;
                    if syms.contains(&sym) {
                        return Err(syntax(line_no, format!("duplicate generator {name}")));
                    }
                    syms.push(sym);
                }
                doc.gens = Some((line_no, syms));
            }
            "rel" => doc.rels.push((line_no, rest.to_string())),
            "img" => {
                let (g, w) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                let sym = GenSym::new(g).map_err(|e| syntax(line_no, e.to_string()))?;
                doc.imgs.push((line_no, sym, w.trim().to_string()));
            }
            other => return Err(syntax(line_no, format!("unknown keyword {other}"))),
        }
    }
    Ok(doc)
}

fn presentation_of(doc: &Document) -> Result<Presentation, FormatError> {
    let (gens_line, gens) = doc.gens.clone().ok_or_else(|| syntax(0, "missing gens line"))?;
    let alphabet = Alphabet::new(gens.iter().cloned());
    let mut rels = Vec::new();
    for (line, text) in &doc.rels {
        rels.push(parse_word(text, &alphabet).map_err(|e| syntax(*line, e.to_string()))?);
    }
    let name = doc.name.clone().unwrap_or_default();
    Presentation::new(&name, gens, rels).map_err(|e| syntax(gens_line, e.to_string()))
}

pub fn load_presentation(text: &str) -> Result<Presentation, FormatError> {
    let doc = parse_document(text)?;
    if let Some((line, _, _)) = doc.imgs.first() {
        return Err(syntax(*line, "img lines are not allowed in a presentation file"));
    }
    presentation_of(&doc)
}

pub fn save_presentation(p: &Presentation) -> String {
    let mut out = String::new();
    if !p.name.is_empty() {
        out.push_str(&format!("name {}\n", p.name));
    }
    let gens: Vec<&str> = p.generators().iter().map(|g| g.name()).collect();
    out.push_str(&format!("gens {}\n", gens.join(" ")));
    for r in p.relators() {
        out.push_str(&format!("rel {}\n", format_word(r)));
    }
    out
}

/// Generator images from `img` lines. Image words may use any symbols.
pub fn load_images(text: &str) -> Result<Vec<(GenSym, Word)>, FormatError> {
    let doc = parse_document(text)?;
    if let Some((line, _)) = doc.rels.first() {
        return Err(syntax(*line, "rel lines are not allowed in an image file"));
    }
    let mut out: Vec<(GenSym, Word)> = Vec::new();
    for (line, sym, text) in &doc.imgs {
        if out.iter().any(|(s, _)| s == sym) {
            return Err(syntax(*line, format!("duplicate image for {sym}")));
        }
        let w = parse_word_any(text).map_err(|e| syntax(*line, e.to_string()))?;
        out.push((sym.clone(), w));
    }
    Ok(out)
}

pub fn save_images(images: &[(GenSym, Word)]) -> String {
    images.iter().map(|(g, w)| format!("img {g} {}\n", format_word(w))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidforge_core::presentations::{braid_presentation, SurfaceParams};

    #[test]
    fn minimal_file() {
        let p = load_presentation("# Z/2\ngens a\nrel a^2\n").unwrap();
        assert_eq!(p.generators().len(), 1);
        assert_eq!(p.relators()[0].to_string(), "a^2");
    }

    #[test]
    fn round_trip() {
        for (g, pp, n) in [(0, 0, 3), (2, 2, 3), (1, 0, 1)] {
            let p = braid_presentation(SurfaceParams::new(g, pp, n));
            assert_eq!(load_presentation(&save_presentation(&p)).unwrap(), p);
        }
    }

    #[test]
    fn errors_carry_lines() {
        let err = load_presentation("gens a\n\nrel a*b\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 3, .. }), "{err}");
        let err = load_presentation("gens a\nfoo bar\n").unwrap_err();
        assert!(matches!(err, FormatError::Syntax { line: 2, .. }));
        assert!(load_presentation("rel a\n").is_err());
        assert!(load_presentation("gens a a\n").is_err());
    }

    #[test]
    fn images() {
        let imgs = load_images("# swap\nimg s1 z1\nimg z1 s1\n").unwrap();
        assert_eq!(imgs.len(), 2);
        assert_eq!(load_images(&save_images(&imgs)).unwrap(), imgs);
        assert!(load_images("img s1 z1\nimg s1 s1\n").is_err());
    }
}
