//! Identity files: one identity per block, blocks separated by blank lines,
//! `#` starts a comment. Files ending in `.hid` in a directory are read in
//! name order.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use super::eval::EvalContext;
use super::parser::parse_identity;
use super::sort::{check, CheckedIdentity};
use super::DslError;
use crate::verification::VerificationReport;

/// A named corpus source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusFile {
    pub name: String,
    pub text: String,
}

const STANDARD: [(&str, &str); 7] = [
    ("actions.hid", include_str!("../../corpus/identities/actions.hid")),
    ("axioms.hid", include_str!("../../corpus/identities/axioms.hid")),
    ("dhat.hid", include_str!("../../corpus/identities/dhat.hid")),
    ("modular.hid", include_str!("../../corpus/identities/modular.hid")),
    ("pairing.hid", include_str!("../../corpus/identities/pairing.hid")),
    ("radford.hid", include_str!("../../corpus/identities/radford.hid")),
    ("selfdual.hid", include_str!("../../corpus/identities/selfdual.hid")),
];

const NEGATIVE: [(&str, &str); 1] =
    [("radford_swapped.hid", include_str!("../../corpus/negative/radford_swapped.hid"))];

fn files(list: &[(&str, &str)]) -> Vec<CorpusFile> {
    list.iter()
        .map(|(name, text)| CorpusFile { name: name.to_string(), text: text.to_string() })
        .collect()
}

/// The bundled corpus of identities that must hold on every Hopf algebra.
pub fn standard_corpus() -> Vec<CorpusFile> {
    files(&STANDARD)
}

/// Deliberately wrong variants, expected to fail on non-trivial examples.
pub fn negative_corpus() -> Vec<CorpusFile> {
    files(&NEGATIVE)
}

/// Splits a file into identity blocks and parses each one.
pub fn parse_corpus(text: &str) -> Result<Vec<CheckedIdentity>, DslError> {
    let mut out = Vec::new();
    let mut block = String::new();
    let mut start = 0;
    let mut flush = |block: &mut String, start: usize| -> Result<(), DslError> {
        let has_content = block.lines().any(|l| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });
        if has_content {
            // strip whole-line comments before the name; the lexer handles the rest
            let mut skipped = 0;
            let mut body = block.as_str();
            while let Some(line) = body.lines().next() {
                let t = line.trim();
                if !t.is_empty() && !t.starts_with('#') {
                    break;
                }
                skipped += 1;
                body = body.split_once('\n').map_or("", |(_, rest)| rest);
            }
            out.push(check(&parse_identity(body, start + skipped)?)?);
        }
        block.clear();
        Ok(())
    };
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            flush(&mut block, start)?;
            continue;
        }
        if block.is_empty() {
            start = i + 1;
        }
        block.push_str(line);
        block.push('\n');
    }
    flush(&mut block, start)?;
    Ok(out)
}

/// Parses several files, attaching file names to errors and rejecting
/// repeated identity names.
pub fn parse_files(files: &[CorpusFile]) -> Result<Vec<CheckedIdentity>, DslError> {
    let mut all = Vec::new();
    let mut seen = HashSet::new();
    for f in files {
        let ids = parse_corpus(&f.text)
            .map_err(|e| DslError::InFile { path: f.name.clone(), source: Box::new(e) })?;
        for id in ids {
            if !seen.insert(id.program.name.clone()) {
                return Err(DslError::InFile {
                    path: f.name.clone(),
                    source: Box::new(DslError::Duplicate(id.program.name.clone())),
                });
            }
            all.push(id);
        }
    }
    Ok(all)
}

pub fn load_corpus_dir(dir: impl AsRef<Path>) -> Result<Vec<CorpusFile>, DslError> {
    let dir = dir.as_ref();
    let io = |e: std::io::Error| DslError::Io { path: dir.display().to_string(), msg: e.to_string() };
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "hid"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(DslError::Io { path: dir.display().to_string(), msg: "no .hid files".into() });
    }
    paths
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p)
                .map_err(|e| DslError::Io { path: p.display().to_string(), msg: e.to_string() })?;
            Ok(CorpusFile { name: p.display().to_string(), text })
        })
        .collect()
}

/// Evaluates every identity on the context's system, in corpus order.
pub fn run_corpus(ctx: &EvalContext, ids: &[CheckedIdentity]) -> VerificationReport {
    VerificationReport {
        algebra: ctx.system().primal.name().to_string(),
        results: ids.iter().map(|id| ctx.evaluate(id).into()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_and_comments() {
        let text = "# header\n\na: forall x in A . x = x\n\n# about b\nb: forall x in A .\n  S(S(x))\n  = S2(x)  # trailing\n";
        let ids = parse_corpus(text).unwrap();
        assert_eq!(ids.len(), 2);
        assert_eq!(ids[1].program.name, "b");
    }

    #[test]
    fn errors_carry_file_lines() {
        let text = "a: forall x in A . x = x\n\n# c\nb: forall x in A .\n  x + = x\n";
        match parse_corpus(text).unwrap_err() {
            DslError::Syntax { line, .. } => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bundled_corpora_parse() {
        assert!(parse_files(&standard_corpus()).unwrap().len() > 30);
        assert_eq!(parse_files(&negative_corpus()).unwrap().len(), 1);
        let dup = vec![
            CorpusFile { name: "x".into(), text: "a: forall x in A . x = x".into() },
            CorpusFile { name: "y".into(), text: "a: forall x in A . x = x".into() },
        ];
        assert!(matches!(parse_files(&dup), Err(DslError::InFile { .. })));
    }
}
