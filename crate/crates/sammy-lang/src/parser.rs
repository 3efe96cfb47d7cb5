use crate::ast::{ConstName, Instruction, InstructionBody, Kind, OpName, Program};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {message}")]
    SyntaxError {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown operation or constant '{name}' at line {line}")]
    UnknownOperation { line: usize, name: String },
    #[error("duplicate label '{label}' at line {line}")]
    DuplicateLabel { line: usize, label: String },
    #[error("label '{label}' referenced at line {line} does not exist")]
    UnknownLabel { line: usize, label: String },
    #[error("RETURN at line {line} is not the last line")]
    ReturnNotLast { line: usize },
    #[error("program has no final RETURN line")]
    MissingReturn,
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub(crate) fn is_reserved(s: &str) -> bool {
    matches!(s, "IF" | "GOTO" | "RETURN" | "INPUT")
        || OpName::from_name(s).is_some()
        || ConstName::from_name(s).is_some()
        || Kind::from_name(s).is_some()
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError::SyntaxError {
        line,
        col,
        message: message.into(),
    }
}

fn check_ident(name: &str, line: usize, what: &str) -> Result<(), ParseError> {
    if !is_ident(name) {
        return Err(syntax(line, 1, format!("invalid {what} name '{name}'")));
    }
    if is_reserved(name) {
        return Err(syntax(
            line,
            1,
            format!("reserved word '{name}' cannot be used as a {what}"),
        ));
    }
    Ok(())
}

/// Parses one statement per line. `#` starts a comment; blank lines are
/// skipped. Any statement may carry a `LABEL:` prefix.
pub fn parse(text: &str) -> Result<Program, ParseError> {
    let mut instructions = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        instructions.push(parse_line(line, line_no)?);
    }
    validate_instructions(&instructions, |i| {
        // map instruction index back to its 1-based position for messages
        i + 1
    })?;
    let token_count = crate::goedel::token_count(&instructions);
    Ok(Program {
        instructions,
        source: text.to_string(),
        token_count,
    })
}

/// Structural invariants shared by `parse` and Goedel decoding: labels are
/// unique, every referenced label exists, RETURN is exactly the final line.
pub fn validate_instructions(
    instructions: &[Instruction],
    line_of: impl Fn(usize) -> usize,
) -> Result<(), ParseError> {
    let mut labels = std::collections::BTreeSet::new();
    for (i, inst) in instructions.iter().enumerate() {
        if let Some(l) = &inst.label {
            if !labels.insert(l.clone()) {
                return Err(ParseError::DuplicateLabel {
                    line: line_of(i),
                    label: l.clone(),
                });
            }
        }
    }
    for (i, inst) in instructions.iter().enumerate() {
        if let InstructionBody::If { target, .. } = &inst.body {
            if !labels.contains(target) {
                return Err(ParseError::UnknownLabel {
                    line: line_of(i),
                    label: target.clone(),
                });
            }
        }
    }
    for (i, inst) in instructions.iter().enumerate() {
        if i + 1 != instructions.len() && matches!(inst.body, InstructionBody::Return { .. }) {
            return Err(ParseError::ReturnNotLast { line: line_of(i) });
        }
    }
    match instructions.last() {
        None => return Err(ParseError::MissingReturn),
        Some(last) => {
            if !matches!(last.body, InstructionBody::Return { .. }) {
                return Err(ParseError::MissingReturn);
            }
        }
    }
    Ok(())
}

fn parse_line(line: &str, line_no: usize) -> Result<Instruction, ParseError> {
    // optional label: "NAME:" not followed by '='
    let (label, rest) = match line.find(':') {
        Some(p)
            if !line[p..].starts_with(":=")
                && is_ident(line[..p].trim())
                && !line[..p].trim().is_empty() =>
        {
            let name = line[..p].trim().to_string();
            check_ident(&name, line_no, "label")?;
            (Some(name), line[p + 1..].trim())
        }
        _ => (None, line),
    };

    let body = parse_body(rest, line_no)?;
    Ok(Instruction { label, body })
}

fn parse_body(rest: &str, line: usize) -> Result<InstructionBody, ParseError> {
    if let Some(after) = rest.strip_prefix("INPUT ") {
        let mut parts = after.splitn(2, ':');
        let var = parts.next().unwrap_or("").trim().to_string();
        let kind_s = parts
            .next()
            .ok_or_else(|| syntax(line, 1, "INPUT requires ': KIND'"))?
            .trim();
        check_ident(&var, line, "variable")?;
        let kind = Kind::from_name(kind_s)
            .ok_or_else(|| syntax(line, 1, format!("unknown input kind '{kind_s}'")))?;
        return Ok(InstructionBody::Input { var, kind });
    }
    if let Some(after) = rest.strip_prefix("IF ") {
        let (cond, target) = after
            .split_once(" GOTO ")
            .ok_or_else(|| syntax(line, 1, "IF requires 'GOTO LABEL'"))?;
        let (l, r) = cond
            .split_once("==")
            .ok_or_else(|| syntax(line, 1, "IF requires 'V1 == V2'"))?;
        let left = l.trim().to_string();
        let right = r.trim().to_string();
        let target = target.trim().to_string();
        check_ident(&left, line, "variable")?;
        check_ident(&right, line, "variable")?;
        check_ident(&target, line, "label")?;
        return Ok(InstructionBody::If {
            left,
            right,
            target,
        });
    }
    if let Some(after) = rest.strip_prefix("RETURN") {
        let inner = after.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| syntax(line, 1, "RETURN requires parentheses"))?;
        let vars: Vec<String> = inner
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if vars.is_empty() || vars.len() > 3 {
            return Err(syntax(line, 1, "RETURN takes between 1 and 3 variables"));
        }
        for v in &vars {
            check_ident(v, line, "variable")?;
        }
        return Ok(InstructionBody::Return { vars });
    }

    // assignment: VAR := OP(ARGS) or VAR := CONSTANT
    let (var, rhs) = rest
        .split_once(":=")
        .ok_or_else(|| syntax(line, 1, "expected an assignment or statement keyword"))?;
    let var = var.trim().to_string();
    check_ident(&var, line, "variable")?;
    let rhs = rhs.trim();
    if let Some(open) = rhs.find('(') {
        let name = rhs[..open].trim();
        let close = rhs
            .rfind(')')
            .ok_or_else(|| syntax(line, 1, "missing ')'"))?;
        if close != rhs.len() - 1 {
            return Err(syntax(line, 1, "trailing text after ')'"));
        }
        let op = OpName::from_name(name).ok_or_else(|| ParseError::UnknownOperation {
            line,
            name: name.to_string(),
        })?;
        let args: Vec<String> = rhs[open + 1..close]
            .split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect();
        if args.len() != op.arity() {
            return Err(syntax(
                line,
                1,
                format!("{} takes {} arguments, got {}", op.name(), op.arity(), args.len()),
            ));
        }
        for a in &args {
            check_ident(a, line, "variable")?;
        }
        Ok(InstructionBody::Assign { var, op, args })
    } else {
        let constant = ConstName::from_name(rhs).ok_or_else(|| ParseError::UnknownOperation {
            line,
            name: rhs.to_string(),
        })?;
        Ok(InstructionBody::Const { var, constant })
    }
}
