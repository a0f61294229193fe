//! External model-checker adapter: emit the node, run the configured tool,
//! and decode the witnessing trace (if any) back into a word.
//!
//! The tool's JSON output is walked structurally rather than deserialized
//! against a rigid schema; the only parts interpreted are property answers
//! and the input stream `I` of a counterexample trace.

use crate::config::VerifierConfig;
use crate::query::Query;
use crate::verdict::{refutes, BackendName, UnknownReason, Verdict};
use crasp2lustre::{build_unit, decode_word, emit_lustre_text, sidecar_json, TranslateOptions};
use serde_json::Value;
use std::io::Read;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

fn unusable(detail: impl Into<String>) -> Verdict {
    Verdict::Unknown {
        reason: UnknownReason::ToolOutputUnusable { detail: detail.into() },
    }
}

/// Run the external tool on the emitted node. Missing tool and timeout are
/// soft outcomes, never errors: the rest of the suite must run without the
/// tool installed.
pub fn kind2_verify(q: &Query, config: &VerifierConfig) -> Verdict {
    let Some(tool) = &config.tool_path else {
        return Verdict::Unknown { reason: UnknownReason::ToolMissing };
    };
    if config.timeout_secs == 0 {
        return Verdict::Unknown { reason: UnknownReason::Timeout };
    }

    let unit = match build_unit(&q.p1, q.p2.as_ref(), q.kind, &TranslateOptions::default()) {
        Ok(u) => u,
        Err(e) => return unusable(format!("translation failed: {e}")),
    };

    // Isolated workspace per query; removed on drop.
    let dir = match tempfile::tempdir() {
        Ok(d) => d,
        Err(e) => return unusable(format!("cannot create a temp directory: {e}")),
    };
    let lus_path = dir.path().join("query.lus");
    if let Err(e) = std::fs::write(&lus_path, emit_lustre_text(&unit)) {
        return unusable(format!("cannot write the node file: {e}"));
    }
    let _ = std::fs::write(dir.path().join("query.json"), sidecar_json(&unit));

    let mut cmd = Command::new(tool);
    cmd.args(&config.tool_args)
        .arg(&lus_path)
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::null());
    // Own process group, so a timeout can take down the solver children
    // the tool spawns, not just the tool itself.
    #[cfg(unix)]
    {
        use std::os::unix::process::CommandExt;
        cmd.process_group(0);
    }
    let mut child = match cmd.spawn() {
        Ok(c) => c,
        Err(_) => return Verdict::Unknown { reason: UnknownReason::ToolMissing },
    };

    // Drain stdout on a separate thread so a chatty tool can't fill the
    // pipe and deadlock against the wait loop.
    let mut stdout = child.stdout.take().expect("stdout was piped");
    let reader = std::thread::spawn(move || {
        let mut buf = String::new();
        let _ = stdout.read_to_string(&mut buf);
        buf
    });

    let deadline = Instant::now() + Duration::from_secs(config.timeout_secs);
    let finished = loop {
        match child.try_wait() {
            Ok(Some(_)) => break true,
            Ok(None) => {
                if Instant::now() >= deadline {
                    kill_tree(&mut child);
                    break false;
                }
                std::thread::sleep(Duration::from_millis(20));
            }
            Err(_) => {
                kill_tree(&mut child);
                break false;
            }
        }
    };
    let output = reader.join().unwrap_or_default();
    if !finished {
        return Verdict::Unknown { reason: UnknownReason::Timeout };
    }

    let parsed: Value = match serde_json::from_str(output.trim()) {
        Ok(v) => v,
        Err(_) => return unusable("tool output was not JSON"),
    };

    let answers = collect_answers(&parsed);
    if answers.iter().any(|a| a == "falsifiable") {
        let Some(stream) = find_input_stream(&parsed) else {
            return unusable("falsifiable, but no input stream in the trace");
        };
        let word = match decode_word(&unit.codec, &stream) {
            Ok(w) if !w.is_empty() => w,
            _ => return unusable("trace did not decode to a nonempty word"),
        };
        if !refutes(q, &word) {
            return unusable(format!(
                "decoded word {:?} does not refute the property",
                q.p1.alphabet.display_word(&word)
            ));
        }
        return Verdict::Counterexample { word, backend: BackendName::External };
    }
    if answers.iter().any(|a| a == "valid") {
        return Verdict::Valid { source: BackendName::External };
    }
    if answers.iter().any(|a| a == "unknown" || a == "timeout") {
        return Verdict::Unknown { reason: UnknownReason::Timeout };
    }
    unusable("no property answer in the tool output")
}

/// Kill the child and, on Unix, its whole process group (it was made a
/// group leader at spawn), then reap it.
fn kill_tree(child: &mut std::process::Child) {
    #[cfg(unix)]
    unsafe {
        libc::kill(-(child.id() as i32), libc::SIGKILL);
    }
    let _ = child.kill();
    let _ = child.wait();
}

fn walk<'a>(v: &'a Value, f: &mut impl FnMut(&'a serde_json::Map<String, Value>)) {
    match v {
        Value::Object(m) => {
            f(m);
            for x in m.values() {
                walk(x, f);
            }
        }
        Value::Array(a) => {
            for x in a {
                walk(x, f);
            }
        }
        _ => {}
    }
}

/// Every `answer` in the output, as lowercase strings. Accepts both the
/// nested `{"answer": {"value": "valid"}}` and a bare string form.
fn collect_answers(v: &Value) -> Vec<String> {
    let mut out = Vec::new();
    walk(v, &mut |m| {
        if let Some(ans) = m.get("answer") {
            let s = match ans {
                Value::String(s) => Some(s.clone()),
                Value::Object(inner) => inner
                    .get("value")
                    .and_then(Value::as_str)
                    .map(str::to_string),
                _ => None,
            };
            if let Some(s) = s {
                out.push(s.to_lowercase());
            }
        }
    });
    out
}

fn int_of(v: &Value) -> Option<i64> {
    match v {
        Value::Number(n) => n.as_i64(),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Value column of an `I` stream object, ordered by step index; `None` if
/// this object is not such a stream or any element is malformed.
fn stream_values(m: &serde_json::Map<String, Value>) -> Option<Vec<i64>> {
    if m.get("name").and_then(Value::as_str) != Some("I") {
        return None;
    }
    let Value::Array(items) = m.get("instantValues")? else {
        return None;
    };
    let mut pairs: Vec<(i64, i64)> = Vec::new();
    for (i, item) in items.iter().enumerate() {
        match item {
            Value::Array(pair) if pair.len() == 2 => {
                pairs.push((int_of(&pair[0])?, int_of(&pair[1])?));
            }
            other => pairs.push((i as i64, int_of(other)?)),
        }
    }
    pairs.sort_by_key(|&(i, _)| i);
    Some(pairs.into_iter().map(|(_, v)| v).collect())
}

/// First `I` stream anywhere in the output.
fn find_input_stream(v: &Value) -> Option<Vec<i64>> {
    let mut found: Option<Vec<i64>> = None;
    walk(v, &mut |m| {
        if found.is_none() {
            found = stream_values(m);
        }
    });
    found
}
