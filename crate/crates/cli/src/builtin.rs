//! Built-in example groups, expressed as input documents.

use crate::error::CliError;
use crate::input::{resolve, InputSpec, RawForm, RawInput, RawOptions};

/// Names accepted by [`builtin`], with their parameter shape.
pub const CATALOGUE: &[&str] = &[
    "sym_n:k",
    "minus_one:d",
    "cyclic:n",
    "reflection",
    "weyl_b2",
];

/// Concrete instances used by the test suites and `orbihh --builtin`.
pub const EXAMPLES: &[&str] = &[
    "sym_n:2",
    "sym_n:3",
    "sym_n:4",
    "minus_one:2",
    "minus_one:4",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "cyclic:6",
    "reflection",
    "weyl_b2",
];

fn int_matrix(m: &[Vec<i64>]) -> Vec<Vec<String>> {
    m.iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect()
}

/// `P e_i = e_{σ(i)}`.
fn perm(sigma: &[usize]) -> Vec<Vec<i64>> {
    let n = sigma.len();
    let mut m = vec![vec![0; n]; n];
    for (i, &s) in sigma.iter().enumerate() {
        m[s][i] = 1;
    }
    m
}

/// `diag(a, a)` acting on `T*C^k = C^k ⊕ C^k` for orthogonal `a`.
fn cotangent(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let k = a.len();
    let mut m = vec![vec![0; 2 * k]; 2 * k];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = a[i][j];
            m[k + i][k + j] = a[i][j];
        }
    }
    m
}

fn param(name: &str, text: &str) -> Result<usize, CliError> {
    text.parse()
        .map_err(|_| CliError::UnknownBuiltin(name.to_string()))
}

fn document(
    name: &str,
    order: u32,
    dim: usize,
    gens: Vec<Vec<Vec<String>>>,
    standard: bool,
) -> RawInput {
    RawInput {
        name: name.to_string(),
        cyclotomic_order: order,
        dimension: dim,
        generators: gens,
        symplectic_form: standard.then(|| RawForm::Named("standard".into())),
        options: RawOptions::default(),
    }
}

/// The raw document for a catalogue entry.
pub fn builtin_document(name: &str) -> Result<RawInput, CliError> {
    let unknown = || CliError::UnknownBuiltin(name.to_string());
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    match (head, arg) {
        ("sym_n", Some(a)) => {
            let k = param(name, a)?;
            if k == 0 {
                return Err(unknown());
            }
            let swap: Vec<usize> = (0..k)
                .map(|i| if k > 1 && i < 2 { 1 - i } else { i })
                .collect();
            let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            let mut gens = vec![int_matrix(&cotangent(&perm(&swap)))];
            if k > 2 {
                gens.push(int_matrix(&cotangent(&perm(&cycle))));
            }
            Ok(document(name, 1, 2 * k, gens, true))
        }
        ("minus_one", Some(a)) => {
            let d = param(name, a)?;
            if d == 0 || d % 2 == 1 {
                return Err(unknown());
            }
            let m: Vec<Vec<i64>> = (0..d)
                .map(|i| (0..d).map(|j| if i == j { -1 } else { 0 }).collect())
                .collect();
            Ok(document(name, 1, d, vec![int_matrix(&m)], true))
        }
        ("cyclic", Some(a)) => {
            let n = param(name, a)?;
            if n == 0 {
                return Err(unknown());
            }
            let inv = if n == 1 {
                "1".to_string()
            } else {
                format!("z^{}", n - 1)
            };
            let gen = vec![vec!["z".to_string(), "0".into()], vec!["0".into(), inv]];
            Ok(document(name, n as u32, 2, vec![gen], true))
        }
        ("reflection", None) => Ok(document(name, 1, 1, vec![int_matrix(&[vec![-1]])], false)),
        ("weyl_b2", None) => {
            let swap = vec![vec![0, 1], vec![1, 0]];
            let sign = vec![vec![-1, 0], vec![0, 1]];
            let gens = vec![int_matrix(&cotangent(&swap)), int_matrix(&cotangent(&sign))];
            Ok(document(name, 1, 4, gens, true))
        }
        _ => Err(unknown()),
    }
}

pub fn builtin(name: &str) -> Result<InputSpec, CliError> {
    resolve(builtin_document(name)?)
}
