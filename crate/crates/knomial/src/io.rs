//! Serialization of the crate's artifacts. Emitters build the JSON by hand
//! so every real number is written with 17 significant digits (enough to
//! round-trip an IEEE double exactly); parsing goes through `serde_json`.

use num_complex::Complex64;
use serde_json::Value;

use crate::imprimitivity::BlockMap;
use crate::linalg::{Basis, CMat, CVec};
use crate::numtheory::Sl2;
use crate::sic::{FidCand, SearchRecord};
use crate::{Error, Result};

fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_complex(z: Complex64) -> String {
    format!("[{},{}]", fmt_f64(z.re), fmt_f64(z.im))
}

pub fn cmat_to_json(m: &CMat) -> String {
    let rows: Vec<String> = (0..m.dim())
        .map(|r| {
            let cells: Vec<String> = (0..m.dim()).map(|c| fmt_complex(m[(r, c)])).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!(
        "{{\"dim\":{},\"basis\":\"{}\",\"rows\":[{}]}}",
        m.dim(),
        m.basis().as_str(),
        rows.join(",")
    )
}

pub fn cvec_to_json(v: &CVec) -> String {
    let cells: Vec<String> = (0..v.dim()).map(|i| fmt_complex(v[i])).collect();
    format!(
        "{{\"dim\":{},\"basis\":\"{}\",\"v\":[{}]}}",
        v.dim(),
        v.basis().as_str(),
        cells.join(",")
    )
}

pub fn sl2_to_json(f: &Sl2) -> String {
    format!(
        "{{\"nbar\":{},\"m\":[[{},{}],[{},{}]],\"det\":{}}}",
        f.nbar(),
        f.alpha(),
        f.beta(),
        f.gamma(),
        f.delta(),
        f.det_sign()
    )
}

pub fn blockmap_to_json(bm: &BlockMap) -> String {
    let n = bm.grid();
    let mut perm_items = Vec::new();
    let mut block_items = Vec::new();
    for r in 0..n {
        for s in 0..n {
            let (rp, sp) = bm.target(r, s);
            perm_items.push(format!("[[{r},{s}],[{rp},{sp}]]"));
            let blk = bm.block(r, s);
            let rows: Vec<String> = (0..blk.dim())
                .map(|i| {
                    let cells: Vec<String> =
                        (0..blk.dim()).map(|j| fmt_complex(blk[(i, j)])).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            block_items.push(format!("\"{r},{s}\":[{}]", rows.join(",")));
        }
    }
    format!(
        "{{\"n\":{n},\"perm\":[{}],\"blocks\":{{{}}}}}",
        perm_items.join(","),
        block_items.join(",")
    )
}

/// FidCand with caller-supplied metadata (orbit label, selector, seed, …).
pub fn fidcand_to_json(cand: &FidCand, meta: &Value) -> String {
    format!(
        "{{\"dim\":{},\"psi\":{},\"defect\":{},\"worst_p\":[{},{}],\"meta\":{}}}",
        cand.psi.dim(),
        cvec_to_json(&cand.psi),
        fmt_f64(cand.defect),
        cand.worst_p.p1,
        cand.worst_p.p2,
        meta
    )
}

pub fn search_record_to_json(rec: &SearchRecord) -> String {
    format!(
        "{{\"restart\":{},\"iter\":{},\"objective\":{}}}",
        rec.restart,
        rec.iter,
        fmt_f64(rec.objective)
    )
}

/// An anti-unitary is its unitary part plus the conjugation flag.
pub fn antiu_to_json(a: &crate::cliffordrep::AntiU) -> String {
    let mat = cmat_to_json(&a.mat);
    let inner = &mat[1..mat.len() - 1];
    format!("{{{inner},\"conj\":{}}}", a.conj)
}

pub fn antiu_from_json(text: &str) -> Result<crate::cliffordrep::AntiU> {
    let v = parse_value(text)?;
    let conj = field(&v, "conj")?
        .as_bool()
        .ok_or_else(|| Error::Parse("conj must be a boolean".into()))?;
    let mat = cmat_from_json(text)?;
    Ok(crate::cliffordrep::AntiU { mat, conj })
}

/// Real/imaginary column pairs, one matrix row per line.
pub fn cmat_to_csv(m: &CMat) -> String {
    let mut out = String::new();
    for r in 0..m.dim() {
        let cells: Vec<String> = (0..m.dim())
            .flat_map(|c| {
                let z = m[(r, c)];
                [fmt_f64(z.re), fmt_f64(z.im)]
            })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn field<'v>(v: &'v Value, name: &str) -> Result<&'v Value> {
    v.get(name)
        .ok_or_else(|| Error::Parse(format!("missing field '{name}'")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| Error::Parse(format!("{what} must be a nonnegative integer")))
}

fn as_f64(v: &Value, what: &str) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::Parse(format!("{what} must be a number")))
}

fn parse_basis(v: &Value) -> Result<Basis> {
    let s = v
        .as_str()
        .ok_or_else(|| Error::Parse("basis must be a string".into()))?;
    Basis::from_str_opt(s).ok_or_else(|| Error::Parse(format!("unknown basis '{s}'")))
}

fn parse_complex(v: &Value) -> Result<Complex64> {
    let pair = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse("complex entries are [re, im] pairs".into()))?;
    Ok(Complex64::new(
        as_f64(&pair[0], "re")?,
        as_f64(&pair[1], "im")?,
    ))
}

pub fn cmat_from_json(text: &str) -> Result<CMat> {
    let v = parse_value(text)?;
    let dim = as_u64(field(&v, "dim")?, "dim")? as usize;
    let basis = parse_basis(field(&v, "basis")?)?;
    let rows = field(&v, "rows")?
        .as_array()
        .filter(|a| a.len() == dim)
        .ok_or_else(|| Error::Parse("rows must be a dim-length array".into()))?;
    let mut m = CMat::zeros(dim, basis);
    for (r, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .filter(|a| a.len() == dim)
            .ok_or_else(|| Error::Parse(format!("row {r} must have dim entries")))?;
        for (c, cell) in cells.iter().enumerate() {
            m[(r, c)] = parse_complex(cell)?;
        }
    }
    Ok(m)
}

pub fn cvec_from_json(text: &str) -> Result<CVec> {
    let v = parse_value(text)?;
    let dim = as_u64(field(&v, "dim")?, "dim")? as usize;
    let basis = parse_basis(field(&v, "basis")?)?;
    let cells = field(&v, "v")?
        .as_array()
        .filter(|a| a.len() == dim)
        .ok_or_else(|| Error::Parse("v must be a dim-length array".into()))?;
    let mut out = CVec::zeros(dim, basis);
    for (i, cell) in cells.iter().enumerate() {
        out[i] = parse_complex(cell)?;
    }
    Ok(out)
}

pub fn sl2_from_json(text: &str) -> Result<Sl2> {
    let v = parse_value(text)?;
    let nbar = as_u64(field(&v, "nbar")?, "nbar")?;
    let det = field(&v, "det")?
        .as_i64()
        .filter(|d| *d == 1 || *d == -1)
        .ok_or_else(|| Error::Parse("det must be 1 or -1".into()))?;
    let m = field(&v, "m")?
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| Error::Parse("m must be a 2x2 array".into()))?;
    let mut entries = [[0i64; 2]; 2];
    for (r, row) in m.iter().enumerate() {
        let cells = row
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| Error::Parse("m must be a 2x2 array".into()))?;
        for (c, cell) in cells.iter().enumerate() {
            entries[r][c] = cell
                .as_i64()
                .ok_or_else(|| Error::Parse("matrix entries must be integers".into()))?;
        }
    }
    Sl2::with_sign(nbar, entries, det as i8)
}

/// Parsed form of a serialized fiducial candidate: the vector plus the
/// recorded diagnostics (callers usually re-verify rather than trust them).
pub fn fidcand_psi_from_json(text: &str) -> Result<CVec> {
    let v = parse_value(text)?;
    let psi = field(&v, "psi")?;
    cvec_from_json(&psi.to_string())
}
