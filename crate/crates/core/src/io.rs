//! CSV encodings of traces and series tables.
//!
//! Scalar traces use the header `k,t,f,grad,delta_k,effective_step,phase`.
//! Vector traces expand each per-component field into `name_0..name_{n-1}`
//! columns. Floats are written in shortest round-trip form, so parsing a
//! file back reproduces the records bit-for-bit.

use std::io::{Read, Write};

use crate::error::{FogmError, Result};
use crate::fracderiv::SeriesRow;
use crate::optimizers::{IterationRecord, Phase, Trace, VectorTrace};
use crate::scalar::Scalar;

pub const TRACE_HEADER: [&str; 7] = ["k", "t", "f", "grad", "delta_k", "effective_step", "phase"];

impl From<csv::Error> for FogmError {
    fn from(e: csv::Error) -> Self {
        if e.is_io_error() {
            FogmError::Io(e.to_string())
        } else {
            FogmError::Format(e.to_string())
        }
    }
}

pub fn write_trace_csv<T: Scalar, W: Write>(trace: &Trace<T>, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TRACE_HEADER)?;
    for r in &trace.records {
        w.write_record([
            r.k.to_string(),
            r.t.to_string(),
            r.f_value.to_string(),
            r.grad.to_string(),
            r.delta_k.to_string(),
            r.effective_step.to_string(),
            r.phase.as_str().to_string(),
        ])?;
    }
    w.flush().map_err(|e| FogmError::Io(e.to_string()))
}

fn field<T: Scalar>(rec: &csv::StringRecord, i: usize, name: &str) -> Result<T> {
    let s = rec
        .get(i)
        .ok_or_else(|| FogmError::Format(format!("missing column {name}")))?;
    s.parse()
        .map_err(|_| FogmError::Format(format!("bad {name} value `{s}`")))
}

pub fn read_trace_csv<T: Scalar, R: Read>(input: R) -> Result<Vec<IterationRecord<T>>> {
    let mut rdr = csv::Reader::from_reader(input);
    let header = rdr.headers()?.clone();
    if header.iter().ne(TRACE_HEADER) {
        return Err(FogmError::Format(format!("unexpected header {header:?}")));
    }
    let mut records = Vec::new();
    for row in rdr.records() {
        let row = row?;
        let k = row
            .get(0)
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| FogmError::Format("bad k".into()))?;
        let phase_str = row.get(6).unwrap_or_default();
        records.push(IterationRecord {
            k,
            t: field(&row, 1, "t")?,
            f_value: field(&row, 2, "f")?,
            grad: field(&row, 3, "grad")?,
            delta_k: field(&row, 4, "delta_k")?,
            effective_step: field(&row, 5, "effective_step")?,
            phase: Phase::parse(phase_str)
                .ok_or_else(|| FogmError::Format(format!("bad phase `{phase_str}`")))?,
        });
    }
    Ok(records)
}

pub fn write_vector_trace_csv<T: Scalar, W: Write>(trace: &VectorTrace<T>, out: W) -> Result<()> {
    let n = trace.dimension();
    let mut header = vec!["k".to_string()];
    let expand = |h: &mut Vec<String>, name: &str| h.extend((0..n).map(|i| format!("{name}_{i}")));
    expand(&mut header, "t");
    header.push("f".into());
    expand(&mut header, "grad");
    expand(&mut header, "delta_k");
    expand(&mut header, "effective_step");
    header.push("phase".into());

    let mut w = csv::Writer::from_writer(out);
    w.write_record(&header)?;
    for r in &trace.records {
        let mut row = vec![r.k.to_string()];
        row.extend(r.t.iter().map(T::to_string));
        row.push(r.f_value.to_string());
        row.extend(r.grad.iter().map(T::to_string));
        row.extend(r.delta_k.iter().map(T::to_string));
        row.extend(r.effective_step.iter().map(T::to_string));
        row.push(r.phase.as_str().to_string());
        w.write_record(&row)?;
    }
    w.flush().map_err(|e| FogmError::Io(e.to_string()))
}

/// Columns `i,term,partial_sum,closed_form,rel_err`.
pub fn write_series_table<T: Scalar, W: Write>(rows: &[SeriesRow<T>], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["i", "term", "partial_sum", "closed_form", "rel_err"])?;
    for r in rows {
        w.write_record([
            r.i.to_string(),
            r.term.to_string(),
            r.partial_sum.to_string(),
            r.closed_form.to_string(),
            r.rel_err.to_string(),
        ])?;
    }
    w.flush().map_err(|e| FogmError::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objective::quadratic;
    use crate::optimizers::{run, same_bits, OptimizerConfig};

    #[test]
    fn header_and_first_rows() {
        let cfg = OptimizerConfig::fogm(1.5, 0.01, -1.0).with_t2(0.0).with_max_iter(3);
        let trace = run(&quadratic(3.0_f64), &cfg).unwrap();
        let mut buf = Vec::new();
        write_trace_csv(&trace, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("k,t,f,grad,delta_k,effective_step,phase"));
        assert_eq!(lines.next(), Some("1,-1,16,-8,0,NaN,na"));
        assert_eq!(lines.next(), Some("2,0,9,-6,1,0.01,na"));
    }

    #[test]
    fn round_trip_keeps_nan_marker() {
        let cfg = OptimizerConfig::fogm(1.4, 0.01, -1.0).with_t2(0.0).with_max_iter(50);
        let trace = run(&quadratic(3.0_f64), &cfg).unwrap();
        let mut buf = Vec::new();
        write_trace_csv(&trace, &mut buf).unwrap();
        let back = read_trace_csv::<f64, _>(buf.as_slice()).unwrap();
        assert_eq!(back.len(), trace.len());
        for (a, b) in back.iter().zip(&trace.records) {
            assert!(same_bits(a.effective_step, b.effective_step));
            assert!(same_bits(a.t, b.t) && same_bits(a.grad, b.grad));
        }
    }

    #[test]
    fn rejects_wrong_header() {
        let bad = "k,x,f,grad,delta_k,effective_step,phase\n1,0,0,0,0,0,na\n";
        assert!(matches!(read_trace_csv::<f64, _>(bad.as_bytes()), Err(FogmError::Format(_))));
        let bad_phase = "k,t,f,grad,delta_k,effective_step,phase\n1,0,0,0,0,0,mid\n";
        assert!(read_trace_csv::<f64, _>(bad_phase.as_bytes()).is_err());
    }
}
