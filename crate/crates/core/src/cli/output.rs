use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::suites::{RunReport, TimeSeries};

fn temp_path(path: &Path) -> PathBuf {
    let mut name = path.file_name().map(|n| n.to_os_string()).unwrap_or_default();
    name.push(".tmp");
    path.with_file_name(name)
}

/// Write to a sibling temporary file, then rename over the target.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), String> {
    let tmp = temp_path(path);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    result.map_err(|e| {
        let _ = fs::remove_file(&tmp);
        format!("{}: {e}", path.display())
    })
}

/// Pretty JSON with the struct field order.
pub fn report_json(report: &RunReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn timeseries_csv(ts: &TimeSeries) -> Result<Vec<u8>, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&ts.header).map_err(|e| e.to_string())?;
    for row in &ts.rows {
        let cells: Vec<String> = row.iter().map(|c| c.map(|x| format!("{x:.17e}")).unwrap_or_default()).collect();
        w.write_record(&cells).map_err(|e| e.to_string())?;
    }
    w.into_inner().map_err(|e| e.to_string())
}

pub fn write_report(path: &Path, report: &RunReport) -> Result<(), String> {
    write_atomic(path, report_json(report).as_bytes())
}

pub fn write_timeseries(path: &Path, ts: &TimeSeries) -> Result<(), String> {
    write_atomic(path, &timeseries_csv(ts)?)
}

/// Parse a CSV written by [`write_timeseries`].
pub fn read_timeseries(path: &Path) -> Result<TimeSeries, String> {
    let mut r = csv::Reader::from_path(path).map_err(|e| e.to_string())?;
    let header = r.headers().map_err(|e| e.to_string())?.iter().map(String::from).collect();
    let mut rows = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let row = rec
            .iter()
            .map(|c| if c.is_empty() { Ok(None) } else { c.parse::<f64>().map(Some).map_err(|e| e.to_string()) })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(TimeSeries { header, rows })
}
