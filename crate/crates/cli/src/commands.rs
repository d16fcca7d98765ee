use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_bigint::BigInt;
use tilecensus::asymptotics::{growth, reciprocity};
use tilecensus::oracle::{
    bfs_census, build_map_within_budget, classify, vertex_types, write_dump, BuildError,
};
use tilecensus::{derive, rec_eval, rec_from_gf, CensusGF, Schlafli, SymbolError};

use crate::output::{
    error_json, CommandKind, Format, GrowthBlock, Mismatch, OracleBlock, OutputRecord, VerifyRow,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_SPHERICAL: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_STRUCTURE: u8 = 4;

fn fail(format: Format, kind: &str, message: &str, code: u8) -> u8 {
    eprintln!("error: {message}");
    if format == Format::Json {
        print!("{}", error_json(kind, message));
    }
    code
}

fn symbol_failure(format: Format, e: &SymbolError) -> u8 {
    match e {
        SymbolError::SphericalOutOfScope(_) => fail(
            format,
            "SphericalOutOfScope",
            &e.to_string(),
            EXIT_SPHERICAL,
        ),
        _ => fail(format, "BadSymbol", &e.to_string(), EXIT_USAGE),
    }
}

fn derived(
    symbol: Result<Schlafli, SymbolError>,
    format: Format,
) -> Result<(Schlafli, CensusGF), u8> {
    let s = symbol.map_err(|e| symbol_failure(format, &e))?;
    let gf = derive(s).map_err(|e| symbol_failure(format, &e))?;
    Ok((s, gf))
}

fn record(command: CommandKind, gf: &CensusGF) -> OutputRecord {
    OutputRecord {
        command,
        symbol: gf.symbol,
        case_tag: gf.case,
        gf: gf.v.clone(),
        series: None,
        type_series: None,
        growth: None,
        oracle: None,
    }
}

fn emit(rec: &OutputRecord, format: Format) {
    print!("{}", rec.render(format));
}

pub fn genfunc(symbol: Result<Schlafli, SymbolError>, format: Format) -> u8 {
    let (_, gf) = match derived(symbol, format) {
        Ok(x) => x,
        Err(code) => return code,
    };
    emit(&record(CommandKind::Genfunc, &gf), format);
    EXIT_OK
}

pub fn census(symbol: Result<Schlafli, SymbolError>, n: usize, types: bool, format: Format) -> u8 {
    let (_, gf) = match derived(symbol, format) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let mut rec = record(CommandKind::Census, &gf);
    rec.series = Some(rec_eval(&rec_from_gf(&gf.v), n));
    if types {
        let [a, b, c] = gf.types().map(|t| rec_eval(&rec_from_gf(t), n));
        rec.type_series = Some([a, b, c]);
    }
    emit(&rec, format);
    EXIT_OK
}

pub fn asym(symbol: Result<Schlafli, SymbolError>, format: Format) -> u8 {
    let (s, gf) = match derived(symbol, format) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let info = match growth(&gf.v, &s) {
        Ok(info) => info,
        Err(e) => return fail(format, "Growth", &e.to_string(), EXIT_USAGE),
    };
    let mut rec = record(CommandKind::Asym, &gf);
    rec.growth = Some(GrowthBlock {
        classification: info.class.as_str(),
        z0: info.z0,
        z0_interval: info.root.as_ref().map(|r| (r.lo_f64(), r.hi_f64())),
        lambda: info.lambda,
        amplitude: info.amplitude,
        reciprocity: reciprocity(gf.v.den()).as_str(),
    });
    emit(&rec, format);
    EXIT_OK
}

pub fn verify(
    symbol: Result<Schlafli, SymbolError>,
    depth: usize,
    budget: usize,
    dump_map: Option<&Path>,
    format: Format,
) -> u8 {
    let (s, gf) = match derived(symbol, format) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let map = match build_map_within_budget(s, depth, budget) {
        Ok(map) => map,
        Err(BuildError::BadSymbol(e)) => return symbol_failure(format, &e),
        Err(e) => return fail(format, "BuildFailed", &e.to_string(), EXIT_STRUCTURE),
    };
    let report = bfs_census(&map);
    let trusted = report.trusted_depth.min(depth);
    let budget_exhausted = report.trusted_depth < depth;
    if budget_exhausted {
        eprintln!(
            "warning: vertex budget {budget} reached; comparing through generation {trusted} \
             instead of {depth}"
        );
    }

    let (classified, violation) = match classify(&map, &report) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e)),
    };

    if let Some(path) = dump_map {
        let types = vertex_types(&map, &report).unwrap_or_default();
        let written = File::create(path).and_then(|f| {
            let mut w = BufWriter::new(f);
            write_dump(&mut w, &map, &report, &types)?;
            w.flush()
        });
        if let Err(e) = written {
            return fail(
                format,
                "Io",
                &format!("cannot write {}: {e}", path.display()),
                EXIT_USAGE,
            );
        }
    }

    let expected: Vec<Vec<BigInt>> = [&gf.v, &gf.a, &gf.b, &gf.c]
        .iter()
        .map(|g| g.series(trusted))
        .collect();
    let types = classified.as_ref().and_then(|r| r.types.as_ref());
    let rows: Vec<VerifyRow> = (0..=trusted)
        .map(|n| VerifyRow {
            n,
            map: [
                Some(report.v[n]),
                types.map(|t| t.a[n]),
                types.map(|t| t.b[n]),
                types.map(|t| t.c[n]),
            ],
            series: [0, 1, 2, 3].map(|i| expected[i][n].clone()),
        })
        .collect();
    let first_mismatch = rows.iter().find_map(|r| {
        (0..4).find_map(|i| {
            let m = r.map[i]?;
            let m = BigInt::from(m);
            (m != r.series[i]).then(|| Mismatch {
                series: ["v", "a", "b", "c"][i],
                n: r.n,
                expected: r.series[i].clone(),
                observed: m,
            })
        })
    });
    let matched = first_mismatch.is_none() && violation.is_none();

    let mut rec = record(CommandKind::Verify, &gf);
    rec.oracle = Some(OracleBlock {
        requested_depth: depth,
        trusted_depth: trusted,
        vertices: map.vertex_count(),
        budget,
        budget_exhausted,
        matched,
        first_mismatch: first_mismatch.clone(),
        structure_violation: violation.as_ref().map(|v| v.to_string()),
        rows,
    });
    emit(&rec, format);

    if let Some(v) = violation {
        eprintln!("error: {v}");
        EXIT_STRUCTURE
    } else if let Some(m) = first_mismatch {
        eprintln!(
            "error: {}({}) is {} on the map but {} in the series",
            m.series, m.n, m.observed, m.expected
        );
        EXIT_MISMATCH
    } else {
        EXIT_OK
    }
}
