//! Group and weight arguments.

use std::path::Path;

use serde_json::Value;

use spinor_core::arith::{parse_rat, rat, Rat};
use spinor_core::catalog::make_group;
use spinor_core::fundgroup::fundamental_group;
use spinor_core::{CartanBasis, Error, FundGroupData, GroupSpec, LieType, Result, RootDatum, SummandKind, Weight};

pub struct Group {
    pub name: String,
    pub spec: Option<GroupSpec>,
    pub rd: RootDatum,
    pub fg: FundGroupData,
}

impl Group {
    pub fn load(arg: &str) -> Result<Group> {
        let path = Path::new(arg);
        if path.is_file() {
            let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
            let doc: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
            return Self::from_json(&doc);
        }
        let spec: GroupSpec = arg.parse()?;
        Self::from_spec(spec)
    }

    pub fn from_spec(spec: GroupSpec) -> Result<Group> {
        let (rd, fg) = make_group(&spec)?;
        Ok(Group { name: spec.to_string(), spec: Some(spec), rd, fg })
    }

    /// `{"catalog": {"family": "SL_quot", "n": 8, "d": 4}}` or
    /// `{"rootDatum": {"cartan": [[2]], "cocharGenerators": [[1]], "denominator": 2}}`.
    pub fn from_json(doc: &Value) -> Result<Group> {
        if let Some(c) = doc.get("catalog") {
            return Self::from_spec(catalog_spec(c)?);
        }
        if let Some(r) = doc.get("rootDatum") {
            return root_datum(r);
        }
        Err(Error::Parse("group file needs a `catalog` or `rootDatum` entry".into()))
    }
}

fn uint(v: &Value, key: &str) -> Result<usize> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::Parse(format!("missing non-negative integer `{key}`")))
}

fn half(v: &Value) -> Result<usize> {
    let m = uint(v, "dim")?;
    if m % 2 != 0 {
        return Err(Error::InvalidParameters(format!("`dim` must be even, got {m}")));
    }
    Ok(m / 2)
}

fn catalog_spec(c: &Value) -> Result<GroupSpec> {
    let family = c.get("family").and_then(Value::as_str).ok_or_else(|| Error::Parse("missing `family`".into()))?;
    let lie = || -> Result<LieType> {
        LieType::parse(c.get("type").and_then(Value::as_str).ok_or_else(|| Error::Parse("missing `type`".into()))?)
    };
    let spec = match family {
        "SL_quot" | "SL" => GroupSpec::SlQuot { n: uint(c, "n")?, d: c.get("d").map_or(Ok(1), |_| uint(c, "d"))? },
        "GL" => GroupSpec::Gl { n: uint(c, "n")? },
        "PGL" => GroupSpec::Pgl { n: uint(c, "n")? },
        "Sp" => GroupSpec::Sp { n: half(c)? },
        "Sp_quot" => GroupSpec::SpQuot { n: half(c)? },
        "SO" => GroupSpec::So { m: uint(c, "dim")? },
        "Spin" => GroupSpec::Spin { m: uint(c, "dim")? },
        "PSO" => GroupSpec::Pso { n: half(c)? },
        "Gplus" => GroupSpec::Gplus { n: half(c)? },
        "Gminus" => GroupSpec::Gminus { n: half(c)? },
        "simplyConnected" => GroupSpec::SimplyConnected(lie()?),
        "adjoint" => GroupSpec::Adjoint(lie()?),
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    spec.validate()?;
    Ok(spec)
}

/// Coroot-basis realization: simple coroots are the first `r` unit vectors,
/// central directions the remaining ones, and `X_*` is spanned by them and
/// `cocharGenerators / denominator`.
fn root_datum(r: &Value) -> Result<Group> {
    let ints = |v: &Value| -> Result<Vec<i64>> {
        v.as_array()
            .ok_or_else(|| Error::Parse("expected an array of integers".into()))?
            .iter()
            .map(|x| x.as_i64().ok_or_else(|| Error::Parse(format!("not an integer: {x}"))))
            .collect()
    };
    let rows = |key: &str| -> Result<Vec<Vec<i64>>> {
        match r.get(key) {
            None => Ok(Vec::new()),
            Some(v) => v.as_array().ok_or_else(|| Error::Parse(format!("`{key}` must be an array")))?.iter().map(ints).collect(),
        }
    };
    let cartan = rows("cartan")?;
    if cartan.is_empty() {
        return Err(Error::Parse("`cartan` must be a non-empty square matrix".into()));
    }
    let den = r.get("denominator").map_or(Some(1), Value::as_i64).filter(|&d| d > 0);
    let den = den.ok_or_else(|| Error::Parse("`denominator` must be a positive integer".into()))?;
    let central = r.get("centralRank").map_or(Ok(0), |_| uint(r, "centralRank"))?;
    let m = cartan.len() + central;
    let gens: Vec<Vec<Rat>> = rows("cocharGenerators")?
        .into_iter()
        .map(|g| {
            if g.len() != m {
                return Err(Error::Dimension { expected: m, got: g.len() });
            }
            Ok(g.into_iter().map(|x| Rat::new(x.into(), den.into())).collect())
        })
        .collect::<Result<_>>()?;
    let rd = RootDatum::from_cartan(&cartan, CartanBasis::Coroot, central, &gens)?;
    let fg = fundamental_group(&rd);
    Ok(Group { name: "rootDatum".into(), spec: None, rd, fg })
}

/// One `--weight` argument: `[S:|orth:]c1,c2,…`.
pub fn parse_weight(g: &Group, arg: &str, labels: bool) -> Result<(Weight, SummandKind)> {
    let (kind, body) = if let Some(b) = arg.strip_prefix("S:") {
        (SummandKind::Hyperbolic, b)
    } else if let Some(b) = arg.strip_prefix("orth:") {
        (SummandKind::Orthogonal, b)
    } else {
        (SummandKind::Orthogonal, arg)
    };
    let coords: Vec<Rat> = if body.trim().is_empty() {
        Vec::new()
    } else {
        body.split(',')
            .map(|s| parse_rat(s).ok_or_else(|| Error::Parse(format!("bad coordinate `{s}` in `{arg}`"))))
            .collect::<Result<_>>()?
    };
    let w = if labels {
        let r = g.rd.semisimple_rank();
        if coords.len() != r {
            return Err(Error::Dimension { expected: r, got: coords.len() });
        }
        let ints: Vec<i64> = coords
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().try_into().ok() } else { None })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse(format!("Dynkin labels must be integers: `{arg}`")))?;
        g.rd.character(g.rd.weight_from_labels(&ints).into_coords())?
    } else if coords.is_empty() {
        g.rd.character(vec![rat(0); g.rd.ambient_dim()])?
    } else {
        g.rd.character(coords)?
    };
    Ok((w, kind))
}
