use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use ybx_core::braid::yn::{lambda_relation_check, y_assignment_unchecked};
use ybx_core::braid::{self, PresentationName, Word};
use ybx_core::extension::{self as ext, CrossMap};
use ybx_core::group::conjugation_quandle;
use ybx_core::hopf::{self, AlgebraElement2, HopfData, QtConvention};
use ybx_core::io::Document;
use ybx_core::linear::{self, Dims};
use ybx_core::matrix::RationalMatrix;
use ybx_core::ybset::{self, Direction, Equation, FiniteYBMap};
use ybx_core::CheckReport;

use crate::report::Session;
use crate::{Command, ConventionArg, DirectionArg, EquationArg, Triple};

fn set_yb(s: &mut Session, label: &str, path: &Path) -> Result<FiniteYBMap> {
    Ok(s.load(label, path)?.into_set_yb()?)
}

fn cross_map(s: &mut Session, path: &Path) -> Result<CrossMap> {
    Ok(s.load("cross", path)?.into_cross()?)
}

fn matrix(s: &mut Session, label: &str, path: &Path) -> Result<RationalMatrix> {
    Ok(s.load(label, path)?.into_matrix()?)
}

fn hopf_data(s: &mut Session, label: &str, path: &Path) -> Result<HopfData> {
    Ok(s.load(label, path)?.into_hopf()?)
}

fn elem2(s: &mut Session, label: &str, path: &Path) -> Result<AlgebraElement2> {
    Ok(s.load(label, path)?.into_elem2()?)
}

/// `d` with `d² = n`, the dimension of `V` for an operator on `V ⊗ V`.
fn square_root(n: usize, what: &str) -> Result<usize> {
    let d = (n as f64).sqrt().round() as usize;
    if d * d != n {
        bail!("{what} has {n} rows, which is not the square of a dimension");
    }
    Ok(d)
}

fn pair_dim(m: &RationalMatrix, explicit: Option<usize>, what: &str) -> Result<usize> {
    match explicit {
        Some(d) => Ok(d),
        None => square_root(m.rows(), what),
    }
}

fn convention(c: ConventionArg) -> QtConvention {
    match c {
        ConventionArg::Theorem => QtConvention::Theorem,
        ConventionArg::Preamble => QtConvention::Preamble,
    }
}

fn to_value(d: &Document) -> Value {
    serde_json::to_value(d).expect("documents serialize")
}

/// `vp4` → (vpn, 4); `yn` with `--n 3` → (yn, 3).
fn presentation_name(text: &str, n: Option<usize>) -> Result<(PresentationName, usize)> {
    let split = text.find(|c: char| c.is_ascii_digit()).unwrap_or(text.len());
    let (head, digits) = text.split_at(split);
    let head = head.to_ascii_lowercase();
    let name = match head.as_str() {
        "b" | "bn" => PresentationName::Bn,
        "vb" | "vbn" => PresentationName::Vbn,
        "vp" | "vpn" => PresentationName::Vpn,
        "h" | "hn" => PresentationName::Hn,
        "y" | "yn" => PresentationName::Yn,
        _ => head.parse()?,
    };
    let attached = if digits.is_empty() { None } else { Some(digits.parse::<usize>().context("bad strand count")?) };
    match (attached, n) {
        (Some(a), Some(b)) if a != b => bail!("strand count given twice: {a} and {b}"),
        (Some(a), _) | (None, Some(a)) => Ok((name, a)),
        (None, None) => bail!("the strand count is missing; pass --n"),
    }
}

pub fn run(command: &Command, seed: u64) -> Result<Session> {
    let mut s = Session::new(command_name(command));
    match command {
        Command::CheckYbe { file } | Command::CheckBraid { file } => {
            let braid = matches!(command, Command::CheckBraid { .. });
            match s.load("input", file)? {
                d @ Document::SetYb { .. } => {
                    let m = d.into_set_yb()?;
                    let rep = if braid { ybset::check_braid(&m) } else { ybset::check_ybe(&m) };
                    s.check(if braid { "braid" } else { "ybe" }, rep);
                }
                d @ Document::Matrix { .. } => {
                    let m = d.into_matrix()?;
                    let dim = square_root(m.rows(), "the matrix")?;
                    let rep = if braid { linear::check_matrix_braid(&m, dim)? } else { linear::check_qybe(&m, dim)? };
                    s.check(if braid { "braid" } else { "qybe" }, rep);
                }
                other => bail!("expected a set_yb or matrix document, found {}", other.kind()),
            }
        }
        Command::Convert { file, direction } => {
            let m = set_yb(&mut s, "input", file)?;
            let dir = match direction {
                DirectionArg::YbToBraid => Direction::YbToBraid,
                DirectionArg::BraidToYb => Direction::BraidToYb,
            };
            s.param("direction", format!("{dir:?}"));
            let out = ybset::convert(&m, dir);
            let (before, after) = match dir {
                Direction::YbToBraid => (ybset::check_ybe(&m), ybset::check_braid(&out)),
                Direction::BraidToYb => (ybset::check_braid(&m), ybset::check_ybe(&out)),
            };
            s.result(json!({"input_solves": before.passed, "output_solves": after.passed, "output": to_value(&Document::set_yb(&out))}));
            s.output(to_value(&Document::set_yb(&out)));
            let mut agree = CheckReport::new();
            agree.tick(1);
            if before.passed != after.passed {
                agree.fail("equivalence", vec![]);
            }
            s.check("equivalence", agree);
        }
        Command::Quandle { file } => {
            let op = match s.load("input", file)? {
                d @ Document::Group { .. } => conjugation_quandle(&d.into_group()?),
                d @ Document::Binop { .. } => d.into_binop()?,
                other => bail!("expected a group or binop document, found {}", other.kind()),
            };
            let sd = ybset::check_self_distributive(&op);
            let braiding = ybset::braiding_from_sd(&op);
            let br = ybset::check_braid(&braiding);
            s.result(json!({
                "self_distributive": sd.passed,
                "braid": br.passed,
                "operation": to_value(&Document::binop(&op)),
                "braiding": to_value(&Document::set_yb(&braiding)),
            }));
            s.output(to_value(&Document::set_yb(&braiding)));
            s.check("self_distributive", sd);
            s.check("braid", br);
        }
        Command::Guitar { file } => {
            let m = set_yb(&mut s, "input", file)?;
            let (left, right) = ybset::nondegeneracy(&m);
            let g = ybset::guitar_map(&m)?;
            s.result(json!({"left_nondegenerate": left, "right_nondegenerate": right, "guitar": to_value(&Document::set_yb(&g))}));
            s.output(to_value(&Document::set_yb(&g)));
            s.check("ybe", ybset::check_ybe(&m));
        }
        Command::Extend { triple, braid } => extend(&mut s, triple, *braid)?,
        Command::SearchCross { rb, rc, invertible } => {
            let rb = set_yb(&mut s, "rb", rb)?;
            let rc = set_yb(&mut s, "rc", rc)?;
            s.param("invertible", invertible);
            let found = ext::search_cross_maps(&rb, &rc, *invertible)?;
            let mut all = CheckReport::new();
            for r in &found {
                all.merge(ext::check_cross_compat(&rb, &rc, r)?);
            }
            s.check("compat", all.finish());
            s.result(json!({"count": found.len(), "cross_maps": found.iter().map(|r| to_value(&Document::cross(r))).collect::<Vec<_>>()}));
        }
        Command::Twist { triple } => {
            let (rb, rc, r) = set_triple(&mut s, triple)?;
            let t = ext::extension_set_twist(&rb, &rc, &r)?;
            s.check("twist", ext::check_set_twist(&t.t, &t.f, &t.phi, &t.psi)?);
            s.result(json!({
                "t": to_value(&Document::set_yb(&t.t)),
                "f": to_value(&Document::set_yb(&t.f)),
                "phi": t.phi.images(),
                "psi": t.psi.images(),
            }));
        }
        Command::Cybe { file, dim } | Command::Qybe { file, dim } => {
            let m = matrix(&mut s, "input", file)?;
            let d = pair_dim(&m, *dim, "the matrix")?;
            s.param("dim", d);
            if matches!(command, Command::Cybe { .. }) {
                s.check("cybe", linear::check_cybe(&m, d)?);
            } else {
                s.check("qybe", linear::check_qybe(&m, d)?);
            }
        }
        Command::ClassicalExtend { triple } | Command::QuantumExtend { triple } => {
            let classical = matches!(command, Command::ClassicalExtend { .. });
            let rb = matrix(&mut s, "rb", &triple.rb)?;
            let rc = matrix(&mut s, "rc", &triple.rc)?;
            let r = matrix(&mut s, "cross", &triple.cross)?;
            let dims = Dims { b: square_root(rb.rows(), "rb")?, c: square_root(rc.rows(), "rc")? };
            let compat = if classical { linear::check_classical_compat(&rb, &rc, &r, dims)? } else { linear::check_quantum_compat(&rb, &rc, &r, dims)? };
            let ok = compat.passed;
            s.check("compat", compat);
            if ok {
                let big = if classical { linear::build_classical_extension(&rb, &rc, &r, dims)? } else { linear::build_quantum_extension(&rb, &rc, &r, dims)? };
                let d = dims.b * dims.c;
                if classical {
                    s.check("cybe", linear::check_cybe(&big, d)?);
                } else {
                    s.check("qybe", linear::check_qybe(&big, d)?);
                }
                s.output(to_value(&Document::matrix(&big)));
            }
        }
        Command::HopfCheck { file, r, convention: conv } => {
            let h = hopf_data(&mut s, "input", file)?;
            let axioms = hopf::check_hopf_axioms(&h);
            s.result(json!({"commutative": axioms.commutative, "cocommutative": axioms.cocommutative}));
            s.check("axioms", axioms.report);
            if let Some(path) = r {
                let r = elem2(&mut s, "r", path)?;
                s.param("convention", format!("{conv:?}"));
                s.check("quasitriangular", hopf::check_quasitriangular(&h, &r, convention(*conv))?);
            }
        }
        Command::HopfProduct { b, c, cross, rb, rc, convention: conv } => {
            let b = hopf_data(&mut s, "b", b)?;
            let c = hopf_data(&mut s, "c", c)?;
            let r = elem2(&mut s, "cross", cross)?;
            let cross_rep = hopf::check_cross_element(&b, &c, &r)?;
            let ok = cross_rep.passed;
            s.check("cross_element", cross_rep);
            if ok {
                let h = hopf::build_product_hopf(&b, &c, &r)?;
                s.check("axioms", hopf::check_hopf_axioms(&h).report);
                if let (Some(rb), Some(rc)) = (rb, rc) {
                    let rb = elem2(&mut s, "rb", rb)?;
                    let rc = elem2(&mut s, "rc", rc)?;
                    s.param("convention", format!("{conv:?}"));
                    let conv = convention(*conv);
                    s.check("quasitriangular(B)", hopf::check_quasitriangular(&b, &rb, conv)?);
                    s.check("quasitriangular(C)", hopf::check_quasitriangular(&c, &rc, conv)?);
                    let big = hopf::product_r_matrix(&b, &c, &r, &rb, &rc)?;
                    s.check("quasitriangular(product)", hopf::check_quasitriangular(&h, &big, conv)?);
                    s.result(json!({"r_matrix": to_value(&Document::elem2(&big))}));
                }
                s.output(to_value(&Document::hopf(&h)));
            }
        }
        Command::RepCheck { presentation, n, r, rb, rc, cross } => {
            let (name, n) = presentation_name(presentation, *n)?;
            s.param("presentation", name);
            s.param("n", n);
            let p = braid::presentation(name, n)?;
            let a = match name {
                PresentationName::Yn => {
                    let need = |x: &Option<std::path::PathBuf>, f: &str| x.clone().ok_or_else(|| anyhow!("yn needs --{f}"));
                    let rb = set_yb(&mut s, "rb", &need(rb, "rb")?)?;
                    let rc = set_yb(&mut s, "rc", &need(rc, "rc")?)?;
                    let r = cross_map(&mut s, &need(cross, "cross")?)?;
                    y_assignment_unchecked(&rb, &rc, &r, n)?
                }
                _ => {
                    let path = r.as_ref().ok_or_else(|| anyhow!("{name} needs --r"))?;
                    let m = set_yb(&mut s, "r", path)?;
                    match name {
                        PresentationName::Vpn => braid::rep_vp(&m, n)?,
                        PresentationName::Hn => braid::rep_hn(&m, n)?,
                        _ => braid::rep_vbn(&m, n)?,
                    }
                }
            };
            s.check("presentation", braid::check_assignment(&p, &a)?);
            if name == PresentationName::Yn && n == 3 {
                s.check("lambda", lambda_relation_check(&a)?);
            }
            // Name the relators so that failures can be read without the presentation.
            let labels: Vec<&str> = p.relators.iter().map(|r| r.label.as_str()).collect();
            s.result(json!({"relators": labels.len(), "generators": p.generators.len()}));
        }
        Command::Simplicial { r, max_n } => {
            let m = set_yb(&mut s, "r", r)?;
            s.param("max_n", max_n);
            s.check("simplicial", braid::simplicial_check(&m, *max_n)?);
        }
        Command::Doubling { word, n, k, braid: is_braid } => {
            let w: Word = word.parse()?;
            s.param("word", &w);
            s.param("n", n);
            s.param("k", k);
            s.param("braid", is_braid);
            let out = if *is_braid { braid::doubling_bn(&w, *n)? } else { braid::doubling_vp(&w, *n, *k)? };
            let mut result = json!({"word": out.to_string(), "letters": out});
            if !is_braid {
                result["normal_form"] = json!(braid::simplicial::vp_normal_form(&out).to_string());
            }
            s.output(result);
        }
        Command::Census { size, equation, invertible, sample: keep } => census(&mut s, *size, *equation, *invertible, *keep, seed)?,
        Command::Counterexamples => {
            let b3 = braid::b3_counterexamples()?;
            s.result(json!({"d0_lhs_image": b3.d0_lhs_image, "d0_rhs_image": b3.d0_rhs_image}));
            s.check("b3", b3.report);
        }
        Command::Place { file } => {
            let (m, positions, space) = s.load("input", file)?.into_placed()?;
            let placed = linear::place(&m, &positions, &space)?;
            s.output(to_value(&Document::matrix(&placed)));
        }
        Command::Presentation { name, n } => {
            let (name, n) = presentation_name(name, *n)?;
            s.param("presentation", name);
            s.param("n", n);
            let p = braid::presentation(name, n)?;
            let mut export = p.export();
            export["labels"] = json!(p.relators.iter().map(|r| r.label.clone()).collect::<Vec<_>>());
            s.output(export);
        }
    }
    Ok(s)
}

fn set_triple(s: &mut Session, t: &Triple) -> Result<(FiniteYBMap, FiniteYBMap, CrossMap)> {
    Ok((set_yb(s, "rb", &t.rb)?, set_yb(s, "rc", &t.rc)?, cross_map(s, &t.cross)?))
}

fn extend(s: &mut Session, t: &Triple, braid: bool) -> Result<()> {
    let (rb, rc, r) = set_triple(s, t)?;
    s.param("braid", braid);
    if braid {
        let derived = ext::check_braid_derived_relations(&rb, &rc, &r)?;
        let ok = derived.passed;
        s.check("derived_relations", derived);
        if ok {
            let e = ext::build_braid_extension(&rb, &rc, &r)?;
            s.check("braid", ybset::check_braid(&e));
            s.output(to_value(&Document::extension(&e, rb.size(), rc.size())));
        }
        return Ok(());
    }
    let compat = ext::check_cross_compat(&rb, &rc, &r)?;
    let ok = compat.passed;
    s.check("compat", compat);
    s.check("derived_relations", ext::check_derived_relations(&rb, &rc, &r)?);
    if ok {
        let e = ext::build_extension(&rb, &rc, &r)?;
        s.check("ybe", ybset::check_ybe(&e));
        s.output(to_value(&Document::extension(&e, rb.size(), rc.size())));
    }
    Ok(())
}

fn census(s: &mut Session, size: usize, equation: EquationArg, invertible: bool, keep: Option<usize>, seed: u64) -> Result<()> {
    let eq = match equation {
        EquationArg::Ybe => Equation::Ybe,
        EquationArg::Braid => Equation::Braid,
    };
    s.param("size", size);
    s.param("equation", format!("{eq:?}"));
    s.param("invertible", invertible);
    let mut sols = ybset::enumerate_solutions(size, eq, invertible)?;
    let total = sols.len();
    if let Some(k) = keep {
        s.param("sample", k);
        s.param("seed", seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut picked = sample(&mut rng, total, k.min(total)).into_vec();
        picked.sort_unstable();
        sols = picked.into_iter().map(|i| sols[i].clone()).collect();
    }
    let mut all = CheckReport::new();
    let items: Vec<Value> = sols
        .iter()
        .map(|m| {
            let rep = eq.check(m);
            let passed = rep.passed;
            all.merge(rep);
            json!({"table": m.table(), "invertible": m.is_invertible(), "passed": passed})
        })
        .collect();
    s.check("census", all.finish());
    s.result(json!({"count": total, "listed": items.len(), "solutions": items}));
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::CheckYbe { .. } => "check-ybe",
        Command::CheckBraid { .. } => "check-braid",
        Command::Convert { .. } => "convert",
        Command::Quandle { .. } => "quandle",
        Command::Guitar { .. } => "guitar",
        Command::Extend { .. } => "extend",
        Command::SearchCross { .. } => "search-cross",
        Command::Twist { .. } => "twist",
        Command::Cybe { .. } => "cybe",
        Command::Qybe { .. } => "qybe",
        Command::ClassicalExtend { .. } => "classical-extend",
        Command::QuantumExtend { .. } => "quantum-extend",
        Command::HopfCheck { .. } => "hopf-check",
        Command::HopfProduct { .. } => "hopf-product",
        Command::RepCheck { .. } => "rep-check",
        Command::Simplicial { .. } => "simplicial",
        Command::Doubling { .. } => "doubling",
        Command::Census { .. } => "census",
        Command::Counterexamples => "counterexamples",
        Command::Place { .. } => "place",
        Command::Presentation { .. } => "presentation",
    }
}
