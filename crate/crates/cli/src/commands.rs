use std::str::FromStr;

use serde_json::Value;
use stringyk::f2::F2Polynomial;
use stringyk::group::{FiniteAbelianGroup, GroupElement};
use stringyk::sector::{rank_table, ProductGSpace};
use stringyk::stringy::{SectorElement, StringyRing};
use stringyk::wproj::{ProductCase, WPStringyElement, WeightedProjective};
use num_traits::{One, Signed, Zero};
use stringyk::Rational;

use crate::table::TableDocument;
use crate::{CliError, RankArgs, StarArgs, TransgressArgs, WprojArgs, WprojCheck, WprojTable};

fn parse_group(text: &str) -> Result<FiniteAbelianGroup, CliError> {
    FiniteAbelianGroup::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn transgress(a: &TransgressArgs) -> Result<Vec<TableDocument>, CliError> {
    if a.k == 0 {
        return Err(CliError::Domain("k must be at least 1".into()));
    }
    let input = F2Polynomial::parse(&a.poly, a.k)?;
    let class = if a.sq1 { input.sq1() } else { input.clone() };
    let mut doc = TableDocument::new(format!("Class in F2[x1..x{}]", a.k), &["quantity", "value"]);
    doc.push(["input", &input.to_string()]);
    if a.sq1 {
        doc.push(["class = Sq1(input)", &class.to_string()]);
    }
    doc.push(["Sq1(class)", &class.sq1().to_string()]);
    doc.push(["integral", if class.is_integral() { "yes" } else { "no" }]);
    if let Some(g_text) = &a.g {
        let group = FiniteAbelianGroup::elementary_2(a.k);
        let g = GroupElement::parse(g_text, &group)?;
        doc.push([format!("tau_g, g = {g}"), class.inverse_transgress(&g)?.to_string()]);
        if let Some(h_text) = &a.h {
            let h = GroupElement::parse(h_text, &group)?;
            doc.push([format!("tau_h tau_g, h = {h}"), class.double_transgress(&g, &h)?.to_string()]);
        }
    }
    Ok(vec![doc])
}

pub fn rank(a: &RankArgs) -> Result<Vec<TableDocument>, CliError> {
    let group = parse_group(&a.group)?;
    let space = ProductGSpace::parse(&a.space, &group)?;
    let group = space.group().clone();
    let alpha = F2Polynomial::parse(&a.class, group.rank())?;
    let sectors = match &a.sector {
        Some(s) => vec![GroupElement::parse(s, &group)?],
        None => group.elements(),
    };
    let mut docs = Vec::new();
    let mut summary = TableDocument::new("Totals", &["sector", "rank"]);
    let mut grand = 0;
    for g in &sectors {
        let t = rank_table(&space, g, &alpha)?;
        let mut doc = TableDocument::new(
            format!("Sector g = {g} of {space}, class {alpha}"),
            &["h", "tau_h tau_g alpha", "fixed set", "invariant summands", "rank"],
        );
        for r in &t.rows {
            doc.push([
                r.h.to_string(),
                r.transgression.to_string(),
                r.fixed_set.clone(),
                r.invariants.clone(),
                r.rank.to_string(),
            ]);
        }
        doc.set_total(["total", "", "", "", &t.total().to_string()]);
        summary.push([g.to_string(), t.total().to_string()]);
        grand += t.total();
        docs.push(doc);
    }
    summary.set_total(["total".to_string(), grand.to_string()]);
    docs.push(summary);
    Ok(docs)
}

fn element_rows(doc: &mut TableDocument, operand: &str, x: &SectorElement<Rational>) {
    if x.is_zero() {
        doc.push([operand, &x.sector().to_string(), "", "0", ""]);
    }
    for (h, class) in x.components() {
        for (word, c) in class.terms() {
            doc.push([operand.to_string(), x.sector().to_string(), h.to_string(), c.to_string(), word.to_string()]);
        }
    }
}

fn parse_operand(
    ring: &StringyRing,
    text: Option<&String>,
    side: &str,
) -> Result<SectorElement<Rational>, CliError> {
    let text = text.ok_or_else(|| CliError::Parse(format!("--{side} is required")))?;
    if text.trim() == "unit" {
        return Ok(ring.unit());
    }
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Parse(format!("--{side}: {e}")))?;
    let factors = ring.space().factors().len();
    Ok(SectorElement::from_json(&v, ring.space().group(), factors)?)
}

pub fn star(a: &StarArgs) -> Result<Vec<TableDocument>, CliError> {
    if a.wproj {
        return star_wproj(a);
    }
    let group = parse_group(&a.group)?;
    let space = ProductGSpace::parse(&a.space, &group)?;
    let alpha = F2Polynomial::parse(&a.class, space.group().rank())?;
    let ring = StringyRing::new(space, alpha)?;
    let x = parse_operand(&ring, a.left.as_ref(), "left")?;
    let y = parse_operand(&ring, a.right.as_ref(), "right")?;
    let z = ring.star(&x, &y)?;
    let mut doc = TableDocument::new(
        format!("Stringy product on {}, class {}", ring.space(), ring.alpha()),
        &["operand", "sector", "h", "coefficient", "word"],
    );
    element_rows(&mut doc, "left", &x);
    element_rows(&mut doc, "right", &y);
    element_rows(&mut doc, "product", &z);
    let mut json = TableDocument::new("Product element", &["sector", "element"]);
    json.push([z.sector().to_string(), z.to_json().to_string()]);
    Ok(vec![doc, json])
}

fn wp_name(w: &WeightedProjective) -> String {
    format!("ℂP[{}{}]", w.p(), ":1".repeat(w.n() as usize))
}

fn wp_row(doc: &mut TableDocument, operand: &str, x: &WPStringyElement<Rational>) {
    doc.push([
        operand.to_string(),
        format!("g{}", x.sector()),
        x.rational_string(),
        x.cyclo_part().to_string(),
    ]);
}

fn star_wproj(a: &StarArgs) -> Result<Vec<TableDocument>, CliError> {
    let p = a.p.ok_or_else(|| CliError::Parse("--p is required with --wproj".into()))?;
    let n = a.n.ok_or_else(|| CliError::Parse("--n is required with --wproj".into()))?;
    let w = WeightedProjective::new(p, n)?;
    let left = a.left.as_deref().unwrap_or("1; 1");
    let right = a.right.as_deref().unwrap_or("1; 1");
    let x = w.parse_element::<Rational>(a.j, left)?;
    let y = w.parse_element::<Rational>(a.k, right)?;
    let z = w.star(&x, &y)?;
    let case = ProductCase::classify(p, a.j, a.k);
    let mut doc = TableDocument::new(
        format!("Stringy product on {}, case {}", wp_name(&w), case.condition(a.k)),
        &["operand", "sector", "rational part", "cyclotomic part"],
    );
    wp_row(&mut doc, "left", &x);
    wp_row(&mut doc, "right", &y);
    wp_row(&mut doc, "product", &z);
    Ok(vec![doc])
}

fn combination(v: &[Rational], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let a = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        match (l.as_str(), a.is_one()) {
            ("1", _) => out.push_str(&a.to_string()),
            (_, true) => out.push_str(l),
            (_, false) => out.push_str(&format!("{a}*{l}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn wproj(a: &WprojArgs) -> Result<Vec<TableDocument>, CliError> {
    let w = WeightedProjective::new(a.p, a.n)?;
    let name = wp_name(&w);
    let mut docs = Vec::new();
    let table = match (a.table, a.check) {
        (None, None) => Some(WprojTable::Cases),
        (t, _) => t,
    };
    match table {
        Some(WprojTable::Cases) => {
            let mut doc = TableDocument::new(
                format!("Product rules (r,q,gj) ⋆ (s,w,gk) on {name}"),
                &["j", "k", "case", "target", "product"],
            );
            for r in w.cases_table() {
                doc.push([
                    r.j.to_string(),
                    r.k.to_string(),
                    r.case.condition(r.k).to_string(),
                    format!("g{}", r.target),
                    r.formula,
                ]);
            }
            docs.push(doc);
        }
        Some(WprojTable::Constants) => {
            let t = w.korb_structure_constants::<Rational>()?;
            let mut headers = vec!["⋆"];
            headers.extend(t.labels.iter().map(String::as_str));
            let mut doc = TableDocument::new(format!("Rational structure constants of {name}"), &headers);
            for (label, row) in t.labels.iter().zip(&t.products) {
                let mut cells = vec![label.clone()];
                cells.extend(row.iter().map(|v| combination(v, &t.labels)));
                doc.push(cells);
            }
            docs.push(doc);
            if a.check.is_none() {
                docs.push(relations_doc(&t.relations, &name));
            }
        }
        Some(WprojTable::Products) => {
            let mut doc = TableDocument::new(
                format!("Products of spanning elements of {name}"),
                &["sector j", "x", "sector k", "y", "x ⋆ y"],
            );
            let basis = w.basis::<Rational>();
            for x in &basis {
                for y in &basis {
                    let z = w.star(x, y)?;
                    doc.push([
                        format!("g{}", x.sector()),
                        x.to_string(),
                        format!("g{}", y.sector()),
                        y.to_string(),
                        z.to_string(),
                    ]);
                }
            }
            docs.push(doc);
        }
        None => {}
    }
    if a.check == Some(WprojCheck::Presentations) {
        let t = w.korb_structure_constants::<Rational>()?;
        let mut doc = relations_doc(&t.relations, &name);
        doc.set_total(["K_orb relations", if t.relations_hold() { "pass" } else { "fail" }]);
        docs.push(doc);
        let r = w.chen_ruan_presentation_check::<Rational>()?;
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut doc = TableDocument::new(
            format!(
                "ℚ[x,g]/⟨x^{}, g^{} - {}, g^{}⟩ against {name}, x = 1-u",
                a.n + 1,
                a.p,
                if a.n == 1 { "x".to_string() } else { format!("x^{}", a.n) },
                a.p + 1
            ),
            &["check", "result"],
        );
        doc.push(["Gröbner basis", &r.groebner_basis.join(", ")]);
        doc.push(["standard monomials", &r.standard_monomials.join(", ")]);
        doc.push(["quotient dimension", &r.quotient_dim.to_string()]);
        doc.push(["table dimension", &r.table_dim.to_string()]);
        doc.push(["generators vanish", yes(r.relations_hold)]);
        doc.push(["normal forms multiply as the table", yes(r.products_agree)]);
        doc.push(["surjective", yes(r.surjective())]);
        doc.push(["injective", yes(r.injective())]);
        doc.set_total(["Chen-Ruan presentation", if r.passes() { "pass" } else { "fail" }]);
        docs.push(doc);
    }
    Ok(docs)
}

fn relations_doc(relations: &[(String, bool)], name: &str) -> TableDocument {
    let mut doc = TableDocument::new(format!("Relations in the rational table of {name}"), &["relation", "holds"]);
    for (r, ok) in relations {
        doc.push([r.as_str(), if *ok { "yes" } else { "no" }]);
    }
    doc
}
