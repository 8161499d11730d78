#![allow(dead_code)]

use nucleon::algebra::Elem;
use nucleon::chain::ChainDescriptor;
use nucleon::nucleus::{self, NucleusMap};
use nucleon::zoo;
use nucleon::FiniteResiduatedLattice;

pub fn chain(desc: &str) -> FiniteResiduatedLattice {
    let d: ChainDescriptor = desc.parse().unwrap();
    d.materialize_finite().unwrap().0
}

/// The chains whose axioms are checked one by one.
pub fn axiom_corpus() -> Vec<(String, FiniteResiduatedLattice)> {
    let mut out = Vec::new();
    for n in 1..=8 {
        out.push((format!("S{n}+"), zoo::mv_chain(n)));
    }
    for n in 3..=6 {
        out.push((format!("G{n}"), zoo::godel_chain(n)));
    }
    for d in ["S1 + S3", "S2 + S2"] {
        out.push((format!("[{d}]"), chain(d)));
    }
    for n in 3..=6 {
        out.push((format!("A{n}"), zoo::a_n_chain(n)));
    }
    out
}

/// Every finite algebra the nucleus properties are run on.
pub fn finite_corpus() -> Vec<(String, FiniteResiduatedLattice)> {
    let mut out = axiom_corpus();
    out.push(("G1".into(), zoo::godel_chain(1)));
    out.push(("G2".into(), zoo::godel_chain(2)));
    for d in ["S1 + S1", "S1 + S2", "S2 + S1", "S1 + S1 + S1", "S1 + S2 + S1"] {
        out.push((format!("[{d}]"), chain(d)));
    }
    let b = zoo::mv_chain(1);
    out.push(("B2xB2".into(), b.product(&b).unwrap()));
    out.push(("B2xG3".into(), b.product(&zoo::godel_chain(3)).unwrap()));
    out.push(("B2xS2".into(), b.product(&zoo::mv_chain(2)).unwrap()));
    out.push(("S2xS2".into(), zoo::mv_chain(2).product(&zoo::mv_chain(2)).unwrap()));
    out.push(("B2xA3".into(), b.product(&zoo::a_n_chain(3)).unwrap()));
    out
}

fn check(cond: bool, what: &str, witness: &[Elem]) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(format!("{what} fails at {witness:?}"))
    }
}

/// Pointwise laws every nucleus satisfies.
pub fn nucleus_laws(a: &FiniteResiduatedLattice, g: &NucleusMap) -> Result<(), String> {
    let gm = |x| g.apply(x);
    let image = g.image();
    let gb = gm(a.bot());
    for x in a.elements() {
        // a ∨ γ(⊥) ≤ γ(a) ≤ (a → γ(⊥)) → γ(⊥)
        check(a.leq(a.join(x, gb), gm(x)), "join with g(bot) below g", &[x])?;
        check(a.leq(gm(x), a.imp(a.imp(x, gb), gb)), "g below relative double negation", &[x])?;
        // image characterisation: γ(x) = x iff γ(y) ≤ (y → x) → x for all y
        let fixed = gm(x) == x;
        let bounded = a.elements().all(|y| a.leq(gm(y), a.imp(a.imp(y, x), x)));
        check(fixed == bounded, "image characterisation", &[x])?;
        // γ(x) = min over the image of relative double negations
        let local = image
            .iter()
            .map(|&b| a.imp(a.imp(x, b), b))
            .reduce(|p, q| a.meet(p, q))
            .unwrap();
        check(local == gm(x), "local description", &[x])?;
        for y in a.elements() {
            let xy = a.mul(x, y);
            check(gm(xy) == gm(a.mul(gm(x), y)), "g(ab) = g(g(a)b)", &[x, y])?;
            check(gm(xy) == gm(a.mul(gm(x), gm(y))), "g(ab) = g(g(a)g(b))", &[x, y])?;
            let ab = a.imp(x, y);
            check(a.leq(gm(ab), a.imp(gm(x), gm(y))), "g(a->b) <= g(a)->g(b)", &[x, y])?;
            check(a.leq(a.imp(gm(x), gm(y)), a.imp(x, gm(y))), "g(a)->g(b) <= a->g(b)", &[x, y])?;
            let agb = a.imp(x, gm(y));
            check(gm(agb) == agb, "g(a -> g(b)) = a -> g(b)", &[x, y])?;
            if a.leq(gm(y), gm(x)) {
                check(a.leq(a.join(x, gm(y)), gm(x)), "a v g(b) <= g(a)", &[x, y])?;
                check(a.leq(gm(x), a.imp(agb, gm(y))), "g(a) <= (a -> g(b)) -> g(b)", &[x, y])?;
            }
        }
    }
    Ok(())
}

/// Checks the Glivenko report end to end: when the property holds, the
/// returned map must be an isomorphism from the quotient onto the image that
/// commutes with `γ`.
pub fn glivenko_consistent(a: &FiniteResiduatedLattice, g: &NucleusMap) -> Result<(), String> {
    let r = nucleus::glivenko_check(a, g);
    if !r.holds {
        let w = r.witness.ok_or("missing witness")?;
        return check(g.apply(a.imp(g.apply(w), w)) != a.top(), "reported witness", &[w]);
    }
    if r.homomorphism != Some(true) {
        return Err("g is not a homomorphism onto its image".into());
    }
    let iso = r.iso.ok_or("no isomorphism found")?;
    let proj = r.projection.ok_or("no projection")?;
    let dense = nucleus::dense_filter(a, g);
    let (q, _) = a.quotient(&dense.members).map_err(|e| e.to_string())?;
    let img = nucleus::nuclear_image(a, g);
    let f: Vec<Elem> = iso
        .iter()
        .map(|x| img.inclusion.binary_search(x).unwrap())
        .collect();
    check(q.is_isomorphism(&img.algebra, &f), "quotient isomorphism", &[])?;
    for x in a.elements() {
        check(iso[proj[x]] == g.apply(x), "isomorphism commutes with g", &[x])?;
    }
    Ok(())
}
