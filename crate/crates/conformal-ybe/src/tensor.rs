//! Free finite-rank `k[∂]`-modules, their tensor powers and conformal duals.
//!
//! A [`TensorElement`] of order `s` is a sum of generator tuples weighted by
//! polynomials in the slot variables `∂₁ … ∂ₛ` (and, transiently, the free
//! spectral variables `λ, μ, θ, ξ`). Order-1 elements double as plain module
//! elements. All operations are pure; values are immutable once built.

use crate::poly::{Polynomial, Variable};
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;

/// Basis of a free `k[∂]`-module: an ordered list of generator names.
/// The `name` is a display label only; equality compares generators.
#[derive(Debug, Clone)]
pub struct ModuleBasis {
    pub name: String,
    pub generators: Vec<String>,
}

impl PartialEq for ModuleBasis {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for ModuleBasis {}

impl ModuleBasis {
    pub fn new(name: &str, generators: &[&str]) -> Rc<Self> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let mut dedup = gens.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), gens.len(), "generator names must be unique");
        Rc::new(ModuleBasis {
            name: name.to_string(),
            generators: gens,
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, gen: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == gen)
    }

    /// Basis of the conformal dual: same rank, generators suffixed `*`.
    pub fn dual(self: &Rc<Self>) -> Rc<ModuleBasis> {
        Rc::new(ModuleBasis {
            name: format!("{}*", self.name),
            generators: self.generators.iter().map(|g| format!("{}*", g)).collect(),
        })
    }

    /// Concatenation, used for semidirect and bicrossed products.
    pub fn concat(a: &Rc<Self>, b: &Rc<Self>) -> Rc<ModuleBasis> {
        let mut generators = a.generators.clone();
        generators.extend(b.generators.iter().cloned());
        Rc::new(ModuleBasis {
            name: format!("{}+{}", a.name, b.name),
            generators,
        })
    }
}

/// A conformal dual basis together with the primal it pairs against,
/// `⟨(a_i)_λ, a^j⟩ = δ_ij` positionally.
#[derive(Debug, Clone)]
pub struct DualBasis {
    pub primal: Rc<ModuleBasis>,
    pub basis: Rc<ModuleBasis>,
}

impl DualBasis {
    pub fn of(primal: &Rc<ModuleBasis>) -> Self {
        DualBasis {
            primal: primal.clone(),
            basis: primal.dual(),
        }
    }
}

/// Element of a tensor power of free `k[∂]`-modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub bases: Vec<Rc<ModuleBasis>>,
    terms: BTreeMap<Vec<u16>, Polynomial>,
}

pub fn slot(i: usize) -> Variable {
    Variable::Slot(u8::try_from(i).expect("slot index out of range"))
}

impl TensorElement {
    pub fn zero(bases: &[Rc<ModuleBasis>]) -> Self {
        TensorElement {
            bases: bases.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    /// Single generator of an order-1 module.
    pub fn gen(basis: &Rc<ModuleBasis>, index: usize) -> Self {
        assert!(index < basis.rank());
        let mut t = TensorElement::zero(std::slice::from_ref(basis));
        t.add_term(vec![index as u16], Polynomial::one());
        t
    }

    /// Pure tensor of generators with coefficient 1.
    pub fn gens(bases: &[Rc<ModuleBasis>], idx: &[usize]) -> Self {
        assert_eq!(bases.len(), idx.len());
        let mut t = TensorElement::zero(bases);
        t.add_term(idx.iter().map(|&i| i as u16).collect(), Polynomial::one());
        t
    }

    pub fn order(&self) -> usize {
        self.bases.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &Polynomial)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, idx: Vec<u16>, p: Polynomial) {
        assert_eq!(idx.len(), self.order());
        if p.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &p;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn assert_compatible(&self, other: &TensorElement) {
        assert_eq!(self.bases.len(), other.bases.len(), "order mismatch");
        for (a, b) in self.bases.iter().zip(&other.bases) {
            assert_eq!(a.generators, b.generators, "basis mismatch");
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (idx, p) in &other.terms {
            out.add_term(idx.clone(), p.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (idx, p) in &other.terms {
            out.add_term(idx.clone(), -p);
        }
        out
    }

    pub fn neg(&self) -> TensorElement {
        let mut out = TensorElement::zero(&self.bases);
        for (idx, p) in &self.terms {
            out.add_term(idx.clone(), -p);
        }
        out
    }

    pub fn scale(&self, p: &Polynomial) -> TensorElement {
        let mut out = TensorElement::zero(&self.bases);
        for (idx, q) in &self.terms {
            out.add_term(idx.clone(), p * q);
        }
        out
    }

    pub fn scale_scalar(&self, s: &Scalar) -> TensorElement {
        self.scale(&Polynomial::constant(s.clone()))
    }

    /// Tensor product, shifting the right factor's slot variables.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let s = self.order();
        let mut bases = self.bases.clone();
        bases.extend(other.bases.iter().cloned());
        let mut out = TensorElement::zero(&bases);
        let shift: BTreeMap<Variable, Polynomial> = (1..=other.order())
            .map(|i| (slot(i), Polynomial::var(slot(i + s))))
            .collect();
        for (i1, p1) in &self.terms {
            for (i2, p2) in &other.terms {
                let mut idx = i1.clone();
                idx.extend_from_slice(i2);
                out.add_term(idx, p1 * &p2.subst(&shift));
            }
        }
        out
    }

    /// Multiplies every coefficient by `∂ᵢ` (the `∂` acting on factor `i`).
    pub fn apply_partial(&self, i: usize) -> TensorElement {
        assert!(i >= 1 && i <= self.order(), "slot out of range");
        self.scale(&Polynomial::var(slot(i)))
    }

    /// `Σᵢ apply_partial(t, i)` — the diagonal ∂ action on the tensor power.
    pub fn total_partial(&self) -> TensorElement {
        let mut out = TensorElement::zero(&self.bases);
        for i in 1..=self.order() {
            out = out.add(&self.apply_partial(i));
        }
        out
    }

    /// Reorders tensor factors. `perm[new_position] = old_position` (0-based);
    /// slot variables are renamed consistently.
    pub fn permute(&self, perm: &[usize]) -> TensorElement {
        let s = self.order();
        assert_eq!(perm.len(), s);
        let bases: Vec<Rc<ModuleBasis>> = perm.iter().map(|&q| self.bases[q].clone()).collect();
        let map: BTreeMap<Variable, Polynomial> = perm
            .iter()
            .enumerate()
            .map(|(new, &old)| (slot(old + 1), Polynomial::var(slot(new + 1))))
            .collect();
        let mut out = TensorElement::zero(&bases);
        for (idx, p) in &self.terms {
            let new_idx: Vec<u16> = perm.iter().map(|&q| idx[q]).collect();
            out.add_term(new_idx, p.subst(&map));
        }
        out
    }

    /// The flip `τ` on an order-2 element.
    pub fn flip(&self) -> TensorElement {
        assert_eq!(self.order(), 2, "flip needs order 2");
        self.permute(&[1, 0])
    }

    /// `τ₁₂ = τ⊗id` on an order-3 element.
    pub fn flip12(&self) -> TensorElement {
        assert_eq!(self.order(), 3);
        self.permute(&[1, 0, 2])
    }

    /// `τ₂₃ = id⊗τ` on an order-3 element.
    pub fn flip23(&self) -> TensorElement {
        assert_eq!(self.order(), 3);
        self.permute(&[0, 2, 1])
    }

    /// `τ₁₃` on an order-3 element.
    pub fn flip13(&self) -> TensorElement {
        assert_eq!(self.order(), 3);
        self.permute(&[2, 1, 0])
    }

    /// Applies a variable substitution to every coefficient.
    pub fn subst(&self, map: &BTreeMap<Variable, Polynomial>) -> TensorElement {
        let mut out = TensorElement::zero(&self.bases);
        for (idx, p) in &self.terms {
            out.add_term(idx.clone(), p.subst(map));
        }
        out
    }

    pub fn subst_var(&self, v: Variable, image: &Polynomial) -> TensorElement {
        let mut map = BTreeMap::new();
        map.insert(v, image.clone());
        self.subst(&map)
    }

    /// Canonical representative modulo `∂^{⊗s}` (the image of the total ∂):
    /// every coefficient is reduced by eliminating the last slot variable.
    pub fn mod_total(&self) -> TensorElement {
        assert!(self.order() >= 2, "mod_total needs order >= 2");
        let slots: Vec<Variable> = (1..=self.order()).map(slot).collect();
        let mut out = TensorElement::zero(&self.bases);
        for (idx, p) in &self.terms {
            out.add_term(idx.clone(), p.reduce_mod_total(&slots));
        }
        out
    }

    /// Applies a conformal-linear map (one table row per source generator)
    /// to factor `i`, with formal spectral variable `formal`.
    ///
    /// Rows are polynomials in `(λ, ∂)` = `(Variable::Lambda, Slot(1))`;
    /// `T_θ(f(∂)u) = f(θ+∂)·T_θ(u)`. The caller substitutes `formal`
    /// afterwards — every `|_{λ=…}` evaluation happens only after full
    /// expansion, never before.
    pub fn apply_cmap(
        &self,
        i: usize,
        rows: &dyn Fn(usize) -> Vec<(usize, Polynomial)>,
        target: &Rc<ModuleBasis>,
        formal: Variable,
    ) -> TensorElement {
        assert!(i >= 1 && i <= self.order());
        let mut bases = self.bases.clone();
        bases[i - 1] = target.clone();
        let mut out = TensorElement::zero(&bases);
        let shift = &Polynomial::var(formal) + &Polynomial::var(slot(i));
        for (idx, p) in &self.terms {
            debug_assert!(!p.contains_var(formal), "formal variable already in use");
            let moved = p.subst_var(slot(i), &shift);
            for (k, entry) in rows(idx[i - 1] as usize) {
                let mut map = BTreeMap::new();
                map.insert(Variable::Lambda, Polynomial::var(formal));
                map.insert(Variable::Slot(1), Polynomial::var(slot(i)));
                let row = entry.subst(&map);
                let mut new_idx = idx.clone();
                new_idx[i - 1] = k as u16;
                out.add_term(new_idx, &moved * &row);
            }
        }
        out
    }

    /// Applies a `k[∂]`-module homomorphism given on generators by order-1
    /// elements (coefficients in `Slot(1)`) to factor `i`.
    pub fn apply_hom1(&self, i: usize, images: &dyn Fn(usize) -> TensorElement) -> TensorElement {
        assert!(i >= 1 && i <= self.order());
        let mut bases_opt: Option<Vec<Rc<ModuleBasis>>> = None;
        let mut out_terms: Vec<(Vec<u16>, Polynomial)> = Vec::new();
        for (idx, p) in &self.terms {
            let image = images(idx[i - 1] as usize);
            assert_eq!(image.order(), 1);
            if bases_opt.is_none() {
                let mut b = self.bases.clone();
                b[i - 1] = image.bases[0].clone();
                bases_opt = Some(b);
            }
            for (img_idx, img_p) in &image.terms {
                let mut new_idx = idx.clone();
                new_idx[i - 1] = img_idx[0];
                let moved = img_p.subst_var(Variable::Slot(1), &Polynomial::var(slot(i)));
                out_terms.push((new_idx, p * &moved));
            }
        }
        let bases = bases_opt.unwrap_or_else(|| self.bases.clone());
        let mut out = TensorElement::zero(&bases);
        for (idx, p) in out_terms {
            out.add_term(idx, p);
        }
        out
    }

    /// Splices an order-2 `k[∂]`-module homomorphism (a co-bracket `Δ`) into
    /// factor `i`: the order grows by one, `∂ᵢ ↦ ∂ᵢ + ∂ᵢ₊₁` in the old
    /// coefficient, and later slots shift up.
    pub fn apply_hom2(
        &self,
        i: usize,
        images: &dyn Fn(usize) -> TensorElement,
        image_bases: (&Rc<ModuleBasis>, &Rc<ModuleBasis>),
    ) -> TensorElement {
        assert!(i >= 1 && i <= self.order());
        let s = self.order();
        let mut bases = Vec::new();
        bases.extend(self.bases[..i - 1].iter().cloned());
        bases.push(image_bases.0.clone());
        bases.push(image_bases.1.clone());
        bases.extend(self.bases[i..].iter().cloned());
        let mut out = TensorElement::zero(&bases);

        let mut outer_map: BTreeMap<Variable, Polynomial> = BTreeMap::new();
        outer_map.insert(
            slot(i),
            &Polynomial::var(slot(i)) + &Polynomial::var(slot(i + 1)),
        );
        for j in (i + 1)..=s {
            outer_map.insert(slot(j), Polynomial::var(slot(j + 1)));
        }
        for (idx, p) in &self.terms {
            let image = images(idx[i - 1] as usize);
            assert_eq!(image.order(), 2);
            let moved = p.subst(&outer_map);
            for (img_idx, img_p) in &image.terms {
                let mut inner_map = BTreeMap::new();
                inner_map.insert(Variable::Slot(1), Polynomial::var(slot(i)));
                inner_map.insert(Variable::Slot(2), Polynomial::var(slot(i + 1)));
                let img_moved = img_p.subst(&inner_map);
                let mut new_idx: Vec<u16> = Vec::with_capacity(s + 1);
                new_idx.extend_from_slice(&idx[..i - 1]);
                new_idx.push(img_idx[0]);
                new_idx.push(img_idx[1]);
                new_idx.extend_from_slice(&idx[i..]);
                out.add_term(new_idx, &moved * &img_moved);
            }
        }
        out
    }

    /// Re-indexes all factors into a larger basis via `embed[old] = new`.
    pub fn reindex(&self, target: &Rc<ModuleBasis>, embed: &[usize]) -> TensorElement {
        let bases: Vec<Rc<ModuleBasis>> = self.bases.iter().map(|_| target.clone()).collect();
        let mut out = TensorElement::zero(&bases);
        for (idx, p) in &self.terms {
            let new_idx: Vec<u16> = idx.iter().map(|&g| embed[g as usize] as u16).collect();
            out.add_term(new_idx, p.clone());
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (idx, p) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let gens: Vec<&str> = idx
                .iter()
                .enumerate()
                .map(|(pos, &g)| self.bases[pos].generators[g as usize].as_str())
                .collect();
            write!(f, "({})·{}", p, gens.join("⊗"))?;
        }
        Ok(())
    }
}

/// Conformal pairing `⟨f, u⟩_at` of a dual element against a primal element:
/// `⟨(a_i)_λ, a^j⟩ = δ_ij`, `⟨∂f, u⟩_λ = −λ⟨f, u⟩_λ`, `⟨f, ∂u⟩_λ = λ⟨f, u⟩_λ`.
pub fn pair_dual_primal(f: &TensorElement, u: &TensorElement, at: &Polynomial) -> Polynomial {
    assert_eq!(f.order(), 1);
    assert_eq!(u.order(), 1);
    let mut out = Polynomial::zero();
    for (fi, fp) in f.terms() {
        for (ui, up) in u.terms() {
            if fi[0] != ui[0] {
                continue;
            }
            let a = fp.subst_var(Variable::Slot(1), &(-at));
            let b = up.subst_var(Variable::Slot(1), at);
            out = &out + &(&a * &b);
        }
    }
    out
}

/// The reversed pairing with the normalisation `⟨a, f⟩_{−λ} := −⟨f, a⟩_λ`.
pub fn pair_primal_dual(a: &TensorElement, f: &TensorElement, at: &Polynomial) -> Polynomial {
    -&pair_dual_primal(f, a, &(-at))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Variable::*;

    fn basis2() -> Rc<ModuleBasis> {
        ModuleBasis::new("Q", &["x", "y"])
    }

    #[test]
    fn partial_then_total() {
        let b = basis2();
        let t = TensorElement::gens(&[b.clone(), b.clone()], &[0, 1]);
        let d1 = t.apply_partial(1);
        assert_eq!(
            d1.terms().next().unwrap().1,
            &Polynomial::var(Variable::Slot(1))
        );
        let tot = t.total_partial();
        let expect = &Polynomial::var(Slot(1)) + &Polynomial::var(Slot(2));
        assert_eq!(tot.terms().next().unwrap().1, &expect);
        assert!(TensorElement::zero(&[b.clone(), b])
            .total_partial()
            .is_zero());
    }

    #[test]
    fn flip_swaps_generators_and_slots() {
        let b = basis2();
        let mut t = TensorElement::zero(&[b.clone(), b.clone()]);
        t.add_term(vec![0, 1], Polynomial::var(Slot(1)));
        let flipped = t.flip();
        let (idx, p) = flipped.terms().next().unwrap();
        assert_eq!(idx, &vec![1, 0]);
        assert_eq!(p, &Polynomial::var(Slot(2)));
        assert_eq!(flipped.flip(), t);
    }

    #[test]
    fn tau13_factors_through_tau12_tau23() {
        let b = basis2();
        let mut t = TensorElement::zero(&[b.clone(), b.clone(), b.clone()]);
        t.add_term(
            vec![0, 1, 0],
            &Polynomial::var(Slot(1)) * &Polynomial::var(Slot(3)),
        );
        t.add_term(vec![1, 1, 0], Polynomial::var(Slot(2)));
        assert_eq!(t.flip13(), t.flip12().flip23().flip12());
    }

    #[test]
    fn mod_total_kills_total_partial() {
        let b = basis2();
        let mut t = TensorElement::zero(&[b.clone(), b.clone()]);
        t.add_term(vec![0, 1], Polynomial::var(Slot(2)));
        t.add_term(vec![1, 1], Polynomial::int(3));
        assert!(t.total_partial().mod_total().is_zero());
        // Idempotent.
        let once = t.mod_total();
        assert_eq!(once.mod_total(), once);
    }

    #[test]
    fn pairing_delta_and_sesquilinearity() {
        let b = basis2();
        let dual = DualBasis::of(&b);
        let f = TensorElement::gen(&dual.basis, 0);
        let u0 = TensorElement::gen(&b, 0);
        let u1 = TensorElement::gen(&b, 1);
        let lam = Polynomial::var(Lambda);
        assert_eq!(pair_dual_primal(&f, &u0, &lam), Polynomial::one());
        assert!(pair_dual_primal(&f, &u1, &lam).is_zero());
        // ⟨∂f, u⟩_λ = −λ.
        let df = f.apply_partial(1);
        assert_eq!(pair_dual_primal(&df, &u0, &lam), -&lam);
        // ⟨f, ∂u⟩_λ = λ.
        let du = u0.apply_partial(1);
        assert_eq!(pair_dual_primal(&f, &du, &lam), lam);
    }
}
