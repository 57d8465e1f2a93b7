use golodcheck_core::golod::{artinian_reduction, golod_bound_series, serre_inequality_check};
use golodcheck_core::grading::{multidegree, Grading};
use golodcheck_core::koszul::koszul_betti;
use golodcheck_core::subdet::{canonicalize, shape_classify};
use golodcheck_core::{
    buchberger, golod_check, hilbert_certificate, minimal_resolution, Field, Fp, GolodHints, GolodOptions, GolodVerdict,
    GradingMode, Monomial, MonomialOrder, MinorSelection, Multidegree, Polynomial, Reduction, F32003, QQ,
};
use proptest::prelude::*;

type F101 = Fp<101>;

fn fp() -> impl Strategy<Value = F32003> {
    (0u64..32003).prop_map(F32003::new)
}

fn qq() -> impl Strategy<Value = QQ> {
    (-50i64..50, 1i64..20).prop_map(|(a, b)| QQ::new(a, b))
}

fn monomial(nvars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, nvars).prop_map(|e| Monomial::from_exponents(&e).unwrap())
}

fn poly(nvars: usize) -> impl Strategy<Value = Polynomial<F101>> {
    proptest::collection::vec((monomial(nvars, 2), 1u64..101), 0..6).prop_map(move |terms| {
        Polynomial::from_terms(nvars, MonomialOrder::DegLex, terms.into_iter().map(|(m, c)| (m, F101::new(c))).collect())
    })
}

/// A nonempty selection of 2 x 2 minors of an `m x n` matrix.
fn selection(m: usize, n: usize) -> impl Strategy<Value = MinorSelection> {
    let count = MinorSelection::all_minors(m, n, 2).len();
    proptest::sample::subsequence((0..count).collect::<Vec<_>>(), 1..=count)
        .prop_map(move |idx| MinorSelection::from_indices(m, n, 2, &idx))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn field_axioms<F: Field>(a: &F, b: &F, c: &F) -> bool {
    let distributes = a.mul(&b.add(c)) == a.mul(b).add(&a.mul(c));
    let associates = a.mul(b).mul(c) == a.mul(&b.mul(c)) && a.add(b).add(c) == a.add(&b.add(c));
    let commutes = a.mul(b) == b.mul(a) && a.add(b) == b.add(a);
    let inverse = a.is_zero() || a.mul(&a.inv().unwrap()).is_one();
    let negation = a.add(&a.neg()).is_zero() && a.sub(b).add(b) == *a;
    distributes && associates && commutes && inverse && negation
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prime_field_axioms(a in fp(), b in fp(), c in fp()) {
        prop_assert!(field_axioms(&a, &b, &c));
        let text = a.to_string();
        prop_assert_eq!(F32003::parse(&text), Some(a));
    }

    #[test]
    fn rational_axioms(a in qq(), b in qq(), c in qq()) {
        prop_assert!(field_axioms(&a, &b, &c));
    }

    #[test]
    fn orders_are_multiplicative(a in monomial(4, 3), b in monomial(4, 3), c in monomial(4, 3)) {
        for order in [MonomialOrder::DegLex, MonomialOrder::DegRevLex] {
            let ab = order.cmp(&a, &b);
            prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_eq!(order.cmp(&b, &a), ab.reverse());
            prop_assert!(order.cmp(&Monomial::one(4), &c).is_le());
        }
    }

    #[test]
    fn polynomial_ring_laws(f in poly(3), g in poly(3), h in poly(3)) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn multidegree_is_additive(a in monomial(6, 2), b in monomial(6, 2), ca in 1u64..101, cb in 1u64..101) {
        let g = Grading::new(GradingMode::RowColumn, 2, 3);
        let f = Polynomial::monomial(a, F101::new(ca), MonomialOrder::DegLex);
        let h = Polynomial::monomial(b, F101::new(cb), MonomialOrder::DegLex);
        let (df, dh) = (multidegree(&f, &g), multidegree(&h, &g));
        prop_assert!(matches!(df, Multidegree::Homogeneous(_)));
        prop_assert_eq!(multidegree(&f.mul(&h), &g), df.add(&dh));
    }

    #[test]
    fn normal_form_is_linear(sel in selection(2, 3), f in poly(6), g in poly(6), c in 1u64..101) {
        let ideal = sel.ideal::<F101>(GradingMode::RowColumn);
        let gb = ideal.groebner(MonomialOrder::DegLex);
        let c = F101::new(c);
        let lhs = gb.normal_form(&f.scale(&c).add(&g));
        let rhs = gb.normal_form(&f).scale(&c).add(&gb.normal_form(&g));
        prop_assert_eq!(lhs, rhs);
        for p in ideal.gens() {
            prop_assert!(gb.contains(&p.mul(&f)));
        }
    }

    #[test]
    fn reduced_basis_ignores_generator_order(sel in selection(2, 4), seed in any::<u64>()) {
        let mut gens = sel.polynomials::<F101>();
        let a = buchberger(&gens, 8, MonomialOrder::DegLex);
        let k = gens.len();
        gens.rotate_left(seed as usize % k);
        if seed % 2 == 0 {
            gens.reverse();
        }
        let b = buchberger(&gens, 8, MonomialOrder::DegLex);
        let mut ga: Vec<_> = a.generators().to_vec();
        let mut gb: Vec<_> = b.generators().to_vec();
        ga.sort_by_key(|p| format!("{p:?}"));
        gb.sort_by_key(|p| format!("{p:?}"));
        prop_assert_eq!(ga, gb);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn prime_and_rational_tables_agree(sel in selection(2, 4)) {
        let a = minimal_resolution(&sel.polynomials::<F32003>()).unwrap();
        let b = minimal_resolution(&sel.polynomials::<QQ>()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn syzygy_and_koszul_routes_agree(sel in selection(2, 4)) {
        let ideal = sel.ideal::<F32003>(GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens()).unwrap();
        prop_assert!(hilbert_certificate(&bt, &ideal.groebner(MonomialOrder::DegLex), 10));
        let window = koszul_betti(&ideal, bt.projective_dimension() as usize + 1, bt.regularity() + 1);
        prop_assert_eq!(window, bt);
    }

    #[test]
    fn verdicts_are_symmetry_invariant(sel in selection(3, 3), rows in permutation(3), cols in permutation(3), flip: bool) {
        let mut other = sel.permuted(&rows, &cols);
        if flip {
            other = other.transposed();
        }
        prop_assert_eq!(canonicalize(&sel).indices(), canonicalize(&other).indices());
        prop_assert_eq!(shape_classify::<F32003>(&sel).unwrap().is_block(), shape_classify::<F32003>(&other).unwrap().is_block());
        let a = minimal_resolution(&sel.polynomials::<F32003>()).unwrap();
        let b = minimal_resolution(&other.polynomials::<F32003>()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn serre_bound_and_reductions(sel in selection(2, 4)) {
        let ideal = sel.ideal::<F32003>(GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens()).unwrap();
        let opts = |reduction| GolodOptions {
            max_degree: 6,
            fast_paths: false,
            stop_at_first_gap: false,
            reduction,
        };
        let plain = golod_check(&ideal, &bt, &opts(Reduction::None), &GolodHints::default()).unwrap();
        let reduced = golod_check(&ideal, &bt, &opts(Reduction::Artinian { seed: 3, retries: 16 }), &GolodHints::default()).unwrap();
        let actual = plain.actual.clone().unwrap();
        prop_assert!(serre_inequality_check(&actual, &plain.bound));
        let bound = golod_bound_series(&bt, 8, 6);
        prop_assert_eq!(plain.bound.table(), bound.table());
        prop_assert_eq!(plain.actual.as_ref().map(|s| s.table().to_vec()), reduced.actual.as_ref().map(|s| s.table().to_vec()));
        prop_assert_eq!(plain.verdict, reduced.verdict);
    }

    #[test]
    fn artinian_reduction_keeps_betti_numbers(sel in selection(2, 4), seed in any::<u64>()) {
        let ideal = sel.ideal::<F32003>(GradingMode::RowColumn);
        let bt = minimal_resolution(ideal.gens()).unwrap();
        let (stripped, _) = ideal.strip_free_variables();
        let depth = stripped.nvars() - bt.projective_dimension() as usize;
        let (reduced, _) = artinian_reduction(&stripped, depth, seed, 16).unwrap();
        prop_assert_eq!(reduced.nvars(), bt.projective_dimension() as usize);
        prop_assert_eq!(minimal_resolution(reduced.gens()).unwrap(), bt);
    }
}

/// `(1 + z)^n` is the Poincare series of the residue field of a polynomial ring.
#[test]
fn polynomial_ring_is_golod() {
    for n in 1..=4 {
        let ideal = golodcheck_core::Ideal::<F32003>::standard(Vec::new(), n).unwrap();
        let bt = minimal_resolution::<F32003>(&[]).unwrap();
        let opts = GolodOptions { fast_paths: false, stop_at_first_gap: false, reduction: Reduction::None, ..GolodOptions::default() };
        let r = golod_check(&ideal, &bt, &opts, &GolodHints::default()).unwrap();
        assert_eq!(r.verdict, GolodVerdict::ConsistentUpTo(8));
    }
}
