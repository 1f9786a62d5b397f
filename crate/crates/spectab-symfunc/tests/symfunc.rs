//! Cross-method identities for the symmetric-function layer: three-way
//! Kostka-Foulkes agreement, Jacobi-Trudi against tableau enumeration, the
//! Hall-Littlewood expansion at exact rational points, the signed
//! displacement formula against brute force, the spectral Kostka
//! decomposition, rotation symmetry, extended-exponent generating
//! polynomials, and sl_n reduction.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use spectab_charge::{charge_of_d, ChargeVariant};
use spectab_shapes::{
    compositions_of, partitions_in_box, partitions_of, shape_sh, Composition, Partition,
    SkewShape,
};
use spectab_symfunc::{
    g_polynomial, hall_littlewood_eval, kostka_foulkes, kostka_foulkes_methods, kostka_number,
    lr0_count, schur, schur_expansion_from_graded, schur_jacobi_trudi, QPolynomial,
    SchurExpansion,
};

fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn straight(parts: &[u32]) -> SkewShape {
    SkewShape::straight(partition(parts))
}

fn composition(p: &Partition) -> Composition {
    Composition::new(p.parts().to_vec())
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// All offset vectors with 0 <= v[i] <= bounds[i].
fn offset_vectors(bounds: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

/// The displayed polynomial of the rectangular example:
/// q^3 + 2q^4 + 3q^5 + 5q^6 + 5q^7 + 4q^8 + 3q^9 + q^10.
fn rectangular_example_golden() -> QPolynomial {
    let mut p = QPolynomial::zero();
    for (deg, coeff) in [(3, 1), (4, 2), (5, 3), (6, 5), (7, 5), (8, 4), (9, 3), (10, 1)] {
        p.add_term(deg, BigInt::from(coeff));
    }
    p
}

#[test]
fn kostka_foulkes_methods_agree_on_rectangular_contents() {
    for (l, max_m) in [(1u32, 6usize), (2, 5), (3, 3)] {
        for m in 1..=max_m {
            let mu = Composition::new(vec![l; m]);
            let size = l as usize * m;
            for lam in partitions_of(size, size, size as u32) {
                let polys: Vec<QPolynomial> = kostka_foulkes_methods()
                    .iter()
                    .map(|method| method.polynomial(&lam, &mu).unwrap())
                    .collect();
                for (poly, method) in polys.iter().zip(kostka_foulkes_methods()) {
                    assert_eq!(
                        *poly,
                        polys[0],
                        "method {} disagrees for lambda {lam}, mu ({l}^{m})",
                        method.name()
                    );
                }
                let k = kostka_number(&SkewShape::straight(lam.clone()), &mu).unwrap();
                assert_eq!(
                    polys[0].evaluate_at_one(),
                    BigInt::from(k),
                    "K(1) != Kostka number for lambda {lam}, mu ({l}^{m})"
                );
            }
        }
    }
}

#[test]
fn schur_matches_jacobi_trudi_and_monomial_coefficients_count_tableaux() {
    let mut shapes: Vec<(SkewShape, usize)> = Vec::new();
    for size in 1..=5usize {
        for lam in partitions_of(size, size, size as u32) {
            shapes.push((SkewShape::straight(lam), 3));
        }
    }
    for (text, n) in [
        ("4,3,2/2,1", 3),
        ("3,2,1/1,1", 3),
        ("2,2,2/1,1", 3),
        ("5,3/2", 2),
        ("2,1/1", 2),
        ("2,1/1", 3),
        ("3,3/2,2", 3),
        ("2,2,1/1,1", 4),
    ] {
        shapes.push((text.parse().unwrap(), n));
    }
    for (shape, n) in shapes {
        let direct = schur(&shape, n);
        assert_eq!(
            direct,
            schur_jacobi_trudi(&shape, n),
            "Jacobi-Trudi mismatch for {shape} in {n} variables"
        );
        let size = shape.size() as u32;
        for c in compositions_of(size, n, 0) {
            let expo: Vec<i32> = c.parts().iter().map(|&x| x as i32).collect();
            let k = kostka_number(&shape, &c).unwrap();
            assert_eq!(
                direct.coefficient(&expo),
                BigInt::from(k),
                "coefficient of {c:?} in s_{shape}"
            );
        }
    }
}

#[test]
fn hall_littlewood_expansion_holds_at_exact_rational_points() {
    let qs = [rat(0, 1), rat(1, 2), rat(-2, 3), rat(3, 1), rat(-5, 2)];
    let xpool = [rat(2, 1), rat(1, 3), rat(-3, 5)];
    for m in 1..=3usize {
        let x = &xpool[..m];
        for size in 1..=6usize {
            let mus = partitions_of(size, m, size as u32);
            let lams = mus.clone();
            let lhs: Vec<BigRational> = lams
                .iter()
                .map(|lam| schur(&SkewShape::straight(lam.clone()), m).evaluate(x))
                .collect();
            let kf: Vec<Vec<QPolynomial>> = lams
                .iter()
                .map(|lam| {
                    mus.iter()
                        .map(|mu| kostka_foulkes(lam, &composition(mu), "charge").unwrap())
                        .collect()
                })
                .collect();
            for q in &qs {
                let p_vals: Vec<BigRational> = mus
                    .iter()
                    .map(|mu| hall_littlewood_eval(mu, x, q).unwrap())
                    .collect();
                for (li, lam) in lams.iter().enumerate() {
                    let mut rhs = BigRational::zero();
                    for (ui, p) in p_vals.iter().enumerate() {
                        rhs += kf[li][ui].evaluate(q) * p;
                    }
                    assert_eq!(
                        lhs[li], rhs,
                        "expansion fails for lambda {lam}, m {m}, q {q}"
                    );
                }
            }
        }
    }
}

#[test]
fn lr0_strategies_agree_on_boxes_and_staircases() {
    // Every skew presentation inside a 4x4 box with at most 8 cells,
    // including translated presentations and presentations with empty rows.
    let boxed = partitions_in_box(4, 4);
    let mut cases = 0u64;
    for outer in &boxed {
        for inner in &boxed {
            let Ok(shape) = SkewShape::new(outer.clone(), inner) else {
                continue;
            };
            let size = shape.size() as usize;
            if size == 0 || size > 8 {
                continue;
            }
            for lam in partitions_of(size, size, size as u32) {
                let by_enum = lr0_count(&shape, &lam, "enumerate").unwrap();
                let by_sum = lr0_count(&shape, &lam, "inclusion-exclusion").unwrap();
                assert_eq!(by_enum, by_sum, "shape {shape}, content {lam}");
                cases += 1;
            }
        }
    }
    assert!(cases > 10_000, "box sweep too small: {cases}");

    // Every staircase of every partition mu with |mu| <= 7.
    for size in 1..=7usize {
        for mu in partitions_of(size, size, size as u32) {
            let parts = mu.parts().to_vec();
            let m = parts.len();
            let bounds: Vec<u32> = (1..m).map(|i| parts[i]).collect();
            for d in offset_vectors(&bounds) {
                let shape = shape_sh(&d, &parts, &Partition::empty()).unwrap();
                for lam in partitions_of(size, m, size as u32) {
                    let by_enum = lr0_count(&shape, &lam, "enumerate").unwrap();
                    let by_sum = lr0_count(&shape, &lam, "inclusion-exclusion").unwrap();
                    assert_eq!(by_enum, by_sum, "staircase {shape}, content {lam}");
                }
            }
        }
    }
}

#[test]
fn staircase_family_of_the_rectangular_example() {
    let mu = vec![2u32; 5];
    let lam = partition(&[4, 3, 2, 1]);
    let mut classes: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for d in offset_vectors(&[2, 2, 2, 2]) {
        let shape = shape_sh(&d, &mu, &Partition::empty()).unwrap();
        let count = lr0_count(&shape, &lam, "enumerate").unwrap();
        assert_eq!(
            count,
            lr0_count(&shape, &lam, "inclusion-exclusion").unwrap(),
            "strategies disagree on {shape}"
        );
        // Staircases touch the left wall, so rotation preserves the count.
        assert_eq!(
            count,
            lr0_count(&shape.rotate180(), &lam, "enumerate").unwrap(),
            "rotation changes the count of {shape}"
        );
        if count > 0 {
            classes.insert(d, count);
        }
    }
    assert_eq!(classes.len(), 17, "nonzero classes");
    assert_eq!(classes.values().sum::<u64>(), 24, "total multiplicity");
    let mut poly = QPolynomial::zero();
    for (d, count) in &classes {
        let deg = charge_of_d(&Composition::new(d.clone()), 5, ChargeVariant::C).unwrap();
        poly.add_term(deg, BigInt::from(*count));
    }
    assert_eq!(poly, rectangular_example_golden());
}

#[test]
fn spectral_decomposition_recovers_kostka_numbers() {
    for size in 1..=8usize {
        for mu in partitions_of(size, size, size as u32) {
            let parts = mu.parts().to_vec();
            let m = parts.len();
            // Headroom above the exponent bound d_i <= mu_{i+1} at small
            // sizes double-checks that out-of-range staircases count zero.
            let extra = if size <= 6 { 1 } else { 0 };
            let bounds: Vec<u32> = (1..m).map(|i| parts[i] + extra).collect();
            let shapes: Vec<SkewShape> = offset_vectors(&bounds)
                .into_iter()
                .map(|d| shape_sh(&d, &parts, &Partition::empty()).unwrap())
                .collect();
            let max_len = if size <= 6 { size } else { m };
            for lam in partitions_of(size, max_len, size as u32) {
                let total: u64 = shapes
                    .iter()
                    .map(|shape| lr0_count(shape, &lam, "enumerate").unwrap())
                    .sum();
                let k = kostka_number(&SkewShape::straight(lam.clone()), &composition(&mu))
                    .unwrap();
                assert_eq!(total, k, "lambda {lam}, mu {mu}");
            }
        }
    }
}

#[test]
fn rotation_preserves_counts_for_wall_touching_presentations() {
    let boxed = partitions_in_box(5, 5);
    let mut cases = 0u64;
    for outer in &boxed {
        for inner in &boxed {
            let Ok(shape) = SkewShape::new(outer.clone(), inner) else {
                continue;
            };
            let size = shape.size() as usize;
            if size == 0 || size > 8 {
                continue;
            }
            if shape.inner()[shape.rows() - 1] != 0 {
                continue;
            }
            let hat = shape.rotate180();
            for lam in partitions_of(size, size, size as u32) {
                assert_eq!(
                    lr0_count(&shape, &lam, "enumerate").unwrap(),
                    lr0_count(&hat, &lam, "enumerate").unwrap(),
                    "rotation of {shape}"
                );
                cases += 1;
            }
        }
    }
    assert!(cases > 50_000, "rotation sweep too small: {cases}");

    // Nonmovability is translation sensitive, so the identity needs the
    // wall-touching presentation: one box off the wall is movable while its
    // rotation is flush and stays put.
    let off_wall: SkewShape = "2/1".parse().unwrap();
    let one = partition(&[1]);
    assert_eq!(lr0_count(&off_wall, &one, "enumerate").unwrap(), 0);
    assert_eq!(
        lr0_count(&off_wall.rotate180(), &one, "enumerate").unwrap(),
        1
    );
}

#[test]
fn extended_exponent_polynomial_factors_through_the_spectral_sum() {
    // Rectangular contents: G equals the spectral polynomial shifted by m*l.
    for m in 1..=8usize {
        for l in 1..=8u32 {
            let size = m * l as usize;
            if size > 8 {
                continue;
            }
            let mu = Composition::new(vec![l; m]);
            for lam in partitions_of(size, size, size as u32) {
                let g = g_polynomial(&SkewShape::straight(lam.clone()), &mu).unwrap();
                let spectral = kostka_foulkes(&lam, &mu, "spectral-c").unwrap();
                assert_eq!(
                    g,
                    spectral.shifted(m as u64 * u64::from(l)),
                    "lambda {lam}, mu ({l}^{m})"
                );
            }
        }
    }

    // General dominant contents: on a straight shape the extra exponent d_0
    // is the constant mu_1, so G is the staircase sum shifted by m*mu_1.
    for size in 1..=7usize {
        for mu in partitions_of(size, size, size as u32) {
            let parts = mu.parts().to_vec();
            let m = parts.len();
            let bounds: Vec<u32> = (1..m).map(|i| parts[i]).collect();
            for lam in partitions_of(size, m, size as u32) {
                let mut staircase_sum = QPolynomial::zero();
                for d in offset_vectors(&bounds) {
                    let shape = shape_sh(&d, &parts, &Partition::empty()).unwrap();
                    let count = lr0_count(&shape, &lam, "enumerate").unwrap();
                    if count > 0 {
                        let deg =
                            charge_of_d(&Composition::new(d), m, ChargeVariant::C).unwrap();
                        staircase_sum.add_term(deg, BigInt::from(count));
                    }
                }
                let g = g_polynomial(&SkewShape::straight(lam.clone()), &composition(&mu))
                    .unwrap();
                assert_eq!(
                    g,
                    staircase_sum.shifted(m as u64 * u64::from(parts[0])),
                    "lambda {lam}, mu {mu}"
                );
                let k = kostka_number(&SkewShape::straight(lam.clone()), &composition(&mu))
                    .unwrap();
                assert_eq!(g.evaluate_at_one(), BigInt::from(k), "G(1) for {lam}, {mu}");
            }
        }
    }

    // The rectangular example: d_0 = 2 and m = 5 give the factor q^10.
    let g = g_polynomial(
        &straight(&[4, 3, 2, 1]),
        &Composition::new(vec![2, 2, 2, 2, 2]),
    )
    .unwrap();
    assert_eq!(g, rectangular_example_golden().shifted(10));
}

#[test]
fn schur_reduction_commutes_with_monomial_expansion() {
    for n in 2..=3usize {
        let mut s = SchurExpansion::new(n);
        s.add_term(partition(&[3, 1]), &QPolynomial::monomial(2, BigInt::from(1)));
        s.add_term(partition(&[2, 2]), &{
            let mut p = QPolynomial::one();
            p.add_term(3, BigInt::from(2));
            p
        });
        s.add_term(partition(&[2, 1]), &QPolynomial::monomial(0, BigInt::from(-1)));
        s.add_term(partition(&[1, 1]), &QPolynomial::monomial(1, BigInt::from(3)));
        if n == 3 {
            s.add_term(partition(&[2, 2, 1]), &QPolynomial::monomial(4, BigInt::from(1)));
            s.add_term(partition(&[1, 1, 1]), &QPolynomial::monomial(2, BigInt::from(2)));
        }

        // Reducing then expanding equals expanding then canonicalizing.
        let reduced_graded = s.reduce().expand_monomials();
        let graded = s.expand_monomials();
        assert_eq!(
            reduced_graded.keys().collect::<Vec<_>>(),
            graded.keys().collect::<Vec<_>>(),
            "degree support changed under reduction"
        );
        for (deg, me) in &graded {
            assert_eq!(
                reduced_graded[deg],
                me.reduce(),
                "reduction does not commute at degree {deg} in {n} variables"
            );
        }

        // Expansion to graded monomials is faithfully inverted.
        assert_eq!(schur_expansion_from_graded(n, &graded).unwrap(), s);
        assert_eq!(
            schur_expansion_from_graded(n, &reduced_graded).unwrap(),
            s.reduce()
        );
    }
}
