//! Exhaustive desk-scale sweeps for the row-index bijections and the
//! exponent statistics, cross-checked against independent enumeration.

use std::collections::BTreeMap;

use itertools::Itertools;
use spectab_shapes::{
    compositions_of, partitions_of, shape_sh, Composition, Partition, SkewShape,
};
use spectab_tableaux::{
    descents_exponents, enumerate_tableaux, is_lr_tableau, is_nonmovable, is_semistandard,
    theta_d, theta_d_inverse, theta_d_inverse_extended, theta_nu, theta_nu_inverse, zeta,
    zeta_by_matching, Tableau, TableauKind,
};

fn sst(lambda: &Partition, mu: &[u32]) -> Vec<Tableau> {
    enumerate_tableaux(
        &SkewShape::straight(lambda.clone()),
        Some(mu),
        TableauKind::Semistandard,
        mu.len() as u8,
    )
}

fn lr0(shape: &SkewShape, lambda: &Partition) -> Vec<Tableau> {
    enumerate_tableaux(
        shape,
        Some(lambda.parts()),
        TableauKind::NonmovableLr,
        lambda.len() as u8,
    )
}

/// All offset vectors nu with max(0, mu_{i+1}-mu_i) <= nu_i <= mu_{i+1}+margin,
/// i.e. every vector for which Sh_nu(mu) is a valid staircase, up to the margin.
fn offset_vectors(mu: &[u32], margin: u32) -> Vec<Vec<u32>> {
    let m = mu.len();
    if m <= 1 {
        return vec![Vec::new()];
    }
    (0..m - 1)
        .map(|i| mu[i + 1].saturating_sub(mu[i])..=mu[i + 1] + margin)
        .multi_cartesian_product()
        .collect()
}

/// Positive compositions of `size` of every length.
fn positive_compositions(size: u32) -> Vec<Composition> {
    (1..=size as usize)
        .flat_map(|len| compositions_of(size, len, 1))
        .collect()
}

#[test]
fn theta_nu_bijects_onto_lr_tableaux() {
    for k in 1..=5u32 {
        let contents: Vec<Vec<u32>> = if k <= 4 {
            positive_compositions(k)
                .iter()
                .map(|c| c.parts().to_vec())
                .collect()
        } else {
            partitions_of(k as usize, k as usize, k)
                .iter()
                .map(|p| p.parts().to_vec())
                .collect()
        };
        for mu in contents {
            for nu in offset_vectors(&mu, 1) {
                let shape = shape_sh(&nu, &mu, &Partition::empty()).expect("valid staircase");
                for lambda in partitions_of(k as usize, k as usize, k) {
                    let mut images: Vec<Tableau> = sst(&lambda, &mu)
                        .iter()
                        .map(|t| theta_nu(t, &Composition::new(nu.clone())).unwrap())
                        .collect();
                    let total = images.len();
                    images.sort();
                    images.dedup();
                    assert_eq!(images.len(), total, "theta_nu must be injective");
                    let lr = enumerate_tableaux(
                        &shape,
                        Some(lambda.parts()),
                        TableauKind::Lr,
                        lambda.len() as u8,
                    );
                    assert_eq!(
                        images, lr,
                        "images of SST({lambda}, {mu:?}) under nu = {nu:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn theta_nu_roundtrip_for_admissible_offsets() {
    let lambda: Partition = "3,2".parse().unwrap();
    let mu = [2u32, 2, 1];
    let tableaux = sst(&lambda, &mu);
    assert_eq!(tableaux.len(), 2);
    for nu in offset_vectors(&mu, 2) {
        for t in &tableaux {
            let u = theta_nu(t, &Composition::new(nu.clone())).unwrap();
            assert_eq!(theta_nu_inverse(&u).unwrap(), *t);
        }
    }
}

#[test]
fn theta_nu_image_classification() {
    // Image is semistandard iff nu dominates d(T) entrywise, and nonmovable
    // iff nu equals d(T), exhaustively for |mu| <= 7.
    for k in 1..=7u32 {
        let mut contents: Vec<Vec<u32>> = partitions_of(k as usize, k as usize, k)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        if k <= 5 {
            contents = positive_compositions(k)
                .iter()
                .map(|c| c.parts().to_vec())
                .collect();
        }
        for mu in contents {
            let m = mu.len();
            let offsets = offset_vectors(&mu, 1);
            for lambda in partitions_of(k as usize, m, k) {
                for t in sst(&lambda, &mu) {
                    let d = descents_exponents(&t, &Composition::new(mu.clone()), false).unwrap();
                    for nu in &offsets {
                        let u = theta_nu(&t, &Composition::new(nu.clone())).unwrap();
                        let dominates = nu.iter().zip(d.parts()).all(|(&n, &di)| n >= di);
                        assert_eq!(is_semistandard(&u), dominates);
                        assert_eq!(is_nonmovable(&u), nu == d.parts());
                    }
                }
            }
        }
    }
}

#[test]
fn theta_d_bijection_and_counting() {
    // theta_d is a bijection SST(lambda, mu) -> union over d of
    // LR0(Sh_d(mu), lambda): partitions mu up to |mu| = 8, compositions up
    // to 6. A margin of one extra unit per offset at small sizes verifies
    // that no nonmovable LR tableaux live outside the exponent range.
    for k in 1..=8u32 {
        let mut contents: Vec<Vec<u32>> = partitions_of(k as usize, k as usize, k)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        if k <= 6 {
            contents = positive_compositions(k)
                .iter()
                .map(|c| c.parts().to_vec())
                .collect();
        }
        let margin = u32::from(k <= 5);
        for mu in contents {
            let m = mu.len();
            for lambda in partitions_of(k as usize, k as usize, k) {
                let tableaux = sst(&lambda, &mu);
                let kostka = tableaux.len();
                let mut buckets: BTreeMap<Vec<u32>, Vec<Tableau>> = BTreeMap::new();
                for t in tableaux {
                    assert_eq!(zeta(&t, m), zeta_by_matching(&t, m));
                    let d = descents_exponents(&t, &Composition::new(mu.clone()), false).unwrap();
                    let u = theta_d(&t).unwrap();
                    assert_eq!(
                        u.shape(),
                        &shape_sh(d.parts(), &mu, &Partition::empty()).unwrap()
                    );
                    assert_eq!(theta_d_inverse(&u, &lambda).unwrap(), t);
                    buckets.entry(d.parts().to_vec()).or_default().push(u);
                }
                let mut total = 0usize;
                for d in offset_vectors(&mu, margin) {
                    let shape = shape_sh(&d, &mu, &Partition::empty()).unwrap();
                    let enumerated = lr0(&shape, &lambda);
                    let mut expected = buckets.remove(&d).unwrap_or_default();
                    expected.sort();
                    assert_eq!(
                        expected, enumerated,
                        "bucket for d = {d:?}, mu = {mu:?}, lambda = {lambda}"
                    );
                    total += enumerated.len();
                }
                assert!(buckets.is_empty(), "every exponent vector was swept");
                assert_eq!(total, kostka, "counting identity for mu = {mu:?}");
            }
        }
    }
}

#[test]
fn double_count_for_rectangular_content_222() {
    let mu = [2u32, 2, 2];
    for lambda in partitions_of(6, 6, 6) {
        for d in offset_vectors(&mu, 0) {
            let matching: Vec<Tableau> = sst(&lambda, &mu)
                .into_iter()
                .filter(|t| {
                    descents_exponents(t, &Composition::new(mu.to_vec()), false)
                        .unwrap()
                        .parts()
                        == d
                })
                .collect();
            let shape = shape_sh(&d, &mu, &Partition::empty()).unwrap();
            assert_eq!(matching.len(), lr0(&shape, &lambda).len());
        }
    }
}

#[test]
fn seventeen_exponent_classes_for_staircase_weight() {
    let lambda: Partition = "4,3,2,1".parse().unwrap();
    let mu = [2u32, 2, 2, 2, 2];
    let tableaux = sst(&lambda, &mu);
    assert_eq!(tableaux.len(), 24);
    let mut buckets: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    for t in &tableaux {
        let d = descents_exponents(t, &Composition::new(mu.to_vec()), false).unwrap();
        let u = theta_d(t).unwrap();
        assert!(is_lr_tableau(&u) && is_nonmovable(&u));
        *buckets.entry(d.parts().to_vec()).or_default() += 1;
    }
    assert_eq!(buckets.len(), 17);
    let mut sizes: Vec<usize> = buckets.values().copied().collect();
    sizes.sort();
    assert_eq!(
        sizes,
        vec![1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 3, 3]
    );
    for (d, count) in buckets {
        let shape = shape_sh(&d, &mu, &Partition::empty()).unwrap();
        assert_eq!(lr0(&shape, &lambda).len(), count);
    }
}

#[test]
fn extended_theta_d_roundtrip_and_counting() {
    let cases: [(&str, &str); 6] = [
        ("3,2,1", "1"),
        ("3,3", "2"),
        ("2,2,1", "1,1"),
        ("4,2", "2,1"),
        ("3,2", "1,1"),
        ("2,2,2", "2,1"),
    ];
    for (outer, inner) in cases {
        let lambda: Partition = outer.parse().unwrap();
        let nu: Partition = inner.parse().unwrap();
        let shape = SkewShape::new(lambda.clone(), &nu).unwrap();
        let size = shape.size() as u32;
        for mu in positive_compositions(size) {
            let mu = mu.parts().to_vec();
            let m = mu.len();
            let tableaux =
                enumerate_tableaux(&shape, Some(&mu[..]), TableauKind::Semistandard, m as u8);
            let mut buckets: BTreeMap<Vec<u32>, Vec<Tableau>> = BTreeMap::new();
            for t in tableaux.iter() {
                assert_eq!(zeta(t, m), zeta_by_matching(t, m));
                let d = descents_exponents(t, &Composition::new(mu.clone()), true).unwrap();
                let u = theta_d(t).unwrap();
                assert_eq!(u.shape(), &shape_sh(d.parts(), &mu, &nu).unwrap());
                assert_eq!(theta_d_inverse_extended(&u, &lambda, &nu).unwrap(), *t);
                buckets.entry(d.parts().to_vec()).or_default().push(u);
            }
            // Sweep every candidate extended exponent vector; invalid shapes
            // cannot occur as images and carry empty buckets.
            let mut ranges = vec![0..=mu[0] + 1];
            for i in 0..m - 1 {
                ranges.push(mu[i + 1].saturating_sub(mu[i])..=mu[i + 1] + 1);
            }
            let mut total = 0usize;
            for d in ranges.into_iter().multi_cartesian_product() {
                let Ok(staircase) = shape_sh(&d, &mu, &nu) else {
                    assert!(!buckets.contains_key(&d));
                    continue;
                };
                let enumerated = lr0(&staircase, &lambda);
                let mut expected = buckets.remove(&d).unwrap_or_default();
                expected.sort();
                assert_eq!(
                    expected, enumerated,
                    "bucket for d = {d:?}, mu = {mu:?}, shape = {shape}"
                );
                total += enumerated.len();
            }
            assert!(buckets.is_empty());
            assert_eq!(total, tableaux.len());
        }
    }
}

#[test]
fn enumeration_matches_filtered_brute_force() {
    for (shape, alphabet) in [
        ("2,1", 3u8),
        ("2,2/1", 3),
        ("3,1", 3),
        ("2,2,1/1", 3),
        ("3,2/1", 4),
    ] {
        let shape: SkewShape = shape.parse().unwrap();
        let all = enumerate_tableaux(&shape, None, TableauKind::AllFillings, alphabet);
        assert_eq!(
            all.len(),
            (alphabet as usize).pow(shape.size() as u32),
            "brute force covers every filling of {shape}"
        );
        let kinds: [(TableauKind, fn(&Tableau) -> bool); 4] = [
            (TableauKind::Semistandard, |t| is_semistandard(t)),
            (TableauKind::Lr, |t| is_lr_tableau(t)),
            (TableauKind::Nonmovable, |t| is_nonmovable(t)),
            (TableauKind::NonmovableLr, |t| {
                is_lr_tableau(t) && is_nonmovable(t)
            }),
        ];
        for (kind, pred) in kinds {
            let filtered: Vec<Tableau> = all.iter().filter(|t| pred(t)).cloned().collect();
            assert_eq!(
                filtered,
                enumerate_tableaux(&shape, None, kind, alphabet),
                "{kind:?} on {shape}"
            );
        }
    }
}
