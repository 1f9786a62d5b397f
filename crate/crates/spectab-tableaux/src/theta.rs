//! The row-index bijections theta_nu and theta_d.
//!
//! theta_nu sends a semistandard tableau T of content mu to a filling of
//! the staircase shape Sh_nu(mu): row k lists, in increasing order, the
//! indices of the rows of T that contain the letter k. The image is always
//! an LR tableau; it is semistandard iff nu_i >= d_i(T) for all i, and
//! nonmovable iff nu = d(T). theta_d specializes nu to the exponent vector
//! d(T) and extends to skew tableaux, where the extra inner shape is
//! rotated, stacked on top, and its filling is forced.

use spectab_shapes::{shape_sh, Composition, Partition, SkewShape};

use crate::{
    descents_exponents, enumerate_tableaux, is_lattice_word, is_lr_tableau, is_nonmovable,
    is_semistandard, reading_word, Tableau, TableauError, TableauKind,
};

/// Row k of the output holds the 1-based indices of the rows of `t` that
/// contain the letter k, one copy per occurrence.
fn index_rows(t: &Tableau, m: usize) -> Result<Vec<Vec<u8>>, TableauError> {
    if t.rows().len() > u8::MAX as usize {
        return Err(TableauError::EntryRange);
    }
    let mut rows = vec![Vec::new(); m];
    for (r, row) in t.rows().iter().enumerate() {
        for &e in row {
            rows[e as usize - 1].push(r as u8 + 1);
        }
    }
    Ok(rows)
}

/// The map theta_nu on straight-shape semistandard tableaux.
pub fn theta_nu(t: &Tableau, nu: &Composition) -> Result<Tableau, TableauError> {
    if !t.shape().is_straight() {
        return Err(TableauError::NotStraight);
    }
    if !is_semistandard(t) {
        return Err(TableauError::NotSemistandard);
    }
    let m = nu.len() + 1;
    let mu = t.content_padded(m)?;
    let shape = shape_sh(nu.parts(), &mu, &Partition::empty())?;
    let rows = index_rows(t, m)?;
    let u = Tableau::new(shape, rows)?;
    assert!(
        is_lr_tableau(&u),
        "theta_nu of a semistandard tableau is an LR tableau"
    );
    Ok(u)
}

/// Inverse of theta_nu on its image: row r of the output collects one
/// letter k per occurrence of r in row k of `u`.
pub fn theta_nu_inverse(u: &Tableau) -> Result<Tableau, TableauError> {
    let m = u.shape().rows();
    if m > u8::MAX as usize {
        return Err(TableauError::EntryRange);
    }
    let max_row = u
        .rows()
        .iter()
        .flat_map(|r| r.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); max_row];
    for k in 1..=m {
        for &r in &u.rows()[k - 1] {
            rows[r as usize - 1].push(k as u8);
        }
    }
    let lambda = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).map_err(|_| {
        TableauError::NotInImage("letter multiplicities do not form a partition".into())
    })?;
    let t = Tableau::new(SkewShape::straight(lambda), rows)?;
    if !is_semistandard(&t) {
        return Err(TableauError::NotInImage(
            "decoded filling is not semistandard".into(),
        ));
    }
    Ok(t)
}

/// theta_d: theta_nu at nu = d(t) for straight shapes; for skew shapes the
/// extended exponents (d_0, ..., d_{m-1}) select the extended staircase
/// Sh_d(mu, nu), whose first l(nu) rows have a unique admissible filling.
pub fn theta_d(t: &Tableau) -> Result<Tableau, TableauError> {
    if !is_semistandard(t) {
        return Err(TableauError::NotSemistandard);
    }
    if t.size() == 0 {
        return Ok(Tableau::empty());
    }
    let content = Composition::new(t.content());
    if t.shape().is_straight() {
        let d = descents_exponents(t, &content, false)?;
        let u = theta_nu(t, &d)?;
        assert!(
            is_nonmovable(&u),
            "theta_d of a semistandard tableau is nonmovable"
        );
        Ok(u)
    } else {
        theta_d_extended(t, &content)
    }
}

fn theta_d_extended(t: &Tableau, content: &Composition) -> Result<Tableau, TableauError> {
    let m = content.len();
    let nu = t.shape().inner_partition();
    let p = nu.len();
    let d = descents_exponents(t, content, true)?;
    let shape = shape_sh(d.parts(), content.parts(), &nu)?;
    let staircase = index_rows(t, m)?;

    // The first p rows form the rotated copy of nu; enumerate its
    // semistandard fillings with content nu and keep the ones that complete
    // to a semistandard lattice filling. The completion is unique.
    let block_outer = Partition::new(shape.outer().parts()[..p].to_vec())
        .expect("leading rows of a skew shape are a partition");
    let block_inner = Partition::new(shape.inner()[..p].to_vec())
        .expect("leading inner rows of a skew shape are a partition");
    let block_shape =
        SkewShape::new(block_outer, &block_inner).expect("block rows form a skew shape");
    let mut found = Vec::new();
    for block in enumerate_tableaux(
        &block_shape,
        Some(&nu.padded(p)),
        TableauKind::Semistandard,
        p as u8,
    ) {
        let mut rows = block.rows().to_vec();
        rows.extend(staircase.iter().cloned());
        let u = Tableau::new(shape.clone(), rows)?;
        if is_semistandard(&u) && is_lattice_word(&reading_word(&u)) {
            found.push(u);
        }
    }
    assert_eq!(
        found.len(),
        1,
        "the filling of the rotated block must be unique"
    );
    let u = found.pop().expect("exactly one completion");
    assert!(
        is_nonmovable(&u),
        "theta_d of a skew semistandard tableau is nonmovable"
    );
    Ok(u)
}

/// Inverse of theta_d on nonmovable LR tableaux of straight-case staircase
/// shapes; `lambda` is the content of `u` and the shape of the result.
pub fn theta_d_inverse(u: &Tableau, lambda: &Partition) -> Result<Tableau, TableauError> {
    validate_image(u, lambda)?;
    if u.size() == 0 {
        return Ok(Tableau::empty());
    }
    rebuild(u, 0, u.shape().rows(), lambda, &Partition::empty())
}

/// Inverse of the extended theta_d: the first l(nu) rows of `u` are the
/// rotated block and are dropped; the remaining rows decode to a skew
/// semistandard tableau of shape lambda/nu.
pub fn theta_d_inverse_extended(
    u: &Tableau,
    lambda: &Partition,
    nu: &Partition,
) -> Result<Tableau, TableauError> {
    validate_image(u, lambda)?;
    let p = nu.len();
    let total = u.shape().rows();
    if total <= p {
        return Err(TableauError::NotInImage(
            "fewer rows than the rotated block".into(),
        ));
    }
    let mut block_content = vec![0u32; p];
    for row in &u.rows()[..p] {
        for &e in row {
            if e as usize > p {
                return Err(TableauError::NotInImage(
                    "rotated block holds a letter larger than its height".into(),
                ));
            }
            block_content[e as usize - 1] += 1;
        }
    }
    if block_content != nu.padded(p) {
        return Err(TableauError::NotInImage(
            "rotated block content differs from the inner shape".into(),
        ));
    }
    rebuild(u, p, total - p, lambda, nu)
}

fn validate_image(u: &Tableau, lambda: &Partition) -> Result<(), TableauError> {
    let got = u.content_padded(lambda.len())?;
    if got != lambda.padded(lambda.len()) {
        return Err(TableauError::ContentMismatch {
            got,
            want: lambda.padded(lambda.len()),
        });
    }
    if !is_lr_tableau(u) || !is_nonmovable(u) {
        return Err(TableauError::NotInImage(
            "expected a nonmovable LR tableau".into(),
        ));
    }
    Ok(())
}

fn rebuild(
    u: &Tableau,
    p: usize,
    m: usize,
    lambda: &Partition,
    nu: &Partition,
) -> Result<Tableau, TableauError> {
    if m > u8::MAX as usize {
        return Err(TableauError::EntryRange);
    }
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); lambda.len()];
    for k in 1..=m {
        for &r in &u.rows()[p + k - 1] {
            let r = r as usize;
            if r == 0 || r > rows.len() {
                return Err(TableauError::NotInImage(format!(
                    "row index {r} outside the target shape"
                )));
            }
            rows[r - 1].push(k as u8);
        }
    }
    let shape = SkewShape::new(lambda.clone(), nu)?;
    let t = Tableau::new(shape, rows).map_err(|e| match e {
        TableauError::RowCount { .. } | TableauError::RowNumber { .. } => {
            TableauError::NotInImage("decoded row lengths do not match the target shape".into())
        }
        other => other,
    })?;
    if !is_semistandard(&t) {
        return Err(TableauError::NotInImage(
            "decoded filling is not semistandard".into(),
        ));
    }
    Ok(t)
}
