//! Wreath products `Sym(Γ) wr S_ℓ` in product action on `Γ^ℓ`, and full stabilisers of
//! Cartesian decompositions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cartesian::{is_invariant, validate_decomposition, CartesianDecomposition};
use crate::error::{Error, Result};
use crate::group::{Limits, PermGroup};
use crate::partition::Partition;
use crate::perm::Permutation;

/// `|Γ|` and `ℓ` for `Sym(Γ) wr S_ℓ`; written `wr:<base>^<ell>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathSpec {
    pub base_size: usize,
    pub top_count: usize,
}

impl WreathSpec {
    pub fn new(base_size: usize, top_count: usize) -> Result<Self> {
        if base_size < 2 || top_count < 2 {
            return Err(Error::InvalidInput(format!(
                "wr:{base_size}^{top_count} needs base and exponent at least 2"
            )));
        }
        Ok(WreathSpec {
            base_size,
            top_count,
        })
    }

    /// `base_size^top_count`, or `None` on overflow.
    pub fn degree(&self) -> Option<usize> {
        self.base_size.checked_pow(self.top_count as u32)
    }

    /// `(|Γ|!)^ℓ · ℓ!`, or `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        let f = factorial(self.base_size)?;
        f.checked_pow(self.top_count as u32)?
            .checked_mul(factorial(self.top_count)?)
    }

    fn radices(&self) -> Vec<usize> {
        vec![self.base_size; self.top_count]
    }

    /// Big-endian mixed-radix index of a tuple; coordinate 0 is most significant.
    pub fn encode(&self, tuple: &[usize]) -> Result<usize> {
        if tuple.len() != self.top_count {
            return Err(Error::InvalidInput(format!(
                "expected {} coordinates, got {}",
                self.top_count,
                tuple.len()
            )));
        }
        encode(&self.radices(), tuple)
    }

    pub fn decode(&self, point: usize) -> Result<Vec<usize>> {
        decode(&self.radices(), point)
    }
}

impl fmt::Display for WreathSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "wr:{}^{}", self.base_size, self.top_count)
    }
}

impl FromStr for WreathSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("expected wr:<base>^<ell>, got {s:?}"));
        let body = s.strip_prefix("wr:").ok_or_else(bad)?;
        let (m, l) = body.split_once('^').ok_or_else(bad)?;
        WreathSpec::new(m.parse().map_err(|_| bad())?, l.parse().map_err(|_| bad())?)
    }
}

fn factorial(n: usize) -> Option<u128> {
    (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k))
}

fn encode(radices: &[usize], tuple: &[usize]) -> Result<usize> {
    let size: usize = radices.iter().product();
    let mut point = 0;
    for (&x, &r) in tuple.iter().zip(radices) {
        if x >= r {
            return Err(Error::PointOutOfRange {
                point: x,
                degree: r,
            });
        }
        point = point * r + x;
    }
    debug_assert!(point < size);
    Ok(point)
}

fn decode(radices: &[usize], mut point: usize) -> Result<Vec<usize>> {
    let size: usize = radices.iter().product();
    if point >= size {
        return Err(Error::PointOutOfRange {
            point,
            degree: size,
        });
    }
    let mut tuple = vec![0; radices.len()];
    for (slot, &r) in tuple.iter_mut().zip(radices).rev() {
        *slot = point % r;
        point /= r;
    }
    Ok(tuple)
}

/// The permutation of `∏ radices` points induced by a map on tuples.
fn tuple_perm(radices: &[usize], f: impl Fn(&[usize]) -> Vec<usize>) -> Permutation {
    let size: usize = radices.iter().product();
    let images = (0..size)
        .map(|p| {
            let t = decode(radices, p).expect("in range");
            encode(radices, &f(&t)).expect("in range")
        })
        .collect();
    Permutation::new(images).expect("bijective tuple map")
}

/// `Sym` of one coordinate: a transposition and a full cycle on the values of `coord`.
fn coordinate_generators(radices: &[usize], coord: usize) -> Vec<Permutation> {
    let r = radices[coord];
    let swap = tuple_perm(radices, |t| {
        let mut u = t.to_vec();
        u[coord] = match t[coord] {
            0 => 1,
            1 => 0,
            x => x,
        };
        u
    });
    let cycle = tuple_perm(radices, |t| {
        let mut u = t.to_vec();
        u[coord] = (t[coord] + 1) % r;
        u
    });
    if r == 2 {
        vec![swap]
    } else {
        vec![swap, cycle]
    }
}

/// Moves the value at coordinate `coords[k]` to `coords[sigma[k]]`.
fn top_generator(radices: &[usize], coords: &[usize], sigma: &[usize]) -> Permutation {
    tuple_perm(radices, |t| {
        let mut u = t.to_vec();
        for (k, &c) in coords.iter().enumerate() {
            u[coords[sigma[k]]] = t[c];
        }
        u
    })
}

/// `Sym(r) wr S_k` on the coordinates `coords`, all of radix `r`.
fn wreath_generators(radices: &[usize], coords: &[usize]) -> Vec<Permutation> {
    let mut gens = coordinate_generators(radices, coords[0]);
    let k = coords.len();
    if k >= 2 {
        let mut swap: Vec<usize> = (0..k).collect();
        swap.swap(0, 1);
        gens.push(top_generator(radices, coords, &swap));
        if k >= 3 {
            let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            gens.push(top_generator(radices, coords, &cycle));
        }
    }
    gens
}

/// The partitions of `∏ radices` points into the fibres of each coordinate.
fn coordinate_partitions(radices: &[usize]) -> Result<CartesianDecomposition> {
    let size: usize = radices.iter().product();
    let parts = (0..radices.len())
        .map(|i| {
            let labels: Vec<usize> = (0..size)
                .map(|p| decode(radices, p).expect("in range")[i])
                .collect();
            Partition::from_labels(&labels)
        })
        .collect();
    CartesianDecomposition::new(parts)
}

fn check_degree(size: Option<usize>, limits: &Limits) -> Result<usize> {
    match size {
        Some(n) if n <= limits.max_points => Ok(n),
        _ => Err(Error::BudgetExceeded(format!(
            "product action exceeds the {} point cap",
            limits.max_points
        ))),
    }
}

/// `W = Sym(Γ) wr S_ℓ` on `Γ^ℓ` with its natural decomposition into coordinate fibres.
pub fn product_action_wreath(
    spec: &WreathSpec,
    limits: &Limits,
) -> Result<(PermGroup, CartesianDecomposition)> {
    let n = check_degree(spec.degree(), limits)?;
    let order = spec
        .order()
        .ok_or_else(|| Error::BudgetExceeded("group order overflows".into()))?;
    let radices = spec.radices();
    let coords: Vec<usize> = (0..spec.top_count).collect();
    let w = PermGroup::with_known_order(n, wreath_generators(&radices, &coords), &[], order);
    if w.order() != order {
        return Err(Error::OrderMismatch {
            what: spec.to_string(),
            expected: order,
            computed: w.order(),
        });
    }
    let e = coordinate_partitions(&radices)?;
    debug_assert!(w.is_transitive());
    debug_assert!(is_invariant(&w, &e)?.invariant);
    Ok((w, e))
}

/// The base group `Sym(Γ)^ℓ`, fixing every coordinate partition.
pub fn product_action_base_group(spec: &WreathSpec, limits: &Limits) -> Result<PermGroup> {
    let n = check_degree(spec.degree(), limits)?;
    let radices = spec.radices();
    let gens = (0..spec.top_count)
        .flat_map(|i| coordinate_generators(&radices, i))
        .collect();
    PermGroup::new(n, gens)
}

/// How the stabiliser of a decomposition is assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StabiliserShape {
    /// All partitions have the same number of blocks: `Sym(Γ) wr S_ℓ`.
    Wreath,
    /// All block counts differ: `Sym(n₁) × ⋯ × Sym(n_ℓ)`.
    DirectProduct,
    /// Some counts repeat: a direct product of wreath products, one per repeated count.
    Mixed,
}

#[derive(Clone, Debug)]
pub struct FullStabiliser {
    pub group: PermGroup,
    pub shape: StabiliserShape,
    /// The point relabelling taking the coordinate decomposition to the given one.
    pub relabelling: Permutation,
}

/// The stabiliser in `Sym(Ω)` of any valid decomposition, with its shape.
pub fn full_stabiliser_with_shape(
    e: &CartesianDecomposition,
    limits: &Limits,
) -> Result<FullStabiliser> {
    let report = validate_decomposition(e, limits)?;
    if !report.valid {
        return Err(Error::InvalidDecomposition(
            "blocks do not meet in single points".into(),
        ));
    }
    let n = check_degree(Some(e.degree()), limits)?;
    let radices = e.block_counts();
    let labels: Vec<Vec<usize>> = e.partitions().iter().map(Partition::labels).collect();
    // point x ↦ the tuple of its block indices
    let to_tuple = (0..n)
        .map(|x| encode(&radices, &labels.iter().map(|l| l[x]).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let relabelling = Permutation::new(to_tuple)?;

    let mut classes: Vec<(usize, Vec<usize>)> = Vec::new();
    for (i, &r) in radices.iter().enumerate() {
        match classes.iter_mut().find(|(c, _)| *c == r) {
            Some((_, coords)) => coords.push(i),
            None => classes.push((r, vec![i])),
        }
    }
    let mut order: u128 = 1;
    let mut gens = Vec::new();
    for (r, coords) in &classes {
        let k = coords.len();
        order = factorial(*r)
            .and_then(|f| f.checked_pow(k as u32))
            .and_then(|x| x.checked_mul(factorial(k)?))
            .and_then(|x| x.checked_mul(order))
            .ok_or_else(|| Error::BudgetExceeded("group order overflows".into()))?;
        if *r >= 2 {
            gens.extend(wreath_generators(&radices, coords));
        }
    }
    let natural = PermGroup::with_known_order(n, gens, &[], order);
    let group = natural.conjugate(&relabelling.inverse());
    let shape = if classes.len() == 1 {
        StabiliserShape::Wreath
    } else if classes.iter().all(|(_, c)| c.len() == 1) {
        StabiliserShape::DirectProduct
    } else {
        StabiliserShape::Mixed
    };
    if group.order() != order || !is_invariant(&group, e)?.invariant {
        return Err(Error::OrderMismatch {
            what: "full stabiliser".into(),
            expected: order,
            computed: group.order(),
        });
    }
    Ok(FullStabiliser {
        group,
        shape,
        relabelling,
    })
}

/// The stabiliser in `Sym(Ω)` of a homogeneous decomposition, a conjugate of
/// `Sym(Γ) wr S_ℓ` in product action.
pub fn full_stabiliser(e: &CartesianDecomposition, limits: &Limits) -> Result<PermGroup> {
    if !e.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    Ok(full_stabiliser_with_shape(e, limits)?.group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_strings() {
        let s: WreathSpec = "wr:3^2".parse().unwrap();
        assert_eq!(s, WreathSpec::new(3, 2).unwrap());
        assert_eq!(s.to_string(), "wr:3^2");
        assert!("wr:1^2".parse::<WreathSpec>().is_err());
        assert!("3^2".parse::<WreathSpec>().is_err());
    }

    #[test]
    fn encoding() {
        let s = WreathSpec::new(3, 2).unwrap();
        assert_eq!(s.encode(&[0, 0]).unwrap(), 0);
        assert_eq!(s.encode(&[1, 2]).unwrap(), 5);
        assert_eq!(s.encode(&[2, 0]).unwrap(), 6);
        assert_eq!(s.decode(5).unwrap(), vec![1, 2]);
        assert!(matches!(
            s.encode(&[3, 0]),
            Err(Error::PointOutOfRange { .. })
        ));
        assert!(matches!(s.decode(9), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn small_wreath_orders() {
        let lim = Limits::default();
        for (m, l, order) in [(3, 2, 72u128), (2, 2, 8), (2, 3, 48), (6, 2, 1_036_800)] {
            let (w, e) = product_action_wreath(&WreathSpec::new(m, l).unwrap(), &lim).unwrap();
            assert_eq!(w.order(), order);
            assert!(w.is_transitive());
            let r = is_invariant(&w, &e).unwrap();
            assert!(r.invariant);
            assert!(validate_decomposition(&e, &lim).unwrap().homogeneous);
        }
    }

    #[test]
    fn top_swap_exchanges_the_fibres() {
        let lim = Limits::default();
        let (w, e) = product_action_wreath(&WreathSpec::new(3, 2).unwrap(), &lim).unwrap();
        let r = is_invariant(&w, &e).unwrap();
        assert!(r.induced.contains(&Some(vec![1, 0])));
        let base = product_action_base_group(&WreathSpec::new(3, 2).unwrap(), &lim).unwrap();
        assert_eq!(base.order(), 36);
        assert!(
            r.invariant
                && is_invariant(&base, &e)
                    .unwrap()
                    .induced
                    .iter()
                    .all(|i| i == &Some(vec![0, 1]))
        );
    }

    #[test]
    fn inhomogeneous_stabiliser_is_flagged() {
        let lim = Limits::default();
        let e = CartesianDecomposition::new(vec![
            Partition::from_labels(&[0, 0, 0, 1, 1, 1]),
            Partition::from_labels(&[0, 1, 2, 0, 1, 2]),
        ])
        .unwrap();
        assert!(matches!(
            full_stabiliser(&e, &lim),
            Err(Error::NotHomogeneous)
        ));
        let s = full_stabiliser_with_shape(&e, &lim).unwrap();
        assert_eq!(s.shape, StabiliserShape::DirectProduct);
        assert_eq!(s.group.order(), 12);
    }
}
