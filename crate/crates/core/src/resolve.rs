//! Embedded resolution of a plane curve singularity by iterated point
//! blowups.
//!
//! The engine maintains a worklist of *sites*: points (moved to the origin
//! of local coordinates) where the union of the strict transform and the
//! exceptional divisors is not yet a simple normal crossing. Two invariants
//! make the bookkeeping finite and purely polynomial:
//!
//! * at every site, the exceptional divisors through the point are
//!   coordinate axes (`u = 0` and/or `v = 0`), so a blowup is one of the two
//!   monomial substitutions `(u, v) -> (u, u*v)` or `(u, v) -> (u*v, v)`;
//! * the points of a new divisor that still need attention are the origin
//!   of the second chart plus the finite roots of the restriction of the
//!   strict transform to the first chart — a univariate polynomial that is
//!   never identically zero for a reduced curve.
//!
//! Each blowup produces a divisor decorated with the pullback order `N`,
//! the log discrepancy `nu`, and the arc multiplicity `m`; these follow the
//! usual additive rules along the divisors through the center. A site is
//! finished when the strict transform is smooth there, meets exactly one
//! exceptional divisor, and does so transversally; such a meeting is
//! tallied on the divisor.
//!
//! Centers are required to be rational points: if the strict transform
//! crosses a divisor in a Galois orbit of irrational points, resolution
//! stops with [`Error::IrrationalCenter`]. Extending the engine to carry
//! orbits of conjugate points (weighting classes by the orbit degree) is
//! the natural next step, but no input in the test corpus needs it.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;

use crate::curve::CurvePoly;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qpoly::QPoly;

/// Safety cap on the number of blowups; genuine resolutions of reduced
/// curves terminate far below it.
const BLOWUP_CAP: u32 = 4096;

/// One exceptional divisor with its decorations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Divisor {
    pub id: u32,
    /// Order of the pullback of the curve along this divisor.
    pub n: u64,
    /// Log discrepancy: order of the pullback of `dx ∧ dy` plus one.
    pub nu: u64,
    /// Arc multiplicity: the order of an arc crossing the divisor
    /// transversally, away from the other divisors.
    pub m: u64,
    /// Ids of the divisors this one intersects.
    pub neighbors: BTreeSet<u32>,
    /// Number of points where the strict transform of the curve meets this
    /// divisor (transversally, by the time resolution ends).
    pub strict_meets: u64,
    /// Explicit class of the divisor minus all other components, for data
    /// that does not come from the plane engine; derived combinatorially
    /// when absent and the ambient dimension is 2.
    pub class_open: Option<LaurentPoly>,
    /// Explicit class of the (divisor ∩ strict transform) locus.
    pub class_strict: Option<LaurentPoly>,
}

/// The outcome of a resolution: decorated divisors plus the combinatorics
/// needed by the zeta and Hilbert computations.
#[derive(Debug, Clone)]
pub struct ResolutionData {
    pub ambient_dim: u32,
    /// Multiplicity of the curve (or hypersurface) at the origin, when
    /// known; it fixes the base case of the Hilbert recursion.
    pub origin_mult: Option<u64>,
    /// Explicit base case override for the Hilbert recursion.
    pub h2: Option<LaurentPoly>,
    divisors: BTreeMap<u32, Divisor>,
}

impl ResolutionData {
    /// Assemble from parts, checking that neighbor references are known and
    /// symmetric.
    pub fn from_divisors(
        ambient_dim: u32,
        origin_mult: Option<u64>,
        h2: Option<LaurentPoly>,
        divisors: Vec<Divisor>,
    ) -> Result<Self> {
        let map: BTreeMap<u32, Divisor> = divisors.into_iter().map(|d| (d.id, d)).collect();
        for d in map.values() {
            for &nb in &d.neighbors {
                let other = map.get(&nb).ok_or(Error::UnknownDivisor(nb))?;
                if !other.neighbors.contains(&d.id) {
                    return Err(Error::UnknownDivisor(d.id));
                }
            }
        }
        Ok(ResolutionData {
            ambient_dim,
            origin_mult,
            h2,
            divisors: map,
        })
    }

    pub fn divisor(&self, id: u32) -> Result<&Divisor> {
        self.divisors.get(&id).ok_or(Error::UnknownDivisor(id))
    }

    pub fn divisors(&self) -> impl Iterator<Item = &Divisor> + '_ {
        self.divisors.values()
    }

    pub fn divisor_count(&self) -> usize {
        self.divisors.len()
    }

    /// All intersections, as normalized pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = BTreeSet::new();
        for d in self.divisors.values() {
            for &nb in &d.neighbors {
                out.insert((d.id.min(nb), d.id.max(nb)));
            }
        }
        out.into_iter().collect()
    }

    /// Ids of the divisors with arc multiplicity 1 — the ones visible to
    /// contact-order counting.
    pub fn order_one_ids(&self) -> Vec<u32> {
        self.divisors
            .values()
            .filter(|d| d.m == 1)
            .map(|d| d.id)
            .collect()
    }

    /// Class of (this divisor) minus (all other components and the strict
    /// transform). In ambient dimension 2 the divisor is a projective line,
    /// so the class is `L + 1` minus one point per removed intersection.
    pub fn class_open(&self, id: u32) -> Result<LaurentPoly> {
        let d = self.divisor(id)?;
        if let Some(c) = &d.class_open {
            return Ok(c.clone());
        }
        if self.ambient_dim == 2 {
            let removed = d.neighbors.len() as i64 + d.strict_meets as i64;
            let mut c = LaurentPoly::l();
            c = &c + &LaurentPoly::from_int(1 - removed);
            Ok(c)
        } else {
            Err(Error::MissingClassData {
                divisor: id,
                ambient_dim: self.ambient_dim,
            })
        }
    }

    /// Class of (this divisor) ∩ (strict transform), away from the other
    /// divisors. In ambient dimension 2 this is a finite set of points.
    pub fn class_strict(&self, id: u32) -> Result<LaurentPoly> {
        let d = self.divisor(id)?;
        if let Some(c) = &d.class_strict {
            return Ok(c.clone());
        }
        if self.ambient_dim == 2 {
            Ok(LaurentPoly::from_int(d.strict_meets as i64))
        } else {
            Err(Error::MissingClassData {
                divisor: id,
                ambient_dim: self.ambient_dim,
            })
        }
    }

    /// True when some branch of the curve through the origin is smooth: the
    /// strict transform then crosses a divisor of arc multiplicity 1, and
    /// jets of every order can follow that branch.
    pub fn has_smooth_branch(&self) -> bool {
        self.divisors
            .values()
            .any(|d| d.m == 1 && d.strict_meets > 0)
    }
}

/// See [`ResolutionData::has_smooth_branch`].
pub fn has_smooth_branch(res: &ResolutionData) -> bool {
    res.has_smooth_branch()
}

/// One blowup, for replaying a resolution step by step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupRecord {
    pub new_id: u32,
    /// Divisors the center lay on (empty for the first blowup).
    pub center_on: Vec<u32>,
    /// Multiplicity of the strict transform at the center.
    pub center_mult: u32,
}

/// A point where the strict transform came to meet a divisor transversally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalRecord {
    pub divisor: u32,
}

/// Replayable account of a resolution run.
#[derive(Debug, Clone, Default)]
pub struct ResolutionLog {
    pub blowups: Vec<BlowupRecord>,
    pub terminals: Vec<TerminalRecord>,
}

/// A point awaiting a blowup, moved to the origin of local coordinates.
struct Site {
    /// Local equation of the strict transform.
    g: QPoly,
    /// Divisor along `{u = 0}`, if any.
    axis_u: Option<u32>,
    /// Divisor along `{v = 0}`, if any.
    axis_v: Option<u32>,
}

/// Resolve the curve at the origin.
pub fn resolve(curve: &CurvePoly) -> Result<ResolutionData> {
    resolve_with_log(curve).map(|(data, _)| data)
}

/// Resolve the curve at the origin, also returning the blowup log.
pub fn resolve_with_log(curve: &CurvePoly) -> Result<(ResolutionData, ResolutionLog)> {
    let mut divisors: BTreeMap<u32, Divisor> = BTreeMap::new();
    let mut log = ResolutionLog::default();
    let mut queue: VecDeque<Site> = VecDeque::new();
    queue.push_back(Site {
        g: curve.poly().clone(),
        axis_u: None,
        axis_v: None,
    });
    let mut next_id = 1u32;

    while let Some(site) = queue.pop_front() {
        if next_id > BLOWUP_CAP {
            return Err(Error::BlowupCapExceeded);
        }
        let d = site
            .g
            .min_total_degree()
            .expect("site equations are nonzero");
        debug_assert!(d >= 1, "sites lie on the strict transform");
        let through: Vec<u32> = [site.axis_u, site.axis_v].into_iter().flatten().collect();

        // Decorations are additive along the divisors through the center.
        let mut n = d as u64;
        let mut nu = 1u64;
        let mut m = 0u64;
        for &t in &through {
            let dv = &divisors[&t];
            n += dv.n;
            nu += dv.nu;
            m += dv.m;
        }
        if through.is_empty() {
            m = 1;
        }

        let id = next_id;
        next_id += 1;

        // Blowing up the crossing of two divisors separates them; the new
        // divisor meets everything the center lay on.
        if let [a, b] = through[..] {
            divisors.get_mut(&a).unwrap().neighbors.remove(&b);
            divisors.get_mut(&b).unwrap().neighbors.remove(&a);
        }
        let mut neighbors = BTreeSet::new();
        for &t in &through {
            divisors.get_mut(&t).unwrap().neighbors.insert(id);
            neighbors.insert(t);
        }
        divisors.insert(
            id,
            Divisor {
                id,
                n,
                nu,
                m,
                neighbors,
                strict_meets: 0,
                class_open: None,
                class_strict: None,
            },
        );
        log.blowups.push(BlowupRecord {
            new_id: id,
            center_on: through.clone(),
            center_mult: d,
        });

        // Chart (u, v) -> (u, u*v): the new divisor is {u = 0}; its finite
        // points are parametrized by v. The strict transform meets them at
        // the roots of the restriction, which is never identically zero for
        // a reduced curve.
        let g1 = site.g.blowup_chart_x(d);
        let r1 = g1.restrict_x_zero();
        debug_assert!(!r1.is_zero());
        let mut roots = r1.rational_roots().ok_or_else(|| Error::IrrationalCenter {
            restriction: r1.render("t"),
        })?;
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        for (t0, tangency) in roots {
            let on_old_axis = t0.is_zero() && site.axis_v.is_some();
            let gp = g1.translate_y(&t0);
            let mult = gp.min_total_degree().expect("nonzero strict transform");
            debug_assert!(mult >= 1);
            if mult == 1 && tangency == 1 && !on_old_axis {
                divisors.get_mut(&id).unwrap().strict_meets += 1;
                log.terminals.push(TerminalRecord { divisor: id });
            } else {
                let axis_v = if t0.is_zero() { site.axis_v } else { None };
                queue.push_back(Site {
                    g: gp,
                    axis_u: Some(id),
                    axis_v,
                });
            }
        }

        // Chart (u, v) -> (u*v, v): only its origin is new — the point of
        // the new divisor at infinity of the first chart, where the strict
        // transform of an old {u = 0} axis also lands.
        let g2 = site.g.blowup_chart_y(d);
        if g2.constant_term().is_zero() {
            if site.axis_u.is_some() {
                // Curve through the crossing of two divisors: blow up.
                queue.push_back(Site {
                    g: g2,
                    axis_u: site.axis_u,
                    axis_v: Some(id),
                });
            } else {
                let mult = g2.min_total_degree().expect("nonzero strict transform");
                let tangency = g2
                    .restrict_y_zero()
                    .order()
                    .expect("restriction to the new divisor is nonzero");
                if mult == 1 && tangency == 1 {
                    divisors.get_mut(&id).unwrap().strict_meets += 1;
                    log.terminals.push(TerminalRecord { divisor: id });
                } else {
                    queue.push_back(Site {
                        g: g2,
                        axis_u: None,
                        axis_v: Some(id),
                    });
                }
            }
        }
    }

    let data = ResolutionData {
        ambient_dim: 2,
        origin_mult: Some(curve.origin_mult() as u64),
        h2: None,
        divisors,
    };
    Ok((data, log))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_curve;

    fn resolved(src: &str) -> ResolutionData {
        resolve(&parse_curve(src).unwrap()).unwrap()
    }

    fn decorations(res: &ResolutionData) -> Vec<(u32, u64, u64, u64, u64)> {
        res.divisors()
            .map(|d| (d.id, d.n, d.nu, d.m, d.strict_meets))
            .collect()
    }

    #[test]
    fn smooth_line_needs_one_blowup() {
        let res = resolved("y");
        assert_eq!(decorations(&res), vec![(1, 1, 1, 1, 1)]);
        assert!(res.edges().is_empty());
        assert!(res.has_smooth_branch());
    }

    #[test]
    fn smooth_parabola_matches_the_line() {
        let res = resolved("y - x^2");
        assert_eq!(decorations(&res), vec![(1, 1, 1, 1, 1)]);
    }

    #[test]
    fn node_separates_in_one_blowup() {
        for src in ["x*y", "y^2 - x^2 - x^3"] {
            let res = resolved(src);
            assert_eq!(decorations(&res), vec![(1, 2, 1, 1, 2)], "curve {src}");
            assert!(res.has_smooth_branch());
        }
    }

    #[test]
    fn cusp_resolution() {
        let res = resolved("y^2 - x^3");
        assert_eq!(
            decorations(&res),
            vec![(1, 2, 1, 1, 0), (2, 3, 2, 1, 0), (3, 6, 4, 2, 1)]
        );
        assert_eq!(res.edges(), vec![(1, 3), (2, 3)]);
        assert!(!res.has_smooth_branch());
        assert_eq!(res.order_one_ids(), vec![1, 2]);
    }

    #[test]
    fn cusp_blowup_log() {
        let (_, log) = resolve_with_log(&parse_curve("y^2 - x^3").unwrap()).unwrap();
        let steps: Vec<(u32, Vec<u32>, u32)> = log
            .blowups
            .iter()
            .map(|b| (b.new_id, b.center_on.clone(), b.center_mult))
            .collect();
        assert_eq!(
            steps,
            vec![(1, vec![], 2), (2, vec![1], 1), (3, vec![1, 2], 1)]
        );
        assert_eq!(log.terminals.len(), 1);
        assert_eq!(log.terminals[0].divisor, 3);
    }

    #[test]
    fn higher_cusp_resolution() {
        let res = resolved("x^2 - y^5");
        assert_eq!(
            decorations(&res),
            vec![
                (1, 2, 1, 1, 0),
                (2, 4, 2, 1, 0),
                (3, 5, 3, 1, 0),
                (4, 10, 6, 2, 1)
            ]
        );
        assert_eq!(res.edges(), vec![(1, 2), (2, 4), (3, 4)]);
        assert!(!res.has_smooth_branch());
    }

    #[test]
    fn e6_singularity_resolution() {
        let res = resolved("y^3 - x^4");
        assert_eq!(
            decorations(&res),
            vec![
                (1, 3, 1, 1, 0),
                (2, 4, 2, 1, 0),
                (3, 8, 4, 2, 0),
                (4, 12, 6, 3, 1)
            ]
        );
        assert_eq!(res.edges(), vec![(1, 4), (2, 3), (3, 4)]);
        assert!(!res.has_smooth_branch());
    }

    #[test]
    fn cusp_with_a_line_keeps_a_smooth_branch() {
        let res = resolved("x*y^2 - x^4");
        assert_eq!(
            decorations(&res),
            vec![(1, 3, 1, 1, 1), (2, 4, 2, 1, 0), (3, 8, 4, 2, 1)]
        );
        assert_eq!(res.edges(), vec![(1, 3), (2, 3)]);
        assert!(res.has_smooth_branch());
    }

    #[test]
    fn tacnode_resolution() {
        let res = resolved("y^2 - x^4");
        assert_eq!(decorations(&res), vec![(1, 2, 1, 1, 0), (2, 4, 2, 1, 2)]);
        assert_eq!(res.edges(), vec![(1, 2)]);
        assert!(res.has_smooth_branch());
    }

    #[test]
    fn two_tangent_branches_with_distinct_tangents() {
        // y(y - x^2): two smooth branches meeting the second divisor.
        let res = resolved("y^2 - x^2*y");
        assert_eq!(decorations(&res), vec![(1, 2, 1, 1, 0), (2, 4, 2, 1, 2)]);
    }

    #[test]
    fn derived_classes_in_the_plane() {
        let res = resolved("y^2 - x^3");
        let l = LaurentPoly::l();
        assert_eq!(res.class_open(1).unwrap(), l.clone());
        assert_eq!(res.class_open(2).unwrap(), l.clone());
        assert_eq!(
            res.class_open(3).unwrap(),
            &l - &LaurentPoly::from_int(2)
        );
        assert_eq!(res.class_strict(3).unwrap(), LaurentPoly::from_int(1));
        assert_eq!(res.class_strict(1).unwrap(), LaurentPoly::zero());
        assert!(matches!(
            res.class_open(9).unwrap_err(),
            Error::UnknownDivisor(9)
        ));
    }

    #[test]
    fn exceptional_locus_class_is_additive() {
        // Sum of the open pieces, plus one point per crossing and per
        // strict meeting, equals (number of divisors) * (L + 1) minus one
        // point per crossing (each crossing lies on two divisors).
        for src in ["y^2 - x^3", "x^2 - y^5", "y^3 - x^4", "x*y^2 - x^4"] {
            let res = resolved(src);
            let mut total = LaurentPoly::zero();
            let mut strict_points = 0i64;
            for d in res.divisors() {
                total = &total + &res.class_open(d.id).unwrap();
                strict_points += d.strict_meets as i64;
            }
            let edges = res.edges().len() as i64;
            let k = res.divisor_count() as i64;
            let lhs = &total + &LaurentPoly::from_int(edges + strict_points);
            let p1 = &LaurentPoly::l() + &LaurentPoly::from_int(1);
            let rhs = &p1.scale(0, &num_bigint::BigInt::from(k)) - &LaurentPoly::from_int(edges);
            assert_eq!(lhs, rhs, "curve {src}");
        }
    }

    #[test]
    fn irrational_crossing_points_are_reported() {
        // Initial form y^2 - 2x^2 has irrational tangent directions.
        let err = resolve(&parse_curve("y^2 - 2*x^2 - x^3").unwrap()).unwrap_err();
        assert_eq!(err.code(), "IrrationalCenter");
    }

    #[test]
    fn rational_coefficient_curves_resolve() {
        // Same shape as the cusp after scaling.
        let res = resolved("1/4*y^2 - x^3");
        assert_eq!(
            decorations(&res),
            vec![(1, 2, 1, 1, 0), (2, 3, 2, 1, 0), (3, 6, 4, 2, 1)]
        );
    }

    #[test]
    fn neighbor_validation_in_from_divisors() {
        let d1 = Divisor {
            id: 1,
            n: 1,
            nu: 1,
            m: 1,
            neighbors: [2].into_iter().collect(),
            strict_meets: 0,
            class_open: None,
            class_strict: None,
        };
        let err = ResolutionData::from_divisors(2, Some(1), None, vec![d1]).unwrap_err();
        assert_eq!(err.code(), "UnknownDivisor");
    }
}
