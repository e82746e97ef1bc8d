//! Temporal orderings, orientations, and the 8 directed triangle types.
//!
//! A static triangle `<u, v, w>` (ranked `u < v < w`) has three vertex
//! pairs, written by role: `UV = {u,v}`, `UW = {u,w}`, `VW = {v,w}`. A
//! temporal ordering assigns the roles to time positions 1..3, an
//! orientation assigns each role a direction, and together they determine
//! which of the eight directed temporal triangle types every matching
//! edge triple belongs to.

use crate::VertexId;
use std::sync::OnceLock;

/// A vertex pair of a source triangle, identified by role.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairRole {
    UV,
    UW,
    VW,
}

/// One of the six assignments of pair roles to time positions 1, 2, 3.
///
/// Indexed 1..=6. The `{v,w}` pair sits at position 3 for orderings 1-2,
/// position 2 for 3-4, and position 1 for 5-6; the odd ordering of each
/// block places `UV` before `UW`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TemporalOrdering(u8);

const ORDERING_ROLES: [[PairRole; 3]; 6] = [
    [PairRole::UV, PairRole::UW, PairRole::VW],
    [PairRole::UW, PairRole::UV, PairRole::VW],
    [PairRole::UV, PairRole::VW, PairRole::UW],
    [PairRole::UW, PairRole::VW, PairRole::UV],
    [PairRole::VW, PairRole::UV, PairRole::UW],
    [PairRole::VW, PairRole::UW, PairRole::UV],
];

impl TemporalOrdering {
    pub const ALL: [TemporalOrdering; 6] = [
        TemporalOrdering(1),
        TemporalOrdering(2),
        TemporalOrdering(3),
        TemporalOrdering(4),
        TemporalOrdering(5),
        TemporalOrdering(6),
    ];

    pub fn from_index(index: u8) -> Option<TemporalOrdering> {
        (1..=6).contains(&index).then_some(TemporalOrdering(index))
    }

    /// 1-based index of this ordering.
    pub fn index(self) -> u8 {
        self.0
    }

    /// The pair role occupying time position `position` (1..=3).
    pub fn role_at(self, position: u8) -> PairRole {
        assert!((1..=3).contains(&position));
        ORDERING_ROLES[(self.0 - 1) as usize][(position - 1) as usize]
    }

    /// The time position (1..=3) of `role`.
    pub fn position_of(self, role: PairRole) -> u8 {
        let roles = ORDERING_ROLES[(self.0 - 1) as usize];
        roles.iter().position(|&r| r == role).unwrap() as u8 + 1
    }

    /// The time position of the `{v,w}` pair, which selects the counting
    /// kernel.
    pub fn vw_position(self) -> u8 {
        self.position_of(PairRole::VW)
    }
}

/// One of the eight direction assignments for the three pairs.
///
/// Encoded as a 3-bit code: bit 0 for `UV`, bit 1 for `UW`, bit 2 for
/// `VW`; a zero bit directs the pair from its lower-ranked to its
/// higher-ranked endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Orientation(u8);

impl Orientation {
    pub const ALL: [Orientation; 8] = [
        Orientation(0),
        Orientation(1),
        Orientation(2),
        Orientation(3),
        Orientation(4),
        Orientation(5),
        Orientation(6),
        Orientation(7),
    ];

    pub fn from_code(code: u8) -> Option<Orientation> {
        (code < 8).then_some(Orientation(code))
    }

    pub fn code(self) -> u8 {
        self.0
    }

    /// Whether `role` is directed from its higher-ranked endpoint down.
    pub fn reversed(self, role: PairRole) -> bool {
        let bit = match role {
            PairRole::UV => 0,
            PairRole::UW => 1,
            PairRole::VW => 2,
        };
        (self.0 >> bit) & 1 == 1
    }

    /// True when the three directions form a directed 3-cycle.
    pub fn is_cyclic(self) -> bool {
        // u->v, v->w, w->u is code 0b010; the reverse cycle is 0b101
        self.0 == 0b010 || self.0 == 0b101
    }
}

/// Canonical code of a directed temporal triangle type.
///
/// With the triple's edges in time order, let `e1 = (a -> b)` and let `c`
/// be the remaining vertex. Then: bit 2 is set when `e2` lies on the pair
/// `{a, c}`; bit 1 when `e2` points away from `c`; bit 0 when `e3` points
/// away from `c`. Exactly the codes `0b001` and `0b110` are directed
/// 3-cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeCode(u8);

const TYPE_LABELS: [&str; 8] = [
    "t000_acyclic",
    "t001_cyclic",
    "t010_acyclic",
    "t011_acyclic",
    "t100_acyclic",
    "t101_acyclic",
    "t110_cyclic",
    "t111_acyclic",
];

impl TypeCode {
    pub const ALL: [TypeCode; 8] = [
        TypeCode(0),
        TypeCode(1),
        TypeCode(2),
        TypeCode(3),
        TypeCode(4),
        TypeCode(5),
        TypeCode(6),
        TypeCode(7),
    ];

    pub fn from_code(code: u8) -> Option<TypeCode> {
        (code < 8).then_some(TypeCode(code))
    }

    pub fn code(self) -> u8 {
        self.0
    }

    pub fn is_cyclic(self) -> bool {
        self.0 == 0b001 || self.0 == 0b110
    }

    /// Stable report key, e.g. `t010_acyclic`.
    pub fn label(self) -> &'static str {
        TYPE_LABELS[self.0 as usize]
    }

    /// Classifies three directed edges given in time order.
    ///
    /// The edges must lie on the three distinct pairs of one triangle;
    /// this is the single encoder shared by the fast counter and the
    /// brute-force oracle.
    pub fn from_time_ordered_edges(
        e1: (VertexId, VertexId),
        e2: (VertexId, VertexId),
        e3: (VertexId, VertexId),
    ) -> TypeCode {
        let (a, b) = e1;
        let c = if e2.0 != a && e2.0 != b { e2.0 } else { e2.1 };
        debug_assert!(c != a && c != b);
        debug_assert!(e3.0 == c || e3.1 == c);
        let e2_on_ac = e2.0 == a || e2.1 == a;
        let e2_away_from_c = e2.0 == c;
        let e3_away_from_c = e3.0 == c;
        TypeCode((e2_on_ac as u8) << 2 | (e2_away_from_c as u8) << 1 | e3_away_from_c as u8)
    }
}

/// The temporal triangle type produced by an ordering/orientation pair.
///
/// The 6x8 table is derived once on first use from the canonical encoder
/// applied to an abstract triangle.
pub fn classify(ordering: TemporalOrdering, orientation: Orientation) -> TypeCode {
    static PSI: OnceLock<[[TypeCode; 8]; 6]> = OnceLock::new();
    let table = PSI.get_or_init(build_psi_table);
    table[(ordering.index() - 1) as usize][orientation.code() as usize]
}

fn build_psi_table() -> [[TypeCode; 8]; 6] {
    let mut table = [[TypeCode(0); 8]; 6];
    for ordering in TemporalOrdering::ALL {
        for orientation in Orientation::ALL {
            // abstract triangle on u=0, v=1, w=2
            let edge_of = |role: PairRole| -> (VertexId, VertexId) {
                let (lo, hi) = match role {
                    PairRole::UV => (0, 1),
                    PairRole::UW => (0, 2),
                    PairRole::VW => (1, 2),
                };
                if orientation.reversed(role) {
                    (hi, lo)
                } else {
                    (lo, hi)
                }
            };
            let code = TypeCode::from_time_ordered_edges(
                edge_of(ordering.role_at(1)),
                edge_of(ordering.role_at(2)),
                edge_of(ordering.role_at(3)),
            );
            table[(ordering.index() - 1) as usize][orientation.code() as usize] = code;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_conventions() {
        for ordering in TemporalOrdering::ALL {
            let expected_vw = match ordering.index() {
                1 | 2 => 3,
                3 | 4 => 2,
                _ => 1,
            };
            assert_eq!(ordering.vw_position(), expected_vw);
            // odd index puts UV before UW
            let uv = ordering.position_of(PairRole::UV);
            let uw = ordering.position_of(PairRole::UW);
            if ordering.index() % 2 == 1 {
                assert!(uv < uw);
            } else {
                assert!(uw < uv);
            }
        }
    }

    #[test]
    fn cycle_example_classifies_as_cyclic() {
        // pi3 maps 1->UV, 2->VW, 3->UW; directions u->v, v->w, w->u
        let pi3 = TemporalOrdering::from_index(3).unwrap();
        assert_eq!(pi3.role_at(1), PairRole::UV);
        assert_eq!(pi3.role_at(2), PairRole::VW);
        assert_eq!(pi3.role_at(3), PairRole::UW);
        let rho = Orientation::from_code(0b010).unwrap();
        assert!(rho.is_cyclic());
        let code = classify(pi3, rho);
        assert_eq!(code.code(), 0b001);
        assert!(code.is_cyclic());
    }

    #[test]
    fn acyclic_example_classifies_per_encoding() {
        // same pi3; directions u->v, w->v, u->w give code 0b010
        let pi3 = TemporalOrdering::from_index(3).unwrap();
        let rho = Orientation::from_code(0b100).unwrap();
        let code = classify(pi3, rho);
        assert_eq!(code.code(), 0b010);
        assert!(!code.is_cyclic());
    }

    #[test]
    fn encoder_matches_hand_derivation() {
        // e1 = 0->1, e2 = 1->2, e3 = 2->0: 3-cycle, e2 toward c=2, e3 away
        let code = TypeCode::from_time_ordered_edges((0, 1), (1, 2), (2, 0));
        assert_eq!(code.code(), 0b001);
        // e1 = 0->1, e2 = 2->0 (on {a,c}, away from c), e3 = 1->2 (toward c)
        let code = TypeCode::from_time_ordered_edges((0, 1), (2, 0), (1, 2));
        assert_eq!(code.code(), 0b110);
        assert!(code.is_cyclic());
    }

    #[test]
    fn psi_table_is_balanced_and_cyclic_columns_are_pure() {
        let mut appearances = [0u32; 8];
        for ordering in TemporalOrdering::ALL {
            for orientation in Orientation::ALL {
                let code = classify(ordering, orientation);
                appearances[code.code() as usize] += 1;
                // an orientation is a directed 3-cycle iff its type is
                assert_eq!(orientation.is_cyclic(), code.is_cyclic());
            }
        }
        assert_eq!(appearances, [6; 8]);
    }

    #[test]
    fn exactly_two_cyclic_types() {
        let cyclic: Vec<u8> = TypeCode::ALL
            .iter()
            .filter(|c| c.is_cyclic())
            .map(|c| c.code())
            .collect();
        assert_eq!(cyclic, vec![0b001, 0b110]);
    }
}
