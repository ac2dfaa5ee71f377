use graphcore::{find_odd_hole, Graph, Hole};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    G,
    Complement,
}

/// An odd hole of length >= 5, tagged with the side it lives on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergeWitness {
    pub side: Side,
    pub hole: Hole,
}

/// A concrete odd hole in `g` or its complement, or None if `g` is Berge.
/// Deterministic: the G side is searched first, each in canonical hole order.
pub fn berge_witness(g: &Graph) -> Option<BergeWitness> {
    if let Some(hole) = find_odd_hole(g) {
        return Some(BergeWitness { side: Side::G, hole });
    }
    find_odd_hole(&g.complement()).map(|hole| BergeWitness { side: Side::Complement, hole })
}

/// True iff every hole and antihole of `g` has even length.
pub fn is_berge(g: &Graph) -> bool {
    berge_witness(g).is_none()
}
