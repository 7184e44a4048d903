//! The operation signature shared by every concrete algebra in the crate.

/// An algebra of signature `(∧, ∨, ∖, ⊓, 0)`.
///
/// Implementations are expected (not assumed) to satisfy the left-handed SBIA
/// identities; [`crate::laws`] checks them on concrete carriers.
pub trait Sbia {
    type Elem: Clone + Eq;

    fn zero(&self) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn diff(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn isect(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Natural partial order: `a ≤ b` iff `a ∧ b = b ∧ a = a`.
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        let ab = self.meet(a, b);
        &ab == a && self.meet(b, a) == ab
    }

    fn commutes(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.meet(a, b) == self.meet(b, a)
    }
}
