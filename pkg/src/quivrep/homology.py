"""Hom spaces, cocycle/coboundary spaces and Ext dimensions.

All spaces are cut out by linear systems over the rationals:

* ``Hom(M, N)`` is the kernel of the intertwiner system
  ``N_a f_source = f_target M_a`` over all arrows a.
* ``Z(V, U)`` (cocycles describing extensions ``0 -> U -> W -> V -> 0``)
  is the kernel of the twisted relation system.
* ``B(V, U)`` (coboundaries) is the image of the map sending a vertex
  family h to the arrow family ``U_a h_source - h_target V_a``; its kernel
  is exactly Hom(V, U), so dim B = sum_x dimU_x dimV_x - hom(V, U).
* ``ext1 = dim Z - dim B``; over an algebra of global dimension at most
  two, ``ext2 = <dim V, dim U> - hom + ext1`` by the Euler identity.

The dimensions computed here are field-independent: the systems have
rational coefficients, so ranks over the rationals agree with ranks over
any extension field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NegativeExt2, QuivrepError, ShapeMismatch
from .linalg import (MatrixQ, image_basis, is_invertible, kernel_basis, kron,
                     seeded_rng, vstack)
from .quiver import BoundQuiver, DimVector, euler_form
from .rep import CocycleElement, Representation, cocycle_ambient_dim


def _vertex_layout(quiver, row_dims: DimVector, col_dims: DimVector):
    """Offsets for stacking one row_dims[x] x col_dims[x] unknown per vertex."""
    offsets = {}
    pos = 0
    for v in quiver.vertices:
        offsets[v] = pos
        pos += row_dims[v] * col_dims[v]
    return offsets, pos


def intertwiner_matrix(m: Representation, n: Representation) -> MatrixQ:
    """Matrix of the system whose kernel is Hom(M, N).

    Unknowns are the stacked row-major entries of f_x (shape n_x x m_x) in
    vertex order; one block of rows per arrow encodes
    ``N_a f_source - f_target M_a = 0``.
    """
    if m.quiver != n.quiver:
        raise QuivrepError("representations on different quivers")
    quiver = m.quiver
    offsets, total = _vertex_layout(quiver, n.dim, m.dim)
    row_blocks = []
    for arrow in quiver.arrows:
        s, t = arrow.source, arrow.target
        nrows = n.dim[t] * m.dim[s]
        block = [[Fraction(0)] * total for _ in range(nrows)]
        left = kron(n.matrix(arrow.name), MatrixQ.identity(m.dim[s]))
        _add_block(block, left, offsets[s])
        right = kron(MatrixQ.identity(n.dim[t]), m.matrix(arrow.name).transpose())
        _add_block(block, right.scale(-1), offsets[t])
        row_blocks.append(MatrixQ(nrows, total, tuple(tuple(r) for r in block)))
    if not row_blocks:
        return MatrixQ.zeros(0, total)
    return vstack(row_blocks)


def _add_block(rows, block: MatrixQ, col_offset: int):
    for i in range(block.rows):
        row = rows[i]
        brow = block.data[i]
        for j in range(block.cols):
            if brow[j]:
                row[col_offset + j] += brow[j]


@dataclass(frozen=True)
class HomBasis:
    """A basis of Hom(M, N): each element is one matrix per vertex."""

    source: Representation
    target: Representation
    elements: tuple  # tuple of dicts vertex -> MatrixQ

    @property
    def dim(self) -> int:
        return len(self.elements)


def hom_basis(m: Representation, n: Representation) -> HomBasis:
    system = intertwiner_matrix(m, n)
    quiver = m.quiver
    elements = []
    for vec in kernel_basis(system):
        fam = {}
        pos = 0
        for v in quiver.vertices:
            r, c = n.dim[v], m.dim[v]
            rows = tuple(tuple(vec[pos + i * c: pos + (i + 1) * c]) for i in range(r))
            fam[v] = MatrixQ(r, c, rows)
            pos += r * c
        elements.append(fam)
    return HomBasis(m, n, tuple(elements))


def hom_dim(m: Representation, n: Representation) -> int:
    system = intertwiner_matrix(m, n)
    from .linalg import rank
    return system.cols - rank(system)


def end_dim(m: Representation) -> int:
    return hom_dim(m, m)


def orbit_dim(m: Representation) -> int:
    """Dimension of the base-change orbit: dim GL(d) - dim End(M)."""
    return m.dim.glsum() - end_dim(m)


# -- cocycles and coboundaries ------------------------------------------


@dataclass(frozen=True)
class CocycleBasis:
    """Basis of a subspace of the cocycle ambient for the pair (V, U)."""

    quiver: object
    sub_dim: DimVector   # dimension vector of U
    quot_dim: DimVector  # dimension vector of V
    elements: tuple      # tuple of CocycleElement
    ambient_dim: int

    @property
    def dim(self) -> int:
        return len(self.elements)


def cocycle_system(v: Representation, u: Representation, bq: BoundQuiver) -> MatrixQ:
    """Matrix of the twisted relation system whose kernel is Z(V, U).

    Unknowns are the stacked row-major entries of Z_a in arrow order; for
    each relation term coeff * (a_1 ... a_m) and each position j the block
    at a_j gains coeff * kron(U_{a_1}..U_{a_{j-1}}, (V_{a_{j+1}}..V_{a_m})^T).
    """
    quiver = bq.quiver
    if u.quiver != quiver or v.quiver != quiver:
        raise QuivrepError("representations on a different quiver")
    offsets = {}
    pos = 0
    for arrow in quiver.arrows:
        offsets[arrow.name] = pos
        pos += u.dim[arrow.target] * v.dim[arrow.source]
    total = pos
    row_blocks = []
    for rel in bq.relations:
        nrows = u.dim[rel.target] * v.dim[rel.source]
        block = [[Fraction(0)] * total for _ in range(nrows)]
        for coeff, path in rel.terms:
            names = path.arrow_names
            for j, name in enumerate(names):
                prefix = MatrixQ.identity(u.dim[path.target])
                for pre in names[:j]:
                    prefix = prefix @ u.matrix(pre)
                suffix = MatrixQ.identity(v.dim[path.source])
                for post in reversed(names[j + 1:]):
                    suffix = v.matrix(post) @ suffix
                contrib = kron(prefix, suffix.transpose()).scale(coeff)
                _add_block(block, contrib, offsets[name])
        row_blocks.append(MatrixQ(nrows, total, tuple(tuple(r) for r in block)))
    if not row_blocks:
        return MatrixQ.zeros(0, total)
    return vstack(row_blocks)


def cocycle_space(v: Representation, u: Representation, bq: BoundQuiver) -> CocycleBasis:
    """Basis of Z(V, U), the cocycles for extensions of V by U."""
    system = cocycle_system(v, u, bq)
    quiver = bq.quiver
    elements = tuple(
        CocycleElement.from_flat(quiver, u.dim, v.dim, vec)
        for vec in kernel_basis(system))
    return CocycleBasis(quiver, u.dim, v.dim, elements,
                        cocycle_ambient_dim(quiver, u.dim, v.dim))


def coboundary_matrix(v: Representation, u: Representation) -> MatrixQ:
    """Matrix of h |-> (U_a h_source - h_target V_a), vertex unknowns h_x."""
    quiver = u.quiver
    offsets, total = _vertex_layout(quiver, u.dim, v.dim)
    row_blocks = []
    for arrow in quiver.arrows:
        s, t = arrow.source, arrow.target
        nrows = u.dim[t] * v.dim[s]
        block = [[Fraction(0)] * total for _ in range(nrows)]
        left = kron(u.matrix(arrow.name), MatrixQ.identity(v.dim[s]))
        _add_block(block, left, offsets[s])
        right = kron(MatrixQ.identity(u.dim[t]), v.matrix(arrow.name).transpose())
        _add_block(block, right.scale(-1), offsets[t])
        row_blocks.append(MatrixQ(nrows, total, tuple(tuple(r) for r in block)))
    if not row_blocks:
        return MatrixQ.zeros(0, total)
    return vstack(row_blocks)


def coboundary_space(v: Representation, u: Representation) -> CocycleBasis:
    """Basis of B(V, U), the coboundaries inside the cocycle ambient."""
    quiver = u.quiver
    delta = coboundary_matrix(v, u)
    elements = tuple(
        CocycleElement.from_flat(quiver, u.dim, v.dim, vec)
        for vec in image_basis(delta))
    return CocycleBasis(quiver, u.dim, v.dim, elements,
                        cocycle_ambient_dim(quiver, u.dim, v.dim))


def ext1_dim(v: Representation, u: Representation, bq: BoundQuiver) -> int:
    """dim Ext^1(V, U) = dim Z(V, U) - dim B(V, U)."""
    return cocycle_space(v, u, bq).dim - coboundary_space(v, u).dim


def ext2_dim_via_euler(m: Representation, n: Representation, bq: BoundQuiver,
                       assert_gldim2: bool) -> int | None:
    """dim Ext^2(M, N) from the Euler identity, if gldim <= 2 is asserted.

    Returns None when the caller does not assert global dimension <= 2
    (the identity then gives no information).  Raises NegativeExt2 when the
    formula goes negative, which refutes the assertion.
    """
    if not assert_gldim2:
        return None
    value = euler_form(m.dim, n.dim, bq) - hom_dim(m, n) + ext1_dim(m, n, bq)
    if value < 0:
        raise NegativeExt2(
            f"euler formula gives ext2 = {value} < 0; "
            "the global dimension assumption is wrong for this algebra")
    return value


@dataclass(frozen=True)
class ExtReport:
    """Bundle of the homological invariants of an ordered pair (M, N)."""

    hom: int
    z_dim: int
    b_dim: int
    ext1: int
    euler: int
    ext2: int | None

    def check_internal(self) -> bool:
        ok = self.ext1 == self.z_dim - self.b_dim and self.ext1 >= 0
        if self.ext2 is not None:
            ok = ok and self.euler == self.hom - self.ext1 + self.ext2
        return ok


def ext_report(m: Representation, n: Representation, bq: BoundQuiver,
               assert_gldim2: bool = False) -> ExtReport:
    hom = hom_dim(m, n)
    z = cocycle_space(m, n, bq).dim
    b = coboundary_space(m, n).dim
    ext1 = z - b
    euler = euler_form(m.dim, n.dim, bq)
    ext2 = None
    if assert_gldim2:
        ext2 = euler - hom + ext1
        if ext2 < 0:
            raise NegativeExt2(
                f"euler formula gives ext2 = {ext2} < 0; "
                "the global dimension assumption is wrong for this algebra")
    return ExtReport(hom, z, b, ext1, euler, ext2)


# -- isomorphism testing -------------------------------------------------


def iso_probable(m: Representation, n: Representation, trials: int = 8,
                 seed: int = 0, entry_bound: int = 100) -> str:
    """One-sided randomized isomorphism test with exact certificates.

    Returns "NotIsomorphic" on a proof (dimension vectors differ,
    endomorphism dimensions differ, or hom(M, N) != end(M)),
    "Isomorphic" when some random rational combination of a Hom basis is
    invertible at every vertex (an exact certificate), and "Inconclusive"
    after the given number of failed draws.
    """
    if m.quiver != n.quiver:
        raise QuivrepError("representations on different quivers")
    if m.dim != n.dim:
        return "NotIsomorphic"
    if end_dim(m) != end_dim(n):
        return "NotIsomorphic"
    basis = hom_basis(m, n)
    if basis.dim != end_dim(m):
        return "NotIsomorphic"
    rng = seeded_rng("iso", seed)
    quiver = m.quiver
    for _ in range(max(trials, 1)):
        coeffs = [Fraction(rng.randint(-entry_bound, entry_bound)) for _ in basis.elements]
        candidate = {}
        for v in quiver.vertices:
            acc = MatrixQ.zeros(n.dim[v], m.dim[v])
            for c, fam in zip(coeffs, basis.elements):
                if c:
                    acc = acc + fam[v].scale(c)
            candidate[v] = acc
        if all(is_invertible(candidate[v]) for v in quiver.vertices):
            return "Isomorphic"
    return "Inconclusive"
