"""Strong compact closed structure on the matrix category.

For an object ``A`` of total dimension ``n``:

* ``unit(A)``   is ``eta_A : I -> A* (x) A``, the vector ``delta_ij``;
* ``counit(A)`` is ``eps_A : A (x) A* -> I``, the covector ``delta_ij``.

Both are involution-free on basis vectors; the involution lives entirely in
:func:`conjugate` and :func:`adjoint`.
"""
from __future__ import annotations

from .matcat import (
    UNIT,
    Morphism,
    ObjectMismatch,
    TensorObject,
    _obj,
    compose,
    compose_all,
    from_entries,
    identity,
    scalar,
    scalar_mul,
    symmetry,
    tensor,
    transpose_matrix,
)
from .semiring import NotInvertible


class TraceMismatch(AssertionError):
    """The composite trace and the index-sum trace disagree."""


def unit(A, semiring) -> Morphism:
    A = _obj(A)
    n = A.total_dim
    one = semiring.one
    return from_entries(((i * n + i, 0, one) for i in range(n)), UNIT, A.dual @ A, semiring)


def counit(A, semiring) -> Morphism:
    A = _obj(A)
    n = A.total_dim
    one = semiring.one
    return from_entries(((0, i * n + i, one) for i in range(n)), A @ A.dual, UNIT, semiring)


def strong_counit(A, semiring) -> Morphism:
    """``eta_A^dagger o sigma_{A,A*}``, which plays the coname's role."""
    A = _obj(A)
    return compose(adjoint(unit(A, semiring)), symmetry(A, A.dual, semiring))


def transpose(f: Morphism) -> Morphism:
    """``f* : B* -> A*`` for ``f : A -> B``."""
    return transpose_matrix(f, f.cod.dual, f.dom.dual)


def conjugate(f: Morphism) -> Morphism:
    """``f_* : A* -> B*``: the involution applied entrywise."""
    return Morphism._raw(tuple(tuple(x.conj() for x in r) for r in f.rows),
                         f.dom.dual, f.cod.dual, f.semiring)


def adjoint(f: Morphism) -> Morphism:
    """``f^dagger : B -> A``, the conjugate transpose."""
    return Morphism._raw(tuple(tuple(x.conj() for x in r) for r in zip(*f.rows)),
                         f.cod, f.dom, f.semiring)


def transpose_composite(f: Morphism) -> Morphism:
    """``f*`` built from units and counits rather than by reindexing."""
    S = f.semiring
    A, B = f.dom, f.cod
    return compose_all(
        tensor(identity(A.dual, S), counit(B, S)),
        tensor(tensor(identity(A.dual, S), f), identity(B.dual, S)),
        tensor(unit(A, S), identity(B.dual, S)),
    )


def name(f: Morphism) -> Morphism:
    """``|f| : I -> A* (x) B`` with ``m_ij`` at flattened index ``(i, j)``.

    ``i`` runs over the domain basis of ``f`` and ``j`` over its codomain,
    so the entry at ``(i, j)`` is ``f.rows[j][i]``.
    """
    m = f.cod.total_dim
    entries = ((i * m + j, 0, x) for j, i, x in f.entries())
    return from_entries(entries, UNIT, f.dom.dual @ f.cod, f.semiring)


def coname(f: Morphism) -> Morphism:
    """``|f|_ : A (x) B* -> I``, the covector with ``m_ij`` at ``(i, j)``."""
    m = f.cod.total_dim
    entries = ((0, i * m + j, x) for j, i, x in f.entries())
    return from_entries(entries, f.dom @ f.cod.dual, UNIT, f.semiring)


def name_composite(f: Morphism) -> Morphism:
    S = f.semiring
    return compose(tensor(identity(f.dom.dual, S), f), unit(f.dom, S))


def coname_composite(f: Morphism) -> Morphism:
    S = f.semiring
    return compose(counit(f.cod, S), tensor(f, identity(f.cod.dual, S)))


def unname(psi: Morphism, A, B) -> Morphism:
    """Inverse of :func:`name`: recover ``f : A -> B`` from ``psi : I -> A* (x) B``."""
    A, B = _obj(A), _obj(B)
    if psi.dom != UNIT or psi.cod != A.dual @ B:
        raise ObjectMismatch(f"{psi.dom} -> {psi.cod} is not a name of {A} -> {B}")
    m = B.total_dim
    entries = ((k % m, k // m, r[0]) for k, r in enumerate(psi.rows) if r[0])
    return from_entries(entries, A, B, psi.semiring)


def unconame(phi: Morphism, A, B) -> Morphism:
    """Inverse of :func:`coname`."""
    A, B = _obj(A), _obj(B)
    if phi.cod != UNIT or phi.dom != A @ B.dual:
        raise ObjectMismatch(f"{phi.dom} -> {phi.cod} is not a coname of {A} -> {B}")
    m = B.total_dim
    entries = ((k % m, k // m, x) for k, x in enumerate(phi.rows[0]) if x)
    return from_entries(entries, A, B, phi.semiring)


# -- trace ---------------------------------------------------------------------

def _check_trace_types(f, A, B, C):
    if f.dom != A @ C or f.cod != B @ C:
        raise ObjectMismatch(
            f"trace over {C} needs f : {A @ C} -> {B @ C}, got {f.dom} -> {f.cod}")


def trace_index_sum(f: Morphism, A, B, C) -> Morphism:
    """Partial trace by summing ``M[(j,a),(i,a)]`` over ``a``."""
    A, B, C = _obj(A), _obj(B), _obj(C)
    _check_trace_types(f, A, B, C)
    c = C.total_dim
    S = f.semiring
    rows = tuple(
        tuple(S.sum(f.rows[j * c + a][i * c + a] for a in range(c))
              for i in range(A.total_dim))
        for j in range(B.total_dim))
    return Morphism._raw(rows, A, B, S)


def trace_composite(f: Morphism, A, B, C) -> Morphism:
    """``(1_B (x) eps_C) o (f (x) 1_C*) o (1_A (x) (sigma_{C*,C} o eta_C))``."""
    A, B, C = _obj(A), _obj(B), _obj(C)
    _check_trace_types(f, A, B, C)
    S = f.semiring
    loop = compose(symmetry(C.dual, C, S), unit(C, S))
    return compose_all(
        tensor(identity(B, S), counit(C, S)),
        tensor(f, identity(C.dual, S)),
        tensor(identity(A, S), loop),
    )


def trace(f: Morphism, A, B, C) -> Morphism:
    """``Tr^C_{A,B}(f)``, computed both ways; raises if they disagree."""
    t = trace_index_sum(f, A, B, C)
    u = trace_composite(f, A, B, C)
    if t != u:
        raise TraceMismatch(f"index sum {t!r} != composite {u!r}")
    return t


def split_trailing(X: TensorObject, C: TensorObject) -> TensorObject:
    n = len(C)
    if n > len(X) or X.factors[len(X) - n:] != C.factors:
        raise ObjectMismatch(f"{C} is not a trailing factor of {X}")
    return TensorObject(X.factors[:len(X) - n])


def trace_over(f: Morphism, C) -> Morphism:
    """Trace out the trailing factors ``C`` of both dom and cod."""
    C = _obj(C)
    return trace(f, split_trailing(f.dom, C), split_trailing(f.cod, C), C)


# -- projectors, inner products, unitarity -------------------------------------

def projector(f: Morphism) -> Morphism:
    """``P_f = |f| o |f_*|_ : A* (x) B -> A* (x) B``."""
    return compose(name(f), coname(conjugate(f)))


def normalization_scalar(f: Morphism) -> Morphism:
    """``s_f = (|f_*|_ o |f|)^-1``; raises :class:`NotInvertible` if it does not exist."""
    s = compose(coname(conjugate(f)), name(f))
    return scalar(s.value.inverse())


def normalized_projector(f: Morphism) -> Morphism:
    return scalar_mul(normalization_scalar(f), projector(f))


def _check_point(psi):
    if psi.dom != UNIT:
        raise ObjectMismatch(f"{psi.dom} -> {psi.cod} is not a point I -> A")


def inner_product(psi: Morphism, phi: Morphism) -> Morphism:
    """``<psi|phi> = psi^dagger o phi`` for points ``psi, phi : I -> A``."""
    _check_point(psi)
    _check_point(phi)
    if psi.cod != phi.cod:
        raise ObjectMismatch(f"points live in different objects {psi.cod} and {phi.cod}")
    return compose(adjoint(psi), phi)


def inner_product_counit(psi: Morphism, phi: Morphism) -> Morphism:
    """``eps_A o (phi (x) psi_*)``, the counit-based inner product."""
    _check_point(psi)
    _check_point(phi)
    if psi.cod != phi.cod:
        raise ObjectMismatch(f"points live in different objects {psi.cod} and {phi.cod}")
    return compose(counit(phi.cod, phi.semiring), tensor(phi, conjugate(psi)))


def is_unitary(U: Morphism) -> bool:
    if U.shape[0] != U.shape[1]:
        return False
    S = U.semiring
    Ud = adjoint(U)
    return compose(Ud, U) == identity(U.dom, S) and compose(U, Ud) == identity(U.cod, S)


__all__ = [
    "NotInvertible", "TraceMismatch", "adjoint", "conjugate", "coname",
    "coname_composite", "counit", "inner_product", "inner_product_counit",
    "is_unitary", "name", "name_composite", "normalization_scalar",
    "normalized_projector", "projector", "split_trailing", "strong_counit",
    "trace", "trace_composite", "trace_index_sum", "trace_over", "transpose",
    "transpose_composite", "unconame", "unit", "unname",
]
