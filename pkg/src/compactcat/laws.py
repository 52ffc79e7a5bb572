"""Executable law catalog.

Every law is a closed equation between two composites of the matrix model,
checked exactly on randomly generated instances.  ``check_law`` never raises
for a failing or ill-typed instance; it records a witness instead.
"""
from __future__ import annotations

import enum
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import compact as cc
from .matcat import (
    UNIT,
    Morphism,
    TensorObject,
    compose,
    compose_all,
    identity,
    scalar,
    scalar_action,
    scalar_mul,
    symmetry,
    tensor,
)
from .semiring import CRat, NotInvertible, Semiring, get_semiring


class LawId(str, enum.Enum):
    Triangle1 = "Triangle1"
    Triangle2 = "Triangle2"
    EtaTwist = "EtaTwist"
    StrongTriangle = "StrongTriangle"
    Yanking = "Yanking"
    ScalarCommute = "ScalarCommute"
    ScalarInterchange = "ScalarInterchange"
    Compositionality = "Compositionality"
    NameConameBijection = "NameConameBijection"
    AdjointIP = "AdjointIP"
    UnitaryIP = "UnitaryIP"
    ProjectorIdempotent = "ProjectorIdempotent"
    ProjectorFixesName = "ProjectorFixesName"
    SigmaName = "SigmaName"
    Teleport = "Teleport"
    TraceViaProjectors = "TraceViaProjectors"
    TraceNaturalityLeft = "TraceNaturalityLeft"
    TraceNaturalityRight = "TraceNaturalityRight"
    TraceDinaturality = "TraceDinaturality"
    TraceVanishingI = "TraceVanishingI"
    TraceVanishingTensor = "TraceVanishingTensor"
    TraceSuperposing = "TraceSuperposing"
    TraceYanking = "TraceYanking"


@dataclass
class LawReport:
    law: LawId
    instances_checked: int
    passed: bool
    witness: dict | None = None
    solved_scalars: dict | None = None

    def to_json(self) -> str:
        d = {"law": self.law.value, "passed": self.passed, "trials": self.instances_checked}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.solved_scalars is not None:
            d["scalar"] = self.solved_scalars
        return json.dumps(d, sort_keys=True)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.law.value:<22} trials={self.instances_checked}"
        if self.solved_scalars is not None:
            line += " scalars=" + ",".join(f"{k}:{v}" for k, v in sorted(self.solved_scalars.items()))
        if self.witness is not None and not self.passed:
            line += f"\n    witness: {json.dumps(self.witness, sort_keys=True)}"
        return line


# -- instance generation -------------------------------------------------------

class InstanceGenerator:
    """Random well-typed instances over one semiring.

    Entries are independent; ``density`` is the probability of a nonzero entry.
    """

    def __init__(self, semiring: type[Semiring], dim_bound: int = 3,
                 rng: random.Random | int | None = None, density: float = 0.7,
                 context_bound: int = 2, focus_dim: int | None = None):
        if dim_bound < 1:
            raise ValueError("dim_bound must be >= 1")
        self.semiring = semiring
        self.dim_bound = dim_bound
        self.context_bound = min(context_bound, dim_bound)
        self.rng = rng if isinstance(rng, random.Random) else random.Random(rng)
        self.density = density
        # when set, the first factor of every generated object has this dimension
        self.focus_dim = focus_dim

    def fork(self, tag: str) -> "InstanceGenerator":
        seed = self.rng.getrandbits(64)
        return InstanceGenerator(self.semiring, self.dim_bound, random.Random(f"{seed}:{tag}"),
                                 self.density, self.context_bound, self.focus_dim)

    def dim(self, bound: int | None = None) -> int:
        return self.rng.randint(1, bound or self.dim_bound)

    def obj(self, max_factors: int = 1, allow_unit: bool = False, bound: int | None = None,
            allow_dual: bool = True) -> TensorObject:
        lo = 0 if allow_unit else 1
        n = self.rng.randint(lo, max_factors)
        dims = [self.dim(bound) for _ in range(n)]
        if n and self.focus_dim is not None:
            dims[0] = self.focus_dim
        return TensorObject(tuple((d, allow_dual and self.rng.random() < 0.5) for d in dims))

    def context(self) -> TensorObject:
        n = self.rng.randint(0, 1)
        return TensorObject(tuple((self.dim(self.context_bound), self.rng.random() < 0.5)
                                  for _ in range(n)))

    def value(self) -> Semiring:
        return self.semiring.random(self.rng, self.density)

    def nonzero_value(self) -> Semiring:
        while True:
            x = self.semiring.random(self.rng, 1.0)
            if x:
                return x

    def morphism(self, dom: TensorObject, cod: TensorObject) -> Morphism:
        rows = tuple(tuple(self.value() for _ in range(dom.total_dim))
                     for _ in range(cod.total_dim))
        return Morphism._raw(rows, dom, cod, self.semiring)

    def nonzero_morphism(self, dom, cod) -> Morphism:
        f = self.morphism(dom, cod)
        if f.is_zero():
            j, i = self.rng.randrange(cod.total_dim), self.rng.randrange(dom.total_dim)
            rows = [list(r) for r in f.rows]
            rows[j][i] = self.nonzero_value()
            f = Morphism._raw(tuple(map(tuple, rows)), dom, cod, self.semiring)
        return f

    def low_rank_morphism(self, dom, cod) -> Morphism:
        """A composite through a one-dimensional object, hence singular when dims > 1."""
        mid = TensorObject.of(1)
        return compose(self.morphism(mid, cod), self.morphism(dom, mid))

    def point(self, A: TensorObject) -> Morphism:
        return self.morphism(UNIT, A)

    def scalar(self) -> Morphism:
        return scalar(self.value())

    def unitary(self, A: TensorObject) -> Morphism:
        S = self.semiring
        n = A.total_dim
        perm = list(range(n))
        self.rng.shuffle(perm)
        P = Morphism._raw(tuple(tuple(S.one if perm[j] == i else S.zero for i in range(n))
                                for j in range(n)), A, A, S)
        if S is not CRat:
            return P
        phases = (CRat(1), CRat(-1), CRat(0, 1), CRat(0, -1))
        D = Morphism._raw(tuple(tuple(self.rng.choice(phases) if i == j else S.zero
                                      for i in range(n)) for j in range(n)), A, A, S)
        return compose_all(_cayley(self, A), D, P)


def _cayley(gen: InstanceGenerator, A: TensorObject) -> Morphism:
    """Random exact unitary ``(1 - K)(1 + K)^-1`` for skew-Hermitian ``K``."""
    n = A.total_dim
    rng = gen.rng
    K = [[CRat(0)] * n for _ in range(n)]
    for j in range(n):
        K[j][j] = CRat(0, rng.randint(-2, 2))
        for i in range(j + 1, n):
            z = CRat(rng.randint(-2, 2), rng.randint(-2, 2)) if rng.random() < 0.6 else CRat(0)
            K[j][i] = z
            K[i][j] = -z.conj()
    one = CRat(1)
    minus = [[(one if i == j else CRat(0)) - K[j][i] for i in range(n)] for j in range(n)]
    plus = [[(one if i == j else CRat(0)) + K[j][i] for i in range(n)] for j in range(n)]
    inv = _invert(plus)
    prod_ = [[CRat.sum(minus[j][k] * inv[k][i] for k in range(n)) for i in range(n)]
             for j in range(n)]
    return Morphism._raw(tuple(map(tuple, prod_)), A, A, CRat)


def _invert(M: list[list[CRat]]) -> list[list[CRat]]:
    n = len(M)
    aug = [list(r) + [CRat(1) if i == j else CRat(0) for i in range(n)] for j, r in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
    return [r[n:] for r in aug]


# -- equation checks -----------------------------------------------------------

@dataclass
class Check:
    """``lhs == rhs``; with ``solve`` the equation is ``lhs == s . rhs`` for a solved ``s``."""

    label: str
    lhs: Morphism
    rhs: Morphism
    inputs: dict[str, Morphism] = field(default_factory=dict)
    solve: bool = False
    expect_one: bool = False


def solve_scalar(lhs: Morphism, rhs: Morphism) -> tuple[Semiring | None, bool]:
    """Find ``s`` with ``lhs == s . rhs``.

    Picks the first index where the rhs entry is invertible and the lhs entry
    is nonzero.  Without such an index, both sides must be zero (``s = 1``),
    or the lhs alone zero (``s = 0``).  Returns ``(s, holds)``.
    """
    if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
        return None, False
    S = lhs.semiring
    for lrow, rrow in zip(lhs.rows, rhs.rows):
        for a, b in zip(lrow, rrow):
            if a and b:
                try:
                    s = a * b.inverse()
                except NotInvertible:
                    continue
                return s, scalar_mul(scalar(s), rhs) == lhs
    if lhs.is_zero():
        return (S.one if rhs.is_zero() else S.zero), True
    return None, False


def _describe(inputs: dict[str, Morphism]) -> dict[str, str]:
    return {k: v.literal() for k, v in inputs.items()}


def _run_check(c: Check) -> tuple[bool, dict | None, Semiring | None]:
    if not c.solve:
        ok = c.lhs == c.rhs
        return ok, None, None
    s, ok = solve_scalar(c.lhs, c.rhs)
    if ok and c.expect_one:
        ok = s == c.lhs.semiring.one and c.lhs == c.rhs
    return ok, None, s


# -- the laws ------------------------------------------------------------------

LawFn = Callable[[InstanceGenerator], list[Check]]
LAWS: dict[LawId, LawFn] = {}


def law(ident: LawId):
    def deco(fn):
        LAWS[ident] = fn
        return fn
    return deco


def _placed(g: InstanceGenerator, lhs: Morphism, rhs: Morphism, label: str,
            inputs: dict) -> list[Check]:
    """The bare equation plus a copy in a random context ``1_X (x) - (x) 1_Y`` fed by ``h``."""
    S = g.semiring
    X, Y = g.context(), g.context()
    wrap = lambda m: tensor(tensor(identity(X, S), m), identity(Y, S))
    W = g.context()
    h = g.morphism(W, X @ lhs.dom @ Y)
    return [
        Check(label, lhs, rhs, inputs),
        Check(label + " in context", compose(wrap(lhs), h), compose(wrap(rhs), h),
              dict(inputs, h=h)),
    ]


@law(LawId.Triangle1)
def _triangle1(g):
    S = g.semiring
    A = g.obj(2)
    lhs = compose(tensor(cc.counit(A, S), identity(A, S)), tensor(identity(A, S), cc.unit(A, S)))
    return _placed(g, lhs, identity(A, S), "(eps_A x 1_A) o (1_A x eta_A) = 1_A", {})


@law(LawId.Triangle2)
def _triangle2(g):
    S = g.semiring
    A = g.obj(2)
    Ad = A.dual
    lhs = compose(tensor(identity(Ad, S), cc.counit(A, S)), tensor(cc.unit(A, S), identity(Ad, S)))
    return _placed(g, lhs, identity(Ad, S), "(1_A* x eps_A) o (eta_A x 1_A*) = 1_A*", {})


@law(LawId.EtaTwist)
def _eta_twist(g):
    S = g.semiring
    A = g.obj(2)
    lhs = cc.unit(A.dual, S)
    rhs = compose(symmetry(A.dual, A, S), cc.unit(A, S))
    return _placed(g, lhs, rhs, "eta_A* = sigma_{A*,A} o eta_A", {})


@law(LawId.StrongTriangle)
def _strong_triangle(g):
    S = g.semiring
    A = g.obj(2)
    lhs = compose(tensor(cc.strong_counit(A, S), identity(A, S)),
                  tensor(identity(A, S), cc.unit(A, S)))
    return _placed(g, lhs, identity(A, S),
                   "((eta_A^dg o sigma_{A,A*}) x 1_A) o (1_A x eta_A) = 1_A", {})


@law(LawId.Yanking)
def _yanking(g):
    S = g.semiring
    # one factor: with two the composite passes through A (x) A* (x) A of dim up to 16^3
    A = g.obj()
    lhs = compose_all(
        tensor(cc.adjoint(cc.unit(A, S)), identity(A, S)),
        tensor(identity(A.dual, S), symmetry(A, A, S)),
        tensor(cc.unit(A, S), identity(A, S)),
    )
    return _placed(g, lhs, identity(A, S),
                   "(eta_A^dg x 1_A) o (1_A* x sigma_{A,A}) o (eta_A x 1_A) = 1_A", {})


@law(LawId.ScalarCommute)
def _scalar_commute(g):
    s, r = g.scalar(), g.scalar()
    A, B = g.obj(2), g.obj(2)
    f = g.morphism(A, B)
    inputs = {"s": s, "r": r, "f": f}
    return [
        Check("s o r = r o s", compose(s, r), compose(r, s), inputs),
        Check("f o s_A = s . f", compose(f, scalar_action(s, A)), scalar_mul(s, f), inputs),
        Check("s_B o f = s . f", compose(scalar_action(s, B), f), scalar_mul(s, f), inputs),
    ]


@law(LawId.ScalarInterchange)
def _scalar_interchange(g):
    s, r = g.scalar(), g.scalar()
    A, B, C = g.obj(2), g.obj(2), g.obj(2)
    f, h = g.morphism(A, B), g.morphism(B, C)
    return [Check("(s.g) o (r.f) = (s o r).(g o f)",
                  compose(scalar_mul(s, h), scalar_mul(r, f)),
                  scalar_mul(compose(s, r), compose(h, f)),
                  {"s": s, "r": r, "f": f, "g": h})]


@law(LawId.Compositionality)
def _compositionality(g):
    S = g.semiring
    A, B, C = g.obj(), g.obj(), g.obj()
    f, h = g.morphism(A, B), g.morphism(B, C)
    lhs = compose(tensor(cc.coname(f), identity(C, S)), tensor(identity(A, S), cc.name(h)))
    return [Check("(|f|_ x 1_C) o (1_A x |g|) = g o f", lhs, compose(h, f), {"f": f, "g": h})]


@law(LawId.NameConameBijection)
def _name_coname(g):
    A, B = g.obj(2), g.obj(2)
    f = g.morphism(A, B)
    psi = g.point(A.dual @ B)
    phi = g.morphism(A @ B.dual, UNIT)
    inputs = {"f": f, "psi": psi, "phi": phi}
    return [
        Check("unname(|f|) = f", cc.unname(cc.name(f), A, B), f, inputs),
        Check("|unname(psi)| = psi", cc.name(cc.unname(psi, A, B)), psi, inputs),
        Check("unconame(|f|_) = f", cc.unconame(cc.coname(f), A, B), f, inputs),
        Check("|unconame(phi)|_ = phi", cc.coname(cc.unconame(phi, A, B)), phi, inputs),
        Check("|f| = (1 x f) o eta", cc.name(f), cc.name_composite(f), inputs),
        Check("|f|_ = eps o (f x 1)", cc.coname(f), cc.coname_composite(f), inputs),
        Check("|f|^dg = |f_*|_", cc.adjoint(cc.name(f)), cc.coname(cc.conjugate(f)), inputs),
        Check("f* via eta/eps = transpose", cc.transpose_composite(f), cc.transpose(f), inputs),
    ]


@law(LawId.AdjointIP)
def _adjoint_ip(g):
    A, B = g.obj(2), g.obj(2)
    f = g.morphism(B, A)
    psi, phi = g.point(A), g.point(B)
    inputs = {"f": f, "psi": psi, "phi": phi}
    return [
        Check("<f^dg psi|phi> = <psi|f phi>",
              cc.inner_product(compose(cc.adjoint(f), psi), phi),
              cc.inner_product(psi, compose(f, phi)), inputs),
        Check("psi^dg o phi' = eps o (phi' x psi_*)",
              cc.inner_product(psi, compose(f, phi)),
              cc.inner_product_counit(psi, compose(f, phi)), inputs),
        Check("(f^dg)^dg = f", cc.adjoint(cc.adjoint(f)), f, inputs),
    ]


@law(LawId.UnitaryIP)
def _unitary_ip(g):
    A = g.obj(2)
    U = g.unitary(A)
    psi, phi = g.point(A), g.point(A)
    inputs = {"U": U, "psi": psi, "phi": phi}
    S = g.semiring
    flag = scalar(S.one if cc.is_unitary(U) else S.zero)
    return [
        Check("U is unitary", flag, scalar(S.one), inputs),
        Check("<U psi|U phi> = <psi|phi>",
              cc.inner_product(compose(U, psi), compose(U, phi)),
              cc.inner_product(psi, phi), inputs),
    ]


@law(LawId.ProjectorIdempotent)
def _projector_idempotent(g):
    A, B = g.obj(2), g.obj(2)
    f = g.nonzero_morphism(A, B)
    P = cc.projector(f)
    sP = cc.normalized_projector(f)
    inputs = {"f": f}
    return [
        Check("(s_f.P_f) o (s_f.P_f) = s_f.P_f", compose(sP, sP), sP, inputs),
        Check("P_f^dg = P_f", cc.adjoint(P), P, inputs),
        Check("(s_f.P_f)^dg = s_f.P_f", cc.adjoint(sP), sP, inputs),
    ]


@law(LawId.ProjectorFixesName)
def _projector_fixes_name(g):
    A, B = g.obj(2), g.obj(2)
    f = g.nonzero_morphism(A, B)
    sP = cc.normalized_projector(f)
    cf = cc.coname(cc.conjugate(f))
    inputs = {"f": f}
    return [
        Check("(s_f.P_f) o |f| = |f|", compose(sP, cc.name(f)), cc.name(f), inputs),
        Check("|f_*|_ o (s_f.P_f) = |f_*|_", compose(cf, sP), cf, inputs),
    ]


@law(LawId.SigmaName)
def _sigma_name(g):
    S = g.semiring
    A, B = g.obj(2), g.obj(2)
    f = g.morphism(A, B)
    return [Check("sigma o |f| = |f*|", compose(symmetry(A.dual, B, S), cc.name(f)),
                  cc.name(cc.transpose(f)), {"f": f})]


def teleport_sides(f: Morphism, xi: Morphism) -> tuple[Morphism, Morphism]:
    """Both sides of the gate-teleportation equation for ``f : A -> B``, ``xi : A* -> B*``.

    ``lhs = f (x) (|1_A*| o |xi|_)`` and
    ``rhs = sigma o (P_{1_A*} (x) 1_B) o (1_A (x) P_f)``, where ``sigma`` moves
    ``B`` to the front: ``A (x) A* (x) B -> B (x) A (x) A*``.
    """
    S = f.semiring
    A, B = f.dom, f.cod
    if xi.dom != A.dual or xi.cod != B.dual:
        raise TypeError(f"xi must be {A.dual} -> {B.dual}, got {xi.dom} -> {xi.cod}")
    lhs = tensor(f, compose(cc.name(identity(A.dual, S)), cc.coname(xi)))
    rhs = compose_all(
        symmetry(A @ A.dual, B, S),
        tensor(cc.projector(identity(A.dual, S)), identity(B, S)),
        tensor(identity(A, S), cc.projector(f)),
    )
    return lhs, rhs


def trace_projector_sides(f: Morphism, A, B, C, xi: Morphism) -> tuple[Morphism, Morphism]:
    """Both sides of trace-via-projectors for ``f : A (x) C -> B (x) C``, ``xi : C -> C``.

    ``lhs = Tr(f) (x) (|1_C*| o |xi|_)`` and
    ``rhs = (1_B (x) P) o (f (x) 1_C*) o (1_A (x) P)`` with ``P = P_{1_C*}``.
    """
    S = f.semiring
    if xi.dom != C or xi.cod != C:
        raise TypeError(f"xi must be an endomorphism of {C}")
    lhs = tensor(cc.trace(f, A, B, C), compose(cc.name(identity(C.dual, S)), cc.coname(xi)))
    P = cc.projector(identity(C.dual, S))
    rhs = compose_all(
        tensor(identity(B, S), P),
        tensor(f, identity(C.dual, S)),
        tensor(identity(A, S), P),
    )
    return lhs, rhs


@law(LawId.Teleport)
def _teleport(g):
    A, B = g.obj(), g.obj()
    if g.rng.random() < 0.3:
        f = g.low_rank_morphism(A, B)
    else:
        f = g.morphism(A, B)
    xi = cc.conjugate(f)
    lhs, rhs = teleport_sides(f, xi)
    return [Check("f x (|1_A*| o |f_*|_) = s . sigma o (P_1 x 1) o (1 x P_f)", lhs, rhs,
                  {"f": f, "xi": xi}, solve=True, expect_one=True)]


@law(LawId.TraceViaProjectors)
def _trace_via_projectors(g):
    S = g.semiring
    A, B, C = g.obj(), g.obj(), g.obj()
    f = g.morphism(A @ C, B @ C)
    lhs, rhs = trace_projector_sides(f, A, B, C, identity(C, S))
    return [Check("Tr(f) x (|1_C*| o |1_C|_) = s . (1 x P) o (f x 1) o (1 x P)", lhs, rhs,
                  {"f": f}, solve=True, expect_one=True)]


@law(LawId.TraceNaturalityLeft)
def _trace_nat_left(g):
    S = g.semiring
    A0, A, B, C = g.obj(), g.obj(), g.obj(), g.obj()
    f = g.morphism(A @ C, B @ C)
    h = g.morphism(A0, A)
    return [Check("Tr(f o (g x 1_C)) = Tr(f) o g",
                  cc.trace(compose(f, tensor(h, identity(C, S))), A0, B, C),
                  compose(cc.trace(f, A, B, C), h), {"f": f, "g": h})]


@law(LawId.TraceNaturalityRight)
def _trace_nat_right(g):
    S = g.semiring
    A, B, B1, C = g.obj(), g.obj(), g.obj(), g.obj()
    f = g.morphism(A @ C, B @ C)
    h = g.morphism(B, B1)
    return [Check("Tr((g x 1_C) o f) = g o Tr(f)",
                  cc.trace(compose(tensor(h, identity(C, S)), f), A, B1, C),
                  compose(h, cc.trace(f, A, B, C)), {"f": f, "g": h})]


@law(LawId.TraceDinaturality)
def _trace_dinat(g):
    S = g.semiring
    A, B, C, D = g.obj(), g.obj(), g.obj(), g.obj()
    f = g.morphism(A @ C, B @ D)
    h = g.morphism(D, C)
    return [Check("Tr^C((1_B x g) o f) = Tr^D(f o (1_A x g))",
                  cc.trace(compose(tensor(identity(B, S), h), f), A, B, C),
                  cc.trace(compose(f, tensor(identity(A, S), h)), A, B, D),
                  {"f": f, "g": h})]


@law(LawId.TraceVanishingI)
def _trace_vanishing_unit(g):
    A, B = g.obj(2), g.obj(2)
    f = g.morphism(A, B)
    return [Check("Tr^I(f) = f", cc.trace(f, A, B, UNIT), f, {"f": f})]


@law(LawId.TraceVanishingTensor)
def _trace_vanishing_tensor(g):
    A, B, C, D = g.obj(), g.obj(), g.obj(), g.obj()
    f = g.morphism(A @ C @ D, B @ C @ D)
    return [Check("Tr^{C x D}(f) = Tr^C(Tr^D(f))",
                  cc.trace(f, A, B, C @ D),
                  cc.trace(cc.trace(f, A @ C, B @ C, D), A, B, C), {"f": f})]


@law(LawId.TraceSuperposing)
def _trace_superposing(g):
    X, Y, A, B, C = g.obj(), g.obj(), g.obj(), g.obj(), g.obj()
    f = g.morphism(A @ C, B @ C)
    h = g.morphism(X, Y)
    return [Check("Tr^C(g x f) = g x Tr^C(f)",
                  cc.trace(tensor(h, f), X @ A, Y @ B, C),
                  tensor(h, cc.trace(f, A, B, C)), {"f": f, "g": h})]


@law(LawId.TraceYanking)
def _trace_yanking(g):
    S = g.semiring
    C = g.obj()
    return [Check("Tr^C(sigma_{C,C}) = 1_C",
                  cc.trace(symmetry(C, C, S), C, C, C), identity(C, S), {})]


# -- drivers -------------------------------------------------------------------

def check_law(law_id: LawId, gen: InstanceGenerator, trials: int = 1) -> LawReport:
    law_id = LawId(law_id)
    fn = LAWS[law_id]
    scalars: dict[str, int] = {}
    solving = law_id in (LawId.Teleport, LawId.TraceViaProjectors)
    for t in range(trials):
        try:
            checks = fn(gen)
            results = [(c, *_run_check(c)) for c in checks]
        except Exception as exc:  # ill-typed instance or trace cross-check failure
            return LawReport(law_id, t + 1, False,
                             witness={"trial": t, "error": f"{type(exc).__name__}: {exc}"},
                             solved_scalars=scalars or None)
        for c, ok, _, s in results:
            if c.solve:
                key = "none" if s is None else str(s)
                scalars[key] = scalars.get(key, 0) + 1
            if not ok:
                return LawReport(law_id, t + 1, False, witness={
                    "trial": t,
                    "equation": c.label,
                    "inputs": _describe(c.inputs),
                    "lhs": c.lhs.literal(),
                    "rhs": c.rhs.literal(),
                    **({"scalar": None if s is None else str(s)} if c.solve else {}),
                }, solved_scalars=scalars or None)
    return LawReport(law_id, trials, True, solved_scalars=scalars if solving else None)


def iter_suite(semiring, dim_bound: int, trials: int, seed: int) -> Iterator[LawReport]:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    S = get_semiring(semiring) if isinstance(semiring, str) else semiring
    for law_id in LawId:
        gen = InstanceGenerator(S, dim_bound, random.Random(f"{seed}:{S.id}:{law_id.value}"))
        yield check_law(law_id, gen, trials)


def run_suite(semiring, dim_bound: int, trials: int, seed: int) -> list[LawReport]:
    """Run every catalog law; deterministic in ``seed``."""
    return list(iter_suite(semiring, dim_bound, trials, seed))
