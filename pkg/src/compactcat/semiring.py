"""Involutive commutative semirings with exact arithmetic.

Three instances are provided:

* :class:`Bool`    -- the Booleans, ``+`` is or, ``*`` is and, ordered 0 <= 1.
* :class:`NNRat`   -- nonnegative rationals (a stand-in for R+).
* :class:`CRat`    -- Gaussian rationals ``a + b i`` with ``a, b`` in Q,
  involution is complex conjugation.

Values are immutable and hashable.  Mixing instances in one operation raises
:class:`SemiringMismatch`.

>>> Bool.one + Bool.one
Bool(1)
>>> NNRat(1, 3) + NNRat(1, 6)
NNRat(1/2)
>>> CRat(1, 2) + CRat(3, -2)
CRat(4)
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, ClassVar


class SemiringError(ValueError):
    pass


class SemiringMismatch(SemiringError):
    pass


class NotInvertible(SemiringError, ArithmeticError):
    pass


class Semiring:
    """Base class of semiring elements.

    Subclasses define ``zero``, ``one``, ``id`` and the arithmetic.  ``conj``
    is the semiring involution.
    """

    __slots__ = ()

    id: ClassVar[str]
    zero: ClassVar["Semiring"]
    one: ClassVar["Semiring"]
    ordered: ClassVar[bool] = False

    def _check(self, other):
        if type(other) is not type(self):
            raise SemiringMismatch(
                f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def add(self, other):
        return self + other

    def mul(self, other):
        return self * other

    def conj(self):
        raise NotImplementedError

    def inverse(self):
        raise NotImplementedError

    def is_zero(self) -> bool:
        return not self

    @classmethod
    def from_int(cls, n: int):
        raise NotImplementedError

    @classmethod
    def parse(cls, text: str):
        return cls.from_literal(parse_literal(text))

    @classmethod
    def from_literal(cls, lit: "Literal"):
        raise NotImplementedError

    @classmethod
    def random(cls, rng: random.Random, density: float = 0.7):
        raise NotImplementedError

    @classmethod
    def sum(cls, xs):
        acc = cls.zero
        for x in xs:
            acc = acc + x
        return acc

    @classmethod
    def product(cls, xs):
        acc = cls.one
        for x in xs:
            acc = acc * x
        return acc


class Bool(Semiring):
    __slots__ = ("v",)
    id = "bool"
    ordered = True

    def __new__(cls, v=False):
        return _TRUE if v else _FALSE

    def __setattr__(self, name, value):
        raise AttributeError("Bool is immutable")

    def __reduce__(self):
        return (Bool, (self.v,))

    def __add__(self, other):
        self._check(other)
        return _TRUE if (self.v or other.v) else _FALSE

    def __mul__(self, other):
        self._check(other)
        return _TRUE if (self.v and other.v) else _FALSE

    def __bool__(self):
        return self.v

    def __eq__(self, other):
        return type(other) is Bool and other.v == self.v

    def __hash__(self):
        return hash(("bool", self.v))

    def __le__(self, other):
        self._check(other)
        return (not self.v) or other.v

    def __lt__(self, other):
        self._check(other)
        return (not self.v) and other.v

    def __repr__(self):
        return f"Bool({int(self.v)})"

    def __str__(self):
        return "1" if self.v else "0"

    def conj(self):
        return self

    def inverse(self):
        if not self.v:
            raise NotInvertible("0 has no inverse in Bool")
        return self

    @classmethod
    def from_int(cls, n):
        return _TRUE if n else _FALSE

    @classmethod
    def from_literal(cls, lit):
        if lit.im != 0 or lit.re not in (0, 1):
            raise SemiringError(f"{lit} is not a Boolean literal")
        return cls.from_int(lit.re)

    @classmethod
    def random(cls, rng, density=0.5):
        return _TRUE if rng.random() < density else _FALSE


_TRUE = object.__new__(Bool)
object.__setattr__(_TRUE, "v", True)
_FALSE = object.__new__(Bool)
object.__setattr__(_FALSE, "v", False)
Bool.zero = _FALSE
Bool.one = _TRUE


class NNRat(Semiring):
    __slots__ = ("q",)
    id = "nnrat"

    def __init__(self, num=0, den=1):
        q = Fraction(num, den)
        if q < 0:
            raise SemiringError(f"negative value {q} is not in NNRat")
        object.__setattr__(self, "q", q)

    @classmethod
    def _of(cls, q):
        x = object.__new__(cls)
        object.__setattr__(x, "q", q)
        return x

    def __setattr__(self, name, value):
        raise AttributeError("NNRat is immutable")

    def __add__(self, other):
        self._check(other)
        return NNRat._of(self.q + other.q)

    def __mul__(self, other):
        self._check(other)
        return NNRat._of(self.q * other.q)

    def __bool__(self):
        return self.q != 0

    def __eq__(self, other):
        return type(other) is NNRat and other.q == self.q

    def __hash__(self):
        return hash(("nnrat", self.q))

    def __repr__(self):
        return f"NNRat({self.q})"

    def __str__(self):
        return str(self.q)

    def conj(self):
        return self

    def inverse(self):
        if self.q == 0:
            raise NotInvertible("0 has no inverse in NNRat")
        return NNRat._of(1 / self.q)

    @classmethod
    def from_int(cls, n):
        return cls(n)

    @classmethod
    def from_literal(cls, lit):
        if lit.im != 0:
            raise SemiringError(f"{lit} is not real")
        if lit.re < 0:
            raise SemiringError(f"{lit} is negative")
        return cls._of(lit.re)

    @classmethod
    def random(cls, rng, density=0.7):
        if rng.random() >= density:
            return cls.zero
        return cls._of(Fraction(rng.randint(1, 4), rng.choice((1, 1, 2, 3))))


NNRat.zero = NNRat(0)
NNRat.one = NNRat(1)


class CRat(Semiring):
    """Gaussian rational ``re + im*i``.

    >>> CRat(3, 4).conj()
    CRat(3-4i)
    >>> CRat(1, 1) * CRat(1, -1)
    CRat(2)
    """

    __slots__ = ("re", "im")
    id = "crat"

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    @classmethod
    def _of(cls, re, im):
        x = object.__new__(cls)
        object.__setattr__(x, "re", re)
        object.__setattr__(x, "im", im)
        return x

    def __setattr__(self, name, value):
        raise AttributeError("CRat is immutable")

    def __add__(self, other):
        self._check(other)
        return CRat._of(self.re + other.re, self.im + other.im)

    def __mul__(self, other):
        self._check(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return CRat._of(a * c, b)
        return CRat._of(a * c - b * d, a * d + b * c)

    # CRat is a field, so subtraction is available here (and only here).
    def __neg__(self):
        return CRat._of(-self.re, -self.im)

    def __sub__(self, other):
        self._check(other)
        return CRat._of(self.re - other.re, self.im - other.im)

    def __truediv__(self, other):
        return self * other.inverse()

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        return type(other) is CRat and other.re == self.re and other.im == self.im

    def __hash__(self):
        return hash(("crat", self.re, self.im))

    def __repr__(self):
        return f"CRat({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if not self.re:
            return ("-" if self.im < 0 else "") + f"{im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{im}i"

    def conj(self):
        return CRat._of(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm2()
        if n == 0:
            raise NotInvertible("0 has no inverse in CRat")
        return CRat._of(self.re / n, -self.im / n)

    @classmethod
    def from_int(cls, n):
        return cls._of(Fraction(n), Fraction(0))

    @classmethod
    def from_literal(cls, lit):
        return cls._of(lit.re, lit.im)

    @classmethod
    def random(cls, rng, density=0.7):
        if rng.random() >= density:
            return cls.zero
        while True:
            re = Fraction(rng.randint(-3, 3), rng.choice((1, 1, 1, 2, 3)))
            im = Fraction(rng.randint(-2, 2), rng.choice((1, 1, 2)))
            if re or im:
                return cls._of(re, im)


CRat.zero = CRat(0)
CRat.one = CRat(1)
CRat.I = CRat(0, 1)

SEMIRINGS: dict[str, type[Semiring]] = {s.id: s for s in (Bool, NNRat, CRat)}


def get_semiring(ident: str) -> type[Semiring]:
    try:
        return SEMIRINGS[ident]
    except KeyError:
        raise SemiringError(
            f"unknown semiring {ident!r}; expected one of {sorted(SEMIRINGS)}") from None


# -- literals ------------------------------------------------------------------

@dataclass(frozen=True)
class Literal:
    """A parsed scalar literal, not yet bound to a semiring."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __str__(self):
        return str(CRat.from_literal(self))


_RAT = r"\d+(?:/\d+)?"
LITERAL_RE = re.compile(
    rf"""(?P<bool>true|false)
       |(?P<re>[+-]?{_RAT})(?:(?P<isign>[+-])(?P<im>(?:{_RAT})?)i)?
       |(?P<pure>[+-]?(?:{_RAT})?)i
    """,
    re.VERBOSE,
)


def parse_literal(text: str) -> Literal:
    """Parse ``0``, ``3/4``, ``1+2i``, ``2-1/3i``, ``-i``, ``true``...

    >>> parse_literal("2-1/3i")
    Literal(re=Fraction(2, 1), im=Fraction(-1, 3))
    """
    m = LITERAL_RE.fullmatch(text.strip())
    if m is None:
        raise SemiringError(f"bad scalar literal {text!r}")
    if m["bool"]:
        return Literal(Fraction(int(m["bool"] == "true")))
    if m["re"] is not None:
        re_ = Fraction(m["re"])
        if m["isign"] is None:
            return Literal(re_)
        im = Fraction(m["im"]) if m["im"] else Fraction(1)
        return Literal(re_, -im if m["isign"] == "-" else im)
    pure = m["pure"]
    if pure in ("", "+"):
        return Literal(Fraction(0), Fraction(1))
    if pure == "-":
        return Literal(Fraction(0), Fraction(-1))
    return Literal(Fraction(0), Fraction(pure))


# -- homomorphisms -------------------------------------------------------------

@dataclass(frozen=True)
class SemiringHom:
    """An element map between two semiring instances.

    ``lax`` marks maps that preserve products but only sub-preserve sums with
    respect to the (Boolean) order of the target.
    """

    name: str
    source: type[Semiring]
    target: type[Semiring]
    fn: Callable[[Semiring], Semiring]
    lax: bool = False
    preserves_involution: bool = True

    def __post_init__(self):
        if self.lax and not self.target.ordered:
            raise SemiringError("lax homomorphisms need an ordered target")

    def __call__(self, x):
        return apply_hom(self, x)


def apply_hom(h: SemiringHom, x: Semiring) -> Semiring:
    if type(x) is not h.source:
        raise SemiringMismatch(
            f"{h.name} expects {h.source.__name__}, got {type(x).__name__}")
    return h.fn(x)


def check_hom_laws(h: SemiringHom, xs, ys) -> list[str]:
    """Return a list of violated laws on the sample pairs (empty if none)."""
    S = h.target
    bad = []
    if h(h.source.zero) != S.zero:
        bad.append("h(0) != 0")
    if h(h.source.one) != S.one:
        bad.append("h(1) != 1")
    for x, y in zip(xs, ys):
        if h(x * y) != h(x) * h(y):
            bad.append(f"h({x}*{y}) != h({x})*h({y})")
        lhs, rhs = h(x + y), h(x) + h(y)
        if h.lax:
            if not lhs <= rhs:
                bad.append(f"h({x}+{y}) not <= h({x})+h({y})")
        elif lhs != rhs:
            bad.append(f"h({x}+{y}) != h({x})+h({y})")
        if h.preserves_involution and h(x.conj()) != h(x).conj():
            bad.append(f"h(conj {x}) != conj h({x})")
    return bad


def _support(x):
    return Bool.one if x else Bool.zero


SUPPORT = SemiringHom("crat-bool", CRat, Bool, _support, lax=True)
SUPPORT_NNRAT = SemiringHom("nnrat-bool", NNRat, Bool, _support)
EMBED_NNRAT = SemiringHom("nnrat-crat", NNRat, CRat, lambda x: CRat._of(x.q, Fraction(0)))
CONJUGATION = SemiringHom("crat-conj", CRat, CRat, lambda x: x.conj())

HOMS: dict[str, SemiringHom] = {
    h.name: h for h in (SUPPORT, SUPPORT_NNRAT, EMBED_NNRAT, CONJUGATION)
}


def get_hom(name: str) -> SemiringHom:
    try:
        return HOMS[name]
    except KeyError:
        raise SemiringError(f"unknown homomorphism {name!r}; choose from {sorted(HOMS)}") from None
