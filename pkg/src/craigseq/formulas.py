"""First-order formulas with de Bruijn binders and their basic operations.

Variables are natural numbers.  A quantifier binds index 0 of its body; free
variables inside the body are shifted up by one.  ``bind`` and ``inst`` convert
between a named free variable and the bound index, so callers can work with
named variables and never touch raw indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Literal, NamedTuple

VarId = int
PredId = int
Quantifier = Literal["all", "ex"]


class Formula:
    """Base class of all formula nodes.  Instances are immutable and hashable."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    pred: PredId
    args: tuple[VarId, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class FAll(Formula):
    body: Formula


@dataclass(frozen=True)
class FEx(Formula):
    body: Formula


BOT = Bot()
TOP = Top()


def _lift(s: Callable[[VarId], VarId]) -> Callable[[VarId], VarId]:
    """Shift a renaming under one binder: index 0 is untouched."""
    return lambda v: 0 if v == 0 else s(v - 1) + 1


def rename_vars(s: Callable[[VarId], VarId], f: Formula) -> Formula:
    """Apply the total variable renaming ``s``, lifted under binders."""
    if isinstance(f, Atom):
        return Atom(f.pred, tuple(s(v) for v in f.args))
    if isinstance(f, (Bot, Top)):
        return f
    if isinstance(f, And):
        return And(rename_vars(s, f.left), rename_vars(s, f.right))
    if isinstance(f, Or):
        return Or(rename_vars(s, f.left), rename_vars(s, f.right))
    if isinstance(f, Not):
        return Not(rename_vars(s, f.sub))
    if isinstance(f, FAll):
        return FAll(rename_vars(_lift(s), f.body))
    if isinstance(f, FEx):
        return FEx(rename_vars(_lift(s), f.body))
    raise TypeError(f"not a formula: {f!r}")


def bind(q: Quantifier, a: VarId, f: Formula) -> Formula:
    """Quantify ``f`` over the named variable ``a``.

    Occurrences of ``a`` become the bound index; every other variable is
    shifted up to make room.
    """
    body = rename_vars(lambda v: 0 if v == a else v + 1, f)
    return FAll(body) if q == "all" else FEx(body)


def inst(q: Quantifier, t: VarId, f: Formula) -> Formula:
    """Open the ``q``-quantified formula ``f`` with the variable ``t``.

    Partial: ``f`` must be headed by the matching quantifier.
    """
    if q == "all":
        if not isinstance(f, FAll):
            raise ValueError(f"inst('all', ...) needs a universally quantified formula, got {f!r}")
        body = f.body
    else:
        if not isinstance(f, FEx):
            raise ValueError(f"inst('ex', ...) needs an existentially quantified formula, got {f!r}")
        body = f.body
    return rename_vars(lambda v: t if v == 0 else v - 1, body)


def pre_suc(xs: Iterable[VarId]) -> list[VarId]:
    """Drop zeros and shift the remaining indices down by one."""
    return [v - 1 for v in xs if v > 0]


def free_vars(f: Formula) -> list[VarId]:
    """Free variables of ``f`` in syntactic order, duplicates preserved."""
    if isinstance(f, Atom):
        return list(f.args)
    if isinstance(f, (Bot, Top)):
        return []
    if isinstance(f, (And, Or)):
        return free_vars(f.left) + free_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.sub)
    if isinstance(f, (FAll, FEx)):
        return pre_suc(free_vars(f.body))
    raise TypeError(f"not a formula: {f!r}")


class Polarity(NamedTuple):
    positives: frozenset[PredId]
    negatives: frozenset[PredId]


_EMPTY_POLARITY = Polarity(frozenset(), frozenset())


def polarity(f: Formula) -> Polarity:
    """Predicate identifiers occurring positively and negatively in ``f``."""
    if isinstance(f, Atom):
        return Polarity(frozenset((f.pred,)), frozenset())
    if isinstance(f, (Bot, Top)):
        return _EMPTY_POLARITY
    if isinstance(f, (And, Or)):
        pl = polarity(f.left)
        pr = polarity(f.right)
        return Polarity(pl.positives | pr.positives, pl.negatives | pr.negatives)
    if isinstance(f, Not):
        p = polarity(f.sub)
        return Polarity(p.negatives, p.positives)
    if isinstance(f, (FAll, FEx)):
        return polarity(f.body)
    raise TypeError(f"not a formula: {f!r}")


def pos(f: Formula) -> frozenset[PredId]:
    return polarity(f).positives


def neg(f: Formula) -> frozenset[PredId]:
    return polarity(f).negatives


def _encode(f: Formula, out: list[int]) -> None:
    if isinstance(f, Atom):
        out.append(0)
        out.append(f.pred)
        out.append(len(f.args))
        out.extend(f.args)
    elif isinstance(f, Bot):
        out.append(1)
    elif isinstance(f, Top):
        out.append(2)
    elif isinstance(f, And):
        out.append(3)
        _encode(f.left, out)
        _encode(f.right, out)
    elif isinstance(f, Or):
        out.append(4)
        _encode(f.left, out)
        _encode(f.right, out)
    elif isinstance(f, Not):
        out.append(5)
        _encode(f.sub, out)
    elif isinstance(f, FAll):
        out.append(6)
        _encode(f.body, out)
    elif isinstance(f, FEx):
        out.append(7)
        _encode(f.body, out)
    else:
        raise TypeError(f"not a formula: {f!r}")


def canonical_key(f: Formula) -> tuple[int, ...]:
    """Flat preorder encoding of ``f``.

    Lexicographic order on keys is a total order on formulas, and two formulas
    have equal keys exactly when they are equal.
    """
    out: list[int] = []
    _encode(f, out)
    return tuple(out)


def canonical_compare(a: Formula, b: Formula) -> int:
    """Three-way comparison in the canonical formula order."""
    ka = canonical_key(a)
    kb = canonical_key(b)
    if ka < kb:
        return -1
    if ka > kb:
        return 1
    return 0


def match_inst(quantified: Formula, instance: Formula) -> VarId | None:
    """Find a variable ``t`` with ``inst(q, t, quantified) == instance``.

    The quantifier is read off the head of ``quantified``; ``None`` when the
    head is not a quantifier or no variable works.  When several work (the
    vacuous case) the smallest is returned.
    """
    if isinstance(quantified, FAll):
        q: Quantifier = "all"
    elif isinstance(quantified, FEx):
        q = "ex"
    else:
        return None
    limit = max(free_vars(instance), default=-1) + 2
    for t in range(limit):
        if inst(q, t, quantified) == instance:
            return t
    return None


def match_bind(quantified: Formula, body: Formula, forbidden: Iterable[VarId]) -> VarId | None:
    """Find a variable ``a`` outside ``forbidden`` with ``bind(q, a, body) == quantified``.

    The quantifier is read off the head of ``quantified``.  When the binder is
    vacuous any fresh variable works and the smallest is returned; otherwise
    the answer is the unique variable abstracted by ``quantified``.
    """
    if isinstance(quantified, FAll):
        q: Quantifier = "all"
    elif isinstance(quantified, FEx):
        q = "ex"
    else:
        return None
    bad = set(forbidden)
    fv = set(free_vars(body))
    limit = max(bad | fv, default=-1) + 2
    for a in range(limit):
        if a not in bad and bind(q, a, body) == quantified:
            return a
    return None
