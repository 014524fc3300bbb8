"""Craig interpolation over wellformed derivations, with witness derivations.

``interpolate_strong`` takes a wellformed derivation of Γ ⊢ Δ together with a
split of its root into (Γ1, Γ2, Δ1, Δ2) and produces an interpolant C plus two
wellformed derivations witnessing Γ1 ⊢ Δ1, C and C, Γ2 ⊢ Δ2.  The interpolant
uses predicates positively (negatively) only where allowed by the polarities of
both halves of the split; ``verify`` checks all of that syntactically, without
trusting the construction.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .calculus import (
    AllL,
    AllR,
    AndL,
    AndR,
    BotL,
    Derivation,
    ExL,
    ExR,
    FormulaSet,
    Init,
    NotL,
    NotR,
    OrL,
    OrR,
    RuleInstance,
    Sequent,
    TopR,
    WL,
    WR,
    fset,
    is_wellformed,
    resolve_rule,
    root,
)
from .formulas import (
    BOT,
    TOP,
    And,
    Atom,
    Bot,
    FAll,
    FEx,
    Formula,
    Not,
    Or,
    Top,
    bind,
    inst,
    neg,
    polarity,
    pos,
)


class InterpolationError(Exception):
    """Base class for failures of the interpolation entry points."""


class NotWellFormedError(InterpolationError):
    """The input derivation has a node no rule instance justifies."""


class SplitMismatchError(InterpolationError):
    """The split does not recombine to the root sequent of the derivation."""


class UnreachableCaseError(InterpolationError):
    """Internal dispatch reached a case that valid inputs cannot produce."""


@dataclass(frozen=True)
class SplitSequent:
    """A sequent Γ1∪Γ2 ⊢ Δ1∪Δ2 with each side split into two parts.

    Parts may overlap; a formula listed in both parts of a side is treated as
    belonging to both.
    """

    gamma1: FormulaSet
    gamma2: FormulaSet
    delta1: FormulaSet
    delta2: FormulaSet

    def sequent(self) -> Sequent:
        return Sequent(self.gamma1 | self.gamma2, self.delta1 | self.delta2)

    def matches(self, seq: Sequent) -> bool:
        return self.sequent() == seq


@dataclass(frozen=True)
class InterpolationResult:
    interpolant: Formula
    left_witness: Derivation
    right_witness: Derivation


#: Names of all interpolation case branches, used by the coverage counters.
CASE_NAMES = (
    "init-g1d1",
    "init-g1d2",
    "init-g2d1",
    "init-g2d2",
    "botl-g1",
    "botl-g2",
    "topr-d1",
    "topr-d2",
    "andl-g1",
    "andl-g2",
    "andr-d1",
    "andr-d2",
    "orl-g1",
    "orl-g2",
    "orr-d1",
    "orr-d2",
    "notl-g1",
    "notl-g2",
    "notr-d1",
    "notr-d2",
    "alll-g1",
    "alll-g2",
    "allr-d1",
    "allr-d2",
    "exl-g1",
    "exl-g2",
    "exr-d1",
    "exr-d2",
    "wl-both",
    "wl-g1-only",
    "wl-g2-only",
    "wl-impossible",
    "wr-both",
    "wr-d1-only",
    "wr-d2-only",
    "wr-impossible",
)

_counters: Counter[str] = Counter()


def reset_case_counters() -> None:
    _counters.clear()


def case_counters() -> dict[str, int]:
    """Snapshot of how often each case branch has run since the last reset."""
    return {name: _counters[name] for name in CASE_NAMES}


def _hit(name: str) -> None:
    _counters[name] += 1


def interpolate_strong(d: Derivation, split: SplitSequent) -> InterpolationResult:
    """Interpolate a wellformed derivation along a split of its root."""
    if not is_wellformed(d):
        raise NotWellFormedError("derivation is not wellformed")
    if not split.matches(root(d)):
        raise SplitMismatchError(
            "split does not recombine to the derivation root: "
            f"{split.sequent()!r} vs {root(d)!r}"
        )
    return _interpolate(d, split)


def interpolate(d: Derivation) -> InterpolationResult:
    """Interpolate with the weak split: whole antecedent left, succedent right."""
    seq = root(d)
    return interpolate_strong(d, SplitSequent(seq.antecedent, FormulaSet(), FormulaSet(), seq.succedent))


def _rule(d: Derivation) -> RuleInstance:
    inst_ = resolve_rule(d)
    if inst_ is None:  # entry point validated wellformedness, so this cannot happen
        raise UnreachableCaseError(f"unresolvable node in validated derivation: {d.tag}")
    return inst_


def _interpolate(d: Derivation, split: SplitSequent) -> InterpolationResult:
    g1, g2 = split.gamma1, split.gamma2
    d1, d2 = split.delta1, split.delta2

    if isinstance(d, Init):
        return _interp_init(g1, g2, d1, d2)
    if isinstance(d, BotL):
        return _interp_botl(g1, g2, d1, d2)
    if isinstance(d, TopR):
        return _interp_topr(g1, g2, d1, d2)
    if isinstance(d, AndL):
        return _interp_andl(d, g1, g2, d1, d2)
    if isinstance(d, AndR):
        return _interp_andr(d, g1, g2, d1, d2)
    if isinstance(d, OrL):
        return _interp_orl(d, g1, g2, d1, d2)
    if isinstance(d, OrR):
        return _interp_orr(d, g1, g2, d1, d2)
    if isinstance(d, NotL):
        return _interp_notl(d, g1, g2, d1, d2)
    if isinstance(d, NotR):
        return _interp_notr(d, g1, g2, d1, d2)
    if isinstance(d, AllL):
        return _interp_alll(d, g1, g2, d1, d2)
    if isinstance(d, AllR):
        return _interp_allr(d, g1, g2, d1, d2)
    if isinstance(d, ExL):
        return _interp_exl(d, g1, g2, d1, d2)
    if isinstance(d, ExR):
        return _interp_exr(d, g1, g2, d1, d2)
    if isinstance(d, WL):
        return _interp_wl(d, g1, g2, d1, d2)
    if isinstance(d, WR):
        return _interp_wr(d, g1, g2, d1, d2)
    raise TypeError(f"not a derivation: {d!r}")


def _interp_init(g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    for a in g1:
        if a in d1:
            _hit("init-g1d1")
            return InterpolationResult(
                BOT,
                Init(Sequent(g1, d1.add(BOT))),
                BotL(Sequent(g2.add(BOT), d2)),
            )
    for a in g1:
        if a in d2:
            _hit("init-g1d2")
            return InterpolationResult(
                a,
                Init(Sequent(g1, d1.add(a))),
                Init(Sequent(g2.add(a), d2)),
            )
    for a in g2:
        if a in d1:
            _hit("init-g2d1")
            c = Not(a)
            return InterpolationResult(
                c,
                NotR(Sequent(g1, d1.add(c)), Init(Sequent(g1.add(a), d1.add(c)))),
                NotL(Sequent(g2.add(c), d2), Init(Sequent(g2.add(c), d2.add(a)))),
            )
    for a in g2:
        if a in d2:
            _hit("init-g2d2")
            return InterpolationResult(
                TOP,
                TopR(Sequent(g1, d1.add(TOP))),
                Init(Sequent(g2.add(TOP), d2)),
            )
    raise UnreachableCaseError("Init node with no shared formula in any part pair")


def _interp_botl(g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    if BOT in g1:
        _hit("botl-g1")
        return InterpolationResult(
            BOT,
            BotL(Sequent(g1, d1.add(BOT))),
            BotL(Sequent(g2.add(BOT), d2)),
        )
    if BOT in g2:
        _hit("botl-g2")
        return InterpolationResult(
            TOP,
            TopR(Sequent(g1, d1.add(TOP))),
            BotL(Sequent(g2.add(TOP), d2)),
        )
    raise UnreachableCaseError("BotL node with falsum in neither antecedent part")


def _interp_topr(g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    if TOP in d1:
        _hit("topr-d1")
        return InterpolationResult(
            BOT,
            TopR(Sequent(g1, d1.add(BOT))),
            BotL(Sequent(g2.add(BOT), d2)),
        )
    if TOP in d2:
        _hit("topr-d2")
        return InterpolationResult(
            TOP,
            TopR(Sequent(g1, d1.add(TOP))),
            TopR(Sequent(g2.add(TOP), d2)),
        )
    raise UnreachableCaseError("TopR node with verum in neither succedent part")


def _interp_andl(d: AndL, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert isinstance(f, And)
    a, b = f.left, f.right
    if f in g1:
        _hit("andl-g1")
        res = _interpolate(d.sub, SplitSequent(g1 | fset(a, b), g2, d1, d2))
        c = res.interpolant
        return InterpolationResult(
            c,
            AndL(Sequent(g1, d1.add(c)), res.left_witness),
            res.right_witness,
        )
    _hit("andl-g2")
    res = _interpolate(d.sub, SplitSequent(g1, g2 | fset(a, b), d1, d2))
    c = res.interpolant
    return InterpolationResult(
        c,
        res.left_witness,
        AndL(Sequent(g2.add(c), d2), res.right_witness),
    )


def _interp_orr(d: OrR, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert isinstance(f, Or)
    a, b = f.left, f.right
    if f in d1:
        _hit("orr-d1")
        res = _interpolate(d.sub, SplitSequent(g1, g2, d1 | fset(a, b), d2))
        c = res.interpolant
        return InterpolationResult(
            c,
            OrR(Sequent(g1, d1.add(c)), res.left_witness),
            res.right_witness,
        )
    _hit("orr-d2")
    res = _interpolate(d.sub, SplitSequent(g1, g2, d1, d2 | fset(a, b)))
    c = res.interpolant
    return InterpolationResult(
        c,
        res.left_witness,
        OrR(Sequent(g2.add(c), d2), res.right_witness),
    )


def _interp_notl(d: NotL, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert isinstance(f, Not)
    a = f.sub
    if f in g1:
        _hit("notl-g1")
        res = _interpolate(d.sub, SplitSequent(g1, g2, d1.add(a), d2))
        c = res.interpolant
        return InterpolationResult(
            c,
            NotL(Sequent(g1, d1.add(c)), res.left_witness),
            res.right_witness,
        )
    _hit("notl-g2")
    res = _interpolate(d.sub, SplitSequent(g1, g2, d1, d2.add(a)))
    c = res.interpolant
    return InterpolationResult(
        c,
        res.left_witness,
        NotL(Sequent(g2.add(c), d2), res.right_witness),
    )


def _interp_notr(d: NotR, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert isinstance(f, Not)
    a = f.sub
    if f in d1:
        _hit("notr-d1")
        res = _interpolate(d.sub, SplitSequent(g1.add(a), g2, d1, d2))
        c = res.interpolant
        return InterpolationResult(
            c,
            NotR(Sequent(g1, d1.add(c)), res.left_witness),
            res.right_witness,
        )
    _hit("notr-d2")
    res = _interpolate(d.sub, SplitSequent(g1, g2.add(a), d1, d2))
    c = res.interpolant
    return InterpolationResult(
        c,
        res.left_witness,
        NotR(Sequent(g2.add(c), d2), res.right_witness),
    )


def _interp_andr(d: AndR, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert isinstance(f, And)
    a, b = f.left, f.right
    if f in d1:
        _hit("andr-d1")
        resl = _interpolate(d.left, SplitSequent(g1, g2, d1.add(a), d2))
        resr = _interpolate(d.right, SplitSequent(g1, g2, d1.add(b), d2))
        cl, cr = resl.interpolant, resr.interpolant
        c = Or(cl, cr)
        n1 = WR(Sequent(g1, d1 | fset(a, cl, c)), resl.left_witness)
        n2 = WR(Sequent(g1, d1 | fset(a, cl, c, cr)), n1)
        n3 = OrR(Sequent(g1, d1 | fset(a, c)), n2)
        m1 = WR(Sequent(g1, d1 | fset(b, cr, c)), resr.left_witness)
        m2 = WR(Sequent(g1, d1 | fset(b, cr, c, cl)), m1)
        m3 = OrR(Sequent(g1, d1 | fset(b, c)), m2)
        dl = AndR(Sequent(g1, d1.add(c)), n3, m3)
        p1 = WL(Sequent(g2 | fset(c, cl), d2), resl.right_witness)
        q1 = WL(Sequent(g2 | fset(c, cr), d2), resr.right_witness)
        dr = OrL(Sequent(g2.add(c), d2), p1, q1)
        return InterpolationResult(c, dl, dr)
    _hit("andr-d2")
    resl = _interpolate(d.left, SplitSequent(g1, g2, d1, d2.add(a)))
    resr = _interpolate(d.right, SplitSequent(g1, g2, d1, d2.add(b)))
    cl, cr = resl.interpolant, resr.interpolant
    c = And(cl, cr)
    n1 = WR(Sequent(g1, d1 | fset(cl, c)), resl.left_witness)
    m1 = WR(Sequent(g1, d1 | fset(cr, c)), resr.left_witness)
    dl = AndR(Sequent(g1, d1.add(c)), n1, m1)
    p1 = WL(Sequent(g2 | fset(cr, cl), d2.add(a)), resl.right_witness)
    p2 = WL(Sequent(g2 | fset(c, cr, cl), d2.add(a)), p1)
    p3 = AndL(Sequent(g2.add(c), d2.add(a)), p2)
    q1 = WL(Sequent(g2 | fset(cl, cr), d2.add(b)), resr.right_witness)
    q2 = WL(Sequent(g2 | fset(c, cl, cr), d2.add(b)), q1)
    q3 = AndL(Sequent(g2.add(c), d2.add(b)), q2)
    dr = AndR(Sequent(g2.add(c), d2), p3, q3)
    return InterpolationResult(c, dl, dr)


def _interp_orl(d: OrL, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert isinstance(f, Or)
    a, b = f.left, f.right
    if f in g1:
        _hit("orl-g1")
        resl = _interpolate(d.left, SplitSequent(g1.add(a), g2, d1, d2))
        resr = _interpolate(d.right, SplitSequent(g1.add(b), g2, d1, d2))
        cl, cr = resl.interpolant, resr.interpolant
        c = Or(cl, cr)
        n1 = WR(Sequent(g1.add(a), d1 | fset(cl, c)), resl.left_witness)
        n2 = WR(Sequent(g1.add(a), d1 | fset(cl, c, cr)), n1)
        n3 = OrR(Sequent(g1.add(a), d1.add(c)), n2)
        m1 = WR(Sequent(g1.add(b), d1 | fset(cr, c)), resr.left_witness)
        m2 = WR(Sequent(g1.add(b), d1 | fset(cr, c, cl)), m1)
        m3 = OrR(Sequent(g1.add(b), d1.add(c)), m2)
        dl = OrL(Sequent(g1, d1.add(c)), n3, m3)
        p1 = WL(Sequent(g2 | fset(c, cl), d2), resl.right_witness)
        q1 = WL(Sequent(g2 | fset(c, cr), d2), resr.right_witness)
        dr = OrL(Sequent(g2.add(c), d2), p1, q1)
        return InterpolationResult(c, dl, dr)
    _hit("orl-g2")
    resl = _interpolate(d.left, SplitSequent(g1, g2.add(a), d1, d2))
    resr = _interpolate(d.right, SplitSequent(g1, g2.add(b), d1, d2))
    cl, cr = resl.interpolant, resr.interpolant
    c = And(cl, cr)
    n1 = WR(Sequent(g1, d1 | fset(cl, c)), resl.left_witness)
    m1 = WR(Sequent(g1, d1 | fset(cr, c)), resr.left_witness)
    dl = AndR(Sequent(g1, d1.add(c)), n1, m1)
    p1 = WL(Sequent(g2 | fset(a, cr, cl), d2), resl.right_witness)
    p2 = WL(Sequent(g2 | fset(a, c, cr, cl), d2), p1)
    p3 = AndL(Sequent(g2 | fset(a, c), d2), p2)
    q1 = WL(Sequent(g2 | fset(b, cl, cr), d2), resr.right_witness)
    q2 = WL(Sequent(g2 | fset(b, c, cl, cr), d2), q1)
    q3 = AndL(Sequent(g2 | fset(b, c), d2), q2)
    dr = OrL(Sequent(g2.add(c), d2), p3, q3)
    return InterpolationResult(c, dl, dr)


def _interp_alll(d: AllL, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    rule = _rule(d)
    f = rule.analysed
    assert isinstance(f, FAll) and rule.term is not None
    e = inst("all", rule.term, f)
    if f in g1:
        _hit("alll-g1")
        res = _interpolate(d.sub, SplitSequent(g1.add(e), g2, d1, d2))
        c = res.interpolant
        return InterpolationResult(
            c,
            AllL(Sequent(g1, d1.add(c)), res.left_witness),
            res.right_witness,
        )
    _hit("alll-g2")
    res = _interpolate(d.sub, SplitSequent(g1, g2.add(e), d1, d2))
    c = res.interpolant
    return InterpolationResult(
        c,
        res.left_witness,
        AllL(Sequent(g2.add(c), d2), res.right_witness),
    )


def _interp_exr(d: ExR, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    rule = _rule(d)
    f = rule.analysed
    assert isinstance(f, FEx) and rule.term is not None
    e = inst("ex", rule.term, f)
    if f in d1:
        _hit("exr-d1")
        res = _interpolate(d.sub, SplitSequent(g1, g2, d1.add(e), d2))
        c = res.interpolant
        return InterpolationResult(
            c,
            ExR(Sequent(g1, d1.add(c)), res.left_witness),
            res.right_witness,
        )
    _hit("exr-d2")
    res = _interpolate(d.sub, SplitSequent(g1, g2, d1, d2.add(e)))
    c = res.interpolant
    return InterpolationResult(
        c,
        res.left_witness,
        ExR(Sequent(g2.add(c), d2), res.right_witness),
    )


def _interp_allr(d: AllR, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    rule = _rule(d)
    f = rule.analysed
    assert isinstance(f, FAll) and rule.eigen is not None
    a = rule.eigen
    body = inst("all", a, f)
    if f in d1:
        _hit("allr-d1")
        res = _interpolate(d.sub, SplitSequent(g1, g2, d1.add(body), d2))
        cp = res.interpolant
        c = bind("ex", a, cp)
        w1 = WR(Sequent(g1, d1 | fset(body, cp, c)), res.left_witness)
        w2 = ExR(Sequent(g1, d1 | fset(body, c)), w1)
        dl = AllR(Sequent(g1, d1.add(c)), w2)
        v1 = WL(Sequent(g2 | fset(c, cp), d2), res.right_witness)
        dr = ExL(Sequent(g2.add(c), d2), v1)
        return InterpolationResult(c, dl, dr)
    _hit("allr-d2")
    res = _interpolate(d.sub, SplitSequent(g1, g2, d1, d2.add(body)))
    cp = res.interpolant
    c = bind("all", a, cp)
    w1 = WR(Sequent(g1, d1 | fset(cp, c)), res.left_witness)
    dl = AllR(Sequent(g1, d1.add(c)), w1)
    v1 = WL(Sequent(g2 | fset(c, cp), d2.add(body)), res.right_witness)
    v2 = AllL(Sequent(g2.add(c), d2.add(body)), v1)
    dr = AllR(Sequent(g2.add(c), d2), v2)
    return InterpolationResult(c, dl, dr)


def _interp_exl(d: ExL, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    rule = _rule(d)
    f = rule.analysed
    assert isinstance(f, FEx) and rule.eigen is not None
    a = rule.eigen
    body = inst("ex", a, f)
    if f in g1:
        _hit("exl-g1")
        res = _interpolate(d.sub, SplitSequent(g1.add(body), g2, d1, d2))
        cp = res.interpolant
        c = bind("ex", a, cp)
        w1 = WR(Sequent(g1.add(body), d1 | fset(cp, c)), res.left_witness)
        w2 = ExR(Sequent(g1.add(body), d1.add(c)), w1)
        dl = ExL(Sequent(g1, d1.add(c)), w2)
        v1 = WL(Sequent(g2 | fset(c, cp), d2), res.right_witness)
        dr = ExL(Sequent(g2.add(c), d2), v1)
        return InterpolationResult(c, dl, dr)
    _hit("exl-g2")
    res = _interpolate(d.sub, SplitSequent(g1, g2.add(body), d1, d2))
    cp = res.interpolant
    c = bind("all", a, cp)
    w1 = WR(Sequent(g1, d1 | fset(cp, c)), res.left_witness)
    dl = AllR(Sequent(g1, d1.add(c)), w1)
    v1 = WL(Sequent(g2 | fset(body, c, cp), d2), res.right_witness)
    v2 = AllL(Sequent(g2 | fset(body, c), d2), v1)
    dr = ExL(Sequent(g2.add(c), d2), v2)
    return InterpolationResult(c, dl, dr)


def _interp_wl(d: WL, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert f is not None
    in1, in2 = f in g1, f in g2
    if in1 and in2:
        _hit("wl-both")
    elif in1:
        _hit("wl-g1-only")
    elif in2:
        _hit("wl-g2-only")
    else:
        _hit("wl-impossible")
        raise UnreachableCaseError("weakened formula missing from both antecedent parts")
    gp = root(d.sub).antecedent
    res = _interpolate(d.sub, SplitSequent(gp & g1, gp & g2, d1, d2))
    c = res.interpolant
    dl = WL(Sequent(g1, d1.add(c)), res.left_witness) if in1 else res.left_witness
    dr = WL(Sequent(g2.add(c), d2), res.right_witness) if in2 else res.right_witness
    return InterpolationResult(c, dl, dr)


def _interp_wr(d: WR, g1: FormulaSet, g2: FormulaSet, d1: FormulaSet, d2: FormulaSet) -> InterpolationResult:
    f = _rule(d).analysed
    assert f is not None
    in1, in2 = f in d1, f in d2
    if in1 and in2:
        _hit("wr-both")
    elif in1:
        _hit("wr-d1-only")
    elif in2:
        _hit("wr-d2-only")
    else:
        _hit("wr-impossible")
        raise UnreachableCaseError("weakened formula missing from both succedent parts")
    dp = root(d.sub).succedent
    res = _interpolate(d.sub, SplitSequent(g1, g2, dp & d1, dp & d2))
    c = res.interpolant
    dl = WR(Sequent(g1, d1.add(c)), res.left_witness) if in1 else res.left_witness
    dr = WR(Sequent(g2.add(c), d2), res.right_witness) if in2 else res.right_witness
    return InterpolationResult(c, dl, dr)


#: Conjunct names of the verifier report, in output order.
VERIFY_CONJUNCTS = (
    "wellformed_left",
    "wellformed_right",
    "root_left",
    "root_right",
    "pos_left",
    "pos_right",
    "neg_left",
    "neg_right",
)


@dataclass
class VerifyReport:
    conjuncts: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.conjuncts.values())


def _pos_union(fs: FormulaSet) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for f in fs:
        out |= pos(f)
    return out


def _neg_union(fs: FormulaSet) -> frozenset[int]:
    out: frozenset[int] = frozenset()
    for f in fs:
        out |= neg(f)
    return out


def verify(split: SplitSequent, result: InterpolationResult) -> VerifyReport:
    """Check an interpolation result syntactically, trusting nothing.

    The report has one conjunct per requirement: both witnesses wellformed,
    both witness roots equal to the expected split sequents, and the positive
    and negative predicates of the interpolant within the polarity bounds of
    each half of the split.
    """
    c = result.interpolant
    cpos, cneg = polarity(c)
    conjuncts = {
        "wellformed_left": is_wellformed(result.left_witness),
        "wellformed_right": is_wellformed(result.right_witness),
        "root_left": root(result.left_witness) == Sequent(split.gamma1, split.delta1.add(c)),
        "root_right": root(result.right_witness) == Sequent(split.gamma2.add(c), split.delta2),
        "pos_left": cpos <= _pos_union(split.gamma1) | _neg_union(split.delta1),
        "pos_right": cpos <= _neg_union(split.gamma2) | _pos_union(split.delta2),
        "neg_left": cneg <= _neg_union(split.gamma1) | _pos_union(split.delta1),
        "neg_right": cneg <= _pos_union(split.gamma2) | _neg_union(split.delta2),
    }
    return VerifyReport(conjuncts)


def simplify_bool(f: Formula) -> Formula:
    """Remove constant subformulas using the unit and absorption laws of ⊥/⊤.

    A single bottom-up pass; the result contains Bot/Top only as the whole
    formula.
    """
    if isinstance(f, (Atom, Bot, Top)):
        return f
    if isinstance(f, And):
        left = simplify_bool(f.left)
        right = simplify_bool(f.right)
        if isinstance(left, Bot) or isinstance(right, Bot):
            return BOT
        if isinstance(left, Top):
            return right
        if isinstance(right, Top):
            return left
        return And(left, right)
    if isinstance(f, Or):
        left = simplify_bool(f.left)
        right = simplify_bool(f.right)
        if isinstance(left, Top) or isinstance(right, Top):
            return TOP
        if isinstance(left, Bot):
            return right
        if isinstance(right, Bot):
            return left
        return Or(left, right)
    if isinstance(f, Not):
        sub = simplify_bool(f.sub)
        if isinstance(sub, Bot):
            return TOP
        if isinstance(sub, Top):
            return BOT
        return Not(sub)
    if isinstance(f, FAll):
        body = simplify_bool(f.body)
        if isinstance(body, (Bot, Top)):
            return body
        return FAll(body)
    if isinstance(f, FEx):
        body = simplify_bool(f.body)
        if isinstance(body, (Bot, Top)):
            return body
        return FEx(body)
    raise TypeError(f"not a formula: {f!r}")
