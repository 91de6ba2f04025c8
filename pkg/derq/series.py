"""Derived and lower central series, small derived quotients and chain checks.

Indexing follows the usual conventions: ``G^(0) = G``, ``G^(1) = G'`` and
``gamma_1(G) = G``, ``gamma_2(G) = G'``. A derived quotient
``G^(d)/G^(d+1)`` is small when ``G^(d+1) != 1`` and it has order
``p^(2^d + 1)``. Everything here works on any ``GroupEngine``.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum

from .engine import GroupEngine, SubgroupHandle, frattini, has_cyclic_quotient, is_normal, join
from .errors import DomainError, InputError, PreconditionError
from .report import SeriesReport

logger = logging.getLogger(__name__)


class ChainClass(str, Enum):
    CH1 = "ch1"
    CH2 = "ch2"
    NEITHER = "neither"


@dataclass
class CheckResult:
    name: str
    passed: bool
    values: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    @property
    def status(self):
        return "pass" if self.passed else "fail"


def _whole(G):
    if isinstance(G, SubgroupHandle):
        return G
    if isinstance(G, GroupEngine):
        return G.whole()
    raise InputError(f"expected a group, got {type(G).__name__}")


def _comm(A, B):
    return A.engine.commutator_group(A, B)


def derived_series(G):
    terms = [_whole(G)]
    while not terms[-1].is_trivial():
        nxt = _comm(terms[-1], terms[-1])
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
    return terms


def lower_central_series(G):
    W = _whole(G)
    terms = [W]
    while not terms[-1].is_trivial():
        nxt = _comm(terms[-1], W)
        if nxt.order() == terms[-1].order():
            break
        terms.append(nxt)
    return terms


def lcs_term(lcs, i):
    """gamma_i from a computed lower central series (trivial past its end)."""
    if i <= len(lcs):
        return lcs[i - 1]
    return lcs[-1].engine.trivial()


def rc_chain(H, n, B=None):
    """[H, [H,B], [H,B,B], ...] of length n + 1; B defaults to the whole group."""
    B = _whole(B if B is not None else H.engine)
    chain = [H]
    for _ in range(n):
        chain.append(_comm(chain[-1], B))
    return chain


def _exps(terms):
    return [t.order_exp() for t in terms]


def small_indices(derived_exps):
    return [
        d
        for d in range(len(derived_exps) - 1)
        if derived_exps[d + 1] > 0 and derived_exps[d] - derived_exps[d + 1] == 2 ** d + 1
    ]


def chain_classify(G, d, derived=None):
    """Ch1 or Ch2 for a small derived quotient G^(d)/G^(d+1)."""
    W = _whole(G)
    derived = derived or derived_series(W)
    if d not in small_indices(_exps(derived)):
        raise PreconditionError(f"G^({d})/G^({d + 1}) is not a small derived quotient", reason="not_small")
    D = derived[d]
    # recomputed so that the terminal comparison does not reuse the series
    D1 = _comm(D, D)
    top = _comm(D, W)
    q = D.order_exp() - top.order_exp()
    if q == 1:
        steps = 2 ** d + 1
    elif q == 2:
        steps = 2 ** d
    else:
        return ChainClass.NEITHER
    chain = rc_chain(D, steps, W)
    strict = all(chain[k + 1].order() < chain[k].order() for k in range(steps))
    if strict and chain[-1].equals(D1):
        return ChainClass.CH1 if q == 1 else ChainClass.CH2
    return ChainClass.NEITHER


def hall_check(G, H, i, lcs=None):
    W = _whole(G)
    Hd = _comm(H, H)
    if Hd.is_trivial():
        raise PreconditionError("H is abelian", reason="abelian")
    if not is_normal(H, W):
        raise PreconditionError("H is not normal in G", reason="not_normal")
    lcs = lcs or lower_central_series(W)
    if not H.is_subgroup_of(lcs_term(lcs, i)):
        raise PreconditionError(f"H is not contained in gamma_{i}(G)", reason="not_in_lcs_term")
    order_exp = H.order_exp()
    quotient_exp = order_exp - Hd.order_exp()
    return CheckResult(
        "hall",
        quotient_exp >= i + 1 and order_exp >= i + 2,
        {"i": i, "quotient_exp": quotient_exp, "order_exp": order_exp},
    )


def cyclic_quotient_commutator_check(G, H):
    """G' = [G, H] whenever H is normal in G with G/H cyclic."""
    K = _whole(G)
    if not is_normal(H, K) or not H.is_subgroup_of(K):
        raise PreconditionError("H is not a normal subgroup of G", reason="not_normal")
    if not has_cyclic_quotient(K, H):
        raise PreconditionError("G/H is not cyclic", reason="not_cyclic")
    derived = _comm(K, K)
    mixed = _comm(K, H)
    return CheckResult(
        "lemma1b",
        derived.equals(mixed),
        {"derived_exp": derived.order_exp(), "mixed_exp": mixed.order_exp()},
    )


def inclusion1_check(G, A, B, i):
    """[A, gamma_i(B)] <= [A, B, ..., B] with i copies of B."""
    W = _whole(G)
    if not (is_normal(A, W) and is_normal(B, W)):
        raise PreconditionError("A and B must be normal in G", reason="not_normal")
    if i < 1:
        raise PreconditionError("i must be at least 1", reason="bad_index")
    gamma = B
    for _ in range(i - 1):
        gamma = _comm(gamma, B)
    left = _comm(A, gamma)
    right = rc_chain(A, i, B)[-1]
    return CheckResult(
        "inclusion1",
        left.is_subgroup_of(right),
        {"i": i, "left_exp": left.order_exp(), "right_exp": right.order_exp()},
    )


def degree_of_commutativity_zero(G, lcs=None):
    """[gamma_2, gamma_3] = gamma_5 for a group of maximal class."""
    W = _whole(G)
    lcs = lcs or lower_central_series(W)
    n = W.order_exp()
    c = len(lcs) - 1
    if c <= 1:
        raise PreconditionError("group is abelian", reason="abelian")
    if c != n - 1:
        raise PreconditionError("group is not of maximal class", reason="not_maximal_class")
    left = _comm(lcs_term(lcs, 2), lcs_term(lcs, 3))
    right = lcs_term(lcs, 5)
    return CheckResult(
        "degree_of_commutativity_zero",
        left.equals(right),
        {"left_exp": left.order_exp(), "gamma5_exp": right.order_exp()},
    )


BOUND_VARIANTS = {
    "hall": lambda d: 2 ** d + d,
    "mann": lambda d: 2 ** d + 2 * d - 2,
    "metabelian": lambda d: 2 ** d + 3 * d - 6,
}


def order_lower_bound(d, variant="hall"):
    """Lower bound for log_p |G| when G has derived length d + 1.

    All three variants are exponents of p; the metabelian one improves the
    linear term of the mann bound.
    """
    if variant not in BOUND_VARIANTS:
        raise InputError(f"unknown bound variant {variant!r}; choose from {', '.join(BOUND_VARIANTS)}")
    if d < 1:
        raise DomainError("the bounds are stated for d >= 1")
    return BOUND_VARIANTS[variant](d)


# -- the full scan ----------------------------------------------------------


def _run(checks, name, fn):
    try:
        result = fn()
    except PreconditionError as e:
        logger.debug("check %s skipped: %s", name, e)
        return
    checks[name] = "pass" if result else "fail"


def small_quotient_scan(G, inclusion_depth=3):
    W = _whole(G)
    engine = W.engine
    p = engine.p_of_group()
    derived = derived_series(W)
    lcs = lower_central_series(W)
    derived_exps = _exps(derived)
    lcs_exps = _exps(lcs)
    small = small_indices(derived_exps)
    logger.debug("scan p=%s derived=%s lcs=%s small=%s", p, derived_exps, lcs_exps, small)

    classes, quotients, tops = {}, {}, {}
    for d in small:
        tops[d] = _comm(derived[d], W)
        quotients[d] = derived_exps[d] - tops[d].order_exp()
        classes[d] = chain_classify(W, d, derived)

    report = SeriesReport(
        p=p,
        order_exp=derived_exps[0],
        derived_exps=derived_exps,
        lcs_exps=lcs_exps,
        small_ds=small,
        chain_classes={d: c.value for d, c in classes.items()},
        quotient_exps=quotients,
        nilpotency_class=len(lcs) - 1,
        metabelian=len(derived) <= 3,
    )
    checks = report.checks

    _run(checks, "derived_in_lcs", lambda: all(
        D.is_subgroup_of(lcs_term(lcs, 2 ** d)) for d, D in enumerate(derived)
    ))

    def hall_derived():
        for d, D in enumerate(derived[:-1]):
            if derived_exps[d + 1] == 0:
                continue
            if not hall_check(W, D, 2 ** d, lcs):
                return False
        return True

    _run(checks, "hall_derived", hall_derived)
    checks["mann_at_most_two"] = "pass" if len(small) <= 2 else "fail"

    def consecutive():
        if len(small) < 2:
            return True
        d = small[0]
        return (
            small == [d, d + 1]
            and classes[d] is ChainClass.CH2
            and classes[d + 1] is ChainClass.CH1
        )

    _run(checks, "small_consecutive", consecutive)

    if p is not None and p % 2 == 1:
        _run(checks, "theorem2_odd", lambda: all(
            classes[d] is ChainClass.CH1 and quotients[d] == 1 for d in small if d >= 1
        ))

    if small:
        _run(checks, "small_classified", lambda: all(
            classes[d] is not ChainClass.NEITHER for d in small
        ))
        _run(checks, "first_quotient_elementary", lambda: all(
            frattini(derived[d]).is_subgroup_of(tops[d]) for d in small if quotients[d] == 2
        ))
        _run(checks, "mann_chain", lambda: _mann_chain(W, derived, small, classes))
        _run(checks, "ch1_propagation", lambda: _ch1_propagation(derived, lcs, small, classes))

    def inclusions():
        for A in derived[:2]:
            for i in range(1, inclusion_depth + 1):
                if not inclusion1_check(W, A, W, i):
                    return False
        return True

    _run(checks, "inclusion1", inclusions)

    if len(small) == 2:
        if p is not None and p % 2 == 1:
            _run(checks, "two_small_shape", lambda: _two_small_shape(report, derived, lcs))
        _run(checks, "lemma1b_derived", lambda: _lemma1b_derived(W, derived))
        _run(checks, "degree_of_commutativity_zero", lambda: degree_of_commutativity_zero(W, lcs))

    return report


def _mann_chain(W, derived, small, classes):
    d = small[0]
    if classes[d] is ChainClass.CH1:
        return small == [d]
    if classes[d] is not ChainClass.CH2:
        return False
    if any(e not in (d, d + 1) for e in small):
        return False
    if d + 1 >= len(derived):
        return True
    nxt = derived[d + 1]
    return has_cyclic_quotient(nxt, _comm(nxt, W))


def _ch1_propagation(derived, lcs, small, classes):
    d = small[0]
    if classes[d] is not ChainClass.CH1:
        return True
    for e in range(1, len(derived) - d):
        term = derived[d + e]
        if term.is_trivial():
            break
        if not term.is_subgroup_of(lcs_term(lcs, 2 ** (d + e) + 2 ** (e - 1))):
            return False
    return True


def _two_small_shape(report, derived, lcs):
    second = derived[2] if len(derived) > 2 else None
    return (
        report.order_exp == 6
        and report.derived_exps[2] == 1
        and report.nilpotency_class == 5
        and second is not None
        and second.equals(lcs_term(lcs, 5))
    )


def _lemma1b_derived(W, derived):
    K = derived[1]
    H = join(_comm(K, W), derived[2])
    return cyclic_quotient_commutator_check(K, H)
