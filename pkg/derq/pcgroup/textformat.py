"""Plain-text presentation files.

    # Heisenberg group of order 5^3
    p 5
    n 3
    comm 2 1 = a3

Statements: ``p <prime>``, ``n <rank>``, optional ``weights w1 ... wn``,
``pow <i> = <word>`` and ``comm <j> <i> = <word>``. A word is ``1`` or
whitespace separated factors ``a<k>^<e>`` (``a<k>`` means exponent 1) with
strictly increasing ``k`` and ``e`` in 1..p-1. Omitted relations are trivial.
"""
import re
from pathlib import Path

from sympy import isprime

from ..errors import InputError, PresentationParseError
from .presentation import PcPresentation

FACTOR_RE = re.compile(r"^a(\d+)(?:\^(-?\d+))?$")


def parse_word(text, rank, prime, line=None):
    text = text.strip()
    exps = [0] * rank
    if text == "1":
        return tuple(exps)
    if not text:
        raise PresentationParseError("empty word", line)
    last = 0
    for factor in text.split():
        m = FACTOR_RE.match(factor)
        if not m:
            raise PresentationParseError(f"cannot read factor {factor!r}", line)
        k = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if not 1 <= k <= rank:
            raise PresentationParseError(f"generator a{k} out of range 1..{rank}", line)
        if k <= last:
            raise PresentationParseError("factors must have strictly increasing indices", line)
        if not 1 <= e < prime:
            raise PresentationParseError(f"exponent {e} of a{k} must lie in 1..{prime - 1}", line)
        exps[k - 1] = e
        last = k
    return tuple(exps)


def format_word(word):
    factors = [f"a{i + 1}" if e == 1 else f"a{i + 1}^{e}" for i, e in enumerate(word) if e]
    return " ".join(factors) if factors else "1"


def _int(token, what, line):
    try:
        return int(token)
    except ValueError:
        raise PresentationParseError(f"{what} must be an integer, got {token!r}", line) from None


def parse_presentation(text, name=None):
    prime = rank = weights = None
    powers, comms = {}, {}
    seen = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition("=")
        tokens = head.split()
        if not tokens:
            raise PresentationParseError("statement has no keyword", lineno)
        keyword = tokens[0]

        if keyword in ("p", "n", "weights"):
            if rest:
                raise PresentationParseError(f"unexpected '=' in {keyword} statement", lineno)
            if keyword in seen:
                raise PresentationParseError(f"duplicate {keyword} statement", lineno)
            seen[keyword] = lineno
            if keyword == "weights":
                weights = tuple(_int(t, "weight", lineno) for t in tokens[1:])
                continue
            if len(tokens) != 2:
                raise PresentationParseError(f"expected '{keyword} <integer>'", lineno)
            value = _int(tokens[1], keyword, lineno)
            if keyword == "p":
                if not isprime(value):
                    raise PresentationParseError(f"{value} is not a prime", lineno)
                prime = value
            else:
                if value < 0:
                    raise PresentationParseError("rank must be non-negative", lineno)
                rank = value
            continue

        if keyword not in ("pow", "comm"):
            raise PresentationParseError(f"unknown statement {keyword!r}", lineno)
        if prime is None or rank is None:
            raise PresentationParseError("'p' and 'n' must precede relations", lineno)
        if not rest and "=" not in line:
            raise PresentationParseError(f"expected '=' in {keyword} statement", lineno)
        word = parse_word(rest, rank, prime, lineno)

        if keyword == "pow":
            if len(tokens) != 2:
                raise PresentationParseError("expected 'pow <i> = <word>'", lineno)
            i = _int(tokens[1], "generator index", lineno)
            if not 1 <= i <= rank:
                raise PresentationParseError(f"generator a{i} out of range 1..{rank}", lineno)
            if i in powers:
                raise PresentationParseError(f"duplicate power relation for a{i}", lineno)
            if any(word[:i]):
                raise PresentationParseError(
                    f"tail of a{i}^p must only involve generators after a{i}", lineno
                )
            powers[i] = (word, lineno)
        else:
            if len(tokens) != 3:
                raise PresentationParseError("expected 'comm <j> <i> = <word>'", lineno)
            j = _int(tokens[1], "generator index", lineno)
            i = _int(tokens[2], "generator index", lineno)
            if not (1 <= i <= rank and 1 <= j <= rank):
                raise PresentationParseError(f"generator index out of range 1..{rank}", lineno)
            if j <= i:
                raise PresentationParseError(f"commutator [a{j},a{i}] must have j > i", lineno)
            if (j, i) in comms:
                raise PresentationParseError(f"duplicate relation for [a{j},a{i}]", lineno)
            if any(word[:j]):
                raise PresentationParseError(
                    f"tail of [a{j},a{i}] must only involve generators after a{j}", lineno
                )
            comms[(j, i)] = (word, lineno)

    if prime is None:
        raise PresentationParseError("missing 'p' statement")
    if rank is None:
        raise PresentationParseError("missing 'n' statement")
    if weights is not None:
        if len(weights) != rank:
            raise PresentationParseError(f"expected {rank} weights", seen["weights"])
        for (j, i), (word, lineno) in comms.items():
            floor = weights[j - 1] + weights[i - 1]
            if any(e and weights[k] < floor for k, e in enumerate(word)):
                raise PresentationParseError(
                    f"tail of [a{j},a{i}] involves a generator of weight below {floor}", lineno
                )

    try:
        return PcPresentation(
            prime,
            rank,
            {i: w for i, (w, _) in powers.items()},
            {k: w for k, (w, _) in comms.items()},
            weights=weights,
            name=name,
        )
    except InputError as e:
        if isinstance(e, PresentationParseError):
            raise
        raise PresentationParseError(str(e), seen.get("weights")) from e


def format_presentation(pres):
    lines = []
    if pres.name:
        lines.append(f"# {pres.name}")
    lines.append(f"p {pres.prime}")
    lines.append(f"n {pres.rank}")
    if pres.weights is not None:
        lines.append("weights " + " ".join(str(w) for w in pres.weights))
    for i, tail in sorted(pres.power_tails.items()):
        lines.append(f"pow {i} = {format_word(tail)}")
    for (j, i), tail in sorted(pres.commutator_tails.items()):
        lines.append(f"comm {j} {i} = {format_word(tail)}")
    return "\n".join(lines) + "\n"


def load_presentation(path):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror or e}") from e
    except UnicodeDecodeError as e:
        raise InputError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from e
    return parse_presentation(text, name=path.stem)
