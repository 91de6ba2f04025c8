from .collector import Collector
from .consistency import consistency_check, layer_equations, overlap_tests
from .presentation import (
    ExponentWord,
    PcPresentation,
    generator_word,
    identity_word,
    leading_index,
)
from .textformat import format_presentation, format_word, load_presentation, parse_presentation


def normalize(word, pres):
    return pres.collector.normalize(word)


def multiply(u, v, pres):
    return pres.collector.multiply(u, v)


def inverse(u, pres):
    return pres.collector.inverse(u)


def power(u, k, pres):
    return pres.collector.power(u, k)


def commutator(u, v, pres):
    return pres.collector.commutator(u, v)


def element_count(pres):
    return pres.element_count()


__all__ = [
    "Collector",
    "ExponentWord",
    "PcPresentation",
    "commutator",
    "consistency_check",
    "element_count",
    "format_presentation",
    "format_word",
    "generator_word",
    "identity_word",
    "inverse",
    "layer_equations",
    "leading_index",
    "load_presentation",
    "multiply",
    "normalize",
    "overlap_tests",
    "parse_presentation",
    "power",
]
