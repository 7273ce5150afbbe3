"""Straight-line reference evaluators for every measure.

Deliberately independent of the package's optimized paths: everything here
works on plain Python sets and full indicator matrices (dicts keyed by
(parameter, element)), with exact fractions.  Tests assert that the package
measures agree with these evaluators on random instances.
"""

from __future__ import annotations

import math
from fractions import Fraction

from softsets.core import TypeOneSoftSet, TypeTwoSoftSet


def _params_union(a, b):
    return sorted(set(a.params) | set(b.params))


def oracle_euclidean(a: TypeOneSoftSet, b: TypeOneSoftSet) -> float:
    sym = len(set(a.params) ^ set(b.params))
    total = 0
    for p in set(a.params) & set(b.params):
        total += len(a.image(p) ^ b.image(p)) ** 2
    return sym + math.sqrt(total)


def oracle_norm_euclidean(a: TypeOneSoftSet, b: TypeOneSoftSet) -> float:
    union = set(a.params) | set(b.params)
    if not union:
        return 0.0
    sym = len(set(a.params) ^ set(b.params))
    chi = Fraction(0)
    for p in set(a.params) & set(b.params):
        u = a.image(p) | b.image(p)
        if u:
            chi += Fraction(len(a.image(p) ^ b.image(p)) ** 2, len(u))
    return sym / math.sqrt(len(union)) + math.sqrt(chi)


def oracle_param_distance(a: TypeOneSoftSet, b: TypeOneSoftSet) -> int:
    pa, pb = set(a.params), set(b.params)
    fa = set().union(*a.images) if a.images else set()
    fb = set().union(*b.images) if b.images else set()
    return (
        len(pa | pb) - len(pa & pb) + len(fa | fb) - len(fa & fb)
    )


def _indicator(s: TypeOneSoftSet, params, elements) -> dict:
    out = {}
    for p in params:
        img = s.image(p) if p in s.params else frozenset()
        for x in elements:
            out[(p, x)] = 1 if x in img else 0
    return out


def oracle_matrix_distance(a: TypeOneSoftSet, b: TypeOneSoftSet) -> int:
    params = _params_union(a, b)
    ia = _indicator(a, params, a.universe.elements)
    ib = _indicator(b, params, b.universe.elements)
    sym = len(set(a.params) ^ set(b.params))
    return sym + sum(abs(ia[k] - ib[k]) for k in ia)


def _footprint(f: TypeTwoSoftSet) -> set:
    out = set()
    for inner in f.inners:
        for img in inner.images:
            out |= img
    return out


def oracle_t2_param_distance(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> int:
    pa, pb = set(f.primary), set(g.primary)
    ea, eb = set(f.underlying), set(g.underlying)
    fa, fb = _footprint(f), _footprint(g)
    return (
        len(pa | pb) - len(pa & pb)
        + len(ea | eb) - len(ea & eb)
        + len(fa | fb) - len(fa & fb)
    )


def oracle_t2_matrix_distance(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> int:
    pa, pb = set(f.primary), set(g.primary)
    ea, eb = set(f.underlying), set(g.underlying)
    total = len(pa | pb) - len(pa & pb) + len(ea | eb) - len(ea & eb)
    for a in pa & pb:
        fi, gi = f.inner(a), g.inner(a)
        for b in set(fi.params) & set(gi.params):
            for x in f.universe.elements:
                total += abs(int(x in fi.image(b)) - int(x in gi.image(b)))
    return total


def _nd_divisor(f, g) -> int:
    return (
        len(f.universe.elements)
        * len(set(f.primary) | set(g.primary))
        * len(set(f.underlying) | set(g.underlying))
    )


def oracle_t2_norm_param_distance(f, g) -> Fraction:
    div = _nd_divisor(f, g)
    return Fraction(oracle_t2_param_distance(f, g), div) if div else Fraction(0)


def oracle_t2_norm_matrix_distance(f, g) -> Fraction:
    div = _nd_divisor(f, g)
    return Fraction(oracle_t2_matrix_distance(f, g), div) if div else Fraction(0)


def oracle_entropy(f: TypeTwoSoftSet) -> Fraction:
    elements = f.universe.elements
    all_images = [
        (a, b, inner.image(b))
        for a, inner in zip(f.primary, f.inners)
        for b in inner.params
    ]
    if all(not img for _, _, img in all_images):
        return Fraction(1)
    if all(img == set(elements) or img == frozenset(elements) for _, _, img in all_images):
        return Fraction(1)
    total = 0
    for x in elements:
        star = {a for a, _, img in all_images if x in img}
        dstar = {b for _, b, img in all_images if x in img}
        total += len(star) + len(dstar)
    if total == 0:
        return Fraction(1)
    return 1 - Fraction(2 * len(elements), total)


def oracle_profile(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> dict[str, Fraction]:
    scores = {}
    for a in sorted(set(f.primary) | set(g.primary)):
        if a not in f.primary or a not in g.primary:
            scores[a] = Fraction(0)
            continue
        fi, gi = f.inner(a), g.inner(a)
        shared = set(fi.params) & set(gi.params)
        union = set(fi.params) | set(gi.params)
        if not shared:
            scores[a] = Fraction(0)
            continue
        total = Fraction(0)
        for b in shared:
            u = fi.image(b) | gi.image(b)
            total += Fraction(len(fi.image(b) & gi.image(b)), len(u)) if u else Fraction(1)
        scores[a] = total / len(union)
    return scores


def oracle_mean_similarity(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> Fraction:
    shared = set(f.primary) & set(g.primary)
    if not shared:
        return Fraction(0)
    prof = oracle_profile(f, g)
    return sum((prof[a] for a in shared), Fraction(0)) / len(
        set(f.primary) | set(g.primary)
    )


def oracle_distance_similarity(f, g, oracle_distance) -> Fraction:
    return 1 / (1 + Fraction(oracle_distance(f, g)))
