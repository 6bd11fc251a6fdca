"""Buchberger completion in graded reverse-lex order, plus standard-monomial counts.

Only what the Milnor module needs: reduced Groebner bases over Q of small
ideals and the vector-space dimension of zero-dimensional quotients.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Sequence

from .poly import Exponent, Poly


class GroebnerBudgetExceeded(RuntimeError):
    pass


def grevlex_key(exp: Exponent):
    return (sum(exp), tuple(-e for e in reversed(exp)))


def _lead(terms: dict) -> Exponent:
    return max(terms, key=grevlex_key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(f: dict, g: dict, coeff: Fraction, shift: Exponent) -> None:
    """f -= coeff * x^shift * g, in place."""
    for e, c in g.items():
        key = tuple(a + b for a, b in zip(e, shift))
        v = f.get(key, 0) - coeff * c
        if v:
            f[key] = v
        else:
            f.pop(key, None)


def _monic(f: dict) -> dict:
    lc = f[_lead(f)]
    return {e: c / lc for e, c in f.items()}


def _reduce(f: dict, basis: list[tuple[Exponent, dict]]) -> dict:
    """Full normal form of ``f`` modulo a list of (leading exponent, monic poly)."""
    f = dict(f)
    rem: dict = {}
    while f:
        lt = _lead(f)
        for lead, g in basis:
            if _divides(lead, lt):
                shift = tuple(a - b for a, b in zip(lt, lead))
                _sub_scaled(f, g, f[lt], shift)
                break
        else:
            rem[lt] = f.pop(lt)
    return rem


def groebner_basis(gens: Sequence[Poly], max_degree: int | None = None) -> list[Poly]:
    """Reduced grevlex Groebner basis of the ideal generated by ``gens``.

    ``max_degree`` bounds the degree of S-pair lcms; exceeding it raises
    :class:`GroebnerBudgetExceeded`.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    variables = gens[0].variables
    basis: list[tuple[Exponent, dict]] = []
    for g in gens:
        r = _reduce(g.terms, basis)
        if r:
            r = _monic(r)
            basis.append((_lead(r), r))
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    while pairs:
        # normal selection strategy
        pairs.sort(key=lambda p: grevlex_key(_lcm(basis[p[0]][0], basis[p[1]][0])))
        i, j = pairs.pop(0)
        li, fi = basis[i]
        lj, fj = basis[j]
        lcm = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        if any(k not in (i, j) and _divides(basis[k][0], lcm)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in range(len(basis))):
            continue  # chain criterion
        if max_degree is not None and sum(lcm) > max_degree:
            raise GroebnerBudgetExceeded(f"S-pair degree {sum(lcm)} exceeds {max_degree}")
        s = {}
        _sub_scaled(s, fi, Fraction(-1), tuple(a - b for a, b in zip(lcm, li)))
        _sub_scaled(s, fj, Fraction(1), tuple(a - b for a, b in zip(lcm, lj)))
        r = _reduce(s, basis)
        if r:
            r = _monic(r)
            basis.append((_lead(r), r))
            k = len(basis) - 1
            pairs.extend((a, k) for a in range(k))
    # minimalize and interreduce
    leads = [b[0] for b in basis]
    keep = []
    for idx, lead in enumerate(leads):
        if any(_divides(other, lead) and (other != lead or jdx < idx)
               for jdx, other in enumerate(leads) if jdx != idx):
            continue
        keep.append(basis[idx])
    reduced = []
    for idx, (lead, g) in enumerate(keep):
        others = [b for k, b in enumerate(keep) if k != idx]
        tail = {e: c for e, c in g.items() if e != lead}
        r = _reduce(tail, others)
        r[lead] = Fraction(1)
        reduced.append(Poly(variables, r))
    reduced.sort(key=lambda p: grevlex_key(_lead(p.terms)))
    return reduced


def leading_exponent(f: Poly) -> Exponent:
    return _lead(f.terms)


def standard_monomial_count(basis: Sequence[Poly], nvars: int) -> int | None:
    """Number of monomials outside the leading-term ideal; None if infinite."""
    leads = [leading_exponent(g) for g in basis]
    if any(sum(l) == 0 for l in leads):
        return 0
    bounds = []
    for i in range(nvars):
        pure = [l[i] for l in leads if sum(l) == l[i]]
        if not pure:
            return None
        bounds.append(min(pure))
    return sum(1 for exp in product(*(range(b) for b in bounds))
               if not any(_divides(l, exp) for l in leads))


def quotient_dimension(gens: Sequence[Poly], max_degree: int | None = None) -> int | None:
    """dim_Q Q[x]/I, or None when the ideal is not zero-dimensional."""
    if not gens:
        return None
    basis = groebner_basis(gens, max_degree)
    return standard_monomial_count(basis, gens[0].nvars)
