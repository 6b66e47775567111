"""Square-free monomial ideals.

A monomial is represented by its support, a ``frozenset`` of variable
names; the empty set is the unit monomial.  Ideals keep their generators in
the order given, so dual-hypergraph vertices follow input order, but compare
equal when their generator *sets* agree.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Monomial = frozenset

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class IdealParseError(ValueError):
    pass


def monomial(spec: str | Iterable[str]) -> frozenset:
    """Build a monomial from ``"abk"``, ``"x1*x2"`` or an iterable of names."""
    if isinstance(spec, str):
        if spec.strip() == "1":
            return frozenset()
        names = spec.split("*") if "*" in spec else list(spec)
    else:
        names = list(spec)
    names = [n.strip() for n in names]
    if len(set(names)) != len(names):
        raise ValueError(f"repeated variable in {spec!r}")
    return frozenset(names)


def divides(m: frozenset, g: frozenset) -> bool:
    return m <= g


def minimal_indices(gens: Sequence[frozenset]) -> list[int]:
    """Indices of a minimal generating subset, keeping first occurrences in order."""
    kept = []
    for i, g in enumerate(gens):
        redundant = False
        for j, h in enumerate(gens):
            if j == i:
                continue
            if h < g or (h == g and j < i):
                redundant = True
                break
        if not redundant:
            kept.append(i)
    return kept


@dataclass(frozen=True, eq=False)
class MonomialIdeal:
    variables: tuple[str, ...]
    generators: tuple[frozenset, ...]

    def __post_init__(self):
        known = set(self.variables)
        for g in self.generators:
            if not g <= known:
                raise ValueError(f"generator uses unknown variables {sorted(g - known)}")

    @classmethod
    def from_generators(cls, gens: Iterable, variables: Sequence[str] | None = None) -> MonomialIdeal:
        gens = tuple(g if isinstance(g, frozenset) else monomial(g) for g in gens)
        order = list(variables or ())
        seen = set(order)
        for g in gens:
            for x in sorted(g):
                if x not in seen:
                    seen.add(x)
                    order.append(x)
        return cls(tuple(order), gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return frozenset(self.generators) == frozenset(other.generators)

    def __hash__(self):
        return hash(frozenset(self.generators))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    @property
    def is_unit(self) -> bool:
        return any(len(g) == 0 for g in self.generators)

    @property
    def is_minimal(self) -> bool:
        return len(minimal_indices(self.generators)) == len(self.generators)

    def used_variables(self) -> tuple[str, ...]:
        used = set().union(*self.generators) if self.generators else set()
        return tuple(x for x in self.variables if x in used)

    def format_monomial(self, g: frozenset) -> str:
        if not g:
            return "1"
        if all(len(x) == 1 and x.isalpha() for x in self.variables):
            return "".join(sorted(g))
        pos = {x: i for i, x in enumerate(self.variables)}
        return "*".join(sorted(g, key=lambda x: pos.get(x, len(pos))))

    def __str__(self):
        return "(" + ", ".join(self.format_monomial(g) for g in self.generators) + ")"

    __repr__ = __str__


def _split_generators(text: str) -> list[str]:
    lines = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        lines.append(line)
    body = "\n".join(lines).strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    return [tok.strip() for tok in re.split(r"[,\n]", body) if tok.strip()]


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse comma/newline separated monomials.

    Without any ``*`` in the file and with purely alphabetic tokens, each
    letter is a variable (``abk`` = a*b*k).  Otherwise every token is split on
    ``*`` and each piece is one variable name.
    """
    tokens = _split_generators(text)
    if not tokens:
        raise IdealParseError("empty generator list")
    star_mode = any("*" in t for t in tokens) or not all(t.isalpha() for t in tokens)
    gens = []
    for tok in tokens:
        names = [n.strip() for n in tok.split("*")] if star_mode else list(tok)
        for n in names:
            if not _NAME.match(n):
                raise IdealParseError(f"malformed token {tok!r}")
        if len(set(names)) != len(names):
            raise IdealParseError(f"repeated variable in {tok!r} (not square-free)")
        gens.append(frozenset(names))
    variables: list[str] = []
    seen = set()
    for tok, g in zip(tokens, gens):
        names = tok.split("*") if star_mode else list(tok)
        for n in names:
            n = n.strip()
            if n not in seen:
                seen.add(n)
                variables.append(n)
    return MonomialIdeal(tuple(variables), tuple(gens))


def minimalize(I: MonomialIdeal) -> MonomialIdeal:
    keep = minimal_indices(I.generators)
    return MonomialIdeal(I.variables, tuple(I.generators[i] for i in keep))


def _merge_variables(*orders: Iterable[str]) -> tuple[str, ...]:
    out: list[str] = []
    seen = set()
    for order in orders:
        for x in order:
            if x not in seen:
                seen.add(x)
                out.append(x)
    return tuple(out)


def colon_by_monomial(I: MonomialIdeal, m: frozenset | str) -> MonomialIdeal:
    """``I : m`` for a square-free monomial ``m``."""
    m = m if isinstance(m, frozenset) else monomial(m)
    gens = tuple(g - m for g in I.generators)
    return minimalize(MonomialIdeal(_merge_variables(I.variables, sorted(m)), gens))


def intersect(J: MonomialIdeal, K: MonomialIdeal) -> MonomialIdeal:
    gens = tuple(g | h for g in J.generators for h in K.generators)
    return minimalize(MonomialIdeal(_merge_variables(J.variables, K.variables), gens))


def scale_by_monomial(I: MonomialIdeal, m: frozenset | str) -> MonomialIdeal:
    """``m * I``; ``m`` must share no variable with any generator."""
    m = m if isinstance(m, frozenset) else monomial(m)
    for g in I.generators:
        if g & m:
            raise ValueError(f"{sorted(m)} overlaps generator {sorted(g)}; product would not be square-free")
    return MonomialIdeal(_merge_variables(I.variables, sorted(m)), tuple(g | m for g in I.generators))


def add_generator(I: MonomialIdeal, m: frozenset | str) -> MonomialIdeal:
    """Minimal generators of ``(I, m)``."""
    m = m if isinstance(m, frozenset) else monomial(m)
    return minimalize(MonomialIdeal(_merge_variables(I.variables, sorted(m)), I.generators + (m,)))


def sub_ideal(I: MonomialIdeal, indices: Iterable[int]) -> MonomialIdeal:
    """Ideal generated by the generators at the given 0-based positions."""
    return MonomialIdeal(I.variables, tuple(I.generators[i] for i in indices))
