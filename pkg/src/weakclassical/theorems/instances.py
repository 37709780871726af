"""Instances (module + submodules + auxiliary data) and their deterministic generation."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, replace

from .._sets import format_label
from ..errors import InvalidParameter, SpecSyntaxError
from ..grammar import parse_call, parse_items, parse_module, parse_ring
from ..modules import (
    Submodule,
    make_module_abelian,
    make_module_cyclic,
    make_module_direct_sum,
    make_module_over_product,
    submodule_generate,
)
from ..rings import MultiplicativeSet, make_ring_product, make_ring_zn

DEFAULT_FACTORS = (2, 3, 4, 5, 8, 9)


@dataclass(frozen=True)
class Bounds:
    """Generation bounds.

    ``ringmax`` caps each cyclic ring Z_n (and the exponent of integer-scalar
    modules), ``modmax`` caps module size, ``arity`` the number of factors in
    product rings, and ``targeted`` the size of derived objects such as M^k.
    """

    ringmax: int = 16
    modmax: int = 36
    arity: int = 3
    targeted: int = 64
    factors: tuple = DEFAULT_FACTORS

    def __post_init__(self):
        for name in ("ringmax", "modmax", "arity", "targeted"):
            if int(getattr(self, name)) < 1:
                raise InvalidParameter(f"bound {name} must be positive")

    @classmethod
    def empty(cls):
        return cls(ringmax=1, modmax=1, arity=1)

    @classmethod
    def parse(cls, text):
        """Parse ``ringmax=<n>,modmax=<n>,arity=<k>[,targeted=<n>]`` overrides."""
        values = {}
        for part in filter(None, (p.strip() for p in (text or "").split(","))):
            key, sep, value = part.partition("=")
            key = key.strip()
            if not sep or key not in ("ringmax", "modmax", "arity", "targeted"):
                raise InvalidParameter(f"bad bounds item {part!r}")
            try:
                values[key] = int(value)
            except ValueError:
                raise InvalidParameter(f"bound {key} needs an integer, got {value!r}") from None
        return cls(**values)

    def to_dict(self):
        return {"arity": self.arity, "factors": list(self.factors), "modmax": self.modmax,
                "ringmax": self.ringmax, "targeted": self.targeted}


def _gens_text(gens):
    return ",".join(format_label(g) for g in gens)


def canonical_generators(N):
    """Greedy canonical generators of N, independent of how N was built."""
    return tuple(Submodule(N.module, N.mask).generators)


@dataclass(frozen=True)
class Instance:
    """Textual, hashable description of a check target.

    ``subs`` holds one generator tuple per submodule, ``aux`` extra
    ``(key, generators)`` pairs such as a multiplicative set.
    """

    ring: str
    module: str
    subs: tuple = ()
    aux: tuple = field(default=())

    def to_text(self):
        parts = [f"ring={self.ring}", f"mod={self.module}"]
        parts += [f"sub=sub({_gens_text(g)})" for g in self.subs]
        parts += [f"{k}={k}({_gens_text(g)})" for k, g in self.aux]
        return "; ".join(parts)

    def __str__(self):
        return self.to_text()

    # -- materialization -------------------------------------------------------

    def build_module(self):
        return parse_module(self.module)

    def submodules(self):
        M = self.build_module()
        return [submodule_generate(M, g) for g in self.subs]

    @property
    def submodule(self):
        subs = self.submodules()
        if not subs:
            raise InvalidParameter("instance names no submodule")
        return subs[0]

    def multiplicative_set(self):
        for k, g in self.aux:
            if k == "mset":
                return MultiplicativeSet(self.build_module().ring, g)
        return None

    def with_sub(self, N):
        return replace(self, subs=(canonical_generators(N),))


def instance_for(N, aux=()):
    M = N.module
    return Instance(M.ring.descriptor, M.descriptor, (canonical_generators(N),), tuple(aux))


def parse_instance(text):
    """Parse ``ring=...; mod=...; sub=sub(...); mset=mset(...)`` into an Instance.

    The module descriptor and submodule generators are canonicalized, so
    printing and re-parsing gives an identical Instance.
    """
    ring = module = None
    subs, aux = [], []
    for key, value, pos in parse_items(text, ("ring", "mod", "sub", "mset")):
        try:
            if key == "ring":
                ring = parse_ring(value)
            elif key == "mod":
                module = parse_module(value)
            elif key == "sub":
                subs.append(parse_call(value, "sub"))
            else:
                aux.append(("mset", tuple(parse_call(value, "mset"))))
        except SpecSyntaxError as exc:
            # shift the position into the coordinates of the whole text
            line = text.count("\n", 0, pos) + exc.line
            col = exc.column + (pos - (text.rfind("\n", 0, pos) + 1) if exc.line == 1 else 0)
            raise SpecSyntaxError(str(exc).split(" at line")[0], line, col, exc.expected) from None
    if module is None:
        raise SpecSyntaxError("missing mod=", text.count("\n") + 1, 1, ("mod=",))
    if ring is not None and ring != module.ring:
        raise InvalidParameter(f"mod is over {module.ring.descriptor}, not {ring.descriptor}")
    canon = []
    for gens in subs:
        canon.append(canonical_generators(submodule_generate(module, gens)))
    for k, g in aux:
        MultiplicativeSet(module.ring, g)  # validates the generators
    return Instance(module.ring.descriptor, module.descriptor, tuple(canon), tuple(aux))


# -- generation ------------------------------------------------------------------


def _invariant_factor_lists(limit_size):
    """All d1 | d2 | ... | dk with di >= 2 and product <= limit_size."""
    out = []

    def grow(prefix, prod):
        if prefix:
            out.append(tuple(prefix))
        last = prefix[-1] if prefix else 1
        d = last if prefix else 2
        step = last
        while prod * d <= limit_size:
            grow(prefix + [d], prod * d)
            d += step

    grow([], 1)
    return sorted(out, key=lambda ds: (math.prod(ds), ds))


def generate_modules(bounds=None):
    """Modules of the sweep, in canonical order, without repeats."""
    b = bounds or Bounds()
    seen = set()

    def fresh(M):
        if M.size <= 1 or M.size > b.modmax or M.descriptor in seen:
            return False
        seen.add(M.descriptor)
        return True

    for ds in _invariant_factor_lists(b.modmax):
        M = make_module_abelian(ds)
        if fresh(M):
            yield M
    for n in range(2, b.ringmax + 1):
        R = make_ring_zn(n)
        quots = [make_module_cyclic(R, I) for I in R.ideals if not I.is_whole]
        for M in quots:
            if fresh(M):
                yield M
        for i, j in itertools.combinations_with_replacement(range(len(quots)), 2):
            if quots[i].size * quots[j].size <= b.modmax:
                M = make_module_direct_sum([quots[i], quots[j]])
                if fresh(M):
                    yield M
    factors = [f for f in b.factors if f <= b.ringmax]
    for k in range(2, min(b.arity, 3) + 1):
        for combo in itertools.combinations_with_replacement(factors, k):
            rings = [make_ring_zn(n) for n in combo]
            R = make_ring_product(rings)
            choices = [[make_module_cyclic(f, I) for I in f.ideals if not I.is_whole] for f in rings]
            for parts in itertools.product(*choices):
                if math.prod(p.size for p in parts) > b.modmax:
                    continue
                M = make_module_over_product(R, parts)
                if fresh(M):
                    yield M


def generate_instances(bounds=None):
    """Every proper submodule of every generated module, as Instances."""
    b = bounds or Bounds()
    for M in generate_modules(b):
        for N in M.submodules:
            if not N.is_whole:
                yield instance_for(N)


__all__ = [
    "Bounds",
    "DEFAULT_FACTORS",
    "Instance",
    "canonical_generators",
    "generate_instances",
    "generate_modules",
    "instance_for",
    "parse_instance",
]
