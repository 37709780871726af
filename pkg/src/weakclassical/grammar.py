"""Parser for the textual ring / module / instance specifications.

Grammar (whitespace-insensitive)::

    ring    := 'Z' INT | 'ZZ' | 'prod(' ring ',' ring [',' ring] ')' | 'quot(' ring ';' gens ')'
    module  := 'cyc(' ring ';' gens ')' | 'ab(' [INT {',' INT}] ')'
             | 'dsum(' module {',' module} ')' | 'pmod(' ring ';' module {',' module} ')'
             | 'qmod(' module ';' gens ')' | 'free(' ring ';' INT ')'
    elem    := INT | '(' elem {',' elem} ')'
    gens    := [elem {',' elem}]
    instance:= item {(';' | NEWLINE) item}
    item    := 'ring=' ring | 'mod=' module | 'sub=sub(' gens ')' | 'mset=mset(' gens ')'
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import SpecSyntaxError
from .modules import (
    make_module_abelian,
    make_module_cyclic,
    make_module_direct_sum,
    make_module_free,
    make_module_over_product,
    make_module_quotient,
    submodule_generate,
)
from .rings import INTEGERS, ideal_from_generators, make_ring_product, make_ring_quotient, make_ring_zn

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),;=\n]))")


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = []
        pos = 0
        while pos < len(text):
            if text[pos] in " \t\r":
                pos += 1
                continue
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                self._fail_at(pos, f"unexpected character {text[pos]!r}", ())
            kind = m.lastgroup
            start = m.start(kind)
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.i = 0

    # -- token helpers --------------------------------------------------------

    def _fail_at(self, pos, message, expected):
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        raise SpecSyntaxError(message, line, col, expected)

    def fail(self, message, expected=()):
        pos = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        self._fail_at(pos, message, expected)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, len(self.text))

    def take(self, value=None, kind=None, expected=None):
        tk, tv, _ = self.peek()
        if tk is None or (value is not None and tv != value) or (kind is not None and tk != kind):
            want = expected or ((value,) if value else (kind,))
            self.fail(f"unexpected {'end of input' if tk is None else repr(tv)}", want)
        self.i += 1
        return tv

    def at(self, value):
        return self.peek()[1] == value

    def done(self):
        return self.i >= len(self.tokens)

    # -- productions ----------------------------------------------------------

    def ring(self):
        kind, value, _ = self.peek()
        expected = ("Z<n>", "ZZ", "prod", "quot")
        if kind != "name":
            self.fail("expected a ring", expected)
        if value == "ZZ":
            self.take()
            return INTEGERS
        if re.fullmatch(r"Z\d+", value):
            self.take()
            n = int(value[1:])
            if n < 2:
                self.i -= 1
                self.fail(f"Z{n} is not a ring with nonzero identity", ("Z<n> with n >= 2",))
            return make_ring_zn(n)
        if value == "prod":
            self.take()
            self.take("(")
            factors = [self.ring()]
            while self.at(","):
                self.take(",")
                factors.append(self.ring())
            self.take(")", expected=(",", ")"))
            return make_ring_product(factors)
        if value == "quot":
            self.take()
            self.take("(")
            R = self.ring()
            self.take(";")
            gens = self.gens()
            self.take(")")
            return make_ring_quotient(R, ideal_from_generators(R, gens))[0]
        self.fail(f"unknown ring {value!r}", expected)

    def elem(self):
        if self.at("("):
            self.take("(")
            parts = [self.elem()]
            while self.at(","):
                self.take(",")
                parts.append(self.elem())
            self.take(")", expected=(",", ")"))
            return tuple(parts)
        return int(self.take(kind="int", expected=("integer", "(")))

    def gens(self):
        out = []
        if self.at(")"):
            return out
        out.append(self.elem())
        while self.at(","):
            self.take(",")
            out.append(self.elem())
        return out

    def module(self):
        kind, value, _ = self.peek()
        expected = ("cyc", "ab", "dsum", "pmod", "qmod", "free")
        if kind != "name" or value not in expected:
            self.fail("expected a module", expected)
        self.take()
        self.take("(")
        if value == "cyc":
            R = self.ring()
            self.take(";")
            gens = self.gens()
            M = make_module_cyclic(R, ideal_from_generators(R, gens))
        elif value == "ab":
            ds = []
            if not self.at(")"):
                ds.append(int(self.take(kind="int", expected=("integer",))))
                while self.at(","):
                    self.take(",")
                    ds.append(int(self.take(kind="int", expected=("integer",))))
            M = make_module_abelian(ds)
        elif value == "dsum":
            parts = [self.module()]
            while self.at(","):
                self.take(",")
                parts.append(self.module())
            M = make_module_direct_sum(parts)
        elif value == "pmod":
            R = self.ring()
            self.take(";")
            parts = [self.module()]
            while self.at(","):
                self.take(",")
                parts.append(self.module())
            M = make_module_over_product(R, parts)
        elif value == "qmod":
            base = self.module()
            self.take(";")
            gens = self.gens()
            M = make_module_quotient(base, submodule_generate(base, gens))[0]
        else:  # free
            R = self.ring()
            self.take(";")
            M = make_module_free(R, int(self.take(kind="int", expected=("integer",))))
        self.take(")", expected=(",", ")"))
        return M


def _finish(p):
    if not p.done():
        p.fail("trailing input", ("end of input",))


@lru_cache(maxsize=None)
def parse_ring(text):
    p = _Parser(text)
    R = p.ring()
    _finish(p)
    return R


def build_module(text):
    """Build a fresh module object from its descriptor (no memoization)."""
    p = _Parser(text)
    M = p.module()
    _finish(p)
    return M


@lru_cache(maxsize=None)
def parse_module(text):
    """Build (and memoize) the module described by ``text``."""
    M = build_module(text)
    if M.descriptor != text:
        # share one object per canonical descriptor so caches are reused
        return parse_module(M.descriptor)
    return M


def parse_elements(text):
    p = _Parser(text)
    out = p.gens()
    _finish(p)
    return out


def parse_items(text, keys=None):
    """Split an instance text into ``(key, value_text, position)`` items.

    ``position`` is the offset of the value's first character. Keys outside
    ``keys`` (when given) are rejected at the key's own position.
    """
    items = []
    depth, start = 0, 0
    for pos, ch in enumerate(text + ";"):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif (ch in ";\n" and depth == 0) or pos == len(text):
            chunk = text[start:pos]
            if chunk.strip():
                if "=" not in chunk:
                    offset = start + len(chunk) - len(chunk.lstrip())
                    _Parser(text)._fail_at(offset, "expected key=value", ("ring=", "mod=", "sub=", "mset="))
                key, value = chunk.split("=", 1)
                if keys is not None and key.strip() not in keys:
                    offset = start + len(key) - len(key.lstrip())
                    _Parser(text)._fail_at(offset, f"unknown key {key.strip()!r}", tuple(sorted(keys)))
                lead = len(value) - len(value.lstrip())
                items.append((key.strip(), value.strip(), start + len(key) + 1 + lead))
            start = pos + 1
    return items


def parse_call(text, name):
    """Arguments of ``name(<gens>)`` as a list of elements."""
    p = _Parser(text)
    p.take(name, expected=(name,))
    p.take("(")
    gens = p.gens()
    p.take(")", expected=(",", ")"))
    _finish(p)
    return gens


def submodule_from_text(M, text):
    return submodule_generate(M, parse_call(text, "sub"))
