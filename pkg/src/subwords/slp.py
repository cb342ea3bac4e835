"""Straight-line programs: parsing, expansion, and indexes without expansion.

Text format, one rule per line::

    # comment
    X1 = 'a'
    X2 = 'b'
    X3 = X1 X2

A rule is either a single quoted byte or the concatenation of two rules
defined on earlier lines. The last rule is the root.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .core import Alphabet, Word
from .signature import (
    Signature,
    compose,
    iota_from_signature,
    letter_signature,
    zeta_from_signature,
)


class SlpError(ValueError):
    """Base class for SLP parse errors; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UndefinedReference(SlpError):
    """A rule refers to something that is not a defined rule."""


class ForwardReference(UndefinedReference):
    """A rule refers to a name not defined on an earlier line (parsing is one pass)."""


class DuplicateDefinition(SlpError):
    pass


class MalformedRule(SlpError):
    pass


class EmptyProgram(SlpError):
    pass


class ExpansionTooLarge(ValueError):
    def __init__(self, length: int, max_len: int):
        self.length = length
        self.max_len = max_len
        super().__init__(f"expansion has length {length}, above the limit {max_len}")


class Leaf(NamedTuple):
    letter: int


class Concat(NamedTuple):
    left: int
    right: int


Rule = Union[Leaf, Concat]


@dataclass(frozen=True)
class Slp:
    rules: tuple
    names: tuple

    def __post_init__(self):
        if not self.rules:
            raise EmptyProgram("program has no rules")
        if len(self.names) != len(self.rules):
            raise ValueError("one name per rule is required")
        n = len(self.rules)
        for i, rule in enumerate(self.rules):
            if not isinstance(rule, Concat):
                continue
            for j in rule:
                if not 0 <= j < n:
                    raise UndefinedReference(f"rule {self.names[i]} refers to missing rule {j}")
                if j >= i:
                    raise ForwardReference(f"rule {self.names[i]} refers to a later rule")

    @property
    def root(self) -> int:
        return len(self.rules) - 1

    def __len__(self):
        return len(self.rules)

    def reachable(self) -> list:
        """Sorted indices of the rules the root depends on (root included)."""
        seen = [False] * len(self.rules)
        seen[self.root] = True
        for i in range(self.root, -1, -1):
            rule = self.rules[i]
            if seen[i] and isinstance(rule, Concat):
                seen[rule.left] = seen[rule.right] = True
        return [i for i, s in enumerate(seen) if s]

    def to_bytes(self) -> bytes:
        """Serialize in the text format accepted by :func:`parse_slp`."""
        lines = []
        for name, rule in zip(self.names, self.rules):
            if isinstance(rule, Leaf):
                if rule.letter in b"'\n":
                    raise ValueError(f"letter {bytes([rule.letter])!r} cannot be quoted")
                lines.append(name.encode() + b" = '" + bytes([rule.letter]) + b"'")
            else:
                lines.append(
                    f"{name} = {self.names[rule.left]} {self.names[rule.right]}".encode()
                )
        return b"\n".join(lines) + b"\n"


_IDENT = rb"[A-Za-z_][A-Za-z0-9_]*"
_RULE = re.compile(
    rb"[ \t]*(" + _IDENT + rb")[ \t]*=[ \t]*"
    rb"(?:'([^'\n])'|(" + _IDENT + rb")[ \t]+(" + _IDENT + rb"))[ \t]*"
)


def parse_slp(text: Union[str, bytes]) -> Slp:
    """Parse the text format; raises an :class:`SlpError` subclass with a line number."""
    if isinstance(text, str):
        text = text.encode("utf-8")
    parsed = []
    for lineno, line in enumerate(text.split(b"\n"), start=1):
        if line.endswith(b"\r"):
            line = line[:-1]
        stripped = line.strip(b" \t")
        if not stripped or stripped.startswith(b"#"):
            continue
        m = _RULE.fullmatch(line)
        if m is None:
            raise MalformedRule(f"cannot parse rule {line.decode('utf-8', 'replace')!r}", lineno)
        parsed.append((lineno, m.group(1).decode(), m.group(2), m.group(3), m.group(4)))
    if not parsed:
        raise EmptyProgram("program has no rules")

    defined_at = {}
    for lineno, name, *_ in parsed:
        if name in defined_at:
            raise DuplicateDefinition(
                f"{name} already defined on line {defined_at[name][0]}", lineno
            )
        defined_at[name] = (lineno, len(defined_at))

    rules = []
    names = []
    for lineno, name, letter, left, right in parsed:
        index = defined_at[name][1]
        if letter is not None:
            rules.append(Leaf(letter[0]))
        else:
            refs = []
            for ref in (left.decode(), right.decode()):
                if ref not in defined_at:
                    raise ForwardReference(f"{ref} is not defined before use (nor later)", lineno)
                target = defined_at[ref][1]
                if target >= index:
                    raise ForwardReference(
                        f"{ref} is used before its definition on line {defined_at[ref][0]}",
                        lineno,
                    )
                refs.append(target)
            rules.append(Concat(*refs))
        names.append(name)
    return Slp(tuple(rules), tuple(names))


def _lengths(slp: Slp) -> list:
    out = []
    for rule in slp.rules:
        out.append(1 if isinstance(rule, Leaf) else out[rule.left] + out[rule.right])
    return out


def expansion_length(slp: Slp) -> int:
    return _lengths(slp)[slp.root]


def expand(slp: Slp, max_len: int) -> Word:
    """The expanded word; refuses with :class:`ExpansionTooLarge` above ``max_len``."""
    length = expansion_length(slp)
    if length > max_len:
        raise ExpansionTooLarge(length, max_len)
    return Word.from_bytes(expand_bytes(slp))


def expand_bytes(slp: Slp) -> bytes:
    text = {}
    for i in slp.reachable():
        rule = slp.rules[i]
        if isinstance(rule, Leaf):
            text[i] = bytes([rule.letter])
        else:
            text[i] = text[rule.left] + text[rule.right]
    return text[slp.root]


def alphabet(slp: Slp) -> Alphabet:
    """Letters of the expansion, i.e. the leaves reachable from the root."""
    letters = {slp.rules[i].letter for i in slp.reachable() if isinstance(slp.rules[i], Leaf)}
    return Alphabet(bytes(sorted(letters)))


def root_signature(slp: Slp) -> Signature:
    """Signature of the expansion, built bottom-up; each rule is visited once."""
    sigs = {}
    for i in slp.reachable():
        rule = slp.rules[i]
        if isinstance(rule, Leaf):
            sigs[i] = letter_signature(rule.letter)
        else:
            sigs[i] = compose(sigs[rule.left], sigs[rule.right])
    return sigs[slp.root]


class SlpIndexes(NamedTuple):
    iota: int
    zeta: int


def slp_indexes(slp: Slp) -> SlpIndexes:
    sig = root_signature(slp)
    return SlpIndexes(iota_from_signature(sig), zeta_from_signature(sig))
