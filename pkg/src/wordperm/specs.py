"""Word specifications: a small algebra of named, morphic, Sturmian and derived words.

Specs are frozen dataclasses so they hash and compare by value. ``render``
produces the canonical text accepted by :func:`wordperm.parsing.parse_spec`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import WordSpecError

NAMED_WORDS = ("fibonacci", "thue-morse", "period-doubling")


@dataclass(frozen=True)
class Named:
    name: str

    def __post_init__(self):
        if self.name not in NAMED_WORDS:
            raise WordSpecError(f"unknown word name {self.name!r}",
                                expected=" | ".join(NAMED_WORDS))


@dataclass(frozen=True)
class Morphic:
    """Fixed point starting with 0 of the morphism 0 -> image0, 1 -> image1."""

    image0: str
    image1: str

    def __post_init__(self):
        for img in (self.image0, self.image1):
            if not img or set(img) - {"0", "1"}:
                raise WordSpecError(f"morphism image {img!r} must be a non-empty binary string")
        if self.image0[0] != "0" or len(self.image0) < 2:
            raise WordSpecError(
                f"morphism 0->{self.image0} is not prolongable on 0 "
                "(image of 0 must start with 0 and have length >= 2)")


@dataclass(frozen=True)
class SturmianCF:
    """Characteristic Sturmian word of a continued-fraction directive.

    The directive is ``head`` followed by ``period`` repeated forever.
    """

    period: tuple[int, ...]
    head: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "period", tuple(int(a) for a in self.period))
        object.__setattr__(self, "head", tuple(int(a) for a in self.head))
        if not self.period:
            raise WordSpecError("sturmian directive must be non-empty")
        if any(a < 1 for a in self.head + self.period):
            raise WordSpecError("sturmian directive entries must be >= 1")

    def directive(self, i: int) -> int:
        """The i-th directive entry, 1-based."""
        if i <= len(self.head):
            return self.head[i - 1]
        return self.period[(i - len(self.head) - 1) % len(self.period)]


@dataclass(frozen=True)
class Doubled:
    inner: "WordSpec"


@dataclass(frozen=True)
class Complemented:
    inner: "WordSpec"


@dataclass(frozen=True)
class Shifted:
    offset: int
    inner: "WordSpec"

    def __post_init__(self):
        if int(self.offset) != self.offset or self.offset < 0:
            raise WordSpecError(f"shift offset must be a nonnegative integer, got {self.offset!r}")


WordSpec = Union[Named, Morphic, SturmianCF, Doubled, Complemented, Shifted]

_NAMED_MORPHISMS = {
    "fibonacci": Morphic("01", "0"),
    "thue-morse": Morphic("01", "10"),
    "period-doubling": Morphic("01", "00"),
}


def resolve(spec: WordSpec) -> WordSpec:
    """Replace a named word by the morphism it is the fixed point of."""
    if isinstance(spec, Named):
        return _NAMED_MORPHISMS[spec.name]
    return spec


def double(spec: WordSpec) -> Doubled:
    return Doubled(spec)


def complement(spec: WordSpec) -> Complemented:
    return Complemented(spec)


def shift(spec: WordSpec, offset: int) -> Shifted:
    return Shifted(offset, spec)


def render(spec: WordSpec) -> str:
    if isinstance(spec, Named):
        return spec.name
    if isinstance(spec, Morphic):
        return f"morphic:0->{spec.image0},1->{spec.image1}"
    if isinstance(spec, SturmianCF):
        period = ",".join(map(str, spec.period))
        if spec.head:
            return f"sturmian:cf=[{','.join(map(str, spec.head))};{period}]"
        return f"sturmian:cf=[{period}]"
    if isinstance(spec, Doubled):
        return f"double({render(spec.inner)})"
    if isinstance(spec, Complemented):
        return f"complement({render(spec.inner)})"
    if isinstance(spec, Shifted):
        return f"shift({spec.offset},{render(spec.inner)})"
    raise TypeError(f"not a word spec: {spec!r}")


def is_sturmian_spec(spec: WordSpec) -> bool:
    """True for specs known to denote Sturmian words (up to complement and shift)."""
    if isinstance(spec, SturmianCF):
        return True
    if isinstance(spec, Named):
        return spec.name == "fibonacci"
    if isinstance(spec, (Complemented, Shifted)):
        return is_sturmian_spec(spec.inner)
    return False


def is_thue_morse_spec(spec: WordSpec) -> bool:
    return resolve(spec) == _NAMED_MORPHISMS["thue-morse"]
