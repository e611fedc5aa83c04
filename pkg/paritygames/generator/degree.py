import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Union


class DegreeFunction(ABC):
    """
    A rule giving the out-degree of a game as a function of its node count.
    """

    @abstractmethod
    def evaluate(self, n: int) -> int:
        """
        The degree used for a game with ``n`` nodes.
        """

    @property
    @abstractmethod
    def tag(self) -> str:
        """
        Textual form accepted by :func:`parse_degree`.
        """

    def __str__(self):
        return self.tag


@dataclass(frozen=True, eq=True)
class ConstantDegree(DegreeFunction):
    degree: int

    def evaluate(self, n: int) -> int:
        del n
        return self.degree

    @property
    def tag(self) -> str:
        return str(self.degree)


@dataclass(frozen=True, eq=True)
class LogDegree(DegreeFunction):
    def evaluate(self, n: int) -> int:
        return max(1, math.floor(math.log(n)))

    @property
    def tag(self) -> str:
        return "ln_n"


@dataclass(frozen=True, eq=True)
class SqrtDegree(DegreeFunction):
    def evaluate(self, n: int) -> int:
        return math.isqrt(n)

    @property
    def tag(self) -> str:
        return "sqrt_n"


@dataclass(frozen=True, eq=True)
class FractionDegree(DegreeFunction):
    alpha: float

    def __post_init__(self):
        if not 0 < self.alpha <= 1:
            raise ValueError(f"fraction must be in (0, 1], got {self.alpha}")

    def evaluate(self, n: int) -> int:
        return min(max(1, math.floor(self.alpha * n)), n - 1)

    @property
    def tag(self) -> str:
        return f"frac:{self.alpha:g}"


DegreeLike = Union[int, str, DegreeFunction]


def parse_degree(degree: DegreeLike) -> DegreeFunction:
    """
    Accepts an integer, a DegreeFunction, or one of the strings ``"4"``,
    ``"ln_n"``, ``"sqrt_n"``, ``"frac:0.5"``.
    """
    if isinstance(degree, DegreeFunction):
        return degree
    if isinstance(degree, int):
        return ConstantDegree(degree)
    text = degree.strip()
    if text == "ln_n":
        return LogDegree()
    if text == "sqrt_n":
        return SqrtDegree()
    if text.startswith("frac:"):
        return FractionDegree(float(text[len("frac:") :]))
    try:
        return ConstantDegree(int(text))
    except ValueError:
        raise ValueError(
            f"unknown degree {degree!r}; expected an integer, ln_n, sqrt_n or frac:<a>"
        ) from None


def degree_of(degree: DegreeLike, n: int) -> int:
    assert n >= 2, f"degree functions need n >= 2, got {n}"
    return parse_degree(degree).evaluate(n)
