from dataclasses import dataclass, replace
from typing import Dict

from paritygames.generator.degree import DegreeFunction, DegreeLike, parse_degree


class InvalidConfigError(ValueError):
    pass


@dataclass(frozen=True, eq=True)
class GenConfig:
    """
    Parameters of the random game model: ``node_count`` nodes of out-degree
    ``degree`` (a constant or a function of ``node_count``), uniform owners
    and priorities uniform on ``0 .. priority_count - 1``.
    """

    node_count: int
    degree: DegreeFunction
    priority_count: int = 2
    allow_self_loops: bool = False
    seed: int = 0

    @classmethod
    def create(cls, node_count: int, degree: DegreeLike, **kwargs) -> "GenConfig":
        return cls(node_count, parse_degree(degree), **kwargs)

    @property
    def effective_degree(self) -> int:
        if self.node_count < 2:
            return self.degree.evaluate(2)
        return self.degree.evaluate(self.node_count)

    def with_seed(self, seed: int) -> "GenConfig":
        return replace(self, seed=seed)

    def check(self) -> None:
        """
        Raises InvalidConfigError unless the configuration can be sampled.
        """
        if self.node_count < 1:
            raise InvalidConfigError(
                f"node_count must be positive, got {self.node_count}"
            )
        if self.priority_count < 2 or self.priority_count % 2:
            raise InvalidConfigError(
                "priority_count must be a positive even number,"
                f" got {self.priority_count}"
            )
        if not 0 <= self.seed < 2**64:
            raise InvalidConfigError(
                f"seed must be a 64-bit unsigned integer, got {self.seed}"
            )
        d = self.effective_degree
        candidates = self.node_count if self.allow_self_loops else self.node_count - 1
        if not 1 <= d <= candidates:
            raise InvalidConfigError(
                f"degree {d} must lie in [1, {candidates}] for {self.node_count} nodes"
                + ("" if self.allow_self_loops else " without self-loops")
            )


_KEYS = {
    "nodes": "node_count",
    "degree": "degree",
    "priorities": "priority_count",
    "self_loops": "allow_self_loops",
    "seed": "seed",
}


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in {"1", "true", "yes", "on"}:
        return True
    if lowered in {"0", "false", "no", "off"}:
        return False
    raise InvalidConfigError(f"expected a boolean, got {text!r}")


def parse_gen_config_fields(text: str) -> Dict[str, object]:
    """
    Parse ``key=value`` lines into GenConfig keyword arguments. Blank lines
    and ``#`` comments are skipped.
    """
    fields = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidConfigError(f"line {number}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in _KEYS:
            raise InvalidConfigError(
                f"line {number}: unknown key {key!r}, expected one of {sorted(_KEYS)}"
            )
        try:
            if key == "degree":
                parsed = parse_degree(value)
            elif key == "self_loops":
                parsed = _parse_bool(value)
            else:
                parsed = int(value)
        except ValueError as e:
            raise InvalidConfigError(f"line {number}: {e}") from e
        fields[_KEYS[key]] = parsed
    return fields


def parse_gen_config(text: str) -> GenConfig:
    fields = parse_gen_config_fields(text)
    missing = {"node_count", "degree"} - set(fields)
    if missing:
        raise InvalidConfigError(f"missing required key(s): {sorted(missing)}")
    return GenConfig(**fields)


def load_gen_config(path: str) -> GenConfig:
    with open(path) as f:
        return parse_gen_config(f.read())
