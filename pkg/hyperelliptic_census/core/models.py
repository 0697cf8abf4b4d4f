"""
Data models shared across the census toolkit.
"""

import os
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, field_validator

from ..algebra.gf2n import FieldDesc
from ..algebra.polyring import Poly
from .errors import MalformedInputError, PreconditionError


class OutputFormat(Enum):
    jsonl = "jsonl"
    csv = "csv"


class Verdict(Enum):
    obstructed = "obstructed"
    feasible = "feasible"


@dataclass(frozen=True)
class CountVector:
    """Point counts N_1..N_K of a curve over GF(q)."""

    q: int
    counts: Tuple[int, ...]

    def __post_init__(self):
        for k, N in enumerate(self.counts, start=1):
            if N < 0 or N > 2 * (self.q ** k + 1):
                raise MalformedInputError(f"N_{k}={N} impossible over GF({self.q}^{k})")

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, k: int) -> int:
        """1-based: cv[k] is N_k."""
        return self.counts[k - 1]


@dataclass(frozen=True)
class WeilPoly:
    """Coefficients a_1..a_g of x^2g + a_1 x^(2g-1) + ... + q^g."""

    q: int
    a: Tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class ResiduePattern:
    """a_1..a_g mod 2, written n_1 first."""

    bits: Tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "ResiduePattern":
        if not text or any(ch not in "01" for ch in text):
            raise MalformedInputError(f"residue pattern must be a 0/1 string, got {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def genus(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)


Partition = Tuple[int, ...]


@dataclass
class CurveRecord:
    """One isomorphism class y^2 + v y = u, with its arithmetic data."""

    genus: int
    n: int
    field_poly: int
    v: str
    u: str
    counts: Optional[List[int]] = None
    weil: Optional[List[int]] = None
    two_rank: Optional[int] = None

    @property
    def q(self) -> int:
        return 1 << self.n

    def to_row(self) -> Dict[str, Any]:
        return {
            "genus": self.genus,
            "n": self.n,
            "q": self.q,
            "field_poly": self.field_poly,
            "v": _int_list(self.v),
            "u": _int_list(self.u),
            "counts": self.counts,
            "weil": self.weil,
            "two_rank": self.two_rank,
        }

    @classmethod
    def from_row(cls, row: Dict[str, Any]) -> "CurveRecord":
        try:
            return cls(
                genus=int(row["genus"]),
                n=int(row["n"]),
                field_poly=int(row["field_poly"]),
                v=_coeff_text(row["v"]),
                u=_coeff_text(row["u"]),
                counts=_int_list(row.get("counts")),
                weil=_int_list(row.get("weil")),
                two_rank=None if row.get("two_rank") in (None, "") else int(row["two_rank"]),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"bad census row {row!r}: {e}") from None


def _coeff_text(value: Any) -> str:
    coeffs = _int_list(value)
    if not coeffs:
        raise ValueError("empty coefficient list")
    return ",".join(str(c) for c in coeffs)


def _int_list(value: Any) -> Optional[List[int]]:
    if value is None or value == "" or (isinstance(value, float) and value != value):
        return None
    if isinstance(value, str):
        return [int(x) for x in value.strip("[]").split(",") if x.strip()]
    return [int(x) for x in value]


@dataclass
class VStats:
    """Bookkeeping for one v of the census loop."""

    v: str
    dim_U: int
    transversal_size: int
    stabilizer_size: int
    orbits: int = 0
    classes: int = 0
    discarded_cosets: int = 0
    orbit_sizes: List[int] = field(default_factory=list)

    def accounted(self) -> bool:
        return sum(self.orbit_sizes) + self.discarded_cosets == self.transversal_size


@dataclass
class ObstructionReport:
    """Verdict for one residue pattern."""

    pattern: ResiduePattern
    verdict: Verdict
    witness: Optional[Partition] = None
    certificates: List[Tuple[int, int, int]] = field(default_factory=list)  # (k, modulus, N_k)

    @property
    def obstructed(self) -> bool:
        return self.verdict is Verdict.obstructed


@dataclass
class ClassCountTable:
    """Counts of genus-3 Weil polynomials by (s, t, u) mod 2."""

    q: int
    counts: Dict[Tuple[int, int, int], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def proportion(self, cls: Tuple[int, int, int]) -> float:
        return self.counts.get(cls, 0) / self.total

    def ordinary(self) -> int:
        return sum(c for (s, t, u), c in self.counts.items() if u == 1)


class RunConfig(BaseModel):
    """Validated settings for one CLI run; YAML files load into this model."""

    subcommand: str = "enumerate"
    genus: int = 3
    n: int = 1
    jobs: Optional[int] = None
    output: Optional[str] = None
    format: str = "jsonl"
    max_ext: Optional[int] = None
    higher_power: bool = False
    with_counts: Optional[int] = None
    tau: bool = False
    field_poly: Optional[str] = None

    @field_validator("genus")
    @classmethod
    def _genus_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("genus must be at least 1")
        return v

    @field_validator("n")
    @classmethod
    def _degree_in_table(cls, v: int) -> int:
        if not 1 <= v <= 18:
            raise ValueError("n must lie in 1..18")
        return v

    @field_validator("format")
    @classmethod
    def _known_format(cls, v: str) -> str:
        if v not in {f.value for f in OutputFormat}:
            raise ValueError(f"unknown format {v!r}")
        return v

    def resolved_jobs(self) -> int:
        if self.jobs:
            return self.jobs
        env = os.environ.get("HYPERELLIPTIC_CENSUS_JOBS")
        if env:
            return max(1, int(env))
        return os.cpu_count() or 1

    def require_enumerable(self) -> None:
        pair = (self.genus + 1, (1 << self.n) - 1)
        if gcd(*pair) != 1:
            raise PreconditionError(
                f"gcd(g+1, 2^n-1) = gcd{pair} = {gcd(*pair)} != 1: "
                f"genus {self.genus} over GF(2^{self.n}) is not supported"
            )


@dataclass(frozen=True)
class Curve:
    """y^2 + v(x) y = u(x) of genus g, with v monic."""

    v: Poly
    u: Poly
    genus: int

    @property
    def field(self) -> FieldDesc:
        return self.v.field

