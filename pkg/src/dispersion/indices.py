from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class SobolevIndices:
    """
    Regularity bookkeeping for a degree-ℓ symbol: p = r + 2ℓ - 1, q = r + ℓ - 1.

    Errors are measured in H^r (second order) and H^q (first order); data live in H^p.
    """

    r: int
    ell: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise ValueError(f"r must be >= 1, got {self.r}")
        if self.ell < 2:
            raise ValueError(f"ell must be >= 2, got {self.ell}")

    @property
    def p(self) -> int:
        return self.r + 2 * self.ell - 1

    @property
    def q(self) -> int:
        return self.r + self.ell - 1

    def as_tuple(self) -> tuple[int, int, int]:
        return self.r, self.q, self.p


def indices_for(r: int, ell: int) -> SobolevIndices:
    return SobolevIndices(r=r, ell=ell)
