"""
Compound Poisson representation of a seed law.

A seed is a superposition of independent compound Poisson blocks; each block has a
jump rate and a jump law on N_0^n without mass at zero.
"""

from typing import Annotated, List, Literal, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .distributions import sample_logarithmic, sample_mlsd


class MlsdBlock(BaseModel):
    """Dependent block: all components jump together with MLSD(p) jump sizes."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["mlsd"] = "mlsd"
    rate: float = Field(..., gt=0, description="Jumps per unit area")
    p: List[float] = Field(..., min_length=1, description="MLSD parameters p_i = alpha_i / (1 + alpha)")

    @field_validator("p")
    @classmethod
    def check_p(cls, v: List[float]) -> List[float]:
        if any(q <= 0 for q in v) or sum(v) >= 1:
            raise ValueError("MLSD parameters need p_i > 0 and sum(p) < 1")
        return v

    @property
    def dimension(self) -> int:
        return len(self.p)

    def sample_jumps(self, count: int, rng: np.random.Generator) -> np.ndarray:
        return sample_mlsd(self.p, count, rng)


class LogarithmicBlock(BaseModel):
    """Independent block: a single component jumps with Log(p) sizes."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["logarithmic"] = "logarithmic"
    rate: float = Field(..., gt=0, description="Jumps per unit area")
    dimension: int = Field(..., ge=1)
    component: int = Field(..., ge=0, description="Index of the component that jumps")
    p: float = Field(..., gt=0, lt=1, description="Logarithmic parameter")

    @model_validator(mode="after")
    def check_component(self) -> "LogarithmicBlock":
        if self.component >= self.dimension:
            raise ValueError(f"component {self.component} outside dimension {self.dimension}")
        return self

    def sample_jumps(self, count: int, rng: np.random.Generator) -> np.ndarray:
        jumps = np.zeros((count, self.dimension), dtype=np.int64)
        jumps[:, self.component] = sample_logarithmic(self.p, count, rng)
        return jumps


class CategoricalBlock(BaseModel):
    """Poisson factor block: each jump is one column of the 0/1 factor matrix."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["categorical"] = "categorical"
    rate: float = Field(..., gt=0, description="Jumps per unit area, sum of theta")
    columns: List[List[int]] = Field(..., min_length=1, description="Jump vectors, one per column of A")
    probabilities: List[float] = Field(..., description="theta_k / sum(theta)")

    @field_validator("probabilities")
    @classmethod
    def check_probabilities(cls, v: List[float]) -> List[float]:
        if any(q <= 0 for q in v) or abs(sum(v) - 1.0) > 1e-9:
            raise ValueError("column probabilities must be positive and sum to one")
        return v

    @property
    def dimension(self) -> int:
        return len(self.columns[0])

    def sample_jumps(self, count: int, rng: np.random.Generator) -> np.ndarray:
        picks = rng.choice(len(self.columns), size=count, p=self.probabilities)
        return np.asarray(self.columns, dtype=np.int64)[picks]


CpBlock = Annotated[Union[MlsdBlock, LogarithmicBlock, CategoricalBlock], Field(discriminator="kind")]


class CpRepresentation(BaseModel):
    """
    Compound Poisson representation (v, jump law) of a seed.

    **Key Features:**
    - Total rate v equals the sum of block rates
    - Blocks are independent; a seed draw over area a superposes
      Poisson(a * rate) jumps from each block
    """

    model_config = ConfigDict(frozen=True)

    blocks: List[CpBlock] = Field(..., min_length=1)

    @model_validator(mode="after")
    def check_dimension(self) -> "CpRepresentation":
        dims = {block.dimension for block in self.blocks}
        if len(dims) != 1:
            raise ValueError(f"blocks disagree on the dimension: {sorted(dims)}")
        return self

    @property
    def rate(self) -> float:
        """Total jump intensity v."""
        return float(sum(block.rate for block in self.blocks))

    @property
    def dimension(self) -> int:
        return self.blocks[0].dimension
