"""
Gridded multivariate count series.
"""

from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_serializer, field_validator

from mivt.exceptions import DomainError


class CountSeries(BaseModel):
    """
    Counts of n components on a uniform grid with step Delta.

    ``counts`` is an n x K integer matrix; row i is component ``labels[i]`` and
    column k is the grid point origin + k Delta. The array is made read-only on
    construction so a series can be shared between workers.

    **Usage Examples:**
    ```python
    series = CountSeries(delta=5.0, counts=[[2, 1], [0, 3]], labels=["subs", "dels"])
    series.component("dels")   # array([0, 3])
    series.times()             # array([0., 5.])
    ```
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    delta: float = Field(..., gt=0, description="Grid step Delta")
    counts: np.ndarray = Field(..., description="n x K matrix of non-negative integer counts")
    labels: List[str] = Field(default_factory=list, validate_default=True,
                              description="Component labels; defaults to Y1..Yn")
    origin: Optional[float] = Field(None, description="Time of the first grid point (optional)")

    @field_validator("counts", mode="before")
    @classmethod
    def validate_counts(cls, v) -> np.ndarray:
        """
        Coerce to a read-only int64 matrix.

        Raises:
            ValueError: If the data is not a non-empty matrix of non-negative integers
        """
        array = np.asarray(v)
        if array.ndim == 1:
            array = array[None, :]
        if array.ndim != 2 or array.shape[0] == 0 or array.shape[1] == 0:
            raise ValueError("counts must be a non-empty n x K matrix")
        if array.dtype.kind not in "iuf":
            raise ValueError("counts must be numeric")
        if array.dtype.kind == "f":
            if not np.all(np.isfinite(array)) or np.any(array != np.round(array)):
                raise ValueError("counts must be integers")
        array = array.astype(np.int64)
        if np.any(array < 0):
            raise ValueError("counts must be non-negative")
        array.setflags(write=False)
        return array

    @field_validator("labels")
    @classmethod
    def validate_labels(cls, v: List[str], info: ValidationInfo) -> List[str]:
        counts = info.data.get("counts")
        if counts is None:
            return v
        n = counts.shape[0]
        if not v:
            return [f"Y{i + 1}" for i in range(n)]
        if len(v) != n:
            raise ValueError(f"{len(v)} labels for {n} components")
        if len(set(v)) != n:
            raise ValueError("component labels must be unique")
        return v

    @field_serializer("counts")
    def serialize_counts(self, counts: np.ndarray) -> List[List[int]]:
        return counts.tolist()

    @property
    def n_components(self) -> int:
        return int(self.counts.shape[0])

    @property
    def length(self) -> int:
        """Number of grid points K."""
        return int(self.counts.shape[1])

    def times(self) -> np.ndarray:
        """Grid times origin + k Delta."""
        return (self.origin or 0.0) + self.delta * np.arange(self.length)

    def index_of(self, component: int | str) -> int:
        """
        Resolve a component given by position or label.

        Raises:
            DomainError: If the component does not exist
        """
        if isinstance(component, str):
            if component not in self.labels:
                raise DomainError(f"unknown component {component!r}, known: {self.labels}")
            return self.labels.index(component)
        if not 0 <= component < self.n_components:
            raise DomainError(f"component index {component} outside 0..{self.n_components - 1}")
        return int(component)

    def component(self, component: int | str) -> np.ndarray:
        return self.counts[self.index_of(component)]
