"""
Arithmetic progression descriptors used as generalization weights.
"""

from pydantic import BaseModel, ConfigDict, Field


class APPair(BaseModel):
    """The progression {start + k*step : k >= 0}.

    ``step == 0`` denotes the singleton {start}; ``(0, 0)`` is the sentinel
    meaning "no power relation in this direction".
    """

    model_config = ConfigDict(frozen=True)

    start: int = Field(0, ge=0, description="Initial term")
    step: int = Field(0, ge=0, description="Common difference")

    @classmethod
    def of(cls, start: int, step: int) -> "APPair":
        return cls(start=start, step=step)

    @classmethod
    def sentinel(cls) -> "APPair":
        return cls(start=0, step=0)

    @property
    def is_sentinel(self) -> bool:
        return self.start == 0 and self.step == 0

    def as_tuple(self) -> tuple:
        return (self.start, self.step)

    def __str__(self) -> str:
        return f"({self.start},{self.step})"
