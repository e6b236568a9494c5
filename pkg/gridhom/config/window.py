from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Window(BaseModel):
    """
    A closed rectangle of bigradings (Maslov m, Alexander a).

    Attributes:
        m_lo, m_hi: Inclusive Maslov bounds.
        a_lo, a_hi: Inclusive Alexander bounds.

    Example:
        >>> w = Window.parse("-4:2,-2:1")
        >>> w.contains(0, 0)
        True
    """

    model_config = ConfigDict(frozen=True)

    m_lo: int = Field(..., description="Lowest Maslov grading")
    m_hi: int = Field(..., description="Highest Maslov grading")
    a_lo: int = Field(..., description="Lowest Alexander grading")
    a_hi: int = Field(..., description="Highest Alexander grading")

    @model_validator(mode="after")
    def check_order(self) -> Window:
        """Ensure both ranges are well-ordered."""
        if self.m_lo > self.m_hi:
            raise ValueError("m_lo must be <= m_hi")
        if self.a_lo > self.a_hi:
            raise ValueError("a_lo must be <= a_hi")
        return self

    @classmethod
    def parse(cls, text: str) -> Window:
        """Parse ``"M_LO:M_HI,A_LO:A_HI"``."""
        try:
            m_part, a_part = text.split(",")
            m_lo, m_hi = (int(v) for v in m_part.split(":"))
            a_lo, a_hi = (int(v) for v in a_part.split(":"))
        except ValueError:
            raise ValueError(
                f"window must look like M_LO:M_HI,A_LO:A_HI, got {text!r}"
            ) from None
        return cls(m_lo=m_lo, m_hi=m_hi, a_lo=a_lo, a_hi=a_hi)

    @classmethod
    def alexander_range(cls, a_lo: int, a_hi: int, span: int = 10_000) -> Window:
        """Window over an Alexander range with effectively unbounded Maslov range."""
        return cls(m_lo=-span, m_hi=span, a_lo=a_lo, a_hi=a_hi)

    def contains(self, m: int, a: int) -> bool:
        return self.m_lo <= m <= self.m_hi and self.a_lo <= a <= self.a_hi

    def __str__(self) -> str:
        return f"{self.m_lo}:{self.m_hi},{self.a_lo}:{self.a_hi}"
