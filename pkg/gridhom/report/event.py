"""Verification event data structure."""

from datetime import datetime, timezone

from pydantic import BaseModel, Field


class VerificationEvent(BaseModel):
    """
    A single event recorded while verifying a construction.

    Attributes:
        time: Unix timestamp of the event
        timestamp: ISO 8601 formatted timestamp string
        event_type: Category of event ('INFO', 'CHECK', 'PASS', 'FAIL', 'ERROR')
        description: Human-readable description of the event
        check: Name of the check the event belongs to (if applicable)
        scale: Diagram size the check ran at (if applicable)
    """

    time: float = Field(..., description="Unix timestamp of the event")
    timestamp: str = Field(..., description="ISO 8601 formatted timestamp string")
    event_type: str = Field(
        ..., description="Category of event (e.g., 'CHECK', 'PASS', 'FAIL')"
    )
    description: str = Field(..., description="Human-readable description of the event")
    check: str | None = Field(None, description="Check name (if applicable)")
    scale: int | None = Field(None, description="Diagram size (if applicable)")

    @classmethod
    def from_utime(
        cls,
        utime: float,
        event_type: str,
        description: str,
        check: str | None = None,
        scale: int | None = None,
    ) -> "VerificationEvent":
        """
        Create a VerificationEvent from a unix timestamp.

        Args:
            utime: Unix timestamp
            event_type: Category of event
            description: Human-readable description
            check: Optional check name
            scale: Optional diagram size

        Returns:
            A new VerificationEvent instance
        """
        dt = datetime.fromtimestamp(utime, tz=timezone.utc)
        timestamp = dt.isoformat(timespec="seconds")
        return cls(
            time=utime,
            timestamp=timestamp,
            event_type=event_type,
            description=description,
            check=check,
            scale=scale,
        )

    def __str__(self) -> str:
        """Format the event for display."""
        return f"[{self.timestamp}] {self.event_type:<5} {self.description}"
