"""Verification event logging."""

import time

from pydantic import BaseModel, Field

from .event import VerificationEvent

EVENT_TYPES = ("INFO", "CHECK", "PASS", "FAIL", "ERROR")


class VerificationLog(BaseModel):
    """
    Container for verification events with logging and printing methods.

    Attributes:
        events: List of VerificationEvent objects in the order they were logged
    """

    events: list[VerificationEvent] = Field(
        default_factory=list, description="List of logged events"
    )

    def log_event(
        self,
        event_type: str,
        description: str,
        check: str | None = None,
        scale: int | None = None,
        utime: float | None = None,
    ) -> None:
        """
        Log a verification event.

        Parameters
        ----------
        event_type : str
            One of 'INFO', 'CHECK', 'PASS', 'FAIL', 'ERROR'
        description : str
            Human-readable description of the event
        check : str | None
            Optional name of the check
        scale : int | None
            Optional diagram size
        utime : float | None
            Unix timestamp; the current time when omitted
        """
        if event_type not in EVENT_TYPES:
            raise ValueError(f"event_type must be one of {', '.join(EVENT_TYPES)}")
        event = VerificationEvent.from_utime(
            utime=time.time() if utime is None else utime,
            event_type=event_type,
            description=description,
            check=check,
            scale=scale,
        )
        self.events.append(event)

    def print_log(self) -> None:
        """Print the event log to stdout."""
        for event in self.events:
            print(str(event))

    def clear(self) -> None:
        """Clear all logged events."""
        self.events.clear()

    def failures(self) -> list[VerificationEvent]:
        """Events recording a failed check or an error."""
        return [e for e in self.events if e.event_type in ("FAIL", "ERROR")]

    def __len__(self) -> int:
        """Return the number of logged events."""
        return len(self.events)

    def __getitem__(self, index: int) -> VerificationEvent:
        """Get event by index."""
        return self.events[index]
