"""Prioritized speech queue, virtual clock, and transcript recording.

Speech stands in for audio: speaking a message appends a transcript line
and advances the virtual clock by a modeled duration (linear in character
count, scaled by the message rate). Alerts outrank perception results,
which outrank informational messages; within a priority class order is
FIFO. The queue is bounded; overflow drops the lowest-priority newest
message into a drop report rather than raising, so every submitted message
is accounted for either in the transcript or in that report.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import IntEnum
from typing import Protocol


class Priority(IntEnum):
    ALERT = 0
    PERCEPTION = 1
    INFO = 2


class SpeechBackendError(RuntimeError):
    """The synthesizer failed twice on the same message."""


@dataclass(frozen=True)
class SpeechMessage:
    text: str
    priority: Priority
    enqueued_at_s: float
    rate: float = 1.0
    sequence: int = 0

    def __post_init__(self) -> None:
        if self.rate <= 0:
            raise ValueError("rate must be positive")


@dataclass(frozen=True)
class TranscriptEntry:
    spoken_at_s: float
    priority: Priority
    text: str


class Transcript:
    """Ordered record of spoken messages."""

    def __init__(self) -> None:
        self.entries: list[TranscriptEntry] = []

    def append(self, entry: TranscriptEntry) -> None:
        if self.entries and entry.spoken_at_s < self.entries[-1].spoken_at_s:
            raise ValueError("transcript timestamps must be nondecreasing")
        self.entries.append(entry)

    def render(self) -> str:
        """One tab-separated line per message: time, priority, text."""
        return "".join(
            f"{e.spoken_at_s:.3f}\t{e.priority.name}\t{e.text}\n" for e in self.entries
        )

    def texts(self) -> list[str]:
        return [e.text for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


class VirtualClock:
    """Simulation time; advanced explicitly by modeled latencies."""

    def __init__(self, start_s: float = 0.0) -> None:
        self._now = start_s

    def now(self) -> float:
        return self._now

    def advance(self, dt_s: float) -> None:
        if dt_s < 0:
            raise ValueError("cannot advance the clock backwards")
        self._now += dt_s

    def advance_to(self, t_s: float) -> None:
        """Move to an absolute time; no-op if already past it."""
        if t_s > self._now:
            self._now = t_s


class SpeechBackend(Protocol):
    backend_id: str

    def speak(self, message: SpeechMessage, now_s: float) -> None: ...


class NullSynth:
    """Audio sink that does nothing; the transcript is the observable."""

    backend_id = "null"

    def speak(self, message: SpeechMessage, now_s: float) -> None:
        return None


class FlakySynth:
    """Test synthesizer that fails a fixed number of times per text."""

    backend_id = "flaky"

    def __init__(self, failures: dict[str, int]):
        self._remaining = dict(failures)

    def speak(self, message: SpeechMessage, now_s: float) -> None:
        left = self._remaining.get(message.text, 0)
        if left > 0:
            self._remaining[message.text] = left - 1
            raise RuntimeError(f"synth refused {message.text!r}")


@dataclass(frozen=True)
class SpeechConfig:
    base_per_char_s: float = 0.05
    default_rate: float = 1.0
    capacity: int = 64
    ocr_template: str = "Text detected: {text}"
    detection_template: str = "Detected {label}"

    def __post_init__(self) -> None:
        if self.base_per_char_s <= 0:
            raise ValueError("base_per_char_s must be positive")
        if self.default_rate <= 0:
            raise ValueError("default_rate must be positive")
        if self.capacity < 1:
            raise ValueError("capacity must be at least 1")


def message_duration_s(message: SpeechMessage, base_per_char_s: float) -> float:
    return base_per_char_s * len(message.text) / message.rate


@dataclass
class EnqueueAck:
    message: SpeechMessage
    dropped: SpeechMessage | None = None


class SpeechQueue:
    """Bounded priority queue; single consumer, any number of producers."""

    def __init__(self, capacity: int = 64):
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.capacity = capacity
        self.dropped: list[SpeechMessage] = []
        self._heap: list[tuple[int, int, SpeechMessage]] = []
        self._next_seq = 0

    def __len__(self) -> int:
        return len(self._heap)

    def submit(
        self, text: str, priority: Priority, now_s: float, rate: float = 1.0
    ) -> EnqueueAck:
        """Stamp a sequence number and enqueue."""
        msg = SpeechMessage(
            text=text,
            priority=Priority(priority),
            enqueued_at_s=now_s,
            rate=rate,
            sequence=self._next_seq,
        )
        self._next_seq += 1
        return self.enqueue(msg)

    def enqueue(self, msg: SpeechMessage) -> EnqueueAck:
        """Store a message, evicting per drop policy when full.

        At capacity the lowest-priority newest message (incoming included)
        is dropped into the drop report; the ack names it.
        """
        heapq.heappush(self._heap, (int(msg.priority), msg.sequence, msg))
        if len(self._heap) <= self.capacity:
            return EnqueueAck(message=msg)
        victim_key = max((p, s) for p, s, _ in self._heap)
        victim = next(m for p, s, m in self._heap if (p, s) == victim_key)
        self._heap = [item for item in self._heap if item[2] is not victim]
        heapq.heapify(self._heap)
        self.dropped.append(victim)
        return EnqueueAck(message=msg, dropped=victim)

    def dequeue_next(self) -> SpeechMessage | None:
        if not self._heap:
            return None
        return heapq.heappop(self._heap)[2]

    def requeue(self, msg: SpeechMessage) -> None:
        """Put a failed message back under its original stamp."""
        heapq.heappush(self._heap, (int(msg.priority), msg.sequence, msg))


def speak_all(
    queue: SpeechQueue,
    backend: SpeechBackend,
    clock: VirtualClock,
    base_per_char_s: float = 0.05,
    transcript: Transcript | None = None,
) -> Transcript:
    """Drain the queue through the backend, recording each spoken message.

    Each message advances the clock by its modeled duration. A backend
    failure re-queues the message once; a second failure raises.
    """
    if transcript is None:
        transcript = Transcript()
    retried: set[int] = set()
    while True:
        msg = queue.dequeue_next()
        if msg is None:
            return transcript
        now = clock.now()
        try:
            backend.speak(msg, now)
        except Exception as exc:
            if msg.sequence in retried:
                raise SpeechBackendError(
                    f"backend {backend.backend_id!r} failed twice on {msg.text!r}: {exc}"
                ) from exc
            retried.add(msg.sequence)
            queue.requeue(msg)
            continue
        transcript.append(TranscriptEntry(now, msg.priority, msg.text))
        clock.advance(message_duration_s(msg, base_per_char_s))
