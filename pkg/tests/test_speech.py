import pytest

from percept_cane.speech import (
    FlakySynth,
    NullSynth,
    Priority,
    SpeechBackendError,
    SpeechConfig,
    SpeechMessage,
    SpeechQueue,
    Transcript,
    TranscriptEntry,
    VirtualClock,
    message_duration_s,
    speak_all,
)


def test_enqueue_grows_queue():
    q = SpeechQueue()
    assert len(q) == 0
    q.submit("hello", Priority.INFO, 0.0)
    assert len(q) == 1


def test_priority_order():
    q = SpeechQueue()
    q.submit("info", Priority.INFO, 0.0)
    q.submit("alert", Priority.ALERT, 0.0)
    q.submit("percept", Priority.PERCEPTION, 0.0)
    assert [q.dequeue_next().text for _ in range(3)] == ["alert", "percept", "info"]


def test_fifo_within_priority():
    q = SpeechQueue()
    q.submit("first", Priority.ALERT, 0.0)
    q.submit("second", Priority.ALERT, 0.0)
    assert q.dequeue_next().text == "first"
    assert q.dequeue_next().text == "second"


def test_empty_dequeue_none():
    assert SpeechQueue().dequeue_next() is None


def test_capacity_drops_lowest_priority_newest():
    q = SpeechQueue(capacity=3)
    q.submit("a", Priority.ALERT, 0.0)
    q.submit("b", Priority.INFO, 0.0)
    q.submit("c", Priority.INFO, 0.0)
    ack = q.submit("d", Priority.PERCEPTION, 0.0)
    # newest of the lowest class present is "c"
    assert ack.dropped is not None and ack.dropped.text == "c"
    assert [m.text for m in q.dropped] == ["c"]
    assert len(q) == 3


def test_capacity_drops_incoming_when_it_is_lowest():
    q = SpeechQueue(capacity=2)
    q.submit("a", Priority.ALERT, 0.0)
    q.submit("b", Priority.PERCEPTION, 0.0)
    ack = q.submit("late info", Priority.INFO, 0.0)
    assert ack.dropped is not None and ack.dropped.text == "late info"
    assert len(q) == 2


def test_conservation_under_overflow(rng):
    q = SpeechQueue(capacity=8)
    submitted = []
    for i in range(50):
        prio = rng.choice(list(Priority))
        ack = q.submit(f"msg-{i}", prio, float(i))
        submitted.append(ack.message.text)
    clock = VirtualClock()
    transcript = speak_all(q, NullSynth(), clock)
    spoken = transcript.texts()
    dropped = [m.text for m in q.dropped]
    assert sorted(spoken + dropped) == sorted(submitted)
    assert len(spoken) + len(dropped) == 50


def test_duration_model():
    msg = SpeechMessage("x" * 20, Priority.INFO, 0.0, rate=2.0)
    assert message_duration_s(msg, base_per_char_s=0.05) == 0.5
    slow = SpeechMessage("x" * 20, Priority.INFO, 0.0, rate=1.0)
    assert message_duration_s(slow, 0.05) == 2 * message_duration_s(msg, 0.05)


def test_speak_all_order_and_timing():
    q = SpeechQueue()
    q.submit("bb", Priority.PERCEPTION, 0.0)
    q.submit("aaaa", Priority.ALERT, 0.0)
    q.submit("c", Priority.INFO, 0.0)
    clock = VirtualClock()
    transcript = speak_all(q, NullSynth(), clock, base_per_char_s=0.1)
    assert transcript.texts() == ["aaaa", "bb", "c"]
    times = [e.spoken_at_s for e in transcript.entries]
    assert times == pytest.approx([0.0, 0.4, 0.6])
    assert clock.now() == pytest.approx(0.7)


def test_speak_all_deterministic():
    def run():
        q = SpeechQueue()
        for i in range(5):
            q.submit(f"m{i}", Priority(i % 3), float(i))
        return speak_all(q, NullSynth(), VirtualClock()).render()

    assert run() == run()


def test_failed_message_retried_once():
    q = SpeechQueue()
    q.submit("fragile", Priority.ALERT, 0.0)
    q.submit("fine", Priority.INFO, 0.0)
    transcript = speak_all(q, FlakySynth({"fragile": 1}), VirtualClock())
    assert transcript.texts() == ["fragile", "fine"]


def test_double_failure_raises():
    q = SpeechQueue()
    q.submit("cursed", Priority.ALERT, 0.0)
    with pytest.raises(SpeechBackendError):
        speak_all(q, FlakySynth({"cursed": 2}), VirtualClock())


def test_transcript_render_format():
    tr = Transcript()
    tr.append(TranscriptEntry(0.0, Priority.ALERT, "watch out"))
    tr.append(TranscriptEntry(1.2345, Priority.INFO, "hello"))
    assert tr.render() == "0.000\tALERT\twatch out\n1.234\tINFO\thello\n"


def test_transcript_rejects_time_travel():
    tr = Transcript()
    tr.append(TranscriptEntry(2.0, Priority.INFO, "later"))
    with pytest.raises(ValueError):
        tr.append(TranscriptEntry(1.0, Priority.INFO, "earlier"))


def test_virtual_clock():
    clock = VirtualClock()
    clock.advance(1.5)
    assert clock.now() == 1.5
    clock.advance_to(1.0)  # no-op backwards
    assert clock.now() == 1.5
    clock.advance_to(2.0)
    assert clock.now() == 2.0
    with pytest.raises(ValueError):
        clock.advance(-0.1)


def test_message_invariants():
    with pytest.raises(ValueError):
        SpeechMessage("x", Priority.INFO, 0.0, rate=0.0)
    with pytest.raises(ValueError):
        SpeechConfig(base_per_char_s=0.0)
    with pytest.raises(ValueError):
        SpeechQueue(capacity=0)
