import random

import pytest

from percept_cane.alerts import (
    AlertConfig,
    AlertState,
    OutOfOrderError,
    format_alert_speech,
    format_distance_line,
    on_measurement,
    parse_distance_line,
)
from percept_cane.sensor import DistanceMeasurement, SensorConfig

CFG = AlertConfig(threshold_cm=100.0, min_interval_s=2.0, rearm_margin_cm=0.0)


def m(distance_cm: float, t: float, sensor: SensorConfig | None = None) -> DistanceMeasurement:
    sensor = sensor or SensorConfig()
    return DistanceMeasurement(
        distance_cm=distance_cm,
        exec_time_s=0.005,
        in_range=sensor.min_range_cm <= distance_cm <= sensor.max_range_cm,
        timestamp_s=t,
    )


def test_fires_when_armed_and_below_threshold():
    state = AlertState()
    event = on_measurement(state, m(53.4, 1.0), CFG)
    assert event is not None
    assert event.distance_cm == 53.4
    assert event.timestamp_s == 1.0
    assert event.message == "Obstacle ahead at 53.4 centimeters"


def test_above_threshold_no_event():
    assert on_measurement(AlertState(), m(250.0, 0.0), CFG) is None


def test_debounce_then_refire():
    state = AlertState()
    assert on_measurement(state, m(60.0, 1.0), CFG) is not None
    assert on_measurement(state, m(60.0, 1.5), CFG) is None
    assert on_measurement(state, m(60.0, 3.1), CFG) is not None


def test_out_of_range_reading_never_fires():
    # 30 cm is below the sensor floor, so in_range is false even though it
    # is under the threshold
    assert on_measurement(AlertState(), m(30.0, 0.0), CFG) is None


def test_hysteresis_blocks_until_retreat():
    cfg = AlertConfig(threshold_cm=100.0, min_interval_s=0.0, rearm_margin_cm=20.0)
    state = AlertState()
    assert on_measurement(state, m(90.0, 0.0), cfg) is not None
    # still close: disarmed, interval alone would allow it
    assert on_measurement(state, m(90.0, 1.0), cfg) is None
    # retreat beyond threshold + margin re-arms
    assert on_measurement(state, m(130.0, 2.0), cfg) is None
    assert on_measurement(state, m(90.0, 3.0), cfg) is not None


def test_retreat_must_exceed_margin():
    cfg = AlertConfig(threshold_cm=100.0, min_interval_s=0.0, rearm_margin_cm=20.0)
    state = AlertState()
    assert on_measurement(state, m(90.0, 0.0), cfg) is not None
    # 110 <= threshold + margin: not enough to re-arm
    assert on_measurement(state, m(110.0, 1.0), cfg) is None
    assert on_measurement(state, m(95.0, 2.0), cfg) is None


def test_out_of_order_timestamp_raises():
    state = AlertState()
    on_measurement(state, m(250.0, 5.0), CFG)
    with pytest.raises(OutOfOrderError):
        on_measurement(state, m(250.0, 4.0), CFG)


def test_equal_timestamps_allowed():
    state = AlertState()
    on_measurement(state, m(250.0, 5.0), CFG)
    assert on_measurement(state, m(250.0, 5.0), CFG) is None


def test_format_distance_line():
    assert format_distance_line(53.4) == "Measure Distance = 53.4 cm"
    assert format_distance_line(0.0) == "Measure Distance = 0.0 cm"
    assert format_distance_line(161.04) == "Measure Distance = 161.0 cm"


def test_distance_line_round_trip():
    rng = random.Random(3)
    for _ in range(500):
        d = round(rng.uniform(0, 400), 1)
        assert parse_distance_line(format_distance_line(d)) == d
    with pytest.raises(ValueError):
        parse_distance_line("Distance: 53.4")


def test_format_alert_speech():
    assert format_alert_speech(53.4) == "Obstacle ahead at 53.4 centimeters"
    assert format_alert_speech(100.0) == "Obstacle ahead at 100.0 centimeters"
    assert format_alert_speech(5, "{d} cm!") == "5.0 cm!"


def test_config_invariants():
    with pytest.raises(ValueError):
        AlertConfig(threshold_cm=0.0)
    with pytest.raises(ValueError):
        AlertConfig(min_interval_s=-1.0)
    with pytest.raises(ValueError):
        AlertConfig(rearm_margin_cm=-5.0)


def _random_stream_properties(seed: int, cfg: AlertConfig) -> None:
    rng = random.Random(seed)
    sensor = SensorConfig()
    state = AlertState()
    t = 0.0
    events = []
    readings = []
    for _ in range(40):
        t += rng.uniform(0.0, 1.5)
        d = rng.uniform(0.0, 400.0)
        measurement = m(d, t, sensor)
        readings.append(measurement)
        event = on_measurement(state, measurement, cfg)
        if event is not None:
            events.append(event)

    for e in events:
        assert e.distance_cm <= cfg.threshold_cm
    for a, b in zip(events, events[1:]):
        assert b.timestamp_s - a.timestamp_s >= cfg.min_interval_s
    if cfg.rearm_margin_cm > 0:
        for a, b in zip(events, events[1:]):
            between = [
                r.distance_cm
                for r in readings
                if a.timestamp_s < r.timestamp_s <= b.timestamp_s
            ]
            assert any(
                d > cfg.threshold_cm + cfg.rearm_margin_cm for d in between
            )


def test_property_suite_small():
    for seed in range(300):
        _random_stream_properties(seed, CFG)
        _random_stream_properties(
            seed, AlertConfig(threshold_cm=120.0, min_interval_s=1.0, rearm_margin_cm=30.0)
        )
