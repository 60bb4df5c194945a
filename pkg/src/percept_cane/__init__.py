"""Assistive-perception pipeline runtime and evaluation lab.

The runtime side simulates the device loop of a sensing cane: an ultrasonic
ranging sensor polled on a fixed tick, a debounced obstacle-alert engine, a
capture-on-alert perception step (OCR first, then object detection), and a
prioritized speech queue that stands in for audio output. Everything runs on
a virtual clock from a replayable scenario file, so a run is reproducible
byte for byte.

The lab side implements the evaluation tooling used to pick the device's
models and engines: IoU / average-precision / mAP detection metrics, an
accuracy-versus-compute Pareto analysis over bundled model tables, and an
OCR benchmark harness with engine routing rules.
"""

__version__ = "0.1.0"
