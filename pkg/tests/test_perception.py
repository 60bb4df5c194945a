import pytest

from percept_cane.perception import (
    BackendError,
    BoundingBox,
    Detection,
    Frame,
    MockDetector,
    MockOcr,
    build_detector,
    build_ocr,
    detect,
    extract_text,
    load_class_vocabulary,
    validate_frame,
)

BOX = BoundingBox(0.1, 0.1, 0.5, 0.5)


def frame_with(objects=(), texts=(), frame_id="f0") -> Frame:
    return Frame(frame_id=frame_id, truth_objects=tuple(objects), truth_texts=tuple(texts))


def test_bounding_box_invariants():
    with pytest.raises(ValueError):
        BoundingBox(0.5, 0.0, 0.1, 1.0)
    with pytest.raises(ValueError):
        BoundingBox(0.0, 0.0, 1.2, 1.0)
    with pytest.raises(ValueError):
        BoundingBox(-0.1, 0.0, 0.5, 1.0)
    assert BoundingBox(0.2, 0.2, 0.2, 0.8).area() == 0.0


def test_detection_confidence_bounds():
    with pytest.raises(ValueError):
        Detection("person", 1.5, BOX)


def test_mock_detector_passthrough():
    dets = detect(frame_with([("person", BOX)]), MockDetector(miss_prob=0.0, seed=0))
    assert len(dets) == 1
    assert dets[0].label == "person"
    assert dets[0].box == BOX
    assert 0.5 <= dets[0].confidence < 1.0


def test_mock_detector_total_suppression():
    assert detect(frame_with([("person", BOX)]), MockDetector(miss_prob=1.0, seed=0)) == []


def test_mock_detector_miss_rate_binomial():
    det = MockDetector(miss_prob=0.5, seed=7)
    count = sum(
        len(det.detect(frame_with([("person", BOX)], frame_id=f"f{i}")))
        for i in range(1000)
    )
    assert 450 <= count <= 550


def test_mock_detector_no_hallucination():
    truth = [("person", BOX), ("dog", BoundingBox(0.6, 0.6, 0.9, 0.9))]
    dets = MockDetector(miss_prob=0.3, seed=11).detect(frame_with(truth, frame_id="x"))
    truth_set = set(truth)
    for d in dets:
        assert (d.label, d.box) in truth_set


def test_mock_determinism_and_call_order_independence():
    frames = [frame_with([("person", BOX)], frame_id=f"f{i}") for i in range(20)]
    det = MockDetector(miss_prob=0.4, seed=3)
    forward = [det.detect(f) for f in frames]
    backward = [det.detect(f) for f in reversed(frames)]
    assert forward == list(reversed(backward))
    again = MockDetector(miss_prob=0.4, seed=3)
    assert [again.detect(f) for f in frames] == forward


def test_mock_ocr_identity_at_zero_rate():
    ocr = MockOcr(substitution_rate=0.0, confusion_rules=(("t", "r"),), seed=0)
    out = extract_text(frame_with(texts=[("EXIT", BOX)]), ocr)
    assert [e.text for e in out] == ["EXIT"]
    assert out[0].region == BOX


def test_mock_ocr_full_rate_substitutions():
    li = MockOcr(substitution_rate=1.0, confusion_rules=(("l", "i"),), seed=0)
    assert li.transcribe("hello", key="k") == "heiio"
    tr = MockOcr(substitution_rate=1.0, confusion_rules=(("t", "r"),), seed=0)
    assert tr.transcribe("text", key="k") == "rexr"


def test_mock_ocr_substitution_preserves_length():
    ocr = MockOcr(substitution_rate=0.5, confusion_rules=(("l", "i"), ("t", "r")), seed=5)
    for i in range(100):
        word = "telltale"
        assert len(ocr.transcribe(word, key=f"k{i}")) == len(word)


def test_mock_ocr_suffix_rules_default_off():
    ocr = MockOcr(substitution_rate=0.0, seed=0)
    assert ocr.transcribe("note", key="a") == "note"
    ins = MockOcr(suffix_insert_rate=1.0, suffix_insert_char=".", seed=0)
    assert ins.transcribe("note", key="a") == "note."
    dele = MockOcr(suffix_delete_rate=1.0, seed=0)
    assert dele.transcribe("query", key="a") == "quer"


def test_mock_ocr_transcribe_matches_extract():
    ocr = MockOcr(substitution_rate=1.0, confusion_rules=(("x", "y"),), seed=9)
    frame = frame_with(texts=[("axbx", BOX)], frame_id="fr")
    assert [e.text for e in ocr.extract(frame)] == [ocr.transcribe("axbx", key="fr/0")]


def test_backend_error_wrapping():
    class Exploding:
        backend_id = "boom"

        def detect(self, frame):
            raise RuntimeError("no camera")

        def extract(self, frame):
            raise RuntimeError("no lens")

    with pytest.raises(BackendError) as info:
        detect(frame_with(), Exploding())
    assert "boom" in str(info.value)
    with pytest.raises(BackendError):
        extract_text(frame_with(), Exploding())


def test_load_class_vocabulary_bundled():
    labels = load_class_vocabulary()
    assert len(labels) == 80
    assert labels[0] == "person"
    assert len(set(labels)) == 80


def test_load_class_vocabulary_errors(tmp_path):
    short = tmp_path / "short.txt"
    short.write_text("\n".join(f"label{i}" for i in range(79)) + "\n")
    with pytest.raises(ValueError, match="79"):
        load_class_vocabulary(short)

    dupes = tmp_path / "dupes.txt"
    rows = [f"label{i}" for i in range(79)] + ["label5"]
    dupes.write_text("\n".join(rows) + "\n")
    with pytest.raises(ValueError, match="label5"):
        load_class_vocabulary(dupes)


def test_validate_frame_vocabulary():
    vocab = load_class_vocabulary()
    validate_frame(frame_with([("chair", BOX)]), vocab)
    with pytest.raises(ValueError, match="door"):
        validate_frame(frame_with([("door", BOX)]), vocab)


def test_backend_registry():
    assert build_detector("mock").backend_id == "mock"
    assert build_ocr("mock-tesseract").backend_id == "mock-tesseract"
    assert build_ocr("mock-easyocr").backend_id == "mock-easyocr"
    with pytest.raises(ValueError):
        build_detector("resnet")
    with pytest.raises(ValueError):
        build_ocr("tesseract5")


def test_registry_rates_disjoint_from_truth():
    # the tesseract mock only touches 't'; digit strings pass unchanged
    ocr = build_ocr("mock-tesseract", seed=1)
    assert ocr.transcribe("12345.67", key="n") == "12345.67"
