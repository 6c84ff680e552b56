"""Identifier segmentation, recombination, and ASCII folding.

The core invariant: splitting an identifier into words and joining
those words back in the detected convention reproduces the identifier,
underscore decorations included.
"""

from __future__ import annotations

import random

from hypothesis import given, settings, strategies as st

from codeintl.identifiers import (
    CasingConvention,
    fold_to_ascii,
    phrase_of,
    recombine,
    segment,
)

WORDS = [
    "move", "turn", "step", "count", "beeper", "wall", "front", "left",
    "total", "index", "value", "grid", "world", "robot", "pick", "run",
]


def test_camel_case_splits_on_case_change():
    seg = segment("turnAround")
    assert seg.segments == ("turn", "around")
    assert seg.convention is CasingConvention.CAMEL


def test_pascal_case():
    seg = segment("StepCounter")
    assert seg.segments == ("step", "counter")
    assert seg.convention is CasingConvention.PASCAL


def test_lower_snake():
    seg = segment("step_count")
    assert seg.segments == ("step", "count")
    assert seg.convention is CasingConvention.LOWER_SNAKE


def test_upper_snake():
    seg = segment("MAX_STEPS")
    assert seg.segments == ("max", "steps")
    assert seg.convention is CasingConvention.UPPER_SNAKE


def test_single_word_is_flat():
    seg = segment("counter")
    assert seg.segments == ("counter",)
    assert seg.convention is CasingConvention.FLAT


def test_acronym_runs_stay_single_segments():
    assert segment("HTTPServer").segments == ("http", "server")
    assert segment("parseHTTPResponse").segments == ("parse", "http", "response")


def test_underscore_decorations_survive():
    seg = segment("_private_name_")
    assert seg.leading_underscores == 1
    assert seg.trailing_underscores == 1
    assert recombine(seg, list(seg.segments)) == "_private_name_"


def test_phrase_of_joins_with_spaces():
    assert phrase_of(segment("turnAround")) == "turn around"
    assert phrase_of(segment("MAX_STEPS")) == "max steps"


def test_recombine_redresses_new_words_in_same_convention():
    assert recombine(segment("turnAround"), ["media", "vuelta"]) == "mediaVuelta"
    assert recombine(segment("step_count"), ["cuenta", "de", "pasos"]) == "cuenta_de_pasos"
    assert recombine(segment("MAX_STEPS"), ["pasos", "maximos"]) == "PASOS_MAXIMOS"
    assert recombine(segment("StepCounter"), ["contador"]) == "Contador"
    assert recombine(segment("_hidden"), ["oculto"]) == "_oculto"


def test_cjk_identifier_is_one_segment():
    seg = segment("计数")
    assert seg.segments == ("计数",)
    assert recombine(seg, list(seg.segments)) == "计数"


def test_fold_to_ascii_strips_accents():
    assert fold_to_ascii("mediaVuelta") == "mediaVuelta"
    assert fold_to_ascii("contraseña") == "contrasena"
    assert fold_to_ascii("média") == "media"


def make_identifier(rng: random.Random, words: list[str]) -> str:
    """One identifier in a randomly chosen convention."""
    k = rng.randint(1, 4)
    chosen = [rng.choice(words) for _ in range(k)]
    style = rng.randrange(5)
    if style == 0:  # camel
        return chosen[0] + "".join(w.capitalize() for w in chosen[1:])
    if style == 1:  # pascal
        return "".join(w.capitalize() for w in chosen)
    if style == 2:  # lower snake
        return "_".join(chosen)
    if style == 3:  # upper snake
        return "_".join(w.upper() for w in chosen)
    return chosen[0]  # flat


def test_round_trip_over_generated_conventions():
    rng = random.Random(883)
    for _ in range(2000):
        name = make_identifier(rng, WORDS)
        seg = segment(name)
        assert recombine(seg, list(seg.segments)) == name, name


@given(st.lists(st.sampled_from(WORDS), min_size=1, max_size=4),
       st.integers(min_value=0, max_value=4))
@settings(max_examples=400)
def test_round_trip_property(chosen, style):
    if style == 0:
        name = chosen[0] + "".join(w.capitalize() for w in chosen[1:])
    elif style == 1:
        name = "".join(w.capitalize() for w in chosen)
    elif style == 2:
        name = "_".join(chosen)
    elif style == 3:
        name = "_".join(w.upper() for w in chosen)
    else:
        name = chosen[0]
    seg = segment(name)
    assert recombine(seg, list(seg.segments)) == name
