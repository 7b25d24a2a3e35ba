import random

import pytest

from helpers import random_closed_web, random_open_web
from sl3webs import zoo
from sl3webs.errors import ParseError
from sl3webs.webio import (load_web, load_webs, parse_web, parse_webs,
                           save_web, web_to_text)


def test_round_trip_zoo():
    for w in (zoo.circle_web(), zoo.arc(), zoo.y_web(), zoo.theta_web(),
              zoo.square_web(), zoo.drum(), zoo.w0(), zoo.kk_w()):
        again = parse_web(web_to_text(w))
        assert again.validate() == []
        assert again.canonical_key() == w.canonical_key()
        assert again.name == w.name


def test_round_trip_random():
    rng = random.Random(2)
    for _ in range(40):
        w = random_closed_web(rng) if rng.random() < 0.5 else random_open_web(rng)
        again = parse_web(web_to_text(w))
        assert again.canonical_key() == w.canonical_key()


def test_round_trip_is_exact():
    w = zoo.kk_w()
    assert web_to_text(parse_web(web_to_text(w))) == web_to_text(w)


def test_save_and_load(tmp_path):
    p = tmp_path / "a.web"
    save_web(p, zoo.drum())
    assert load_web(p).canonical_key() == zoo.drum().canonical_key()


def test_empty_web():
    w = parse_web("boundary .")
    assert w.is_closed is False or w.signs == ()
    assert w.validate() == []


def test_parse_errors_carry_line_numbers():
    bad = "web x\nvertex v0 source\nnonsense here\n"
    with pytest.raises(ParseError) as err:
        parse_web(bad)
    assert "3" in str(err.value)

    with pytest.raises(ParseError):
        parse_web("edge e0 b0\n")  # missing an endpoint
    with pytest.raises(ParseError):
        parse_web("vertex v0 upwards\n")  # not source/sink
    with pytest.raises(ParseError):
        parse_web("edge e0 b0 b1\nedge e0 b2 b3\n")  # duplicate id


def test_multi_block_text():
    text = web_to_text(zoo.theta_web()) + "\n" + web_to_text(zoo.circle_web())
    webs = parse_webs(text)
    assert [w.name for w in webs] == ["theta", "circle"]
    assert webs[0].canonical_key() == zoo.theta_web().canonical_key()
    assert webs[1].canonical_key() == zoo.circle_web().canonical_key()


def test_multi_block_file(tmp_path):
    p = tmp_path / "many.web"
    p.write_text("# a comment\n" + web_to_text(zoo.arc()) +
                 "\n\n" + web_to_text(zoo.y_web()), encoding="utf-8")
    webs = load_webs(p)
    assert len(webs) == 2
    assert str(webs[1].signs) in ("+++", "---")


def test_single_block_without_header():
    # a file that never says "web <name>" is still one web
    webs = parse_webs("boundary +-\nedge e0 b0 b1\n")
    assert len(webs) == 1
    assert webs[0].canonical_key() == zoo.arc().canonical_key()
