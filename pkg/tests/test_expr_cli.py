import json
import random
import subprocess
import sys

import pytest

from oddtl.cli import main
from oddtl.expr import (
    ArityError,
    Compose,
    ExprSyntaxError,
    Gen,
    Indexed,
    Scaled,
    Tensor,
    evaluate,
    parse,
    to_text,
)
from oddtl.jones_wenzl import jw
from oddtl.scalars import LaurentPoly, RatFunc, delta
from oddtl.tl import cap, cup, identity


def random_scalar(rng):
    num = LaurentPoly({rng.randint(-2, 2): rng.randint(-4, 4) or 1 for _ in range(2)})
    if rng.random() < 0.5:
        return RatFunc(num)
    return RatFunc(num, LaurentPoly({rng.randint(-2, 2): rng.randint(1, 3)}))


def random_expr(rng, src, depth):
    """A well-typed expression with the given source; returns (expr, target)."""
    roll = rng.random()
    if depth == 0 or roll < 0.3:
        leaves = [(Indexed("id", src), src), (Indexed("jw", src), src)]
        if src >= 2:
            leaves.append((Indexed("vn", src), src - 2))
        if src + 2 <= 5:
            leaves.append((Indexed("un", src + 2), src + 2))
        if src == 2:
            leaves.append((Gen("cap"), 0))
        if src == 0:
            leaves.append((Gen("cup"), 2))
        return rng.choice(leaves)
    if roll < 0.55 and src >= 1:
        a = rng.randint(0, src)
        left, t1 = random_expr(rng, a, depth - 1)
        right, t2 = random_expr(rng, src - a, depth - 1)
        return Tensor(left, right), t1 + t2
    if roll < 0.85:
        first, k = random_expr(rng, src, depth - 1)
        second, t = random_expr(rng, k, depth - 1)
        return Compose(second, first), t
    body, t = random_expr(rng, src, depth - 1)
    return Scaled(random_scalar(rng), body), t


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


# -- parser ------------------------------------------------------------------------
def test_grammar_examples():
    assert parse("cap * cup") == Compose(Gen("cap"), Gen("cup"))
    zig = parse("(id(1) ox cap) * (cup ox id(1))")
    assert zig == Compose(Tensor(Indexed("id", 1), Gen("cap")), Tensor(Gen("cup"), Indexed("id", 1)))
    assert parse("jw(3) * jw(3)") == Compose(Indexed("jw", 3), Indexed("jw", 3))
    assert parse("cap ⊗ cap") == parse("cap ox cap")
    assert parse("2·cap") == parse("2 . cap") == Scaled(RatFunc(2), Gen("cap"))


def test_precedence_and_associativity():
    assert parse("cap ox cap * cup ox cup") == Compose(
        Tensor(Gen("cap"), Gen("cap")), Tensor(Gen("cup"), Gen("cup")))
    assert parse("id(1) * id(1) * id(1)") == Compose(Compose(Indexed("id", 1), Indexed("id", 1)),
                                                     Indexed("id", 1))
    assert parse("cap ox cap ox cap") == Tensor(Tensor(Gen("cap"), Gen("cap")), Gen("cap"))


def test_scalar_forms():
    s = parse("(q^2 - 1 + q^-2)/(q - q^-1)·id(2)")
    assert isinstance(s, Scaled) and s.scalar * RatFunc(LaurentPoly({1: 1, -1: -1})) == \
        RatFunc(LaurentPoly({2: 1, 0: -1, -2: 1}))
    assert parse("-q^-1·cup").scalar == RatFunc(LaurentPoly({-1: -1}))
    assert parse("3/2*q · cap").scalar == RatFunc(LaurentPoly({1: 1})) * RatFunc(3) / RatFunc(2)


def test_evaluation():
    assert evaluate(parse("cap * cup")) == RatFunc(delta()) * identity(0)
    assert evaluate(parse("(id(1) ox cap) * (cup ox id(1))")) == RatFunc(-1) * identity(1)
    assert evaluate(parse("(cap ox id(1)) * (id(1) ox cup)")) == identity(1)
    assert evaluate(parse("jw(3) * jw(3)")) == jw(3)
    assert evaluate(parse("cap * cup"), eps=1) == RatFunc(delta(1)) * identity(0, 1)
    assert evaluate(parse("cap * cross * cup"), "brauer").is_zero()
    assert evaluate(parse("q·cap")) == RatFunc.q(1) * cap()
    assert evaluate(parse("cup ox cup")) == cup() ^ cup()


@pytest.mark.parametrize("text, position", [
    ("cap *", 5), ("cap ** cup", 5), ("(cap", 4), ("cap )", 4), ("id(x)", 3), ("foo", 0),
])
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ExprSyntaxError) as info:
        parse(text)
    assert info.value.position == position


def test_arity_errors_name_the_subterm():
    with pytest.raises(ArityError) as info:
        evaluate(parse("id(1) ox (cap * id(3))"))
    assert to_text(info.value.subterm) == "cap * id(3)"
    with pytest.raises(ArityError):
        evaluate(parse("cross"))
    with pytest.raises(ArityError):
        evaluate(parse("jw(2)"), "brauer")
    with pytest.raises(ArityError):
        evaluate(parse("gn(1)"))


def test_print_parse_round_trip():
    rng = random.Random(0)
    for i in range(500):
        e, _ = random_expr(rng, rng.randint(0, 3), 4)
        text = to_text(e)
        assert parse(text) == e, text
        if i < 60:
            evaluate(e)


# -- CLI ---------------------------------------------------------------------------
def test_cli_examples(capsys):
    assert run(capsys, "dims", "3", "3") == (0, "5", "")
    assert run(capsys, "eval", "cap * cup")[1] == "(-q + q^-1) · [empty]"
    assert run(capsys, "--classical", "eval", "cap * cup")[1] == "(-q - q^-1) · [empty]"
    assert run(capsys, "eval", "--classical", "cap * cup")[1] == "(-q - q^-1) · [empty]"
    assert run(capsys, "--q", "2", "eval", "cap * cup")[1] == "(-3/2) · [empty]"
    assert run(capsys, "decompose", "2")[1] == "V(2) ⊕ ΠV(0)"
    assert run(capsys, "--category", "brauer", "dims", "2", "2")[1] == "3"


def test_cli_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "decompose", "3")
    assert code == 0
    assert json.loads(out) == {"module": "V^3", "summands": [
        {"k": 3, "pi": 0, "mult": 1}, {"k": 1, "pi": 1, "mult": 2}]}
    first = run(capsys, "--output", "json", "jw", "3")[1]
    second = run(capsys, "--output", "json", "jw", "3")[1]
    assert first == second
    data = json.loads(first)
    assert data["source"] == data["target"] == 3 and data["parity"] == 0
    assert len(data["terms"]) == 5


def test_cli_checks(capsys):
    code, out, _ = run(capsys, "k0")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "--max-n", "4", "verify")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "--max-n", "2", "--output", "json", "envelope-check")
    assert code == 0 and json.loads(out)["ok"]


def test_cli_errors(capsys):
    code, _, err = run(capsys, "eval", "cap *")
    assert code == 2 and json.loads(err)["error"] == "syntax"
    assert json.loads(err)["position"] == 5
    code, _, err = run(capsys, "eval", "cap * cap")
    assert code == 2 and json.loads(err)["error"] == "arity"
    code, _, err = run(capsys, "--q", "-1", "dims", "1", "1")
    assert code == 2 and json.loads(err)["error"] == "usage"
    code, _, err = run(capsys, "dims", "-1", "1")
    assert code == 2 and json.loads(err)["error"] == "invalid"
    code, _, err = run(capsys, "frobnicate")
    assert code == 2


def test_console_entry_point():
    done = subprocess.run([sys.executable, "-m", "oddtl.cli", "dims", "4", "0"],
                          capture_output=True, text=True, check=False)
    assert done.returncode == 0 and done.stdout.strip() == "2"
