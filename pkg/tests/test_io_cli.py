import io
import json
import random
import re
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import random_instance
from proxyrep.cli import run
from proxyrep.geometry import Arrangement, Instance
from proxyrep.io import (DocumentError, ResultDocument, emit_instance, emit_result,
                         parse_instance, parse_result)
from proxyrep.render import render_svg, x_pixel
from proxyrep.verify import Violation

SQUEEZED_DOC = '{"candidates":["0","11/30","19/30","1"],"theta":"1/3"}'
SQUEEZED = Instance([0, F(11, 30), F(19, 30), 1], F(1, 3))


def test_parse_examples():
    assert parse_instance(SQUEEZED_DOC) == SQUEEZED
    assert parse_instance('{"candidates":["0","1"],"theta":"1/2"}') == Instance([0, 1], F(1, 2))


@pytest.mark.parametrize("doc, msg", [
    ('{"candidates":["0","0.5","1"],"theta":"1/3"}', "decimal literal"),
    ('{"candidates":["0",0.5,"1"],"theta":"1/3"}', "decimal literal"),
    ('{"candidates":["0","1/x","1"],"theta":"1/3"}', "malformed rational"),
    ('{"candidates":["0","1/0","1"],"theta":"1/3"}', "zero denominator"),
    ('{"candidates":["0","2/3","1/3","1"],"theta":"1/3"}', "strictly increasing"),
    ('{"candidates":["0","1/2","1/2","1"],"theta":"1/3"}', "strictly increasing"),
    ('{"candidates":["0","1/2"],"theta":"1/3"}', "0 and 1"),
    ('{"candidates":["0","1"],"theta":"1"}', "strictly between"),
    ('{"candidates":["0","1"]}', "missing field 'theta'"),
    ('[1, 2]', "JSON object"),
    ('{"candidates":', "not valid JSON"),
])
def test_parse_diagnostics(doc, msg):
    with pytest.raises(DocumentError, match=msg):
        parse_instance(doc)


@given(st.integers(0, 10**6))
def test_instance_round_trip(seed):
    inst = random_instance(random.Random(seed))
    assert parse_instance(emit_instance(inst, "x")) == inst


fracs = st.fractions(min_value=-3, max_value=3, max_denominator=1000)


@given(st.lists(fracs, min_size=1, max_size=6, unique=True), st.fractions(0, 1).filter(lambda t: 0 < t < 1),
       st.booleans(), st.sampled_from(["restricted", "unrestricted", "verify", "elect", "dual"]))
def test_result_round_trip(ps, theta, with_violation, mode):
    res = ResultDocument(mode=mode, theta=theta, proxies=sorted(ps),
                         status="violation" if with_violation else "ok",
                         violation=Violation(F(1, 3), 0, ps[0], 2) if with_violation else None,
                         bounds={"upper": F(9, 2), "lower": F(1)}, name="n",
                         distance=F(1, 7) if mode == "elect" else None)
    assert parse_result(emit_result(res)) == res


def test_result_rejects_unsorted_proxies():
    with pytest.raises(DocumentError):
        ResultDocument(mode="verify", theta=F(1, 2), proxies=(1, 0))


@pytest.fixture
def squeezed_file(tmp_path):
    p = tmp_path / "squeezed.json"
    p.write_text(SQUEEZED_DOC)
    return str(p)


def cli(args, capsys):
    code = run(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_unrestricted(squeezed_file, capsys):
    code, out, _ = cli(["solve", squeezed_file, "--mode", "unrestricted"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["count"] == 3 and doc["status"] == "ok"
    assert parse_result(out).proxies == (F(-2, 15), F(1, 2), F(17, 15))


def test_solve_from_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(SQUEEZED_DOC))
    code, out, _ = cli(["solve", "--mode", "restricted", "--tiebreak", "right"], capsys)
    assert code == 0 and json.loads(out)["count"] == 4


def test_verify_violation_exit(squeezed_file, capsys):
    code, out, _ = cli(["verify", squeezed_file, "--arrangement", '["0","1"]'], capsys)
    doc = json.loads(out)
    assert code == 1 and doc["status"] == "violation" and "violation" in doc


def test_verify_ok_with_inline_list(squeezed_file, capsys):
    code, _, _ = cli(["verify", squeezed_file, "--arrangement=-2/15,1/2,17/15"], capsys)
    assert code == 0


def test_genlower(capsys):
    code, out, _ = cli(["genlower", "--mode", "unrestricted", "--theta", "3/10"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["candidates"] == ["0", "1/3", "2/3", "1"]
    assert doc["status"] == "ok" and doc["count"] == 4
    assert parse_instance(out) == Instance([0, F(1, 3), F(2, 3), 1], F(3, 10))


def test_bound_and_dual_embed_status(squeezed_file, capsys):
    for args in (["bound", squeezed_file, "--mode", "restricted"],
                 ["bound", squeezed_file, "--mode", "unrestricted"],
                 ["dual", squeezed_file, "--k", "6"]):
        code, out, _ = cli(args, capsys)
        assert code == 0 and json.loads(out)["status"] == "ok"


def test_elect(squeezed_file, capsys):
    code, out, _ = cli(["elect", squeezed_file, "--arrangement=-2/15,1/2,17/15",
                        "--profile", "1/10,2/5,9/10", "--side", "rightmost"], capsys)
    assert code == 0 and json.loads(out)["distance"] == "0"


def test_out_flag(squeezed_file, tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = cli(["solve", squeezed_file, "--mode", "restricted", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    assert parse_result(target.read_text()).count == 4


@pytest.mark.parametrize("args", [
    ["solve", "/nonexistent.json", "--mode", "restricted"],
    ["solve", "--bogus"],
    ["launch"],
    ["genlower", "--mode", "restricted", "--theta", "0.3"],
    ["genlower", "--mode", "restricted", "--theta", "3/2"],
    [],
])
def test_input_errors_exit_2(args, capsys):
    code, _, err = cli(args, capsys)
    assert code == 2 and err.startswith("proxyrep:")


def test_dual_small_budget_rejected(squeezed_file, capsys):
    assert cli(["dual", squeezed_file, "--k", "2"], capsys)[0] == 2


def test_render_via_cli(squeezed_file, capsys):
    code, out, _ = cli(["render", squeezed_file, "--arrangement=-2/15,1/2,17/15"], capsys)
    assert code == 0 and out == render_svg(SQUEEZED, Arrangement([F(-2, 15), F(1, 2), F(17, 15)]))


def test_render_squeezed():
    svg = render_svg(SQUEEZED, Arrangement([F(-2, 15), F(1, 2), F(17, 15)]))
    assert svg.startswith("<svg") and 'width="1200"' in svg and 'height="200"' in svg
    assert svg.count('class="candidate"') == 4
    assert svg.count('class="proxy"') == 3
    xs = re.findall(r'class="proxy-bisector" x1="([\d.]+)"', svg)
    assert xs == ["410.000", "790.000"]
    assert x_pixel(F(11, 60)) == 410 and x_pixel(F(49, 60)) == 790
    assert x_pixel(F(-1, 2)) == 0 and x_pixel(F(3, 2)) == 1200
    bold = re.search(r'class="proxy-bisector"[^>]*stroke-width="(\d+)"', svg).group(1)
    thin = re.search(r'class="candidate-bisector"[^>]*stroke-width="(\d+)"', svg).group(1)
    assert int(bold) > int(thin)


def test_render_instance_only():
    svg = render_svg(SQUEEZED)
    assert "<circle" not in svg
    assert svg.count('class="candidate-bisector"') == 3
    assert svg.count("<rect") == 4


def test_render_is_deterministic():
    arr = Arrangement([F(1, 6), F(5, 6)])
    assert render_svg(SQUEEZED, arr) == render_svg(SQUEEZED, arr)
    assert render_svg(SQUEEZED, bisectors=False) == render_svg(SQUEEZED, bisectors=False)
