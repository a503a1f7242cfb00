"""The engine over the rationals: exact but slower, so kept to tiny fixtures."""

import json

import numpy as np

from ladderkit.algebra import Idempotent, build_triangular, dual_numbers_algebra, ground_field_algebra
from ladderkit.homological import ext_dims, is_stratifying, spli_silp
from ladderkit.ladder import ladder_report
from ladderkit.linalg import Field
from ladderkit.modules import hom_space, random_module, regular_module, simples
from ladderkit.recollement import build_recollement, verify_canonical_sequences

Q = Field(None)


def test_t2_pipeline_over_the_rationals():
    t2 = build_triangular(ground_field_algebra(Q), 2)
    rec = build_recollement(t2, Idempotent(t2, t2.prim_idempotents[1]))
    rep = ladder_report(rec, max_steps=8, seed=0)
    assert rep.r_verdict.describe() == "Exact(4)"
    assert rep.l_verdict.describe() == "Exact(2)"
    assert is_stratifying(rec, 4)["status"] == "Yes"
    assert verify_canonical_sequences(rec, regular_module(t2))["status"] == "PASS"


def test_dual_numbers_over_the_rationals():
    dn = dual_numbers_algebra(Q)
    s = simples(dn)[0]
    assert ext_dims(s, s, 3) == [1, 1, 1, 1]
    rep = spli_silp(dn, 4)
    assert rep.describe() == "Yes(0)"


def test_random_modules_over_the_rationals():
    t2 = build_triangular(ground_field_algebra(Q), 2)
    rng = np.random.default_rng(3)
    m = random_module(t2, rng, max_summands=2)
    assert len(hom_space(regular_module(t2), m)) == m.dim


def test_cli_rational_spec(tmp_path, capsys):
    from ladderkit.cli import main

    spec = {
        "field": {"rational": True},
        "kind": "triangular",
        "base": "ground",
        "n": 2,
        "idempotent": "e2",
    }
    path = tmp_path / "t2q.json"
    path.write_text(json.dumps(spec))
    assert main(["ladder", "--algebra", str(path), "--max-steps", "6"]) == 0
    assert "Exact(4)" in capsys.readouterr().out
