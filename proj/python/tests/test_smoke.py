import pathlib

import pytest

import eedp

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def load(name):
    return eedp.Instance.parse((FIXTURES / name).read_text())


def test_parse_roundtrip():
    inst = load("crossing.eedp")
    again = eedp.Instance.parse(inst.serialize())
    assert again.fingerprint() == inst.fingerprint()
    assert inst.is_eulerian()


def test_parse_errors():
    with pytest.raises(eedp.ParseError):
        eedp.Instance.parse("not an instance")


def test_solve_returns_disjoint_linkage():
    for name in ("minimal.eedp", "parallel.eedp", "crossing.eedp"):
        inst = load(name)
        r = eedp.solve(inst)
        assert r["verdict"] in ("yes", "no")
        if r["verdict"] == "yes":
            used = [e for p in r["paths"] for e in p]
            assert len(used) == len(set(used))
            assert len(r["paths"]) == len(inst.demands)


def test_two_star_matches_oracle():
    inst = load("bowtie.eedp")
    assert eedp.two_star_feasible(inst) == (eedp.solve(inst)["verdict"] == "yes")


def test_normalize_preserves_answer():
    for seed in range(1, 6):
        inst = eedp.random_instance(8, 18, 2, seed)
        norm = eedp.normalize(inst)
        assert norm.is_normal()
        assert eedp.equivalent(inst, norm) is not False


def test_reduce_and_replay():
    inst = load("router5_p2.eedp")
    r = eedp.reduce(inst, verify=True)
    assert not r["error"]
    assert r["reduced"].num_edges <= inst.num_edges
    assert eedp.replay(inst, r["log"]).fingerprint() == r["reduced"].fingerprint()
    assert r["answer"] == eedp.solve(inst)["verdict"]


def test_irrelevant_cycle_in_planted_router():
    inst, cycles = eedp.planted_router(5, 1, 3)
    ic = eedp.irrelevant_cycle(inst, cycles)
    assert ic["status"] == "found"
    smaller = eedp.delete_cycle(inst, ic["cycle"])
    assert eedp.equivalent(inst, smaller) is True


def test_structures():
    assert eedp.cross_column_router(4)["valid"]
    sw = eedp.canonical_swirl(3)
    assert sw["valid"] and sw["line_graph"] and sw["order"] == 3
    census = eedp.wall_census((FIXTURES / "wall12_matched.eedp").read_text())
    assert census["complete"]
    assert census["structure"] == "cross"


def test_flower_generator():
    inst, cycles = eedp.flower(2, 2, 1)
    assert inst.is_eulerian()
    assert len(cycles) > 0
    assert "digraph" in inst.to_dot()
