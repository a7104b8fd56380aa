import json
import subprocess
import sys

import pytest

from pcmatroid import Partition, PartitionMatroid, from_partition, lower_approx, upper_approx
from pcmatroid.cli import COMMANDS, run

ABCD = {"universe": ["a", "b", "c", "d"], "blocks": [["a", "b"], ["c", "d"]]}
P01_23 = {"universe": 4, "blocks": [[0, 1], [2, 3]]}


def call(*argv, doc=None):
    args = list(argv)
    if doc is not None:
        args += ["--json", json.dumps(doc)]
    return run(args)


def ok(*argv, doc=None):
    status, payload = call(*argv, doc=doc)
    assert status == 0, payload
    assert set(payload) == {"schema", "command", "result", "diagnostics"}
    assert payload["schema"] == 1
    return payload["result"]


def cli(*argv):
    return subprocess.run([sys.executable, "-m", "pcmatroid", *argv], capture_output=True, text=True)


def test_rank_example():
    assert ok("rank", "--set", "0,1,2", doc=P01_23) == 2


def test_check_axioms_on_partition_blocks():
    assert ok("check-axioms", "--kind", "circuits", doc=P01_23) is True
    assert ok("check-axioms", "--kind", "circuits", doc=ABCD) is True


def test_check_axioms_violation_is_reported():
    status, payload = call("check-axioms", "--kind", "circuits",
                           doc={"universe": 3, "circuits": [[0, 1], [1, 2]]})
    assert status == 0 and payload["result"] is False
    assert payload["diagnostics"] == [{"verdict": False, "law": "C3", "witness": [[0, 1], [1, 2], 1]}]


def test_check_axioms_kinds():
    u = {"universe": 2}
    assert ok("check-axioms", "--kind", "independents", doc={**u, "independents": [[], [0], [1]]}) is True
    assert ok("check-axioms", "--kind", "bases", doc={**u, "family": [[0], [1]]}) is True
    assert ok("check-axioms", "--kind", "bases", doc={**u, "bases": []}) is False


def test_approx_matches_library():
    p = Partition.from_indices(4, [[0, 1], [2, 3]])
    x = p.universe.subset([0, 1, 2])
    got = ok("approx", "--set", "0,1,2", doc=P01_23)
    assert got["lower"] == lower_approx(p, x).labels() == [0, 1]
    assert got["upper"] == upper_approx(p, x).labels()
    assert got["boundary"] == [2, 3]


def test_labels_round_trip():
    got = ok("approx", "--set", "a,c", doc=ABCD)
    assert got == {"lower": [], "upper": ["a", "b", "c", "d"], "boundary": ["a", "b", "c", "d"]}


def test_approx_number_on_covering():
    doc = {"universe": 3, "blocks": [[0, 1], [1, 2], [2], [1, 0]]}
    status, payload = call("approx-number", "--set", "1,2", doc=doc)
    assert status == 0
    assert payload["result"] == {"lower": 2, "upper": 3, "blocks": 3}
    assert payload["diagnostics"] == ["duplicate blocks were removed from the covering"]


def test_set_in_document():
    assert ok("rank", doc={**P01_23, "set": [0, 1, 2]}) == 2


def test_nested_partition_form():
    doc = {"universe": ["a", "b", "c", "d"], "partition": {"blocks": [["a", "b"], ["c", "d"]]}}
    assert ok("rank", "--set", "a,b,c", doc=doc) == 2


def test_relation_input():
    rel = {"universe": 3, "pairs": [[0, 1], [1, 0]]}
    status, payload = call("rank", "--set", "0,1", doc=rel)
    assert status == 1
    assert payload["error"]["law"] == "reflexive"
    assert payload["error"]["witness"] == [0, 0]
    assert ok("rank", "--set", "0,1", "--reflexive-close", doc=rel) == 1
    full = {"universe": 3, "pairs": [[0, 0], [1, 1], [2, 2], [0, 1], [1, 0]]}
    assert ok("circuits", doc=full) == [[0, 1], [2]]


def test_build_partition_circuit():
    got = ok("build", doc=ABCD)
    assert got["capacities"] == [1, 1]
    assert got["rank"] == 2
    assert got["circuits"] == [["a", "b"], ["c", "d"]]
    assert got["bases"] == [["a", "c"], ["b", "c"], ["a", "d"], ["b", "d"]]


def test_build_general_matroid_forms():
    by_circuits = ok("build", doc={"universe": 3, "circuits": [[0, 1]]})
    by_bases = ok("build", doc={"universe": 3, "bases": [[0, 2], [1, 2]]})
    by_indep = ok("build", doc={"universe": 3, "independents": [[], [0], [1], [2], [0, 2], [1, 2]]})
    assert by_circuits == by_bases == by_indep
    assert by_circuits["rank"] == 2


def test_build_clamped_capacities():
    status, payload = call("build", "--capacities", "5,0", doc=P01_23)
    assert status == 0
    assert payload["result"]["capacities"] == [2, 0]
    assert payload["diagnostics"] == ["capacities above block size were clamped"]


def test_closure_and_dual():
    assert ok("closure", "--set", "0", doc=P01_23) == {"closure": [0, 1], "is_closed": False}
    assert ok("closure", "--set", "0,1", doc=P01_23) == {"closure": [0, 1], "is_closed": True}
    assert ok("closure", "--set", "0,2", doc=P01_23) == {"closure": [0, 1, 2, 3], "is_closed": False}
    m = from_partition(Partition.from_indices(4, [[0, 1], [2, 3]]))
    x = m.universe.subset([0])
    got = ok("dual", "--set", "0", doc=P01_23)
    assert got == {"capacities": [1, 1], "independent": m.dual_is_independent(x),
                   "rank": m.dual_rank(x), "closure": m.dual_closure(x).labels()}
    assert ok("dual", "--capacities", "0,2", doc=P01_23) == {"capacities": [2, 0]}
    assert ok("dual", "--set", "2", doc={"universe": 3, "circuits": [[0, 1]]}) == \
        {"bases": [[0], [1]], "independent": False, "rank": 0, "closure": [2]}


def test_partition_matroid_circuits_and_bases():
    assert ok("circuits", "--capacities", "1,2", doc=P01_23) == [[0, 1]]
    assert ok("bases", "--capacities", "1,2", doc=P01_23) == [[0, 2, 3], [1, 2, 3]]


def test_greedy_matches_library():
    doc = {"universe": 3, "blocks": [[0, 1], [2]]}
    assert ok("greedy", "--capacities", "1,1", "--weights", "5,3,2", doc=doc) == {"set": [0, 2], "weight": 7}
    p = Partition.from_indices(3, [[0, 1], [2]])
    lib = PartitionMatroid(p, (1, 1)).greedy_max_weight_independent([0.5, 2, 1])
    assert ok("greedy", doc={**doc, "capacities": [1, 1], "weights": [0.5, 2, 1]}) == \
        {"set": lib.labels(), "weight": 3}


@pytest.mark.parametrize("argv, law", [
    (["frobnicate"], "usage"),
    (["rank", "--bogus"], "usage"),
    (["rank"], "usage"),
    (["check-axioms", "--json", "{}"], "usage"),
    (["rank", "--json", '{"universe": 2, "blocks": [[0, 1]], "extra": 1}', "--set", "0"], "schema"),
    (["rank", "--json", '{"universe": 2, "blocks": [[0]]}', "--set", "0"], "cover"),
    (["rank", "--json", '{"universe": 2, "blocks": [[0], [1]]}', "--set", "7"], None),
    (["greedy", "--json", '{"universe": 2, "blocks": [[0], [1]]}', "--weights", "1"], None),
])
def test_validation_errors_exit_1(argv, law):
    status, payload = run(argv)
    assert status == 1
    assert payload["error"]["kind"] == "validation"
    if law is not None:
        assert payload["error"]["law"] == law


def test_parse_error_reports_position():
    status, payload = run(["rank", "--json", '{"universe": 3,', "--set", "0"])
    assert status == 1
    err = payload["error"]
    assert err["kind"] == "parse"
    assert (err["line"], err["column"], err["position"]) == (1, 16, 15)


def test_capacity_errors_exit_2():
    assert run(["verify", "--max-n", "17"])[0] == 2
    big = {"universe": 17, "circuits": [[0, 1]]}
    assert call("build", doc=big)[0] == 2


def test_input_file(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(P01_23))
    assert ok("rank", "--input", str(path), "--set", "0,1,2") == 2
    assert run(["rank", "--input", str(tmp_path / "missing.json"), "--set", "0"])[0] == 1


def test_commands_are_closed():
    assert set(COMMANDS) == {"approx", "approx-number", "check-axioms", "build", "rank", "closure",
                             "circuits", "bases", "dual", "greedy", "verify"}


def test_subprocess_output_is_deterministic():
    argv = ["build", "--json", json.dumps(ABCD)]
    first, second = cli(*argv), cli(*argv)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["result"]["rank"] == 2


def test_subprocess_error_goes_to_stderr():
    res = cli("rank", "--json", "[", "--set", "0")
    assert res.returncode == 1
    assert json.loads(res.stdout)["error"]["kind"] == "parse"
    assert res.stderr.startswith("pcmatroid:")


def test_pretty_output():
    res = cli("rank", "--json", json.dumps(P01_23), "--set", "0", "--pretty")
    assert res.stdout.startswith("{\n  ")
    assert json.loads(res.stdout)["result"] == 1
