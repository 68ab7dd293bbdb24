"""End-to-end tests of the command-line interface via run()."""

import io
import json
from fractions import Fraction

from loopdual.cli import run
from loopdual.root_data import build_datum
from loopdual.twisted_dual import twisted_dual


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def payload(text):
    envelope = json.loads(text)
    assert envelope["schema_version"] == "1"
    assert set(envelope) == {"schema_version", "command", "input_echo",
                             "result", "checks"}
    return envelope


class TestDualCommand:
    def test_rank_one_odd_order(self):
        code, out, _ = invoke("dual", "--type", "A1", "--isogeny", "sc",
                              "--N", "3")
        assert code == 0
        result = payload(out)["result"]
        assert result["name"] == "PSL2"
        assert result["d"] == 1
        assert result["delta"] == [3]

    def test_sp4_order_two(self):
        code, out, _ = invoke("dual", "--type", "C2", "--isogeny", "sc",
                              "--N", "2")
        assert code == 0
        result = payload(out)["result"]
        assert result["dual_type"] == "B2"
        assert result["delta"] == [1, 2]
        assert result["d"] == 1
        assert result["name"] == "Spin5"
        assert result["pi1"] == []
        assert result["center"] == [2]

    def test_round_trip_rebuilds_dual_datum(self):
        cases = [("A1", "sc", "3"), ("C2", "sc", "2"), ("B3", "sc", "2"),
                 ("A2", "adjoint", "3"), ("G2", "sc", "4")]
        for type_name, isogeny, order in cases:
            code, out, _ = invoke("dual", "--type", type_name,
                                  "--isogeny", isogeny, "--N", order)
            assert code == 0
            result = payload(out)["result"]
            rows = [tuple(Fraction(x) for x in row)
                    for row in result["dual_lattice"]]
            rebuilt = build_datum(result["dual_type"], rows)
            direct = twisted_dual(build_datum(type_name, isogeny),
                                  int(order)).dual
            assert rebuilt == direct

    def test_rejects_bad_order(self):
        code, _, err = invoke("dual", "--type", "A1", "--isogeny", "sc",
                              "--N", "0")
        assert code == 1 and "--N" in err
        code, _, err = invoke("dual", "--type", "A1", "--isogeny", "sc",
                              "--N", "two")
        assert code == 1 and "--N" in err

    def test_rejects_bad_type(self):
        code, _, err = invoke("dual", "--type", "H3", "--isogeny", "sc",
                              "--N", "1")
        assert code == 1 and "--type" in err

    def test_explicit_generator_isogeny(self):
        # the generator is the vector weight of D4 in simple-root coordinates
        code, out, _ = invoke("dual", "--type", "D4",
                              "--isogeny", '[["1", "1", "1/2", "1/2"]]',
                              "--N", "1")
        assert code == 0
        assert payload(out)["result"]["name"] == "SO8"


class TestExtensionsCommand:
    def test_adjoint_rank_one(self):
        code, out, _ = invoke("extensions", "--type", "A1",
                              "--isogeny", "adjoint")
        assert code == 0
        result = payload(out)["result"]
        assert result == {"d": 2, "levels": "2·Z", "aut": [2]}
        assert '"d": 2' in out

    def test_simply_connected(self):
        code, out, _ = invoke("extensions", "--type", "E8", "--isogeny", "sc")
        assert code == 0
        assert payload(out)["result"] == {"d": 1, "levels": "1·Z", "aut": []}


class TestTableCommand:
    def test_small_table_passes(self):
        code, out, _ = invoke("table", "--Nmax", "2", "--paper-check")
        assert code == 0
        lines = out.rstrip("\n").split("\n")
        assert lines[0] == "group\tisogeny\tN\tdual\texpected\tverdict"
        assert len(lines) == 1 + 12 * 2
        assert all(line.endswith("\tpass") for line in lines[1:])

    def test_rejects_bad_nmax(self):
        code, _, err = invoke("table", "--Nmax", "-1")
        assert code == 1 and "--Nmax" in err


class TestSymbolCommand:
    def test_rational_symbol(self):
        code, out, _ = invoke("symbol", "--field", "Q",
                              "--f", "t", "--g", "2 + t")
        assert code == 0
        assert payload(out)["result"] == {"field": "QQ", "value": "2"}

    def test_prime_field_symbol(self):
        code, out, _ = invoke("symbol", "--field", "F7",
                              "--f", "3*t", "--g", "t")
        assert code == 0
        result = payload(out)["result"]
        assert result["field"] == "GF(7)"
        # (-1)^1 * lc(g)^1 * lc(f)^(-1) = -1/3 = -5 = 2 mod 7
        assert result["value"] == "2"

    def test_rejects_garbage_series(self):
        code, _, err = invoke("symbol", "--f", "1++t", "--g", "t")
        assert code == 1 and "--f" in err
        code, _, err = invoke("symbol", "--field", "F6", "--f", "t", "--g", "t")
        assert code == 1 and "--field" in err


class TestCommutatorCommand:
    POINT = '[[[["1/2"], "t"]], [[["1/2"], "t"]]]'

    def test_metaplectic_sign(self):
        code, out, _ = invoke("commutator", "--type", "A1",
                              "--isogeny", "adjoint", "--m", "2",
                              "--points", self.POINT)
        assert code == 0
        assert payload(out)["result"]["value"] == "-1"

    def test_rejects_non_integral_level(self):
        code, _, err = invoke("commutator", "--type", "A1",
                              "--isogeny", "adjoint", "--m", "1",
                              "--points", self.POINT)
        assert code == 1 and "--points/--m" in err

    def test_rejects_malformed_points(self):
        code, _, err = invoke("commutator", "--type", "A1", "--isogeny", "sc",
                              "--m", "1", "--points", "[[1, 2, 3]")
        assert code == 1 and "--points" in err
        code, _, err = invoke("commutator", "--type", "A1", "--isogeny", "sc",
                              "--m", "1", "--points", '[[["1"], "t"]]')
        assert code == 1 and "--points" in err


class TestMultCommand:
    def test_dual_weight_map(self):
        code, out, _ = invoke("mult", "--type", "A1", "--isogeny", "sc",
                              "--N", "2", "--highest", "2")
        assert code == 0
        result = payload(out)["result"]
        assert result["dim"] == 5
        assert result["weights"][0] == [["2"], 1]
        assert len(result["weights"]) == 5

    def test_rejects_non_dominant(self):
        code, _, err = invoke("mult", "--type", "A2", "--isogeny", "sc",
                              "--N", "1", "--highest", "-1,0")
        assert code == 1 and "--highest" in err
        code, _, err = invoke("mult", "--type", "A2", "--isogeny", "sc",
                              "--N", "1", "--highest", "1,,2")
        assert code == 1 and "--highest" in err


class TestMvRankOneCommand:
    def test_weight_map_and_oracle(self):
        code, out, _ = invoke("mv-rank1", "--type", "A1", "--isogeny", "sc",
                              "--N", "2", "--i", "0", "--a", "2", "--check")
        assert code == 0
        envelope = payload(out)
        assert envelope["checks"] == [{"name": "character-oracle", "pass": True}]
        assert envelope["result"]["multiplicities"] == [
            [2, 1], [1, 0], [0, 1], [-1, 0], [-2, 1]]
        assert envelope["result"]["delta"] == 2

    def test_rejects_inadmissible_multiple(self):
        code, _, err = invoke("mv-rank1", "--type", "A1", "--isogeny", "sc",
                              "--N", "2", "--i", "0", "--a", "3")
        assert code == 1 and "--i/--a" in err


class TestCheckAssumptionCommand:
    def test_verdicts(self):
        code, out, _ = invoke("check-assumption", "--type", "A1",
                              "--isogeny", "sc", "--N", "1", "--p", "2")
        assert code == 0
        result = payload(out)["result"]
        assert result == {"p": 2, "d": 1, "modulus": 4, "ok": False}
        code, out, _ = invoke("check-assumption", "--type", "A1",
                              "--isogeny", "sc", "--N", "1", "--p", "0")
        assert payload(out)["result"]["ok"] is True

    def test_rejects_composite_characteristic(self):
        code, _, err = invoke("check-assumption", "--type", "A1",
                              "--isogeny", "sc", "--N", "1", "--p", "6")
        assert code == 1 and "--p" in err


class TestHarness:
    def test_no_command_is_a_usage_error(self):
        code, _, err = invoke()
        assert code == 1 and "command" in err

    def test_unknown_command(self):
        code, _, _ = invoke("bogus")
        assert code == 1

    def test_unknown_flag(self):
        code, _, _ = invoke("dual", "--type", "A1", "--isogeny", "sc",
                            "--N", "1", "--nope")
        assert code == 1

    def test_byte_identical_reruns(self):
        commands = [
            ("dual", "--type", "C3", "--isogeny", "sc", "--N", "4"),
            ("extensions", "--type", "D5", "--isogeny", "adjoint"),
            ("table", "--Nmax", "3"),
            ("symbol", "--f", "t^-2*(3 + t)", "--g", "1 - t"),
            ("mult", "--type", "A2", "--isogeny", "sc", "--N", "2",
             "--highest", "1,1"),
            ("mv-rank1", "--type", "B2", "--isogeny", "sc", "--N", "2",
             "--i", "1", "--a", "2", "--check"),
            ("check-assumption", "--type", "G2", "--isogeny", "sc",
             "--N", "5", "--p", "7"),
        ]
        for argv in commands:
            first = invoke(*argv)
            second = invoke(*argv)
            assert first == second
            assert first[0] == 0
