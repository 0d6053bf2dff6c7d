import math
import os
import subprocess

import numpy as np
import pytest

import reldeleg

HALF_XZ = "n 1\nk 1\n1 X\n1 Z\n"


def test_pauli_roundtrip():
    p = reldeleg.PauliString("-0.5 XZ")
    assert p.word == "XZ"
    assert p.coefficient == -0.5
    assert p.is_xz()
    assert reldeleg.commutation_sign(reldeleg.PauliString("X"), reldeleg.PauliString("Z")) == -1
    k, q = reldeleg.multiply(reldeleg.PauliString("X"), reldeleg.PauliString("Z"))
    assert q.word == "Y" and k % 4 == 3


def test_pauli_dense_matches_numpy():
    x = np.array([[0, 1], [1, 0]])
    z = np.diag([1, -1])
    np.testing.assert_allclose(reldeleg.PauliString("XZ").dense(), np.kron(x, z))


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        reldeleg.XZHamiltonian.parse("n 1\n1 Q\n")


def test_ground_energy_and_omega():
    h = reldeleg.XZHamiltonian.parse(HALF_XZ)
    assert reldeleg.ground_energy(h) == pytest.approx(-math.sqrt(2) / 2, abs=1e-12)
    eig = np.linalg.eigvalsh(h.dense())
    assert eig[0] == pytest.approx(reldeleg.ground_energy(h), abs=1e-12)
    assert reldeleg.omega_h(h, 0.5) == pytest.approx(1 - 0.5 * (0.5 - math.sqrt(2) / 4))
    assert reldeleg.XZHamiltonian.parse(h.serialize()) == h


def test_magic_square_and_otp():
    assert reldeleg.classical_magic_square_value() == (8, 9)
    key = os.urandom(16)
    msg = os.urandom(16)
    assert reldeleg.otp(key, reldeleg.otp(key, msg)) == msg
    assert reldeleg.causally_reachable((0, 0), (1, 1))
    assert not reldeleg.causally_reachable((0, 0), (1, 0.5))


def test_run_game_is_reproducible():
    d = {"command": "game", "instance_text": "n 1\nk 1\n1 Z\n", "rounds": 500, "seed": 3}
    first, status = reldeleg.run(d)
    assert status == 0
    assert first["exact"] == pytest.approx(1.0)
    assert first["estimate"]["acceptance"] == 1.0
    assert reldeleg.run_json(str(d).replace("'", '"')) == reldeleg.run_json(
        str(d).replace("'", '"')
    )


def test_run_error_record():
    record, status = reldeleg.run({"command": "game", "instance_text": "n 1\n1 Y\n"})
    assert status == 2
    assert "error" in record


CLI = os.environ.get("RELDELEG_CLI")


@pytest.mark.skipif(not CLI, reason="RELDELEG_CLI not set")
class TestCli:
    def run(self, *args):
        return subprocess.run([CLI, *args], capture_output=True, text=True)

    def test_game_exact(self, tmp_path):
        path = tmp_path / "z.ham"
        path.write_text("n 1\nk 1\n1 Z\n")
        out = self.run("game", "-i", str(path))
        assert out.returncode == 0
        assert '"exact": 1.0' in out.stdout

    def test_diag(self, tmp_path):
        path = tmp_path / "xz.ham"
        path.write_text(HALF_XZ)
        out = self.run("diag", "-i", str(path))
        assert '"lambda0": -0.7071067811865' in out.stdout

    def test_reltime_boundary(self):
        out = self.run("reltime", "--t0", "1", "--t1", "0.1", "--attack-grid", "100")
        assert out.returncode == 0
        assert '"feasible_up_to": 0.495' in out.stdout

    def test_late_answer_exit_one(self):
        out = self.run("reltime", "--t0", "1", "--t1", "0.1", "--answer-delay", "2")
        assert out.returncode == 1

    def test_usage_error_exit_two(self, tmp_path):
        assert self.run("game", "-i", str(tmp_path / "missing.ham")).returncode == 2
        assert self.run("nosuch").returncode == 2

    def test_byte_identical(self, tmp_path):
        path = tmp_path / "xz.ham"
        path.write_text(HALF_XZ)
        a = self.run("game", "-i", str(path), "--rounds", "1000", "--seed", "9")
        b = self.run("game", "-i", str(path), "--rounds", "1000", "--seed", "9")
        assert a.stdout == b.stdout
