import json
import socket
import subprocess
import sys
import time
import urllib.request

import pytest

from levifusion import cli

CMD = [sys.executable, "-m", "levifusion.cli"]


def run_cli(*args):
    return subprocess.run(CMD + list(args), capture_output=True, text=True)


def test_fuse_exact_output_and_exit_zero():
    proc = run_cli("fuse", "--family", "D", "--rank", "16",
                   "--plus", "2,3,4,5,10,11,12,13",
                   "--minus", "1,6,7,8,9,14,15,16")
    assert proc.returncode == 0
    body = json.loads(proc.stdout)
    assert body["j"] == [2, 3, 4, 5, 7, 8, 10, 11, 12, 13, 15, 16]


def test_fuse_a1_and_byte_determinism():
    proc = run_cli("fuse", "--family", "A", "--rank", "1", "--plus", "1")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["j"] == [1]
    again = run_cli("fuse", "--family", "A", "--rank", "1", "--plus", "1")
    assert again.stdout == proc.stdout          # byte-identical output


def test_fuse_from_json_file(tmp_path):
    path = tmp_path / "d6.json"
    path.write_text(json.dumps({"family": "D", "rank": 6,
                                "plus": [3, 4, 5], "minus": [1, 2, 6]}))
    proc = run_cli("partition", "--input", str(path))
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["partition"] == [4, 4, 2, 2]


def test_usage_error_exits_one():
    proc = run_cli("fuse", "--family", "H", "--rank", "2")
    assert proc.returncode == 1
    err = json.loads(proc.stderr)
    assert err["error"] == "usage"


def test_input_error_exits_one():
    proc = run_cli("fuse", "--family", "E", "--rank", "9", "--plus", "1")
    assert proc.returncode == 1
    err = json.loads(proc.stderr)
    assert err["error"] == "InputError"


def test_enumerate_json_lines():
    proc = run_cli("enumerate", "--family", "G", "--rank", "2")
    assert proc.returncode == 0
    lines = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(lines) == 9
    assert all("canonical_j" in rec for rec in lines)


def test_verify_exit_codes_in_process(monkeypatch):
    assert cli.main(["verify", "--family", "A", "--rank", "3"]) == 0

    from levifusion.verify import VerifyReport

    def fake_verify(family, rank, **kwargs):
        report = VerifyReport(family, rank, ("weight",), False, False)
        report.inputs_checked = 1
        report.mismatches = [{"plus": [1], "minus": [], "detail": "forced"}]
        return report

    monkeypatch.setattr("levifusion.verify.run_verify", fake_verify)
    monkeypatch.setattr("levifusion.service.handlers.run_verify", fake_verify)
    assert cli.main(["verify", "--family", "A", "--rank", "3"]) == 2


def test_conjugacy_command():
    proc = run_cli("conjugacy", "--family", "D", "--rank", "4",
                   "--j", "1,3", "--jprime", "3,4")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["conjugate"] is False


def _free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


@pytest.fixture(scope="module")
def server():
    port = _free_port()
    proc = subprocess.Popen(CMD + ["serve", "--port", str(port)],
                            stdout=subprocess.DEVNULL,
                            stderr=subprocess.DEVNULL)
    url = f"http://127.0.0.1:{port}"
    try:
        for _ in range(100):
            try:
                with urllib.request.urlopen(url + "/health", timeout=1):
                    break
            except OSError:
                time.sleep(0.1)
        else:
            raise RuntimeError("service did not come up")
        yield url
    finally:
        proc.terminate()
        proc.wait(timeout=10)


def test_cli_as_thin_client_of_running_service(server):
    proc = run_cli("--url", server, "fuse", "--family", "G", "--rank", "2",
                   "--plus", "2", "--minus", "1")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["j"] == [2]

    proc = run_cli("--url", server, "verify", "--family", "A", "--rank", "2")
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"] is True
