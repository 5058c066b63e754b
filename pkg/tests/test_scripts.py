import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


@pytest.mark.parametrize("argv", [
    ["reproduce_tables.py"],
    ["scan_x3.py", "--max-s", "9"],
    ["degree_sweep.py", "--q", "3", "--max-deg-m", "2", "--max-deg-u", "1"],
])
def test_script_runs_clean(argv):
    proc = subprocess.run([sys.executable, str(SCRIPTS / argv[0]), *argv[1:]],
                          capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr


def test_verification_script_writes_reports(tmp_path):
    proc = subprocess.run(
        [sys.executable, str(SCRIPTS / "run_verification.py"), "--out", str(tmp_path),
         "--theorem", "feit", "--q", "4", "--max-deg-m", "2", "--max-deg-u", "1"],
        capture_output=True, text=True, timeout=120)
    assert proc.returncode == 0, proc.stderr
    assert (tmp_path / "feit_q4_m2_u1.json").exists()
