import subprocess
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parent.parent / "scripts"


@pytest.mark.parametrize("argv, expect", [
    (["gx_circle_sweep.py", "--bound", "1", "--max-den", "1"], "all ok: True"),
    (["grid_nilpotents.py", "--bound", "2"], "8 nilpotents"),
    (["borcea_profiles.py", "--bound", "1"], "blocks=[4, 2, 2]  max_unipotent=True"),
])
def test_script_runs(argv, expect):
    out = subprocess.run([sys.executable, *argv], cwd=SCRIPTS, capture_output=True, text=True, check=True)
    assert expect in out.stdout
