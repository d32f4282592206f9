"""Rebuild the CLI corpus and golden outputs.

Run from the repository root: ``python tests/data/regenerate.py``. Solve
and oracle goldens are written only after their lmax lines agree.
"""

import io
from pathlib import Path

from lmaxsched.cli import run

HERE = Path(__file__).parent
CORPUS = HERE / "corpus"


def capture(argv, stdin_text=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin_text), stdout=out, stderr=err)
    return code, out.getvalue()


def main():
    CORPUS.mkdir(exist_ok=True)
    for seed in range(1, 51):
        n, m = 1 + seed % 8, 1 + seed % 3
        argv = ["gen", "--n", str(n), "--m", str(m), "--max-work", "6",
                "--max-deadline", "20", "--max-rate", "3", "--seed", str(seed)]
        code, text = capture(argv)
        assert code == 0
        path = CORPUS / f"inst{seed:02d}.txt"
        path.write_text(text)
        _, solved = capture(["solve", str(path)])
        _, oracle = capture(["oracle", str(path)])
        if solved.splitlines()[0] != oracle.splitlines()[0]:
            raise SystemExit(f"{path}: solve and oracle disagree")
        path.with_suffix(".solve").write_text(solved)
        path.with_suffix(".oracle").write_text(oracle)


if __name__ == "__main__":
    main()
