"""Regenerate the bundled data files under src/cyclegame/data/.

Each bundled board, record, and orientation scene has its canonical
definition in cyclegame.fixtures; this script serializes them in the
documented file formats.  Tests assert the files agree with the
constructors, so rerun this after editing fixtures.py.
"""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from cyclegame.board import board_to_json  # noqa: E402
from cyclegame.filled import orientation_to_json  # noqa: E402
from cyclegame.fixtures import (  # noqa: E402
    BOARD_NAMES,
    RECORDS,
    fixture_board,
    fixture_record,
    ring_in_ring,
    spiral_octagon,
)
from cyclegame.rules import record_to_json  # noqa: E402

SCENES = {
    "spiral_octagon": spiral_octagon,
    "ring_in_ring": ring_in_ring,
}


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "cyclegame" / "data"
    out.mkdir(parents=True, exist_ok=True)

    for name in BOARD_NAMES:
        path = out / f"{name}.board"
        path.write_text(board_to_json(fixture_board(name)), encoding="utf-8")
        print(f"wrote {path}")

    for name in sorted(RECORDS):
        board_name, _ = RECORDS[name]
        _, moves = fixture_record(name)
        path = out / f"{name}.record"
        path.write_text(
            record_to_json(f"{board_name}.board", moves), encoding="utf-8"
        )
        print(f"wrote {path}")

    for name, maker in sorted(SCENES.items()):
        board, orientation = maker()
        bpath = out / f"{name}.board"
        bpath.write_text(board_to_json(board), encoding="utf-8")
        print(f"wrote {bpath}")
        opath = out / f"{name}.orientation"
        opath.write_text(
            orientation_to_json(f"{name}.board", orientation), encoding="utf-8"
        )
        print(f"wrote {opath}")


if __name__ == "__main__":
    main()
