"""Regenerate docs/checks.md from the check registry."""

from dataclasses import dataclass
from pathlib import Path

from cyhodge.docs_index import render


@dataclass
class Config:
    out: Path = Path(__file__).resolve().parent.parent / "docs" / "checks.md"


def main(cfg: Config = Config()) -> None:
    cfg.out.write_text(render(), encoding="utf-8")
    print(f"wrote {cfg.out}")


if __name__ == "__main__":
    main()
