"""Check G_x at rational points x = (2/sqrt3) z of the circle |x|^2 = 4/3."""

import json
from dataclasses import asdict, dataclass
from fractions import Fraction

from _config import parse

from cyhodge import gx_family as gx
from cyhodge.hodge_frame import unit_circle_point


@dataclass
class SweepConfig:
    """Sweep t in [-bound, bound] with denominators up to max_den."""
    bound: int = 3
    max_den: int = 3
    out: str = ""


def run(cfg: SweepConfig) -> dict:
    ts = sorted({Fraction(n, d) for d in range(1, cfg.max_den + 1)
                 for n in range(-cfg.bound * d, cfg.bound * d + 1)})
    rows = []
    for t in ts:
        z = unit_circle_point(t)
        rep = gx.instance_report(gx.circle_x(z.re, z.im))
        rows.append({"t": str(t), "z": str(z), "ok": rep.ok,
                     "killing_signature": list(rep.killing_signature)})
    return {"config": asdict(cfg), "points": len(rows),
            "all_ok": all(r["ok"] for r in rows), "rows": rows}


def main(argv=None):
    cfg = parse(SweepConfig, argv)
    result = run(cfg)
    text = json.dumps(result, indent=2)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(f"{result['points']} points, all ok: {result['all_ok']}")


if __name__ == "__main__":
    main()
