"""List nilpotent aT + cU + bV in G_x with small integer a, b and the Jordan type of exp."""

from dataclasses import dataclass

from _config import parse

from cyhodge import gx_family as gx


@dataclass
class GridConfig:
    """Integer grid 1 <= a <= bound, |b| <= 2 bound."""
    bound: int = 3


def run(cfg: GridConfig) -> list:
    return [(tuple(str(v) for v in abc), profile)
            for abc, profile in gx.unipotent_profiles(bound=cfg.bound)]


def main(argv=None):
    cfg = parse(GridConfig, argv)
    rows = run(cfg)
    for (a, b, c), profile in rows:
        print(f"a={a:>2} b={b:>3} c={c:>12}  exp(N) Jordan blocks {profile}")
    print(f"{len(rows)} nilpotents")


if __name__ == "__main__":
    main()
