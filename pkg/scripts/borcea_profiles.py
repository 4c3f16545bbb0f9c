"""Rank sequences and Jordan types of N_{r,s,t} over a small parameter grid."""

from dataclasses import dataclass
from itertools import product

from _config import parse

from cyhodge import borcea as bc
from cyhodge.matrices import nilpotent_profile, rank_sequence


@dataclass
class ProfileConfig:
    """Parameters r, s, t range over 0..bound."""
    bound: int = 2


def run(cfg: ProfileConfig) -> list:
    rows = []
    for r, s, t in product(range(cfg.bound + 1), repeat=3):
        N = bc.borcea_nilpotent(r, s, t)
        rows.append(((r, s, t), rank_sequence(N), nilpotent_profile(N),
                     bc.max_unipotent_check(N)))
    return rows


def main(argv=None):
    cfg = parse(ProfileConfig, argv)
    for params, ranks, profile, mu in run(cfg):
        print(f"(r,s,t)={params}  ranks={ranks}  blocks={profile}  max_unipotent={mu}")


if __name__ == "__main__":
    main()
