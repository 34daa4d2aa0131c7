"""Default bounds for every verification run, in one place.

``FULL`` is what ``verify-all`` uses and what the acceptance suite asserts
against; ``QUICK`` shrinks each box so a full pass takes a few seconds.

=====================  ==========================  ===================
key                    FULL                        QUICK
=====================  ==========================  ===================
repunit.t1_q_max       31                          11
repunit.t2_bound       31                          13
repunit.t3_q_max       11                          7
repunit.t4_q_max       13                          7
power_eq.bases         2, 3, 5, 7                  2, 3, 5, 7
power_eq.box           x<=15, y<=10^5, z<=16       x<=15, y<=10^4, z<=16
dioph.box              x,y<=300, z<=8              x,y<=60, z<=6
lemma1                 a,b<=200, n<=6              a,b<=50, n<=6
loeschian.grid         a,b,c,d<=30                 a,b,c,d<=12
loeschian.n_max        10^5                        10^4
loeschian.power        (1,2) up to e=5             (1,2) up to e=5
pseudofib.k_max        9                           9
pseudofib.n_max        60                          40
pseudofib.depth        3                           3
pseudofib.closed_form  k<=5, n<=40                 k<=5, n<=40
=====================  ==========================  ===================
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .arith import DEFAULT_EFFORT, DEFAULT_SEED

FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class Bounds:
    t1_q_max: int = 31
    t2_bound: int = 31
    t3_q_max: int = 11
    t4_q_max: int = 13
    power_bases: tuple[int, ...] = (2, 3, 5, 7)
    power_x_max: int = 15
    power_y_max: int = 10**5
    power_z_max: int = 16
    dioph_x_max: int = 300
    dioph_y_max: int = 300
    dioph_z_max: int = 8
    lemma1_ab_max: int = 200
    lemma1_n_max: int = 6
    loeschian_grid: int = 30
    loeschian_n_max: int = 10**5
    loeschian_power: tuple[int, int, int] = (1, 2, 5)
    pseudofib_k_max: int = 9
    pseudofib_n_max: int = 60
    pseudofib_depth: int = 3
    closed_form_k_max: int = 5
    closed_form_n_max: int = 40
    solution_space_trials: int = 20

    def __post_init__(self):
        for name, value in vars(self).items():
            values = value if isinstance(value, tuple) else (value,)
            if any(v < 1 for v in values):
                raise ValueError(f"bound {name} must be positive, got {value}")


FULL = Bounds()
QUICK = replace(
    FULL,
    t1_q_max=11,
    t2_bound=13,
    t3_q_max=7,
    t4_q_max=7,
    power_y_max=10**4,
    dioph_x_max=60,
    dioph_y_max=60,
    dioph_z_max=6,
    lemma1_ab_max=50,
    loeschian_grid=12,
    loeschian_n_max=10**4,
    pseudofib_n_max=40,
)


@dataclass
class RunConfig:
    command: str
    fmt: str = "json"
    out: str | None = None
    budget: int = DEFAULT_EFFORT
    jobs: int = 1
    seed: int = DEFAULT_SEED
    bounds: Bounds = field(default_factory=Bounds)

    def __post_init__(self):
        if self.fmt not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.budget < 1 or self.jobs < 1:
            raise ValueError("budget and jobs must be positive")
