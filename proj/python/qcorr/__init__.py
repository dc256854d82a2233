# Copyright 2026 The qcorr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Two-qubit quantum correlations under intrinsic decoherence."""

from ._qcorr import (
    BellDiagonal,
    InvalidConfigError,
    NumericalError,
    PhysicalityError,
    QcorrError,
    SweepConfig,
    Werner,
    bell_diagonal,
    concurrence,
    eigensystem,
    evolve,
    figure_preset,
    hamiltonian,
    lqu,
    lqu_bruteforce,
    preset_names,
    run_sweep,
    steady_state,
    steady_state_report,
    tdd,
    tdd_bruteforce,
    uin,
    uin_bruteforce,
    werner,
)

__all__ = [
    "BellDiagonal",
    "InvalidConfigError",
    "NumericalError",
    "PhysicalityError",
    "QcorrError",
    "SweepConfig",
    "Werner",
    "bell_diagonal",
    "concurrence",
    "eigensystem",
    "evolve",
    "figure_preset",
    "hamiltonian",
    "lqu",
    "lqu_bruteforce",
    "preset_names",
    "run_sweep",
    "steady_state",
    "steady_state_report",
    "sweep",
    "tdd",
    "tdd_bruteforce",
    "uin",
    "uin_bruteforce",
    "werner",
]


def sweep(preset=None, *, state=None, threads=1, **fields):
    """Build a SweepConfig from a preset plus keyword overrides and run it.

    Keywords match SweepConfig attributes (mu, B, gamma, t_max, t_steps,
    measures, backend, oracle_check, n_grid, dt, ...). Returns the numpy
    columns keyed by "t" and measure name.
    """
    cfg = figure_preset(preset) if preset is not None else SweepConfig()
    if state is not None:
        cfg.state = state
    for name, value in fields.items():
        if not hasattr(cfg, name):
            raise TypeError(f"unknown sweep field {name!r}")
        setattr(cfg, name, value)
    return run_sweep(cfg, threads)["columns"]
