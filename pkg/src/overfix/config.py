"""Run configuration shared by the analyzer, checker, and repair pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import ANALOG_8BIT, FULL_SCALE, BoundsProfile
from .solvers import ExternalSolver, InternalSolver


@dataclass
class AnalysisConfig:
    unroll_bound: int = 10
    call_depth: int = 8
    max_faults: int | None = None          # stop the whole run after N reports
    first_n_per_path: int | None = None    # stop checking after N hits per path
    solver_command: str | None = None      # external solver; None = internal
    solver_timeout: float = 10.0
    solver_via_file: bool = False          # pass a temp file instead of stdin
    profile: BoundsProfile | None = None   # default depends on the backend
    literal_min: bool = False              # lower bound = -max + 1 convention
    clamp_inputs: bool = True              # fresh inputs bounded by their type
    handler_die: bool = False              # log_or_die terminates the path
    fold_sqrt: bool = False                # render sqrt() as an integer literal
    max_paths: int = 1_000_000             # safety valve for enumeration

    def resolved_profile(self) -> BoundsProfile:
        profile = self.profile
        if profile is None:
            profile = FULL_SCALE if self.solver_command else ANALOG_8BIT
        if self.literal_min and not profile.literal_min:
            profile = profile.with_literal_min()
        return profile

    def make_solver(self):
        if self.solver_command:
            return ExternalSolver(self.solver_command, timeout=self.solver_timeout,
                                  use_stdin=not self.solver_via_file)
        return InternalSolver(profile=ANALOG_8BIT)
