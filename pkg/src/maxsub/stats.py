"""Counters collected by the enumeration engines."""

import time
from dataclasses import dataclass, field


@dataclass
class EngineStats:
    """Measured cost of one enumeration run.

    ``outer_iterations`` counts vertex steps for the pool-based engines and
    main-loop iterations (Stack1 pops) for the stack-based one.
    ``arrival_gaps`` holds, for every graph that reaches Stack2, the number of
    main-loop iterations since the previous arrival in the same per-vertex
    call (or since that call started).  ``emission_gaps`` is the same measure
    between consecutive *distinct* solutions delivered across the session.
    """

    outer_iterations: int = 0
    restricted_calls: int = 0
    max_candidate_pool: int = 0
    emissions: int = 0
    elapsed: float = 0.0
    arrival_gaps: list = field(default_factory=list)
    emission_gaps: list = field(default_factory=list)
    _started: float = field(default=None, repr=False)

    def start(self):
        self._started = time.perf_counter()

    def stop(self):
        if self._started is not None:
            self.elapsed += time.perf_counter() - self._started
            self._started = None

    def note_pool(self, size):
        if size > self.max_candidate_pool:
            self.max_candidate_pool = size

    @property
    def max_arrival_gap(self):
        return max(self.arrival_gaps, default=0)

    @property
    def max_emission_gap(self):
        return max(self.emission_gaps, default=0)

    def as_dict(self):
        return {
            "solutions": self.emissions,
            "iterations": self.outer_iterations,
            "restricted_calls": self.restricted_calls,
            "max_candidate_pool": self.max_candidate_pool,
            "max_arrival_gap": self.max_arrival_gap,
            "max_emission_gap": self.max_emission_gap,
            "elapsed": round(self.elapsed, 6),
        }
