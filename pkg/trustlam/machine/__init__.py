"""
Executable semantics: seeded call-by-name reduction, total variation
distance and the Trust? check.
"""
from trustlam.machine.rng import RngState, sample_choice
from trustlam.machine.distance import (
        NO_MATCH, TrustTest, tv_distance, empirical_dist, trust_check,
        )
from trustlam.machine.reduce import (
        Rule, StepOutcome, Trace, DEFAULT_FUEL,
        decompose, contract, alternatives, step, evaluate, plug,
        )
