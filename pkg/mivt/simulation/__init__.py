from .burnin import default_burnin
from .rng import derive_seed, stream_rng
from .simulator import accumulate_jumps, draw_jumps, resolve_config, simulate_mivt, simulate_reference

__all__ = [
    "default_burnin",
    "derive_seed",
    "stream_rng",
    "accumulate_jumps",
    "draw_jumps",
    "resolve_config",
    "simulate_mivt",
    "simulate_reference",
]
