"""Coded-OFDM PAPR laboratory: python bindings over the C++ core."""

from ._papr_lab import (
    aperiodic_autocorrelation,
    code_info,
    encode_stream,
    ingest_bits,
    map_bpsk,
    map_qam16,
    papr_at_ccdf,
    papr_db,
    papr_via_autocorrelation,
    run_experiment,
    synthesize,
    theoretical_ccdf,
)

__all__ = [
    "aperiodic_autocorrelation",
    "code_info",
    "encode_stream",
    "ingest_bits",
    "map_bpsk",
    "map_qam16",
    "papr_at_ccdf",
    "papr_db",
    "papr_via_autocorrelation",
    "run_experiment",
    "synthesize",
    "theoretical_ccdf",
]
