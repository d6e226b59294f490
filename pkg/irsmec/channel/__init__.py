"""Channel model: geometry, Rayleigh sampling, discrete IRS phase shifts."""

from irsmec.channel.channels import ChannelSet, sample_channels
from irsmec.channel.geometry import Geometry, LinkDistances, LinkGains, path_loss
from irsmec.channel.phase import (
    CONTINUOUS,
    PhaseVector,
    aligned_phase,
    effective_gain,
    effective_gains,
    phase_step,
    quantize_phase,
    quantize_phases,
    tdma_optimal_phase,
)

__all__ = [
    "CONTINUOUS",
    "ChannelSet",
    "Geometry",
    "LinkDistances",
    "LinkGains",
    "PhaseVector",
    "aligned_phase",
    "effective_gain",
    "effective_gains",
    "path_loss",
    "phase_step",
    "quantize_phase",
    "quantize_phases",
    "sample_channels",
    "tdma_optimal_phase",
]
