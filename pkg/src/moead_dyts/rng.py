"""Seedable random source shared by every module.

The generator is xoshiro256** (256-bit state). A ``(seed, stream_id)`` pair
is expanded into the initial state with the splitmix64 finalizer::

    a  = fmix64(seed + 0x9E3779B97F4A7C15)
    b  = fmix64((stream_id ^ 0xD1B54A32D192ED03) + 2 * 0x9E3779B97F4A7C15)
    s0 = a
    s1 = fmix64(a ^ b)
    s2 = fmix64(s1 + 0x9E3779B97F4A7C15)
    s3 = fmix64(s2 + 0x9E3779B97F4A7C15)

``fmix64`` is a bijection, so ``s0`` determines the seed and ``s1`` then the
stream id: distinct pairs never share an initial state. All arithmetic is
64-bit integer or IEEE double, so sequences are identical across platforms.

Uniforms use the top 53 bits of each output. Gamma variates use the
Marsaglia-Tsang squeeze method (shape < 1 handled by drawing ``shape + 1`` and
scaling by ``U ** (1/shape)``), normals come from the Marsaglia polar method,
and Beta variates are ``G1 / (G1 + G2)``.
"""
import zlib

from ._backend import NATIVE_RNG, kernels
from .errors import ParameterError

RngState = NATIVE_RNG

_U64 = 1 << 64


def new_rng(seed: int, stream_id: int = 0) -> RngState:
    """Return a fresh generator for ``(seed, stream_id)``."""
    if not (0 <= seed < _U64 and 0 <= stream_id < _U64):
        raise ParameterError("seed and stream_id must be unsigned 64-bit integers")
    return kernels.Xoshiro256(int(seed), int(stream_id))


def stream_id_for(*labels) -> int:
    """Stable stream id for a tuple of labels, e.g. ``("UF1", "dyts")``."""
    key = "/".join(str(label) for label in labels).encode("utf-8")
    return zlib.crc32(key)


def uniform01(rng: RngState) -> float:
    """Uniform draw on [0, 1)."""
    return rng.uniform01()


def sample_gamma(rng: RngState, shape: float) -> float:
    if not shape > 0:
        raise ParameterError(f"gamma shape must be positive, got {shape!r}")
    return rng.gamma(float(shape))


def sample_beta(rng: RngState, alpha: float, beta: float) -> float:
    """Beta(alpha, beta) draw, always strictly inside (0, 1).

    Extreme shapes can underflow ``G1`` or ``G2``; the result is then nudged to
    the nearest representable interior value.
    """
    if not (alpha > 0 and beta > 0):
        raise ParameterError(f"beta shape parameters must be positive, got ({alpha!r}, {beta!r})")
    return rng.beta(float(alpha), float(beta))
