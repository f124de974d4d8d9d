"""Working-pose analysis: torque margin over the hand-tool angle gamma.

Grasping the side faces of the parallel linkages leaves one rotational
freedom, the angle gamma between hand and tool. The margin model:

  available(gamma) = 2*e*sqrt((mu*f_n)^2 - ((g_tool/2)*cos(gamma))^2)
  demand(gamma)    = g_tool*d_com*|sin(gamma - (pi/2 - alpha))|
  margin           = available - demand

The tangential load (g_tool/2)*cos(gamma) per pad shrinks as the hand
rotates toward the tool normal, freeing spin-torque capacity. The gravity
moment loads the spin axis only through its projection, which vanishes
where the hand-tool angle equals the tool angle's complement; the finger
pair's normal-force couple carries the rest. For a horizontal tool
(alpha = pi/2) the demand reduces to g_tool*d_com*sin(gamma). With
alpha < pi/2 the margin rises to a peak at gamma = pi/2 - alpha and falls
beyond it. The whole model lives in torque_margin() so it can be swapped
without touching callers.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .contact import ContactModel, GraspState
from .errors import DomainError, ZeroCapacityError


@dataclass(frozen=True)
class TorqueMarginCurve:
    """Sampled margin curve. samples are (gamma, margin), gamma ascending.

    Error samples carry nan margins. peak_gamma/peak_margin locate the
    maximum, refined by quadratic interpolation around the best sample.
    """

    samples: tuple[tuple[float, float], ...]
    peak_gamma: float
    peak_margin: float


def torque_margin(model: ContactModel, state: GraspState, gamma: float) -> float:
    """Spin-torque margin of the grasp at hand-tool angle gamma.

    Raises ZeroCapacityError when the tangential demand exceeds mu*f_n, and
    DomainError for gamma outside [0, pi/2].
    """
    if not 0.0 <= gamma <= math.pi / 2:
        raise DomainError(f"gamma={gamma:g} outside [0, pi/2]")
    tangential = (state.g_tool / 2.0) * math.cos(gamma)
    mu_fn = model.mu * state.f_n
    headroom = mu_fn * mu_fn - tangential * tangential
    if headroom < 0.0:
        raise ZeroCapacityError(
            f"tangential demand {tangential:g} N exceeds capacity {mu_fn:g} N"
        )
    available = 2.0 * model.e * math.sqrt(headroom)
    demand = (state.g_tool * state.d_com
              * abs(math.sin(gamma - (math.pi / 2 - state.alpha))))
    return available - demand


def _interpolated_peak(model, state, gammas, margins, i):
    """Quadratic fit through the best sample and its neighbors."""
    g0, g1, g2 = gammas[i - 1], gammas[i], gammas[i + 1]
    m0, m1, m2 = margins[i - 1], margins[i], margins[i + 1]
    if math.isnan(m0) or math.isnan(m2):
        return g1, m1
    denom = (m0 - 2.0 * m1 + m2)
    if denom >= 0.0 or abs(denom) < 1e-300:
        return g1, m1
    step = (g2 - g0) / 2.0
    vertex = g1 + 0.5 * step * (m0 - m2) / denom
    vertex = min(max(vertex, g0), g2)
    try:
        refined = torque_margin(model, state, vertex)
    except ZeroCapacityError:
        return g1, m1
    if refined >= m1:
        return vertex, refined
    return g1, m1


def gamma_sweep(model: ContactModel, state: GraspState, n_samples: int,
                workers: int = 1) -> TorqueMarginCurve:
    """Uniform margin samples over [0, pi/2] with the peak located.

    Per-sample capacity errors become nan margins rather than aborting the
    sweep. Ties for the peak break toward smaller gamma. Output ordering
    is fixed by sample index regardless of worker count.
    """
    if n_samples < 2:
        raise DomainError("n_samples must be >= 2")
    gammas = [math.pi / 2 * i / (n_samples - 1) for i in range(n_samples)]

    def sample(gamma):
        try:
            return torque_margin(model, state, gamma)
        except ZeroCapacityError:
            return math.nan

    if workers <= 1:
        margins = [sample(g) for g in gammas]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            margins = list(pool.map(sample, gammas))

    best_i = None
    for i, m in enumerate(margins):
        if not math.isnan(m) and (best_i is None or m > margins[best_i]):
            best_i = i
    if best_i is None:
        raise ZeroCapacityError("no sample has positive friction capacity")

    if 0 < best_i < n_samples - 1:
        peak_gamma, peak_margin = _interpolated_peak(
            model, state, gammas, margins, best_i
        )
    else:
        peak_gamma, peak_margin = gammas[best_i], margins[best_i]
    return TorqueMarginCurve(
        samples=tuple(zip(gammas, margins)),
        peak_gamma=peak_gamma,
        peak_margin=peak_margin,
    )
