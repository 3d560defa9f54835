import os
from functools import lru_cache

from leonard_ekr import (EkrSystem, InvalidParameterArray, QRacahParams, array_from_eigenvalues,
                         build, hamming_preset, johnson_preset, realize)

SEED = int(os.environ.get("LEONARD_EKR_SEED", "20240601"))

# name -> family parameters
FAMILY_INSTANCES = {
    "johnson-7-3": johnson_preset(7, 3),
    "johnson-9-4": johnson_preset(9, 4),
    "johnson-12-5": johnson_preset(12, 5),
    "hamming-2-2": hamming_preset(2, 2),
    "hamming-3-4": hamming_preset(3, 4),
    "hamming-4-3": hamming_preset(4, 3),
    "qracah-3": QRacahParams.with_r2_from_constraint(3, "1/3", 2, "-5", "7/2"),
    "qracah-4": QRacahParams.with_r2_from_constraint(4, 2, 3, 5, 7),
    "qracah-5": QRacahParams.with_r2_from_constraint(5, 2, 3, 5, 7),
}
FAST = [k for k in FAMILY_INSTANCES if k != "johnson-12-5"]


def alternating(d):
    """An array with beta = -2 (base q = -1), completed from its eigenvalues."""
    theta = [(-1) ** i * (2 * i + 1) for i in range(d + 1)]
    theta_star = [(-1) ** i * (3 * i + 1) + 2 for i in range(d + 1)]
    for varphi1 in range(1, 50):
        try:
            return array_from_eigenvalues(theta, theta_star, varphi1)
        except InvalidParameterArray:
            continue
    raise RuntimeError("no valid varphi_1 found")


@lru_cache(maxsize=None)
def array(name):
    return build(FAMILY_INSTANCES[name])


@lru_cache(maxsize=None)
def realization(name):
    return realize(array(name))


@lru_cache(maxsize=None)
def system(name):
    return EkrSystem.build(realization(name))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
