import numpy as np
import pytest

from helios.harmonics import CoefficientSpectrum, SphereGrid


@pytest.fixture(scope="session")
def grid20():
    return SphereGrid.build(20)


@pytest.fixture(scope="session")
def grid30():
    return SphereGrid.build(30)


def random_spectrum(max_degree: int, seed: int) -> CoefficientSpectrum:
    rng = np.random.default_rng(seed)
    spec = CoefficientSpectrum(max_degree)
    for n in range(max_degree + 1):
        for m in range(-n, n + 1):
            spec[n, m] = complex(rng.standard_normal(), rng.standard_normal())
    return spec
