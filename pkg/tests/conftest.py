import pytest

from prodfn import ExponentialModel

# Exponential trends of the 1899-1922 U.S. labor/capital/production index
# series from the classic Cobb-Douglas study: growth rates per year and log
# initial levels, base year 1899.
CD1928 = ExponentialModel(
    b1=0.02549605,
    b2=0.06472564,
    b3=0.03592651,
    ln_L0=4.66953290,
    ln_K0=4.61213588,
    ln_Y0=4.66415363,
    base_year=1899,
)


@pytest.fixture
def cd1928():
    return CD1928
