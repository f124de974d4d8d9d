import math

import pytest
from hypothesis import settings

from grippertool import ContactModel, GraspState, SpringSpec, ToolDimensions

settings.register_profile("ci", deadline=None)
settings.load_profile("ci")


@pytest.fixture
def nominal_dims():
    return ToolDimensions.with_derived_width(
        m=0.012, r=0.03, theta_init=math.radians(60), theta_end=math.radians(12),
        h=0.032, p=0.011, q=0.006, k=0.05, d_axis=0.004, r_edge=0.001, v=1.0,
    )


@pytest.fixture
def nominal_spring():
    return SpringSpec(kappa=0.5, beta=math.radians(20))


@pytest.fixture
def nominal_model():
    return ContactModel(mu=0.5, e=0.01)


@pytest.fixture
def nominal_state():
    return GraspState(f_n=40.0, g_tool=10.0, alpha=math.radians(67), gamma=0.0,
                      d=0.0, d_com=0.03, theta=math.radians(30))
