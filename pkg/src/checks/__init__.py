"""
Verification check stages.
"""
from .census_check import CensusCheck
from .controllability_check import ControllabilityCheck
from .cospectral_check import CospectralCheck
from .fixture_check import FixtureCheck
from .property_check import PropertyCheck
from .wronskian_check import WronskianCheck

__all__ = [
    "FixtureCheck",
    "WronskianCheck",
    "ControllabilityCheck",
    "CospectralCheck",
    "PropertyCheck",
    "CensusCheck",
]
