"""Test configuration: hypothesis profiles."""
import os
from datetime import timedelta

from hypothesis import HealthCheck, Verbosity, settings

settings.register_profile(
    "default",
    deadline=timedelta(milliseconds=2000),
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("dev", max_examples=20)
settings.register_profile("debug", max_examples=20, verbosity=Verbosity.verbose)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))
