from hypothesis import HealthCheck, settings

# exact big-integer arithmetic makes single examples slow enough to trip the
# default deadline; correctness here never depends on wall time
settings.register_profile(
    "exact", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")
