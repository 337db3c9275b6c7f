from hypothesis import settings

# Property tests call closed-form math only; disable the wall-clock deadline
# so a cold numpy import or slow CI box cannot produce spurious failures.
settings.register_profile("numerics", deadline=None, max_examples=150)
settings.load_profile("numerics")
