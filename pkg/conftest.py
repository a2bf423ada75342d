import hypothesis
import numpy as np

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("fast")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: large-n or exhaustive n = 8 runs (deselect with -m 'not slow')")
