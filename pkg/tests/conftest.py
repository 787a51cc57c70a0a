from hypothesis import settings

# Exact integer arithmetic on tiny vectors: a small, derandomized example
# budget keeps the whole suite in the seconds range without losing coverage.
settings.register_profile("fast", max_examples=25, derandomize=True, deadline=None)
settings.load_profile("fast")
