def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def as_floats(values):
    return [v * 1.0 for v in values]
# probe: as_floats([1, 2])
