def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def backwards(values):
    out = [v for v in reversed(values)]
    return out
