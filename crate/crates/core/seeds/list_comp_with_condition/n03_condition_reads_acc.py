def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def unique(values):
    out = []
    for v in values:
        if v not in out:
            out.append(v)
    return out
# probe: unique([1, 2, 1, 3, 2])
