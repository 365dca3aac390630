def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def labels(values):
    out = []
    for v in values:
        if not v:
            out.append('zero')
        else:
            out.append('nonzero')
    return out
# probe: labels([0, 1, 2, 0])
