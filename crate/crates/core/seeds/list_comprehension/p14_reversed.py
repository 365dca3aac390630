def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def backwards(values):
    out = []
    for v in reversed(values):
        out.append(v)
    return out
# probe: backwards([1, 2, 3])
