def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def labels(values):
    out = []
    for v in values:
        if v > 0:
            out.append('pos')
        else:
            out.append('non')
    return out
