def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def halves(values):
    pivot = -4
    low = []
    for v in values:
        if v < pivot:
            low.append(v)
    return low
