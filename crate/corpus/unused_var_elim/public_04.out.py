def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def count_long(words):
    n = 0
    for w in words:
        if len(w) > 3:
            n += 1
    return n
