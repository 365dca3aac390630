def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def safe_div(a, b):
    if b != 0:
        return a // b
    return 0
