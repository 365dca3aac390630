def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def outer(x):
    def inner():
        pass
    inner()
    return x * 2
# probe: outer(4)
