def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def clip(v, lo, hi):
    if v < lo:
        return lo
    if v > hi:
        return hi
    return v
