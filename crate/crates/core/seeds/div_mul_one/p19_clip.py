def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def clip(v, lo, hi):
    if v * 1 < lo:
        return lo
    if v > hi * 1:
        return hi
    return v
# probe: clip(5, 0, 3)
# probe: clip(-5, 0, 3)
# probe: clip(2, 0, 3)
