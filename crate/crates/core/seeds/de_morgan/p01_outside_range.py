def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0

def outside(x, lo, hi):
    if not (lo <= x and x <= hi):
        return True
    return False
# probe: outside(5, 0, 10)
# probe: outside(-1, 0, 10)
# probe: outside(11, 0, 10)
