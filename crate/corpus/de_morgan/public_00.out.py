def sign_of(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0
def outside(x, lo, hi):
    if not lo <= x or not x <= hi:
        return True
    return False
