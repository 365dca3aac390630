def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def count_mismatched(a, b):
    n = 0
    for k in range(min(len(a), len(b))):
        if not (a[k] == b[k] and a[k] != 0):
            n += 1
    return n
# probe: count_mismatched([1, 0, 3, 4], [1, 0, 5, 4])
