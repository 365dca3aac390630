def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def count_long(words):
    n = 0
    for w in words:
        size = 5
        if len(w) > 3:
            n += 1
    return n
# probe: count_long(['tree', 'a', 'house'])
