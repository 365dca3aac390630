def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def bucket(n):
    if n < 10:
        return 'low'
    elif n < 100:
        if n % 2 == 0:
            return 'mid even'
        return 'mid'
    return 'high'
