def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def sign_word(n):
    if n == 0:
        return 'zero'
    elif n < 0 and n < -100:
        return 'very negative'
    return 'other'
