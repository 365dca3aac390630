def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def sign_word(n):
    if n == 0:
        return 'zero'
    else:
        if n < 0:
            if n < -100:
                return 'very negative'
    return 'other'
# probe: sign_word(0)
# probe: sign_word(-500)
# probe: sign_word(-5)
# probe: sign_word(7)
