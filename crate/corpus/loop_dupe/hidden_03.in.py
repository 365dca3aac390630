def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def repeat_text(text, n):
    out = ''
    for _ in range(n):
        out = out + text
    return out
# probe: repeat_text('ab', 3)
