def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))

def banner(title):
    width = 3 + 5
    line = '=' * width
    return line + title + line
# probe: banner('hi')
