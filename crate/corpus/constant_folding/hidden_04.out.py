def clamp_between(value, lo, hi):
    if lo > hi:
        lo, hi = hi, lo
    return max(lo, min(value, hi))
def banner(title):
    width = 8
    line = '=' * width
    return line + title + line
