def clamp(x, lo, hi):
    if x >= lo:
        x = x
    else:
        x = lo
    if x <= hi:
        x = x
    else:
        x = hi
    return x
