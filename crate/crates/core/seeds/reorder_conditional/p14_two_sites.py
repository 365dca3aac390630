def clamp(x, lo, hi):
    if not x >= lo:
        x = lo
    else:
        x = x
    if not x <= hi:
        x = hi
    else:
        x = x
    return x
# probe: clamp(-5, 0, 10)
# probe: clamp(15, 0, 10)
# probe: clamp(5, 0, 10)
