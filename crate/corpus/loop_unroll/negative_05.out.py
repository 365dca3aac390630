def pick_larger(a, b):
    if a >= b:
        return a
    return b
def odd_scan(values):
    s = 0
    for k in range(3):
        k = k * 2
        s += values[k]
    return s
