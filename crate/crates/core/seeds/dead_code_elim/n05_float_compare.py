def pick_larger(a, b):
    if a >= b:
        return a
    return b

def tiny(x):
    if 0.5 > 1.5:
        return 0
    return x
# probe: tiny(7)
