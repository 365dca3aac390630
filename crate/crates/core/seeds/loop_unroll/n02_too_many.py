def pick_larger(a, b):
    if a >= b:
        return a
    return b

def sum_to_hundred():
    s = 0
    for k in range(100):
        s += k
    return s
# probe: sum_to_hundred()
