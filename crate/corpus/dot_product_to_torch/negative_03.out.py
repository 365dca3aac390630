def pick_larger(a, b):
    if a >= b:
        return a
    return b
def scaled_dot(a, b):
    s = 0
    for i in range(len(a)):
        s += 2 * a[i] * b[i]
    return s
