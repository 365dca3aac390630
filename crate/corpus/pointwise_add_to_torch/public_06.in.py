def pick_larger(a, b):
    if a >= b:
        return a
    return b

def combine(a, b, mode):
    if mode == 'sum':
        c = [0] * len(a)
        for i in range(len(a)):
            c[i] = a[i] + b[i]
        return c
    return a
