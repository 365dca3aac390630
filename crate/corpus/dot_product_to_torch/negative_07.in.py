def pick_larger(a, b):
    if a >= b:
        return a
    return b

def axpy(alpha, a, b):
    c = []
    for i in range(len(a)):
        c.append(alpha * a[i] + b[i])
    return c
