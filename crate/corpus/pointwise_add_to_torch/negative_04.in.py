def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def add(a, b):
    c = [0] * len(b)
    for i in range(len(a)):
        c[i] = a[i] + b[i]
    return c
