def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def dot3(a, b):
    s = 0
    for i in range(3):
        s += a[i] * b[i]
    return s
