def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def squared_norm(v):
    s = 0
    for i in range(len(v)):
        s += v[i] * v[i]
    return s
