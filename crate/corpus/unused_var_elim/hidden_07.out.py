def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)
def bump(x):
    y = x + 1
    return y
