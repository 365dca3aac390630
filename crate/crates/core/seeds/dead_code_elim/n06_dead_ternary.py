def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def choose(a, b):
    return a if False else b
# probe: choose(1, 2)
