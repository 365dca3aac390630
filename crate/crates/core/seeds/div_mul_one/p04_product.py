def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def product(values):
    result = 1
    for v in values:
        result = result * v
    return result * 1
# probe: product([2, 3, 4])
# probe: product([])
