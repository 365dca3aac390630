def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def weighted(values, weights):
    total = 0
    for k in range(len(values)):
        if k < len(weights):
            if weights[k] != 0:
                total += values[k] * weights[k]
    return total
# probe: weighted([1, 2, 3], [2, 0, 4])
# probe: weighted([1, 2, 3], [1])
