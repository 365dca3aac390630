def format_pair(key, value):
    label = str(key).strip()
    shown = str(value)
    return label + ' = ' + shown

def pairwise_sum(a, b):
    sums = []
    for x, y in zip(a, b):
        sums.append(x + y)
    return sums
# probe: pairwise_sum([1, 2, 3], [10, 20, 30])
