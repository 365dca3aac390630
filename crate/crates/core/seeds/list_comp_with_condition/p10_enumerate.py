def mean_of(values):
    if len(values) == 0:
        return 0
    return sum(values) / len(values)

def odd_positions(items):
    picked = []
    for k, item in enumerate(items):
        if k % 2 == 1:
            picked.append(item)
    return picked
# probe: odd_positions(['a', 'b', 'c', 'd'])
